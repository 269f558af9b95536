#include "qmeas/experiments/chsh.hpp"

#include "qmeas/errors.hpp"

#include <cmath>

namespace qmeas {

State singlet_state() {
    Vec psi(4, cplx(0.0, 0.0));
    const double inv_sqrt2 = 0.7071067811865475244;
    psi[1] = inv_sqrt2;  // |01>
    psi[2] = -inv_sqrt2; // |10>
    return State::pure(psi);
}

double chsh_correlator(const ChshSetting& s, int i, int j) {
    if (s.rho.dim() != 4)
        throw ValidationError("chsh_correlator: state must be dim 4");
    const Effect ap = unbiased_qubit_effect(s.a[i].scaled(s.eta_a));
    const Effect am = unbiased_qubit_effect(s.a[i].scaled(-s.eta_a));
    const Effect bp = unbiased_qubit_effect(s.b[j].scaled(s.eta_b));
    const Effect bm = unbiased_qubit_effect(s.b[j].scaled(-s.eta_b));
    double c = 0.0;
    const std::array<std::pair<int, const Effect*>, 2> as{
        {{+1, &ap}, {-1, &am}}};
    const std::array<std::pair<int, const Effect*>, 2> bs{
        {{+1, &bp}, {-1, &bm}}};
    for (const auto& [sa, ea] : as)
        for (const auto& [sb, eb] : bs) {
            const Matrix joint = kron(ea->op(), eb->op());
            c += sa * sb * trace_product_hermitian(s.rho.op(), joint).real();
        }
    return c;
}

double chsh_value(const ChshSetting& s) {
    const double c00 = chsh_correlator(s, 0, 0);
    const double c01 = chsh_correlator(s, 0, 1);
    const double c10 = chsh_correlator(s, 1, 0);
    const double c11 = chsh_correlator(s, 1, 1);
    return std::abs(c00 + c01 + c10 - c11);
}

BlochVector planar_direction(double t) {
    return {std::sin(t), 0.0, std::cos(t)};
}

namespace {

struct Angles {
    double v[4];
};

double pom_route_s(const State& rho, const Angles& an, double eta) {
    const ChshSetting s{rho,
                        {planar_direction(an.v[0]), planar_direction(an.v[1])},
                        {planar_direction(an.v[2]), planar_direction(an.v[3])},
                        eta,
                        eta};
    return chsh_value(s);
}

// Coarse planar-angle grid followed by coordinate hill climbing with step
// halving; the objective is always the full POM route.
double optimize_angles(const State& rho, double eta, Angles& best) {
    constexpr double tau = 6.283185307179586476925286766559;
    const int n = 24;
    double s_best = -1.0;
    // common rotation of all four directions leaves S unchanged: pin a0 = 0
    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2)
            for (int i3 = 0; i3 < n; ++i3) {
                const Angles c{
                    {0.0, tau * i1 / n, tau * i2 / n, tau * i3 / n}};
                const double s = pom_route_s(rho, c, eta);
                if (s > s_best) {
                    s_best = s;
                    best = c;
                }
            }
    for (double step = tau / n; step > 1e-9; step *= 0.5) {
        bool improved = true;
        while (improved) {
            improved = false;
            for (int k = 0; k < 4; ++k)
                for (double delta : {-step, step}) {
                    Angles cand = best;
                    cand.v[k] += delta;
                    const double s = pom_route_s(rho, cand, eta);
                    if (s > s_best) {
                        s_best = s;
                        best = cand;
                        improved = true;
                    }
                }
        }
    }
    return s_best;
}

} // namespace

ChshPlanarAngles chsh_optimal_angles() {
    static const ChshPlanarAngles cached = [] {
        Angles best{{0, 0, 0, 0}};
        optimize_angles(singlet_state(), 1.0, best);
        return ChshPlanarAngles{best.v[0], best.v[1], best.v[2], best.v[3]};
    }();
    return cached;
}

std::vector<ChshScanRow> chsh_unsharpness_scan(const std::vector<double>& etas) {
    const State rho = singlet_state();
    std::vector<ChshScanRow> rows;
    rows.reserve(etas.size());
    for (double eta : etas) {
        if (eta < 0.0 || eta > 1.0)
            throw ValidationError("chsh_unsharpness_scan: eta outside [0,1]");
        Angles best{{0, 0, 0, 0}};
        rows.push_back({eta, optimize_angles(rho, eta, best)});
    }
    return rows;
}

} // namespace qmeas
