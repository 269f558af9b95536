#include "qmeas/experiments/phase_space.hpp"

#include "qmeas/channels.hpp"
#include "qmeas/eig.hpp"
#include "qmeas/errors.hpp"

#include <cmath>
#include <sstream>

namespace qmeas {

namespace {
constexpr double kTau = 6.283185307179586476925286766559;
constexpr double kInvSqrt2 = 0.7071067811865475244;
} // namespace

FockSpace::FockSpace(std::size_t n_levels) : n_(n_levels), a_(n_levels, n_levels) {
    if (n_ < 2) throw ValidationError("FockSpace: need at least 2 levels");
    for (std::size_t n = 1; n < n_; ++n)
        a_(n - 1, n) = std::sqrt(static_cast<double>(n));
}

Matrix FockSpace::position() const {
    Matrix q = a_ + a_.dagger();
    q *= cplx(kInvSqrt2, 0.0);
    return q;
}

Matrix FockSpace::momentum() const {
    Matrix p = a_ - a_.dagger();
    p *= cplx(0.0, -kInvSqrt2); // (a - a^dag)/(i sqrt 2)
    return p;
}

Vec FockSpace::coherent_truncated(cplx alpha) const {
    Vec c(n_);
    c[0] = std::exp(-0.5 * std::norm(alpha));
    for (std::size_t n = 1; n < n_; ++n)
        c[n] = c[n - 1] * alpha / std::sqrt(static_cast<double>(n));
    return c;
}

Vec FockSpace::coherent_normalized(cplx alpha) const {
    Vec c = coherent_truncated(alpha);
    normalize(c);
    return c;
}

double FockSpace::truncation_deficit(cplx alpha) const {
    return std::max(0.0, 1.0 - norm2(coherent_truncated(alpha)));
}

HusimiPom::HusimiPom(FockSpace fock, PhaseSpaceGrid grid)
    : fock_(std::move(fock)), grid_(grid) {
    if (grid_.n_side == 0 || !(grid_.extent > 0.0))
        throw ValidationError("HusimiPom: invalid grid");
    const std::size_t dim = fock_.levels();
    const std::size_t nc = n_cells();
    const double w = cell_weight();

    coherent_.reserve(nc);
    Matrix sum(dim, dim);
    std::vector<Effect> effects;
    std::vector<std::string> labels;
    effects.reserve(nc + 1);
    labels.reserve(nc + 1);
    for (std::size_t c = 0; c < nc; ++c) {
        const auto [q, p] = cell_center(c);
        const cplx alpha(kInvSqrt2 * q, kInvSqrt2 * p);
        Vec coh = fock_.coherent_truncated(alpha);
        Matrix eff(dim, dim);
        eff.add_outer(cplx(w, 0.0), coh, coh);
        eff.hermitize();
        sum += eff;
        const std::size_t iq = c / grid_.n_side, ip = c % grid_.n_side;
        labels.push_back(std::to_string(iq) + "," + std::to_string(ip));
        effects.emplace_back(std::move(eff));
        coherent_.push_back(std::move(coh));
    }

    Matrix remainder = Matrix::identity(dim);
    remainder -= sum;
    remainder.hermitize();
    const auto rem_evs = hermitian_eigenvalues(remainder);
    if (rem_evs.back() < -kPsdTol) {
        std::ostringstream os;
        os << "HusimiPom: remainder effect not PSD (min eigenvalue "
           << rem_evs.back() << "); grid too coarse or too small";
        throw NumericalError(os.str());
    }
    remainder_norm_ = std::max(std::abs(rem_evs.front()),
                               std::abs(rem_evs.back()));
    labels.push_back("overflow");
    effects.emplace_back(std::move(remainder));
    pom_.emplace(std::move(labels), std::move(effects));
}

std::pair<double, double> HusimiPom::cell_center(std::size_t cell) const {
    const std::size_t iq = cell / grid_.n_side, ip = cell % grid_.n_side;
    const double d = grid_.cell_width();
    return {-grid_.extent + (static_cast<double>(iq) + 0.5) * d,
            -grid_.extent + (static_cast<double>(ip) + 0.5) * d};
}

double HusimiPom::cell_weight() const {
    const double d = grid_.cell_width();
    return d * d / kTau;
}

std::vector<double> HusimiPom::probabilities(const Vec& psi) const {
    const double w = cell_weight();
    std::vector<double> probs(n_cells() + 1, 0.0);
    double total = 0.0;
    for (std::size_t c = 0; c < n_cells(); ++c) {
        const double pr = w * std::norm(dot(coherent_[c], psi));
        probs[c] = pr;
        total += pr;
    }
    probs[n_cells()] = std::max(0.0, 1.0 - total);
    return probs;
}

std::vector<double> HusimiPom::probabilities(const State& rho) const {
    const double w = cell_weight();
    std::vector<double> probs(n_cells() + 1, 0.0);
    double total = 0.0;
    for (std::size_t c = 0; c < n_cells(); ++c) {
        const Vec y = rho.op().apply(coherent_[c]);
        const double pr = w * dot(coherent_[c], y).real();
        probs[c] = std::max(0.0, pr);
        total += probs[c];
    }
    probs[n_cells()] = std::max(0.0, 1.0 - total);
    return probs;
}

DiscretePOM HusimiPom::marginal_q_pom() const {
    const std::size_t dim = fock_.levels();
    std::vector<Effect> effects;
    std::vector<std::string> labels;
    for (std::size_t iq = 0; iq < grid_.n_side; ++iq) {
        Matrix acc(dim, dim);
        for (std::size_t ip = 0; ip < grid_.n_side; ++ip)
            acc += pom().effect(iq * grid_.n_side + ip).op();
        labels.push_back("q" + std::to_string(iq));
        effects.emplace_back(std::move(acc));
    }
    labels.push_back("overflow");
    effects.push_back(pom().effect(overflow_index()));
    return DiscretePOM(std::move(labels), std::move(effects));
}

TrackRecord track_simulate(const HusimiPom& pom, const TrackParams& params) {
    if (params.n_steps < 1)
        throw ValidationError("track_simulate: need n_steps >= 1");
    if (!(params.dt > 0.0))
        throw ValidationError("track_simulate: dt must be positive");
    const FockSpace& fock = pom.fock();
    Rng rng(params.seed);

    Vec psi = fock.coherent_normalized(params.alpha0);
    TrackRecord rec;
    rec.steps.reserve(params.n_steps);
    double t = 0.0;
    for (int step = 1; step <= params.n_steps; ++step) {
        const std::vector<double> probs = pom.probabilities(psi);
        const double u = rng.uniform();
        double cum = 0.0;
        std::size_t pick = pom.overflow_index();
        for (std::size_t c = 0; c < probs.size(); ++c) {
            cum += probs[c];
            if (u < cum) {
                pick = c;
                break;
            }
        }
        if (pick == pom.overflow_index()) {
            rec.halted_early = true;
            break;
        }

        const auto [q, p] = pom.cell_center(pick);
        const cplx alpha(kInvSqrt2 * q, kInvSqrt2 * p);
        const double deficit = fock.truncation_deficit(alpha);
        if (params.rule == CollapseRule::CoherentCollapse) {
            psi = fock.coherent_normalized(alpha);
        } else {
            // generalized Luders update with the cell effect; for these
            // rank-1 cells it lands on the same coherent state
            const Matrix root = operator_sqrt(pom.pom().effect(pick).op());
            psi = root.apply(psi);
            normalize(psi);
        }
        rec.steps.push_back({step, t, q, p, deficit});

        if (params.dynamics == TrackDynamics::Harmonic) {
            for (std::size_t n = 0; n < psi.size(); ++n) {
                const double phase =
                    -params.omega * params.dt * static_cast<double>(n);
                psi[n] *= cplx(std::cos(phase), std::sin(phase));
            }
        }
        t += params.dt;
    }
    return rec;
}

} // namespace qmeas
