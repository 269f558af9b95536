#include "qmeas/classical.hpp"

#include "qmeas/errors.hpp"

#include <cmath>
#include <sstream>

namespace qmeas {

RayPoint::RayPoint(Vec v) : vec_(std::move(v)) {
    if (vec_.empty()) throw ValidationError("RayPoint: empty vector");
    normalize(vec_);
    for (auto& c : vec_) { // canonical global phase
        const double a = std::abs(c);
        if (a > 1e-12) {
            const cplx phase = std::conj(c) / a;
            for (auto& x : vec_) x *= phase;
            break;
        }
    }
}

RayPoint sample_haar_ray(std::size_t dim, Rng& rng) {
    if (dim < 2) throw ValidationError("sample_haar_ray: dim must be >= 2");
    return RayPoint(haar_vector(dim, rng));
}

ClassicalMeasure::ClassicalMeasure(std::vector<Atom> atoms)
    : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw ValidationError("ClassicalMeasure: no atoms");
    const std::size_t d = atoms_.front().point.dim();
    double total = 0.0;
    for (const auto& a : atoms_) {
        if (a.point.dim() != d)
            throw ValidationError("ClassicalMeasure: mixed dimensions");
        if (a.weight < -1e-15)
            throw ValidationError("ClassicalMeasure: negative weight");
        total += a.weight;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        std::ostringstream os;
        os << "ClassicalMeasure: weights sum to " << total;
        throw ValidationError(os.str());
    }
}

State mb_reduce(const ClassicalMeasure& mu) {
    const std::size_t d = mu.dim();
    Matrix rho(d, d);
    for (const auto& a : mu.atoms())
        rho.add_outer(cplx(a.weight, 0.0), a.point.vector(), a.point.vector());
    rho.hermitize();
    return State(std::move(rho));
}

double ClassicalEffectFn::operator()(const RayPoint& p) const {
    if (p.dim() != effect_.dim())
        throw ValidationError("ClassicalEffectFn: dimension mismatch");
    // tr[P E] = <v|E|v>
    const double val = dot(p.vector(), effect_.op().apply(p.vector())).real();
    return std::min(1.0, std::max(0.0, val));
}

double classical_effect_eval(const ClassicalEffectFn& f, const RayPoint& p) {
    return f(p);
}

MbConsistency mb_consistency_mc(const ClassicalMeasure& mu, const Effect& e,
                                std::size_t n_samples, Rng& rng) {
    if (n_samples == 0)
        throw ValidationError("mb_consistency_mc: need n_samples >= 1");
    ClassicalEffectFn f{e};
    std::vector<double> fvals;
    std::vector<double> cumw;
    fvals.reserve(mu.atoms().size());
    double cum = 0.0;
    for (const auto& a : mu.atoms()) {
        fvals.push_back(f(a.point));
        cum += a.weight;
        cumw.push_back(cum);
    }
    double sum = 0.0, sumsq = 0.0;
    for (std::size_t i = 0; i < n_samples; ++i) {
        const double u = rng.uniform() * cum;
        std::size_t k = 0;
        while (k + 1 < cumw.size() && u >= cumw[k]) ++k;
        sum += fvals[k];
        sumsq += fvals[k] * fvals[k];
    }
    const double n = static_cast<double>(n_samples);
    const double mean = sum / n;
    const double var = std::max(0.0, sumsq / n - mean * mean);
    const double se = (n_samples > 1) ? std::sqrt(var / (n - 1.0)) : 0.0;
    const double exact =
        trace_product_hermitian(mb_reduce(mu).op(), e.op()).real();
    return {mean, exact, se};
}

RayGeometry ray_overlap_geometry(const RayPoint& p, const RayPoint& q) {
    if (p.dim() != q.dim())
        throw ValidationError("ray_overlap_geometry: dimension mismatch");
    const double overlap = std::norm(dot(p.vector(), q.vector()));
    const Matrix d = p.projector() - q.projector();
    const double dist = operator_norm(d);
    const double residual = std::abs(dist * dist - (1.0 - overlap));
    return {overlap, dist, residual};
}

} // namespace qmeas
