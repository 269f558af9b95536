#pragma once

#include "qmeas/rng.hpp"
#include "qmeas/sampling.hpp"
#include "qmeas/states.hpp"

#include <vector>

namespace qmeas {

/// Point of the quantum phase space: a rank-1 projection, stored through a
/// representative unit vector with canonical phase (first nonvanishing
/// component real positive).
class RayPoint {
public:
    explicit RayPoint(Vec v);

    std::size_t dim() const { return vec_.size(); }
    const Vec& vector() const { return vec_; }
    Matrix projector() const { return outer(vec_, vec_); }
    Projection projection() const { return Projection(Effect(projector())); }

private:
    Vec vec_;
};

/// Unitarily invariant random ray (normalized complex Gaussian vector).
RayPoint sample_haar_ray(std::size_t dim, Rng& rng);

/// Finitely supported probability measure on ray space: weighted atoms,
/// weights nonnegative and summing to 1 within 1e-12.
class ClassicalMeasure {
public:
    struct Atom {
        RayPoint point;
        double weight;
    };

    explicit ClassicalMeasure(std::vector<Atom> atoms);

    const std::vector<Atom>& atoms() const { return atoms_; }
    std::size_t dim() const { return atoms_.front().point.dim(); }

private:
    std::vector<Atom> atoms_;
};

/// The affine reduction map: R(mu) = sum_i w_i P_i as a density operator.
State mb_reduce(const ClassicalMeasure& mu);

/// Classical effect function f_E(P) = tr[P E].
class ClassicalEffectFn {
public:
    explicit ClassicalEffectFn(Effect e) : effect_(std::move(e)) {}
    const Effect& effect() const { return effect_; }
    double operator()(const RayPoint& p) const;

private:
    Effect effect_;
};

double classical_effect_eval(const ClassicalEffectFn& f, const RayPoint& p);

struct MbConsistency {
    double mc_estimate; // Monte Carlo average of f_E over sampled atoms
    double exact;       // tr[R(mu) E]
    double std_error;   // sample standard error of the estimate
};

/// Checks tr[rho_mu E] = integral of f_E d(mu) by sampling atoms by weight.
MbConsistency mb_consistency_mc(const ClassicalMeasure& mu, const Effect& e,
                                std::size_t n_samples, Rng& rng);

struct RayGeometry {
    double overlap;           // tr[P P']
    double opnorm_dist;       // ||P - P'||_op
    double identity_residual; // | dist^2 - (1 - overlap) |
};

/// The ray-geometry identity ||P - P'||^2 = 1 - tr[P P'].
RayGeometry ray_overlap_geometry(const RayPoint& p, const RayPoint& q);

} // namespace qmeas
