#pragma once

#include "qmeas/eig.hpp"
#include "qmeas/matrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qmeas {

class Effect;

/// Density operator: Hermitian, PSD within tolerance, unit trace.
class State {
public:
    explicit State(Matrix rho);
    static State pure(const Vec& psi); // |psi><psi| (normalizes psi)

    const Matrix& op() const { return op_; }
    std::size_t dim() const { return op_.rows(); }

    /// 1 - lambda_max; ~0 for pure states
    double purity_deficit() const;

private:
    Matrix op_;
};

/// Effect operator: Hermitian with spectrum in [0, 1] within tolerance.
/// Eigenvalues inside [-1e-10, 0) or (1, 1+1e-10] are clamped onto [0, 1]
/// (the operator is respectrally rebuilt only when clamping is needed).
class Effect {
public:
    explicit Effect(Matrix e);
    static Effect identity(std::size_t dim);
    static Effect zero(std::size_t dim);

    const Matrix& op() const { return op_; }
    std::size_t dim() const { return op_.rows(); }

private:
    Matrix op_;
};

/// Idempotent effect (|| E^2 - E ||_max <= 1e-9).
class Projection {
public:
    explicit Projection(Effect e);
    explicit Projection(Matrix m) : Projection(Effect(std::move(m))) {}
    static Projection rank1(const Vec& v); // |v><v| (normalizes v)

    const Effect& effect() const { return effect_; }
    const Matrix& op() const { return effect_.op(); }
    std::size_t dim() const { return effect_.dim(); }

private:
    Effect effect_;
};

enum class PropertyVerdict { Actual, Absent, Indeterminate };

struct PropertyStatus {
    PropertyVerdict verdict;
    bool approximately_real;   // degree > 1/2 (strict; guard band 1e-12)
    bool approximately_absent; // degree < 1/2 (strict; guard band 1e-12)
    double degree;             // tr[rho E] clamped onto [0, 1]
};

const char* to_string(PropertyVerdict v);

/// tr[rho E], clamped onto [0, 1] (inputs within 1e-12 outside are tolerated).
double degree_of_reality(const State& s, const Effect& e);

/// True iff P rho = rho (= rho P), tested as ||P rho - rho||_max <= 1e-9.
bool is_eigenstate(const State& s, const Projection& p);

/// Threshold classification of the degree of reality. eps in [0, 1/2);
/// eps = 0 demands the exact extremes.
PropertyStatus classify_property(const State& s, const Effect& e, double eps);

/// Spectrum extends strictly above and strictly below 1/2.
bool is_regular(const Effect& e);

Effect complement(const Effect& e); // I - E

struct SharpnessReport {
    bool is_sharp;       // overlap_norm <= 1e-9
    double overlap_norm; // ||E - E^2||_op
};
SharpnessReport sharpness_report(const Effect& e);

/// Spectral form E = sum_k w_k Q_k with distinct weights and mutually
/// orthogonal projections (eigenvalues clustered within 1e-9), weights
/// descending.
std::vector<std::pair<double, Projection>>
spectral_decompose_effect(const Effect& e);

struct QubitDecomposition {
    double beta;       // in (0, 1)
    Projection rprime; // rank-1, E = beta R + (1-beta) R'
};

/// For a trace-1 qubit effect E with nondegenerate spectrum in (0,1) (or
/// E = I/2) and any rank-1 projection R, the unique beta and rank-1 R' with
/// E = beta R + (1-beta) R'. beta solves det(E - beta R) = 0 with E - beta R
/// PSD; for rank-1 R the determinant is linear in beta:
///   beta = det(E) / (1 - tr[E R]).
QubitDecomposition qubit_nonorthogonal_decomposition(const Effect& e,
                                                     const Projection& r);

} // namespace qmeas
