#pragma once

#include "qmeas/states.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qmeas {

/// Finite-outcome positive operator measure. Effects sum to the identity
/// within 1e-9 (checked at construction).
class DiscretePOM {
public:
    DiscretePOM(std::vector<std::string> outcomes, std::vector<Effect> effects);

    std::size_t size() const { return effects_.size(); }
    std::size_t dim() const { return effects_.front().dim(); }
    const std::vector<std::string>& outcomes() const { return outcomes_; }
    const std::vector<Effect>& effects() const { return effects_; }
    const Effect& effect(std::size_t i) const { return effects_[i]; }
    const std::string& outcome(std::size_t i) const { return outcomes_[i]; }
    std::size_t index_of(const std::string& outcome) const;

    /// Projection-valued measure from an orthonormal basis (columns of u).
    static DiscretePOM sharp_from_basis(const Matrix& u,
                                        std::vector<std::string> outcomes);

    bool is_sharp(double tol = 1e-9) const;

private:
    std::vector<std::string> outcomes_;
    std::vector<Effect> effects_;
};

/// Column-stochastic matrix of conditional outcome probabilities
/// (n_out x n_in, columns sum to 1 within 1e-12).
class SmearingMatrix {
public:
    SmearingMatrix(std::size_t n_out, std::size_t n_in,
                   std::vector<double> entries); // row-major
    static SmearingMatrix identity(std::size_t n);

    std::size_t n_out() const { return n_out_; }
    std::size_t n_in() const { return n_in_; }
    double operator()(std::size_t i, std::size_t j) const {
        return entries_[i * n_in_ + j];
    }

private:
    std::size_t n_out_, n_in_;
    std::vector<double> entries_;
};

/// E_i = sum_j M_ij P_j. Input must be projection valued.
DiscretePOM smear_discrete(const DiscretePOM& sharp, const SmearingMatrix& m);

/// Uniformly spaced grid x_k = x0 + k*dx with one spectral projection
/// |k><k| per grid point (complete, mutually orthogonal).
class GridPositionMeasure {
public:
    GridPositionMeasure(double x0, double dx, std::size_t n);

    std::size_t size() const { return n_; }
    std::size_t dim() const { return n_; }
    double point(std::size_t k) const { return x0_ + dx_ * static_cast<double>(k); }
    double spacing() const { return dx_; }
    Projection projection(std::size_t k) const;

private:
    double x0_, dx_;
    std::size_t n_;
};

/// Finite convolution kernel on grid offsets: weights[i] belongs to offset
/// first_offset + i; nonnegative, summing to 1.
struct SmearingKernel {
    int first_offset;
    std::vector<double> weights;

    static SmearingKernel point_mass() { return {0, {1.0}}; }
};

/// Contiguous grid-index window [lo, hi] (inclusive). Indices may extend
/// beyond the grid; the convolution is zero-padded outside.
struct GridBin {
    int lo;
    int hi;
};

/// Smeared position effect: diagonal with entry (chi_X * e)(x_k) at grid
/// point k, the discrete convolution of the bin indicator with the kernel.
Effect smear_position(const GridPositionMeasure& qm, const SmearingKernel& e,
                      const GridBin& bin);

/// Split a POM over composite labels "a,b" into its two marginals.
/// The labels must form a complete product grid.
std::pair<DiscretePOM, DiscretePOM> marginals(const DiscretePOM& joint);

/// Three-component Bloch vector, |a| <= 1.
struct BlochVector {
    double x = 0.0, y = 0.0, z = 0.0;

    double norm() const;
    BlochVector operator+(const BlochVector& o) const {
        return {x + o.x, y + o.y, z + o.z};
    }
    BlochVector operator-(const BlochVector& o) const {
        return {x - o.x, y - o.y, z - o.z};
    }
    BlochVector scaled(double s) const { return {s * x, s * y, s * z}; }
};

extern const Matrix kPauliX;
extern const Matrix kPauliY;
extern const Matrix kPauliZ;

/// (v . sigma) as a 2x2 Hermitian matrix.
Matrix bloch_dot_sigma(const BlochVector& v);

/// Unbiased qubit effect (I + a.sigma)/2.
Effect unbiased_qubit_effect(const BlochVector& a);

/// Two-outcome unbiased observable {(I + a.sigma)/2, (I - a.sigma)/2}.
DiscretePOM unbiased_qubit_pom(const BlochVector& a);

struct JointQubitResult {
    bool feasible;
    double criterion;              // |a+b| + |a-b| (feasible iff <= 2)
    double gamma;                  // (|a+b| - |a-b|)/2 when feasible
    std::optional<DiscretePOM> pom; // outcomes "+,+", "+,-", "-,+", "-,-"
};

/// Joint POM with the two unbiased observables as exact marginals:
///   G_jk = [(1 + jk*gamma) I + (j a + k b).sigma]/4.
/// Feasible iff |a+b| + |a-b| <= 2; otherwise returns the criterion value.
JointQubitResult construct_joint_qubit(const BlochVector& a,
                                       const BlochVector& b);

} // namespace qmeas
