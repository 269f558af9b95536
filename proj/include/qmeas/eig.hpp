#pragma once

#include "qmeas/matrix.hpp"

#include <vector>

namespace qmeas {

/// Spectral data of a Hermitian operator: eigenvalues descending,
/// eigenvectors the matching orthonormal columns of `vectors`.
struct EigenSystem {
    std::vector<double> eigenvalues;
    Matrix vectors;

    Vec eigenvector(std::size_t k) const;

    /// sum_k f(lambda_k) |v_k><v_k|
    Matrix assemble(const std::vector<double>& mapped_eigenvalues) const;
    Matrix reconstruct() const { return assemble(eigenvalues); }
};

inline constexpr double kHermTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;

/// Eigendecomposition of a Hermitian matrix. dim <= 2 uses the closed-form
/// quadratic; larger dims Householder-tridiagonalize and run implicit-shift
/// QL. Throws NumericalError (with the measured deviation) if the input is
/// not Hermitian within herm_tol.
EigenSystem hermitian_eig(const Matrix& a, double herm_tol = kHermTol);

/// Principal square root of a PSD Hermitian matrix. Eigenvalues in
/// [-psd_tol, 0) are clamped to 0; anything below -psd_tol is rejected.
Matrix operator_sqrt(const Matrix& a, double psd_tol = kPsdTol);

/// Largest singular value.
double operator_norm(const Matrix& a);

/// Sum of singular values of (a - b).
double trace_norm_distance(const Matrix& a, const Matrix& b);

/// Eigenvalues only, descending (same solver, convenience wrapper).
std::vector<double> hermitian_eigenvalues(const Matrix& a,
                                          double herm_tol = kHermTol);

} // namespace qmeas
