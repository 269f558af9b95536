#pragma once

#include "qmeas/matrix.hpp"
#include "qmeas/rng.hpp"
#include "qmeas/states.hpp"

namespace qmeas {

/// Unit vector with unitarily invariant distribution (normalized complex
/// Gaussian components).
Vec haar_vector(std::size_t dim, Rng& rng);

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the
/// R-diagonal phases folded in.
Matrix random_unitary(std::size_t dim, Rng& rng);

/// GUE-style random Hermitian matrix, entries O(1).
Matrix random_hermitian(std::size_t dim, Rng& rng);

/// Random effect: uniform [0,1] eigenvalues over a Haar random basis.
Effect random_effect(std::size_t dim, Rng& rng);

/// Random density operator: uniform simplex weights over a Haar basis.
State random_state(std::size_t dim, Rng& rng);

/// Random pure state.
State random_pure_state(std::size_t dim, Rng& rng);

} // namespace qmeas
