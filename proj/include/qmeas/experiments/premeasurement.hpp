#pragma once

#include "qmeas/matrix.hpp"
#include "qmeas/states.hpp"

#include <array>
#include <vector>

namespace qmeas {

struct PremeasurementResult {
    State post;                            // bipartite object (x) pointer
    std::array<double, 2> pointer_probs;   // pointer reads A / B
    std::vector<double> schmidt_coefficients; // descending
    int schmidt_rank;                      // coefficients above 1e-9
};

/// Unitary premeasurement of a pure qubit state against a sharp basis
/// (columns of `basis`): U (phi_i (x) |0>) = phi_i (x) |i> applied to
/// rho (x) |0><0|. Pointer probabilities equal the squared amplitudes of
/// the object state in the measured basis; the post state is entangled
/// (Schmidt rank 2) exactly when the input is a nontrivial superposition.
PremeasurementResult premeasurement_demo(const State& object_state,
                                         const Matrix& basis);

/// Convenience: computational-basis coupling.
PremeasurementResult premeasurement_demo(const State& object_state);

} // namespace qmeas
