#pragma once

#include "qmeas/observables.hpp"
#include "qmeas/states.hpp"

#include <array>
#include <vector>

namespace qmeas {

/// EPR-Bell configuration: bipartite state, two measurement directions per
/// side, and the sharpness factors of the smeared spin effects
/// (I +- eta a.sigma)/2.
struct ChshSetting {
    State rho;                      // dim 4 (qubit x qubit)
    std::array<BlochVector, 2> a;   // Alice directions
    std::array<BlochVector, 2> b;   // Bob directions
    double eta_a = 1.0;
    double eta_b = 1.0;
};

/// Singlet state (|01> - |10>)/sqrt(2) as a density operator.
State singlet_state();

/// Correlator C_ij = sum_{s,t = +-1} s t tr[rho (A_i^s (x) B_j^t)] built
/// from the smeared-spin POM effects.
double chsh_correlator(const ChshSetting& s, int i, int j);

/// S = |C00 + C01 + C10 - C11|.
double chsh_value(const ChshSetting& s);

struct ChshScanRow {
    double eta;
    double s_max;
};

/// For each eta: both-sided smearing eta_a = eta_b = eta on the singlet,
/// measurement directions optimized (coarse grid + coordinate refinement).
std::vector<ChshScanRow> chsh_unsharpness_scan(const std::vector<double>& etas);

/// Angles (radians, directions in the x-z plane) realizing S for the
/// optimized scan; exposed so tests can replay the optimum through the
/// full POM route.
struct ChshPlanarAngles {
    double a0, a1, b0, b1;
};
ChshPlanarAngles chsh_optimal_angles();

/// Planar direction (sin t, 0, cos t).
BlochVector planar_direction(double t);

} // namespace qmeas
