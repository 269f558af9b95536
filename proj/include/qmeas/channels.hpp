#pragma once

#include "qmeas/observables.hpp"
#include "qmeas/rng.hpp"
#include "qmeas/states.hpp"

#include <string>

namespace qmeas {

/// Probability threshold below which a measurement branch is treated as
/// impossible rather than renormalized.
inline constexpr double kBranchProbFloor = 1e-14;

struct MeasurementOutcomeRecord {
    std::string outcome;
    double probability;
    State post_state;
    double pre_post_trace_distance;
};

/// Sharp update rho -> P rho P / tr[rho P]. Throws ZeroProbabilityError
/// when tr[rho P] <= 1e-14.
MeasurementOutcomeRecord luders_sharp(const State& s, const Projection& p);

/// Generalized update rho -> E^{1/2} rho E^{1/2} / tr[rho E].
MeasurementOutcomeRecord luders_general(const State& s, const Effect& e);

struct EprRobustnessProbe {
    double p_before;       // tr[rho E]
    double p_after;        // effect probability in the updated state
    double trace_distance; // trace-norm distance pre/post
    double epsilon;        // 1 - p_before
};

/// Stability of near-actual effects under the generalized update.
EprRobustnessProbe epr_robustness_probe(const State& s, const Effect& e);

/// Sample one outcome by cumulative-inverse sampling of the Born
/// probabilities, then update with the generalized operation.
MeasurementOutcomeRecord measure_and_update(const State& s,
                                            const DiscretePOM& pom, Rng& rng);

/// Probability of obtaining `outcome` again immediately after it occurred.
double repeatability_score(const State& s, const DiscretePOM& pom,
                           const std::string& outcome);

struct EprSweepRow {
    double eps;              // target 1 - p_before of the row
    int trials;
    double max_ratio;        // max trace_distance / sqrt(epsilon)
    double mean_ratio;
    double min_after_margin; // min of p_after - (1 - epsilon)
};

/// Randomized robustness sweep: for each eps, `trials_per_eps` random
/// near-eigenstate pairs (pure and mixed) with p_before = 1 - eps, probed
/// with the generalized Luders update. Trials are split over `shards`
/// with shard_seed = seed XOR shard_index, so results depend on the shard
/// count but not on `workers` (the parallel execution width).
std::vector<EprSweepRow> epr_robustness_sweep(std::size_t dim,
                                              const std::vector<double>& eps_grid,
                                              int trials_per_eps,
                                              std::uint64_t seed,
                                              int shards = 1, int workers = 1);

} // namespace qmeas
