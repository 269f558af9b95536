#include "qmeas/channels.hpp"

#include "qmeas/errors.hpp"
#include "qmeas/sampling.hpp"

#include <cmath>
#include <future>
#include <sstream>

namespace qmeas {

namespace {

void check_dims(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        std::ostringstream os;
        os << what << ": dimension mismatch (" << a << " vs " << b << ")";
        throw ValidationError(os.str());
    }
}

MeasurementOutcomeRecord apply_root_update(const State& s, const Matrix& root,
                                           double prob, std::string outcome) {
    Matrix post = root * s.op() * root;
    // normalize by the trace actually materialized (equals prob to rounding)
    const double tm = post.trace().real();
    if (tm <= kBranchProbFloor)
        throw ZeroProbabilityError("measurement branch trace vanished");
    post *= cplx(1.0 / tm, 0.0);
    post.hermitize();
    State ps(std::move(post));
    const double dist = trace_norm_distance(s.op(), ps.op());
    return {std::move(outcome), prob, std::move(ps), dist};
}

} // namespace

MeasurementOutcomeRecord luders_sharp(const State& s, const Projection& p) {
    check_dims(s.dim(), p.dim(), "luders_sharp");
    const double prob =
        trace_product_hermitian(s.op(), p.op()).real();
    if (prob <= kBranchProbFloor) {
        std::ostringstream os;
        os << "luders_sharp: outcome probability " << prob
           << " below threshold";
        throw ZeroProbabilityError(os.str());
    }
    // sqrt(P) = P for a projection
    return apply_root_update(s, p.op(), std::min(prob, 1.0), "sharp");
}

MeasurementOutcomeRecord luders_general(const State& s, const Effect& e) {
    check_dims(s.dim(), e.dim(), "luders_general");
    const double prob = trace_product_hermitian(s.op(), e.op()).real();
    if (prob <= kBranchProbFloor) {
        std::ostringstream os;
        os << "luders_general: outcome probability " << prob
           << " below threshold";
        throw ZeroProbabilityError(os.str());
    }
    return apply_root_update(s, operator_sqrt(e.op()), std::min(prob, 1.0),
                             "general");
}

EprRobustnessProbe epr_robustness_probe(const State& s, const Effect& e) {
    MeasurementOutcomeRecord rec = luders_general(s, e);
    const double p_after = degree_of_reality(rec.post_state, e);
    return {rec.probability, p_after, rec.pre_post_trace_distance,
            1.0 - rec.probability};
}

MeasurementOutcomeRecord measure_and_update(const State& s,
                                            const DiscretePOM& pom, Rng& rng) {
    check_dims(s.dim(), pom.dim(), "measure_and_update");
    std::vector<double> probs(pom.size());
    for (std::size_t i = 0; i < pom.size(); ++i)
        probs[i] = degree_of_reality(s, pom.effect(i));

    const double u = rng.uniform();
    double cum = 0.0;
    std::size_t pick = pom.size();
    for (std::size_t i = 0; i < pom.size(); ++i) {
        if (probs[i] <= kBranchProbFloor) continue; // unreachable branch
        cum += probs[i];
        if (u < cum) {
            pick = i;
            break;
        }
    }
    if (pick == pom.size()) { // u landed in the rounding slack at the top
        for (std::size_t i = pom.size(); i-- > 0;)
            if (probs[i] > kBranchProbFloor) {
                pick = i;
                break;
            }
    }
    if (pick == pom.size())
        throw NumericalError("measure_and_update: no outcome has positive "
                             "probability");
    MeasurementOutcomeRecord rec = luders_general(s, pom.effect(pick));
    rec.outcome = pom.outcome(pick);
    rec.probability = probs[pick];
    return rec;
}

double repeatability_score(const State& s, const DiscretePOM& pom,
                           const std::string& outcome) {
    const std::size_t i = pom.index_of(outcome);
    MeasurementOutcomeRecord rec = luders_general(s, pom.effect(i));
    return degree_of_reality(rec.post_state, pom.effect(i));
}

namespace {

struct ShardStats {
    double max_ratio = 0.0;
    double ratio_sum = 0.0;
    double min_margin = 1e300;
    int trials = 0;
};

// one near-eigenstate trial: effect with a known top eigenvalue, state
// mixed in the effect eigenbasis so that p_before = 1 - eps exactly
ShardStats epr_shard(std::size_t dim, double eps, int trials,
                     std::uint64_t shard_seed) {
    Rng rng(shard_seed);
    ShardStats st;
    for (int trial = 0; trial < trials; ++trial) {
        const Matrix u = random_unitary(dim, rng);
        std::vector<double> lam(dim);
        lam[0] = 1.0 - 0.5 * eps * rng.uniform();
        for (std::size_t k = 1; k < dim; ++k)
            lam[k] = rng.uniform() * 0.95 * (1.0 - eps);
        Matrix em(dim, dim);
        std::vector<Vec> cols(dim, Vec(dim));
        for (std::size_t k = 0; k < dim; ++k) {
            for (std::size_t i = 0; i < dim; ++i) cols[k][i] = u(i, k);
            em.add_outer(cplx(lam[k], 0.0), cols[k], cols[k]);
        }
        em.hermitize();
        const Effect e(std::move(em));

        const double t = (lam[0] - (1.0 - eps)) / (lam[0] - lam[1]);
        Vec psi(dim);
        for (std::size_t i = 0; i < dim; ++i)
            psi[i] = std::sqrt(1.0 - t) * cols[0][i] + std::sqrt(t) * cols[1][i];
        State s = State::pure(psi);
        if (trial % 2 == 1) { // mixed variant, stays in the regime by convexity
            Matrix m = outer(psi, psi) * 0.7;
            m.add_outer(cplx(0.3, 0.0), cols[0], cols[0]);
            m.hermitize();
            s = State(std::move(m));
        }

        const auto probe = epr_robustness_probe(s, e);
        st.min_margin =
            std::min(st.min_margin, probe.p_after - (1.0 - probe.epsilon));
        if (probe.epsilon > 0.0) {
            const double ratio =
                probe.trace_distance / std::sqrt(probe.epsilon);
            st.max_ratio = std::max(st.max_ratio, ratio);
            st.ratio_sum += ratio;
            ++st.trials;
        }
    }
    return st;
}

} // namespace

std::vector<EprSweepRow> epr_robustness_sweep(std::size_t dim,
                                              const std::vector<double>& eps_grid,
                                              int trials_per_eps,
                                              std::uint64_t seed, int shards,
                                              int workers) {
    if (dim < 2) throw ValidationError("epr_robustness_sweep: dim must be >= 2");
    if (trials_per_eps < 1 || shards < 1 || workers < 1)
        throw ValidationError("epr_robustness_sweep: counts must be positive");
    for (double eps : eps_grid)
        if (!(eps > 0.0 && eps <= 0.5))
            throw ValidationError("epr_robustness_sweep: eps outside (0, 0.5]");

    std::vector<EprSweepRow> rows;
    rows.reserve(eps_grid.size());
    for (std::size_t row_idx = 0; row_idx < eps_grid.size(); ++row_idx) {
        const double eps = eps_grid[row_idx];
        std::vector<ShardStats> stats(shards);
        std::vector<std::future<ShardStats>> jobs;
        for (int sh = 0; sh < shards; ++sh) {
            const int base = trials_per_eps / shards;
            const int extra = (sh < trials_per_eps % shards) ? 1 : 0;
            const std::uint64_t shard_seed = Rng::shard_seed(
                seed + 0x9e3779b97f4a7c15ULL * row_idx,
                static_cast<std::uint64_t>(sh));
            if (workers > 1)
                jobs.push_back(std::async(std::launch::async, epr_shard, dim,
                                          eps, base + extra, shard_seed));
            else
                stats[sh] = epr_shard(dim, eps, base + extra, shard_seed);
        }
        for (std::size_t j = 0; j < jobs.size(); ++j) stats[j] = jobs[j].get();

        EprSweepRow row{eps, 0, 0.0, 0.0, 1e300};
        double ratio_sum = 0.0;
        int ratio_trials = 0;
        for (const auto& st : stats) {
            row.max_ratio = std::max(row.max_ratio, st.max_ratio);
            row.min_after_margin = std::min(row.min_after_margin, st.min_margin);
            ratio_sum += st.ratio_sum;
            ratio_trials += st.trials;
        }
        row.trials = trials_per_eps;
        row.mean_ratio = ratio_trials ? ratio_sum / ratio_trials : 0.0;
        rows.push_back(row);
    }
    return rows;
}

} // namespace qmeas
