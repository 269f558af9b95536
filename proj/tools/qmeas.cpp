// qmeas: command-line harness for the measurement-theory laboratory.
// Every subcommand emits a JSON summary (stdout + <out-dir>/<command>.json)
// carrying {tool_version, command, parameters, seed}; tabular experiments
// also write <out-dir>/<command>.csv. Replays with identical parameters
// and seed reproduce the CSV byte-for-byte.
//
// Exit codes: 0 success, 1 validation/usage error, 2 numerical failure.

#include <CLI11.hpp>

#include "qmeas/channels.hpp"
#include "qmeas/classical.hpp"
#include "qmeas/errors.hpp"
#include "qmeas/experiments/chsh.hpp"
#include "qmeas/experiments/frequency.hpp"
#include "qmeas/experiments/phase_space.hpp"
#include "qmeas/experiments/premeasurement.hpp"
#include "qmeas/io.hpp"
#include "qmeas/observables.hpp"
#include "qmeas/sampling.hpp"
#include "qmeas/states.hpp"
#include "qmeas/version.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

using namespace qmeas;
using io::json;

namespace {

std::string g_out_dir;

std::string out_dir() {
    if (!g_out_dir.empty()) return g_out_dir;
    if (const char* env = std::getenv("QMEAS_OUT_DIR")) return env;
    return ".";
}

std::string out_path(const std::string& name) {
    std::filesystem::create_directories(out_dir());
    return (std::filesystem::path(out_dir()) / name).string();
}

json base_summary(const std::string& command, const json& params,
                  std::uint64_t seed) {
    return {{"tool_version", kToolVersion},
            {"command", command},
            {"parameters", params},
            {"seed", seed}};
}

void emit(const std::string& command, json summary) {
    io::write_json_file(out_path(command + ".json"), summary);
    std::cout << summary.dump(2) << "\n";
}

bool file_exists(const std::string& p) {
    std::error_code ec;
    return std::filesystem::exists(p, ec);
}

const double kInvSqrt2 = 0.7071067811865475244;

State parse_state(const std::string& spec) {
    if (file_exists(spec)) return io::state_from_json(io::load_json_file(spec));
    if (spec == "zero") return State::pure(Vec{1.0, 0.0});
    if (spec == "one") return State::pure(Vec{0.0, 1.0});
    if (spec == "plus") return State::pure(Vec{kInvSqrt2, kInvSqrt2});
    if (spec == "minus") return State::pure(Vec{kInvSqrt2, -kInvSqrt2});
    if (spec == "mixed") return State(Matrix::identity(2) * 0.5);
    throw ValidationError("unknown state '" + spec +
                          "' (not a file or preset zero|one|plus|minus|mixed)");
}

Effect parse_effect(const std::string& spec) {
    if (file_exists(spec)) return io::effect_from_json(io::load_json_file(spec));
    if (spec == "P0") return Projection::rank1(Vec{1.0, 0.0}).effect();
    if (spec == "P1") return Projection::rank1(Vec{0.0, 1.0}).effect();
    if (spec == "P+") return Projection::rank1(Vec{kInvSqrt2, kInvSqrt2}).effect();
    if (spec == "P-")
        return Projection::rank1(Vec{kInvSqrt2, -kInvSqrt2}).effect();
    if (spec == "I") return Effect::identity(2);
    if (spec == "halfI") return Effect(Matrix::identity(2) * 0.5);
    throw ValidationError("unknown effect '" + spec +
                          "' (not a file or preset P0|P1|P+|P-|I|halfI)");
}

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stod(item));
    if (out.empty()) throw ValidationError("empty numeric list '" + csv + "'");
    return out;
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    for (double v : parse_double_list(csv)) out.push_back(static_cast<int>(v));
    return out;
}

BlochVector parse_bloch(const std::string& csv) {
    const auto v = parse_double_list(csv);
    if (v.size() != 3)
        throw ValidationError("Bloch vector needs 3 components, got '" + csv +
                              "'");
    return {v[0], v[1], v[2]};
}

cplx parse_complex(const std::string& csv) {
    const auto v = parse_double_list(csv);
    if (v.size() == 1) return {v[0], 0.0};
    if (v.size() == 2) return {v[0], v[1]};
    throw ValidationError("complex value must be 're' or 're,im'");
}

// ------------------------------------------------------------ subcommands ---

void cmd_degree(const std::string& state_spec, const std::string& effect_spec,
                std::uint64_t seed) {
    const State s = parse_state(state_spec);
    const Effect e = parse_effect(effect_spec);
    json summary = base_summary(
        "degree", {{"state", state_spec}, {"effect", effect_spec}}, seed);
    summary["degree"] = degree_of_reality(s, e);
    summary["regular_effect"] = is_regular(e);
    emit("degree", summary);
}

void cmd_classify(const std::string& state_spec, const std::string& effect_spec,
                  double eps, std::uint64_t seed) {
    const State s = parse_state(state_spec);
    const Effect e = parse_effect(effect_spec);
    const PropertyStatus st = classify_property(s, e, eps);
    json summary = base_summary(
        "classify",
        {{"state", state_spec}, {"effect", effect_spec}, {"eps", eps}}, seed);
    summary["verdict"] = to_string(st.verdict);
    summary["degree"] = st.degree;
    summary["approximately_real"] = st.approximately_real;
    summary["approximately_absent"] = st.approximately_absent;
    emit("classify", summary);
}

void cmd_decompose(const std::string& effect_spec, const std::string& ray_spec,
                   std::uint64_t seed) {
    const Effect e = parse_effect(effect_spec);
    json summary = base_summary(
        "decompose", {{"effect", effect_spec}, {"ray", ray_spec}}, seed);
    if (ray_spec.empty()) {
        json terms = json::array();
        for (const auto& [w, q] : spectral_decompose_effect(e))
            terms.push_back({{"weight", w}, {"projection", io::to_json(q.op())}});
        summary["spectral_terms"] = std::move(terms);
    } else {
        const Projection r(parse_effect(ray_spec));
        const auto dec = qubit_nonorthogonal_decomposition(e, r);
        summary["beta"] = dec.beta;
        summary["rprime"] = io::to_json(dec.rprime.op());
    }
    emit("decompose", summary);
}

void cmd_smear(const std::string& pom_path, const std::string& matrix_path,
               std::uint64_t seed) {
    const DiscretePOM pom = io::pom_from_json(io::load_json_file(pom_path));
    const json mj = io::load_json_file(matrix_path);
    const SmearingMatrix m(mj.at("n_out").get<std::size_t>(),
                           mj.at("n_in").get<std::size_t>(),
                           mj.at("entries").get<std::vector<double>>());
    const DiscretePOM out = smear_discrete(pom, m);
    json summary = base_summary(
        "smear", {{"pom", pom_path}, {"matrix", matrix_path}}, seed);
    summary["pom"] = io::pom_to_json(out);
    io::write_json_file(out_path("smear_pom.json"), io::pom_to_json(out));
    emit("smear", summary);
}

void cmd_joint_qubit(const std::string& a_spec, const std::string& b_spec,
                     std::uint64_t seed) {
    const auto res =
        construct_joint_qubit(parse_bloch(a_spec), parse_bloch(b_spec));
    json summary =
        base_summary("joint-qubit", {{"a", a_spec}, {"b", b_spec}}, seed);
    summary["feasible"] = res.feasible;
    summary["criterion"] = res.criterion;
    if (res.feasible) {
        summary["gamma"] = res.gamma;
        summary["pom"] = io::pom_to_json(*res.pom);
    }
    emit("joint-qubit", summary);
}

void cmd_luders(const std::string& state_spec, const std::string& effect_spec,
                bool sharp, std::uint64_t seed) {
    const State s = parse_state(state_spec);
    const Effect e = parse_effect(effect_spec);
    const MeasurementOutcomeRecord rec =
        sharp ? luders_sharp(s, Projection(e)) : luders_general(s, e);
    json summary = base_summary("luders",
                                {{"state", state_spec},
                                 {"effect", effect_spec},
                                 {"sharp", sharp}},
                                seed);
    summary["probability"] = rec.probability;
    summary["trace_distance"] = rec.pre_post_trace_distance;
    summary["post_state"] = io::state_to_json(rec.post_state);
    emit("luders", summary);
}

void cmd_epr(std::size_t dim, const std::string& eps_csv, int trials,
             std::uint64_t seed, int shards, int workers) {
    const auto eps_grid = parse_double_list(eps_csv);
    const auto rows =
        epr_robustness_sweep(dim, eps_grid, trials, seed, shards, workers);
    io::CsvWriter csv(out_path("epr-robustness.csv"),
                      {"eps", "trials", "max_ratio", "mean_ratio",
                       "min_after_margin"});
    double overall = 0.0, worst_margin = 1e300;
    for (const auto& r : rows) {
        csv.row({r.eps, static_cast<double>(r.trials), r.max_ratio,
                 r.mean_ratio, r.min_after_margin});
        overall = std::max(overall, r.max_ratio);
        worst_margin = std::min(worst_margin, r.min_after_margin);
    }
    csv.close();
    json summary = base_summary("epr-robustness",
                                {{"dim", dim},
                                 {"eps_grid", eps_csv},
                                 {"trials", trials},
                                 {"shards", shards},
                                 {"workers", workers}},
                                seed);
    summary["max_distance_over_sqrt_eps"] = overall;
    summary["min_after_margin"] = worst_margin;
    summary["csv"] = out_path("epr-robustness.csv");
    emit("epr-robustness", summary);
}

void cmd_mb_sample(std::size_t dim, int atoms, int samples,
                   const std::string& measure_path,
                   const std::string& effect_spec, std::uint64_t seed) {
    Rng rng(seed);
    ClassicalMeasure mu = [&] {
        if (!measure_path.empty())
            return io::measure_from_json(io::load_json_file(measure_path));
        std::vector<ClassicalMeasure::Atom> as;
        double wsum = 0.0;
        for (int i = 0; i < atoms; ++i) {
            as.push_back({sample_haar_ray(dim, rng), 0.05 + rng.uniform()});
            wsum += as.back().weight;
        }
        for (auto& a : as) a.weight /= wsum;
        return ClassicalMeasure(as);
    }();
    const Effect e = effect_spec.empty() ? random_effect(mu.dim(), rng)
                                         : parse_effect(effect_spec);
    const auto res = mb_consistency_mc(mu, e, samples, rng);
    json summary = base_summary("mb-sample",
                                {{"dim", dim},
                                 {"atoms", atoms},
                                 {"samples", samples},
                                 {"measure", measure_path},
                                 {"effect", effect_spec}},
                                seed);
    summary["mc_estimate"] = res.mc_estimate;
    summary["exact"] = res.exact;
    summary["std_error"] = res.std_error;
    summary["abs_error"] = std::abs(res.mc_estimate - res.exact);
    summary["measure_used"] = io::measure_to_json(mu);
    summary["reduced_state"] = io::state_to_json(mb_reduce(mu));
    emit("mb-sample", summary);
}

void cmd_ray_geometry(int pairs, std::size_t dim, const std::string& p_path,
                      const std::string& q_path, std::uint64_t seed) {
    json summary = base_summary("ray-geometry",
                                {{"pairs", pairs},
                                 {"dim", dim},
                                 {"p", p_path},
                                 {"q", q_path}},
                                seed);
    if (!p_path.empty() || !q_path.empty()) {
        if (p_path.empty() || q_path.empty())
            throw ValidationError("ray-geometry: need both --p and --q");
        const RayPoint p(io::vec_from_json(
            io::load_json_file(p_path).at("state_vector")));
        const RayPoint q(io::vec_from_json(
            io::load_json_file(q_path).at("state_vector")));
        const auto g = ray_overlap_geometry(p, q);
        summary["overlap"] = g.overlap;
        summary["opnorm_dist"] = g.opnorm_dist;
        summary["identity_residual"] = g.identity_residual;
        emit("ray-geometry", summary);
        return;
    }
    Rng rng(seed);
    io::CsvWriter csv(out_path("ray-geometry.csv"),
                      {"overlap", "opnorm_dist", "identity_residual"});
    double max_residual = 0.0;
    for (int i = 0; i < pairs; ++i) {
        const auto g = ray_overlap_geometry(sample_haar_ray(dim, rng),
                                            sample_haar_ray(dim, rng));
        csv.row({g.overlap, g.opnorm_dist, g.identity_residual});
        max_residual = std::max(max_residual, g.identity_residual);
    }
    csv.close();
    summary["max_identity_residual"] = max_residual;
    summary["csv"] = out_path("ray-geometry.csv");
    emit("ray-geometry", summary);
}

void cmd_chsh_scan(double eta_min, double eta_max, int steps,
                   std::uint64_t seed) {
    if (steps < 1) throw ValidationError("chsh-scan: steps must be >= 1");
    std::vector<double> etas;
    for (int i = 0; i < steps; ++i)
        etas.push_back(steps == 1 ? eta_min
                                  : eta_min + (eta_max - eta_min) * i /
                                        (steps - 1));
    const auto rows = chsh_unsharpness_scan(etas);
    io::CsvWriter csv(out_path("chsh-scan.csv"), {"eta", "s_max"});
    for (const auto& r : rows) csv.row({r.eta, r.s_max});
    csv.close();
    json summary = base_summary(
        "chsh-scan",
        {{"eta_min", eta_min}, {"eta_max", eta_max}, {"steps", steps}}, seed);
    summary["s_at_eta_max"] = rows.back().s_max;
    const auto angles = chsh_optimal_angles();
    summary["optimal_angles"] = {angles.a0, angles.a1, angles.b0, angles.b1};
    summary["csv"] = out_path("chsh-scan.csv");
    emit("chsh-scan", summary);
}

void cmd_freq(double p, const std::string& n_csv, const std::string& mode,
              std::uint64_t seed) {
    const auto ns = parse_int_list(n_csv);
    const bool run_tensor = (mode == "both" || mode == "tensor");
    const bool run_closed = (mode == "both" || mode == "closed");
    if (!run_tensor && !run_closed)
        throw ValidationError("freq-operator: mode must be both|closed|tensor");
    io::CsvWriter csv(out_path("freq-operator.csv"),
                      {"n", "mean_closed", "var_closed", "mean_tensor",
                       "var_tensor"});
    json rows = json::array();
    for (int n : ns) {
        const auto cf = run_closed
                            ? frequency_operator_stats(p, n, FreqMode::ClosedForm)
                            : FreqStats{std::nan(""), std::nan("")};
        const auto tn = run_tensor
                            ? frequency_operator_stats(p, n, FreqMode::Tensor)
                            : FreqStats{std::nan(""), std::nan("")};
        csv.row({static_cast<double>(n), cf.mean, cf.variance, tn.mean,
                 tn.variance});
        rows.push_back({{"n", n},
                        {"mean_closed", cf.mean},
                        {"var_closed", cf.variance},
                        {"mean_tensor", tn.mean},
                        {"var_tensor", tn.variance}});
    }
    csv.close();
    json summary = base_summary(
        "freq-operator", {{"p", p}, {"n_list", n_csv}, {"mode", mode}}, seed);
    summary["rows"] = std::move(rows);
    summary["csv"] = out_path("freq-operator.csv");
    emit("freq-operator", summary);
}

void cmd_premeasure(double amp_a, double amp_b, const std::string& state_spec,
                    std::uint64_t seed) {
    const State obj = state_spec.empty()
                          ? State::pure(Vec{amp_a, amp_b})
                          : parse_state(state_spec);
    const auto res = premeasurement_demo(obj);
    json summary = base_summary(
        "premeasure",
        {{"amp_a", amp_a}, {"amp_b", amp_b}, {"state", state_spec}}, seed);
    summary["pointer_probabilities"] = res.pointer_probs;
    summary["schmidt_coefficients"] = res.schmidt_coefficients;
    summary["schmidt_rank"] = res.schmidt_rank;
    summary["post_state"] = io::state_to_json(res.post);
    emit("premeasure", summary);
}

void cmd_track(const std::string& alpha0_spec, const std::string& dynamics,
               double omega, double dt, int steps, std::uint64_t seed,
               std::size_t nf, double grid_l, std::size_t grid_cells,
               const std::string& rule) {
    TrackParams par;
    par.alpha0 = parse_complex(alpha0_spec);
    if (dynamics == "none")
        par.dynamics = TrackDynamics::None;
    else if (dynamics == "harmonic")
        par.dynamics = TrackDynamics::Harmonic;
    else
        throw ValidationError("track: dynamics must be none|harmonic");
    if (rule == "coherent")
        par.rule = CollapseRule::CoherentCollapse;
    else if (rule == "luders")
        par.rule = CollapseRule::Luders;
    else
        throw ValidationError("track: rule must be coherent|luders");
    par.omega = omega;
    par.dt = dt;
    par.n_steps = steps;
    par.seed = seed;

    const HusimiPom pom(FockSpace(nf), PhaseSpaceGrid{grid_l, grid_cells});
    const TrackRecord rec = track_simulate(pom, par);

    io::CsvWriter csv(out_path("track.csv"),
                      {"step", "t", "q", "p", "norm_deficit"});
    for (const auto& st : rec.steps)
        csv.row({static_cast<double>(st.step), st.t, st.q, st.p,
                 st.norm_deficit});
    csv.close();
    json summary = base_summary("track",
                                {{"alpha0", alpha0_spec},
                                 {"dynamics", dynamics},
                                 {"omega", omega},
                                 {"dt", dt},
                                 {"steps", steps},
                                 {"nf", nf},
                                 {"grid_l", grid_l},
                                 {"grid_cells", grid_cells},
                                 {"rule", rule}},
                                seed);
    summary["steps_completed"] = rec.steps.size();
    summary["halted_early"] = rec.halted_early;
    summary["remainder_norm"] = pom.remainder_norm();
    summary["csv"] = out_path("track.csv");
    emit("track", summary);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qmeas: unsharp-observable measurement laboratory"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);
    app.add_option("--out-dir", g_out_dir,
                   "output directory (overrides QMEAS_OUT_DIR)");

    std::uint64_t seed = 0;
    std::string state_spec, effect_spec, ray_spec;
    double eps = 0.05;

    auto* degree = app.add_subcommand("degree", "tr[rho E] degree of reality");
    degree->add_option("--state", state_spec)->required();
    degree->add_option("--effect", effect_spec)->required();
    degree->add_option("--seed", seed);

    auto* classify =
        app.add_subcommand("classify", "actual/absent/indeterminate verdict");
    classify->add_option("--state", state_spec)->required();
    classify->add_option("--effect", effect_spec)->required();
    classify->add_option("--eps", eps);
    classify->add_option("--seed", seed);

    auto* decompose = app.add_subcommand(
        "decompose", "spectral or nonorthogonal effect decomposition");
    decompose->add_option("--effect", effect_spec)->required();
    decompose->add_option("--ray", ray_spec,
                          "rank-1 projection R for the qubit decomposition");
    decompose->add_option("--seed", seed);

    std::string pom_path, matrix_path;
    auto* smear = app.add_subcommand("smear", "apply a smearing matrix");
    smear->add_option("--pom", pom_path)->required();
    smear->add_option("--matrix", matrix_path)->required();
    smear->add_option("--seed", seed);

    std::string a_spec, b_spec;
    auto* joint = app.add_subcommand("joint-qubit",
                                     "joint POM for two unbiased observables");
    joint->add_option("--a", a_spec)->required();
    joint->add_option("--b", b_spec)->required();
    joint->add_option("--seed", seed);

    bool sharp = false;
    auto* luders = app.add_subcommand("luders", "Luders state update");
    luders->add_option("--state", state_spec)->required();
    luders->add_option("--effect", effect_spec)->required();
    luders->add_flag("--sharp", sharp, "require a projection and use P rho P");
    luders->add_option("--seed", seed);

    std::size_t dim = 2;
    std::string eps_csv = "1e-4,1e-3,1e-2,1e-1";
    int trials = 1000, shards = 4, workers = 1;
    auto* epr = app.add_subcommand("epr-robustness",
                                   "near-eigenstate stability sweep");
    epr->add_option("--dim", dim);
    epr->add_option("--eps-grid", eps_csv);
    epr->add_option("--trials", trials);
    epr->add_option("--seed", seed);
    epr->add_option("--shards", shards);
    epr->add_option("--workers", workers);

    int atoms = 4, samples = 100000;
    std::string measure_path;
    auto* mb = app.add_subcommand("mb-sample",
                                  "classical-presentation Monte Carlo check");
    mb->add_option("--dim", dim);
    mb->add_option("--atoms", atoms);
    mb->add_option("--samples", samples);
    mb->add_option("--measure", measure_path);
    mb->add_option("--effect", effect_spec);
    mb->add_option("--seed", seed);

    int pairs = 1000;
    std::string p_path, q_path;
    auto* rayg = app.add_subcommand("ray-geometry",
                                    "||P-P'||^2 = 1 - tr[PP'] identity");
    rayg->add_option("--pairs", pairs);
    rayg->add_option("--dim", dim);
    rayg->add_option("--p", p_path);
    rayg->add_option("--q", q_path);
    rayg->add_option("--seed", seed);

    double eta_min = 0.0, eta_max = 1.0;
    int steps = 21;
    auto* chsh = app.add_subcommand("chsh-scan",
                                    "CHSH degradation under unsharpness");
    chsh->add_option("--eta-min", eta_min);
    chsh->add_option("--eta-max", eta_max);
    chsh->add_option("--steps", steps);
    chsh->add_option("--seed", seed);

    double pval = 0.5;
    std::string n_csv = "2,4,8,12", mode = "both";
    auto* freq = app.add_subcommand("freq-operator",
                                    "frequency-operator statistics");
    freq->add_option("--p", pval);
    freq->add_option("--n-list", n_csv);
    freq->add_option("--mode", mode);
    freq->add_option("--seed", seed);

    double amp_a = 0.8944271909999159, amp_b = 0.4472135954999579;
    auto* prem = app.add_subcommand("premeasure",
                                    "unitary premeasurement entanglement");
    prem->add_option("--amp-a", amp_a);
    prem->add_option("--amp-b", amp_b);
    prem->add_option("--state", state_spec);
    prem->add_option("--seed", seed);

    std::string alpha0 = "2", dynamics = "harmonic", rule = "coherent";
    double omega = 1.0, dt = 0.1;
    int tsteps = 100;
    std::size_t nf = 40, grid_cells = 48;
    double grid_l = 12.0;
    auto* track = app.add_subcommand("track",
                                     "phase-space track simulation");
    track->add_option("--alpha0", alpha0);
    track->add_option("--dynamics", dynamics);
    track->add_option("--omega", omega);
    track->add_option("--dt", dt);
    track->add_option("--steps", tsteps);
    track->add_option("--seed", seed);
    track->add_option("--nf", nf);
    track->add_option("--grid-l", grid_l);
    track->add_option("--grid-cells", grid_cells);
    track->add_option("--rule", rule);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*degree) cmd_degree(state_spec, effect_spec, seed);
        else if (*classify) cmd_classify(state_spec, effect_spec, eps, seed);
        else if (*decompose) cmd_decompose(effect_spec, ray_spec, seed);
        else if (*smear) cmd_smear(pom_path, matrix_path, seed);
        else if (*joint) cmd_joint_qubit(a_spec, b_spec, seed);
        else if (*luders) cmd_luders(state_spec, effect_spec, sharp, seed);
        else if (*epr) cmd_epr(dim, eps_csv, trials, seed, shards, workers);
        else if (*mb)
            cmd_mb_sample(dim, atoms, samples, measure_path, effect_spec, seed);
        else if (*rayg) cmd_ray_geometry(pairs, dim, p_path, q_path, seed);
        else if (*chsh) cmd_chsh_scan(eta_min, eta_max, steps, seed);
        else if (*freq) cmd_freq(pval, n_csv, mode, seed);
        else if (*prem) cmd_premeasure(amp_a, amp_b, state_spec, seed);
        else if (*track)
            cmd_track(alpha0, dynamics, omega, dt, tsteps, seed, nf, grid_l,
                      grid_cells, rule);
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
