// kco: batch front end. Generates planted instances, runs the clustering
// algorithms, builds summaries and samples, and evaluates center sets. Every
// subcommand writes a JSON report (schema 1) to --out and prints a one-line
// summary; exit codes are 0 success, 1 usage, 2 contract violation, 3 guard
// refusal.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "kco/baselines.hpp"
#include "kco/coreset.hpp"
#include "kco/cost.hpp"
#include "kco/datagen.hpp"
#include "kco/greedy.hpp"
#include "kco/io.hpp"
#include "kco/sampling.hpp"

using nlohmann::ordered_json;

namespace {

class Timer {
 public:
  double ms() const {
    const auto dt = std::chrono::steady_clock::now() - t0_;
    return std::chrono::duration<double, std::milli>(dt).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

struct CommonOpts {
  std::string in = "points.csv";
  bool metric = false;
  std::string truth = "truth.json";
  bool truth_given = false;
  std::string out = "report.json";
};

kco::Dataset load_input(const CommonOpts& c) {
  return c.metric ? kco::io::read_metric(c.in) : kco::io::read_points_csv(c.in);
}

struct Truth {
  std::optional<double> r_opt;
  std::string source;
  std::vector<int> labels;
};

// Truth file if present (the default path is optional, an explicit one is
// not), else brute force when the instance is within its guard.
Truth resolve_r_opt(const CommonOpts& c, const kco::Dataset& ds, std::size_t k,
                    std::size_t z) {
  Truth t;
  if (std::filesystem::exists(c.truth)) {
    const kco::io::TruthFile f = kco::io::read_truth(c.truth);
    t.r_opt = f.r_opt;
    t.source = "truth";
    t.labels = f.labels;
    return t;
  }
  if (c.truth_given) kco::fail_contract("truth file not found: " + c.truth);
  try {
    t.r_opt = kco::brute_force_opt(ds, k, z).r_opt;
    t.source = "bruteforce";
  } catch (const kco::guard_error&) {
    // too large to brute force; ratio stays omitted
  }
  return t;
}

ordered_json base_report(const std::string& algo) {
  ordered_json j;
  j["schema"] = 1;
  j["algorithm"] = algo;
  return j;
}

void attach_cost(ordered_json& j, const kco::Dataset& ds, const kco::CenterSet& e,
                 std::size_t z, double report_eps, const Truth& truth) {
  const kco::PhiResult pr = kco::phi_eps(ds, e, z, report_eps);
  const double phi0 = kco::phi_eps(ds, e, z, 0.0).radius;
  j["radius"] = pr.radius;
  j["radius_eps"] = report_eps;
  j["radius_phi0"] = phi0;
  j["budget"] = pr.budget;
  j["budget_used"] = pr.budget_used;
  j["excluded_count"] = pr.excluded.size();
  j["e_size"] = e.size();
  if (truth.r_opt.has_value() && *truth.r_opt > 0.0) {
    j["ratio"] = pr.radius / *truth.r_opt;
    j["r_opt"] = *truth.r_opt;
    j["r_opt_source"] = truth.source;
  } else {
    j["ratio"] = nullptr;
  }
  j["centers"] = e.ids;
  j["excluded"] = pr.excluded;
  if (pr.all_excluded) j["all_excluded"] = true;
}

void finish_report(ordered_json& j, const std::string& out, const Timer& timer,
                   const std::string& summary) {
  j["wall_ms"] = timer.ms();
  kco::io::write_file(out, j.dump(2) + "\n");
  std::cout << summary << " (" << kco::io::format_double(j["wall_ms"].get<double>())
            << " ms)\n";
}

int run_gen(const kco::SynthParams& sp, const std::string& points_path,
            const std::string& truth_path, const std::string& out) {
  Timer timer;
  const kco::PlantedInstance inst = kco::synth(sp);
  kco::io::write_points_csv(points_path, inst.data);
  kco::io::write_truth(truth_path, inst);

  ordered_json j = base_report("gen");
  j["params"] = {{"n", sp.n},       {"dim", sp.dim},
                 {"k", sp.k},       {"z", sp.z},
                 {"side", sp.side}, {"variance", sp.variance},
                 {"meb_delta", sp.meb_delta}, {"seed", sp.seed}};
  j["n"] = inst.data.size();
  j["dim"] = inst.data.dim();
  j["r_opt"] = inst.r_opt;
  j["seed"] = sp.seed;
  j["points_file"] = points_path;
  j["truth_file"] = truth_path;

  char buf[256];
  std::snprintf(buf, sizeof buf, "gen: n=%zu D=%zu k=%zu z=%zu r_opt=%s -> %s, %s",
                sp.n, sp.dim, sp.k, sp.z, kco::io::format_double(inst.r_opt).c_str(),
                points_path.c_str(), truth_path.c_str());
  finish_report(j, out, timer, buf);
  return 0;
}

struct ClusterOpts {
  CommonOpts common;
  std::string algo;
  kco::OutlierParams p;
  std::size_t t = 0;
  std::size_t trials = 0;
  kco::PointId first = 0;
  double eps = 1.0;
  bool eps_given = false;
  std::string trace_out;
};

int run_cluster(const ClusterOpts& o) {
  Timer timer;
  const kco::Dataset ds = load_input(o.common);
  kco::OutlierParams p = o.p;
  p.eps = o.eps;

  const bool randomized = o.algo == "bicriteria" || o.algo == "two-approx" ||
                          o.algo == "restarts" || o.algo == "doubling";
  // Deterministic baselines report the strict cost (exactly z excluded)
  // unless an eps is asked for explicitly.
  const double report_eps = (o.eps_given || randomized) ? o.eps : 0.0;

  kco::CenterSet centers;
  std::size_t rounds = 0;
  std::optional<kco::RoundTrace> trace;
  std::optional<std::size_t> trials_used;

  if (o.algo == "bicriteria") {
    const std::size_t t =
        o.t > 0 ? o.t
                : static_cast<std::size_t>(std::ceil(
                      (static_cast<double>(p.k) + std::sqrt(static_cast<double>(p.k))) /
                      (1.0 - p.eta)));
    kco::GreedyRun run = kco::bicriteria(ds, p, t);
    centers = std::move(run.centers);
    trace = std::move(run.trace);
    rounds = t;
  } else if (o.algo == "doubling") {
    kco::GreedyRun run = kco::doubling_bicriteria(ds, p);
    centers = std::move(run.centers);
    trace = std::move(run.trace);
    rounds = kco::doubling_rounds(p.k, p.rho, p.eta);
  } else if (o.algo == "two-approx") {
    kco::GreedyRun run = kco::two_approx(ds, p);
    centers = std::move(run.centers);
    trace = std::move(run.trace);
    rounds = p.k;
  } else if (o.algo == "restarts") {
    const std::size_t trials =
        o.trials > 0 ? o.trials : kco::default_trials(p, ds.size());
    kco::RestartOutcome out = kco::with_restarts(ds, p, trials);
    centers = std::move(out.best.centers);
    rounds = p.k;
    trials_used = trials;
  } else if (o.algo == "gonzalez") {
    centers = kco::gonzalez(ds, p.k, o.first);
    rounds = p.k;
  } else if (o.algo == "charikar") {
    centers = kco::charikar(ds, p.k, p.z);
    rounds = p.k;
  } else if (o.algo == "bruteforce") {
    centers = kco::brute_force_opt(ds, p.k, p.z).centers;
    rounds = p.k;
  } else {
    kco::fail_contract("unknown algorithm: " + o.algo);
  }

  const Truth truth = resolve_r_opt(o.common, ds, p.k, p.z);

  ordered_json j = base_report(o.algo);
  j["params"] = {{"k", p.k},     {"z", p.z},     {"eps", o.eps},
                 {"eta", p.eta}, {"rho", p.rho}, {"seed", p.seed}};
  if (o.t > 0) j["params"]["t"] = o.t;
  if (trials_used.has_value()) j["params"]["trials"] = *trials_used;
  j["n"] = ds.size();
  j["dim"] = ds.is_euclidean() ? ds.dim() : 0;
  attach_cost(j, ds, centers, p.z, report_eps, truth);
  j["rounds"] = rounds;
  j["seed"] = p.seed;
  if (trace.has_value() && !o.trace_out.empty()) {
    kco::io::write_file(o.trace_out, kco::io::trace_to_json(*trace).dump(2) + "\n");
    j["trace_file"] = o.trace_out;
  }

  char buf[256];
  std::snprintf(buf, sizeof buf, "%s: radius=%s |E|=%zu excluded=%zu ratio=%s",
                o.algo.c_str(), kco::io::format_double(j["radius"].get<double>()).c_str(),
                centers.size(), j["excluded_count"].get<std::size_t>(),
                j["ratio"].is_null()
                    ? "n/a"
                    : kco::io::format_double(j["ratio"].get<double>()).c_str());
  finish_report(j, o.common.out, timer, buf);
  return 0;
}

struct CoresetOpts {
  CommonOpts common;
  kco::OutlierParams p;
  kco::CoresetOptions build;
  std::size_t parts = 1;
  std::string coreset_out = "coreset.csv";
  std::string rep_out;
};

int run_coreset(const CoresetOpts& o) {
  Timer timer;
  const kco::Dataset ds = load_input(o.common);

  kco::Coreset cs;
  if (o.parts <= 1) {
    cs = kco::build_coreset(ds, o.p, o.build);
  } else {
    const std::size_t n = ds.size();
    std::vector<std::vector<kco::PointId>> parts(o.parts);
    for (std::size_t b = 0; b < o.parts; ++b) {
      const std::size_t lo = b * n / o.parts;
      const std::size_t hi = (b + 1) * n / o.parts;
      for (std::size_t i = lo; i < hi; ++i) {
        parts[b].push_back(static_cast<kco::PointId>(i));
      }
    }
    cs = kco::composable_build(ds, parts, o.p, o.build);
  }

  kco::io::write_coreset(o.coreset_out, cs, ds.size(), o.p.mu, o.p.rho);
  if (!o.rep_out.empty()) kco::io::write_rep_map(o.rep_out, cs);

  ordered_json j = base_report("coreset");
  j["params"] = {{"k", o.p.k},     {"z", o.p.z},     {"mu", o.p.mu},
                 {"rho", o.p.rho}, {"eta", o.p.eta}, {"eps", o.build.eps},
                 {"parts", o.parts}, {"seed", o.p.seed}};
  if (o.build.l_override > 0) j["params"]["l"] = o.build.l_override;
  j["n"] = ds.size();
  j["dim"] = ds.is_euclidean() ? ds.dim() : 0;
  j["coreset"] = {{"size", cs.size()},
                  {"total_weight", cs.total_weight()},
                  {"r_tilde", cs.r_tilde},
                  {"l", cs.l},
                  {"t", cs.t},
                  {"whole_set_fallback", cs.whole_set_fallback}};
  j["seed"] = o.p.seed;
  j["coreset_file"] = o.coreset_out;
  if (!o.rep_out.empty()) j["rep_file"] = o.rep_out;

  char buf[256];
  std::snprintf(buf, sizeof buf, "coreset: size=%zu weight=%llu r_tilde=%s l=%zu -> %s",
                cs.size(), static_cast<unsigned long long>(cs.total_weight()),
                kco::io::format_double(cs.r_tilde).c_str(), cs.l, o.coreset_out.c_str());
  finish_report(j, o.common.out, timer, buf);
  return 0;
}

struct SampleOpts {
  CommonOpts common;
  double eps = 0.5;
  double gamma = 0.0;
  std::size_t k = 1;
  double lambda = 0.1;
  double c = 1.0;
  std::uint64_t seed = 0;
  std::string sample_out = "sample.csv";
};

int run_sample(const SampleOpts& o) {
  Timer timer;
  const kco::Dataset ds = load_input(o.common);
  const kco::Reduction r =
      kco::uniform_reduce(ds, o.k, o.eps, o.gamma, o.lambda, o.c, o.seed);

  if (r.sample.is_euclidean()) {
    kco::io::write_points_csv(o.sample_out, r.sample);
  } else {
    kco::io::write_metric(o.sample_out, r.sample);
  }

  ordered_json j = base_report("sample");
  j["params"] = {{"k", o.k},           {"eps", o.eps}, {"gamma", o.gamma},
                 {"lambda", o.lambda}, {"c", o.c},     {"seed", o.seed}};
  j["n"] = ds.size();
  j["dim"] = ds.is_euclidean() ? ds.dim() : 0;
  j["plan"] = {{"sample_size", r.plan.sample_size},
               {"drawn", r.plan.drawn},
               {"z_prime", r.plan.z_prime},
               {"vacuous", r.plan.vacuous}};
  j["ids"] = r.ids;
  j["seed"] = o.seed;
  j["sample_file"] = o.sample_out;

  char buf[256];
  std::snprintf(buf, sizeof buf, "sample: drawn=%zu of n=%zu z'=%zu vacuous=%s -> %s",
                r.plan.drawn, ds.size(), r.plan.z_prime,
                r.plan.vacuous ? "yes" : "no", o.sample_out.c_str());
  finish_report(j, o.common.out, timer, buf);
  return 0;
}

struct EvalOpts {
  CommonOpts common;
  std::string centers;
  std::size_t z = 0;
  double eps = 0.0;
  std::size_t k = 0;  // ratio fallback only; 0 means |centers|
};

int run_eval(const EvalOpts& o) {
  Timer timer;
  const kco::Dataset ds = load_input(o.common);
  const std::vector<kco::PointId> raw = kco::io::read_centers(o.centers);

  kco::CenterSet e;
  for (kco::PointId id : raw) {
    ds.check_id(id);
    if (!e.contains(id)) e.ids.push_back(id);
  }

  const std::size_t k = o.k > 0 ? o.k : e.size();
  const Truth truth = resolve_r_opt(o.common, ds, k, o.z);

  ordered_json j = base_report("eval");
  j["params"] = {{"z", o.z}, {"eps", o.eps}, {"k", k}, {"centers_file", o.centers}};
  j["n"] = ds.size();
  j["dim"] = ds.is_euclidean() ? ds.dim() : 0;
  attach_cost(j, ds, e, o.z, o.eps, truth);
  j["seed"] = 0;

  char buf[256];
  std::snprintf(buf, sizeof buf, "eval: radius=%s |E|=%zu excluded=%zu ratio=%s",
                kco::io::format_double(j["radius"].get<double>()).c_str(), e.size(),
                j["excluded_count"].get<std::size_t>(),
                j["ratio"].is_null()
                    ? "n/a"
                    : kco::io::format_double(j["ratio"].get<double>()).c_str());
  finish_report(j, o.common.out, timer, buf);
  return 0;
}

void add_common(CLI::App* cmd, CommonOpts& c, bool with_truth = true) {
  cmd->add_option("--in", c.in, "input points CSV (or metric file with --metric)");
  cmd->add_flag("--metric", c.metric, "treat --in as an explicit metric file");
  if (with_truth) {
    cmd->add_option("--truth", c.truth, "ground-truth JSON for ratios")
        ->each([&c](const std::string&) { c.truth_given = true; });
  }
  cmd->add_option("--out", c.out, "report JSON path");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"greedy k-center clustering with outliers"};
  app.require_subcommand(1);

  kco::SynthParams sp;
  std::string gen_points = "points.csv";
  std::string gen_truth = "truth.json";
  std::string gen_out = "report.json";
  CLI::App* gen = app.add_subcommand("gen", "generate a planted instance");
  gen->add_option("--n", sp.n, "points including outliers")->required();
  gen->add_option("--D", sp.dim, "dimension")->required();
  gen->add_option("--k", sp.k, "clusters")->required();
  gen->add_option("--z", sp.z, "outliers");
  gen->add_option("--side", sp.side, "hypercube side for cluster means");
  gen->add_option("--variance", sp.variance, "per-coordinate cluster variance");
  gen->add_option("--seed", sp.seed, "seed");
  gen->add_option("--points", gen_points, "points CSV path");
  gen->add_option("--truth", gen_truth, "truth JSON path");
  gen->add_option("--out", gen_out, "report JSON path");

  ClusterOpts co;
  CLI::App* cluster = app.add_subcommand("cluster", "run a clustering algorithm");
  cluster
      ->add_option("--algo", co.algo,
                   "bicriteria|two-approx|restarts|doubling|gonzalez|charikar|bruteforce")
      ->required()
      ->check(CLI::IsMember({"bicriteria", "two-approx", "restarts", "doubling",
                             "gonzalez", "charikar", "bruteforce"}));
  cluster->add_option("--k", co.p.k, "centers")->required();
  cluster->add_option("--z", co.p.z, "outlier budget");
  cluster->add_option("--eps", co.eps, "exclusion slack")
      ->each([&co](const std::string&) { co.eps_given = true; });
  cluster->add_option("--eta", co.p.eta, "per-round failure tolerance");
  cluster->add_option("--rho", co.p.rho, "doubling dimension");
  cluster->add_option("--t", co.t, "bicriteria rounds (0 = from k and eta)");
  cluster->add_option("--trials", co.trials, "restart count (0 = default formula)");
  cluster->add_option("--seed", co.p.seed, "seed");
  cluster->add_option("--first", co.first, "gonzalez start point");
  cluster->add_option("--trace-out", co.trace_out, "round trace JSON path");
  add_common(cluster, co.common);

  CoresetOpts cso;
  CLI::App* coreset = app.add_subcommand("coreset", "build a weighted summary");
  coreset->add_option("--k", cso.p.k, "centers the summary must serve")->required();
  coreset->add_option("--z", cso.p.z, "outlier budget");
  coreset->add_option("--mu", cso.p.mu, "approximation level");
  coreset->add_option("--rho", cso.p.rho, "doubling dimension");
  coreset->add_option("--eta", cso.p.eta, "per-round failure tolerance");
  coreset->add_option("--eps", cso.build.eps, "exclusion slack of the internal run");
  coreset->add_option("--l", cso.build.l_override, "override the center target");
  coreset->add_option("--parts", cso.parts, "build per id-range part and union");
  coreset->add_option("--seed", cso.p.seed, "seed");
  coreset->add_option("--coreset-out", cso.coreset_out, "summary CSV path");
  coreset->add_option("--rep-out", cso.rep_out, "representative map CSV path");
  add_common(coreset, cso.common, /*with_truth=*/false);

  SampleOpts so;
  CLI::App* sample = app.add_subcommand("sample", "uniform-sample reduction");
  sample->add_option("--eps", so.eps, "relative cost error, at most 1/2");
  sample->add_option("--gamma", so.gamma, "outlier fraction z/n")->required();
  sample->add_option("--k", so.k, "centers")->required();
  sample->add_option("--lambda", so.lambda, "failure probability");
  sample->add_option("--c", so.c, "size constant");
  sample->add_option("--seed", so.seed, "seed");
  sample->add_option("--sample-out", so.sample_out, "sampled points path");
  add_common(sample, so.common, /*with_truth=*/false);

  EvalOpts eo;
  CLI::App* eval = app.add_subcommand("eval", "recompute cost for a center set");
  eval->add_option("--centers", eo.centers, "report JSON or one id per line")->required();
  eval->add_option("--z", eo.z, "outlier budget");
  eval->add_option("--eps", eo.eps, "exclusion slack");
  eval->add_option("--k", eo.k, "k for the brute-force ratio fallback");
  add_common(eval, eo.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (app.got_subcommand(gen)) return run_gen(sp, gen_points, gen_truth, gen_out);
    if (app.got_subcommand(cluster)) return run_cluster(co);
    if (app.got_subcommand(coreset)) return run_coreset(cso);
    if (app.got_subcommand(sample)) return run_sample(so);
    if (app.got_subcommand(eval)) return run_eval(eo);
  } catch (const kco::guard_error& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
