// colorful: command-line front end for the colorful choice library.
//
//   colorful generate --seed 7 --dimension 4 --classes 5 --output inst.json
//   colorful run inst.json --algorithm rebalance --epsilon 1/2 --output report.json
//   colorful verify inst.json report.json
//   colorful reduce formula.wcnf --target l-ncp --output inst.json --map map.json
//   colorful bench suite.json --jobs 4 --output rows.csv
//
// Exit codes: 0 verified, 1 verification failure, 2 usage error,
// 3 degenerate instance.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "colorful/approx.hpp"
#include "colorful/caratheodory.hpp"
#include "colorful/combine.hpp"
#include "colorful/generate.hpp"
#include "colorful/io.hpp"
#include "colorful/ncp.hpp"
#include "colorful/oracle.hpp"
#include "colorful/reductions.hpp"

namespace {

using namespace colorful;

constexpr const char* kVersion = "0.1.0";

enum Exit { kVerified = 0, kFailed = 1, kUsage = 2, kDegenerate = 3 };

// Usage-level problems: unreadable files, schema errors, bad parameters.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The instance does not meet the algorithm's preconditions.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int log_level() {
  const char* env = std::getenv("COLORFUL_LOG");
  if (!env) return 1;
  const std::string v = env;
  if (v == "quiet" || v == "0") return 0;
  if (v == "info" || v == "2") return 2;
  if (v == "debug" || v == "3") return 3;
  return 1;
}

void log(int level, const std::string& message) {
  static const int threshold = log_level();
  if (level > threshold) return;
  static const char* names[] = {"", "warn", "info", "debug"};
  std::cerr << "colorful: " << (level == 1 ? "" : std::string(names[level]) + ": ")
            << message << "\n";
}

std::string command_line(int argc, char** argv) {
  std::string out;
  for (int i = 0; i < argc; ++i) {
    if (i) out += ' ';
    out += argv[i];
  }
  return out;
}

Json tool_json() {
  Json t;
  t["name"] = "colorful";
  t["version"] = kVersion;
  return t;
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    write_file(output, text);
  }
}

Instance load_instance(const std::string& path) {
  try {
    return read_instance(path);
  } catch (const std::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Rational parse_epsilon(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw UsageError("--epsilon: not a rational: " + text);
  }
}

long ceil_long(const Rational& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r.get_si();
}

// ---------------------------------------------------------------- run

struct RunOptions {
  std::string algorithm;
  std::string epsilon = "1/2";
  std::size_t max_steps = 1'000'000;
  std::string pivot = "first";
  std::size_t m = 1;
  std::string map_path;
  bool timing = true;
};

const std::vector<std::string> kAlgorithms = {
    "half-linalg", "half-dimreduce", "rebalance", "two-color",
    "exact-combine", "ncp-local", "ncp-global", "brute"};

void require_classes(const Instance& instance, std::size_t needed, const std::string& algorithm) {
  if (instance.num_classes() < needed) {
    throw PreconditionError(algorithm + " needs " + std::to_string(needed) +
                            " classes, instance has " +
                            std::to_string(instance.num_classes()));
  }
}

void require_caratheodory(const Instance& instance) {
  const auto violations = validate(instance);
  for (const auto& v : violations) {
    if (v.severity == Violation::Severity::Warning) log(2, v.message);
  }
  if (has_errors(violations)) {
    for (const auto& v : violations) {
      if (v.severity == Violation::Severity::Error) {
        throw PreconditionError("invalid instance: " + v.message);
      }
    }
  }
}

// Result of one algorithm run before it is serialized.
struct Outcome {
  std::optional<ColorfulChoice> choice;
  long bound = 0;
  bool verified = false;
  Json steps = Json::object();
  Json extra = Json::object();
  std::optional<HullCertificate> certificate;
};

Json picks_json(const Instance& instance, const Picks& picks) {
  Json out = Json::array();
  for (std::size_t c = 0; c < picks.size(); ++c) {
    Json s;
    s["class"] = instance.classes()[c].id;
    s["index"] = picks[c];
    out.push_back(std::move(s));
  }
  return out;
}

Outcome run_ncp(const Instance& instance, const RunOptions& opts, bool global,
                const std::optional<ReductionMap>& map) {
  Outcome out;
  out.bound = 1;
  Picks picks;
  Rational cost;
  if (global) {
    const auto best = global_optimum(instance);
    picks = best.picks;
    cost = best.squared_distance;
    out.steps["evaluated"] = best.evaluated;
  } else {
    LocalSearchOptions ls;
    ls.max_steps = opts.max_steps;
    ls.pivot = opts.pivot == "best" ? Pivot::Best : Pivot::First;
    try {
      const auto trace = local_search(instance, std::nullopt, ls);
      picks = trace.final;
      cost = trace.final_cost;
      out.steps["swaps"] = trace.steps.size();
      out.extra["initial_cost"] = to_json(trace.initial_cost);
    } catch (const StepLimitExceeded& e) {
      log(1, "local search stopped at --max-steps " + std::to_string(opts.max_steps));
      picks = e.partial().final;
      cost = e.partial().final_cost;
      out.steps["swaps"] = e.partial().steps.size();
      out.steps["limit_reached"] = true;
      out.extra["initial_cost"] = to_json(e.partial().initial_cost);
    }
  }
  out.choice = to_choice(picks);
  out.extra["picks"] = picks_json(instance, picks);
  out.extra["cost"] = to_json(cost);
  // Re-check: the cost is recomputed and, for local search, no swap improves.
  bool ok = ncp_cost(instance, picks) == cost;
  if (!global && !out.steps.contains("limit_reached")) {
    ok = ok && !local_search_step(instance, picks, Pivot::Best).has_value();
    out.extra["local_optimum"] = ok;
  }
  if (map) {
    const auto assignment = decode(*map, *out.choice);
    out.extra["assignment"] = assignment;
    out.extra["unsatisfied_weight"] = unsatisfied_weight(map->formula, assignment);
  }
  out.verified = ok && !out.steps.contains("limit_reached");
  return out;
}

Outcome run_algorithm(const Instance& instance, const RunOptions& opts,
                      const std::optional<ReductionMap>& map) {
  const std::size_t d = instance.dimension();
  const auto& a = opts.algorithm;
  Outcome out;
  if (a == "ncp-local" || a == "ncp-global") return run_ncp(instance, opts, a == "ncp-global", map);

  if (a == "brute") {
    out.bound = static_cast<long>(opts.m);
    auto found = brute_force_choice(instance, opts.m);
    if (found) out.choice = std::move(*found);
    else out.extra["found"] = false;
  } else {
    require_caratheodory(instance);
    if (a == "half-linalg") {
      require_classes(instance, d + 1, a);
      out.bound = static_cast<long>((d + 2) / 2);
      out.choice = half_linalg(instance);
    } else if (a == "half-dimreduce") {
      require_classes(instance, d / 2 + 1, a);
      out.bound = static_cast<long>((d + 1) / 2 + 1);
      out.choice = half_dimreduce(instance);
    } else if (a == "rebalance") {
      require_classes(instance, d + 1, a);
      const Rational eps = parse_epsilon(opts.epsilon);
      if (eps <= 0 || eps >= 1) throw UsageError("--epsilon must lie strictly between 0 and 1");
      const auto params = epsilon_params(d, eps);
      out.bound = ceil_long(eps * (d + 1));
      const auto result = rebalance(instance, params);
      out.choice = result.choice;
      out.steps["iterations"] = result.stats.iterations;
      out.steps["base_cases"] = result.stats.base_cases;
      out.steps["max_depth"] = result.stats.max_depth;
      out.extra["epsilon"] = to_json(eps);
      out.extra["d0"] = params.d0;
    } else if (a == "two-color") {
      require_classes(instance, 2, a);
      out.bound = two_color_bound(d).bound;
      const auto result = two_color(instance);
      out.choice = result.choice;
      out.extra["k"] = result.k;
      out.extra["guaranteed_bound"] = two_color_guarantee(d).bound;
    } else if (a == "exact-combine") {
      out.bound = 1;
      const auto result = find_perfect(instance);
      out.choice = result.choice;
      out.steps["combinations"] = result.combinations;
      out.steps["returned_colors"] = result.returned_colors;
      Json stores = Json::array();
      for (const auto& s : result.stores) {
        stores.push_back({{"level", s.level}, {"multiplicity", s.multiplicity},
                          {"guarantee", s.guarantee}});
      }
      out.extra["stores"] = std::move(stores);
    } else {
      throw UsageError("unknown algorithm: " + a);
    }
  }
  if (out.choice) {
    const auto v = verify_choice(instance, *out.choice, static_cast<std::size_t>(out.bound));
    out.certificate = v.certificate;
    out.verified = v.ok;
  }
  return out;
}

Json report_json(const Instance& instance, const RunOptions& opts, const Outcome& out,
                 const std::string& cmd, std::optional<double> millis) {
  Json r;
  r["tool"] = tool_json();
  r["command"] = cmd;
  r["algorithm"] = opts.algorithm;
  r["dimension"] = instance.dimension();
  r["classes"] = instance.num_classes();
  r["bound"] = out.bound;
  if (out.choice) {
    r["m"] = out.choice->m;
    r["choice"] = choice_to_json(instance, *out.choice);
    const auto points = gather(instance, out.choice->selections);
    r["certificate"] = certificate_to_json(out.certificate ? *out.certificate
                                                           : origin_in_hull(points));
  } else {
    r["m"] = nullptr;
    r["choice"] = nullptr;
  }
  r["steps"] = out.steps;
  for (const auto& [k, v] : out.extra.items()) r[k] = v;
  r["verified"] = out.verified;
  if (millis) r["wall_time_ms"] = *millis;
  return r;
}

int cmd_run(const std::string& instance_path, const RunOptions& opts, const std::string& output,
            const std::string& cmd) {
  if (std::find(kAlgorithms.begin(), kAlgorithms.end(), opts.algorithm) == kAlgorithms.end()) {
    throw UsageError("unknown algorithm: " + opts.algorithm);
  }
  const Instance instance = load_instance(instance_path);
  std::optional<ReductionMap> map;
  if (!opts.map_path.empty()) {
    try {
      map = reduction_from_json(instance, Json::parse(read_file(opts.map_path)));
    } catch (const std::exception& e) {
      throw UsageError(opts.map_path + ": " + e.what());
    }
  }
  log(2, "running " + opts.algorithm + " on " + instance_path);
  const auto start = std::chrono::steady_clock::now();
  const Outcome out = run_algorithm(instance, opts, map);
  const double millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  emit(dump(report_json(instance, opts, out, cmd,
                        opts.timing ? std::optional<double>(millis) : std::nullopt)),
       output);
  if (!out.verified) {
    log(1, "verification failed" + (out.choice ? " (m = " + std::to_string(out.choice->m) +
                                                     ", bound " + std::to_string(out.bound) + ")"
                                               : std::string(" (no choice found)")));
    return kFailed;
  }
  return kVerified;
}

// ---------------------------------------------------------------- verify

// Re-verifies a report using only the JSON: the recorded certificate must
// be valid for the recorded points, and m must meet the recorded bound.
int cmd_verify(const std::string& instance_path, const std::string& report_path) {
  const Instance instance = load_instance(instance_path);
  Json report;
  try {
    report = Json::parse(read_file(report_path));
  } catch (const std::exception& e) {
    throw UsageError(report_path + ": " + e.what());
  }
  if (!report.contains("choice") || report["choice"].is_null()) {
    log(1, "report has no choice");
    return kFailed;
  }
  ColorfulChoice choice;
  HullCertificate cert;
  long bound = 0;
  try {
    choice = choice_from_json(instance, report.at("choice"));
    cert = certificate_from_json(report.at("certificate"), instance.dimension());
    bound = report.at("bound").get<long>();
  } catch (const std::exception& e) {
    throw UsageError(report_path + ": " + e.what());
  }
  const auto points = gather(instance, choice.selections);
  if (!certificate_valid(points, cert)) {
    log(1, "certificate does not match the selected points");
    return kFailed;
  }
  const bool ncp = report.value("algorithm", "").rfind("ncp-", 0) == 0;
  if (!ncp && !cert.inside()) {
    log(1, "certificate places the origin outside");
    return kFailed;
  }
  if (static_cast<long>(choice.m) > bound) {
    log(1, "m = " + std::to_string(choice.m) + " exceeds the bound " + std::to_string(bound));
    return kFailed;
  }
  if (ncp && report.contains("cost")) {
    if (ncp_cost(choice, instance) != rational_from_json(report["cost"])) {
      log(1, "recorded cost does not match");
      return kFailed;
    }
  }
  std::cout << "verified: m = " << choice.m << ", bound " << bound << ", origin "
            << (cert.inside() ? "inside" : "outside") << "\n";
  return kVerified;
}

// ---------------------------------------------------------------- generate

int cmd_generate(GenerateOptions options, const std::string& kind, const std::string& output) {
  if (kind == "caratheodory") options.kind = InstanceKind::Caratheodory;
  else if (kind == "ncp") options.kind = InstanceKind::Ncp;
  else throw UsageError("--kind must be caratheodory or ncp");
  Instance instance = [&] {
    try {
      return generate_instance(options);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  emit(dump(instance_to_json(instance)), output);
  return kVerified;
}

int cmd_validate(const std::string& instance_path) {
  const Instance instance = load_instance(instance_path);
  const auto violations = validate(instance);
  for (const auto& v : violations) {
    std::cout << (v.severity == Violation::Severity::Error ? "error: " : "warning: ")
              << v.message << "\n";
  }
  if (has_errors(violations)) return kDegenerate;
  std::cout << "ok\n";
  return kVerified;
}

// ---------------------------------------------------------------- reduce

int cmd_reduce(const std::string& formula_path, const std::string& target,
               const std::string& output, const std::string& map_output) {
  WeightedFormula formula;
  try {
    formula = parse_wcnf(read_file(formula_path));
  } catch (const std::exception& e) {
    throw UsageError(formula_path + ": " + e.what());
  }
  ReductionMap map = [&] {
    try {
      if (target == "l-ncp") return build_l_ncp(formula);
      if (target == "g-ncp") return build_g_ncp(formula);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    throw UsageError("--target must be l-ncp or g-ncp");
  }();
  emit(dump(instance_to_json(map.instance)), output);
  if (!map_output.empty()) emit(dump(reduction_to_json(map)), map_output);
  return kVerified;
}

// ---------------------------------------------------------------- bench

struct BenchRow {
  std::size_t d = 0;
  std::uint64_t seed = 0;
  std::string algorithm;
  std::string epsilon;
  std::string status;
  std::string m;
  long bound = 0;
  std::size_t iterations = 0;
  double millis = 0;
};

// Suite config:
//   {"seeds": [1, 2, 3], "dimensions": [3, 4],
//    "algorithms": ["half-linalg", "rebalance"], "epsilons": ["1/2"],
//    "points_per_class": 0, "range": 10}
// points_per_class 0 means d+1. Each row generates its own instance with
// d+1 classes (the largest count any approximation algorithm reads).
int cmd_bench(const std::string& config_path, std::size_t jobs, const std::string& output,
              bool timing) {
  Json config;
  try {
    config = Json::parse(read_file(config_path));
  } catch (const std::exception& e) {
    throw UsageError(config_path + ": " + e.what());
  }
  std::vector<BenchRow> rows;
  auto add_row = [&](std::size_t d, std::uint64_t seed, const std::string& a,
                     const std::string& eps) {
    BenchRow row;
    row.d = d;
    row.seed = seed;
    row.algorithm = a;
    row.epsilon = eps;
    rows.push_back(std::move(row));
  };
  std::size_t ppc = 0;
  long range = 10;
  try {
    ppc = config.value("points_per_class", std::size_t{0});
    range = config.value("range", 10L);
    std::vector<std::string> epsilons = config.value("epsilons", std::vector<std::string>{"1/2"});
    for (auto d : config.at("dimensions").get<std::vector<std::size_t>>())
      for (const auto& a : config.at("algorithms").get<std::vector<std::string>>())
        for (auto seed : config.at("seeds").get<std::vector<std::uint64_t>>()) {
          if (std::find(kAlgorithms.begin(), kAlgorithms.end(), a) == kAlgorithms.end()) {
            throw UsageError("unknown algorithm in suite: " + a);
          }
          if (a == "rebalance") {
            for (const auto& e : epsilons) add_row(d, seed, a, e);
          } else {
            add_row(d, seed, a, "");
          }
        }
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(config_path + ": " + e.what());
  }

  auto run_row = [&](BenchRow& row) {
    try {
      GenerateOptions g;
      g.seed = row.seed;
      g.dimension = row.d;
      g.classes = row.algorithm == "exact-combine" ? perfect_class_requirement(row.d) : row.d + 1;
      g.points_per_class = ppc ? ppc : row.d + 1;
      g.range = range;
      const Instance instance = generate_instance(g);
      RunOptions opts;
      opts.algorithm = row.algorithm;
      if (!row.epsilon.empty()) opts.epsilon = row.epsilon;
      const auto start = std::chrono::steady_clock::now();
      const Outcome out = run_algorithm(instance, opts, std::nullopt);
      row.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                             start)
                       .count();
      row.bound = out.bound;
      row.m = out.choice ? std::to_string(out.choice->m) : "";
      for (const char* key : {"iterations", "combinations", "swaps"}) {
        if (out.steps.contains(key)) row.iterations = out.steps[key].get<std::size_t>();
      }
      row.status = out.verified ? "ok" : "failed";
    } catch (const std::exception& e) {
      row.status = std::string("error: ") + e.what();
    }
  };

  // Rows are independent; workers pull the next index, results land in place.
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < rows.size();) run_row(rows[i]);
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::max<std::size_t>(jobs, 1); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::ostringstream csv;
  csv << "d,seed,algorithm,epsilon,m,bound,iterations,time_ms,status\n";
  for (const auto& r : rows) {
    std::string status = r.status;
    std::replace(status.begin(), status.end(), ',', ';');
    std::replace(status.begin(), status.end(), '\n', ' ');
    csv << r.d << ',' << r.seed << ',' << r.algorithm << ',' << r.epsilon << ',' << r.m << ','
        << r.bound << ',' << r.iterations << ',';
    if (timing) csv << r.millis;
    csv << ',' << status << "\n";
  }
  emit(csv.str(), output);
  const bool all_ok = std::all_of(rows.begin(), rows.end(),
                                  [](const BenchRow& r) { return r.status == "ok"; });
  return all_ok ? kVerified : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cmd = command_line(argc, argv);
  CLI::App app{"Colorful Caratheodory choices, approximations and NCP reductions"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string output;
  bool no_timing = false;

  GenerateOptions gen;
  std::string kind = "caratheodory";
  auto* generate = app.add_subcommand("generate", "Write a seeded random instance");
  generate->add_option("--seed", gen.seed, "PRNG seed");
  generate->add_option("-d,--dimension", gen.dimension, "Ambient dimension")->required();
  generate->add_option("-n,--classes", gen.classes, "Number of color classes")->required();
  std::optional<std::size_t> points_per_class;
  generate->add_option("-k,--points-per-class", points_per_class,
                       "Points per class (default d+1)");
  generate->add_option("--kind", kind, "caratheodory or ncp");
  generate->add_option("--range", gen.range, "Base coordinate range");
  generate->add_option("-o,--output", output, "Output file (default stdout)");

  std::string instance_path;
  RunOptions run_opts;
  auto* run = app.add_subcommand("run", "Run an algorithm and write a JSON report");
  run->add_option("instance", instance_path, "Instance JSON")->required();
  run->add_option("-a,--algorithm", run_opts.algorithm)
      ->required()
      ->check(CLI::IsMember(kAlgorithms));
  run->add_option("--epsilon", run_opts.epsilon, "Rational epsilon for rebalance");
  run->add_option("--max-steps", run_opts.max_steps, "Local search step limit");
  run->add_option("--pivot", run_opts.pivot, "Local search pivot rule")
      ->check(CLI::IsMember({"first", "best"}));
  run->add_option("-m", run_opts.m, "Per-class multiplicity for brute");
  run->add_option("--map", run_opts.map_path, "Reduction map; decodes the NCP choice");
  run->add_option("-o,--output", output, "Report file (default stdout)");
  run->add_flag("--no-timing", no_timing, "Omit wall-clock time from the report");

  std::string report_path;
  auto* verify = app.add_subcommand("verify", "Re-verify a report against its instance");
  verify->add_option("instance", instance_path)->required();
  verify->add_option("report", report_path)->required();

  auto* validate_cmd = app.add_subcommand("validate", "Check an instance's hypotheses");
  validate_cmd->add_option("instance", instance_path)->required();

  std::string formula_path, target = "l-ncp", map_output;
  auto* reduce = app.add_subcommand("reduce", "Build an NCP instance from a (W)CNF formula");
  reduce->add_option("formula", formula_path, "DIMACS cnf or wcnf")->required();
  reduce->add_option("-t,--target", target)->check(CLI::IsMember({"l-ncp", "g-ncp"}));
  reduce->add_option("-o,--output", output, "Instance file (default stdout)");
  reduce->add_option("--map", map_output, "Reduction map file");

  std::string config_path;
  std::size_t jobs = 1;
  auto* bench = app.add_subcommand("bench", "Run a suite and write CSV rows");
  bench->add_option("config", config_path, "Suite config JSON")->required();
  bench->add_option("-j,--jobs", jobs, "Concurrent rows");
  bench->add_option("-o,--output", output, "CSV file (default stdout)");
  bench->add_flag("--no-timing", no_timing, "Leave the time column empty");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*generate) {
      gen.points_per_class = points_per_class.value_or(gen.dimension + 1);
      return cmd_generate(gen, kind, output);
    }
    if (*run) {
      run_opts.timing = !no_timing;
      return cmd_run(instance_path, run_opts, output, cmd);
    }
    if (*verify) return cmd_verify(instance_path, report_path);
    if (*validate_cmd) return cmd_validate(instance_path);
    if (*reduce) return cmd_reduce(formula_path, target, output, map_output);
    if (*bench) return cmd_bench(config_path, jobs, output, !no_timing);
  } catch (const UsageError& e) {
    log(1, e.what());
    return kUsage;
  } catch (const PreconditionError& e) {
    log(1, e.what());
    return kDegenerate;
  } catch (const DegenerateInstance& e) {
    log(1, std::string("degenerate instance: ") + e.what());
    return kDegenerate;
  } catch (const SizeLimitExceeded& e) {
    log(1, e.what());
    return kUsage;
  } catch (const std::invalid_argument& e) {
    log(1, std::string("degenerate instance: ") + e.what());
    return kDegenerate;
  } catch (const std::exception& e) {
    log(1, std::string("failed: ") + e.what());
    return kFailed;
  }
  return kUsage;
}
