// Command-line front end: generate instances, run algorithms against
// instances or adversaries, verify edge sets and aggregate result CSVs.

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ordnet/adversaries.hpp"
#include "ordnet/generators.hpp"
#include "ordnet/harness.hpp"
#include "ordnet/oracle.hpp"

namespace {

using namespace ordnet;

constexpr int kOk = 0;
constexpr int kInfeasible = 1;
constexpr int kUsage = 2;
constexpr int kCapacity = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GenArgs {
  std::string family;
  std::int32_t n = 0;
  std::size_t r = 4;
  std::optional<std::uint64_t> seed;
  std::size_t max_len = 0;
  std::int32_t universe = 0;
  std::string sets;
  std::int32_t wsize = 1;
  std::string out;
};

struct RunArgs {
  std::string alg;
  std::string input;
  std::string adversary;
  std::int32_t n = 0;
  std::optional<std::uint64_t> seed;
  double c_param = 2.0;
  std::optional<std::size_t> r_estimate;
  bool no_repair = false;
  std::string costs;
  std::string csv;
  std::string edges_out;
  std::string instance_id;
  bool deterministic = false;
};

struct VerifyArgs {
  std::string instance;
  std::string edges;
};

struct ReportArgs {
  std::vector<std::string> files;
  std::string out;
};

std::uint64_t need_seed(const std::optional<std::uint64_t>& seed,
                        const std::string& what) {
  if (!seed) throw UsageError("--seed is required for " + what);
  return *seed;
}

// "0,1;1,2" -> {{0,1},{1,2}}
std::vector<std::vector<VertexId>> parse_sets(const std::string& text) {
  std::vector<std::vector<VertexId>> out;
  std::stringstream sets(text);
  for (std::string set; std::getline(sets, set, ';');) {
    std::vector<VertexId> members;
    std::stringstream items(set);
    for (std::string item; std::getline(items, item, ',');) {
      try {
        members.push_back(static_cast<VertexId>(std::stoi(item)));
      } catch (const std::exception&) {
        throw UsageError("bad set element '" + item + "' in --sets");
      }
    }
    out.push_back(std::move(members));
  }
  return out;
}

int run_gen(const GenArgs& a) {
  Instance inst;
  const auto& f = a.family;
  const std::size_t max_len = a.max_len > 0 ? a.max_len : static_cast<std::size_t>(a.n);
  if (f == "general-lb") {
    inst = general_lb_instance(a.n, need_seed(a.seed, f)).instance;
  } else if (f == "random-path") {
    inst = random_path_instance(a.n, a.r, need_seed(a.seed, f)).instance;
  } else if (f == "random-star") {
    inst = random_star_instance(a.n, a.r, need_seed(a.seed, f)).instance;
  } else if (f == "random-general") {
    inst = random_general_instance(a.n, a.r, max_len, need_seed(a.seed, f));
  } else if (f == "hitting-set") {
    inst = hitting_set_reduction({a.universe, parse_sets(a.sets)}, a.wsize).instance;
  } else {
    throw UsageError("unknown family '" + f + "'");
  }
  if (a.out.empty()) {
    write_instance(std::cout, inst, f);
  } else {
    std::ofstream out(a.out);
    if (!out) throw UsageError("cannot write " + a.out);
    write_instance(out, inst, f);
  }
  return kOk;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void append_csv(const std::string& path, const ResultRow& row, bool deterministic) {
  const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
  std::ofstream out(path, std::ios::app);
  if (!out) throw UsageError("cannot write " + path);
  if (fresh) out << csv_header(!deterministic) << "\n";
  out << csv_line(row, deterministic ? std::nullopt
                                     : std::optional<std::string>(utc_timestamp()))
      << "\n";
}

int run_run(RunArgs a, bool require_adversary) {
  if (require_adversary && a.adversary.empty()) {
    throw UsageError("duel needs --adversary");
  }
  if (a.input.empty() == a.adversary.empty()) {
    throw UsageError("give exactly one of --input or --adversary");
  }

  std::optional<CostMap> costs;
  if (!a.costs.empty()) costs = read_costs(a.costs);

  ResultRow row;
  row.alg = a.alg;
  Transcript t;
  std::optional<EdgeSet> known;
  std::unique_ptr<Adversary> adv;
  Instance inst;
  if (!a.input.empty()) {
    auto file = read_instance(a.input);
    inst = std::move(file.instance);
    if (costs) inst.costs = costs;
    costs = inst.costs;
    row.family = file.family;
    row.instance_id = a.instance_id.empty() ? a.input : a.instance_id;
    row.n = inst.n;
  } else {
    if (a.n <= 0) throw UsageError("--n is required with --adversary");
    const bool seeded = a.adversary != "star-lb";
    const std::uint64_t seed =
        seeded ? need_seed(a.seed, a.adversary) : a.seed.value_or(0);
    adv = make_adversary(a.adversary, a.n, seed);
    known = adv->known_opt();
    row.family = a.adversary;
    row.instance_id = a.instance_id.empty()
                          ? a.adversary + "-n" + std::to_string(a.n) + "-s" +
                                std::to_string(seed)
                          : a.instance_id;
    row.n = a.n;
  }
  row.seed = a.seed.value_or(0);

  if (a.alg == "offline-opt") {
    if (adv) throw UsageError("offline-opt needs --input");
    try {
      t = run_offline_opt(inst);
    } catch (const OracleCapacity& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kCapacity;
    }
  } else {
    AlgorithmConfig cfg;
    cfg.n = row.n;
    cfg.id = a.alg == "offline-approx" ? "general" : a.alg;
    if (cfg.id == "general") {
      cfg.general.c_param = a.c_param;
      cfg.general.seed = need_seed(a.seed, "the general algorithm");
      cfg.general.repair = !a.no_repair;
      cfg.general.costs = costs;
      cfg.general.r_estimate = a.r_estimate;
      if (!cfg.general.r_estimate && !adv) cfg.general.r_estimate = inst.r();
    }
    auto alg = make_algorithm(cfg);
    if (!adv) adv = std::make_unique<ObliviousAdversary>(row.family, inst);
    t = duel(*alg, *adv, costs);
    if (!known) known = adv->known_opt();
    if (!attach_opt(t, known)) {
      std::cerr << "warning: instance too large for the exact oracle and no "
                   "known optimum; ratio omitted\n";
    }
    if (const auto* g = alg->general()) {
      row.c_param = a.c_param;
      row.t = g->t();
      row.frac_cost = fractional_cost(g->weights(), costs);
      row.repairs_used = g->repairs_used();
    }
  }

  row.r = t.emitted.r();
  row.alg_edges = t.final_edges.size();
  row.alg_cost = t.alg_cost;
  row.opt_cost = t.opt_cost;
  row.ratio = t.ratio;

  std::cout << "alg=" << row.alg << " family=" << row.family << " n=" << row.n
            << " r=" << row.r << "\n";
  std::cout << "alg_edges=" << row.alg_edges << " alg_cost=" << row.alg_cost;
  if (row.opt_cost) std::cout << " opt_cost=" << *row.opt_cost << " (" << t.opt_source << ")";
  if (row.ratio) std::cout << " ratio=" << *row.ratio;
  std::cout << "\n";

  if (!a.edges_out.empty()) {
    std::ofstream out(a.edges_out);
    if (!out) throw UsageError("cannot write " + a.edges_out);
    write_edges(out, t.final_edges);
  }
  if (!a.csv.empty()) append_csv(a.csv, row, a.deterministic);

  if (!t.feasible) {
    const auto v = first_violation(t.emitted.constraints, t.final_edges);
    std::cerr << "error: final graph violates constraint " << v->constraint_index
              << " at position " << v->position << "\n";
    return kInfeasible;
  }
  return kOk;
}

int run_verify(const VerifyArgs& a) {
  const auto file = read_instance(a.instance);
  const auto edges = read_edges(a.edges, file.instance.n);
  const auto v = first_violation(file.instance.constraints, edges);
  if (!v) {
    std::cout << "ok: " << file.instance.r() << " constraints satisfied by "
              << edges.size() << " edges\n";
    return kOk;
  }
  std::cout << "violated: constraint " << v->constraint_index << " "
            << to_string(file.instance.constraints[v->constraint_index])
            << " at position " << v->position << "\n";
  return kInfeasible;
}

int run_report(const ReportArgs& a) {
  std::vector<ResultRow> rows;
  for (const auto& path : a.files) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    auto more = parse_csv(in);
    rows.insert(rows.end(), more.begin(), more.end());
  }
  const auto lines = aggregate(rows);
  if (a.out.empty()) {
    write_report(std::cout, lines);
  } else {
    std::ofstream out(a.out);
    if (!out) throw UsageError("cannot write " + a.out);
    write_report(out, lines);
  }
  return kOk;
}

void add_run_options(CLI::App* cmd, RunArgs& a) {
  cmd->add_option("--alg", a.alg, "general, star, path, offline-opt or offline-approx")
      ->required()
      ->check(CLI::IsMember({"general", "star", "path", "offline-opt", "offline-approx"}));
  cmd->add_option("--input", a.input, "instance file");
  cmd->add_option("--adversary", a.adversary, "path-lb, star-lb or general-lb")
      ->check(CLI::IsMember({"path-lb", "star-lb", "general-lb"}));
  cmd->add_option("--n", a.n, "vertex count for adversaries");
  cmd->add_option("--seed", a.seed, "seed for randomized runs");
  cmd->add_option("--c", a.c_param, "c for the general algorithm (> 1)");
  cmd->add_option("--r-estimate", a.r_estimate, "expected constraint count");
  cmd->add_flag("--no-repair", a.no_repair, "disable the repair step");
  cmd->add_option("--costs", a.costs, "cost file (u v cost per line)");
  cmd->add_option("--csv", a.csv, "append a result row to this CSV");
  cmd->add_option("--edges-out", a.edges_out, "write the final edge set");
  cmd->add_option("--instance-id", a.instance_id, "id recorded in the CSV");
  cmd->add_flag("--deterministic", a.deterministic, "omit the timestamp column");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ordered-constraint network construction experiments"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate an instance file");
  gen_cmd->add_option("--family", gen.family,
                      "general-lb, random-path, random-star, random-general or hitting-set")
      ->required();
  gen_cmd->add_option("--n", gen.n, "vertex count");
  gen_cmd->add_option("--r", gen.r, "constraint count for random families");
  gen_cmd->add_option("--seed", gen.seed, "seed");
  gen_cmd->add_option("--max-len", gen.max_len, "longest constraint (random-general)");
  gen_cmd->add_option("--universe", gen.universe, "hitting-set universe size");
  gen_cmd->add_option("--sets", gen.sets, "hitting-set family, e.g. \"0,1;1,2\"");
  gen_cmd->add_option("--wsize", gen.wsize, "number of w vertices");
  gen_cmd->add_option("--out", gen.out, "output file (default stdout)");

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "run an algorithm on an instance or adversary");
  add_run_options(run_cmd, run);
  RunArgs duel_args;
  auto* duel_cmd = app.add_subcommand("duel", "run an algorithm against an adversary");
  add_run_options(duel_cmd, duel_args);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "check an edge set against an instance");
  verify_cmd->add_option("--instance", verify.instance)->required();
  verify_cmd->add_option("--edges", verify.edges)->required();

  ReportArgs report;
  auto* report_cmd = app.add_subcommand("report", "aggregate result CSVs");
  report_cmd->add_option("files", report.files, "CSV files")->required();
  report_cmd->add_option("--out", report.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*run_cmd) return run_run(run, false);
    if (*duel_cmd) return run_run(duel_args, true);
    if (*verify_cmd) return run_verify(verify);
    if (*report_cmd) return run_report(report);
  } catch (const OracleCapacity& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCapacity;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInfeasible;
  }
  return kUsage;
}
