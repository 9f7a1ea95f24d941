#include "ordnet/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "ordnet/oracle.hpp"
#include "ordnet/online_path.hpp"
#include "ordnet/online_star.hpp"

namespace ordnet {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return in;
}

long long to_int(const std::string& token, std::size_t line) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(token, &used);
    if (used == token.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("line " + std::to_string(line) + ": expected an integer, got '" +
                   token + "'");
}

double to_double(const std::string& token, std::size_t line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used == token.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("line " + std::to_string(line) + ": expected a number, got '" +
                   token + "'");
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

std::string number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

template <typename T>
std::string optional_field(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_floating_point_v<T>) {
    return number(*v);
  } else {
    return std::to_string(*v);
  }
}

template <typename Solver>
class Adapter : public OnlineAlgorithm {
 public:
  Adapter(std::string name, Solver solver)
      : name_(std::move(name)), solver_(std::move(solver)) {}
  std::string name() const override { return name_; }
  std::vector<Edge> process(const OrderedConstraint& o) override {
    return solver_.process(o);
  }
  const EdgeSet& edges() const override { return solver_.edges(); }
  const GeneralSolver* general() const override {
    if constexpr (std::is_same_v<Solver, GeneralSolver>) {
      return &solver_;
    } else {
      return nullptr;
    }
  }

 private:
  std::string name_;
  Solver solver_;
};

}  // namespace

InstanceFile parse_instance(std::istream& in, const std::string& base_dir) {
  InstanceFile out;
  std::optional<std::int32_t> n;
  std::optional<CostMap> costs;
  std::vector<OrderedConstraint> cs;
  std::string raw;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    const std::string text = trim(raw);
    if (text.empty()) continue;
    if (text.front() == '#') {
      const std::string tag = "# family:";
      if (text.rfind(tag, 0) == 0) out.family = trim(text.substr(tag.size()));
      continue;
    }
    const auto t = tokens(text);
    if (!n) {
      if (t.size() != 2 || t[0] != "n") {
        throw ParseError("line " + std::to_string(line) + ": expected 'n <int>'");
      }
      n = static_cast<std::int32_t>(to_int(t[1], line));
      continue;
    }
    if (t[0] == "costs") {
      if (t.size() != 2 || costs || !cs.empty()) {
        throw ParseError("line " + std::to_string(line) +
                         ": 'costs <file>' must directly follow the n line");
      }
      std::filesystem::path p(t[1]);
      if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
      costs = read_costs(p.string());
      continue;
    }
    std::vector<VertexId> order;
    for (const auto& tok : t) order.push_back(static_cast<VertexId>(to_int(tok, line)));
    try {
      cs.emplace_back(std::move(order));
    } catch (const ValidationError& e) {
      throw ParseError("line " + std::to_string(line) + ": " + e.what());
    }
  }
  if (!n) throw ParseError("missing 'n <int>' line");
  try {
    out.instance = Instance(*n, std::move(cs), std::move(costs));
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
  return out;
}

InstanceFile read_instance(const std::string& path) {
  auto in = open_or_throw(path);
  const auto dir = std::filesystem::path(path).parent_path();
  return parse_instance(in, dir.empty() ? "." : dir.string());
}

void write_instance(std::ostream& out, const Instance& inst,
                    const std::string& family,
                    const std::optional<std::string>& costs_path) {
  out << "# family: " << family << "\n";
  out << "n " << inst.n << "\n";
  if (costs_path) out << "costs " << *costs_path << "\n";
  for (const auto& o : inst.constraints) {
    for (std::size_t i = 0; i < o.size(); ++i) out << (i ? " " : "") << o[i];
    out << "\n";
  }
}

EdgeSet parse_edges(std::istream& in, std::int32_t n) {
  EdgeSet e(n);
  std::string raw;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    const std::string text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    const auto t = tokens(text);
    if (t.size() != 2) {
      throw ParseError("line " + std::to_string(line) + ": expected 'u v'");
    }
    try {
      e.add(static_cast<VertexId>(to_int(t[0], line)),
            static_cast<VertexId>(to_int(t[1], line)));
    } catch (const ValidationError& err) {
      throw ParseError("line " + std::to_string(line) + ": " + err.what());
    }
  }
  return e;
}

EdgeSet read_edges(const std::string& path, std::int32_t n) {
  auto in = open_or_throw(path);
  return parse_edges(in, n);
}

void write_edges(std::ostream& out, const EdgeSet& e) {
  for (const Edge& edge : e.edges()) out << edge.u << " " << edge.v << "\n";
}

CostMap parse_costs(std::istream& in) {
  CostMap costs;
  std::string raw;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    const std::string text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    const auto t = tokens(text);
    if (t.size() != 3) {
      throw ParseError("line " + std::to_string(line) + ": expected 'u v cost'");
    }
    try {
      costs[Edge(static_cast<VertexId>(to_int(t[0], line)),
                 static_cast<VertexId>(to_int(t[1], line)))] =
          to_double(t[2], line);
    } catch (const ValidationError& err) {
      throw ParseError("line " + std::to_string(line) + ": " + err.what());
    }
  }
  return costs;
}

CostMap read_costs(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_costs(in);
}

std::unique_ptr<OnlineAlgorithm> make_algorithm(const AlgorithmConfig& cfg) {
  if (cfg.id == "path") {
    return std::make_unique<Adapter<PathSolver>>("path", PathSolver(cfg.n));
  }
  if (cfg.id == "star") {
    return std::make_unique<Adapter<StarSolver>>("star", StarSolver(cfg.n));
  }
  if (cfg.id == "general") {
    return std::make_unique<Adapter<GeneralSolver>>(
        "general", GeneralSolver(cfg.n, cfg.general));
  }
  throw ValidationError("unknown online algorithm '" + cfg.id + "'");
}

std::unique_ptr<Adversary> make_adversary(const std::string& id,
                                          std::int32_t n, std::uint64_t seed) {
  if (id == "path-lb") return std::make_unique<PathLbAdversary>(n, seed);
  if (id == "star-lb") return std::make_unique<StarLbAdversary>(n);
  if (id == "general-lb") {
    auto g = general_lb_instance(n, seed);
    return std::make_unique<ObliviousAdversary>("general-lb",
                                                std::move(g.instance),
                                                std::move(g.known_opt));
  }
  throw ValidationError("unknown adversary '" + id + "'");
}

Transcript duel(OnlineAlgorithm& alg, Adversary& adv,
                const std::optional<CostMap>& costs) {
  Transcript t;
  std::vector<OrderedConstraint> emitted;
  double cost = 0.0;
  while (auto o = adv.next(alg.edges())) {
    Round round{*o, alg.process(*o), 0, 0.0};
    for (const Edge& e : round.added) cost += edge_cost(costs, e);
    round.cumulative_edges = alg.edges().size();
    round.cumulative_cost = cost;
    emitted.push_back(*o);
    t.rounds.push_back(std::move(round));
  }
  t.emitted = Instance(adv.n(), std::move(emitted), costs);
  t.final_edges = alg.edges();
  t.feasible = all_satisfied(t.emitted.constraints, t.final_edges);
  t.alg_cost = total_cost(t.final_edges, costs);
  return t;
}

Transcript run_offline_opt(const Instance& inst) {
  Transcript t;
  const auto opt = brute_force_opt(inst);
  Round round;
  round.added = opt.edges.edges();
  round.cumulative_edges = opt.edges.size();
  round.cumulative_cost = opt.cost;
  t.rounds.push_back(std::move(round));
  t.emitted = inst;
  t.final_edges = opt.edges;
  t.feasible = all_satisfied(inst.constraints, opt.edges);
  t.alg_cost = opt.cost;
  t.opt_cost = opt.cost;
  t.opt_source = "oracle";
  if (opt.cost > 0) t.ratio = 1.0;
  return t;
}

bool attach_opt(Transcript& t, const std::optional<EdgeSet>& known) {
  try {
    t.opt_cost = brute_force_opt(t.emitted).cost;
    t.opt_source = "oracle";
  } catch (const OracleCapacity&) {
    if (!known) return false;
    t.opt_cost = total_cost(*known, t.emitted.costs);
    t.opt_source = "known";
  }
  if (*t.opt_cost > 0) t.ratio = t.alg_cost / *t.opt_cost;
  return true;
}

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> cols = {
      "instance_id", "family",    "n",         "r",       "alg",
      "seed",        "c_param",   "t",         "alg_edges", "alg_cost",
      "opt_cost",    "ratio",     "frac_cost", "repairs_used"};
  return cols;
}

std::string csv_header(bool with_timestamp) {
  std::string out;
  for (const auto& c : csv_columns()) out += (out.empty() ? "" : ",") + c;
  if (with_timestamp) out += ",timestamp";
  return out;
}

std::string csv_line(const ResultRow& row,
                     const std::optional<std::string>& timestamp) {
  auto clean = [](std::string s) {
    std::replace(s.begin(), s.end(), ',', ';');
    return s;
  };
  std::vector<std::string> f = {clean(row.instance_id),
                                clean(row.family),
                                std::to_string(row.n),
                                std::to_string(row.r),
                                clean(row.alg),
                                std::to_string(row.seed),
                                optional_field(row.c_param),
                                optional_field(row.t),
                                std::to_string(row.alg_edges),
                                number(row.alg_cost),
                                optional_field(row.opt_cost),
                                optional_field(row.ratio),
                                optional_field(row.frac_cost),
                                optional_field(row.repairs_used)};
  if (timestamp) f.push_back(*timestamp);
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + f[i];
  return out;
}

std::vector<ResultRow> parse_csv(std::istream& in) {
  std::vector<ResultRow> rows;
  std::string raw;
  std::map<std::string, std::size_t> col;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    const std::string text = trim(raw);
    if (text.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(text);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    if (text.back() == ',') f.emplace_back();
    // Concatenated files repeat the header.
    if (col.empty() || f[0] == "instance_id") {
      col.clear();
      for (std::size_t i = 0; i < f.size(); ++i) col[f[i]] = i;
      for (const auto& c : csv_columns()) {
        if (!col.count(c)) throw ParseError("CSV header lacks column " + c);
      }
      continue;
    }
    auto get = [&](const std::string& c) -> const std::string& {
      const std::size_t i = col.at(c);
      if (i >= f.size()) {
        throw ParseError("line " + std::to_string(line) + ": too few fields");
      }
      return f[i];
    };
    auto opt_d = [&](const std::string& c) -> std::optional<double> {
      if (get(c).empty()) return std::nullopt;
      return to_double(get(c), line);
    };
    ResultRow r;
    r.instance_id = get("instance_id");
    r.family = get("family");
    r.n = static_cast<std::int32_t>(to_int(get("n"), line));
    r.r = static_cast<std::size_t>(to_int(get("r"), line));
    r.alg = get("alg");
    r.seed = static_cast<std::uint64_t>(to_int(get("seed"), line));
    r.c_param = opt_d("c_param");
    if (!get("t").empty()) r.t = static_cast<std::int32_t>(to_int(get("t"), line));
    r.alg_edges = static_cast<std::size_t>(to_int(get("alg_edges"), line));
    r.alg_cost = to_double(get("alg_cost"), line);
    r.opt_cost = opt_d("opt_cost");
    r.ratio = opt_d("ratio");
    r.frac_cost = opt_d("frac_cost");
    if (!get("repairs_used").empty()) {
      r.repairs_used = static_cast<std::size_t>(to_int(get("repairs_used"), line));
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<ReportLine> aggregate(const std::vector<ResultRow>& rows) {
  std::map<std::pair<std::string, std::string>, ReportLine> groups;
  for (const auto& r : rows) {
    auto& g = groups[{r.family, r.alg}];
    g.family = r.family;
    g.alg = r.alg;
    ++g.runs;
    g.mean_alg_cost += r.alg_cost;
    if (r.ratio) {
      ++g.rated;
      g.mean_ratio += *r.ratio;
      g.max_ratio = std::max(g.max_ratio, *r.ratio);
    }
  }
  std::vector<ReportLine> out;
  for (auto& [key, g] : groups) {
    g.mean_alg_cost /= static_cast<double>(g.runs);
    if (g.rated > 0) g.mean_ratio /= static_cast<double>(g.rated);
    out.push_back(g);
  }
  return out;
}

void write_report(std::ostream& out, const std::vector<ReportLine>& lines) {
  out << "family,alg,runs,rated,mean_ratio,max_ratio,mean_alg_cost\n";
  for (const auto& l : lines) {
    out << l.family << "," << l.alg << "," << l.runs << "," << l.rated << ",";
    if (l.rated > 0) {
      out << number(l.mean_ratio) << "," << number(l.max_ratio);
    } else {
      out << ",";
    }
    out << "," << number(l.mean_alg_cost) << "\n";
  }
}

}  // namespace ordnet
