#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordnet/adversaries.hpp"
#include "ordnet/model.hpp"
#include "ordnet/online_general.hpp"

namespace ordnet {

// Malformed instance, edge, cost or CSV text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Files. Instances are line oriented: '#' comments, then "n <int>", an
// optional "costs <file>", then one constraint per line. A "# family: <name>"
// comment names the generator. Edge files hold "u v" lines and cost files
// "u v cost" lines.

struct InstanceFile {
  Instance instance;
  std::string family = "file";
};

// `base_dir` resolves a relative costs path.
InstanceFile parse_instance(std::istream& in, const std::string& base_dir = ".");
InstanceFile read_instance(const std::string& path);
void write_instance(std::ostream& out, const Instance& inst,
                    const std::string& family,
                    const std::optional<std::string>& costs_path = {});

EdgeSet parse_edges(std::istream& in, std::int32_t n);
EdgeSet read_edges(const std::string& path, std::int32_t n);
void write_edges(std::ostream& out, const EdgeSet& e);

CostMap parse_costs(std::istream& in);
CostMap read_costs(const std::string& path);

// ---------------------------------------------------------------------------
// Algorithms behind one interface so duels and batch runs treat them alike.

class OnlineAlgorithm {
 public:
  virtual ~OnlineAlgorithm() = default;
  virtual std::string name() const = 0;
  virtual std::vector<Edge> process(const OrderedConstraint& o) = 0;
  virtual const EdgeSet& edges() const = 0;
  // Set only for the general algorithm.
  virtual const GeneralSolver* general() const { return nullptr; }
};

struct AlgorithmConfig {
  std::string id;  // general, star, path
  std::int32_t n = 0;
  GeneralOptions general;
};

// Throws ValidationError for an unknown id.
std::unique_ptr<OnlineAlgorithm> make_algorithm(const AlgorithmConfig& cfg);

// Adversary by CLI name: path-lb, star-lb, general-lb.
std::unique_ptr<Adversary> make_adversary(const std::string& id,
                                          std::int32_t n, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Runs.

struct Round {
  OrderedConstraint constraint;
  std::vector<Edge> added;
  std::size_t cumulative_edges = 0;
  double cumulative_cost = 0.0;
};

struct Transcript {
  std::vector<Round> rounds;
  Instance emitted;  // every constraint handed out, in order
  EdgeSet final_edges;
  bool feasible = false;
  double alg_cost = 0.0;
  std::optional<double> opt_cost;
  std::string opt_source;  // "oracle", "known", or empty
  std::optional<double> ratio;
};

// Feeds the adversary's constraints to the algorithm until it stops.
Transcript duel(OnlineAlgorithm& alg, Adversary& adv,
                const std::optional<CostMap>& costs = {});

// Offline optimum of a whole instance, as a transcript with one round.
Transcript run_offline_opt(const Instance& inst);

// Fills opt_cost and ratio: exact oracle when it fits, else `known`.
// Returns false when neither is available.
bool attach_opt(Transcript& t, const std::optional<EdgeSet>& known);

// ---------------------------------------------------------------------------
// CSV.

struct ResultRow {
  std::string instance_id;
  std::string family;
  std::int32_t n = 0;
  std::size_t r = 0;
  std::string alg;
  std::uint64_t seed = 0;
  std::optional<double> c_param;
  std::optional<std::int32_t> t;
  std::size_t alg_edges = 0;
  double alg_cost = 0.0;
  std::optional<double> opt_cost;
  std::optional<double> ratio;
  std::optional<double> frac_cost;
  std::optional<std::size_t> repairs_used;
};

const std::vector<std::string>& csv_columns();
std::string csv_header(bool with_timestamp);
std::string csv_line(const ResultRow& row,
                     const std::optional<std::string>& timestamp = {});
std::vector<ResultRow> parse_csv(std::istream& in);

struct ReportLine {
  std::string family;
  std::string alg;
  std::size_t runs = 0;
  std::size_t rated = 0;  // rows with a ratio
  double mean_ratio = 0.0;
  double max_ratio = 0.0;
  double mean_alg_cost = 0.0;
};

// Per (family, alg) aggregates, sorted by family then alg.
std::vector<ReportLine> aggregate(const std::vector<ResultRow>& rows);
void write_report(std::ostream& out, const std::vector<ReportLine>& lines);

}  // namespace ordnet
