#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ordnet/fractional.hpp"
#include "ordnet/model.hpp"

namespace ordnet {

// t = ceil(c (ln n + ln r)), at least 1. Throws ValidationError when
// c <= 1, n < 2 or r < 1.
std::int32_t threshold_count(std::int32_t n, double c_param,
                             std::size_t r_estimate);

struct GeneralOptions {
  double c_param = 2.0;
  // Number of constraints expected. When absent the estimate starts at 1 and
  // doubles whenever more constraints arrive, recomputing t.
  std::optional<std::size_t> r_estimate;
  std::uint64_t seed = 0;
  // Completes any position rounding left unsatisfied. Disable to observe pure
  // threshold rounding.
  bool repair = true;
  std::optional<CostMap> costs;
};

struct GeneralCallRecord {
  std::vector<Edge> rounded;   // added because w_e >= T(e)
  std::vector<Edge> repaired;  // added by the repair step
  std::size_t unsatisfied_after_rounding = 0;  // positions
  std::size_t cut_updates = 0;
};

// Randomized online algorithm for arbitrary instances: maintain a fractional
// solution over every prefix and include an edge once its weight reaches a
// random threshold T(e), the minimum of t uniform draws.
class GeneralSolver {
 public:
  GeneralSolver(std::int32_t n, GeneralOptions options);

  std::vector<Edge> process(const OrderedConstraint& o);

  // X(e, i) are counter-based draws keyed by (seed, e, i), so T(e) for a
  // larger t is the minimum over a superset of the same draws.
  double threshold(Edge e) const;

  std::int32_t n() const { return n_; }
  std::int32_t t() const { return t_; }
  std::size_t r_estimate() const { return r_estimate_; }
  const GeneralOptions& options() const { return options_; }
  const WeightMap& weights() const { return w_; }
  const EdgeSet& edges() const { return built_; }
  std::size_t edge_count() const { return built_.size(); }
  std::size_t repairs_used() const { return repairs_; }
  // Constraints whose rounding alone left some position unsatisfied.
  std::size_t rounding_failures() const { return rounding_failures_; }
  const std::vector<GeneralCallRecord>& log() const { return log_; }

 private:
  void set_estimate(std::size_t r);

  std::int32_t n_;
  GeneralOptions options_;
  std::size_t r_estimate_ = 1;
  std::int32_t t_ = 1;
  WeightMap w_;
  EdgeSet built_;
  mutable std::map<Edge, double> thresholds_;
  std::size_t seen_ = 0;
  std::size_t repairs_ = 0;
  std::size_t rounding_failures_ = 0;
  std::vector<GeneralCallRecord> log_;
};

}  // namespace ordnet
