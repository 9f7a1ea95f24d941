#include "ordnet/online_general.hpp"

#include <algorithm>
#include <cmath>

#include "ordnet/random.hpp"

namespace ordnet {

std::int32_t threshold_count(std::int32_t n, double c_param,
                             std::size_t r_estimate) {
  if (!(c_param > 1.0)) throw ValidationError("c_param must exceed 1");
  if (n < 2) throw ValidationError("need at least 2 vertices");
  if (r_estimate < 1) throw ValidationError("r_estimate must be at least 1");
  const double t = std::ceil(
      c_param * (std::log(static_cast<double>(n)) +
                 std::log(static_cast<double>(r_estimate))));
  return std::max<std::int32_t>(1, static_cast<std::int32_t>(t));
}

GeneralSolver::GeneralSolver(std::int32_t n, GeneralOptions options)
    : n_(n), options_(std::move(options)), w_(n), built_(n) {
  set_estimate(options_.r_estimate.value_or(1));
}

void GeneralSolver::set_estimate(std::size_t r) {
  t_ = threshold_count(n_, options_.c_param, r);
  r_estimate_ = r;
  thresholds_.clear();
}

double GeneralSolver::threshold(Edge e) const {
  if (e.v >= n_) throw ValidationError("edge outside the vertex range");
  auto it = thresholds_.find(e);
  if (it != thresholds_.end()) return it->second;
  const std::uint64_t key = (static_cast<std::uint64_t>(e.u) << 32) |
                            static_cast<std::uint32_t>(e.v);
  double low = 1.0;
  for (std::int32_t i = 0; i < t_; ++i) {
    low = std::min(low, to_unit(hash_key(options_.seed, key,
                                         static_cast<std::uint64_t>(i))));
  }
  thresholds_.emplace(e, low);
  return low;
}

std::vector<Edge> GeneralSolver::process(const OrderedConstraint& o) {
  o.validate(n_);
  ++seen_;
  if (!options_.r_estimate && seen_ > r_estimate_) {
    std::size_t r = r_estimate_;
    while (r < seen_) r *= 2;
    set_estimate(r);  // edges already built stay
  }

  GeneralCallRecord record;
  for (const auto& prefix : expand_to_connectivity(o)) {
    record.cut_updates += fractional_satisfy(w_, prefix, options_.costs);
    const auto m = prefix.members();
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        const Edge e(m[i], m[j]);
        if (w_.get(e) >= threshold(e) && built_.add(e)) {
          record.rounded.push_back(e);
        }
      }
    }
  }

  for (std::size_t i = 1; i < o.size(); ++i) {
    bool ok = false;
    for (std::size_t j = 0; j < i && !ok; ++j) ok = built_.contains(o[j], o[i]);
    if (ok) continue;
    ++record.unsatisfied_after_rounding;
    if (!options_.repair) continue;
    // Heaviest earlier partner; ties go to the smallest vertex id.
    VertexId best = o[0];
    for (std::size_t j = 1; j < i; ++j) {
      const double a = w_.get(o[j], o[i]);
      const double b = w_.get(best, o[i]);
      if (a > b || (a == b && o[j] < best)) best = o[j];
    }
    built_.add(best, o[i]);
    record.repaired.emplace_back(best, o[i]);
    ++repairs_;
  }
  if (record.unsatisfied_after_rounding > 0) ++rounding_failures_;

  std::vector<Edge> added = record.rounded;
  added.insert(added.end(), record.repaired.begin(), record.repaired.end());
  log_.push_back(std::move(record));
  return added;
}

}  // namespace ordnet
