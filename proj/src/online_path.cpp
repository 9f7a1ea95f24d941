#include "ordnet/online_path.hpp"

#include <algorithm>

namespace ordnet {

PathSolver::PathSolver(std::int32_t n)
    : n_(n), tree_(PQTree::universal(n, /*with_dummy=*/true)), built_(n) {}

std::vector<Edge> PathSolver::process(const OrderedConstraint& o) {
  if (broken_) throw NotPathConsistent("solver already saw inconsistent input");
  o.validate(n_);

  PathCallRecord record{o, {}, {}};
  const auto prefixes = expand_to_connectivity(o);
  for (std::size_t k = 0; k < prefixes.size(); ++k) {
    const std::size_t pos = k + 1;  // position of the newest vertex in o
    PrefixReduction red;
    red.prefix = prefixes[k];
    red.potential_before = tree_.potential();
    auto trace = tree_.reduce(prefixes[k]);
    if (!trace) {
      broken_ = true;
      throw NotPathConsistent("no path is consistent with " + to_string(o) +
                              " and the earlier constraints");
    }
    red.trace = std::move(*trace);
    red.potential_after = tree_.potential();
    red.charged.assign(red.trace.steps.size(), 0);

    // Charge an edge to the last step after which it stayed forced.
    auto charge_forced = [&](Edge e) {
      for (std::size_t s = red.trace.steps.size(); s-- > 0;) {
        const auto& nf = red.trace.steps[s].new_forced;
        if (std::find(nf.begin(), nf.end(), e) != nf.end()) {
          ++red.charged[s];
          return;
        }
      }
      if (!red.charged.empty()) ++red.charged.back();
    };

    // Learned adjacencies first; they frequently satisfy the prefix already.
    for (const Edge& e : tree_.forced_adjacencies()) {
      if (e.u == tree_.dummy() || e.v == tree_.dummy()) continue;
      if (built_.add(e)) {
        red.forced_edges.push_back(e);
        record.added.push_back(e);
        charge_forced(e);
      }
    }

    bool satisfied = false;
    for (std::size_t j = 0; j < pos && !satisfied; ++j) {
      satisfied = built_.contains(o[j], o[pos]);
    }
    if (!satisfied) {
      Edge e(o[pos], o[pos - 1]);
      built_.add(e);
      red.order_edge = e;
      record.added.push_back(e);
      std::size_t s = red.trace.steps.size();
      while (s > 0 && !red.trace.steps[s - 1].structural) --s;
      if (s > 0) {
        ++red.charged[s - 1];
      } else if (!red.charged.empty()) {
        ++red.charged.back();
      }
    }

    for (const auto& step : red.trace.steps) {
      if (step.structural && step.id == Template::Q3) {
        guard_violations_.push_back("Q3 restructured the tree on " +
                                    to_string(o));
      }
    }
    for (auto& v : tree_.prefix_shape_violations()) {
      guard_violations_.push_back(std::move(v));
    }
    record.reductions.push_back(std::move(red));
  }
  auto added = record.added;
  log_.push_back(std::move(record));
  return added;
}

}  // namespace ordnet
