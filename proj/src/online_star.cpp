#include "ordnet/online_star.hpp"

#include <algorithm>

namespace ordnet {

StarSolver::StarSolver(std::int32_t n) : n_(n), built_(n), touched_(n, false) {
  if (n < 2) throw ValidationError("star solver needs at least 2 vertices");
}

std::optional<VertexId> StarSolver::center() const {
  if (candidates_.size() == 1) return candidates_.front();
  return std::nullopt;
}

std::vector<Edge> StarSolver::process(const OrderedConstraint& o) {
  if (broken_) throw NotStarConsistent("solver already saw inconsistent input");
  o.validate(n_);
  for (VertexId v : o.vertices()) touched_[v] = true;

  // A star satisfying o has {o[0], o[1]} as an edge, so its centre is one of
  // the two.
  if (!started_) {
    candidates_ = {o[0], o[1]};
    started_ = true;
  } else {
    std::erase_if(candidates_,
                  [&](VertexId c) { return c != o[0] && c != o[1]; });
  }
  if (candidates_.empty()) {
    broken_ = true;
    throw NotStarConsistent("no star centre is consistent with " +
                            to_string(o));
  }

  if (candidates_.size() == 1) return connect_to_center();

  std::vector<Edge> added;
  const VertexId a = candidates_[0];
  const VertexId b = candidates_[1];
  if (built_.add(a, b)) added.emplace_back(a, b);
  for (std::size_t i = 2; i < o.size(); ++i) {
    const VertexId v = o[i];
    if (built_.contains(v, a) || built_.contains(v, b)) continue;
    const VertexId c = candidates_[next_side_];
    next_side_ ^= 1;
    built_.add(v, c);
    added.emplace_back(v, c);
  }
  return added;
}

// Joins the centre to every touched vertex. The centre is o[0] or o[1] of the
// current constraint, so this satisfies it too.
std::vector<Edge> StarSolver::connect_to_center() {
  const VertexId c = candidates_.front();
  std::vector<Edge> added;
  for (VertexId v = 0; v < n_; ++v) {
    if (v != c && touched_[v] && built_.add(v, c)) added.emplace_back(v, c);
  }
  return added;
}

}  // namespace ordnet
