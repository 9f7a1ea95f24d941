#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordnet/model.hpp"
#include "ordnet/pqtree.hpp"

namespace ordnet {

class NotPathConsistent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One prefix reduction inside a PathSolver::process call.
struct PrefixReduction {
  ConnectivityConstraint prefix;
  ReductionTrace trace;
  std::vector<Edge> forced_edges;   // learned adjacencies added
  std::optional<Edge> order_edge;   // {o[i], o[i-1]} when still unsatisfied
  // Edges charged to each trace step (same length as trace.steps).
  std::vector<std::int64_t> charged;
  std::int64_t potential_before = 0;
  std::int64_t potential_after = 0;
};

struct PathCallRecord {
  OrderedConstraint constraint;
  std::vector<PrefixReduction> reductions;
  std::vector<Edge> added;
};

// Online algorithm for inputs known to be consistent with some Hamiltonian
// path. Keeps a pq-tree over the n vertices plus a dummy leaf and reduces it
// by every prefix of each incoming constraint.
class PathSolver {
 public:
  // Throws ValidationError when n < 2.
  explicit PathSolver(std::int32_t n);

  // Returns the edges added for o. Throws NotPathConsistent when the
  // constraints seen so far admit no common path; the solver is then unusable.
  std::vector<Edge> process(const OrderedConstraint& o);

  std::int32_t n() const { return n_; }
  std::size_t edge_count() const { return built_.size(); }
  const EdgeSet& edges() const { return built_; }
  const PQTree& tree() const { return tree_; }
  const std::vector<PathCallRecord>& log() const { return log_; }

  // Shape guards that failed after some reduction (prefix_shape_violations of
  // the tree, or a restructuring Q3).
  const std::vector<std::string>& guard_violations() const {
    return guard_violations_;
  }

 private:
  std::int32_t n_;
  PQTree tree_;
  EdgeSet built_;
  std::vector<PathCallRecord> log_;
  std::vector<std::string> guard_violations_;
  bool broken_ = false;
};

}  // namespace ordnet
