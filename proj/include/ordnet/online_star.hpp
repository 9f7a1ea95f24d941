#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ordnet/model.hpp"

namespace ordnet {

class NotStarConsistent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Online algorithm for inputs known to be satisfiable by a star. Until the
// centre is pinned down it keeps the two possible centres joined and shares
// the other vertices between them alternately.
class StarSolver {
 public:
  // Throws ValidationError when n < 2.
  explicit StarSolver(std::int32_t n);

  // Returns the edges added for o. Throws NotStarConsistent when no star can
  // satisfy every constraint seen so far; the solver is then unusable.
  std::vector<Edge> process(const OrderedConstraint& o);

  std::int32_t n() const { return n_; }
  const EdgeSet& edges() const { return built_; }
  std::size_t edge_count() const { return built_.size(); }

  // Possible centres, in the order of the first constraint. Empty before any
  // constraint has been seen.
  const std::vector<VertexId>& candidates() const { return candidates_; }
  std::optional<VertexId> center() const;

 private:
  std::vector<Edge> connect_to_center();

  std::int32_t n_;
  EdgeSet built_;
  std::vector<VertexId> candidates_;
  std::vector<bool> touched_;
  std::size_t next_side_ = 0;  // which candidate receives the next split vertex
  bool started_ = false;
  bool broken_ = false;
};

}  // namespace ordnet
