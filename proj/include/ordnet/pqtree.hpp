#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordnet/model.hpp"

namespace ordnet {

// Booth-Lueker reduction templates. P4 and P6 are split by whether the
// pertinent-root p-node survives (1) or is removed (2).
enum class Template {
  P0, P1, P2, P3, P4_1, P4_2, P5, P6_1, P6_2, Q0, Q1, Q2, Q3
};

std::string_view template_name(Template t);

// P0, P1, Q0, Q1 only relabel nodes.
constexpr bool is_relabelling(Template t) {
  return t == Template::P0 || t == Template::P1 || t == Template::Q0 ||
         t == Template::Q1;
}

struct TreeStats {
  std::int64_t sum_cp = 0;  // total child count over p-nodes
  std::int64_t num_p = 0;
  std::int64_t num_q = 0;

  bool operator==(const TreeStats&) const = default;
  TreeStats operator-(const TreeStats& o) const {
    return {sum_cp - o.sum_cp, num_p - o.num_p, num_q - o.num_q};
  }
  TreeStats& operator+=(const TreeStats& o) {
    sum_cp += o.sum_cp;
    num_p += o.num_p;
    num_q += o.num_q;
    return *this;
  }
};

struct PotentialCoefficients {
  std::int64_t a = 2;
  std::int64_t b = -3;
  std::int64_t c = 1;

  std::int64_t apply(const TreeStats& s) const {
    return a * s.sum_cp + b * s.num_p + c * s.num_q;
  }
};

struct TraceStep {
  Template id = Template::P1;
  TreeStats delta;
  // False when the template matched but left the tree unchanged (a q-node
  // whose pertinent children are already consecutive and full).
  bool structural = false;
  // Leaf pairs that are forced after this step but were not before it.
  std::vector<Edge> new_forced;

  std::int64_t potential_drop(const PotentialCoefficients& k = {}) const {
    return -k.apply(delta);
  }
};

struct ReductionTrace {
  std::vector<TraceStep> steps;

  TreeStats total_delta() const;
};

class Infeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// PQ-tree over the leaves {0, ..., n-1} and optionally one dummy leaf whose
// label is n. Leaves are stored once; internal nodes live in an arena.
class PQTree {
 public:
  enum class Kind : std::uint8_t { Leaf, P, Q };

  // Root p-node over every leaf. Throws ValidationError when n < 2.
  static PQTree universal(std::int32_t n, bool with_dummy);

  // Parses the debug form, e.g. "P(0, Q(1, 2, 3), D)". Leaves must be exactly
  // 0..n-1, plus D at most once.
  static PQTree parse(std::string_view text);

  std::int32_t vertex_count() const { return n_; }
  bool has_dummy() const { return with_dummy_; }
  VertexId dummy() const { return n_; }
  std::int32_t leaf_count() const { return n_ + (with_dummy_ ? 1 : 0); }

  // Restricts the frontier to the permutations in which s is consecutive.
  // Returns std::nullopt and leaves the tree untouched when no such
  // permutation exists. Throws ValidationError if s names the dummy or a
  // vertex >= n.
  std::optional<ReductionTrace> reduce(const ConnectivityConstraint& s);

  TreeStats stats() const;
  std::int64_t potential(const PotentialCoefficients& k = {}) const {
    return k.apply(stats());
  }

  // Every leaf order the tree represents. Exponential; refuses more than
  // kMaxFrontierLeaves leaves.
  static constexpr std::int32_t kMaxFrontierLeaves = 8;
  std::set<std::vector<VertexId>> frontier() const;

  // Streams frontier members to `visit` until it returns false or `limit`
  // members were produced. No leaf-count restriction. Returns the number
  // visited.
  std::size_t enumerate_frontier(
      const std::function<bool(const std::vector<VertexId>&)>& visit,
      std::size_t limit) const;

  // Leaf pairs adjacent in every frontier member.
  std::vector<Edge> forced_adjacencies() const;

  // Leaves in stored order; always a frontier member.
  std::vector<VertexId> linearize() const;

  std::string to_string() const;

  // Structural invariants: p-nodes >= 2 children, q-nodes >= 3, parent links,
  // each leaf exactly once. Empty when valid.
  std::vector<std::string> structure_violations() const;

  // Shape restrictions expected while reducing by ordered-constraint prefixes:
  // only the root p-node may have more than two children, every non-root
  // p-node has a leaf child, and no two adjacent q-node children are both
  // internal.
  std::vector<std::string> prefix_shape_violations() const;

 private:
  enum class Label : std::uint8_t { Empty, Full, Partial };

  struct Node {
    Kind kind = Kind::Leaf;
    VertexId leaf = -1;
    std::int32_t parent = -1;
    std::vector<std::int32_t> children;
    bool alive = true;
  };

  struct Reducer;

  PQTree() = default;
  std::int32_t new_node(Kind kind, VertexId leaf = -1);
  void compact();
  std::string subtree_string(std::int32_t id) const;
  std::set<Edge> forced_set() const;

  std::vector<Node> nodes_;
  std::vector<std::int32_t> leaf_node_;  // label -> node index
  std::int32_t root_ = -1;
  std::int32_t n_ = 0;
  bool with_dummy_ = false;
};

// Value form of PQTree::reduce.
std::optional<std::pair<PQTree, ReductionTrace>> reduce(
    const PQTree& t, const ConnectivityConstraint& s);

}  // namespace ordnet
