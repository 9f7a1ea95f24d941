#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordnet {

using VertexId = std::int32_t;

// Raised when a constraint, edge or instance is malformed.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Unordered vertex pair, stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b);

  auto operator<=>(const Edge&) const = default;
  bool operator==(const Edge&) const = default;
};

std::string to_string(const Edge& e);

// An ordering on a subset of the vertices: every vertex after the first must
// be adjacent to some earlier one.
class OrderedConstraint {
 public:
  OrderedConstraint() = default;
  // Throws ValidationError when shorter than 2, negative or repeated.
  explicit OrderedConstraint(std::vector<VertexId> vertices);
  OrderedConstraint(std::initializer_list<VertexId> vertices);

  std::span<const VertexId> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  VertexId operator[](std::size_t i) const { return vertices_[i]; }
  VertexId max_vertex() const;

  // Throws ValidationError when some vertex is >= n.
  void validate(std::int32_t n) const;

  bool operator==(const OrderedConstraint&) const = default;

 private:
  std::vector<VertexId> vertices_;
};

std::string to_string(const OrderedConstraint& o);

// A vertex set whose induced subgraph must be connected. Members are kept
// sorted.
class ConnectivityConstraint {
 public:
  ConnectivityConstraint() = default;
  explicit ConnectivityConstraint(std::vector<VertexId> members);
  ConnectivityConstraint(std::initializer_list<VertexId> members);

  std::span<const VertexId> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(VertexId v) const;
  void validate(std::int32_t n) const;

  bool operator==(const ConnectivityConstraint&) const = default;

 private:
  std::vector<VertexId> members_;
};

// Simple undirected graph on n vertices with set semantics.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::int32_t n);
  EdgeSet(std::int32_t n, std::initializer_list<Edge> edges);

  std::int32_t n() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  // Returns true when the edge was not present before.
  bool add(Edge e);
  bool add(VertexId a, VertexId b) { return add(Edge(a, b)); }
  bool contains(Edge e) const;
  bool contains(VertexId a, VertexId b) const;
  bool adjacent(VertexId a, VertexId b) const { return contains(a, b); }

  std::vector<Edge> edges() const;  // sorted
  std::vector<VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const;

  bool operator==(const EdgeSet& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
  }

 private:
  void check(Edge e) const;
  std::int32_t n_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<Edge> edges_;
};

using CostMap = std::map<Edge, double>;

double edge_cost(const std::optional<CostMap>& costs, Edge e);

struct Instance {
  std::int32_t n = 0;
  std::vector<OrderedConstraint> constraints;
  std::optional<CostMap> costs;

  Instance() = default;
  // Validates every constraint against n and every cost > 0.
  Instance(std::int32_t n, std::vector<OrderedConstraint> constraints,
           std::optional<CostMap> costs = std::nullopt);

  std::size_t r() const { return constraints.size(); }
};

double total_cost(const EdgeSet& e, const std::optional<CostMap>& costs);

bool is_ordered_satisfied(const OrderedConstraint& o, const EdgeSet& e);

// Index of the first position (>= 1) that has no earlier neighbour.
std::optional<std::size_t> first_unsatisfied_position(
    const OrderedConstraint& o, const EdgeSet& e);

std::vector<ConnectivityConstraint> expand_to_connectivity(
    const OrderedConstraint& o);

bool is_connectivity_satisfied(const ConnectivityConstraint& s,
                               const EdgeSet& e);

bool all_satisfied(std::span<const OrderedConstraint> cs, const EdgeSet& e);

struct Violation {
  std::size_t constraint_index = 0;
  std::size_t position = 0;
};

std::optional<Violation> first_violation(std::span<const OrderedConstraint> cs,
                                         const EdgeSet& e);

}  // namespace ordnet
