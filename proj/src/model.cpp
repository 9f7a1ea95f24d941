#include "ordnet/model.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ordnet {

Edge::Edge(VertexId a, VertexId b) : u(std::min(a, b)), v(std::max(a, b)) {
  if (a == b) {
    throw ValidationError("self-loop on vertex " + std::to_string(a));
  }
  if (u < 0) throw ValidationError("negative vertex id");
}

std::string to_string(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

OrderedConstraint::OrderedConstraint(std::vector<VertexId> vertices)
    : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) {
    throw ValidationError("ordered constraint needs at least 2 vertices");
  }
  std::vector<VertexId> sorted = vertices_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 0) throw ValidationError("negative vertex id");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ValidationError("ordered constraint repeats a vertex");
  }
}

OrderedConstraint::OrderedConstraint(std::initializer_list<VertexId> vertices)
    : OrderedConstraint(std::vector<VertexId>(vertices)) {}

VertexId OrderedConstraint::max_vertex() const {
  return *std::max_element(vertices_.begin(), vertices_.end());
}

void OrderedConstraint::validate(std::int32_t n) const {
  if (max_vertex() >= n) {
    throw ValidationError("constraint " + to_string(*this) +
                          " references a vertex >= n=" + std::to_string(n));
  }
}

std::string to_string(const OrderedConstraint& o) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < o.size(); ++i) {
    if (i) out << ",";
    out << o[i];
  }
  out << ")";
  return out.str();
}

ConnectivityConstraint::ConnectivityConstraint(std::vector<VertexId> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (members_.size() < 2) {
    throw ValidationError("connectivity constraint needs at least 2 vertices");
  }
  if (members_.front() < 0) throw ValidationError("negative vertex id");
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw ValidationError("connectivity constraint repeats a vertex");
  }
}

ConnectivityConstraint::ConnectivityConstraint(
    std::initializer_list<VertexId> members)
    : ConnectivityConstraint(std::vector<VertexId>(members)) {}

bool ConnectivityConstraint::contains(VertexId v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void ConnectivityConstraint::validate(std::int32_t n) const {
  if (members_.back() >= n) {
    throw ValidationError("connectivity constraint references a vertex >= n");
  }
}

EdgeSet::EdgeSet(std::int32_t n) : n_(n) {
  if (n < 0) throw ValidationError("negative vertex count");
  adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

EdgeSet::EdgeSet(std::int32_t n, std::initializer_list<Edge> edges)
    : EdgeSet(n) {
  for (const Edge& e : edges) add(e);
}

void EdgeSet::check(Edge e) const {
  if (e.v >= n_) {
    throw ValidationError("edge " + to_string(e) + " outside n=" +
                          std::to_string(n_));
  }
}

bool EdgeSet::add(Edge e) {
  check(e);
  auto& cell = adj_[static_cast<std::size_t>(e.u) * n_ + e.v];
  if (cell) return false;
  cell = 1;
  adj_[static_cast<std::size_t>(e.v) * n_ + e.u] = 1;
  edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), e), e);
  return true;
}

bool EdgeSet::contains(Edge e) const {
  if (e.v >= n_) return false;
  return adj_[static_cast<std::size_t>(e.u) * n_ + e.v] != 0;
}

bool EdgeSet::contains(VertexId a, VertexId b) const {
  if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_) return false;
  return adj_[static_cast<std::size_t>(a) * n_ + b] != 0;
}

std::vector<Edge> EdgeSet::edges() const { return edges_; }

std::vector<VertexId> EdgeSet::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for (VertexId w = 0; w < n_; ++w) {
    if (contains(v, w)) out.push_back(w);
  }
  return out;
}

std::size_t EdgeSet::degree(VertexId v) const { return neighbors(v).size(); }

double edge_cost(const std::optional<CostMap>& costs, Edge e) {
  if (!costs) return 1.0;
  auto it = costs->find(e);
  return it == costs->end() ? 1.0 : it->second;
}

Instance::Instance(std::int32_t n_, std::vector<OrderedConstraint> constraints_,
                   std::optional<CostMap> costs_)
    : n(n_), constraints(std::move(constraints_)), costs(std::move(costs_)) {
  if (n < 0) throw ValidationError("negative vertex count");
  for (const auto& o : constraints) o.validate(n);
  if (costs) {
    for (const auto& [e, c] : *costs) {
      if (e.v >= n) throw ValidationError("cost on edge outside instance");
      if (!(c > 0)) throw ValidationError("edge costs must be positive");
    }
  }
}

double total_cost(const EdgeSet& e, const std::optional<CostMap>& costs) {
  double sum = 0;
  for (const Edge& edge : e.edges()) sum += edge_cost(costs, edge);
  return sum;
}

std::optional<std::size_t> first_unsatisfied_position(
    const OrderedConstraint& o, const EdgeSet& e) {
  o.validate(e.n());
  for (std::size_t i = 1; i < o.size(); ++i) {
    bool ok = false;
    for (std::size_t j = 0; j < i && !ok; ++j) ok = e.contains(o[j], o[i]);
    if (!ok) return i;
  }
  return std::nullopt;
}

bool is_ordered_satisfied(const OrderedConstraint& o, const EdgeSet& e) {
  return !first_unsatisfied_position(o, e).has_value();
}

std::vector<ConnectivityConstraint> expand_to_connectivity(
    const OrderedConstraint& o) {
  std::vector<ConnectivityConstraint> out;
  out.reserve(o.size() - 1);
  std::vector<VertexId> prefix{o[0]};
  for (std::size_t i = 1; i < o.size(); ++i) {
    prefix.push_back(o[i]);
    out.emplace_back(prefix);
  }
  return out;
}

bool is_connectivity_satisfied(const ConnectivityConstraint& s,
                               const EdgeSet& e) {
  s.validate(e.n());
  auto members = s.members();
  std::vector<bool> seen(members.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (!seen[j] && e.contains(members[i], members[j])) {
        seen[j] = true;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  return reached == members.size();
}

std::optional<Violation> first_violation(std::span<const OrderedConstraint> cs,
                                         const EdgeSet& e) {
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (auto pos = first_unsatisfied_position(cs[k], e)) {
      return Violation{k, *pos};
    }
  }
  return std::nullopt;
}

bool all_satisfied(std::span<const OrderedConstraint> cs, const EdgeSet& e) {
  return !first_violation(cs, e).has_value();
}

}  // namespace ordnet
