#include "ordnet/adversaries.hpp"

#include <cmath>
#include <stdexcept>

#include "ordnet/generators.hpp"

namespace ordnet {

ObliviousAdversary::ObliviousAdversary(std::string name, Instance instance,
                                       std::optional<EdgeSet> known_opt)
    : name_(std::move(name)),
      instance_(std::move(instance)),
      known_opt_(std::move(known_opt)) {}

std::optional<OrderedConstraint> ObliviousAdversary::next(const EdgeSet&) {
  if (cursor_ >= instance_.constraints.size()) return std::nullopt;
  return instance_.constraints[cursor_++];
}

GeneralLbInstance general_lb_instance(std::int32_t n, std::uint64_t seed) {
  if (n < 4) throw ValidationError("general lower-bound instance needs n >= 4");
  GeneralLbInstance out;
  out.m = static_cast<std::int32_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  while (out.m * out.m < n) ++out.m;  // guard against sqrt rounding
  while ((out.m - 1) * (out.m - 1) >= n) --out.m;
  const std::int32_t m = out.m;
  out.known_opt = EdgeSet(n);

  std::vector<OrderedConstraint> cs;
  for (VertexId i = 0; i < m; ++i) {
    for (VertexId j = i + 1; j < m; ++j) {
      cs.push_back({i, j});
      out.known_opt.add(i, j);
    }
  }
  SplitMix64 rng(hash_key(seed, 0x7e3));
  for (VertexId v = m; v < n; ++v) {
    auto pi = random_permutation(m, rng);
    for (std::int32_t i = m; i >= 1; --i) {
      std::vector<VertexId> order(pi.begin(), pi.begin() + i);
      order.push_back(v);
      cs.emplace_back(std::move(order));
    }
    out.known_opt.add(pi.front(), v);
    out.permutations.push_back(std::move(pi));
  }
  out.instance = Instance(n, std::move(cs));
  return out;
}

StarLbAdversary::StarLbAdversary(std::int32_t n) : n_(n) {
  if (n < 4) throw ValidationError("star adversary needs n >= 4");
}

std::optional<OrderedConstraint> StarLbAdversary::next(const EdgeSet& built) {
  if (done_) return std::nullopt;
  const VertexId i = 2 + round_;
  if (i < n_) {
    ++round_;
    return OrderedConstraint{0, 1, i};
  }
  done_ = true;
  std::size_t deg[2] = {0, 0};
  for (VertexId v = 2; v < n_; ++v) {
    deg[0] += built.contains(0, v);
    deg[1] += built.contains(1, v);
  }
  center_ = deg[1] < deg[0] ? 1 : 0;
  for (VertexId v = 2; v < n_; ++v) {
    if (!built.contains(center_, v)) return OrderedConstraint{center_, v};
  }
  return std::nullopt;
}

std::optional<EdgeSet> StarLbAdversary::known_opt() const {
  EdgeSet star(n_);
  for (VertexId v = 0; v < n_; ++v) {
    if (v != center_) star.add(center_, v);
  }
  return star;
}

PathLbAdversary::PathLbAdversary(std::int32_t n, std::uint64_t seed)
    : n_(n),
      rng_(hash_key(seed, 0x9a71)),
      shadow_(PQTree::universal(n, false)) {
  if (n < 3) throw ValidationError("path adversary needs n >= 3");
}

std::size_t pre_degree(const EdgeSet& e, VertexId v) {
  std::size_t d = 0;
  for (VertexId u = 0; u < v; ++u) d += e.contains(u, v);
  return d;
}

void PathLbAdversary::emit(const OrderedConstraint& o) {
  for (const auto& prefix : expand_to_connectivity(o)) {
    if (!shadow_.reduce(prefix)) {
      throw std::logic_error("path adversary emitted an inconsistent constraint");
    }
  }
}

std::optional<OrderedConstraint> PathLbAdversary::next(const EdgeSet& built) {
  if (!started_) {
    started_ = true;
    std::vector<VertexId> all(static_cast<std::size_t>(n_));
    for (VertexId v = 0; v < n_; ++v) all[v] = v;
    OrderedConstraint o(std::move(all));
    emit(o);
    return o;
  }
  while (next_vertex_ < n_) {
    const VertexId v = next_vertex_++;
    if (pre_degree(built, v) >= 2) continue;

    // Reservoir-sample a (path, neighbour) pair, separately for earlier and
    // later neighbours.
    std::optional<VertexId> pick[2];
    std::uint64_t count[2] = {0, 0};
    shadow_.enumerate_frontier(
        [&](const std::vector<VertexId>& p) {
          for (std::size_t k = 0; k < p.size(); ++k) {
            if (p[k] != v) continue;
            for (std::size_t side : {k - 1, k + 1}) {
              if (side >= p.size()) continue;  // wraps for k = 0
              const VertexId u = p[side];
              if (built.contains(u, v)) continue;
              const int later = u > v ? 1 : 0;
              if (rng_.below(++count[later]) == 0) pick[later] = u;
            }
            break;
          }
          return true;
        },
        kFrontierLimit);
    const std::optional<VertexId> u = pick[0] ? pick[0] : pick[1];
    if (!u) {
      throw std::logic_error("path adversary found no consistent partner for " +
                             std::to_string(v));
    }
    if (!pick[0]) ++later_rounds_;
    OrderedConstraint o{v, *u};
    emit(o);
    return o;
  }
  return std::nullopt;
}

std::optional<EdgeSet> PathLbAdversary::known_opt() const {
  const auto path = shadow_.linearize();
  EdgeSet e(n_);
  for (std::size_t k = 0; k + 1 < path.size(); ++k) e.add(path[k], path[k + 1]);
  return e;
}

}  // namespace ordnet
