#pragma once

// Test-only reference implementations. Nothing here calls into the pq-tree,
// the flow code or the branch-and-bound solver.

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "ordnet/model.hpp"
#include "ordnet/random.hpp"

namespace ordnet::testing_support {

using Perm = std::vector<VertexId>;

inline std::vector<Edge> all_pairs(std::int32_t n) {
  std::vector<Edge> out;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) out.emplace_back(a, b);
  }
  return out;
}

// Every ordered constraint over n vertices.
inline std::vector<OrderedConstraint> all_ordered_constraints(std::int32_t n) {
  std::vector<OrderedConstraint> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<VertexId> subset;
    for (VertexId v = 0; v < n; ++v) {
      if (mask & (1u << v)) subset.push_back(v);
    }
    if (subset.size() < 2) continue;
    do {
      out.emplace_back(subset);
    } while (std::next_permutation(subset.begin(), subset.end()));
  }
  return out;
}

inline OrderedConstraint random_constraint(std::int32_t n, SplitMix64& rng) {
  std::vector<VertexId> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  rng.shuffle(all);
  const auto len = 2 + rng.below(static_cast<std::uint64_t>(n - 1));
  all.resize(len);
  return OrderedConstraint(all);
}

inline EdgeSet random_graph(std::int32_t n, double density, SplitMix64& rng) {
  EdgeSet e(n);
  for (const Edge& p : all_pairs(n)) {
    if (rng.uniform() < density) e.add(p);
  }
  return e;
}

inline std::vector<Perm> all_permutations(std::int32_t leaves) {
  Perm p(static_cast<std::size_t>(leaves));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline bool contiguous(const Perm& p, const ConnectivityConstraint& s) {
  std::size_t first = p.size();
  std::size_t last = 0;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (s.contains(p[i])) {
      first = std::min(first, i);
      last = i;
      ++hits;
    }
  }
  return hits == s.size() && last - first + 1 == hits;
}

inline std::set<Perm> filter(const std::set<Perm>& perms,
                             const ConnectivityConstraint& s) {
  std::set<Perm> out;
  for (const auto& p : perms) {
    if (contiguous(p, s)) out.insert(p);
  }
  return out;
}

// Pairs adjacent in every permutation of a non-empty set.
inline std::set<Edge> adjacent_in_all(const std::set<Perm>& perms) {
  std::set<Edge> common;
  bool first = true;
  for (const auto& p : perms) {
    std::set<Edge> here;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) here.emplace(p[i], p[i + 1]);
    if (first) {
      common = here;
      first = false;
    } else {
      std::set<Edge> keep;
      std::set_intersection(common.begin(), common.end(), here.begin(),
                            here.end(), std::inserter(keep, keep.begin()));
      common = std::move(keep);
    }
  }
  return common;
}

// A path (as a permutation) satisfies o iff every prefix is an interval.
inline bool path_satisfies(const Perm& path, const OrderedConstraint& o) {
  for (const auto& s : expand_to_connectivity(o)) {
    if (!contiguous(path, s)) return false;
  }
  return true;
}

inline EdgeSet path_edges(const Perm& path, std::int32_t n) {
  EdgeSet e(n);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) e.add(path[i], path[i + 1]);
  return e;
}

// Minimum cost over every subset of the pairs {o[j], o[i]}, j < i. Up to 22
// such pairs.
inline double exhaustive_opt(const Instance& inst) {
  std::set<Edge> pool;
  for (const auto& o : inst.constraints) {
    for (std::size_t i = 1; i < o.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) pool.emplace(o[j], o[i]);
    }
  }
  const std::vector<Edge> cand(pool.begin(), pool.end());
  if (cand.size() > 22) throw std::length_error("exhaustive_opt: too many pairs");
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 0; mask < (1u << cand.size()); ++mask) {
    EdgeSet e(inst.n);
    double cost = 0.0;
    for (std::size_t k = 0; k < cand.size(); ++k) {
      if (mask & (1u << k)) {
        e.add(cand[k]);
        cost += edge_cost(inst.costs, cand[k]);
      }
    }
    if (cost < best && all_satisfied(inst.constraints, e)) best = cost;
  }
  return best;
}

// Lightest u-v cut of the complete graph on `members`, by trying every
// bipartition.
inline double min_cut_by_enumeration(
    const std::vector<VertexId>& members, VertexId u, VertexId v,
    const std::function<double(VertexId, VertexId)>& weight) {
  const std::size_t k = members.size();
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t side = 0; side < (1u << k); ++side) {
    auto in_side = [&](VertexId x) {
      const auto i = static_cast<std::size_t>(
          std::find(members.begin(), members.end(), x) - members.begin());
      return (side >> i) & 1u;
    };
    if (!in_side(u) || in_side(v)) continue;
    double w = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        if (((side >> i) & 1u) != ((side >> j) & 1u)) {
          w += weight(members[i], members[j]);
        }
      }
    }
    best = std::min(best, w);
  }
  return best;
}

}  // namespace ordnet::testing_support
