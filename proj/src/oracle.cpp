#include "ordnet/oracle.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <limits>
#include <map>

namespace ordnet {
namespace {

using Mask = std::bitset<kMaxCandidateEdges>;

// Positions are sets of candidate indices; a solution must hit all of them.
struct Search {
  std::vector<Mask> positions;
  std::vector<double> cost;
  std::size_t m = 0;
  double best = std::numeric_limits<double>::infinity();
  Mask best_set;

  // Cheapest candidate of each pairwise-disjoint open position, greedily.
  // Disjoint positions need distinct edges, so this never overestimates.
  double lower_bound(const Mask& chosen, const Mask& banned) const {
    Mask used;
    double sum = 0.0;
    for (const Mask& p : positions) {
      if ((p & chosen).any()) continue;
      const Mask open = p & ~banned;
      if ((open & used).any()) continue;
      double low = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m; ++i) {
        if (open[i]) low = std::min(low, cost[i]);
      }
      sum += low;
      used |= open;
    }
    return sum;
  }

  void run(const Mask& chosen, const Mask& banned, double spent) {
    // Branch on the open position with the fewest remaining options.
    const Mask* pick = nullptr;
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    for (const Mask& p : positions) {
      if ((p & chosen).any()) continue;
      const std::size_t k = (p & ~banned).count();
      if (k == 0) return;
      if (k < fewest) {
        fewest = k;
        pick = &p;
      }
    }
    if (pick == nullptr) {
      if (spent < best) {
        best = spent;
        best_set = chosen;
      }
      return;
    }
    if (spent + lower_bound(chosen, banned) >= best - 1e-12) return;

    std::vector<std::size_t> options;
    const Mask open = *pick & ~banned;
    for (std::size_t i = 0; i < m; ++i) {
      if (open[i]) options.push_back(i);
    }
    std::stable_sort(options.begin(), options.end(),
                     [&](std::size_t a, std::size_t b) {
                       return cost[a] < cost[b];
                     });
    // The k-th branch takes option k and bans options 0..k-1, so branches
    // are disjoint.
    Mask ban = banned;
    for (std::size_t i : options) {
      Mask next = chosen;
      next.set(i);
      run(next, ban, spent + cost[i]);
      ban.set(i);
    }
  }
};

}  // namespace

OptResult brute_force_opt(const Instance& inst) {
  std::map<Edge, std::size_t> index;
  std::vector<Edge> candidates;
  for (const auto& o : inst.constraints) {
    for (std::size_t i = 1; i < o.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        const Edge e(o[j], o[i]);
        if (index.emplace(e, candidates.size()).second) candidates.push_back(e);
      }
    }
  }
  if (candidates.size() > kMaxCandidateEdges) {
    throw OracleCapacity("instance has " + std::to_string(candidates.size()) +
                         " candidate edges; the exact search supports " +
                         std::to_string(kMaxCandidateEdges));
  }

  Search s;
  s.m = candidates.size();
  for (const Edge& e : candidates) s.cost.push_back(edge_cost(inst.costs, e));
  for (const auto& o : inst.constraints) {
    for (std::size_t i = 1; i < o.size(); ++i) {
      Mask p;
      for (std::size_t j = 0; j < i; ++j) p.set(index.at(Edge(o[j], o[i])));
      s.positions.push_back(p);
    }
  }
  // A position implied by a subset position adds nothing.
  std::sort(s.positions.begin(), s.positions.end(),
            [](const Mask& a, const Mask& b) { return a.count() < b.count(); });
  std::vector<Mask> kept;
  for (const Mask& p : s.positions) {
    const bool implied = std::any_of(kept.begin(), kept.end(), [&](const Mask& q) {
      return (q & ~p).none();
    });
    if (!implied) kept.push_back(p);
  }
  s.positions = std::move(kept);
  s.run(Mask{}, Mask{}, 0.0);

  OptResult out{EdgeSet(inst.n), 0.0};
  for (std::size_t i = 0; i < s.m; ++i) {
    if (s.best_set[i]) out.edges.add(candidates[i]);
  }
  out.cost = total_cost(out.edges, inst.costs);
  return out;
}

ReducedInstance hitting_set_reduction(const HittingSetInstance& hs,
                                      std::int32_t w_size) {
  if (w_size < 1) throw ValidationError("w_size must be at least 1");
  if (hs.universe < 1) throw ValidationError("empty universe");
  std::vector<OrderedConstraint> cs;
  for (VertexId i = 0; i < hs.universe; ++i) {
    for (VertexId j = i + 1; j < hs.universe; ++j) cs.push_back({i, j});
  }
  for (const auto& set : hs.family) {
    if (set.empty()) throw ValidationError("hitting-set family has an empty set");
    std::vector<VertexId> sorted = set;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 0 || sorted.back() >= hs.universe) {
      throw ValidationError("set element outside the universe");
    }
    for (std::int32_t l = 0; l < w_size; ++l) {
      std::vector<VertexId> order = sorted;
      order.push_back(hs.universe + l);
      cs.emplace_back(std::move(order));
    }
  }
  ReducedInstance red;
  red.universe = hs.universe;
  red.w_size = w_size;
  red.instance = Instance(hs.universe + w_size, std::move(cs));
  return red;
}

std::vector<VertexId> extract_hitting_set(const EdgeSet& e,
                                          const ReducedInstance& red,
                                          std::int32_t l) {
  if (l < 0 || l >= red.w_size) throw ValidationError("no such w vertex");
  if (!all_satisfied(red.instance.constraints, e)) {
    throw ValidationError("edge set does not satisfy the reduced instance");
  }
  std::vector<VertexId> out;
  for (VertexId u = 0; u < red.universe; ++u) {
    if (e.contains(u, red.w(l))) out.push_back(u);
  }
  return out;
}

std::int32_t brute_force_hitting_set(const HittingSetInstance& hs) {
  if (hs.universe < 0 || hs.universe > 20) {
    throw ValidationError("hitting-set oracle supports |U| <= 20");
  }
  std::vector<std::uint32_t> sets;
  for (const auto& s : hs.family) {
    std::uint32_t mask = 0;
    for (VertexId x : s) {
      if (x < 0 || x >= hs.universe) {
        throw ValidationError("set element outside the universe");
      }
      mask |= 1u << x;
    }
    if (mask == 0) throw ValidationError("hitting-set family has an empty set");
    sets.push_back(mask);
  }
  std::int32_t best = hs.universe;
  for (std::uint32_t h = 0; h < (1u << hs.universe); ++h) {
    const auto size = std::popcount(h);
    if (size >= best) continue;
    if (std::all_of(sets.begin(), sets.end(),
                    [&](std::uint32_t s) { return (s & h) != 0; })) {
      best = size;
    }
  }
  return best;
}

}  // namespace ordnet
