#include "ordnet/fractional.hpp"

#include <algorithm>
#include <limits>

namespace ordnet {

WeightMap::WeightMap(std::int32_t n)
    : n_(n),
      w_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0) {
  if (n < 0) throw ValidationError("negative vertex count");
}

std::size_t WeightMap::index(Edge e) const {
  if (e.v >= n_) {
    throw ValidationError("edge " + to_string(e) + " outside [0, " +
                          std::to_string(n_) + ")");
  }
  return static_cast<std::size_t>(e.u) * static_cast<std::size_t>(n_) +
         static_cast<std::size_t>(e.v);
}

void WeightMap::set(Edge e, double value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw ValidationError("weight outside [0, 1] on " + to_string(e));
  }
  w_[index(e)] = value;
}

std::vector<std::pair<Edge, double>> WeightMap::nonzero() const {
  std::vector<std::pair<Edge, double>> out;
  for (VertexId a = 0; a < n_; ++a) {
    for (VertexId b = a + 1; b < n_; ++b) {
      const double x = get(a, b);
      if (x > 0.0) out.emplace_back(Edge(a, b), x);
    }
  }
  return out;
}

CutCertificate min_cut_induced(const WeightMap& w,
                               const ConnectivityConstraint& s, VertexId u,
                               VertexId v) {
  if (u == v) throw ValidationError("cut endpoints must differ");
  if (!s.contains(u) || !s.contains(v)) {
    throw ValidationError("cut endpoints must belong to the vertex set");
  }
  const auto members = s.members();
  const std::size_t k = members.size();
  auto local = [&](VertexId x) {
    return static_cast<std::size_t>(
        std::lower_bound(members.begin(), members.end(), x) - members.begin());
  };
  const std::size_t src = local(u);
  const std::size_t dst = local(v);

  // Residual capacities on the dense induced graph; Edmonds-Karp.
  std::vector<double> res(k * k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const double c = w.get(members[i], members[j]);
      res[i * k + j] = c;
      res[j * k + i] = c;
    }
  }
  constexpr double kEps = 1e-12;
  std::vector<std::size_t> parent(k);
  std::vector<bool> seen(k);
  auto bfs = [&] {
    std::fill(seen.begin(), seen.end(), false);
    std::vector<std::size_t> queue{src};
    seen[src] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t a = queue[head];
      for (std::size_t b = 0; b < k; ++b) {
        if (!seen[b] && res[a * k + b] > kEps) {
          seen[b] = true;
          parent[b] = a;
          queue.push_back(b);
        }
      }
    }
    return seen[dst];
  };
  while (bfs()) {
    double push = std::numeric_limits<double>::infinity();
    for (std::size_t b = dst; b != src; b = parent[b]) {
      push = std::min(push, res[parent[b] * k + b]);
    }
    for (std::size_t b = dst; b != src; b = parent[b]) {
      res[parent[b] * k + b] -= push;
      res[b * k + parent[b]] += push;
    }
  }

  // `seen` now marks the source side of a minimum cut.
  CutCertificate cut{u, v, {}, 0.0};
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (seen[i] != seen[j]) {
        const Edge e(members[i], members[j]);
        cut.edges.push_back(e);
        cut.weight += w.get(e);
      }
    }
  }
  return cut;
}

std::size_t fractional_satisfy(WeightMap& w, const ConnectivityConstraint& s,
                               const std::optional<CostMap>& costs) {
  s.validate(w.n());
  const auto members = s.members();
  const double n2 = static_cast<double>(w.n()) * static_cast<double>(w.n());
  std::size_t updates = 0;
  bool dirty = true;
  while (dirty) {
    dirty = false;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        for (;;) {
          const auto cut = min_cut_induced(w, s, members[i], members[j]);
          if (cut.weight >= 1.0 - kCutTolerance) break;
          const double size = static_cast<double>(cut.edges.size());
          for (const Edge& e : cut.edges) {
            const double grown = w.get(e) * (1.0 + 1.0 / size) +
                                 1.0 / (size * n2 * edge_cost(costs, e));
            w.set(e, std::min(1.0, grown));
          }
          ++updates;
          dirty = true;
        }
      }
    }
  }
  return updates;
}

double fractional_cost(const WeightMap& w,
                       const std::optional<CostMap>& costs) {
  double sum = 0.0;
  for (const auto& [e, x] : w.nonzero()) sum += edge_cost(costs, e) * x;
  return sum;
}

}  // namespace ordnet
