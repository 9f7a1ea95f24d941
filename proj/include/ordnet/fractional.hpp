#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ordnet/model.hpp"

namespace ordnet {

// Edge weights in [0, 1] over all vertex pairs of [0, n); absent pairs are 0.
class WeightMap {
 public:
  WeightMap() = default;
  explicit WeightMap(std::int32_t n);

  std::int32_t n() const { return n_; }
  double get(Edge e) const { return w_[index(e)]; }
  double get(VertexId a, VertexId b) const { return get(Edge(a, b)); }
  // Throws ValidationError outside [0, 1].
  void set(Edge e, double value);

  // Pairs with positive weight, sorted.
  std::vector<std::pair<Edge, double>> nonzero() const;

 private:
  std::size_t index(Edge e) const;
  std::int32_t n_ = 0;
  std::vector<double> w_;
};

struct CutCertificate {
  VertexId u = 0;
  VertexId v = 0;
  std::vector<Edge> edges;  // every pair across the partition, sorted
  double weight = 0.0;
};

// Minimum u-v cut of the complete graph on s weighted by w, computed from a
// maximum flow confined to s. Throws ValidationError unless u != v and both
// are in s.
CutCertificate min_cut_induced(const WeightMap& w,
                               const ConnectivityConstraint& s, VertexId u,
                               VertexId v);

// Cuts lighter than this count as violated; absorbs rounding in the flow.
inline constexpr double kCutTolerance = 1e-9;

// Raises weights until every pair of s has induced max-flow >= 1. Each
// violated cut C gets w_e <- min(1, w_e (1 + 1/|C|) + 1/(|C| n^2 c_e)).
// Pairs are visited lexicographically, repeating until a pass makes no
// update. Returns the number of cut updates.
std::size_t fractional_satisfy(WeightMap& w, const ConnectivityConstraint& s,
                               const std::optional<CostMap>& costs = {});

// Sum of c_e w_e, with c_e = 1 when costs are absent.
double fractional_cost(const WeightMap& w,
                       const std::optional<CostMap>& costs = {});

}  // namespace ordnet
