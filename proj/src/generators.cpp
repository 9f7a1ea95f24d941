#include "ordnet/generators.hpp"

#include <algorithm>
#include <numeric>

namespace ordnet {

std::vector<VertexId> random_permutation(std::int32_t n, SplitMix64& rng) {
  std::vector<VertexId> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  rng.shuffle(p);
  return p;
}

OrderedConstraint path_consistent_constraint(const std::vector<VertexId>& path,
                                             std::size_t max_len,
                                             SplitMix64& rng) {
  const std::size_t n = path.size();
  max_len = std::clamp<std::size_t>(max_len, 2, n);
  const std::size_t len = 2 + rng.below(max_len - 1);
  std::size_t lo = rng.below(n);
  std::size_t hi = lo;  // inclusive interval [lo, hi]
  std::vector<VertexId> order{path[lo]};
  while (order.size() < len) {
    const bool can_left = lo > 0;
    const bool can_right = hi + 1 < n;
    const bool go_left = can_left && (!can_right || rng.below(2) == 0);
    if (go_left) {
      order.push_back(path[--lo]);
    } else {
      order.push_back(path[++hi]);
    }
  }
  return OrderedConstraint(order);
}

PlantedPathInstance random_path_instance(std::int32_t n, std::size_t r,
                                         std::uint64_t seed) {
  SplitMix64 rng(hash_key(seed, 0x9a7f));
  PlantedPathInstance out;
  out.path = random_permutation(n, rng);
  std::vector<OrderedConstraint> cs;
  for (std::size_t k = 0; k < r; ++k) {
    cs.push_back(path_consistent_constraint(out.path,
                                            static_cast<std::size_t>(n), rng));
  }
  out.instance = Instance(n, std::move(cs));
  return out;
}

OrderedConstraint star_consistent_constraint(std::int32_t n, VertexId center,
                                             std::size_t max_len,
                                             SplitMix64& rng) {
  max_len = std::clamp<std::size_t>(max_len, 2, static_cast<std::size_t>(n));
  const std::size_t len = 2 + rng.below(max_len - 1);
  std::vector<VertexId> others;
  for (VertexId v = 0; v < n; ++v) {
    if (v != center) others.push_back(v);
  }
  rng.shuffle(others);
  others.resize(len - 1);
  std::vector<VertexId> order;
  if (rng.below(2) == 0) {
    order.push_back(center);
    order.insert(order.end(), others.begin(), others.end());
  } else {
    order.push_back(others.front());
    order.push_back(center);
    order.insert(order.end(), others.begin() + 1, others.end());
  }
  return OrderedConstraint(order);
}

PlantedStarInstance random_star_instance(std::int32_t n, std::size_t r,
                                         std::uint64_t seed) {
  SplitMix64 rng(hash_key(seed, 0x57a7));
  PlantedStarInstance out;
  out.center = static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(n)));
  std::vector<OrderedConstraint> cs;
  for (std::size_t k = 0; k < r; ++k) {
    cs.push_back(star_consistent_constraint(
        n, out.center, static_cast<std::size_t>(n), rng));
  }
  out.instance = Instance(n, std::move(cs));
  return out;
}

Instance random_general_instance(std::int32_t n, std::size_t r,
                                 std::size_t max_len, std::uint64_t seed) {
  SplitMix64 rng(hash_key(seed, 0x6e6e));
  max_len = std::clamp<std::size_t>(max_len, 2, static_cast<std::size_t>(n));
  std::vector<OrderedConstraint> cs;
  for (std::size_t k = 0; k < r; ++k) {
    auto p = random_permutation(n, rng);
    p.resize(2 + rng.below(max_len - 1));
    cs.emplace_back(p);
  }
  return Instance(n, std::move(cs));
}

}  // namespace ordnet
