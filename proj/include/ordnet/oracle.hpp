#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ordnet/model.hpp"

namespace ordnet {

// The instance has more candidate edges than the exact search supports.
class OracleCapacity : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxCandidateEdges = 128;

struct OptResult {
  EdgeSet edges;
  double cost = 0.0;  // edge count when the instance has no costs
};

// Exact minimum-cost solution. Only pairs {o[j], o[i]} with j < i in some
// constraint can satisfy a position, so the search ranges over those.
// Throws OracleCapacity beyond kMaxCandidateEdges candidates.
OptResult brute_force_opt(const Instance& inst);

struct HittingSetInstance {
  std::int32_t universe = 0;
  std::vector<std::vector<VertexId>> family;
};

// Universe vertices are 0..|U|-1 and the extra vertices w_l are
// |U|..|U|+w_size-1.
struct ReducedInstance {
  Instance instance;
  std::int32_t universe = 0;
  std::int32_t w_size = 0;

  VertexId w(std::int32_t l) const { return universe + l; }
};

// Every ordered pair (u_i, u_j) with i < j, then for every set S_k and every
// w_l the constraint (S_k in increasing order, w_l). Throws ValidationError on
// an empty set, an element outside U or w_size < 1.
ReducedInstance hitting_set_reduction(const HittingSetInstance& hs,
                                      std::int32_t w_size);

// The universe vertices adjacent to w_l. Throws ValidationError when e does
// not satisfy the reduced instance.
std::vector<VertexId> extract_hitting_set(const EdgeSet& e,
                                          const ReducedInstance& red,
                                          std::int32_t l);

// Minimum hitting set size by subset enumeration; |U| <= 20.
std::int32_t brute_force_hitting_set(const HittingSetInstance& hs);

}  // namespace ordnet
