#pragma once

#include <cstdint>
#include <vector>

#include "ordnet/model.hpp"
#include "ordnet/random.hpp"

namespace ordnet {

// Random instance families used by the CLI and the experiment suites. All
// are deterministic functions of their seed.

std::vector<VertexId> random_permutation(std::int32_t n, SplitMix64& rng);

// Grows an interval of `path` one vertex at a time from a random start, so
// every prefix is consecutive along the path. Length in [2, max_len].
OrderedConstraint path_consistent_constraint(const std::vector<VertexId>& path,
                                             std::size_t max_len,
                                             SplitMix64& rng);

struct PlantedPathInstance {
  Instance instance;
  std::vector<VertexId> path;
};

PlantedPathInstance random_path_instance(std::int32_t n, std::size_t r,
                                         std::uint64_t seed);

// Constraints satisfied by the star centred at `center`: the centre is at
// position 0 or 1 of every constraint.
OrderedConstraint star_consistent_constraint(std::int32_t n, VertexId center,
                                             std::size_t max_len,
                                             SplitMix64& rng);

struct PlantedStarInstance {
  Instance instance;
  VertexId center = 0;
};

PlantedStarInstance random_star_instance(std::int32_t n, std::size_t r,
                                         std::uint64_t seed);

// Uniformly random ordered constraints of length in [2, max_len].
Instance random_general_instance(std::int32_t n, std::size_t r,
                                 std::size_t max_len, std::uint64_t seed);

}  // namespace ordnet
