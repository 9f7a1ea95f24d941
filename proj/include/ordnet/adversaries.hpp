#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordnet/model.hpp"
#include "ordnet/pqtree.hpp"
#include "ordnet/random.hpp"

namespace ordnet {

// An opponent that hands an online algorithm one constraint at a time. It
// sees only the algorithm's current edge set.
class Adversary {
 public:
  virtual ~Adversary() = default;
  virtual std::int32_t n() const = 0;
  virtual std::string name() const = 0;
  // Next constraint, or std::nullopt when done.
  virtual std::optional<OrderedConstraint> next(const EdgeSet& built) = 0;
  // A solution satisfying everything emitted so far, when one is known.
  virtual std::optional<EdgeSet> known_opt() const { return std::nullopt; }
};

// Replays a fixed list regardless of the algorithm's edges.
class ObliviousAdversary : public Adversary {
 public:
  ObliviousAdversary(std::string name, Instance instance,
                     std::optional<EdgeSet> known_opt = std::nullopt);

  std::int32_t n() const override { return instance_.n; }
  std::string name() const override { return name_; }
  std::optional<OrderedConstraint> next(const EdgeSet& built) override;
  std::optional<EdgeSet> known_opt() const override { return known_opt_; }
  const Instance& instance() const { return instance_; }

 private:
  std::string name_;
  Instance instance_;
  std::optional<EdgeSet> known_opt_;
  std::size_t cursor_ = 0;
};

// Clique constraints on U, the first ceil(sqrt n) vertices, then for every
// other vertex v the constraints (pi_v(1..i), v) for i = m down to 1, where
// pi_v is a seeded random permutation of U.
struct GeneralLbInstance {
  Instance instance;
  std::int32_t m = 0;
  std::vector<std::vector<VertexId>> permutations;  // pi_v, indexed by v - m
  EdgeSet known_opt;  // clique on U plus {pi_v(1), v}
};

// Throws ValidationError when n < 4.
GeneralLbInstance general_lb_instance(std::int32_t n, std::uint64_t seed);

// Emits (0, 1, i) for i = 2..n-1, then one constraint from the candidate
// centre with fewer neighbours among 2..n-1 (ties to 0) to the smallest such
// vertex it is not joined to.
class StarLbAdversary : public Adversary {
 public:
  // Throws ValidationError when n < 4.
  explicit StarLbAdversary(std::int32_t n);

  std::int32_t n() const override { return n_; }
  std::string name() const override { return "star-lb"; }
  std::optional<OrderedConstraint> next(const EdgeSet& built) override;
  // Star at the chosen centre (vertex 0 until the final round decides).
  std::optional<EdgeSet> known_opt() const override;
  VertexId center() const { return center_; }

 private:
  std::int32_t n_;
  std::int32_t round_ = 0;
  VertexId center_ = 0;
  bool done_ = false;
};

// Emits (0, 1, ..., n-1), then for each i >= 2 whose earlier-neighbour count
// is below 2 emits (i, u): u is i's neighbour on a seeded random path
// consistent with everything emitted so far, chosen so that {i, u} is not
// built. Earlier neighbours are preferred; a later one is used only when no
// consistent path offers an earlier one.
class PathLbAdversary : public Adversary {
 public:
  // Throws ValidationError when n < 3.
  PathLbAdversary(std::int32_t n, std::uint64_t seed);

  std::int32_t n() const override { return n_; }
  std::string name() const override { return "path-lb"; }
  std::optional<OrderedConstraint> next(const EdgeSet& built) override;
  // Edges of a path consistent with every emitted constraint.
  std::optional<EdgeSet> known_opt() const override;

  // Rounds in which only a later-indexed partner was available.
  std::size_t later_partner_rounds() const { return later_rounds_; }

  // Cap on frontier members inspected per round.
  static constexpr std::size_t kFrontierLimit = std::size_t{1} << 20;

 private:
  void emit(const OrderedConstraint& o);

  std::int32_t n_;
  SplitMix64 rng_;
  PQTree shadow_;
  bool started_ = false;
  VertexId next_vertex_ = 2;
  std::size_t later_rounds_ = 0;
};

// Earlier-indexed neighbours of v.
std::size_t pre_degree(const EdgeSet& e, VertexId v);

}  // namespace ordnet
