#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mimick/network.hpp"
#include "mimick/planar.hpp"

namespace mimick {

/// q1 – a_1 – ... – q2 with the given edge costs in path order; the two ends
/// are the terminals (q1 first).
Network path_network(std::span<const Rational> costs);

/// Center vertex 0 and k terminal leaves 1..k, every spoke of the given cost.
Network star_network(std::size_t k, const Rational& cost = 1);

/// Straight-line drawing of a star (center at the origin).
PlaneEmbedding star_embedding(std::size_t k, const Rational& cost = 1);

struct RandomPlanarOptions {
  std::size_t vertices = 12;
  std::size_t terminals = 3;
  std::uint64_t seed = 1;
  /// Probability of trying to delete each edge of the triangulation
  /// (deletions that would disconnect the graph are skipped).
  double deletionRate = 0.35;
  std::int64_t maxNumerator = 60;
  std::int64_t maxDenominator = 12;
};

/// Connected planar network with a straight-line embedding: a greedy
/// triangulation of random lattice points, thinned by random edge deletions,
/// with random rational costs and randomly chosen terminals.
PlaneEmbedding random_planar(const RandomPlanarOptions& options);

}  // namespace mimick
