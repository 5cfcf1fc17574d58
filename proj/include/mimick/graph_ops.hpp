#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mimick/network.hpp"

namespace mimick {

using EdgeSet = std::vector<EdgeId>;  // sorted, duplicate-free
using VertexSet = std::vector<VertexId>;  // sorted, duplicate-free

/// Component label per vertex (labels numbered by smallest member) of net with
/// the given edges deleted. Throws Error(InvalidEdge) for unknown ids.
std::vector<std::uint32_t> component_labels(const Network& net, std::span<const EdgeId> removedEdges);

/// Maximal connected vertex sets of net minus removedEdges, ordered by their
/// smallest vertex, each set sorted.
std::vector<VertexSet> connected_components(const Network& net, std::span<const EdgeId> removedEdges = {});

/// Partition of the vertex set into contraction classes.
class ContractionMap {
 public:
  ContractionMap() = default;

  /// classOf[v] is the class of v; class ids must be dense 0..c-1.
  ContractionMap(const Network& net, std::vector<std::uint32_t> classOf);

  static ContractionMap identity(const Network& net);

  std::size_t class_count() const { return classes_.size(); }
  std::uint32_t class_of(VertexId v) const { return classOf_.at(v); }
  const VertexSet& members(std::uint32_t cls) const { return classes_.at(cls); }
  std::span<const std::uint32_t> class_of_all() const { return classOf_; }

  /// Terminal index held by the class, if any. When a class holds several
  /// terminals this reports the first; has_collision() tells.
  std::optional<std::size_t> terminal_of_class(std::uint32_t cls) const { return terminalOfClass_.at(cls); }
  bool has_collision() const { return collision_; }

 private:
  std::vector<std::uint32_t> classOf_;
  std::vector<VertexSet> classes_;
  std::vector<std::optional<std::size_t>> terminalOfClass_;
  bool collision_ = false;
};

/// One vertex per class (vertex id = class id). Each pair of classes joined by
/// at least one edge gets exactly one edge whose cost is the sum of the
/// crossing costs; intra-class edges vanish. Output edges are ordered by
/// (smaller class, larger class). Throws Error(TerminalCollision) if a class
/// holds two terminals.
Network contract(const Network& net, const ContractionMap& map);

/// Induced subnetwork on vertices [0, keep); drops trailing isolated
/// classes. Throws if a dropped vertex carries an edge or a terminal.
Network truncate_vertices(const Network& net, std::size_t keep);

/// Edges with exactly one endpoint in the marked set.
EdgeSet boundary_edges(const Network& net, const std::vector<char>& inside);

Rational edge_set_cost(const Network& net, std::span<const EdgeId> edges);

}  // namespace mimick
