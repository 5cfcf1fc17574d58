#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mimick/rational.hpp"

namespace mimick {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Rational cost;

  bool is_loop() const { return u == v; }
  VertexId other(VertexId x) const { return x == u ? v : u; }
};

/// Undirected multigraph with strictly positive rational costs and an ordered
/// terminal list. Edge ids are the positions in the edge list and never change,
/// so they double as column indices of incidence matrices.
///
/// A network with zero terminals is allowed (dual graphs are plain graphs);
/// operations that need terminals check the count themselves.
class Network {
 public:
  Network() = default;
  Network(std::size_t vertexCount, std::vector<Edge> edges, std::vector<VertexId> terminals);

  std::size_t vertex_count() const { return vertexCount_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t terminal_count() const { return terminals_.size(); }

  const Edge& edge(EdgeId id) const { return edges_.at(id); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const VertexId> terminals() const { return terminals_; }
  VertexId terminal(std::size_t index) const { return terminals_.at(index); }
  std::optional<std::size_t> terminal_index(VertexId v) const;

  /// Edge ids incident to v; a self-loop is listed once.
  std::span<const EdgeId> incident(VertexId v) const;

  Rational total_cost() const;
  std::vector<Rational> cost_vector() const;

  /// Least common multiple of all cost denominators.
  BigInt common_denominator() const;

  friend bool operator==(const Network& a, const Network& b);

 private:
  std::size_t vertexCount_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexId> terminals_;
  std::vector<std::int32_t> terminalIndex_;
  std::vector<std::size_t> incidenceOffset_;
  std::vector<EdgeId> incidence_;
};

/// Returns a copy of net with edge costs replaced (same ids, same terminals).
Network with_costs(const Network& net, std::span<const Rational> costs);

}  // namespace mimick
