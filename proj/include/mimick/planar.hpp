#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mimick/graph_ops.hpp"
#include "mimick/network.hpp"

namespace mimick {

/// One end of an edge. end 0 leaves edge.u, end 1 leaves edge.v; the dart's
/// tail is that endpoint. Dart index = 2·edge + end.
struct Dart {
  EdgeId edge = 0;
  std::uint8_t end = 0;

  std::uint32_t index() const { return 2 * edge + end; }
  Dart reversed() const { return {edge, static_cast<std::uint8_t>(end ^ 1U)}; }
  friend bool operator==(Dart, Dart) = default;
};

inline Dart dart_from_index(std::uint32_t index) { return {index / 2, static_cast<std::uint8_t>(index % 2)}; }

VertexId dart_tail(const Network& net, Dart d);

/// Rotation system of a plane multigraph. Faces are the orbits of
/// d ↦ succ(reverse(d)), succ being the next dart in the rotation at the tail.
class PlaneEmbedding {
 public:
  PlaneEmbedding() = default;

  /// Validates that every dart sits exactly once in the rotation of its tail
  /// and that every connected component has genus 0. Throws Error(InvalidEmbedding).
  PlaneEmbedding(Network net, std::vector<std::vector<Dart>> rotation);

  const Network& network() const { return net_; }
  std::span<const Dart> rotation(VertexId v) const { return rotation_.at(v); }
  const std::vector<std::vector<Dart>>& rotations() const { return rotation_; }

  /// Face id of each dart index; faces numbered by their smallest dart.
  std::span<const std::uint32_t> face_of_dart() const { return faceOfDart_; }
  std::size_t traced_face_count() const { return tracedFaces_; }

  /// Face count of the plane drawing: traced faces with the outer faces of
  /// separate components merged (1 when there are no edges).
  std::size_t face_count() const;

  /// Dart following d around its face.
  Dart next_in_face(Dart d) const;

 private:
  Network net_;
  std::vector<std::vector<Dart>> rotation_;
  std::vector<std::uint32_t> successor_;  // dart index -> next dart index in rotation
  std::vector<std::uint32_t> faceOfDart_;
  std::size_t tracedFaces_ = 0;
};

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
};

/// Rotation system of a straight-line drawing: darts sorted counterclockwise
/// by direction. The drawing must be crossing-free and loop-free.
PlaneEmbedding embedding_from_coordinates(const Network& net, std::span<const Point> positions);

/// Dual of a connected plane multigraph. Dual edge e* has the same id and
/// cost as e; its endpoints are the faces on either side of e.
struct DualGraph {
  Network dual;
  PlaneEmbedding dualEmbedding;
  /// Primal face id = dual vertex id.
  std::size_t primalFaceCount = 0;
};

/// Throws Error(InvalidEmbedding) for a disconnected primal.
DualGraph build_dual(const PlaneEmbedding& emb);

/// Faces of the edge-induced plane subgraph with inherited rotations.
/// Untouched vertices are ignored; the empty subgraph counts as one face.
/// Face tracing is cross-checked against Euler's formula F = E − V + 1 + CC;
/// a mismatch throws Error(InternalError).
std::size_t faces_of_subgraph(const PlaneEmbedding& emb, std::span<const EdgeId> edgeSubset);

struct CircuitReport {
  EdgeSet edgeSet;
  std::vector<std::pair<VertexId, std::size_t>> vertexDegrees;  // ascending vertex id
  VertexSet meetingVertices;                                      // degree > 2
  std::size_t faces = 0;
  std::size_t components = 0;
};

/// Examines the dual edges of a primal cutset: every touched dual vertex must
/// have degree ≥ 2 (a self-loop counts twice). Throws Error(NotACircuit).
CircuitReport dual_circuit_check(const DualGraph& dual, std::span<const EdgeId> primalCutset);

struct ComponentBoundReport {
  std::size_t k = 0;
  std::size_t componentsS = 0;
  std::optional<std::size_t> componentsT;
  std::optional<std::size_t> componentsST;
  std::optional<std::size_t> meetingVertices;
  bool oneCutsetHolds = true;   // |CC(G∖E_S)| ≤ k (and for T)
  bool twoCutsetHolds = true;   // |CC(G∖(E_S∪E_T))| ≤ |CC(G∖E_S)| + |CC(G∖E_T)| + k
  bool meetingHolds = true;     // |V_m(G*[E_S* ∪ E_T*])| ≤ 6k

  bool holds() const { return oneCutsetHolds && twoCutsetHolds && meetingHolds; }
};

ComponentBoundReport check_component_bounds(const PlaneEmbedding& emb, const DualGraph& dual,
                                            std::span<const EdgeId> cutsetS,
                                            std::optional<std::span<const EdgeId>> cutsetT = std::nullopt);

}  // namespace mimick
