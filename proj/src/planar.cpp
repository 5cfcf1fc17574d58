#include "mimick/planar.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "mimick/error.hpp"

namespace mimick {

namespace {

constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();

struct Trace {
  std::vector<std::uint32_t> faceOfDart;
  std::vector<std::uint32_t> successor;
  std::size_t faces = 0;
};

/// Face tracing restricted to edges with inSubset[e] set; rotations are
/// inherited by skipping the other darts.
Trace trace(const Network& net, const std::vector<std::vector<Dart>>& rotation, const std::vector<char>& inSubset) {
  Trace out;
  const std::size_t darts = 2 * net.edge_count();
  out.successor.assign(darts, kAbsent);
  for (const auto& around : rotation) {
    std::vector<std::uint32_t> kept;
    for (Dart d : around) {
      if (inSubset[d.edge]) {
        kept.push_back(d.index());
      }
    }
    for (std::size_t i = 0; i < kept.size(); ++i) {
      out.successor[kept[i]] = kept[(i + 1) % kept.size()];
    }
  }
  out.faceOfDart.assign(darts, kAbsent);
  for (std::uint32_t start = 0; start < darts; ++start) {
    if (!inSubset[start / 2] || out.faceOfDart[start] != kAbsent) {
      continue;
    }
    const auto face = static_cast<std::uint32_t>(out.faces++);
    std::uint32_t d = start;
    while (out.faceOfDart[d] == kAbsent) {
      out.faceOfDart[d] = face;
      d = out.successor[d ^ 1U];
    }
  }
  return out;
}

struct SubgraphShape {
  std::size_t edges = 0;
  std::size_t vertices = 0;
  std::size_t components = 0;
};

SubgraphShape shape(const Network& net, const std::vector<char>& inSubset) {
  SubgraphShape out;
  std::vector<EdgeId> removed;
  std::vector<char> touched(net.vertex_count(), 0);
  for (EdgeId id = 0; id < net.edge_count(); ++id) {
    if (inSubset[id]) {
      ++out.edges;
      touched[net.edge(id).u] = 1;
      touched[net.edge(id).v] = 1;
    } else {
      removed.push_back(id);
    }
  }
  const auto label = component_labels(net, removed);
  std::vector<char> seenLabel(net.vertex_count(), 0);
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    if (touched[v]) {
      ++out.vertices;
      if (!seenLabel[label[v]]) {
        seenLabel[label[v]] = 1;
        ++out.components;
      }
    }
  }
  return out;
}

std::vector<char> subset_mask(const Network& net, std::span<const EdgeId> edges) {
  std::vector<char> mask(net.edge_count(), 0);
  for (EdgeId id : edges) {
    if (id >= net.edge_count()) {
      throw Error(ErrorKind::InvalidEdge, "unknown edge id " + std::to_string(id));
    }
    mask[id] = 1;
  }
  return mask;
}

}  // namespace

VertexId dart_tail(const Network& net, Dart d) {
  const Edge& e = net.edge(d.edge);
  return d.end == 0 ? e.u : e.v;
}

PlaneEmbedding::PlaneEmbedding(Network net, std::vector<std::vector<Dart>> rotation)
    : net_(std::move(net)), rotation_(std::move(rotation)) {
  if (rotation_.size() != net_.vertex_count()) {
    rotation_.resize(net_.vertex_count());
  }
  const std::size_t darts = 2 * net_.edge_count();
  std::vector<char> seen(darts, 0);
  for (VertexId v = 0; v < rotation_.size(); ++v) {
    for (Dart d : rotation_[v]) {
      if (d.edge >= net_.edge_count() || d.end > 1) {
        throw Error(ErrorKind::InvalidEmbedding, "rotation at vertex " + std::to_string(v) + " names an unknown dart");
      }
      if (dart_tail(net_, d) != v) {
        throw Error(ErrorKind::InvalidEmbedding, "dart " + std::to_string(d.edge) + ":" + std::to_string(d.end) +
                                                     " listed at vertex " + std::to_string(v) + " which is not its tail");
      }
      if (seen[d.index()]++) {
        throw Error(ErrorKind::InvalidEmbedding, "dart " + std::to_string(d.edge) + ":" + std::to_string(d.end) +
                                                     " listed twice");
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw Error(ErrorKind::InvalidEmbedding, "some dart is missing from the rotation system");
  }
  const std::vector<char> all(net_.edge_count(), 1);
  Trace traced = trace(net_, rotation_, all);
  successor_ = std::move(traced.successor);
  faceOfDart_ = std::move(traced.faceOfDart);
  tracedFaces_ = traced.faces;
  const SubgraphShape s = shape(net_, all);
  if (tracedFaces_ + s.vertices != s.edges + 2 * s.components) {
    throw Error(ErrorKind::InvalidEmbedding, "rotation system is not planar (Euler check failed)");
  }
}

std::size_t PlaneEmbedding::face_count() const {
  if (net_.edge_count() == 0) {
    return 1;
  }
  const std::vector<char> all(net_.edge_count(), 1);
  const SubgraphShape s = shape(net_, all);
  return tracedFaces_ + 1 - s.components;
}

Dart PlaneEmbedding::next_in_face(Dart d) const { return dart_from_index(successor_.at(d.reversed().index())); }

PlaneEmbedding embedding_from_coordinates(const Network& net, std::span<const Point> positions) {
  if (positions.size() != net.vertex_count()) {
    throw Error(ErrorKind::InvalidEmbedding, "one position per vertex required");
  }
  std::vector<std::vector<Dart>> rotation(net.vertex_count());
  for (EdgeId id = 0; id < net.edge_count(); ++id) {
    const Edge& e = net.edge(id);
    if (e.is_loop()) {
      throw Error(ErrorKind::InvalidEmbedding, "straight-line drawings cannot hold self-loops");
    }
    rotation[e.u].push_back({id, 0});
    rotation[e.v].push_back({id, 1});
  }
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    auto direction = [&](Dart d) {
      const Edge& e = net.edge(d.edge);
      const Point& head = positions[d.end == 0 ? e.v : e.u];
      return Point{head.x - positions[v].x, head.y - positions[v].y};
    };
    auto halfOf = [](const Point& p) { return (p.y > 0 || (p.y == 0 && p.x > 0)) ? 0 : 1; };
    std::sort(rotation[v].begin(), rotation[v].end(), [&](Dart a, Dart b) {
      const Point pa = direction(a);
      const Point pb = direction(b);
      const int ha = halfOf(pa);
      const int hb = halfOf(pb);
      if (ha != hb) {
        return ha < hb;
      }
      const std::int64_t cross = pa.x * pb.y - pa.y * pb.x;
      if (cross != 0) {
        return cross > 0;
      }
      return a.index() < b.index();
    });
  }
  return PlaneEmbedding(net, std::move(rotation));
}

DualGraph build_dual(const PlaneEmbedding& emb) {
  const Network& net = emb.network();
  if (net.vertex_count() > 0 && connected_components(net).size() != 1) {
    throw Error(ErrorKind::InvalidEmbedding, "dual construction needs a connected primal; split it into components first");
  }
  DualGraph out;
  out.primalFaceCount = emb.face_count();
  const auto faceOf = emb.face_of_dart();
  std::vector<Edge> edges;
  edges.reserve(net.edge_count());
  for (EdgeId id = 0; id < net.edge_count(); ++id) {
    edges.push_back(Edge{faceOf[2 * id], faceOf[2 * id + 1], net.edge(id).cost});
  }
  Network dual(out.primalFaceCount, std::move(edges), {});

  // The rotation at a dual vertex lists the dual darts in face-boundary order.
  std::vector<std::vector<Dart>> rotation(out.primalFaceCount);
  std::vector<char> placed(2 * net.edge_count(), 0);
  for (std::uint32_t start = 0; start < 2 * net.edge_count(); ++start) {
    if (placed[start]) {
      continue;
    }
    Dart d = dart_from_index(start);
    auto& around = rotation[faceOf[start]];
    while (!placed[d.index()]) {
      placed[d.index()] = 1;
      around.push_back(d);
      d = emb.next_in_face(d);
    }
  }
  out.dualEmbedding = PlaneEmbedding(dual, std::move(rotation));
  out.dual = std::move(dual);
  return out;
}

std::size_t faces_of_subgraph(const PlaneEmbedding& emb, std::span<const EdgeId> edgeSubset) {
  const Network& net = emb.network();
  const auto mask = subset_mask(net, edgeSubset);
  const SubgraphShape s = shape(net, mask);
  if (s.edges == 0) {
    return 1;
  }
  const Trace traced = trace(net, emb.rotations(), mask);
  const std::size_t byTracing = traced.faces + 1 - s.components;
  const std::size_t byEuler = s.edges + 1 + s.components - s.vertices;
  if (byTracing != byEuler) {
    throw Error(ErrorKind::InternalError, "face tracing gives " + std::to_string(byTracing) + " faces, Euler gives " +
                                              std::to_string(byEuler));
  }
  return byTracing;
}

CircuitReport dual_circuit_check(const DualGraph& dual, std::span<const EdgeId> primalCutset) {
  const Network& net = dual.dual;
  const auto mask = subset_mask(net, primalCutset);
  CircuitReport report;
  std::vector<std::size_t> degree(net.vertex_count(), 0);
  for (EdgeId id = 0; id < net.edge_count(); ++id) {
    if (!mask[id]) {
      continue;
    }
    report.edgeSet.push_back(id);
    degree[net.edge(id).u] += 1;
    degree[net.edge(id).v] += 1;
  }
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    if (degree[v] == 0) {
      continue;
    }
    report.vertexDegrees.emplace_back(v, degree[v]);
    if (degree[v] == 1) {
      throw Error(ErrorKind::NotACircuit, "dual vertex " + std::to_string(v) + " has degree 1");
    }
    if (degree[v] > 2) {
      report.meetingVertices.push_back(v);
    }
  }
  report.faces = faces_of_subgraph(dual.dualEmbedding, report.edgeSet);
  report.components = shape(net, mask).components;
  return report;
}

ComponentBoundReport check_component_bounds(const PlaneEmbedding& emb, const DualGraph& dual,
                                            std::span<const EdgeId> cutsetS,
                                            std::optional<std::span<const EdgeId>> cutsetT) {
  const Network& net = emb.network();
  ComponentBoundReport report;
  report.k = net.terminal_count();
  report.componentsS = connected_components(net, cutsetS).size();
  report.oneCutsetHolds = report.componentsS <= report.k;
  if (!cutsetT) {
    return report;
  }
  report.componentsT = connected_components(net, *cutsetT).size();
  report.oneCutsetHolds = report.oneCutsetHolds && *report.componentsT <= report.k;
  EdgeSet both(cutsetS.begin(), cutsetS.end());
  both.insert(both.end(), cutsetT->begin(), cutsetT->end());
  std::sort(both.begin(), both.end());
  both.erase(std::unique(both.begin(), both.end()), both.end());
  report.componentsST = connected_components(net, both).size();
  report.twoCutsetHolds = *report.componentsST <= report.componentsS + *report.componentsT + report.k;
  report.meetingVertices = dual_circuit_check(dual, both).meetingVertices.size();
  report.meetingHolds = *report.meetingVertices <= 6 * report.k;
  return report;
}

}  // namespace mimick
