#include "mimick/graph_ops.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "mimick/error.hpp"

namespace mimick {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0U); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent_[std::max(a, b)] = std::min(a, b);
    }
  }

 private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace

std::vector<std::uint32_t> component_labels(const Network& net, std::span<const EdgeId> removedEdges) {
  std::vector<char> removed(net.edge_count(), 0);
  for (EdgeId id : removedEdges) {
    if (id >= net.edge_count()) {
      throw Error(ErrorKind::InvalidEdge, "unknown edge id " + std::to_string(id));
    }
    removed[id] = 1;
  }
  DisjointSets sets(net.vertex_count());
  for (std::size_t id = 0; id < net.edge_count(); ++id) {
    if (!removed[id]) {
      sets.unite(net.edge(static_cast<EdgeId>(id)).u, net.edge(static_cast<EdgeId>(id)).v);
    }
  }
  std::vector<std::uint32_t> label(net.vertex_count());
  std::vector<std::int64_t> labelOfRoot(net.vertex_count(), -1);
  std::uint32_t next = 0;
  for (std::uint32_t v = 0; v < net.vertex_count(); ++v) {
    const std::uint32_t root = sets.find(v);
    if (labelOfRoot[root] < 0) {
      labelOfRoot[root] = next++;
    }
    label[v] = static_cast<std::uint32_t>(labelOfRoot[root]);
  }
  return label;
}

std::vector<VertexSet> connected_components(const Network& net, std::span<const EdgeId> removedEdges) {
  const auto label = component_labels(net, removedEdges);
  const std::uint32_t count = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<VertexSet> out(count);
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    out[label[v]].push_back(v);
  }
  return out;
}

ContractionMap::ContractionMap(const Network& net, std::vector<std::uint32_t> classOf) : classOf_(std::move(classOf)) {
  if (classOf_.size() != net.vertex_count()) {
    throw Error(ErrorKind::InvalidParameter, "contraction map does not cover every vertex");
  }
  const std::uint32_t count = classOf_.empty() ? 0 : *std::max_element(classOf_.begin(), classOf_.end()) + 1;
  classes_.assign(count, {});
  for (VertexId v = 0; v < classOf_.size(); ++v) {
    classes_[classOf_[v]].push_back(v);
  }
  for (std::uint32_t c = 0; c < count; ++c) {
    if (classes_[c].empty()) {
      throw Error(ErrorKind::InvalidParameter, "contraction class ids are not dense");
    }
  }
  terminalOfClass_.assign(count, std::nullopt);
  for (std::size_t t = 0; t < net.terminal_count(); ++t) {
    auto& slot = terminalOfClass_[classOf_[net.terminal(t)]];
    if (slot) {
      collision_ = true;
    } else {
      slot = t;
    }
  }
}

ContractionMap ContractionMap::identity(const Network& net) {
  std::vector<std::uint32_t> classOf(net.vertex_count());
  std::iota(classOf.begin(), classOf.end(), 0U);
  return ContractionMap(net, std::move(classOf));
}

Network contract(const Network& net, const ContractionMap& map) {
  if (map.class_of_all().size() != net.vertex_count()) {
    throw Error(ErrorKind::InvalidParameter, "contraction map built for a different network");
  }
  if (map.has_collision()) {
    throw Error(ErrorKind::TerminalCollision, "a contraction class holds two terminals");
  }
  std::map<std::pair<std::uint32_t, std::uint32_t>, Rational> merged;
  for (const Edge& e : net.edges()) {
    std::uint32_t a = map.class_of(e.u);
    std::uint32_t b = map.class_of(e.v);
    if (a == b) {
      continue;
    }
    if (a > b) {
      std::swap(a, b);
    }
    merged[{a, b}] += e.cost;
  }
  std::vector<Edge> edges;
  edges.reserve(merged.size());
  for (const auto& [key, cost] : merged) {
    edges.push_back(Edge{key.first, key.second, cost});
  }
  std::vector<VertexId> terminals;
  terminals.reserve(net.terminal_count());
  for (VertexId t : net.terminals()) {
    terminals.push_back(map.class_of(t));
  }
  return Network(map.class_count(), std::move(edges), std::move(terminals));
}

Network truncate_vertices(const Network& net, std::size_t keep) {
  for (const Edge& e : net.edges()) {
    if (e.u >= keep || e.v >= keep) {
      throw Error(ErrorKind::InternalError, "truncation would drop an edge");
    }
  }
  for (VertexId t : net.terminals()) {
    if (t >= keep) {
      throw Error(ErrorKind::InternalError, "truncation would drop a terminal");
    }
  }
  return Network(keep, std::vector<Edge>(net.edges().begin(), net.edges().end()),
                 std::vector<VertexId>(net.terminals().begin(), net.terminals().end()));
}

EdgeSet boundary_edges(const Network& net, const std::vector<char>& inside) {
  EdgeSet out;
  for (EdgeId id = 0; id < net.edge_count(); ++id) {
    const Edge& e = net.edge(id);
    if (inside[e.u] != inside[e.v]) {
      out.push_back(id);
    }
  }
  return out;
}

Rational edge_set_cost(const Network& net, std::span<const EdgeId> edges) {
  Rational sum = 0;
  for (EdgeId id : edges) {
    sum += net.edge(id).cost;
  }
  return sum;
}

}  // namespace mimick
