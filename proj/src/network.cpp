#include "mimick/network.hpp"

#include <string>

#include "mimick/error.hpp"

namespace mimick {

Network::Network(std::size_t vertexCount, std::vector<Edge> edges, std::vector<VertexId> terminals)
    : vertexCount_(vertexCount), edges_(std::move(edges)), terminals_(std::move(terminals)) {
  if (terminals_.size() > vertexCount_) {
    throw Error(ErrorKind::InvalidTerminalCount, "more terminals than vertices");
  }
  terminalIndex_.assign(vertexCount_, -1);
  for (std::size_t i = 0; i < terminals_.size(); ++i) {
    const VertexId t = terminals_[i];
    if (t >= vertexCount_) {
      throw Error(ErrorKind::InvalidNetwork, "terminal " + std::to_string(t) + " out of range");
    }
    if (terminalIndex_[t] != -1) {
      throw Error(ErrorKind::InvalidNetwork, "duplicate terminal " + std::to_string(t));
    }
    terminalIndex_[t] = static_cast<std::int32_t>(i);
  }

  std::vector<std::size_t> degree(vertexCount_ + 1, 0);
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    Edge& e = edges_[id];
    if (e.cost.get_den() == 0) {
      throw Error(ErrorKind::InvalidNetwork, "edge " + std::to_string(id) + " has a zero denominator");
    }
    e.cost.canonicalize();
    if (e.u >= vertexCount_ || e.v >= vertexCount_) {
      throw Error(ErrorKind::InvalidEdge, "edge " + std::to_string(id) + " has an endpoint out of range");
    }
    if (sgn(e.cost) <= 0) {
      throw Error(ErrorKind::InvalidNetwork, "edge " + std::to_string(id) + " has non-positive cost");
    }
    ++degree[e.u];
    if (!e.is_loop()) {
      ++degree[e.v];
    }
  }
  incidenceOffset_.assign(vertexCount_ + 1, 0);
  for (std::size_t v = 0; v < vertexCount_; ++v) {
    incidenceOffset_[v + 1] = incidenceOffset_[v] + degree[v];
  }
  incidence_.resize(incidenceOffset_[vertexCount_]);
  std::vector<std::size_t> fill(incidenceOffset_.begin(), incidenceOffset_.end() - 1);
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    incidence_[fill[e.u]++] = static_cast<EdgeId>(id);
    if (!e.is_loop()) {
      incidence_[fill[e.v]++] = static_cast<EdgeId>(id);
    }
  }
}

std::optional<std::size_t> Network::terminal_index(VertexId v) const {
  if (v >= vertexCount_ || terminalIndex_[v] < 0) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(terminalIndex_[v]);
}

std::span<const EdgeId> Network::incident(VertexId v) const {
  return std::span<const EdgeId>(incidence_).subspan(incidenceOffset_.at(v),
                                                     incidenceOffset_.at(v + 1) - incidenceOffset_.at(v));
}

Rational Network::total_cost() const {
  Rational sum = 0;
  for (const Edge& e : edges_) {
    sum += e.cost;
  }
  return sum;
}

std::vector<Rational> Network::cost_vector() const {
  std::vector<Rational> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) {
    out.push_back(e.cost);
  }
  return out;
}

BigInt Network::common_denominator() const {
  BigInt den = 1;
  for (const Edge& e : edges_) {
    den = lcm(den, e.cost.get_den());
  }
  return den;
}

bool operator==(const Network& a, const Network& b) {
  if (a.vertexCount_ != b.vertexCount_ || a.terminals_ != b.terminals_ || a.edges_.size() != b.edges_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const Edge& x = a.edges_[i];
    const Edge& y = b.edges_[i];
    if (x.u != y.u || x.v != y.v || x.cost != y.cost) {
      return false;
    }
  }
  return true;
}

Network with_costs(const Network& net, std::span<const Rational> costs) {
  if (costs.size() != net.edge_count()) {
    throw Error(ErrorKind::InvalidParameter, "cost vector length does not match edge count");
  }
  std::vector<Edge> edges(net.edges().begin(), net.edges().end());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    edges[i].cost = costs[i];
  }
  return Network(net.vertex_count(), std::move(edges),
                 std::vector<VertexId>(net.terminals().begin(), net.terminals().end()));
}

}  // namespace mimick
