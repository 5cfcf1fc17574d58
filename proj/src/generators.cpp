#include "mimick/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "mimick/error.hpp"
#include "mimick/graph_ops.hpp"

namespace mimick {

Network path_network(std::span<const Rational> costs) {
  if (costs.empty()) {
    throw Error(ErrorKind::InvalidParameter, "a path needs at least one edge");
  }
  const std::size_t n = costs.size() + 1;
  // q1 = 0, q2 = 1, interior vertices 2..n-1 in path order.
  std::vector<VertexId> order{0};
  for (VertexId v = 2; v < n; ++v) {
    order.push_back(v);
  }
  order.push_back(1);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < costs.size(); ++i) {
    edges.push_back(Edge{order[i], order[i + 1], costs[i]});
  }
  return Network(n, std::move(edges), {0, 1});
}

Network star_network(std::size_t k, const Rational& cost) {
  std::vector<Edge> edges;
  std::vector<VertexId> terminals;
  for (VertexId leaf = 1; leaf <= k; ++leaf) {
    edges.push_back(Edge{0, leaf, cost});
    terminals.push_back(leaf);
  }
  return Network(k + 1, std::move(edges), std::move(terminals));
}

PlaneEmbedding star_embedding(std::size_t k, const Rational& cost) {
  const Network net = star_network(k, cost);
  // Leaves on a circle-like ring of distinct lattice directions.
  std::vector<Point> positions{{0, 0}};
  for (std::size_t i = 0; i < k; ++i) {
    positions.push_back(Point{static_cast<std::int64_t>(k) - static_cast<std::int64_t>(2 * i),
                              i % 2 == 0 ? 1 + static_cast<std::int64_t>(i) : -1 - static_cast<std::int64_t>(i)});
  }
  return embedding_from_coordinates(net, positions);
}

namespace {

template <class T>
void shuffle_in_place(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[static_cast<std::size_t>(rng() % i)]);
  }
}

std::int64_t orient(const Point& a, const Point& b, const Point& c) {
  const std::int64_t v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return (v > 0) - (v < 0);
}

bool on_open_segment(const Point& a, const Point& b, const Point& p) {
  if (orient(a, b, p) != 0) {
    return false;
  }
  const bool withinX = std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x);
  const bool withinY = std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
  const bool endpoint = (p.x == a.x && p.y == a.y) || (p.x == b.x && p.y == b.y);
  return withinX && withinY && !endpoint;
}

bool properly_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  return orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0;
}

}  // namespace

PlaneEmbedding random_planar(const RandomPlanarOptions& options) {
  const std::size_t n = options.vertices;
  const std::size_t k = options.terminals;
  if (n < 2 || k < 1 || k > n) {
    throw Error(ErrorKind::InvalidParameter, "random planar networks need n >= 2 and 1 <= k <= n");
  }
  std::mt19937_64 rng(options.seed);
  auto uniform = [&](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };

  const std::int64_t side = static_cast<std::int64_t>(4 * n);
  std::set<std::pair<std::int64_t, std::int64_t>> used;
  std::vector<Point> points;
  while (points.size() < n) {
    Point p{uniform(0, side), uniform(0, side)};
    if (used.insert({p.x, p.y}).second) {
      points.push_back(p);
    }
  }

  std::vector<std::pair<VertexId, VertexId>> candidates;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      candidates.emplace_back(a, b);
    }
  }
  shuffle_in_place(candidates, rng);
  std::vector<std::pair<VertexId, VertexId>> chosen;
  for (const auto& [a, b] : candidates) {
    bool ok = true;
    for (VertexId p = 0; p < n && ok; ++p) {
      ok = !on_open_segment(points[a], points[b], points[p]);
    }
    for (const auto& [c, d] : chosen) {
      if (!ok) {
        break;
      }
      if (c == a || c == b || d == a || d == b) {
        continue;
      }
      ok = !properly_cross(points[a], points[b], points[c], points[d]);
    }
    if (ok) {
      chosen.emplace_back(a, b);
    }
  }

  // Thin out while keeping the graph connected.
  std::vector<char> keep(chosen.size(), 1);
  std::vector<std::size_t> order(chosen.size());
  std::iota(order.begin(), order.end(), 0);
  shuffle_in_place(order, rng);
  auto coin = [&]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  auto connected_without = [&](std::size_t skip) {
    std::vector<std::uint32_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0U);
    auto find = [&](std::uint32_t x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    };
    std::size_t merges = 0;
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      if (i == skip || !keep[i]) {
        continue;
      }
      const auto ra = find(chosen[i].first);
      const auto rb = find(chosen[i].second);
      if (ra != rb) {
        parent[ra] = rb;
        ++merges;
      }
    }
    return merges + 1 == n;
  };
  for (std::size_t i : order) {
    if (coin() < options.deletionRate && connected_without(i)) {
      keep[i] = 0;
    }
  }

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    if (!keep[i]) {
      continue;
    }
    Rational cost(BigInt(static_cast<long>(uniform(1, options.maxNumerator))),
                  BigInt(static_cast<long>(uniform(1, options.maxDenominator))));
    cost.canonicalize();
    edges.push_back(Edge{chosen[i].first, chosen[i].second, cost});
  }
  std::vector<VertexId> vertices(n);
  std::iota(vertices.begin(), vertices.end(), 0U);
  shuffle_in_place(vertices, rng);
  std::vector<VertexId> terminals(vertices.begin(), vertices.begin() + static_cast<std::ptrdiff_t>(k));
  Network net(n, std::move(edges), std::move(terminals));
  return embedding_from_coordinates(net, points);
}

}  // namespace mimick
