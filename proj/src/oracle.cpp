#include <algorithm>
#include <set>
#include <string>

#include "mimick/error.hpp"
#include "mimick/mincut.hpp"

namespace mimick {

namespace {

using Bits = std::vector<std::uint64_t>;

template <class Int>
struct ScanResult {
  Int best;
  std::set<Bits> minCutsets;
  std::optional<Int> second;
};

/// Gray-code walk over all side assignments of the free vertices. Each step
/// flips one vertex and updates cost and cutset bits from its incident edges.
template <class Int>
ScanResult<Int> scan(const Network& net, const std::vector<char>& fixedSide, const std::vector<VertexId>& freeVertices,
                     const std::vector<Int>& cost) {
  const std::size_t words = (net.edge_count() + 63) / 64;
  std::vector<char> side = fixedSide;
  Bits cut(words, 0);
  Int current = 0;
  for (EdgeId id = 0; id < net.edge_count(); ++id) {
    const Edge& e = net.edge(id);
    if (side[e.u] != side[e.v]) {
      current += cost[id];
      cut[id / 64] |= std::uint64_t{1} << (id % 64);
    }
  }
  struct Incidence {
    EdgeId id;
    VertexId other;
  };
  std::vector<std::vector<Incidence>> incident(freeVertices.size());
  std::vector<Bits> toggle(freeVertices.size(), Bits(words, 0));
  for (std::size_t f = 0; f < freeVertices.size(); ++f) {
    const VertexId v = freeVertices[f];
    for (EdgeId id : net.incident(v)) {
      const Edge& e = net.edge(id);
      if (e.is_loop()) {
        continue;
      }
      incident[f].push_back({id, e.other(v)});
      toggle[f][id / 64] ^= std::uint64_t{1} << (id % 64);
    }
  }

  ScanResult<Int> out{current, {cut}, std::nullopt};
  auto record = [&]() {
    if (current < out.best) {
      out.second = out.best;
      out.best = current;
      out.minCutsets.clear();
      out.minCutsets.insert(cut);
    } else if (current == out.best) {
      out.minCutsets.insert(cut);
    } else if (!out.second || current < *out.second) {
      out.second = current;
    }
  };

  const std::uint64_t steps = std::uint64_t{1} << freeVertices.size();
  for (std::uint64_t i = 1; i < steps; ++i) {
    const std::size_t f = static_cast<std::size_t>(__builtin_ctzll(i));
    const VertexId v = freeVertices[f];
    side[v] ^= 1;
    for (const Incidence& inc : incident[f]) {
      if (side[inc.other] == side[v]) {
        current -= cost[inc.id];
      } else {
        current += cost[inc.id];
      }
    }
    for (std::size_t w = 0; w < words; ++w) {
      cut[w] ^= toggle[f][w];
    }
    record();
  }
  return out;
}

EdgeSet to_edge_set(const Bits& bits) {
  EdgeSet out;
  for (std::size_t w = 0; w < bits.size(); ++w) {
    std::uint64_t word = bits[w];
    while (word) {
      out.push_back(static_cast<EdgeId>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(word))));
      word &= word - 1;
    }
  }
  return out;
}

template <class Int>
OracleResult finish(const ScanResult<Int>& scanned, const BigInt& scale, auto toBig) {
  OracleResult out;
  out.value = Rational(toBig(scanned.best), scale);
  out.value.canonicalize();
  for (const Bits& bits : scanned.minCutsets) {
    out.allMinCutsets.push_back(to_edge_set(bits));
  }
  std::sort(out.allMinCutsets.begin(), out.allMinCutsets.end());
  if (scanned.second) {
    Rational second(toBig(*scanned.second), scale);
    second.canonicalize();
    out.secondBestValue = second;
  }
  return out;
}

}  // namespace

bool within_oracle_capacity(const Network& net) {
  return net.vertex_count() - net.terminal_count() <= kOracleMaxFreeVertices;
}

OracleResult min_cut_oracle(const Network& net, TerminalSet sources, TerminalSet sinks) {
  const std::size_t k = net.terminal_count();
  if (k < 2) {
    throw Error(ErrorKind::InvalidTerminalCount, "cut queries need at least 2 terminals");
  }
  if (sources.empty() || sinks.empty() || (sources.bits & sinks.bits) ||
      ((sources.bits | sinks.bits) & ~all_terminals_mask(k))) {
    throw Error(ErrorKind::InvalidQuery, "source and sink terminal sets must be nonempty and disjoint");
  }
  std::vector<char> fixedSide(net.vertex_count(), 0);
  std::vector<char> isFixed(net.vertex_count(), 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (sources.contains(i)) {
      fixedSide[net.terminal(i)] = 1;
      isFixed[net.terminal(i)] = 1;
    } else if (sinks.contains(i)) {
      isFixed[net.terminal(i)] = 1;
    }
  }
  std::vector<VertexId> freeVertices;
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    if (!isFixed[v]) {
      freeVertices.push_back(v);
    }
  }
  if (freeVertices.size() > kOracleMaxFreeVertices) {
    throw Error(ErrorKind::OracleCapacityExceeded,
                std::to_string(freeVertices.size()) + " free vertices exceed the oracle limit of " +
                    std::to_string(kOracleMaxFreeVertices));
  }

  const BigInt scale = net.common_denominator();
  std::vector<BigInt> scaled(net.edge_count());
  BigInt total = 0;
  for (EdgeId id = 0; id < net.edge_count(); ++id) {
    const Rational& c = net.edge(id).cost;
    scaled[id] = c.get_num() * (scale / c.get_den());
    total += scaled[id];
  }
  if (total < (BigInt(1) << 62)) {
    std::vector<std::int64_t> cost(scaled.size());
    for (std::size_t i = 0; i < scaled.size(); ++i) {
      cost[i] = static_cast<std::int64_t>(scaled[i].get_si());
    }
    return finish(scan(net, fixedSide, freeVertices, cost), scale,
                  [](std::int64_t x) { return BigInt(static_cast<long>(x)); });
  }
  return finish(scan(net, fixedSide, freeVertices, scaled), scale, [](const BigInt& x) { return x; });
}

OracleResult min_cut_oracle(const Network& net, const Bipartition& bp) {
  if (bp.k() != net.terminal_count()) {
    throw Error(ErrorKind::InvalidQuery, "bipartition built for a different terminal count");
  }
  return min_cut_oracle(net, bp.s_bar(), bp.s());
}

GapReport gap(const Network& net, const Bipartition& bp, GapMode mode) {
  GapReport report;
  if (!within_oracle_capacity(net)) {
    if (mode == GapMode::RequireDelta) {
      throw Error(ErrorKind::OracleCapacityExceeded, "gap value needs the exhaustive oracle");
    }
    report.exact = false;
    report.unique = uniqueness_by_flow(net, bp);
    return report;
  }
  const OracleResult oracle = min_cut_oracle(net, bp);
  report.exact = true;
  if (oracle.allMinCutsets.size() > 1) {
    report.unique = false;
    report.delta = Rational(0);
    report.secondBestValue = oracle.value;
    return report;
  }
  report.unique = true;
  if (oracle.secondBestValue) {
    report.secondBestValue = oracle.secondBestValue;
    report.delta = *oracle.secondBestValue - oracle.value;
  }
  return report;
}

std::optional<Rational> network_gap(const Network& net, std::span<const Bipartition> rows) {
  std::vector<Bipartition> all;
  if (rows.empty()) {
    all = enumerate_bipartitions(net.terminal_count());
    rows = all;
  }
  std::optional<Rational> best;
  for (const Bipartition& bp : rows) {
    const GapReport g = gap(net, bp, GapMode::RequireDelta);
    if (g.delta && (!best || *g.delta < *best)) {
      best = g.delta;
    }
  }
  return best;
}

}  // namespace mimick
