#include "mimick/mincut.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "mimick/error.hpp"

namespace mimick {

namespace {

std::int64_t to_int64(const BigInt& x) { return static_cast<std::int64_t>(x.get_si()); }

/// Dinic's blocking-flow algorithm (shortest augmenting paths) over integer
/// capacities. Undirected edges become an arc pair where each direction has
/// the full capacity; pushing along one arc frees the same amount on its twin.
template <class Cap>
class Dinic {
 public:
  explicit Dinic(std::size_t nodes) : head_(nodes, -1), level_(nodes), iter_(nodes) {}

  void add_arc_pair(std::size_t a, std::size_t b, const Cap& forward, const Cap& backward) {
    arcs_.push_back({static_cast<std::uint32_t>(b), head_[a], forward});
    head_[a] = static_cast<std::int32_t>(arcs_.size() - 1);
    arcs_.push_back({static_cast<std::uint32_t>(a), head_[b], backward});
    head_[b] = static_cast<std::int32_t>(arcs_.size() - 1);
  }

  Cap run(std::size_t source, std::size_t sink) {
    Cap total = 0;
    while (build_levels(source, sink)) {
      for (std::size_t v = 0; v < head_.size(); ++v) {
        iter_[v] = head_[v];
      }
      while (true) {
        Cap pushed = augment(source, sink, infinity_);
        if (pushed == 0) {
          break;
        }
        total += pushed;
      }
    }
    return total;
  }

  void set_infinity(const Cap& inf) { infinity_ = inf; }

  /// Nodes reachable from `source` through arcs with residual capacity.
  std::vector<char> reachable_from(std::size_t source) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<std::size_t> stack{source};
    seen[source] = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::int32_t a = head_[v]; a >= 0; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = 1;
          stack.push_back(arcs_[a].to);
        }
      }
    }
    return seen;
  }

  /// Nodes that can still reach `sink` through residual arcs.
  std::vector<char> reaching(std::size_t sink) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<std::size_t> stack{sink};
    seen[sink] = 1;
    while (!stack.empty()) {
      const std::size_t y = stack.back();
      stack.pop_back();
      for (std::int32_t a = head_[y]; a >= 0; a = arcs_[a].next) {
        const std::size_t x = arcs_[a].to;
        if (arcs_[a ^ 1].cap > 0 && !seen[x]) {
          seen[x] = 1;
          stack.push_back(x);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    std::uint32_t to;
    std::int32_t next;
    Cap cap;
  };

  bool build_levels(std::size_t source, std::size_t sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> queue;
    level_[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop();
      for (std::int32_t a = head_[v]; a >= 0; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[v] + 1;
          queue.push(arcs_[a].to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  Cap augment(std::size_t v, std::size_t sink, const Cap& limit) {
    if (v == sink) {
      return limit;
    }
    for (std::int32_t& a = iter_[v]; a >= 0; a = arcs_[a].next) {
      Arc& arc = arcs_[a];
      if (arc.cap > 0 && level_[arc.to] == level_[v] + 1) {
        Cap pushed = augment(arc.to, sink, limit < arc.cap ? limit : arc.cap);
        if (pushed > 0) {
          arc.cap -= pushed;
          arcs_[a ^ 1].cap += pushed;
          return pushed;
        }
      }
    }
    return 0;
  }

  std::vector<std::int32_t> head_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<std::int32_t> iter_;
  Cap infinity_ = 0;
};

struct FlowOutcome {
  Rational flowValue;
  std::vector<char> sourceSide;   // minimal source side, original vertices only
  std::vector<char> sinkReaching; // vertices that reach the sink in the residual graph
};

template <class Cap>
FlowOutcome solve(const Network& net, TerminalSet sources, TerminalSet sinks, const BigInt& scale,
                  const std::vector<BigInt>& scaled, const BigInt& total) {
  const std::size_t n = net.vertex_count();
  const std::size_t s = n;
  const std::size_t t = n + 1;
  auto convert = [](const BigInt& x) -> Cap {
    if constexpr (std::is_same_v<Cap, std::int64_t>) {
      return to_int64(x);
    } else {
      return Cap(x);
    }
  };
  Dinic<Cap> flow(n + 2);
  const Cap inf = convert(total + 1);
  flow.set_infinity(inf);
  for (EdgeId id = 0; id < net.edge_count(); ++id) {
    const Edge& e = net.edge(id);
    if (e.is_loop()) {
      continue;
    }
    const Cap c = convert(scaled[id]);
    flow.add_arc_pair(e.u, e.v, c, c);
  }
  for (std::size_t i = 0; i < net.terminal_count(); ++i) {
    if (sources.contains(i)) {
      flow.add_arc_pair(s, net.terminal(i), inf, Cap(0));
    } else if (sinks.contains(i)) {
      flow.add_arc_pair(net.terminal(i), t, inf, Cap(0));
    }
  }
  const Cap value = flow.run(s, t);
  FlowOutcome out;
  if constexpr (std::is_same_v<Cap, std::int64_t>) {
    out.flowValue = Rational(BigInt(static_cast<long>(value)), scale);
  } else {
    out.flowValue = Rational(value, scale);
  }
  out.flowValue.canonicalize();
  auto reach = flow.reachable_from(s);
  auto toSink = flow.reaching(t);
  reach.resize(n);
  toSink.resize(n);
  out.sourceSide = std::move(reach);
  out.sinkReaching = std::move(toSink);
  return out;
}

void check_terminal_sets(const Network& net, TerminalSet sources, TerminalSet sinks) {
  const std::size_t k = net.terminal_count();
  if (k < 2) {
    throw Error(ErrorKind::InvalidTerminalCount, "cut queries need at least 2 terminals");
  }
  const std::uint64_t all = all_terminals_mask(k);
  if ((sources.bits & ~all) || (sinks.bits & ~all)) {
    throw Error(ErrorKind::InvalidQuery, "terminal set refers to terminals beyond k");
  }
  if (sources.empty() || sinks.empty() || (sources.bits & sinks.bits)) {
    throw Error(ErrorKind::InvalidQuery, "source and sink terminal sets must be nonempty and disjoint");
  }
}

FlowOutcome max_flow(const Network& net, TerminalSet sources, TerminalSet sinks) {
  check_terminal_sets(net, sources, sinks);
  const BigInt scale = net.common_denominator();
  std::vector<BigInt> scaled(net.edge_count());
  BigInt total = 0;
  for (EdgeId id = 0; id < net.edge_count(); ++id) {
    const Rational& c = net.edge(id).cost;
    scaled[id] = c.get_num() * (scale / c.get_den());
    total += scaled[id];
  }
  // int64 fast path whenever every residual capacity and the total flow stay
  // below 2^62; arbitrary precision otherwise.
  if (total < (BigInt(1) << 62)) {
    return solve<std::int64_t>(net, sources, sinks, scale, scaled, total);
  }
  return solve<BigInt>(net, sources, sinks, scale, scaled, total);
}

VertexSet to_vertex_set(const std::vector<char>& marks) {
  VertexSet out;
  for (VertexId v = 0; v < marks.size(); ++v) {
    if (marks[v]) {
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace

CutResult min_cut_between(const Network& net, TerminalSet sources, TerminalSet sinks) {
  FlowOutcome flow = max_flow(net, sources, sinks);
  CutResult out;
  out.cutset = boundary_edges(net, flow.sourceSide);
  out.value = edge_set_cost(net, out.cutset);
  if (out.value != flow.flowValue) {
    throw Error(ErrorKind::InternalError, "max-flow value " + format_rational(flow.flowValue) +
                                              " differs from cut value " + format_rational(out.value));
  }
  out.sideW = to_vertex_set(flow.sourceSide);
  return out;
}

CutResult min_separating_cut(const Network& net, const Bipartition& bp) {
  if (bp.k() != net.terminal_count()) {
    throw Error(ErrorKind::InvalidQuery, "bipartition built for a different terminal count");
  }
  return min_cut_between(net, bp.s_bar(), bp.s());
}

bool uniqueness_by_flow(const Network& net, const Bipartition& bp) {
  if (bp.k() != net.terminal_count()) {
    throw Error(ErrorKind::InvalidQuery, "bipartition built for a different terminal count");
  }
  FlowOutcome flow = max_flow(net, bp.s_bar(), bp.s());
  std::vector<char> maximalSourceSide(net.vertex_count());
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    maximalSourceSide[v] = flow.sinkReaching[v] ? 0 : 1;
  }
  return boundary_edges(net, flow.sourceSide) == boundary_edges(net, maximalSourceSide);
}

}  // namespace mimick
