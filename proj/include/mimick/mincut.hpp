#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mimick/bipartition.hpp"
#include "mimick/graph_ops.hpp"
#include "mimick/network.hpp"

namespace mimick {

/// A minimum cut. sideW is the side holding the source terminals (for a
/// bipartition: S̄, which contains q_1); it is the inclusion-minimal such side.
struct CutResult {
  Rational value;
  EdgeSet cutset;
  VertexSet sideW;
};

/// Minimum cut separating the terminals in `sources` from those in `sinks`;
/// terminals in neither set are unconstrained. Both sets must be nonempty and
/// disjoint. The returned side is residual-reachable from the contracted source.
CutResult min_cut_between(const Network& net, TerminalSet sources, TerminalSet sinks);

/// Canonical minimum S-separating cut: sources = S̄ (q_1's side), sinks = S.
CutResult min_separating_cut(const Network& net, const Bipartition& bp);

/// True iff the source-minimal and sink-minimal minimum cuts share a cutset,
/// which (with positive costs) means the minimum cutset is unique.
bool uniqueness_by_flow(const Network& net, const Bipartition& bp);

/// Exhaustive enumeration works over 2^{free} side assignments, free being
/// the number of vertices outside sources ∪ sinks.
inline constexpr std::size_t kOracleMaxFreeVertices = 22;

struct OracleResult {
  Rational value;
  std::vector<EdgeSet> allMinCutsets;  // sorted lexicographically
  /// Cheapest cost among cutsets that are not minimum; empty when no other cut exists.
  std::optional<Rational> secondBestValue;
};

/// Brute-force oracle over every side assignment of the free vertices.
/// Throws Error(OracleCapacityExceeded) beyond kOracleMaxFreeVertices.
OracleResult min_cut_oracle(const Network& net, TerminalSet sources, TerminalSet sinks);
OracleResult min_cut_oracle(const Network& net, const Bipartition& bp);

bool within_oracle_capacity(const Network& net);

struct GapReport {
  bool unique = false;
  /// True when computed by the oracle; false means only the uniqueness flag
  /// (from the flow test) is meaningful.
  bool exact = false;
  /// Second-smallest minus smallest cut cost. Empty either because the
  /// instance is beyond the oracle (exact == false) or because no second cut
  /// exists at all (exact == true, infinite gap).
  std::optional<Rational> delta;
  std::optional<Rational> secondBestValue;
};

enum class GapMode { AllowFlowFallback, RequireDelta };

GapReport gap(const Network& net, const Bipartition& bp, GapMode mode = GapMode::AllowFlowFallback);

/// Minimum of the per-bipartition gaps over `rows` (all bipartitions when
/// empty). Empty result means the gap is infinite. Needs oracle capacity.
std::optional<Rational> network_gap(const Network& net, std::span<const Bipartition> rows = {});

}  // namespace mimick
