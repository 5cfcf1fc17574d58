#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mimick/bipartition.hpp"
#include "mimick/graph_ops.hpp"
#include "mimick/network.hpp"

namespace mimick {

enum class Construction { ComponentContraction, SignatureMerge };

std::string to_string(Construction c);

struct MimickingStats {
  std::size_t inputVertices = 0;
  std::size_t inputEdges = 0;
  std::size_t outputVertices = 0;
  std::size_t outputEdges = 0;
  std::size_t componentsAfterRemoval = 0;  // |CC(G ∖ Ê)| for contraction, class count for signatures
  std::size_t droppedClasses = 0;          // terminal-free components of the input
  /// k²·2^{2k} telemetry (constant 1); saturates for large k.
  std::uint64_t sizeReference = 0;
  bool withinSizeReference = false;
};

/// Output vertex i corresponds to contraction class i. Classes at positions
/// ≥ network.vertex_count() are terminal-free input components that were
/// deleted rather than contracted.
struct MimickingResult {
  Network network;
  Construction construction = Construction::ComponentContraction;
  ContractionMap contractionMap;
  EdgeSet removedEdges;  // Ê for contraction; empty for signatures
  MimickingStats stats;
};

/// Ê: union of the canonical minimum cutsets over every bipartition.
EdgeSet terminal_cut_union(const Network& net);

/// Contracts every connected component of G ∖ Ê. Throws
/// Error(InternalError) if a component would hold two terminals.
MimickingResult build_by_contraction(const Network& net);

/// Merges vertices with equal side signatures across all canonical minimum
/// cuts. Classes need not be connected.
MimickingResult build_by_signature(const Network& net);

/// True when every class of the map induces a connected subgraph of G ∖ removed.
bool witnesses_minor(const Network& net, const ContractionMap& map, std::span<const EdgeId> removedEdges,
                     std::size_t keptClasses);

struct CutComparison {
  TerminalSet sources;
  TerminalSet sinks;
  Rational original;
  Rational candidate;
  bool equal = false;
};

struct VerificationReport {
  std::vector<CutComparison> perBipartition;
  std::vector<CutComparison> generalized;  // empty unless requested
  bool allEqual = false;
};

/// Compares every bipartition's minimum cut exactly. Throws Error(InvalidPair)
/// when the terminal counts differ.
VerificationReport verify(const Network& original, const Network& candidate);

/// Also compares every unordered pair of disjoint nonempty terminal sets (S, T)
/// with S ∪ T ≠ Q; the pairs with S ∪ T = Q are the bipartition rows.
VerificationReport verify_generalized(const Network& original, const Network& candidate);

/// All unordered disjoint nonempty (S, T) pairs with S ∪ T ≠ Q, S holding
/// the lowest terminal of S ∪ T.
std::vector<std::pair<TerminalSet, TerminalSet>> generalized_pairs(std::size_t k);

}  // namespace mimick
