#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mimick/bipartition.hpp"
#include "mimick/incidence.hpp"
#include "mimick/network.hpp"
#include "mimick/planar.hpp"
#include "mimick/report.hpp"

namespace mimick {

/// Complete bipartite network: terminals q_1..q_k are vertices 0..k-1; the
/// non-terminal u_{S_i} (vertex k+i) stands for the i-th subset of size 2k/3
/// in ascending mask order. c(u_{S_i}, q) = 1 for q ∈ S_i, 2+ε otherwise,
/// ε = 1/k. Edge (u_{S_i}, q_j) has id i·k + j.
struct BipartiteFamily {
  std::size_t k = 0;
  std::size_t l = 0;
  Rational epsilon;
  std::vector<TerminalSet> subsets;
  Network network;

  VertexId u(std::size_t i) const { return static_cast<VertexId>(k + i); }
  EdgeId edge(std::size_t i, std::size_t terminal) const { return static_cast<EdgeId>(i * k + terminal); }
};

/// Throws Error(InvalidParameter) unless k ≥ 6 and 3 | k.
BipartiteFamily gen_bipartite(std::size_t k);

/// k×k grid u_{i,j} (column i, row j, 1-based) with terminals v_1..v_k
/// (terminal indices 0..k-1, v_j attached to u_{1,j}) and h_1..h_k (indices
/// k..2k-1, h_i attached to u_{i,1}). Attachments and the edges of the last
/// row and column cost k⁴; edges u_{i,j}–u_{i+1,j} cost 1; edges
/// u_{i,j}–u_{i,j+1} cost 1 − j/k⁴.
struct GridFamily {
  std::size_t k = 0;
  Rational heavy;
  PlaneEmbedding embedding;
  std::vector<EdgeId> horizontalIds;  // u_{i,j}–u_{i,j+1}, index (i-1)·(k-1) + (j-1)
  std::vector<EdgeId> verticalIds;    // u_{i,j}–u_{i+1,j}, index (i-1)·k + (j-1)

  const Network& network() const { return embedding.network(); }
  VertexId v(std::size_t j) const { return static_cast<VertexId>(j - 1); }
  VertexId h(std::size_t i) const { return static_cast<VertexId>(k + i - 1); }
  VertexId u(std::size_t i, std::size_t j) const { return static_cast<VertexId>(2 * k + (i - 1) * k + (j - 1)); }
  EdgeId horizontal(std::size_t i, std::size_t j) const { return horizontalIds.at((i - 1) * (k - 1) + (j - 1)); }
  EdgeId vertical(std::size_t i, std::size_t j) const { return verticalIds.at((i - 1) * k + (j - 1)); }
  Rational epsilon(std::size_t, std::size_t j) const;

  /// S_{i,j} = {h_1..h_i, v_1..v_j}.
  TerminalSet s(std::size_t i, std::size_t j) const;
  /// Horizontal edge of an ε-bearing pair (i, j ≤ k-1) or vertical edge of
  /// interior cost 1 (i ≤ k-1, j ≤ k-1).
  bool is_interior_horizontal(EdgeId id) const;
  bool is_interior_vertical(EdgeId id) const;
};

/// Throws Error(InvalidParameter) for k < 3.
GridFamily gen_grid(std::size_t k);

struct LemmaReport {
  std::vector<ClaimCheck> checks;
  bool allPass() const;
  std::size_t failures() const;
};

/// For each listed subset index (all when empty): the canonical minimum cut
/// separates {u_{S_i}} ∪ S̄_i from the rest, is unique, and every non-terminal
/// takes the side the lemma's cost comparison predicts.
LemmaReport verify_bipartite_lemma(const BipartiteFamily& fam, std::vector<std::size_t> subsetIndices = {});

/// For every 1 ≤ i,j ≤ k-1: value i + j − i·j/k⁴, the predicted side, a
/// unique cut, exactly i horizontal and j vertical interior edges; plus the
/// exhaustive oracle when requested (practical for k ≤ 4).
LemmaReport verify_grid_lemma(const GridFamily& fam, bool oracleCrossCheck);

struct RankBoundsReport {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
  std::size_t required = 0;
  bool rankHolds = false;
  bool triangularChecked = false;
  bool triangularHolds = false;
  std::size_t triangularViolations = 0;
};

RankBoundsReport verify_rank_bounds(const BipartiteFamily& fam);
RankBoundsReport verify_rank_bounds(const GridFamily& fam);

struct CollisionReport {
  std::size_t k = 0;
  std::size_t l = 0;
  Rational step;                       // the nonzero value 1/(6k²l)
  std::optional<Rational> uniqueGap;   // oracle gap over unique rows, when computable
  bool stepWithinGap = false;          // l·step < gap
  std::size_t uniqueRows = 0;
  std::size_t tiedRows = 0;
  std::vector<std::size_t> columns;    // the l independent columns used
  bool reordered = false;              // columns are not simply 0..l-1
  std::size_t pairs = 0;
  std::size_t distinguished = 0;
  std::size_t incidenceStable = 0;     // perturbed networks whose unique rows kept A
  std::size_t perturbedNetworks = 0;
  bool exhaustive = false;
  std::size_t distinctPhi = 0;         // exhaustive mode only

  bool allPass() const {
    return stepWithinGap && distinguished == pairs && incidenceStable == perturbedNetworks &&
           (!exhaustive || distinctPhi == (std::size_t{1} << l));
  }
};

/// Samples pairs w ≠ w′ from the 2^l cost shifts w: E → {0, 1/(6k²l)}
/// supported on l linearly independent columns, and checks that the unique
/// incidence rows stay fixed and that some cut value tells w from w′.
CollisionReport tc_collision_family(const BipartiteFamily& fam, std::size_t sampleCount, std::uint64_t seed,
                                    bool exhaustive = false);

/// Φ of the network whose costs are base + w, w being `step` on the columns
/// whose bit is set in `pattern` (bit t ↔ columns[t]).
std::vector<Rational> shifted_phi(const Network& base, const std::vector<std::size_t>& columns, std::uint64_t pattern,
                                  const Rational& step);

struct PerturbationCampaign {
  std::size_t seeds = 0;
  std::size_t stable = 0;
  std::size_t phiWithinBounds = 0;
  std::optional<Rational> gap;
  Rational bound;
  std::size_t checkedRows = 0;
  std::size_t tiedRows = 0;
  std::vector<std::string> failures;

  bool allPass() const { return stable == seeds && phiWithinBounds == seeds && failures.empty(); }
};

/// Runs perturb() for seeds firstSeed..firstSeed+count-1 on the unique rows
/// and checks A_{G,c} = A_{G,c+w} on the first draw together with
/// Φ ≤ Φ_{c+w} ≤ Φ + Σw on every row.
PerturbationCampaign perturbation_campaign(const Network& net, std::uint64_t firstSeed, std::size_t count,
                                           std::uint64_t resolution = kDefaultResolution);

/// Component and dual-circuit bounds on one connected plane network: every
/// bipartition's cutset leaves at most k components; for `pairCount` seeded
/// random pairs (S, T) the two-cutset and meeting-vertex bounds hold; and the
/// contraction output size equals |CC(G ∖ Ê)| and the face count of Ê* in the dual.
LemmaReport structural_bounds(const PlaneEmbedding& emb, std::size_t pairCount, std::uint64_t seed,
                              const std::string& instance = "input");

}  // namespace mimick
