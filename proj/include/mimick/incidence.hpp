#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mimick/bipartition.hpp"
#include "mimick/mincut.hpp"
#include "mimick/network.hpp"

namespace mimick {

/// Cutset-edge incidence matrix: one row per listed bipartition, one column
/// per edge id, entry 1 iff the edge lies in that row's canonical minimum
/// cutset. phi holds the matching minimum cut values.
struct IncidenceMatrix {
  std::vector<Bipartition> rowSplits;
  std::size_t cols = 0;
  std::vector<std::uint8_t> bits;  // row-major
  std::vector<Rational> phi;

  std::size_t rows() const { return rowSplits.size(); }
  bool at(std::size_t r, std::size_t c) const { return bits[r * cols + c] != 0; }
  std::span<const std::uint8_t> row(std::size_t r) const {
    return std::span<const std::uint8_t>(bits).subspan(r * cols, cols);
  }

  /// Restriction to the given row positions, in that order.
  IncidenceMatrix select_rows(std::span<const std::size_t> rowPositions) const;
};

/// Full matrix over enumerate_bipartitions(k). Asserts A·c = Φ before
/// returning (Error(InternalError) otherwise).
IncidenceMatrix build_incidence(const Network& net);
IncidenceMatrix build_incidence(const Network& net, std::span<const Bipartition> rows);

/// Exact rank over the rationals via fraction-free elimination.
std::size_t rank(const IncidenceMatrix& mat);
std::size_t rank(const std::vector<std::vector<BigInt>>& matrix);

/// Column indices of a maximal linearly independent column set, chosen
/// greedily left to right.
std::vector<std::size_t> independent_columns(const IncidenceMatrix& mat);

/// Plain-text export: "m ncols", m rows of 0/1 digits, then m values num/den.
void write_incidence(std::ostream& out, const IncidenceMatrix& mat);
IncidenceMatrix read_incidence(std::istream& in);

inline constexpr std::uint64_t kDefaultResolution = std::uint64_t{1} << 40;

enum class PerturbScope {
  /// Every bipartition row; needs every minimum cut to be unique.
  AllRows,
  /// Only rows whose minimum cut is unique; tied rows are left out of the gap
  /// and of the equality check.
  UniqueRows,
};

struct PerturbOptions {
  std::uint64_t resolution = kDefaultResolution;
  PerturbScope scope = PerturbScope::AllRows;
  /// Caller-supplied gap (e.g. known in closed form) for instances beyond
  /// the oracle; used with the rows in `rows`, or all rows when empty.
  std::optional<Rational> knownGap;
  std::vector<Bipartition> rows;
  int maxAttempts = 8;
};

struct PerturbedNetwork {
  Network base;
  Network perturbed;
  std::vector<Rational> w;
  std::uint64_t seed = 0;
  /// Gap over the checked rows; empty = infinite.
  std::optional<Rational> gap;
  /// Upper end of the sampling range for each w(e).
  Rational bound;
  std::vector<Bipartition> checkedRows;
  std::size_t tiedRows = 0;
  int attempts = 0;
};

/// Samples w(e) = t·bound/D with t uniform in [0, D) from a seeded
/// mt19937_64, where bound = min(1/(Δ|E|), Δ/|E|), then checks that the
/// incidence rows in scope are unchanged, resampling on failure.
/// Errors: NonuniqueCuts (gap 0 on the scope), PerturbationFailed.
PerturbedNetwork perturb(const Network& net, std::uint64_t seed, const PerturbOptions& options = {});

/// Sampling range for a gap Δ over a network with edgeCount edges.
Rational perturbation_bound(const std::optional<Rational>& gap, std::size_t edgeCount);

struct RankBoundReport {
  std::size_t rank = 0;
  std::size_t rows = 0;
  std::size_t candidateEdgeCount = 0;
  bool candidateRuledOut = false;
  std::vector<Rational> perturbedPhi;
  PerturbedNetwork perturbation;
  std::string claim;
};

/// Perturbs net and reports the rank of the (scoped) incidence matrix as the
/// minimum edge count of any mimicking network of the perturbed costs.
RankBoundReport rank_bound_experiment(const Network& net, std::size_t candidateEdgeCount, std::uint64_t seed,
                                      const PerturbOptions& options = {});

}  // namespace mimick
