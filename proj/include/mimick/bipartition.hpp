#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace mimick {

/// Largest terminal count representable by the 64-bit terminal masks.
inline constexpr std::size_t kMaxTerminals = 63;

/// Subset of terminal indices; bit i stands for q_{i+1}.
struct TerminalSet {
  std::uint64_t bits = 0;

  bool contains(std::size_t index) const { return (bits >> index) & 1U; }
  std::size_t size() const { return static_cast<std::size_t>(__builtin_popcountll(bits)); }
  bool empty() const { return bits == 0; }

  friend bool operator==(TerminalSet, TerminalSet) = default;
  friend auto operator<=>(TerminalSet, TerminalSet) = default;
};

inline std::uint64_t all_terminals_mask(std::size_t k) {
  return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
}

/// Canonical nontrivial split (S, S̄) of k terminals. The mask holds S; bit 0
/// is always clear, so q_1 lies in S̄.
class Bipartition {
 public:
  /// Canonicalizes: a mask with bit 0 set is complemented. Throws
  /// Error(InvalidQuery) for the trivial splits.
  Bipartition(std::size_t k, TerminalSet side);

  std::size_t k() const { return k_; }
  TerminalSet s() const { return {mask_}; }
  TerminalSet s_bar() const { return {all_terminals_mask(k_) & ~mask_}; }
  std::uint64_t mask() const { return mask_; }

  /// Position in enumerate_bipartitions(k).
  std::size_t index() const { return static_cast<std::size_t>(mask_ / 2 - 1); }

  std::string to_string() const;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;

 private:
  std::size_t k_;
  std::uint64_t mask_;
};

/// Number of nontrivial bipartitions, 2^{k-1} - 1.
std::size_t bipartition_count(std::size_t k);

/// All canonical bipartitions in ascending mask order. This order is the row
/// order of every incidence matrix. Throws Error(InvalidTerminalCount) for k < 2.
std::vector<Bipartition> enumerate_bipartitions(std::size_t k);

Bipartition bipartition_at(std::size_t k, std::size_t index);

}  // namespace mimick
