#include "mimick/bipartition.hpp"

#include "mimick/error.hpp"

namespace mimick {

namespace {

void check_k(std::size_t k) {
  if (k < 2) {
    throw Error(ErrorKind::InvalidTerminalCount, "need at least 2 terminals, got " + std::to_string(k));
  }
  if (k > kMaxTerminals) {
    throw Error(ErrorKind::InvalidTerminalCount, "at most 63 terminals supported");
  }
}

}  // namespace

Bipartition::Bipartition(std::size_t k, TerminalSet side) : k_(k) {
  check_k(k);
  const std::uint64_t all = all_terminals_mask(k);
  std::uint64_t mask = side.bits;
  if (mask & ~all) {
    throw Error(ErrorKind::InvalidQuery, "terminal set refers to terminals beyond k");
  }
  if (mask & 1U) {
    mask = all & ~mask;
  }
  if (mask == 0) {
    throw Error(ErrorKind::InvalidQuery, "trivial terminal split");
  }
  mask_ = mask;
}

std::string Bipartition::to_string() const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < k_; ++i) {
    if ((mask_ >> i) & 1U) {
      out += first ? "" : ",";
      out += "q" + std::to_string(i + 1);
      first = false;
    }
  }
  return out + "}";
}

std::size_t bipartition_count(std::size_t k) {
  check_k(k);
  return static_cast<std::size_t>((std::uint64_t{1} << (k - 1)) - 1);
}

std::vector<Bipartition> enumerate_bipartitions(std::size_t k) {
  const std::size_t m = bipartition_count(k);
  std::vector<Bipartition> out;
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    out.emplace_back(k, TerminalSet{2 * (static_cast<std::uint64_t>(i) + 1)});
  }
  return out;
}

Bipartition bipartition_at(std::size_t k, std::size_t index) {
  if (index >= bipartition_count(k)) {
    throw Error(ErrorKind::InvalidQuery, "bipartition index out of range");
  }
  return Bipartition(k, TerminalSet{2 * (static_cast<std::uint64_t>(index) + 1)});
}

}  // namespace mimick
