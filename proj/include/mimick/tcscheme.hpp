#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mimick/bipartition.hpp"
#include "mimick/network.hpp"

namespace mimick {

inline constexpr std::size_t kMaxStoreTerminals = 28;

/// Table of every terminal cut value, indexed by Bipartition::index().
/// Values are kept as integers over one shared denominator.
class TCStore {
 public:
  TCStore() = default;
  TCStore(std::size_t k, BigInt denominator, std::vector<BigInt> scaled);

  std::size_t k() const { return k_; }
  const BigInt& denominator() const { return denominator_; }
  const std::vector<BigInt>& scaled_values() const { return scaled_; }
  std::size_t size() const { return scaled_.size(); }

  /// Bits per stored value: enough for the largest scaled value and for a
  /// vertex count of the source network, rounded up to whole bytes.
  std::uint32_t word_bits() const { return wordBits_; }
  void set_word_bits(std::uint32_t bits) { wordBits_ = bits; }

  Rational value_at(std::size_t index) const;

  friend bool operator==(const TCStore&, const TCStore&) = default;

 private:
  std::size_t k_ = 0;
  BigInt denominator_ = 1;
  std::vector<BigInt> scaled_;
  std::uint32_t wordBits_ = 8;
};

TCStore preprocess(const Network& net);

/// Either side may be passed. Throws Error(InvalidQuery) for ∅ or Q.
Rational query(const TCStore& store, TerminalSet side);

struct StorageReport {
  std::size_t valueWords = 0;
  std::size_t headerWords = 0;
  std::uint32_t wordBits = 0;
  std::size_t totalBits = 0;
  BigInt theoreticalBound;  // 2^k words
  bool withinBound = false;
};

StorageReport storage_report(const TCStore& store);

/// "TCS1", k (u32 LE), word bits (u32 LE), denominator (LEB128), values (LEB128).
std::string serialize(const TCStore& store);
TCStore deserialize(const std::string& bytes);

void write_store(std::ostream& out, const TCStore& store);
TCStore read_store(std::istream& in);

}  // namespace mimick
