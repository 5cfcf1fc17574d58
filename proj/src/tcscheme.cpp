#include "mimick/tcscheme.hpp"

#include <istream>
#include <iterator>
#include <ostream>

#include "mimick/error.hpp"
#include "mimick/mincut.hpp"

namespace mimick {

namespace {

std::uint32_t bit_length(const BigInt& v) {
  return v == 0 ? 1 : static_cast<std::uint32_t>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

std::uint32_t round_to_bytes(std::uint32_t bits) {
  return (bits + 7) / 8 * 8;
}

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) {
    out.push_back(static_cast<char>((v >> (8 * i)) & 0xFFU));
  }
}

void put_varint(std::string& out, BigInt v) {
  if (v < 0) {
    throw Error(ErrorKind::InternalError, "negative value in varint");
  }
  do {
    const BigInt low = v & BigInt(0x7F);
    v >>= 7;
    auto byte = static_cast<unsigned char>(low.get_ui());
    if (v != 0) {
      byte |= 0x80U;
    }
    out.push_back(static_cast<char>(byte));
  } while (v != 0);
}

struct Reader {
  const std::string& bytes;
  std::size_t pos = 0;

  std::uint8_t byte() {
    if (pos >= bytes.size()) {
      throw Error(ErrorKind::ParseError, "truncated TC store");
    }
    return static_cast<std::uint8_t>(bytes[pos++]);
  }

  std::uint32_t u32() {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) {
      v |= static_cast<std::uint32_t>(byte()) << (8 * i);
    }
    return v;
  }

  BigInt varint() {
    BigInt v = 0;
    unsigned shift = 0;
    while (true) {
      const std::uint8_t b = byte();
      BigInt part = b & 0x7FU;
      part <<= shift;
      v += part;
      if ((b & 0x80U) == 0) {
        return v;
      }
      shift += 7;
    }
  }
};

}  // namespace

TCStore::TCStore(std::size_t k, BigInt denominator, std::vector<BigInt> scaled)
    : k_(k), denominator_(std::move(denominator)), scaled_(std::move(scaled)) {
  if (k_ < 2 || k_ > kMaxStoreTerminals) {
    throw Error(ErrorKind::InvalidTerminalCount, "TC store needs 2 <= k <= " + std::to_string(kMaxStoreTerminals));
  }
  if (denominator_ <= 0) {
    throw Error(ErrorKind::InvalidParameter, "TC store denominator must be positive");
  }
  if (scaled_.size() != bipartition_count(k_)) {
    throw Error(ErrorKind::InvalidParameter, "TC store holds " + std::to_string(scaled_.size()) + " values, expected " +
                                                 std::to_string(bipartition_count(k_)));
  }
  BigInt maxValue = 0;
  for (const BigInt& v : scaled_) {
    if (v < 0) {
      throw Error(ErrorKind::InvalidParameter, "negative cut value");
    }
    maxValue = v > maxValue ? v : maxValue;
  }
  wordBits_ = round_to_bytes(bit_length(maxValue));
}

Rational TCStore::value_at(std::size_t index) const {
  return make_rational(scaled_.at(index), denominator_);
}

TCStore preprocess(const Network& net) {
  const std::size_t k = net.terminal_count();
  const std::vector<Bipartition> rows = enumerate_bipartitions(k);
  std::vector<Rational> values;
  values.reserve(rows.size());
  BigInt den = 1;
  for (const Bipartition& bp : rows) {
    values.push_back(min_separating_cut(net, bp).value);
    den = lcm(den, values.back().get_den());
  }
  std::vector<BigInt> scaled;
  scaled.reserve(values.size());
  for (const Rational& v : values) {
    scaled.push_back(v.get_num() * (den / v.get_den()));
  }
  TCStore store(k, den, std::move(scaled));
  const std::uint32_t nbits = round_to_bytes(bit_length(BigInt(static_cast<unsigned long>(net.vertex_count()))));
  if (nbits > store.word_bits()) {
    store.set_word_bits(nbits);
  }
  return store;
}

Rational query(const TCStore& store, TerminalSet side) {
  if ((side.bits & ~all_terminals_mask(store.k())) != 0) {
    throw Error(ErrorKind::InvalidQuery, "query names a terminal beyond q" + std::to_string(store.k()));
  }
  return store.value_at(Bipartition(store.k(), side).index());
}

StorageReport storage_report(const TCStore& store) {
  StorageReport r;
  r.valueWords = store.size();
  r.wordBits = store.word_bits();
  // k and word size, plus the denominator in words of the same width.
  r.headerWords = 2 + (bit_length(store.denominator()) + r.wordBits - 1) / r.wordBits;
  r.totalBits = (r.valueWords + r.headerWords) * r.wordBits;
  r.theoreticalBound = BigInt(1);
  r.theoreticalBound <<= static_cast<mp_bitcnt_t>(store.k());
  r.withinBound = BigInt(static_cast<unsigned long>(r.valueWords)) <= r.theoreticalBound;
  return r;
}

std::string serialize(const TCStore& store) {
  std::string out = "TCS1";
  put_u32(out, static_cast<std::uint32_t>(store.k()));
  put_u32(out, store.word_bits());
  put_varint(out, store.denominator());
  for (const BigInt& v : store.scaled_values()) {
    put_varint(out, v);
  }
  return out;
}

TCStore deserialize(const std::string& bytes) {
  if (bytes.size() < 4 || bytes.compare(0, 4, "TCS1") != 0) {
    throw Error(ErrorKind::ParseError, "missing TCS1 magic");
  }
  Reader in{bytes, 4};
  const std::uint32_t k = in.u32();
  const std::uint32_t wordBits = in.u32();
  if (k < 2 || k > kMaxStoreTerminals) {
    throw Error(ErrorKind::ParseError, "bad terminal count " + std::to_string(k));
  }
  BigInt den = in.varint();
  std::vector<BigInt> values(bipartition_count(k));
  for (BigInt& v : values) {
    v = in.varint();
  }
  if (in.pos != bytes.size()) {
    throw Error(ErrorKind::ParseError, "trailing bytes after TC store");
  }
  TCStore store(k, std::move(den), std::move(values));
  store.set_word_bits(wordBits);
  return store;
}

void write_store(std::ostream& out, const TCStore& store) {
  const std::string bytes = serialize(store);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

TCStore read_store(std::istream& in) {
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return deserialize(bytes);
}

}  // namespace mimick
