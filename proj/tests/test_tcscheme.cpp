#include <doctest.h>

#include <sstream>

#include "mimick/error.hpp"
#include "mimick/lowerbound.hpp"
#include "mimick/mincut.hpp"
#include "mimick/tcscheme.hpp"
#include "support/campaign.hpp"
#include "support/nets.hpp"

using namespace mimick;
using mimick::testing::q;

namespace {

void check_round_trip(const Network& net) {
  const std::size_t k = net.terminal_count();
  const TCStore store = preprocess(net);
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << k); ++mask) {
    const TerminalSet s{mask};
    const TerminalSet comp{all_terminals_mask(k) & ~mask};
    const Rational direct = min_separating_cut(net, Bipartition(k, s)).value;
    CHECK(query(store, s) == direct);
    CHECK(query(store, comp) == direct);
  }
}

}  // namespace

TEST_CASE("single edge of cost 7") {
  const TCStore store = preprocess(testing::single_edge(7));
  CHECK(store.size() == 1);
  CHECK(store.value_at(0) == 7);
  CHECK(query(store, {0b10}) == 7);
  CHECK(query(store, {0b01}) == 7);
  const StorageReport r = storage_report(store);
  CHECK(r.valueWords == 1);
  CHECK(r.withinBound);
  CHECK(r.theoreticalBound == 4);
}

TEST_CASE("3-leaf star table") {
  const TCStore store = preprocess(star_network(3));
  REQUIRE(store.size() == 3);
  CHECK(store.value_at(0) == 1);
  CHECK(store.value_at(1) == 1);
  CHECK(store.value_at(2) == 1);
}

TEST_CASE("rational values share one denominator") {
  const Network path = testing::path2(q(5, 6), q(7, 4));
  const TCStore store = preprocess(path);
  CHECK(store.value_at(0) == q(5, 6));
  CHECK(query(store, {0b10}) == q(5, 6));
}

TEST_CASE("trivial and out-of-range queries") {
  const TCStore store = preprocess(star_network(3));
  for (std::uint64_t bad : {0b000ULL, 0b111ULL, 0b1000ULL}) {
    try {
      query(store, {bad});
      FAIL("expected invalid-query");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidQuery);
    }
  }
}

TEST_CASE("bipartite k=6 table") {
  const BipartiteFamily f = gen_bipartite(6);
  const TCStore store = preprocess(f.network);
  CHECK(store.size() == 31);
  CHECK(storage_report(store).valueWords <= 64);
  for (const TerminalSet s : f.subsets) {
    CHECK(query(store, s) == min_separating_cut(f.network, Bipartition(6, s)).value);
  }
}

TEST_CASE("storage word counts") {
  CHECK(storage_report(preprocess(star_network(2))).valueWords == 1);
  CHECK(storage_report(preprocess(star_network(6))).valueWords == 31);
  const StorageReport r10 = storage_report(preprocess(star_network(10)));
  CHECK(r10.valueWords == 511);
  CHECK(r10.withinBound);
  CHECK(r10.theoreticalBound == 1024);
}

TEST_CASE("round trip on random plane networks") {
  for (std::size_t i = 0; i < 40; ++i) {
    check_round_trip(random_planar(testing::campaign_options(i)).network());
  }
  check_round_trip(gen_grid(3).network());
}

TEST_CASE("binary format") {
  const TCStore store = preprocess(testing::single_edge(300));
  const std::string bytes = serialize(store);
  // magic, k=2, word bits, denominator 1, value 300 = 0xAC 0x02
  const std::string expected = std::string("TCS1") + std::string("\x02\x00\x00\x00", 4) +
                               std::string("\x10\x00\x00\x00", 4) + "\x01" + "\xAC\x02";
  CHECK(bytes == expected);
  const TCStore back = deserialize(bytes);
  CHECK(back == store);
  CHECK(serialize(back) == bytes);

  std::stringstream s;
  write_store(s, store);
  CHECK(read_store(s) == store);
}

TEST_CASE("serialization is stable on big values") {
  BigInt big(1);
  big <<= 100;
  const Network path = testing::path2(Rational(big, BigInt(3)), Rational(big));
  const TCStore store = preprocess(path);
  const TCStore back = deserialize(serialize(store));
  CHECK(back == store);
  CHECK(query(back, {0b10}) == make_rational(big, 3));
}

TEST_CASE("corrupt stores") {
  const std::string good = serialize(preprocess(star_network(3)));
  CHECK_THROWS_AS(deserialize("TCS2" + good.substr(4)), Error);
  CHECK_THROWS_AS(deserialize(good.substr(0, good.size() - 1)), Error);
  CHECK_THROWS_AS(deserialize(good + "x"), Error);
  CHECK_THROWS_AS(deserialize(""), Error);
  std::string bigK = good;
  bigK[4] = 60;
  CHECK_THROWS_AS(deserialize(bigK), Error);
}
