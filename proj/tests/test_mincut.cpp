#include <doctest.h>

#include <algorithm>
#include <random>

#include "mimick/error.hpp"
#include "mimick/lowerbound.hpp"
#include "mimick/mincut.hpp"
#include "support/nets.hpp"

using namespace mimick;
using mimick::testing::q;

namespace {

const Bipartition kQ2(2, {0b10});

Network random_network(std::mt19937_64& rng, std::size_t n, std::size_t k, std::size_t m) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    const auto u = static_cast<VertexId>(rng() % n);
    const auto v = static_cast<VertexId>(rng() % n);
    edges.push_back({u, v, make_rational(static_cast<long>(1 + rng() % 20), static_cast<long>(1 + rng() % 6))});
  }
  std::vector<VertexId> all(n);
  for (std::size_t i = 0; i < n; ++i) {
    all[i] = static_cast<VertexId>(i);
  }
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(all[i], all[i + rng() % (n - i)]);
  }
  all.resize(k);
  return Network(n, std::move(edges), std::move(all));
}

}  // namespace

TEST_CASE("path with costs 3 and 5") {
  const Network path = testing::path2(3, 5);
  const CutResult cut = min_separating_cut(path, kQ2);
  CHECK(cut.value == 3);
  CHECK(cut.cutset == EdgeSet{0});
  CHECK(cut.sideW == VertexSet{0});
  CHECK(uniqueness_by_flow(path, kQ2));

  const OracleResult orc = min_cut_oracle(path, kQ2);
  CHECK(orc.value == 3);
  CHECK(orc.allMinCutsets.size() == 1);
  REQUIRE(orc.secondBestValue.has_value());
  CHECK(*orc.secondBestValue == 5);

  const GapReport g = gap(path, kQ2);
  CHECK(g.unique);
  CHECK(g.exact);
  REQUIRE(g.delta.has_value());
  CHECK(*g.delta == 2);
}

TEST_CASE("disconnected terminals cost nothing") {
  const Network net(4, {{0, 2, 1}, {1, 3, 1}}, {0, 1});
  const CutResult cut = min_separating_cut(net, kQ2);
  CHECK(cut.value == 0);
  CHECK(cut.cutset.empty());
  CHECK(min_cut_oracle(net, kQ2).value == 0);
}

TEST_CASE("symmetric 4-cycle has several minimum cuts") {
  const Network c4 = testing::four_cycle();
  const OracleResult orc = min_cut_oracle(c4, kQ2);
  CHECK(orc.value == 2);
  // a and b each go with either terminal: four assignments, all of cost 2
  CHECK(orc.allMinCutsets.size() == 4);
  CHECK(std::find(orc.allMinCutsets.begin(), orc.allMinCutsets.end(), EdgeSet{0, 3}) != orc.allMinCutsets.end());
  CHECK(std::find(orc.allMinCutsets.begin(), orc.allMinCutsets.end(), EdgeSet{1, 2}) != orc.allMinCutsets.end());
  CHECK_FALSE(uniqueness_by_flow(c4, kQ2));
  const GapReport g = gap(c4, kQ2);
  CHECK_FALSE(g.unique);
  REQUIRE(g.delta.has_value());
  CHECK(*g.delta == 0);
  CHECK(min_separating_cut(c4, kQ2).cutset == EdgeSet{0, 3});
}

TEST_CASE("cut with no alternative has infinite gap") {
  const Network e = testing::single_edge(7);
  const GapReport g = gap(e, kQ2);
  CHECK(g.unique);
  CHECK(g.exact);
  CHECK_FALSE(g.delta.has_value());
  CHECK_FALSE(network_gap(e).has_value());
}

TEST_CASE("grid k=4 S_{2,3} and S_{1,1}") {
  const GridFamily fam = gen_grid(4);
  CHECK(min_separating_cut(fam.network(), Bipartition(8, fam.s(2, 3))).value == q(637, 128));
  const Bipartition s11(8, fam.s(1, 1));
  CHECK(min_separating_cut(fam.network(), s11).value == q(511, 256));
  CHECK(uniqueness_by_flow(fam.network(), s11));
  CHECK(gap(fam.network(), s11).unique);
}

TEST_CASE("bipartite k=6 subset cuts are unique and match the oracle") {
  const BipartiteFamily fam = gen_bipartite(6);
  for (std::size_t i = 0; i < fam.l; ++i) {
    const Bipartition bp(6, fam.subsets[i]);
    const CutResult cut = min_separating_cut(fam.network, bp);
    CHECK(uniqueness_by_flow(fam.network, bp));
    const OracleResult orc = min_cut_oracle(fam.network, bp);
    CHECK(orc.value == cut.value);
    REQUIRE(orc.allMinCutsets.size() == 1);
    CHECK(orc.allMinCutsets[0] == cut.cutset);
    // gap on these rows is 2ε = 1/3
    CHECK(*gap(fam.network, bp).delta == q(1, 3));
  }
}

TEST_CASE("bipartite k=6 has tied rows outside the subset family") {
  const BipartiteFamily fam = gen_bipartite(6);
  // |S| = 3: any u_{S_j} with |S_j ∩ S| = 2 costs 4 + ε on either side
  const Bipartition half(6, {0b000111});
  CHECK_FALSE(uniqueness_by_flow(fam.network, half));
  const auto g = network_gap(fam.network);
  REQUIRE(g.has_value());
  CHECK(*g == 0);
}

TEST_CASE("oracle capacity") {
  const GridFamily fam = gen_grid(5);
  CHECK_FALSE(within_oracle_capacity(fam.network()));
  try {
    min_cut_oracle(fam.network(), Bipartition(10, fam.s(1, 1)));
    FAIL("expected capacity error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OracleCapacityExceeded);
  }
  const GapReport g = gap(fam.network(), Bipartition(10, fam.s(1, 1)));
  CHECK(g.unique);
  CHECK_FALSE(g.exact);
  CHECK_THROWS_AS(gap(fam.network(), Bipartition(10, fam.s(1, 1)), GapMode::RequireDelta), Error);
}

TEST_CASE("min_cut_between with free terminals") {
  // q1 - q3 - q2 in a path with q3 unconstrained
  const Network net(3, {{0, 2, 4}, {2, 1, 6}}, {0, 1, 2});
  const CutResult cut = min_cut_between(net, {0b001}, {0b010});
  CHECK(cut.value == 4);
  const OracleResult orc = min_cut_oracle(net, {0b001}, {0b010});
  CHECK(orc.value == 4);
  CHECK_THROWS_AS(min_cut_between(net, {0b001}, {0b001}), Error);
  CHECK_THROWS_AS(min_cut_between(net, {0}, {0b010}), Error);
}

TEST_CASE("large costs take the big-integer flow path") {
  BigInt big(1);
  big <<= 80;
  const Network path = testing::path2(Rational(big), Rational(big + 1));
  CHECK(min_separating_cut(path, kQ2).value == Rational(big));
  const Network tiny = testing::path2(Rational(BigInt(1), big), Rational(BigInt(3), big));
  CHECK(min_separating_cut(tiny, kQ2).value == Rational(BigInt(1), big));
}

TEST_CASE("flow agrees with the oracle on random multigraphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 3 + rng() % 10;
    const std::size_t k = 2 + rng() % std::min<std::size_t>(n - 1, 4);
    const Network net = random_network(rng, n, k, n + rng() % (2 * n));
    for (const Bipartition& bp : enumerate_bipartitions(k)) {
      const CutResult cut = min_separating_cut(net, bp);
      const OracleResult orc = min_cut_oracle(net, bp);
      CAPTURE(trial);
      CHECK(cut.value == orc.value);
      CHECK(std::binary_search(orc.allMinCutsets.begin(), orc.allMinCutsets.end(), cut.cutset));
      CHECK(uniqueness_by_flow(net, bp) == (orc.allMinCutsets.size() == 1));
      CHECK(edge_set_cost(net, cut.cutset) == cut.value);
    }
  }
}
