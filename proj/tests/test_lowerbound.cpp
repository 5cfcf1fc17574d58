#include <doctest.h>

#include "mimick/error.hpp"
#include "mimick/graph_io.hpp"
#include "mimick/lowerbound.hpp"
#include "mimick/mincut.hpp"
#include "support/nets.hpp"

using namespace mimick;
using mimick::testing::q;

TEST_CASE("bipartite family shape") {
  const BipartiteFamily f = gen_bipartite(6);
  CHECK(f.l == 15);
  CHECK(f.network.vertex_count() == 21);
  CHECK(f.network.edge_count() == 90);
  CHECK(f.epsilon == q(1, 6));
  CHECK(f.epsilon * Rational(6) / Rational(3) < 1);
  for (std::size_t i = 0; i < f.l; ++i) {
    Rational toS = 0;
    Rational all = 0;
    for (std::size_t t = 0; t < 6; ++t) {
      const Edge& e = f.network.edge(f.edge(i, t));
      CHECK(e.u == f.u(i));
      CHECK(e.v == t);
      CHECK(e.cost == (f.subsets[i].contains(t) ? Rational(1) : q(13, 6)));
      all += e.cost;
      if (f.subsets[i].contains(t)) {
        toS += e.cost;
      }
    }
    CHECK(all == q(50, 6));
    CHECK(toS == 4);
    CHECK(toS < all - toS);
  }
  CHECK(gen_bipartite(9).l == 84);
  CHECK(gen_bipartite(9).network.vertex_count() == 93);
}

TEST_CASE("bipartite family rejects bad k") {
  for (std::size_t k : {0, 3, 4, 7, 8}) {
    try {
      gen_bipartite(k);
      FAIL("expected invalid-parameter");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidParameter);
    }
  }
}

TEST_CASE("grid family shape") {
  const GridFamily g = gen_grid(4);
  const Network& net = g.network();
  CHECK(net.terminal_count() == 8);
  CHECK(net.vertex_count() == 24);
  CHECK(net.edge_count() == 8 + 2 * 4 * 3);
  CHECK(g.heavy == 256);
  CHECK(net.edge(g.horizontal(1, 2)).cost == q(127, 128));
  CHECK(net.edge(g.horizontal(1, 2)).u == g.u(1, 2));
  CHECK(net.edge(g.horizontal(1, 2)).v == g.u(1, 3));
  CHECK(net.edge(g.vertical(2, 3)).cost == 1);
  CHECK(net.edge(g.horizontal(4, 1)).cost == 256);
  CHECK(net.edge(g.vertical(1, 4)).cost == 256);
  CHECK(g.epsilon(1, 3) == q(3, 256));
  Rational mass = 0;
  for (std::size_t i = 1; i < 4; ++i) {
    for (std::size_t j = 1; j < 4; ++j) {
      mass += g.epsilon(i, j);
    }
  }
  CHECK(mass < 1);
  for (const Edge& e : net.edges()) {
    if (e.u < 8 || e.v < 8) {
      CHECK(e.cost == 256);
    }
  }
  CHECK(gen_grid(3).heavy == 81);
  CHECK_THROWS_AS(gen_grid(2), Error);
  CHECK(g.is_interior_horizontal(g.horizontal(3, 3)));
  CHECK_FALSE(g.is_interior_horizontal(g.horizontal(4, 3)));
  CHECK(g.is_interior_vertical(g.vertical(3, 3)));
  CHECK_FALSE(g.is_interior_vertical(g.vertical(3, 4)));
  CHECK(g.s(2, 3).bits == 0b0011'0111);
}

TEST_CASE("generators are deterministic") {
  CHECK(serialize_graph(gen_grid(4).embedding) == serialize_graph(gen_grid(4).embedding));
  CHECK(serialize_graph(gen_bipartite(6).network) == serialize_graph(gen_bipartite(6).network));
}

TEST_CASE("bipartite lemma") {
  const BipartiteFamily f = gen_bipartite(6);
  const LemmaReport r = verify_bipartite_lemma(f);
  CHECK(r.checks.size() == 15 * 4);
  CHECK(r.allPass());
  CHECK(r.failures() == 0);
  const LemmaReport r9 = verify_bipartite_lemma(gen_bipartite(9), {0, 17, 83});
  CHECK(r9.checks.size() == 12);
  CHECK(r9.allPass());
  CHECK_THROWS_AS(verify_bipartite_lemma(f, {15}), Error);
}

TEST_CASE("grid lemma") {
  const LemmaReport r3 = verify_grid_lemma(gen_grid(3), true);
  CHECK(r3.checks.size() == 4 * 5);
  CHECK(r3.allPass());
  const LemmaReport r5 = verify_grid_lemma(gen_grid(5), false);
  CHECK(r5.checks.size() == 16 * 4);
  CHECK(r5.allPass());
  // c_{2,3} at k=4
  bool seen = false;
  for (const ClaimCheck& c : verify_grid_lemma(gen_grid(4), false).checks) {
    if (c.claim == "grid-value" && c.instance == "grid k=4 (i,j)=(2,3)") {
      CHECK(c.observed == "637/128");
      seen = true;
    }
  }
  CHECK(seen);
}

TEST_CASE("grid values by hand at k=3") {
  const GridFamily g = gen_grid(3);
  // c_{i,j} = i + j - i*j/81
  CHECK(min_separating_cut(g.network(), Bipartition(6, g.s(1, 1))).value == q(161, 81));
  CHECK(min_separating_cut(g.network(), Bipartition(6, g.s(2, 2))).value == q(320, 81));
}

TEST_CASE("rank bounds") {
  const RankBoundsReport b = verify_rank_bounds(gen_bipartite(6));
  CHECK(b.required == 15);
  CHECK(b.rankHolds);
  CHECK_FALSE(b.triangularChecked);
  for (std::size_t k = 3; k <= 5; ++k) {
    const RankBoundsReport g = verify_rank_bounds(gen_grid(k));
    CHECK(g.required == (k - 1) * (k - 1));
    CHECK(g.rankHolds);
    CHECK(g.triangularChecked);
    CHECK(g.triangularHolds);
    CHECK(g.rows == (std::size_t{1} << (2 * k - 1)) - 1);
  }
}

TEST_CASE("tc collision family at k=6") {
  const BipartiteFamily f = gen_bipartite(6);
  const CollisionReport r = tc_collision_family(f, 100, 7);
  CHECK(r.pairs == 100);
  CHECK(r.distinguished == 100);
  CHECK(r.step == q(1, 6 * 36 * 15));
  REQUIRE(r.uniqueGap.has_value());
  CHECK(*r.uniqueGap == q(1, 3));
  CHECK(r.stepWithinGap);
  CHECK(r.columns.size() == 15);
  CHECK(r.incidenceStable == r.perturbedNetworks);
  CHECK(r.allPass());
  // same seed, same report
  const CollisionReport again = tc_collision_family(f, 100, 7);
  CHECK(again.columns == r.columns);
  CHECK(again.perturbedNetworks == r.perturbedNetworks);
}

TEST_CASE("shifted phi") {
  const BipartiteFamily f = gen_bipartite(6);
  const CollisionReport r = tc_collision_family(f, 1, 1);
  const auto zero = shifted_phi(f.network, r.columns, 0, r.step);
  CHECK(zero == shifted_phi(f.network, r.columns, 0, r.step));
  for (std::size_t t = 0; t < r.columns.size(); ++t) {
    CHECK(shifted_phi(f.network, r.columns, std::uint64_t{1} << t, r.step) != zero);
  }
}

TEST_CASE("perturbation campaign") {
  const PerturbationCampaign c = perturbation_campaign(gen_grid(3).network(), 1, 10);
  CHECK(c.seeds == 10);
  CHECK(c.allPass());
  REQUIRE(c.gap.has_value());
  CHECK(*c.gap == q(1, 81));
  CHECK(c.tiedRows == 0);
  const PerturbationCampaign path = perturbation_campaign(testing::path2(3, 5), 1, 5);
  CHECK(path.allPass());
  CHECK(path.bound == q(1, 4));
}
