#include <doctest.h>

#include "mimick/bipartition.hpp"
#include "mimick/error.hpp"
#include "mimick/graph_io.hpp"
#include "mimick/graph_ops.hpp"
#include "mimick/lowerbound.hpp"
#include "support/nets.hpp"

using namespace mimick;
using mimick::testing::q;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InternalError;
}

}  // namespace

TEST_CASE("rationals are canonical and printed as num/den") {
  CHECK(format_rational(make_rational(6, -4)) == "-3/2");
  CHECK(format_rational(parse_rational("7")) == "7/1");
  CHECK(parse_rational("10/4") == q(5, 2));
  CHECK(parse_rational("-3/9") == q(-1, 3));
  CHECK(kind_of([] { parse_rational("1/0"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_rational("x"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_rational(""); }) == ErrorKind::ParseError);
  CHECK(lcm(BigInt(4), BigInt(6)) == 12);
}

TEST_CASE("network validation") {
  CHECK(kind_of([] { Network(2, {{0, 2, 1}}, {0, 1}); }) == ErrorKind::InvalidEdge);
  CHECK(kind_of([] { Network(2, {{0, 1, 0}}, {0, 1}); }) == ErrorKind::InvalidNetwork);
  CHECK(kind_of([] { Network(2, {{0, 1, -1}}, {0, 1}); }) == ErrorKind::InvalidNetwork);
  CHECK(kind_of([] { Network(2, {{0, 1, 1}}, {0, 0}); }) == ErrorKind::InvalidNetwork);
  CHECK(kind_of([] { Network(2, {{0, 1, 1}}, {0, 5}); }) != ErrorKind::InternalError);

  // parallel edges and loops are fine
  const Network multi(2, {{0, 1, 1}, {0, 1, 2}, {1, 1, 3}}, {0, 1});
  CHECK(multi.edge_count() == 3);
  CHECK(multi.incident(1).size() == 3);
  CHECK(multi.total_cost() == 6);
  CHECK(multi.terminal_index(1) == 1);
  CHECK_FALSE(multi.terminal_index(5).has_value());

  // non-canonical costs are normalized on construction
  Rational raw(6, 4);
  const Network n1(2, {{0, 1, raw}}, {0, 1});
  CHECK(format_rational(n1.edge(0).cost) == "3/2");
}

TEST_CASE("bipartitions: enumeration, canonical form, index") {
  const auto k2 = enumerate_bipartitions(2);
  REQUIRE(k2.size() == 1);
  CHECK(k2[0].mask() == 0b10);
  const auto k3 = enumerate_bipartitions(3);
  REQUIRE(k3.size() == 3);
  CHECK(k3[0].to_string() == "{q2}");
  CHECK(k3[1].to_string() == "{q3}");
  CHECK(k3[2].to_string() == "{q2,q3}");
  CHECK(enumerate_bipartitions(6).size() == 31);
  CHECK(bipartition_count(10) == 511);
  CHECK(kind_of([] { enumerate_bipartitions(1); }) == ErrorKind::InvalidTerminalCount);

  // S and its complement name the same split
  const Bipartition a(4, {0b0110});
  const Bipartition b(4, {0b1001});
  CHECK(a == b);
  CHECK(a.s().bits == 0b0110);
  CHECK(a.s_bar().bits == 0b1001);
  for (std::size_t i = 0; i < k3.size(); ++i) {
    CHECK(k3[i].index() == i);
    CHECK(bipartition_at(3, i) == k3[i]);
  }
  CHECK(kind_of([] { Bipartition(3, {0}); }) == ErrorKind::InvalidQuery);
  CHECK(kind_of([] { Bipartition(3, {0b111}); }) == ErrorKind::InvalidQuery);
}

TEST_CASE("connected components") {
  const Network path = testing::path2(3, 5);  // 0 -e0- 2 -e1- 1
  const std::vector<EdgeId> cut{0};
  const auto cc = connected_components(path, cut);
  REQUIRE(cc.size() == 2);
  CHECK(cc[0] == VertexSet{0});
  CHECK(cc[1] == VertexSet{1, 2});
  CHECK(connected_components(path).size() == 1);

  const Network c4 = testing::four_cycle();
  const std::vector<EdgeId> opposite{0, 2};
  const auto parts = connected_components(c4, opposite);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].size() == 2);
  CHECK(parts[1].size() == 2);

  const std::vector<EdgeId> bad{9};
  CHECK(kind_of([&] { connected_components(path, bad); }) == ErrorKind::InvalidEdge);
}

TEST_CASE("contraction sums crossing costs") {
  const Network tri = testing::triangle({2, 0});
  const ContractionMap map(tri, {0, 0, 1});
  const Network out = contract(tri, map);
  CHECK(out.vertex_count() == 2);
  REQUIRE(out.edge_count() == 1);
  CHECK(out.edge(0).cost == 2);
  CHECK(out.terminal(0) == 1);
  CHECK(out.terminal(1) == 0);

  const Network star = star_network(4);
  const Network same = contract(star, ContractionMap::identity(star));
  CHECK(same == star);

  const Network two = testing::single_edge(1);
  const ContractionMap both(two, {0, 0});
  CHECK(both.has_collision());
  CHECK(kind_of([&] { contract(two, both); }) == ErrorKind::TerminalCollision);

  CHECK(kind_of([&] { ContractionMap(tri, {0, 2, 2}); }) != ErrorKind::InternalError);
}

TEST_CASE("truncate and boundary helpers") {
  const Network net(4, {{0, 1, 2}}, {0, 1});
  const Network cut = truncate_vertices(net, 2);
  CHECK(cut.vertex_count() == 2);
  CHECK(cut.edge_count() == 1);
  CHECK_THROWS_AS(truncate_vertices(net, 1), Error);

  const Network path = testing::path2(3, 5);
  const EdgeSet b = boundary_edges(path, {1, 0, 0});
  CHECK(b == EdgeSet{0});
  CHECK(edge_set_cost(path, b) == 3);
}

TEST_CASE("graph file round trip") {
  const GridFamily fam = gen_grid(3);
  const std::string text = serialize_graph(fam.embedding, {"grid"});
  const GraphFile back = parse_graph_string(text);
  CHECK(back.network == fam.network());
  REQUIRE(back.rotation.has_value());
  CHECK(serialize_graph(back) == text);
  CHECK(back.embedding().face_count() == fam.embedding.face_count());

  const Network multi(3, {{0, 1, q(1, 3)}, {0, 1, q(7)}, {2, 2, q(5, 2)}}, {1, 0});
  const std::string plain = serialize_graph(multi);
  CHECK(plain == "p mimick 3 3 2\nt 1 0\ne 0 1 1/3\ne 0 1 7/1\ne 2 2 5/2\n");
  const GraphFile pf = parse_graph_string(plain);
  CHECK(pf.network == multi);
  CHECK_FALSE(pf.rotation.has_value());
  CHECK_THROWS_AS(pf.embedding(), Error);
}

TEST_CASE("graph file parser accepts lenient input") {
  const GraphFile f = parse_graph_string("c hello\n\n  p mimick 2 1 2\nt 0 1\ne 0 1 6/4\n");
  CHECK(f.network.edge(0).cost == q(3, 2));
  REQUIRE(f.comments.size() == 1);
  CHECK(f.comments[0] == "hello");
  CHECK(parse_graph_string("p mimick 2 1 2\nt 0 1\ne 0 1 3\n").network.edge(0).cost == 3);
}

TEST_CASE("graph file parse errors") {
  const char* bad[] = {
      "",
      "t 0 1\np mimick 2 1 2\n",
      "p mimick 2 1 2\nt 0 1\n",
      "p mimick 2 1 2\nt 0 1\ne 0 1 1\ne 0 1 1\n",
      "p mimick 2 1 2\nt 0\ne 0 1 1\n",
      "p mimick 2 1 2\nt 0 1\ne 0 3 1\n",
      "p mimick 2 1 2\nt 0 1\ne 0 1 1/0\n",
      "p mimick 2 1 2\nt 0 1\ne 0 1 1\nx\n",
      "p mimick 2 1 2\nt 0 1\ne 0 1 1\nr 0 0:2\n",
      "p mimick 2 1 2\nt 0 1\ne 0 1 1\nr 0 5:0\n",
      "p graph 2 1 2\n",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK(kind_of([&] { parse_graph_string(text); }) == ErrorKind::ParseError);
  }
  // structurally valid file whose rotation does not match the edges
  CHECK(kind_of([] { parse_graph_string("p mimick 2 1 2\nt 0 1\ne 0 1 1\nr 0 0:1\nr 1 0:0\n"); }) ==
        ErrorKind::InvalidEmbedding);
  CHECK(kind_of([] { parse_graph_string("p mimick 2 1 2\nt 0 1\ne 0 1 -1\n"); }) == ErrorKind::InvalidNetwork);
}

TEST_CASE("contraction sidecar") {
  const Network tri = testing::triangle({2, 0});
  const ContractionMap map(tri, {0, 0, 1});
  CHECK(serialize_contraction(map) == "class 0 0 1\nclass 1 2\n");
}
