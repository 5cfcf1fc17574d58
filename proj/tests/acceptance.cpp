// One line per acceptance criterion. Exit status is nonzero if any line fails.
#include <algorithm>
#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "mimick/error.hpp"
#include "mimick/generators.hpp"
#include "mimick/incidence.hpp"
#include "mimick/lowerbound.hpp"
#include "mimick/mimicking.hpp"
#include "mimick/mincut.hpp"
#include "mimick/tcscheme.hpp"
#include "support/campaign.hpp"

using namespace mimick;

namespace {

constexpr std::size_t kCampaignSize = 200;
constexpr std::size_t kOracleFreeLimit = kOracleMaxFreeVertices;

struct Line {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> failures;

  void fail(const std::string& what) {
    pass = false;
    if (failures.size() < 5) {
      failures.push_back(what);
    }
  }
};

int g_failed = 0;

template <class F>
void criterion(int id, const std::string& title, F&& body) {
  Line line;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(line);
  } catch (const std::exception& e) {
    line.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << "criterion " << id << ' ' << (line.pass ? "PASS" : "FAIL") << ": " << title << " | "
            << line.detail.str() << " (" << static_cast<long>(secs * 1000) << " ms)\n";
  for (const std::string& f : line.failures) {
    std::cout << "    " << f << '\n';
  }
  g_failed += line.pass ? 0 : 1;
}

std::string inst(const testing::CampaignInstance& c) {
  return "instance " + std::to_string(c.index) + " (n=" + std::to_string(c.options.vertices) +
         " k=" + std::to_string(c.options.terminals) + " seed=" + std::to_string(c.options.seed) + ")";
}

}  // namespace

int main() {
  const auto campaign = testing::make_campaign(kCampaignSize);

  criterion(1, "contraction construction mimics every bipartition and is a minor", [&](Line& line) {
    std::size_t rows = 0;
    for (const auto& c : campaign) {
      const Network& net = c.embedding.network();
      const MimickingResult res = build_by_contraction(net);
      const VerificationReport vr = verify(net, res.network);
      rows += vr.perBipartition.size();
      if (vr.perBipartition.size() != bipartition_count(net.terminal_count()) || !vr.allEqual) {
        line.fail(inst(c) + ": cut values differ");
      }
      if (!witnesses_minor(net, res.contractionMap, res.removedEdges, res.network.vertex_count())) {
        line.fail(inst(c) + ": a class is not connected in G minus the cut union");
      }
    }
    line.detail << campaign.size() << " instances, " << rows << " bipartitions compared";
  });

  criterion(2, "signature construction mimics and stays within 2^(2^(k-1)-1) classes", [&](Line& line) {
    std::size_t maxClasses = 0;
    for (const auto& c : campaign) {
      const Network& net = c.embedding.network();
      const MimickingResult res = build_by_signature(net);
      if (!verify(net, res.network).allEqual) {
        line.fail(inst(c) + ": cut values differ");
      }
      const std::size_t m = bipartition_count(net.terminal_count());
      const std::size_t classes = res.network.vertex_count();
      maxClasses = std::max(maxClasses, classes);
      if (m < 63 && classes > (std::size_t{1} << m)) {
        line.fail(inst(c) + ": " + std::to_string(classes) + " classes");
      }
    }
    line.detail << campaign.size() << " instances, max " << maxClasses << " classes";
  });

  criterion(3, "generalized mimicking for k <= 4", [&](Line& line) {
    std::size_t instances = 0;
    std::size_t pairs = 0;
    for (const auto& c : campaign) {
      const Network& net = c.embedding.network();
      if (net.terminal_count() > 4) {
        continue;
      }
      ++instances;
      const MimickingResult res = build_by_contraction(net);
      const VerificationReport vr = verify_generalized(net, res.network);
      pairs += vr.generalized.size();
      if (vr.generalized.size() != generalized_pairs(net.terminal_count()).size() || !vr.allEqual) {
        line.fail(inst(c) + ": generalized cut values differ");
      }
    }
    line.detail << instances << " instances, " << pairs << " disjoint pairs";
  });

  criterion(4, "component, meeting-vertex and dual-face bounds", [&](Line& line) {
    std::size_t claims = 0;
    for (const auto& c : campaign) {
      const LemmaReport r = structural_bounds(c.embedding, 50, 7000 + c.index, inst(c));
      claims += r.checks.size();
      for (const ClaimCheck& chk : r.checks) {
        if (!chk.pass) {
          line.fail(chk.claim + " " + chk.instance + " expected " + chk.expected + " observed " + chk.observed);
        }
      }
    }
    line.detail << campaign.size() << " instances, " << claims << " aggregated claims, 50 pairs each";
  });

  criterion(5, "grid lemma values, sides, uniqueness and edge counts for k = 3, 4, 5", [&](Line& line) {
    std::size_t checks = 0;
    for (std::size_t k = 3; k <= 5; ++k) {
      const GridFamily fam = gen_grid(k);
      const LemmaReport r = verify_grid_lemma(fam, k <= 4);
      checks += r.checks.size();
      for (const ClaimCheck& chk : r.checks) {
        if (!chk.pass) {
          line.fail(chk.claim + " " + chk.instance + " expected " + chk.expected + " observed " + chk.observed);
        }
      }
    }
    const GridFamily g4 = gen_grid(4);
    const Rational v23 = min_separating_cut(g4.network(), Bipartition(8, g4.s(2, 3))).value;
    if (v23 != Rational(637, 128)) {
      line.fail("k=4 (2,3) gave " + format_rational(v23));
    }
    line.detail << checks << " checks, oracle at k=3,4, k=4 (2,3) = " << format_rational(v23);
  });

  criterion(6, "bipartite lemma at k=6 (all subsets) and k=9 (10 seeded subsets)", [&](Line& line) {
    const BipartiteFamily f6 = gen_bipartite(6);
    LemmaReport r = verify_bipartite_lemma(f6);
    const BipartiteFamily f9 = gen_bipartite(9);
    std::mt19937_64 rng(9);
    std::vector<std::size_t> all(f9.l);
    for (std::size_t i = 0; i < f9.l; ++i) {
      all[i] = i;
    }
    std::vector<std::size_t> spot;
    for (std::size_t i = 0; i < 10; ++i) {
      std::swap(all[i], all[i + rng() % (f9.l - i)]);
      spot.push_back(all[i]);
    }
    const LemmaReport r9 = verify_bipartite_lemma(f9, spot);
    r.checks.insert(r.checks.end(), r9.checks.begin(), r9.checks.end());
    for (const ClaimCheck& chk : r.checks) {
      if (!chk.pass) {
        line.fail(chk.claim + " " + chk.instance + " expected " + chk.expected + " observed " + chk.observed);
      }
    }
    line.detail << f6.l << " subsets at k=6, " << spot.size() << " at k=9, " << r.checks.size() << " checks";
  });

  criterion(7, "rank bounds with the triangular submatrix checked entrywise", [&](Line& line) {
    const RankBoundsReport b = verify_rank_bounds(gen_bipartite(6));
    line.detail << "bipartite k=6 rank " << b.rank << ">=" << b.required;
    if (!b.rankHolds || b.required != 15) {
      line.fail("bipartite k=6 rank " + std::to_string(b.rank));
    }
    for (std::size_t k = 3; k <= 5; ++k) {
      const RankBoundsReport g = verify_rank_bounds(gen_grid(k));
      line.detail << ", grid k=" << k << " rank " << g.rank << ">=" << g.required;
      if (!g.rankHolds || g.required != (k - 1) * (k - 1) || !g.triangularHolds) {
        line.fail("grid k=" + std::to_string(k) + " rank " + std::to_string(g.rank) + " triangular violations " +
                  std::to_string(g.triangularViolations));
      }
    }
  });

  criterion(8, "perturbation keeps the incidence matrix, 50 seeds per family", [&](Line& line) {
    struct Case {
      std::string name;
      Network net;
    };
    const std::vector<Case> cases{{"bipartite k=6", gen_bipartite(6).network},
                                  {"grid k=3", gen_grid(3).network()},
                                  {"grid k=4", gen_grid(4).network()},
                                  {"star k=4", star_network(4)}};
    for (const Case& c : cases) {
      const PerturbationCampaign pc = perturbation_campaign(c.net, 1, 50);
      line.detail << c.name << ": " << pc.stable << "/" << pc.seeds << " gap "
                  << (pc.gap ? format_rational(*pc.gap) : std::string("inf")) << " rows " << pc.checkedRows
                  << " tied " << pc.tiedRows << "; ";
      if (!pc.allPass()) {
        line.fail(c.name + ": " + (pc.failures.empty() ? std::string("bounds") : pc.failures.front()));
      }
      // Each sampled w(e) lies in [0, bound] and bound <= 1/(gap |E|).
      if (pc.gap && pc.bound * *pc.gap * Rational(static_cast<long>(c.net.edge_count())) > 1) {
        line.fail(c.name + ": sampling range exceeds 1/(gap |E|)");
      }
    }
  });

  // Not a criterion: the same check with w(e) drawn from the full interval
  // [0, 1/(gap |E|)], which is wider than the gap itself once gap < 1.
  for (std::size_t k = 3; k <= 4; ++k) {
    const Network net = gen_grid(k).network();
    const auto rows = enumerate_bipartitions(net.terminal_count());
    std::vector<Bipartition> unique;
    for (const Bipartition& bp : rows) {
      if (uniqueness_by_flow(net, bp)) {
        unique.push_back(bp);
      }
    }
    const auto g = network_gap(net, unique);
    const Rational wide = Rational(1) / (*g * Rational(static_cast<long>(net.edge_count())));
    const IncidenceMatrix ref = build_incidence(net, unique);
    std::size_t kept = 0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      std::mt19937_64 rng(seed);
      std::vector<Rational> costs = net.cost_vector();
      for (Rational& c : costs) {
        c += wide * make_rational(static_cast<long>(rng() >> 44), 1L << 20);
      }
      kept += build_incidence(with_costs(net, costs), unique).bits == ref.bits ? 1 : 0;
    }
    std::cout << "info: grid k=" << k << " gap " << format_rational(*g) << ", w(e) up to 1/(gap |E|) = "
              << format_rational(wide) << ": incidence kept for " << kept << "/50 seeds\n";
  }

  criterion(9, "terminal cut table round trip, storage, serialization and tc-collision", [&](Line& line) {
    std::size_t queries = 0;
    for (const auto& c : campaign) {
      const Network& net = c.embedding.network();
      const std::size_t k = net.terminal_count();
      const TCStore store = preprocess(net);
      const std::string bytes = serialize(store);
      const TCStore back = deserialize(bytes);
      if (serialize(back) != bytes || !(back == store)) {
        line.fail(inst(c) + ": serialization not stable");
      }
      if (!storage_report(store).withinBound || store.size() > (std::size_t{1} << k)) {
        line.fail(inst(c) + ": storage above 2^k");
      }
      for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << k); ++mask) {
        const Rational direct = min_separating_cut(net, Bipartition(k, {mask})).value;
        ++queries;
        if (query(store, {mask}) != direct || query(back, {mask}) != direct) {
          line.fail(inst(c) + ": query mismatch at mask " + std::to_string(mask));
        }
      }
    }
    const CollisionReport cr = tc_collision_family(gen_bipartite(6), 100, 7);
    if (!cr.allPass() || cr.pairs != 100) {
      line.fail("tc-collision: " + std::to_string(cr.distinguished) + "/" + std::to_string(cr.pairs) +
                " distinguished, incidence stable " + std::to_string(cr.incidenceStable) + "/" +
                std::to_string(cr.perturbedNetworks));
    }
    line.detail << queries << " queries over " << campaign.size() << " instances; tc-collision k=6 "
                << cr.distinguished << "/" << cr.pairs << " pairs distinguished";
  });

  criterion(10, "flow min cuts agree with exhaustive enumeration", [&](Line& line) {
    std::size_t instances = 0;
    std::size_t rows = 0;
    for (const auto& c : campaign) {
      const Network& net = c.embedding.network();
      if (net.vertex_count() - net.terminal_count() > kOracleFreeLimit) {
        continue;
      }
      ++instances;
      for (const Bipartition& bp : enumerate_bipartitions(net.terminal_count())) {
        ++rows;
        const CutResult flow = min_separating_cut(net, bp);
        const OracleResult orc = min_cut_oracle(net, bp);
        const bool member = std::binary_search(orc.allMinCutsets.begin(), orc.allMinCutsets.end(), flow.cutset);
        const bool uniqueAgrees = uniqueness_by_flow(net, bp) == (orc.allMinCutsets.size() == 1);
        if (flow.value != orc.value || !member || !uniqueAgrees) {
          line.fail(inst(c) + " " + bp.to_string() + ": flow " + format_rational(flow.value) + " oracle " +
                    format_rational(orc.value));
        }
      }
    }
    if (instances < 100) {
      line.fail("only " + std::to_string(instances) + " instances within oracle capacity");
    }
    line.detail << instances << " instances, " << rows << " bipartitions";
  });

  std::cout << (g_failed == 0 ? "all criteria pass" : std::to_string(g_failed) + " criteria fail") << '\n';
  return g_failed == 0 ? 0 : 1;
}
