#include "mimick/lowerbound.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "mimick/error.hpp"
#include "mimick/mimicking.hpp"
#include "mimick/mincut.hpp"

namespace mimick {

namespace {

std::string set_string(const VertexSet& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(vs[i]);
  }
  return out + "}";
}

VertexSet sorted(VertexSet vs) {
  std::sort(vs.begin(), vs.end());
  return vs;
}

}  // namespace

bool LemmaReport::allPass() const {
  return std::all_of(checks.begin(), checks.end(), [](const ClaimCheck& c) { return c.pass; });
}

std::size_t LemmaReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const ClaimCheck& c) { return !c.pass; }));
}

BipartiteFamily gen_bipartite(std::size_t k) {
  if (k < 6 || k % 3 != 0) {
    throw Error(ErrorKind::InvalidParameter, "bipartite family needs k >= 6 divisible by 3, got " + std::to_string(k));
  }
  if (k > 24) {
    throw Error(ErrorKind::InvalidParameter, "bipartite family limited to k <= 24");
  }
  BipartiteFamily fam;
  fam.k = k;
  fam.epsilon = make_rational(1, static_cast<long>(k));
  const std::size_t size = 2 * k / 3;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) == size) {
      fam.subsets.push_back({mask});
    }
  }
  fam.l = fam.subsets.size();
  const Rational heavy = Rational(2) + fam.epsilon;
  std::vector<Edge> edges;
  edges.reserve(k * fam.l);
  for (std::size_t i = 0; i < fam.l; ++i) {
    for (std::size_t q = 0; q < k; ++q) {
      edges.push_back({static_cast<VertexId>(k + i), static_cast<VertexId>(q),
                       fam.subsets[i].contains(q) ? Rational(1) : heavy});
    }
  }
  std::vector<VertexId> terminals(k);
  for (std::size_t q = 0; q < k; ++q) {
    terminals[q] = static_cast<VertexId>(q);
  }
  fam.network = Network(k + fam.l, std::move(edges), std::move(terminals));
  return fam;
}

Rational GridFamily::epsilon(std::size_t, std::size_t j) const {
  return Rational(static_cast<long>(j)) / heavy;
}

TerminalSet GridFamily::s(std::size_t i, std::size_t j) const {
  std::uint64_t bits = 0;
  for (std::size_t b = 1; b <= j; ++b) {
    bits |= std::uint64_t{1} << (b - 1);
  }
  for (std::size_t a = 1; a <= i; ++a) {
    bits |= std::uint64_t{1} << (k + a - 1);
  }
  return {bits};
}

namespace {

struct GridPos {
  std::size_t i = 0;
  std::size_t j = 0;
};

GridPos grid_pos(const GridFamily& fam, VertexId v) {
  const std::size_t off = v - 2 * fam.k;
  return {off / fam.k + 1, off % fam.k + 1};
}

}  // namespace

bool GridFamily::is_interior_horizontal(EdgeId id) const {
  const Edge& e = network().edge(id);
  if (e.u < 2 * k || e.v < 2 * k) {
    return false;
  }
  const GridPos a = grid_pos(*this, e.u);
  const GridPos b = grid_pos(*this, e.v);
  return a.i == b.i && a.i <= k - 1;
}

bool GridFamily::is_interior_vertical(EdgeId id) const {
  const Edge& e = network().edge(id);
  if (e.u < 2 * k || e.v < 2 * k) {
    return false;
  }
  const GridPos a = grid_pos(*this, e.u);
  const GridPos b = grid_pos(*this, e.v);
  return a.j == b.j && a.j <= k - 1;
}

GridFamily gen_grid(std::size_t k) {
  if (k < 3) {
    throw Error(ErrorKind::InvalidParameter, "grid family needs k >= 3, got " + std::to_string(k));
  }
  if (k > 31) {
    throw Error(ErrorKind::InvalidParameter, "grid family limited to k <= 31");
  }
  GridFamily fam;
  fam.k = k;
  const long k4 = static_cast<long>(k * k * k * k);
  fam.heavy = Rational(k4);
  const std::size_t n = 2 * k + k * k;
  auto u = [&](std::size_t i, std::size_t j) { return static_cast<VertexId>(2 * k + (i - 1) * k + (j - 1)); };

  std::vector<Edge> edges;
  for (std::size_t j = 1; j <= k; ++j) {
    edges.push_back({static_cast<VertexId>(j - 1), u(1, j), fam.heavy});
  }
  for (std::size_t i = 1; i <= k; ++i) {
    edges.push_back({static_cast<VertexId>(k + i - 1), u(i, 1), fam.heavy});
  }
  fam.horizontalIds.assign(k * (k - 1), 0);
  fam.verticalIds.assign((k - 1) * k, 0);
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t j = 1; j <= k; ++j) {
      if (j < k) {
        const Rational cost = i == k ? fam.heavy : Rational(1) - make_rational(static_cast<long>(j), k4);
        fam.horizontalIds[(i - 1) * (k - 1) + (j - 1)] = static_cast<EdgeId>(edges.size());
        edges.push_back({u(i, j), u(i, j + 1), cost});
      }
      if (i < k) {
        const Rational cost = j == k ? fam.heavy : Rational(1);
        fam.verticalIds[(i - 1) * k + (j - 1)] = static_cast<EdgeId>(edges.size());
        edges.push_back({u(i, j), u(i + 1, j), cost});
      }
    }
  }
  std::vector<VertexId> terminals(2 * k);
  for (std::size_t t = 0; t < 2 * k; ++t) {
    terminals[t] = static_cast<VertexId>(t);
  }
  Network net(n, std::move(edges), std::move(terminals));

  std::vector<Point> pos(n);
  for (std::size_t j = 1; j <= k; ++j) {
    pos[j - 1] = {0, static_cast<std::int64_t>(j)};
  }
  for (std::size_t i = 1; i <= k; ++i) {
    pos[k + i - 1] = {static_cast<std::int64_t>(i), 0};
  }
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t j = 1; j <= k; ++j) {
      pos[u(i, j)] = {static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)};
    }
  }
  fam.embedding = embedding_from_coordinates(net, pos);
  return fam;
}

LemmaReport verify_bipartite_lemma(const BipartiteFamily& fam, std::vector<std::size_t> subsetIndices) {
  if (subsetIndices.empty()) {
    for (std::size_t i = 0; i < fam.l; ++i) {
      subsetIndices.push_back(i);
    }
  }
  const Network& net = fam.network;
  const std::size_t k = fam.k;
  const std::string family = "bipartite k=" + std::to_string(k);
  LemmaReport report;
  for (const std::size_t idx : subsetIndices) {
    if (idx >= fam.l) {
      throw Error(ErrorKind::InvalidParameter, "subset index out of range");
    }
    const TerminalSet si = fam.subsets[idx];
    const Bipartition bp(k, si);
    const std::string instance = family + " S_" + std::to_string(idx + 1) + "=" + bp.to_string();
    const CutResult cut = min_separating_cut(net, bp);

    // W = {u_{S_i}} ∪ S̄_i; sideW is whichever of W and its complement holds q_1.
    VertexSet w;
    for (std::size_t q = 0; q < k; ++q) {
      if (!si.contains(q)) {
        w.push_back(static_cast<VertexId>(q));
      }
    }
    w.push_back(fam.u(idx));
    VertexSet expected;
    if (!si.contains(0)) {
      expected = w;
    } else {
      for (VertexId v = 0; v < net.vertex_count(); ++v) {
        if (!std::binary_search(w.begin(), w.end(), v)) {
          expected.push_back(v);
        }
      }
    }
    expected = sorted(expected);
    const VertexSet observed = sorted(cut.sideW);
    report.checks.push_back({"bipartite-side", instance, set_string(expected), set_string(observed), expected == observed});

    const bool unique = uniqueness_by_flow(net, bp);
    report.checks.push_back({"bipartite-unique", instance, "unique", unique ? "unique" : "tied", unique});

    // Per non-terminal: u_{S_i} is strictly cheaper beside S̄_i, every other
    // u_{S_j} strictly cheaper beside S_i.
    bool comparisons = true;
    std::string worst;
    for (std::size_t j = 0; j < fam.l; ++j) {
      Rational toS = 0;
      Rational toSbar = 0;
      for (std::size_t q = 0; q < k; ++q) {
        const Rational& c = net.edge(fam.edge(j, q)).cost;
        (si.contains(q) ? toS : toSbar) += c;
      }
      // Cost of placing u beside S̄ is c(u,S); beside S it is c(u,S̄).
      const bool ok = j == idx ? toS < toSbar : toSbar < toS;
      if (!ok) {
        comparisons = false;
        worst = "u_" + std::to_string(j + 1) + ": c(u,S)=" + format_rational(toS) + " c(u,S̄)=" + format_rational(toSbar);
      }
    }
    report.checks.push_back({"bipartite-comparisons", instance, "all strict", comparisons ? "all strict" : worst, comparisons});

    Rational closedForm = Rational(static_cast<long>(2 * k / 3));
    for (std::size_t j = 0; j < fam.l; ++j) {
      if (j == idx) {
        continue;
      }
      Rational toSbar = 0;
      for (std::size_t q = 0; q < k; ++q) {
        if (!si.contains(q)) {
          toSbar += net.edge(fam.edge(j, q)).cost;
        }
      }
      closedForm += toSbar;
    }
    report.checks.push_back({"bipartite-value", instance, format_rational(closedForm), format_rational(cut.value),
                             closedForm == cut.value});
  }
  return report;
}

LemmaReport verify_grid_lemma(const GridFamily& fam, bool oracleCrossCheck) {
  const Network& net = fam.network();
  const std::size_t k = fam.k;
  const std::string family = "grid k=" + std::to_string(k);
  LemmaReport report;
  for (std::size_t i = 1; i < k; ++i) {
    for (std::size_t j = 1; j < k; ++j) {
      const Bipartition bp(2 * k, fam.s(i, j));
      const std::string instance = family + " (i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")";
      const CutResult cut = min_separating_cut(net, bp);

      Rational expectedValue = Rational(static_cast<long>(i + j)) - Rational(static_cast<long>(i * j)) / fam.heavy;
      report.checks.push_back({"grid-value", instance, format_rational(expectedValue), format_rational(cut.value),
                               expectedValue == cut.value});

      VertexSet side;
      for (std::size_t b = 1; b <= j; ++b) {
        side.push_back(fam.v(b));
      }
      for (std::size_t a = 1; a <= i; ++a) {
        side.push_back(fam.h(a));
        for (std::size_t b = 1; b <= j; ++b) {
          side.push_back(fam.u(a, b));
        }
      }
      side = sorted(side);
      const VertexSet observed = sorted(cut.sideW);
      report.checks.push_back({"grid-side", instance, set_string(side), set_string(observed), side == observed});

      const bool unique = uniqueness_by_flow(net, bp);
      report.checks.push_back({"grid-unique", instance, "unique", unique ? "unique" : "tied", unique});

      std::size_t hz = 0;
      std::size_t vt = 0;
      std::size_t other = 0;
      for (const EdgeId e : cut.cutset) {
        if (fam.is_interior_horizontal(e)) {
          ++hz;
        } else if (fam.is_interior_vertical(e)) {
          ++vt;
        } else {
          ++other;
        }
      }
      const std::string exp = std::to_string(i) + "h+" + std::to_string(j) + "v+0";
      const std::string obs = std::to_string(hz) + "h+" + std::to_string(vt) + "v+" + std::to_string(other);
      report.checks.push_back({"grid-edge-count", instance, exp, obs, exp == obs});

      if (oracleCrossCheck) {
        const OracleResult orc = min_cut_oracle(net, bp);
        const bool ok = orc.value == cut.value && orc.allMinCutsets.size() == 1 && orc.allMinCutsets.front() == cut.cutset;
        report.checks.push_back({"grid-oracle", instance,
                                 format_rational(cut.value) + " x1",
                                 format_rational(orc.value) + " x" + std::to_string(orc.allMinCutsets.size()), ok});
      }
    }
  }
  return report;
}

namespace {

RankBoundsReport rank_report(const IncidenceMatrix& mat, std::size_t required) {
  RankBoundsReport out;
  out.rows = mat.rows();
  out.cols = mat.cols;
  out.rank = rank(mat);
  out.required = required;
  out.rankHolds = out.rank >= required;
  return out;
}

}  // namespace

RankBoundsReport verify_rank_bounds(const BipartiteFamily& fam) {
  return rank_report(build_incidence(fam.network), fam.l);
}

RankBoundsReport verify_rank_bounds(const GridFamily& fam) {
  const std::size_t k = fam.k;
  const std::size_t d = (k - 1) * (k - 1);
  RankBoundsReport out = rank_report(build_incidence(fam.network()), d);

  std::vector<Bipartition> rows;
  std::vector<EdgeId> cols;
  for (std::size_t i = 1; i < k; ++i) {
    for (std::size_t j = 1; j < k; ++j) {
      rows.emplace_back(2 * k, fam.s(i, j));
      cols.push_back(fam.horizontal(i, j));
    }
  }
  const IncidenceMatrix sub = build_incidence(fam.network(), rows);
  out.triangularChecked = true;
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      const bool bit = sub.at(r, cols[c]);
      const bool want = c == r ? true : (c < r ? bit : false);
      if (bit != want) {
        ++out.triangularViolations;
      }
    }
  }
  out.triangularHolds = out.triangularViolations == 0;
  return out;
}

std::vector<Rational> shifted_phi(const Network& base, const std::vector<std::size_t>& columns, std::uint64_t pattern,
                                  const Rational& step) {
  std::vector<Rational> costs = base.cost_vector();
  for (std::size_t t = 0; t < columns.size(); ++t) {
    if ((pattern >> t) & 1U) {
      costs[columns[t]] += step;
    }
  }
  const Network shifted = with_costs(base, costs);
  std::vector<Rational> phi;
  for (const Bipartition& bp : enumerate_bipartitions(base.terminal_count())) {
    phi.push_back(min_separating_cut(shifted, bp).value);
  }
  return phi;
}

CollisionReport tc_collision_family(const BipartiteFamily& fam, std::size_t sampleCount, std::uint64_t seed,
                                    bool exhaustive) {
  const Network& net = fam.network;
  CollisionReport out;
  out.k = fam.k;
  out.l = fam.l;
  out.exhaustive = exhaustive;
  if (fam.l > 63) {
    throw Error(ErrorKind::InvalidParameter, "too many cost shifts for a 64-bit pattern");
  }
  const auto k2 = static_cast<long>(fam.k * fam.k);
  out.step = Rational(1) / Rational(6 * k2 * static_cast<long>(fam.l));

  std::vector<Bipartition> uniqueRows;
  const bool useOracle = within_oracle_capacity(net);
  for (const Bipartition& bp : enumerate_bipartitions(fam.k)) {
    if (useOracle) {
      const GapReport g = gap(net, bp, GapMode::RequireDelta);
      if (!g.unique) {
        ++out.tiedRows;
        continue;
      }
      uniqueRows.push_back(bp);
      if (g.delta && (!out.uniqueGap || *g.delta < *out.uniqueGap)) {
        out.uniqueGap = g.delta;
      }
    } else if (uniqueness_by_flow(net, bp)) {
      uniqueRows.push_back(bp);
    } else {
      ++out.tiedRows;
    }
  }
  out.uniqueRows = uniqueRows.size();
  out.stepWithinGap = out.uniqueGap && Rational(static_cast<long>(fam.l)) * out.step < *out.uniqueGap;

  const IncidenceMatrix reference = build_incidence(net, uniqueRows);
  std::vector<std::size_t> independent = independent_columns(reference);
  if (independent.size() < fam.l) {
    throw Error(ErrorKind::InternalError, "fewer than l independent incidence columns");
  }
  independent.resize(fam.l);
  out.columns = independent;
  for (std::size_t t = 0; t < fam.l; ++t) {
    out.reordered = out.reordered || independent[t] != t;
  }

  std::map<std::uint64_t, std::vector<Rational>> phiCache;
  auto phi_of = [&](std::uint64_t pattern) -> const std::vector<Rational>& {
    auto it = phiCache.find(pattern);
    if (it != phiCache.end()) {
      return it->second;
    }
    std::vector<Rational> costs = net.cost_vector();
    for (std::size_t t = 0; t < fam.l; ++t) {
      if ((pattern >> t) & 1U) {
        costs[independent[t]] += out.step;
      }
    }
    const Network shifted = with_costs(net, costs);
    const IncidenceMatrix mat = build_incidence(shifted);
    ++out.perturbedNetworks;
    bool stable = true;
    for (std::size_t r = 0; r < uniqueRows.size() && stable; ++r) {
      const std::size_t full = uniqueRows[r].index();
      for (std::size_t c = 0; c < mat.cols; ++c) {
        if (mat.at(full, c) != reference.at(r, c)) {
          stable = false;
          break;
        }
      }
    }
    if (stable) {
      ++out.incidenceStable;
    }
    return phiCache.emplace(pattern, mat.phi).first->second;
  };

  std::mt19937_64 rng(seed);
  const std::uint64_t patterns = std::uint64_t{1} << fam.l;
  for (std::size_t s = 0; s < sampleCount; ++s) {
    const std::uint64_t a = rng() & (patterns - 1);
    std::uint64_t b = rng() & (patterns - 1);
    while (b == a) {
      b = rng() & (patterns - 1);
    }
    ++out.pairs;
    if (phi_of(a) != phi_of(b)) {
      ++out.distinguished;
    }
  }

  if (exhaustive) {
    std::set<std::vector<Rational>> seen;
    for (std::uint64_t p = 0; p < patterns; ++p) {
      seen.insert(phi_of(p));
      phiCache.clear();
    }
    out.distinctPhi = seen.size();
  }
  return out;
}

PerturbationCampaign perturbation_campaign(const Network& net, std::uint64_t firstSeed, std::size_t count,
                                           std::uint64_t resolution) {
  PerturbationCampaign out;
  PerturbOptions options;
  options.resolution = resolution;
  options.scope = PerturbScope::UniqueRows;
  options.maxAttempts = 1;

  std::vector<Bipartition> uniqueRows;
  for (const Bipartition& bp : enumerate_bipartitions(net.terminal_count())) {
    const GapReport g = gap(net, bp, GapMode::RequireDelta);
    if (!g.unique) {
      ++out.tiedRows;
      continue;
    }
    uniqueRows.push_back(bp);
    if (g.delta && (!out.gap || *g.delta < *out.gap)) {
      out.gap = g.delta;
    }
  }
  out.checkedRows = uniqueRows.size();
  out.bound = perturbation_bound(out.gap, net.edge_count());
  if (uniqueRows.empty()) {
    out.failures.push_back("no row has a unique minimum cut");
    return out;
  }
  if (out.gap) {
    options.knownGap = out.gap;
    options.rows = uniqueRows;
  }

  std::vector<Rational> basePhi;
  for (const Bipartition& bp : enumerate_bipartitions(net.terminal_count())) {
    basePhi.push_back(min_separating_cut(net, bp).value);
  }

  for (std::size_t s = 0; s < count; ++s) {
    const std::uint64_t seed = firstSeed + s;
    ++out.seeds;
    try {
      const PerturbedNetwork p = perturb(net, seed, options);
      ++out.stable;
      Rational mass = 0;
      for (const Rational& w : p.w) {
        mass += w;
      }
      bool within = true;
      const auto rows = enumerate_bipartitions(net.terminal_count());
      for (std::size_t r = 0; r < rows.size() && within; ++r) {
        const Rational v = min_separating_cut(p.perturbed, rows[r]).value;
        within = basePhi[r] <= v && v <= basePhi[r] + mass;
      }
      if (within) {
        ++out.phiWithinBounds;
      } else {
        out.failures.push_back("seed " + std::to_string(seed) + ": perturbed value outside [phi, phi + sum w]");
      }
    } catch (const Error& e) {
      out.failures.push_back("seed " + std::to_string(seed) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace mimick

namespace mimick {

LemmaReport structural_bounds(const PlaneEmbedding& emb, std::size_t pairCount, std::uint64_t seed,
                              const std::string& instance) {
  const Network& net = emb.network();
  const std::size_t k = net.terminal_count();
  const DualGraph dual = build_dual(emb);
  const std::vector<Bipartition> rows = enumerate_bipartitions(k);
  std::vector<EdgeSet> cutsets;
  cutsets.reserve(rows.size());
  for (const Bipartition& bp : rows) {
    cutsets.push_back(min_separating_cut(net, bp).cutset);
  }

  LemmaReport report;
  std::size_t oneOk = 0;
  std::size_t worstOne = 0;
  for (const EdgeSet& cut : cutsets) {
    const ComponentBoundReport r = check_component_bounds(emb, dual, cut);
    oneOk += r.oneCutsetHolds ? 1 : 0;
    worstOne = std::max(worstOne, r.componentsS);
  }
  report.checks.push_back({"cc-one-cutset", instance, std::to_string(rows.size()) + " rows, max<=" + std::to_string(k),
                           std::to_string(oneOk) + " rows, max=" + std::to_string(worstOne), oneOk == rows.size()});

  std::mt19937_64 rng(seed);
  std::size_t twoOk = 0;
  std::size_t meetOk = 0;
  std::size_t worstMeeting = 0;
  for (std::size_t p = 0; p < pairCount; ++p) {
    const std::size_t a = static_cast<std::size_t>(rng() % rows.size());
    std::size_t b = static_cast<std::size_t>(rng() % rows.size());
    while (rows.size() > 1 && b == a) {
      b = static_cast<std::size_t>(rng() % rows.size());
    }
    const ComponentBoundReport r =
        check_component_bounds(emb, dual, cutsets[a], std::optional<std::span<const EdgeId>>(cutsets[b]));
    twoOk += r.twoCutsetHolds && r.oneCutsetHolds ? 1 : 0;
    meetOk += r.meetingHolds ? 1 : 0;
    worstMeeting = std::max(worstMeeting, r.meetingVertices.value_or(0));
  }
  report.checks.push_back({"cc-two-cutsets", instance, std::to_string(pairCount) + " pairs",
                           std::to_string(twoOk) + " pairs", twoOk == pairCount});
  report.checks.push_back({"meeting-vertices", instance,
                           std::to_string(pairCount) + " pairs, max<=" + std::to_string(6 * k),
                           std::to_string(meetOk) + " pairs, max=" + std::to_string(worstMeeting), meetOk == pairCount});

  const MimickingResult mim = build_by_contraction(net);
  const std::size_t cc = connected_components(net, mim.removedEdges).size();
  const std::size_t faces = faces_of_subgraph(dual.dualEmbedding, mim.removedEdges);
  const std::size_t outV = mim.network.vertex_count();
  report.checks.push_back({"contraction-size", instance, "|V(G')|=|CC|=faces",
                           std::to_string(outV) + "=" + std::to_string(cc) + "=" + std::to_string(faces),
                           outV == cc && cc == faces});
  return report;
}

}  // namespace mimick
