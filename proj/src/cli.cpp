#include "mimick/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "mimick/error.hpp"
#include "mimick/generators.hpp"
#include "mimick/graph_io.hpp"
#include "mimick/incidence.hpp"
#include "mimick/lowerbound.hpp"
#include "mimick/mimicking.hpp"
#include "mimick/report.hpp"
#include "mimick/tcscheme.hpp"

namespace mimick::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_usage_kind(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidTerminalCount:
    case ErrorKind::InvalidEdge:
    case ErrorKind::InvalidNetwork:
    case ErrorKind::InvalidEmbedding:
    case ErrorKind::InvalidPair:
    case ErrorKind::InvalidParameter:
    case ErrorKind::InvalidQuery:
    case ErrorKind::ParseError:
      return true;
    default:
      return false;
  }
}

void write_file(const std::string& path, const std::string& content, bool binary = false) {
  std::ofstream f(path, binary ? std::ios::binary : std::ios::out);
  if (!f) {
    throw UsageError("cannot write " + path);
  }
  f << content;
  if (!f) {
    throw UsageError("write failed: " + path);
  }
}

void emit(std::ostream& out, const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    out << content;
  } else {
    write_file(path, content);
  }
}

std::string seed_string(std::uint64_t seed) { return std::to_string(seed); }

/// "q2,q3", "{q2,q3}" or "2,3"; labels are 1-based.
TerminalSet parse_terminal_set(const std::string& text, std::size_t k) {
  std::string body = text;
  if (!body.empty() && body.front() == '{') {
    body.erase(0, 1);
  }
  if (!body.empty() && body.back() == '}') {
    body.pop_back();
  }
  TerminalSet set;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty() && (item.front() == 'q' || item.front() == 'Q')) {
      item.erase(0, 1);
    }
    std::size_t pos = 0;
    unsigned long label = 0;
    try {
      label = std::stoul(item, &pos);
    } catch (const std::exception&) {
      throw UsageError("bad terminal label '" + item + "'");
    }
    if (pos != item.size() || label == 0 || label > k) {
      throw UsageError("terminal label '" + item + "' outside q1..q" + std::to_string(k));
    }
    set.bits |= std::uint64_t{1} << (label - 1);
  }
  return set;
}

struct ReportSink {
  std::string jsonl;
  bool quiet = false;

  int finish(const Report& report, std::ostream& out) const {
    report.write_text(out, quiet);
    if (!jsonl.empty()) {
      std::ostringstream j;
      report.write_jsonl(j);
      write_file(jsonl, j.str());
    }
    return report.all_pass() ? kExitOk : kExitFail;
  }
};

void add_sink_options(CLI::App* app, ReportSink& sink) {
  app->add_option("--jsonl", sink.jsonl, "Write one JSON record per checked claim to this file");
  app->add_flag("--quiet", sink.quiet, "Print only failing claims and the summary");
}

ClaimCheck count_check(const std::string& claim, const std::string& instance, std::size_t expected,
                       std::size_t observed) {
  return {claim, instance, std::to_string(expected), std::to_string(observed), expected == observed};
}

Network load_network(const std::string& path) { return read_graph_file(path).network; }

// gen ----------------------------------------------------------------------

struct GenArgs {
  std::string family;
  std::size_t k = 0;
  std::size_t n = 0;
  std::optional<std::uint64_t> seed;
  std::string cost = "1";
  double deletionRate = 0.35;
  std::string output;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  std::vector<std::string> comments{std::string(kReportFormat) + " gen " + a.family};
  std::string text;
  if (a.family == "bipartite") {
    const BipartiteFamily fam = gen_bipartite(a.k);
    comments.push_back("k=" + std::to_string(a.k) + " l=" + std::to_string(fam.l) +
                       " epsilon=" + format_rational(fam.epsilon));
    text = serialize_graph(fam.network, std::nullopt, comments);
  } else if (a.family == "grid") {
    const GridFamily fam = gen_grid(a.k);
    comments.push_back("k=" + std::to_string(a.k) + " heavy=" + format_rational(fam.heavy));
    text = serialize_graph(fam.embedding, comments);
  } else if (a.family == "star") {
    const Rational cost = parse_rational(a.cost);
    comments.push_back("k=" + std::to_string(a.k) + " cost=" + format_rational(cost));
    text = serialize_graph(star_embedding(a.k, cost), comments);
  } else if (a.family == "random-planar") {
    if (!a.seed) {
      throw UsageError("random-planar needs --seed");
    }
    if (a.n == 0) {
      throw UsageError("random-planar needs --n");
    }
    RandomPlanarOptions opt;
    opt.vertices = a.n;
    opt.terminals = a.k;
    opt.seed = *a.seed;
    opt.deletionRate = a.deletionRate;
    std::ostringstream rate;
    rate << a.deletionRate;
    comments.push_back("n=" + std::to_string(a.n) + " k=" + std::to_string(a.k) + " seed=" + seed_string(*a.seed) +
                       " deletion-rate=" + rate.str());
    text = serialize_graph(random_planar(opt), comments);
  } else {
    throw UsageError("unknown family '" + a.family + "'");
  }
  emit(out, a.output, text);
  return kExitOk;
}

// compress -----------------------------------------------------------------

struct CompressArgs {
  std::string input;
  std::string method = "contract";
  std::string output;
  std::string sidecar;
  bool stats = false;
};

int cmd_compress(const CompressArgs& a, std::ostream& out, std::ostream& err) {
  const Network net = load_network(a.input);
  MimickingResult res;
  if (a.method == "contract") {
    res = build_by_contraction(net);
  } else if (a.method == "signature") {
    res = build_by_signature(net);
  } else {
    throw UsageError("unknown method '" + a.method + "'");
  }
  const VerificationReport check = verify(net, res.network);
  bool minorOk = true;
  if (res.construction == Construction::ComponentContraction) {
    minorOk = witnesses_minor(net, res.contractionMap, res.removedEdges, res.network.vertex_count());
  }
  const std::vector<std::string> comments{std::string(kReportFormat) + " compress method=" + a.method};
  emit(out, a.output, serialize_graph(res.network, std::nullopt, comments));
  if (!a.sidecar.empty()) {
    write_file(a.sidecar, serialize_contraction(res.contractionMap));
  }
  std::ostream& statsOut = a.output.empty() || a.output == "-" ? err : out;
  if (a.stats) {
    const MimickingStats& s = res.stats;
    statsOut << "construction " << to_string(res.construction) << '\n'
             << "input " << s.inputVertices << " vertices " << s.inputEdges << " edges\n"
             << "output " << s.outputVertices << " vertices " << s.outputEdges << " edges\n"
             << "classes " << s.componentsAfterRemoval << " dropped " << s.droppedClasses << '\n'
             << "size-reference " << s.sizeReference << (s.withinSizeReference ? " within" : " exceeded") << '\n';
  }
  if (!check.allEqual || !minorOk) {
    err << "compress: internal verification failed" << (minorOk ? "" : " (classes not connected)") << '\n';
    return kExitFail;
  }
  statsOut << "verified " << check.perBipartition.size() << " bipartitions\n";
  return kExitOk;
}

// verify -------------------------------------------------------------------

std::string side_label(TerminalSet s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < kMaxTerminals; ++i) {
    if (s.contains(i)) {
      out += first ? "" : ",";
      out += "q" + std::to_string(i + 1);
      first = false;
    }
  }
  return out + "}";
}

int cmd_verify(const std::string& orig, const std::string& cand, bool generalized, const ReportSink& sink,
               std::ostream& out) {
  const Network a = load_network(orig);
  const Network b = load_network(cand);
  const VerificationReport vr = generalized ? verify_generalized(a, b) : verify(a, b);
  Report report(generalized ? "verify --generalized" : "verify");
  report.param("original", orig);
  report.param("candidate", cand);
  auto add = [&](const CutComparison& c, const char* claim) {
    report.add({claim, side_label(c.sources) + "|" + side_label(c.sinks), format_rational(c.original),
                format_rational(c.candidate), c.equal});
  };
  for (const CutComparison& c : vr.perBipartition) {
    add(c, "cut");
  }
  for (const CutComparison& c : vr.generalized) {
    add(c, "generalized-cut");
  }
  return sink.finish(report, out);
}

// experiment ---------------------------------------------------------------

struct ExperimentArgs {
  std::string name;
  std::string family;
  std::size_t k = 0;
  std::optional<std::uint64_t> seed;
  std::size_t spot = 0;
  bool oracle = false;
  std::string input;
  std::size_t pairs = 50;
  std::size_t samples = 100;
  bool exhaustive = false;
  std::size_t seeds = 50;
};

std::uint64_t need_seed(const ExperimentArgs& a) {
  if (!a.seed) {
    throw UsageError("experiment " + a.name + " needs --seed");
  }
  return *a.seed;
}

void experiment_params(Report& r, const ExperimentArgs& a) {
  if (!a.family.empty()) {
    r.param("family", a.family);
  }
  if (a.k != 0) {
    r.param("k", std::to_string(a.k));
  }
  if (a.seed) {
    r.param("seed", seed_string(*a.seed));
  }
  if (!a.input.empty()) {
    r.param("input", a.input);
  }
}

int cmd_experiment(const ExperimentArgs& a, const ReportSink& sink, std::ostream& out) {
  Report report("experiment " + a.name);
  experiment_params(report, a);

  if (a.name == "bipartite-lemma") {
    const BipartiteFamily fam = gen_bipartite(a.k);
    std::vector<std::size_t> indices;
    if (a.spot > 0) {
      std::mt19937_64 rng(need_seed(a));
      std::vector<std::size_t> all(fam.l);
      for (std::size_t i = 0; i < fam.l; ++i) {
        all[i] = i;
      }
      for (std::size_t i = 0; i < std::min(a.spot, fam.l); ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng() % (fam.l - i));
        std::swap(all[i], all[j]);
        indices.push_back(all[i]);
      }
      report.param("spot", std::to_string(a.spot));
    }
    report.add_all(verify_bipartite_lemma(fam, indices).checks);
  } else if (a.name == "grid-lemma") {
    const GridFamily fam = gen_grid(a.k);
    report.add_all(verify_grid_lemma(fam, a.oracle).checks);
  } else if (a.name == "rank") {
    RankBoundsReport r;
    std::string instance = a.family + " k=" + std::to_string(a.k);
    if (a.family == "bipartite") {
      r = verify_rank_bounds(gen_bipartite(a.k));
    } else if (a.family == "grid") {
      r = verify_rank_bounds(gen_grid(a.k));
    } else {
      throw UsageError("rank needs --family bipartite|grid");
    }
    out << "rank " << r.rank << " of " << r.rows << "x" << r.cols << '\n';
    out << "rank ≥ " << r.required << ": " << (r.rankHolds ? "PASS" : "FAIL") << '\n';
    report.add({"rank-lower-bound", instance, ">=" + std::to_string(r.required), std::to_string(r.rank), r.rankHolds});
    if (r.triangularChecked) {
      out << "lower-triangular " << r.required << "x" << r.required << ": " << (r.triangularHolds ? "PASS" : "FAIL")
          << '\n';
      report.add(count_check("triangular-violations", instance, 0, r.triangularViolations));
    }
  } else if (a.name == "bounds") {
    if (a.input.empty()) {
      throw UsageError("bounds needs --input");
    }
    const GraphFile file = read_graph_file(a.input);
    report.param("pairs", std::to_string(a.pairs));
    report.add_all(structural_bounds(file.embedding(), a.pairs, a.seed.value_or(1), a.input).checks);
  } else if (a.name == "tc-collision") {
    const BipartiteFamily fam = gen_bipartite(a.k);
    const CollisionReport c = tc_collision_family(fam, a.samples, need_seed(a), a.exhaustive);
    const std::string instance = "bipartite k=" + std::to_string(a.k);
    report.param("samples", std::to_string(a.samples));
    report.add({"shift-within-gap", instance,
                "l*" + format_rational(c.step) + " < gap",
                c.uniqueGap ? "gap=" + format_rational(*c.uniqueGap) : "gap unknown", c.stepWithinGap});
    report.add(count_check("incidence-stable", instance, c.perturbedNetworks, c.incidenceStable));
    report.add(count_check("pairs-distinguished", instance, c.pairs, c.distinguished));
    if (c.exhaustive) {
      report.add(count_check("distinct-phi", instance, std::size_t{1} << c.l, c.distinctPhi));
    }
    out << "unique rows " << c.uniqueRows << " tied rows " << c.tiedRows << " columns"
        << (c.reordered ? " (reordered)" : "") << ":";
    for (const std::size_t col : c.columns) {
      out << ' ' << col;
    }
    out << '\n';
  } else if (a.name == "perturbation") {
    Network net;
    std::string instance;
    if (!a.input.empty()) {
      net = load_network(a.input);
      instance = a.input;
    } else if (a.family == "bipartite") {
      net = gen_bipartite(a.k).network;
    } else if (a.family == "grid") {
      net = gen_grid(a.k).network();
    } else if (a.family == "star") {
      net = star_network(a.k);
    } else {
      throw UsageError("perturbation needs --input or --family bipartite|grid|star");
    }
    if (instance.empty()) {
      instance = a.family + " k=" + std::to_string(a.k);
    }
    const std::uint64_t first = need_seed(a);
    report.param("seeds", std::to_string(a.seeds));
    const PerturbationCampaign c = perturbation_campaign(net, first, a.seeds);
    out << "gap " << (c.gap ? format_rational(*c.gap) : std::string("infinite")) << " bound "
        << format_rational(c.bound) << " rows " << c.checkedRows << " tied " << c.tiedRows << '\n';
    report.add(count_check("incidence-unchanged", instance, c.seeds, c.stable));
    report.add(count_check("phi-within-mass", instance, c.seeds, c.phiWithinBounds));
    for (const std::string& f : c.failures) {
      out << "failure: " << f << '\n';
    }
  } else {
    throw UsageError("unknown experiment '" + a.name + "'");
  }
  return sink.finish(report, out);
}

// tc -----------------------------------------------------------------------

int cmd_tc_build(const std::string& input, const std::string& output, std::ostream& out) {
  const TCStore store = preprocess(load_network(input));
  if (output.empty()) {
    throw UsageError("tc build needs -o");
  }
  write_file(output, serialize(store), true);
  const StorageReport s = storage_report(store);
  out << "stored " << s.valueWords << " values, " << s.wordBits << "-bit words, header " << s.headerWords
      << " words, bound 2^" << store.k() << (s.withinBound ? " ok" : " exceeded") << '\n';
  return kExitOk;
}

TCStore load_store(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::ParseError, "cannot open " + path);
  }
  return read_store(in);
}

int cmd_tc_query(const std::string& path, const std::string& set, std::ostream& out) {
  const TCStore store = load_store(path);
  out << format_rational(query(store, parse_terminal_set(set, store.k()))) << '\n';
  return kExitOk;
}

int cmd_tc_info(const std::string& path, std::ostream& out) {
  const TCStore store = load_store(path);
  const StorageReport s = storage_report(store);
  out << "k " << store.k() << '\n'
      << "values " << s.valueWords << '\n'
      << "word-bits " << s.wordBits << '\n'
      << "header-words " << s.headerWords << '\n'
      << "total-bits " << s.totalBits << '\n'
      << "bound-words " << s.theoreticalBound.get_str() << '\n'
      << "within-bound " << (s.withinBound ? "yes" : "no") << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mimicking networks and terminal cut experiments", "mimick"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* genCmd = app.add_subcommand("gen", "Generate a network file");
  genCmd->add_option("family", gen.family, "bipartite | grid | star | random-planar")->required();
  genCmd->add_option("--k", gen.k, "Terminal count or side length")->required();
  genCmd->add_option("--n", gen.n, "Vertex count (random-planar)");
  genCmd->add_option("--seed", gen.seed, "Seed (random-planar)");
  genCmd->add_option("--cost", gen.cost, "Edge cost (star)");
  genCmd->add_option("--deletion-rate", gen.deletionRate, "Edge deletion probability (random-planar)");
  genCmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

  CompressArgs comp;
  auto* compCmd = app.add_subcommand("compress", "Build a mimicking network");
  compCmd->add_option("input", comp.input)->required();
  compCmd->add_option("--method", comp.method, "contract | signature");
  compCmd->add_option("-o,--output", comp.output, "Output file (default stdout)");
  compCmd->add_option("--sidecar", comp.sidecar, "Write the contraction classes here");
  compCmd->add_flag("--stats", comp.stats, "Print size statistics");

  std::string verOrig;
  std::string verCand;
  bool generalized = false;
  ReportSink verSink;
  auto* verCmd = app.add_subcommand("verify", "Compare all terminal cut values of two networks");
  verCmd->add_option("original", verOrig)->required();
  verCmd->add_option("candidate", verCand)->required();
  verCmd->add_flag("--generalized", generalized, "Also compare cuts between disjoint terminal sets");
  add_sink_options(verCmd, verSink);

  ExperimentArgs exp;
  ReportSink expSink;
  auto* expCmd = app.add_subcommand("experiment", "Run a lemma or bound check");
  expCmd->add_option("name", exp.name, "bipartite-lemma | grid-lemma | rank | bounds | tc-collision | perturbation")
      ->required();
  expCmd->add_option("--family", exp.family, "bipartite | grid | star");
  expCmd->add_option("--k", exp.k);
  expCmd->add_option("--seed", exp.seed);
  expCmd->add_option("--spot", exp.spot, "Check this many random subsets (bipartite-lemma)");
  expCmd->add_flag("--oracle", exp.oracle, "Cross-check with exhaustive enumeration (grid-lemma)");
  expCmd->add_option("--input", exp.input);
  expCmd->add_option("--pairs", exp.pairs, "Random bipartition pairs (bounds)");
  expCmd->add_option("--samples", exp.samples, "Sampled pairs (tc-collision)");
  expCmd->add_flag("--exhaustive", exp.exhaustive, "Compare all 2^l shifts (tc-collision)");
  expCmd->add_option("--seeds", exp.seeds, "Number of seeds (perturbation)");
  add_sink_options(expCmd, expSink);

  auto* tcCmd = app.add_subcommand("tc", "Terminal cut table");
  tcCmd->require_subcommand(1);
  std::string tcInput;
  std::string tcOutput;
  auto* tcBuild = tcCmd->add_subcommand("build", "Precompute all terminal cut values");
  tcBuild->add_option("input", tcInput)->required();
  tcBuild->add_option("-o,--output", tcOutput)->required();
  std::string tcStore;
  std::string tcSet;
  auto* tcQuery = tcCmd->add_subcommand("query", "Look up one cut value");
  tcQuery->add_option("store", tcStore)->required();
  tcQuery->add_option("--set", tcSet, "Terminal set, e.g. q2,q3")->required();
  auto* tcInfo = tcCmd->add_subcommand("info", "Storage report");
  tcInfo->add_option("store", tcStore)->required();

  std::string incInput;
  std::string incOutput;
  auto* incCmd = app.add_subcommand("incidence", "Export the cutset-edge incidence matrix");
  incCmd->add_option("input", incInput)->required();
  incCmd->add_option("-o,--output", incOutput);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (genCmd->parsed()) {
      return cmd_gen(gen, out);
    }
    if (compCmd->parsed()) {
      return cmd_compress(comp, out, err);
    }
    if (verCmd->parsed()) {
      return cmd_verify(verOrig, verCand, generalized, verSink, out);
    }
    if (expCmd->parsed()) {
      return cmd_experiment(exp, expSink, out);
    }
    if (tcBuild->parsed()) {
      return cmd_tc_build(tcInput, tcOutput, out);
    }
    if (tcQuery->parsed()) {
      return cmd_tc_query(tcStore, tcSet, out);
    }
    if (tcInfo->parsed()) {
      return cmd_tc_info(tcStore, out);
    }
    if (incCmd->parsed()) {
      const Network net = load_network(incInput);
      std::ostringstream text;
      write_incidence(text, build_incidence(net));
      emit(out, incOutput, text.str());
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_usage_kind(e.kind()) ? kExitUsage : kExitFail;
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace mimick::cli
