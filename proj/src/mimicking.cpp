#include "mimick/mimicking.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mimick/error.hpp"
#include "mimick/mincut.hpp"

namespace mimick {

std::string to_string(Construction c) {
  return c == Construction::ComponentContraction ? "component-contraction" : "signature-merge";
}

namespace {

std::uint64_t size_reference(std::size_t k) {
  if (k >= 28) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(k) * k * (std::uint64_t{1} << (2 * k));
}

void fill_stats(const Network& input, MimickingResult& result, std::size_t components) {
  MimickingStats& s = result.stats;
  s.inputVertices = input.vertex_count();
  s.inputEdges = input.edge_count();
  s.outputVertices = result.network.vertex_count();
  s.outputEdges = result.network.edge_count();
  s.componentsAfterRemoval = components;
  s.droppedClasses = result.contractionMap.class_count() - result.network.vertex_count();
  s.sizeReference = size_reference(input.terminal_count());
  s.withinSizeReference = s.outputVertices <= s.sizeReference;
}

}  // namespace

EdgeSet terminal_cut_union(const Network& net) {
  std::set<EdgeId> all;
  for (const Bipartition& bp : enumerate_bipartitions(net.terminal_count())) {
    const CutResult cut = min_separating_cut(net, bp);
    all.insert(cut.cutset.begin(), cut.cutset.end());
  }
  return EdgeSet(all.begin(), all.end());
}

MimickingResult build_by_contraction(const Network& net) {
  MimickingResult result;
  result.construction = Construction::ComponentContraction;
  result.removedEdges = terminal_cut_union(net);

  const auto pieceOf = component_labels(net, result.removedEdges);
  const auto componentOf = component_labels(net, {});
  std::vector<char> componentHasTerminal(net.vertex_count(), 0);
  for (VertexId t : net.terminals()) {
    componentHasTerminal[componentOf[t]] = 1;
  }

  // Pieces inside terminal-carrying components come first, numbered by their
  // smallest vertex; terminal-free components are numbered after them.
  const std::size_t pieces = net.vertex_count() == 0 ? 0 : *std::max_element(pieceOf.begin(), pieceOf.end()) + 1;
  std::vector<std::int64_t> classOfPiece(pieces, -1);
  std::uint32_t next = 0;
  for (int pass = 0; pass < 2; ++pass) {
    for (VertexId v = 0; v < net.vertex_count(); ++v) {
      const bool kept = componentHasTerminal[componentOf[v]] != 0;
      if (kept == (pass == 0) && classOfPiece[pieceOf[v]] < 0) {
        classOfPiece[pieceOf[v]] = next++;
      }
    }
    if (pass == 0) {
      result.stats.componentsAfterRemoval = next;
    }
  }
  const std::size_t keptClasses = result.stats.componentsAfterRemoval;
  std::vector<std::uint32_t> classOf(net.vertex_count());
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    classOf[v] = static_cast<std::uint32_t>(classOfPiece[pieceOf[v]]);
  }
  result.contractionMap = ContractionMap(net, std::move(classOf));
  if (result.contractionMap.has_collision()) {
    throw Error(ErrorKind::InternalError, "a component of G minus the cut union holds two terminals");
  }
  result.network = truncate_vertices(contract(net, result.contractionMap), keptClasses);
  fill_stats(net, result, keptClasses);
  return result;
}

MimickingResult build_by_signature(const Network& net) {
  MimickingResult result;
  result.construction = Construction::SignatureMerge;
  const auto splits = enumerate_bipartitions(net.terminal_count());
  const std::size_t words = (splits.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> signature(net.vertex_count(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < splits.size(); ++i) {
    const CutResult cut = min_separating_cut(net, splits[i]);
    for (VertexId v : cut.sideW) {
      signature[v][i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }
  std::map<std::vector<std::uint64_t>, std::uint32_t> classOfSignature;
  std::vector<std::uint32_t> classOf(net.vertex_count());
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    auto [it, inserted] =
        classOfSignature.emplace(signature[v], static_cast<std::uint32_t>(classOfSignature.size()));
    classOf[v] = it->second;
  }
  result.contractionMap = ContractionMap(net, std::move(classOf));
  if (result.contractionMap.has_collision()) {
    throw Error(ErrorKind::InternalError, "two terminals share a cut signature");
  }
  result.network = contract(net, result.contractionMap);
  fill_stats(net, result, result.contractionMap.class_count());
  return result;
}

bool witnesses_minor(const Network& net, const ContractionMap& map, std::span<const EdgeId> removedEdges,
                     std::size_t keptClasses) {
  const auto label = component_labels(net, removedEdges);
  for (std::uint32_t c = 0; c < map.class_count(); ++c) {
    const VertexSet& members = map.members(c);
    for (VertexId v : members) {
      if (label[v] != label[members.front()]) {
        return false;
      }
    }
    // A kept class must also be a whole component, otherwise contraction
    // would merge pieces that G ∖ Ê keeps apart.
    if (c < keptClasses) {
      const auto count = static_cast<std::size_t>(std::count(label.begin(), label.end(), label[members.front()]));
      if (count != members.size()) {
        return false;
      }
    }
  }
  return true;
}

namespace {

void check_pair(const Network& original, const Network& candidate) {
  if (original.terminal_count() != candidate.terminal_count()) {
    throw Error(ErrorKind::InvalidPair, "terminal counts differ (" + std::to_string(original.terminal_count()) +
                                            " vs " + std::to_string(candidate.terminal_count()) + ")");
  }
  if (original.terminal_count() < 2) {
    throw Error(ErrorKind::InvalidTerminalCount, "verification needs at least 2 terminals");
  }
}

CutComparison compare(const Network& original, const Network& candidate, TerminalSet sources, TerminalSet sinks) {
  CutComparison row;
  row.sources = sources;
  row.sinks = sinks;
  row.original = min_cut_between(original, sources, sinks).value;
  row.candidate = min_cut_between(candidate, sources, sinks).value;
  row.equal = row.original == row.candidate;
  return row;
}

}  // namespace

VerificationReport verify(const Network& original, const Network& candidate) {
  check_pair(original, candidate);
  VerificationReport report;
  report.allEqual = true;
  for (const Bipartition& bp : enumerate_bipartitions(original.terminal_count())) {
    report.perBipartition.push_back(compare(original, candidate, bp.s_bar(), bp.s()));
    report.allEqual = report.allEqual && report.perBipartition.back().equal;
  }
  return report;
}

std::vector<std::pair<TerminalSet, TerminalSet>> generalized_pairs(std::size_t k) {
  std::vector<std::pair<TerminalSet, TerminalSet>> out;
  const std::uint64_t all = all_terminals_mask(k);
  for (std::uint64_t united = 1; united < all; ++united) {
    if (__builtin_popcountll(united) < 2) {
      continue;
    }
    const std::uint64_t low = united & (~united + 1);
    const std::uint64_t rest = united & ~low;
    // S = low ∪ sub for every proper submask sub of rest (T = rest ∖ sub nonempty).
    for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
      if (sub != rest) {
        out.emplace_back(TerminalSet{low | sub}, TerminalSet{rest & ~sub});
      }
      if (sub == 0) {
        break;
      }
    }
  }
  return out;
}

VerificationReport verify_generalized(const Network& original, const Network& candidate) {
  VerificationReport report = verify(original, candidate);
  for (const auto& [s, t] : generalized_pairs(original.terminal_count())) {
    report.generalized.push_back(compare(original, candidate, s, t));
    report.allEqual = report.allEqual && report.generalized.back().equal;
  }
  return report;
}

}  // namespace mimick
