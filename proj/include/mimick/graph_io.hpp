#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mimick/graph_ops.hpp"
#include "mimick/network.hpp"
#include "mimick/planar.hpp"

namespace mimick {

/// Parsed graph file. `rotation` is present iff the file carries `r` lines.
struct GraphFile {
  Network network;
  std::optional<std::vector<std::vector<Dart>>> rotation;
  std::vector<std::string> comments;

  /// Builds and validates the embedding. Throws Error(InvalidEmbedding) when
  /// the file has no rotation lines.
  PlaneEmbedding embedding() const;

  friend bool operator==(const GraphFile&, const GraphFile&) = default;
};

/// Line format:
///   c <text>                     comment
///   p mimick <n> <m> <k>         header, exactly once, before anything else
///   t <v1> ... <vk>              terminals in index order
///   e <u> <v> <num>/<den>        edge; ids follow file order
///   r <v> <edge>:<end> ...       rotation of v (counterclockwise)
/// Throws Error(ParseError) with a line number, or the Network validation error.
GraphFile parse_graph(std::istream& in);
GraphFile parse_graph_string(const std::string& text);
GraphFile read_graph_file(const std::string& path);

/// Canonical text; comments are written first.
std::string serialize_graph(const Network& net, const std::optional<std::vector<std::vector<Dart>>>& rotation = std::nullopt,
                            const std::vector<std::string>& comments = {});
std::string serialize_graph(const GraphFile& file);
std::string serialize_graph(const PlaneEmbedding& emb, const std::vector<std::string>& comments = {});

/// One line per class: `class <id> <v> <v> ...`, classes in id order.
std::string serialize_contraction(const ContractionMap& map);

}  // namespace mimick
