#include "mimick/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "mimick/error.hpp"

namespace mimick {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
      ++i;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
      ++i;
    }
    if (i > start) {
      out.push_back(line.substr(start, i - start));
    }
  }
  return out;
}

[[noreturn]] void fail(std::size_t lineNo, const std::string& msg) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(lineNo) + ": " + msg);
}

std::uint64_t parse_uint(std::string_view tok, std::size_t lineNo) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    fail(lineNo, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return v;
}

VertexId parse_vertex(std::string_view tok, std::size_t n, std::size_t lineNo) {
  const std::uint64_t v = parse_uint(tok, lineNo);
  if (v >= n) {
    fail(lineNo, "vertex " + std::string(tok) + " out of range");
  }
  return static_cast<VertexId>(v);
}

}  // namespace

PlaneEmbedding GraphFile::embedding() const {
  if (!rotation) {
    throw Error(ErrorKind::InvalidEmbedding, "graph file has no rotation lines");
  }
  return PlaneEmbedding(network, *rotation);
}

GraphFile parse_graph(std::istream& in) {
  GraphFile file;
  bool header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  bool haveTerminals = false;
  std::vector<VertexId> terminals;
  std::vector<Edge> edges;
  std::vector<std::vector<Dart>> rotation;
  std::vector<bool> rotationSeen;
  bool anyRotation = false;

  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    const auto tok = split(line);
    if (tok.empty()) {
      continue;
    }
    if (tok[0] == "c") {
      const std::size_t at = line.find('c');
      std::string text = line.substr(at + 1);
      if (!text.empty() && text.front() == ' ') {
        text.erase(0, 1);
      }
      while (!text.empty() && text.back() == '\r') {
        text.pop_back();
      }
      file.comments.push_back(text);
      continue;
    }
    if (tok[0] == "p") {
      if (header) {
        fail(lineNo, "duplicate header");
      }
      if (tok.size() != 5 || tok[1] != "mimick") {
        fail(lineNo, "header must be 'p mimick <n> <m> <k>'");
      }
      n = parse_uint(tok[2], lineNo);
      m = parse_uint(tok[3], lineNo);
      k = parse_uint(tok[4], lineNo);
      if (n > (std::size_t{1} << 31) || m > (std::size_t{1} << 31)) {
        fail(lineNo, "instance too large");
      }
      if (k > n) {
        fail(lineNo, "more terminals than vertices");
      }
      header = true;
      rotation.assign(n, {});
      rotationSeen.assign(n, false);
      continue;
    }
    if (!header) {
      fail(lineNo, "expected header before '" + std::string(tok[0]) + "'");
    }
    if (tok[0] == "t") {
      if (haveTerminals) {
        fail(lineNo, "duplicate terminal line");
      }
      if (tok.size() - 1 != k) {
        fail(lineNo, "expected " + std::to_string(k) + " terminals, got " + std::to_string(tok.size() - 1));
      }
      for (std::size_t i = 1; i < tok.size(); ++i) {
        terminals.push_back(parse_vertex(tok[i], n, lineNo));
      }
      haveTerminals = true;
    } else if (tok[0] == "e") {
      if (tok.size() != 4) {
        fail(lineNo, "edge line must be 'e <u> <v> <cost>'");
      }
      if (edges.size() == m) {
        fail(lineNo, "more than " + std::to_string(m) + " edges");
      }
      Rational cost;
      try {
        cost = parse_rational(tok[3]);
      } catch (const Error& e) {
        fail(lineNo, e.what());
      }
      edges.push_back({parse_vertex(tok[1], n, lineNo), parse_vertex(tok[2], n, lineNo), cost});
    } else if (tok[0] == "r") {
      if (tok.size() < 2) {
        fail(lineNo, "rotation line needs a vertex");
      }
      const VertexId v = parse_vertex(tok[1], n, lineNo);
      if (rotationSeen[v]) {
        fail(lineNo, "duplicate rotation for vertex " + std::to_string(v));
      }
      rotationSeen[v] = true;
      anyRotation = true;
      for (std::size_t i = 2; i < tok.size(); ++i) {
        const std::string_view d = tok[i];
        const std::size_t colon = d.find(':');
        if (colon == std::string_view::npos) {
          fail(lineNo, "dart must be '<edge>:<end>'");
        }
        const std::uint64_t e = parse_uint(d.substr(0, colon), lineNo);
        const std::uint64_t end = parse_uint(d.substr(colon + 1), lineNo);
        if (end > 1) {
          fail(lineNo, "dart end must be 0 or 1");
        }
        if (e >= m) {
          fail(lineNo, "dart edge " + std::to_string(e) + " out of range");
        }
        rotation[v].push_back({static_cast<EdgeId>(e), static_cast<std::uint8_t>(end)});
      }
    } else {
      fail(lineNo, "unknown line type '" + std::string(tok[0]) + "'");
    }
  }
  if (!header) {
    throw Error(ErrorKind::ParseError, "missing header");
  }
  if (!haveTerminals && k > 0) {
    throw Error(ErrorKind::ParseError, "missing terminal line");
  }
  if (edges.size() != m) {
    throw Error(ErrorKind::ParseError,
                "header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  file.network = Network(n, std::move(edges), std::move(terminals));
  if (anyRotation) {
    file.rotation = std::move(rotation);
    // Validates darts and planarity.
    (void)file.embedding();
  }
  return file;
}

GraphFile parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

GraphFile read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::ParseError, "cannot open " + path);
  }
  return parse_graph(in);
}

std::string serialize_graph(const Network& net, const std::optional<std::vector<std::vector<Dart>>>& rotation,
                            const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const std::string& c : comments) {
    out << (c.empty() ? "c" : "c " + c) << '\n';
  }
  out << "p mimick " << net.vertex_count() << ' ' << net.edge_count() << ' ' << net.terminal_count() << '\n';
  out << 't';
  for (const VertexId t : net.terminals()) {
    out << ' ' << t;
  }
  out << '\n';
  for (const Edge& e : net.edges()) {
    out << "e " << e.u << ' ' << e.v << ' ' << format_rational(e.cost) << '\n';
  }
  if (rotation) {
    for (std::size_t v = 0; v < rotation->size(); ++v) {
      out << "r " << v;
      for (const Dart d : (*rotation)[v]) {
        out << ' ' << d.edge << ':' << static_cast<int>(d.end);
      }
      out << '\n';
    }
  }
  return out.str();
}

std::string serialize_graph(const GraphFile& file) {
  return serialize_graph(file.network, file.rotation, file.comments);
}

std::string serialize_graph(const PlaneEmbedding& emb, const std::vector<std::string>& comments) {
  return serialize_graph(emb.network(), emb.rotations(), comments);
}

std::string serialize_contraction(const ContractionMap& map) {
  std::ostringstream out;
  for (std::uint32_t c = 0; c < map.class_count(); ++c) {
    out << "class " << c;
    for (const VertexId v : map.members(c)) {
      out << ' ' << v;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace mimick
