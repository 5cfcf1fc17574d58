#include "mimick/incidence.hpp"

#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "mimick/error.hpp"

namespace mimick {

IncidenceMatrix IncidenceMatrix::select_rows(std::span<const std::size_t> rowPositions) const {
  IncidenceMatrix out;
  out.cols = cols;
  for (std::size_t r : rowPositions) {
    out.rowSplits.push_back(rowSplits.at(r));
    out.phi.push_back(phi.at(r));
    const auto source = row(r);
    out.bits.insert(out.bits.end(), source.begin(), source.end());
  }
  return out;
}

IncidenceMatrix build_incidence(const Network& net) {
  const auto rows = enumerate_bipartitions(net.terminal_count());
  return build_incidence(net, rows);
}

IncidenceMatrix build_incidence(const Network& net, std::span<const Bipartition> rows) {
  IncidenceMatrix mat;
  mat.rowSplits.assign(rows.begin(), rows.end());
  mat.cols = net.edge_count();
  mat.bits.assign(rows.size() * mat.cols, 0);
  mat.phi.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const CutResult cut = min_separating_cut(net, rows[r]);
    for (EdgeId id : cut.cutset) {
      mat.bits[r * mat.cols + id] = 1;
    }
    mat.phi.push_back(cut.value);
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Rational dot = 0;
    for (std::size_t c = 0; c < mat.cols; ++c) {
      if (mat.at(r, c)) {
        dot += net.edge(static_cast<EdgeId>(c)).cost;
      }
    }
    if (dot != mat.phi[r]) {
      throw Error(ErrorKind::InternalError, "A·c differs from Φ at row " + std::to_string(r));
    }
  }
  return mat;
}

namespace {

/// Bareiss elimination in place; returns pivot columns. Every intermediate
/// entry is a minor of the input, so each division below is exact.
std::vector<std::size_t> bareiss_pivots(std::vector<std::vector<BigInt>> m) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.size();
  if (rows == 0) {
    return pivots;
  }
  const std::size_t cols = m[0].size();
  BigInt previous = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) {
      ++p;
    }
    if (p == rows) {
      continue;
    }
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), previous.get_mpz_t());
      }
      m[i][c] = 0;
    }
    previous = m[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<BigInt>> to_integer_matrix(const IncidenceMatrix& mat) {
  std::vector<std::vector<BigInt>> m(mat.rows(), std::vector<BigInt>(mat.cols));
  for (std::size_t r = 0; r < mat.rows(); ++r) {
    for (std::size_t c = 0; c < mat.cols; ++c) {
      m[r][c] = mat.at(r, c) ? 1 : 0;
    }
  }
  return m;
}

}  // namespace

std::size_t rank(const std::vector<std::vector<BigInt>>& matrix) { return bareiss_pivots(matrix).size(); }

std::size_t rank(const IncidenceMatrix& mat) { return bareiss_pivots(to_integer_matrix(mat)).size(); }

std::vector<std::size_t> independent_columns(const IncidenceMatrix& mat) {
  return bareiss_pivots(to_integer_matrix(mat));
}

void write_incidence(std::ostream& out, const IncidenceMatrix& mat) {
  out << mat.rows() << ' ' << mat.cols << '\n';
  for (std::size_t r = 0; r < mat.rows(); ++r) {
    for (std::size_t c = 0; c < mat.cols; ++c) {
      out << (mat.at(r, c) ? '1' : '0');
    }
    out << '\n';
  }
  for (const Rational& v : mat.phi) {
    out << format_rational(v) << '\n';
  }
}

IncidenceMatrix read_incidence(std::istream& in) {
  IncidenceMatrix mat;
  std::size_t m = 0;
  if (!(in >> m >> mat.cols)) {
    throw Error(ErrorKind::ParseError, "missing matrix header");
  }
  mat.bits.reserve(m * mat.cols);
  for (std::size_t r = 0; r < m; ++r) {
    std::string line;
    in >> line;
    if (line.size() != mat.cols) {
      throw Error(ErrorKind::ParseError, "matrix row " + std::to_string(r) + " has the wrong width");
    }
    for (char ch : line) {
      if (ch != '0' && ch != '1') {
        throw Error(ErrorKind::ParseError, "matrix entries must be 0 or 1");
      }
      mat.bits.push_back(ch == '1' ? 1 : 0);
    }
  }
  for (std::size_t r = 0; r < m; ++r) {
    std::string token;
    if (!(in >> token)) {
      throw Error(ErrorKind::ParseError, "missing Φ entry " + std::to_string(r));
    }
    mat.phi.push_back(parse_rational(token));
  }
  // Row labels are implied by position.
  std::size_t k = 2;
  while (k < 30 && bipartition_count(k) < m) {
    ++k;
  }
  if (bipartition_count(k) != m) {
    throw Error(ErrorKind::ParseError, "row count " + std::to_string(m) + " is not 2^(k-1)-1");
  }
  mat.rowSplits = enumerate_bipartitions(k);
  return mat;
}

Rational perturbation_bound(const std::optional<Rational>& gap, std::size_t edgeCount) {
  if (edgeCount == 0) {
    return Rational(0);
  }
  const Rational edges(static_cast<unsigned long>(edgeCount));
  if (!gap) {
    return Rational(1) / edges;
  }
  if (sgn(*gap) <= 0) {
    throw Error(ErrorKind::NonuniqueCuts, "gap is zero");
  }
  // 1/(Δ|E|) keeps the total shift below 1/Δ, which is below Δ only when
  // Δ > 1; Δ/|E| keeps it below Δ in every case.
  Rational inverse = Rational(1) / (*gap * edges);
  Rational direct = *gap / edges;
  return inverse < direct ? inverse : direct;
}

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t resolution) {
  if ((resolution & (resolution - 1)) == 0) {
    return rng() & (resolution - 1);
  }
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % resolution;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % resolution;
}

bool rows_equal(const IncidenceMatrix& a, const IncidenceMatrix& b) {
  return a.cols == b.cols && a.bits == b.bits;
}

}  // namespace

PerturbedNetwork perturb(const Network& net, std::uint64_t seed, const PerturbOptions& options) {
  if (options.resolution == 0) {
    throw Error(ErrorKind::InvalidParameter, "resolution must be positive");
  }
  PerturbedNetwork out;
  out.base = net;
  out.seed = seed;

  std::vector<Bipartition> candidates =
      options.rows.empty() ? enumerate_bipartitions(net.terminal_count()) : options.rows;
  if (options.knownGap) {
    out.checkedRows = candidates;
    out.gap = options.knownGap;
  } else {
    for (const Bipartition& bp : candidates) {
      const GapReport g = gap(net, bp, GapMode::RequireDelta);
      if (!g.unique) {
        if (options.scope == PerturbScope::AllRows) {
          throw Error(ErrorKind::NonuniqueCuts, "minimum cut for " + bp.to_string() + " is not unique");
        }
        ++out.tiedRows;
        continue;
      }
      out.checkedRows.push_back(bp);
      if (g.delta && (!out.gap || *g.delta < *out.gap)) {
        out.gap = g.delta;
      }
    }
  }
  out.bound = perturbation_bound(out.gap, net.edge_count());

  const IncidenceMatrix reference = build_incidence(net, out.checkedRows);
  std::mt19937_64 rng(seed);
  const Rational step = out.bound / Rational(BigInt(std::to_string(options.resolution), 10));
  for (int attempt = 1; attempt <= options.maxAttempts; ++attempt) {
    out.attempts = attempt;
    out.w.assign(net.edge_count(), Rational(0));
    std::vector<Rational> costs = net.cost_vector();
    for (std::size_t e = 0; e < costs.size(); ++e) {
      const std::uint64_t t = draw(rng, options.resolution);
      out.w[e] = step * Rational(BigInt(std::to_string(t), 10));
      costs[e] += out.w[e];
    }
    out.perturbed = with_costs(net, costs);
    if (rows_equal(reference, build_incidence(out.perturbed, out.checkedRows))) {
      return out;
    }
  }
  throw Error(ErrorKind::PerturbationFailed,
              "incidence rows changed in all " + std::to_string(options.maxAttempts) + " attempts");
}

RankBoundReport rank_bound_experiment(const Network& net, std::size_t candidateEdgeCount, std::uint64_t seed,
                                      const PerturbOptions& options) {
  RankBoundReport report;
  report.perturbation = perturb(net, seed, options);
  const IncidenceMatrix mat = build_incidence(report.perturbation.perturbed, report.perturbation.checkedRows);
  report.rank = rank(mat);
  report.rows = mat.rows();
  report.perturbedPhi = mat.phi;
  report.candidateEdgeCount = candidateEdgeCount;
  report.candidateRuledOut = candidateEdgeCount < report.rank;
  std::ostringstream claim;
  claim << "every mimicking network of the perturbed instance has at least " << report.rank << " edges";
  report.claim = claim.str();
  return report;
}

}  // namespace mimick
