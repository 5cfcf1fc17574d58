#include "mimick/rational.hpp"

#include <cctype>

#include "mimick/error.hpp"

namespace mimick {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidTerminalCount: return "invalid-terminal-count";
    case ErrorKind::InvalidEdge: return "invalid-edge";
    case ErrorKind::InvalidNetwork: return "invalid-network";
    case ErrorKind::TerminalCollision: return "terminal-collision";
    case ErrorKind::OracleCapacityExceeded: return "oracle-capacity-exceeded";
    case ErrorKind::NonuniqueCuts: return "nonunique-cuts";
    case ErrorKind::PerturbationFailed: return "perturbation-failed";
    case ErrorKind::InvalidEmbedding: return "invalid-embedding";
    case ErrorKind::NotACircuit: return "not-a-circuit";
    case ErrorKind::InvalidPair: return "invalid-pair";
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::InvalidQuery: return "invalid-query";
    case ErrorKind::ParseError: return "parse-error";
    case ErrorKind::InternalError: return "internal-error";
  }
  return "unknown";
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw Error(ErrorKind::ParseError, "zero denominator");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

BigInt parse_integer(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    i = 1;
  }
  if (i == text.size()) {
    throw Error(ErrorKind::ParseError, "malformed integer '" + std::string(text) + "'");
  }
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw Error(ErrorKind::ParseError, "malformed integer '" + std::string(text) + "'");
    }
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return BigInt(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return make_rational(parse_integer(text), 1);
  }
  return make_rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::string format_rational(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

}  // namespace mimick
