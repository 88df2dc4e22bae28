#include <gentle/error.hpp>
#include <gentle/rational.hpp>

#include <regex>

namespace gentle {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NotGentle: return "NotGentle";
    case ErrorKind::InfiniteDimensional: return "InfiniteDimensional";
    case ErrorKind::CartanNotUnimodular: return "CartanNotUnimodular";
    case ErrorKind::MissingWinding: return "MissingWinding";
    case ErrorKind::DiscNotCovered: return "DiscNotCovered";
    case ErrorKind::NotPolynomial: return "NotPolynomial";
    case ErrorKind::FullyStoppedUnsupported: return "FullyStoppedUnsupported";
    case ErrorKind::GenusNotIntegral: return "GenusNotIntegral";
    case ErrorKind::UnstoppedComponent: return "UnstoppedComponent";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::InfiniteGlobalDimension: return "InfiniteGlobalDimension";
    case ErrorKind::GradedSerreUnsupported: return "GradedSerreUnsupported";
    case ErrorKind::EmptyComplex: return "EmptyComplex";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::MissingArtifact: return "MissingArtifact";
    case ErrorKind::InconsistentInvariants: return "InconsistentInvariants";
    case ErrorKind::InvalidComplex: return "InvalidComplex";
  }
  return "Unknown";
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  static const std::regex pattern(R"(\s*(-?\d+)(?:\s*/\s*(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    throw Error(ErrorKind::SyntaxError, "not a rational number: '" + text + "'");
  }
  Integer num(m[1].str());
  Integer den(m[2].matched ? m[2].str() : std::string("1"));
  if (den == 0) throw Error(ErrorKind::SyntaxError, "zero denominator in '" + text + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace gentle
