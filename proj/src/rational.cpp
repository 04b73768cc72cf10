#include "charloci/rational.hpp"

#include <cctype>

#include "charloci/errors.hpp"

namespace charloci {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::TorusMismatch: return "TorusMismatch";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::ResolutionTooLong: return "ResolutionTooLong";
    case ErrorCode::NotSurjective: return "NotSurjective";
    case ErrorCode::ZeroValue: return "ZeroValue";
    case ErrorCode::NonCommuting: return "NonCommuting";
    case ErrorCode::NonInvertible: return "NonInvertible";
    case ErrorCode::NotAChainMap: return "NotAChainMap";
    case ErrorCode::NotReflexive: return "NotReflexive";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  bool negative = false;
  std::size_t start = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    start = 1;
  }
  std::string_view body(s);
  body.remove_prefix(start);
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational '" + std::string(text) + "'", 1, 1);
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", 1, 1);
  Rational q(n, d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational pow(const Rational& base, long exponent) {
  Rational result = 1;
  Rational b = exponent < 0 ? Rational(1 / base) : base;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), b.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), b.get_den_mpz_t(), e);
  result = Rational(num, den);
  result.canonicalize();
  return result;
}

}  // namespace charloci
