#ifndef CHARLOCI_POLY_HPP
#define CHARLOCI_POLY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "charloci/rational.hpp"
#include "charloci/ring.hpp"

namespace charloci {

struct Term {
  Exponents exp;
  Rational coef;
};

// Sparse polynomial over Q. Terms are kept sorted in decreasing order for the
// ring's monomial order, with no zero coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
  static Poly constant(RingPtr ring, const Rational& c);
  static Poly variable(RingPtr ring, int index);
  static Poly monomial(RingPtr ring, Exponents exp, const Rational& c = 1);
  // Takes terms in any order; duplicates are combined and zeros dropped.
  static Poly from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Nonzero constant.
  bool is_unit() const;
  bool is_monomial() const { return terms_.size() == 1; }

  const Term& leading() const { return terms_.front(); }
  const Exponents& leading_exp() const { return terms_.front().exp; }
  const Rational& leading_coef() const { return terms_.front().coef; }
  int total_degree() const;
  // Constant term (zero when absent).
  Rational constant_term() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

  Poly times_monomial(const Exponents& exp, const Rational& c) const;
  Poly monic() const;

  bool operator==(const Poly& other) const;
  bool operator!=(const Poly& other) const { return !(*this == other); }

  Rational evaluate(const std::vector<Rational>& point) const;

  // Re-sorts the terms for another ring with the same variables.
  Poly in_ring(RingPtr ring) const;
  // Embeds into `target`, placing variable i at index offset + i.
  Poly embed(RingPtr target, int offset) const;

 private:
  void normalize();

  RingPtr ring_;
  std::vector<Term> terms_;
};

Poly pow(const Poly& p, int e);

// Image of a polynomial under x_i -> coefs[i] * y^{images[i]} where images may
// have negative entries. The result is y^{-shift} * poly with shift >= 0 chosen
// minimal so that poly is an honest polynomial.
struct LaurentImage {
  Poly poly;
  Exponents shift;
};
LaurentImage substitute_laurent(const Poly& p, const RingPtr& target, const std::vector<Rational>& coefs,
                                const std::vector<std::vector<int>>& images);

// Text form: terms joined by '+'/'-', a term is `coef*mono`, `mono` or `coef`,
// coef is `p` or `p/q`, mono is `x1^3*x2`. Whitespace is ignored on input.
std::string to_string(const Poly& p);
Poly parse_poly(const RingPtr& ring, std::string_view text);

}  // namespace charloci

#endif
