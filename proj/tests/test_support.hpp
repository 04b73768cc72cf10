#ifndef CHARLOCI_TEST_SUPPORT_HPP
#define CHARLOCI_TEST_SUPPORT_HPP

#include <random>

#include "charloci/poly.hpp"

namespace charloci::testing {

// Random polynomial with at most `terms` terms, total degree <= `degree` and
// integer coefficients in [-coef, coef].
inline Poly random_poly(const RingPtr& ring, std::mt19937_64& rng, int terms, int degree, int coef) {
  const int n = ring->num_vars();
  std::uniform_int_distribution<int> c(-coef, coef);
  std::uniform_int_distribution<int> v(0, n - 1);
  std::uniform_int_distribution<int> d(0, degree);
  std::vector<Term> out;
  for (int k = 0; k < terms; ++k) {
    Exponents e(n, 0);
    int deg = d(rng);
    for (int s = 0; s < deg; ++s) ++e[v(rng)];
    int a = c(rng);
    if (a == 0) a = 1;
    out.push_back({e, Rational(a)});
  }
  Poly p = Poly::from_terms(ring, std::move(out));
  if (p.is_zero()) p = Poly::constant(ring, 1);
  return p;
}

inline Poly random_monomial(const RingPtr& ring, std::mt19937_64& rng, int degree) {
  const int n = ring->num_vars();
  std::uniform_int_distribution<int> v(0, n - 1);
  Exponents e(n, 0);
  for (int s = 0; s < degree; ++s) ++e[v(rng)];
  return Poly::monomial(ring, e);
}

}  // namespace charloci::testing

#endif
