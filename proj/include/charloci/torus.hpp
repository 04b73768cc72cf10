#ifndef CHARLOCI_TORUS_HPP
#define CHARLOCI_TORUS_HPP

#include <vector>

#include "charloci/algebra.hpp"

namespace charloci {

using IntVector = std::vector<long long>;
using IntMatrix = std::vector<IntVector>;  // row-major

// Character torus of a g-dimensional abelian variety: Spec of the Laurent
// ring in n = 2g variables, modelled by the polynomial ring in x1..xn with
// the product x1*...*xn inverted on demand.
class CharacterTorus {
 public:
  CharacterTorus() = default;
  explicit CharacterTorus(int g, MonomialOrder order = MonomialOrder::grevlex());
  // A torus on an existing ring (n = num_vars, which must be even).
  static CharacterTorus on_ring(RingPtr ring);

  int g() const { return g_; }
  int n() const { return 2 * g_; }
  const RingPtr& ring() const { return ring_; }
  const Poly& unit_monomial() const { return unit_; }

  bool operator==(const CharacterTorus& other) const { return g_ == other.g_ && same_ring(ring_, other.ring_); }

 private:
  int g_ = 0;
  RingPtr ring_;
  Poly unit_;
};

struct CharacterPoint {
  std::vector<Rational> coords;

  CharacterPoint() = default;
  // Throws ZeroValue on a zero coordinate.
  explicit CharacterPoint(std::vector<Rational> c);
  static CharacterPoint trivial(int n) { return CharacterPoint(std::vector<Rational>(n, Rational(1))); }

  int size() const { return static_cast<int>(coords.size()); }
  CharacterPoint inverse() const;
  CharacterPoint operator*(const CharacterPoint& other) const;
  // rho^v for an integer vector v.
  Rational power(const IntVector& v) const;
  bool operator==(const CharacterPoint&) const = default;
};

// The locus {x : x^{b_j} = c_j} for sublattice basis vectors b_j.
struct TranslatedSubtorus {
  int n = 0;
  IntMatrix basis;
  std::vector<Rational> values;

  int rank() const { return static_cast<int>(basis.size()); }
  int dimension() const { return n - rank(); }
  // The basis spans a saturated sublattice (Smith invariants all 1).
  bool primitive() const;
  bool contains(const CharacterPoint& p) const;
};

struct SmithForm {
  IntMatrix d;  // m x n, diagonal
  IntMatrix u;  // m x m unimodular
  IntMatrix v;  // n x n unimodular, u * a * v = d
  std::vector<long long> invariants;  // nonzero diagonal entries, each dividing the next
};

SmithForm smith_normal_form(const IntMatrix& a);
IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b);
// Inverse of a unimodular matrix.
IntMatrix unimodular_inverse(const IntMatrix& a);

// x^{b+} - c x^{b-} for each basis vector, saturated at the unit monomial.
Ideal subtorus_ideal(const TranslatedSubtorus& t, const CharacterTorus& torus);
// Every value is a root of unity of order at most max_order (over Q: +-1).
bool torsion_check(const TranslatedSubtorus& t, int max_order);
Ideal saturate_at_units(const Ideal& ideal, const CharacterTorus& torus);

struct LatticeSurjection {
  int source_g = 0;
  int target_g = 0;
  IntMatrix matrix;  // (2 target_g) x (2 source_g)
};

// Pullback along Char(B) -> Char(A): x_i -> y^{column i}.
struct RingMap {
  RingPtr source;
  RingPtr target;
  std::vector<std::vector<int>> images;
  LaurentImage apply(const Poly& p) const;
};

// Throws NotSurjective when the matrix is not onto Z^{2 target_g}.
RingMap restriction_substitution(const LatticeSurjection& f, const CharacterTorus& source,
                                 const CharacterTorus& target);

}  // namespace charloci

#endif
