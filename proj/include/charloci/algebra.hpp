#ifndef CHARLOCI_ALGEBRA_HPP
#define CHARLOCI_ALGEBRA_HPP

#include <compare>
#include <optional>
#include <vector>

#include "charloci/groebner.hpp"
#include "charloci/matrix.hpp"

namespace charloci {

// Finitely generated ideal. Values are immutable; `groebner()` returns an
// ideal whose generators are the reduced Groebner basis.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Poly> gens);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }
  bool is_groebner() const { return is_groebner_; }

  Ideal groebner() const;
  bool is_unit() const;
  bool is_zero() const;
  bool contains(const Poly& p) const;
  bool contains(const Ideal& other) const;
  bool operator==(const Ideal& other) const;
  Poly reduce(const Poly& p) const;

 private:
  RingPtr ring_;
  std::vector<Poly> gens_;
  bool is_groebner_ = false;
};

std::vector<Poly> groebner_basis(const RingPtr& ring, const std::vector<Poly>& gens, GroebnerStats* stats = nullptr);
// Columns of the result form the reduced basis of the column submodule.
PolyMatrix groebner_basis(const PolyMatrix& gens, GroebnerStats* stats = nullptr);
Poly normal_form(const Poly& p, const std::vector<Poly>& basis);
std::vector<Poly> normal_form(const std::vector<Poly>& v, const PolyMatrix& basis);

// Submodule of R^rank spanned by the columns of a matrix. With lifting
// enabled the basis is computed for the graph of the generator map, so
// membership comes with explicit coefficients and the syzygies fall out of
// the same computation.
class Submodule {
 public:
  explicit Submodule(const PolyMatrix& gens, bool with_lift = false);

  const RingPtr& ring() const { return ring_; }
  int rank() const { return rank_; }
  int num_generators() const { return num_gens_; }
  // Basis of the submodule itself (top part of the graph basis when lifting).
  const std::vector<ModVec>& basis() const { return basis_; }
  PolyMatrix basis_matrix() const;

  bool contains(const std::vector<Poly>& v) const;
  bool contains_columns(const PolyMatrix& m) const;
  std::vector<Poly> reduce(const std::vector<Poly>& v) const;
  // The submodule is all of R^rank.
  bool is_everything() const;

  // Coefficients c with gens * c = v, or nullopt when v is not a member.
  std::optional<std::vector<Poly>> lift(const std::vector<Poly>& v) const;
  // Generators of the kernel of the generator map, as columns.
  PolyMatrix syzygies() const;

 private:
  RingPtr ring_;
  int rank_;
  int num_gens_;
  bool with_lift_;
  std::vector<ModVec> graph_basis_;
  std::vector<ModVec> basis_;
};

// Columns generating ker(m : R^cols -> R^rows).
PolyMatrix syzygies(const PolyMatrix& m);
// X with gens * X = target, or nullopt if some column of target is outside
// the image of gens.
std::optional<PolyMatrix> lift_matrix(const PolyMatrix& target, const PolyMatrix& gens);

// Dimension of V(I) in affine space; nullopt stands for the empty variety.
using Dimension = std::optional<int>;

// Maximal size of a variable subset meeting no leading monomial's support.
Dimension dimension_from_leading_terms(const std::vector<Exponents>& leads, int num_vars);
Dimension krull_dimension(const Ideal& ideal);

// Codimension with +infinity for the empty set, ordered above every integer.
class Codim {
 public:
  static Codim infinite() { return Codim(true, 0); }
  static Codim finite(int v) { return Codim(false, v); }
  static Codim of(const Dimension& dim, int ambient);

  bool is_infinite() const { return infinite_; }
  int value() const { return value_; }
  // Codim >= n for an integer bound; always true when infinite.
  bool at_least(int n) const { return infinite_ || value_ >= n; }
  bool operator==(const Codim&) const = default;
  std::strong_ordering operator<=>(const Codim& other) const;

 private:
  Codim(bool inf, int v) : infinite_(inf), value_(v) {}
  bool infinite_;
  int value_;
};

// Ideal of all t x t minors: t = 0 gives the unit ideal, t larger than both
// dimensions gives the zero ideal.
Ideal minors_ideal(const PolyMatrix& m, int t);
Poly determinant(const PolyMatrix& m);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
Ideal ideal_quotient(const Ideal& a, const Poly& f);
// I : f^infinity by iterated colon until stable.
Ideal saturation(const Ideal& a, const Poly& f);
// I : f^infinity by eliminating t from I + (1 - t f).
Ideal saturation_by_elimination(const Ideal& a, const Poly& f);
// p in sqrt(I), via 1 in I + (1 - t p).
bool radical_membership(const Poly& p, const Ideal& ideal);
// sqrt(a) == sqrt(b), by two-sided radical membership of generators.
bool same_radical(const Ideal& a, const Ideal& b);

}  // namespace charloci

#endif
