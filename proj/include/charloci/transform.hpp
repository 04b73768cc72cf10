#ifndef CHARLOCI_TRANSFORM_HPP
#define CHARLOCI_TRANSFORM_HPP

#include <map>
#include <string>
#include <vector>

#include "charloci/complex.hpp"
#include "charloci/matrix.hpp"
#include "charloci/torus.hpp"

namespace charloci {

// i_*(L)[s] (x) C_c for a local system L on a subtorus B of A. The subtorus
// is given by an n x 2h embedding of lattices Lambda_B -> Lambda_A (columns
// are the images of the generators mu_j), L by commuting monodromy matrices.
struct LocalSystemObject {
  std::string id;
  CharacterTorus torus;
  int h = 0;
  IntMatrix embedding;             // n rows, 2h columns
  std::vector<QMatrix> monodromy;  // 2h matrices of size rank x rank
  int rank = 1;
  CharacterPoint twist;
  int shift = 0;

  int sub_rank() const { return 2 * h; }
  IntVector column(int j) const;
  // Throws NonCommuting, NonInvertible or InvalidArgument.
  void validate() const;

  static LocalSystemObject constant_sheaf(const CharacterTorus& torus, int shift);
  static LocalSystemObject skyscraper(const CharacterTorus& torus, int rank, int shift = 0);
};

struct ElementaryComplex {
  CharacterTorus torus;
  std::vector<LocalSystemObject> summands;
};

// Koszul model of group cohomology of Lambda_B on V (x) Q[Lambda_A], in
// degrees [-s, 2h - s].
FreeComplex mellin_transform(const LocalSystemObject& obj);

// Degree -> dim H^k(A, K (x) C_rho) by linear algebra on Q^rank.
std::map<int, int> twisted_cohomology(const LocalSystemObject& obj, const CharacterPoint& rho);

LocalSystemObject verdier_dual(const LocalSystemObject& obj);

// Throws TorusMismatch when a summand lives on another torus.
FreeComplex transform_sum(const ElementaryComplex& e);

}  // namespace charloci

#endif
