#ifndef CHARLOCI_MODULE_HPP
#define CHARLOCI_MODULE_HPP

#include <cstdint>

#include "charloci/algebra.hpp"

namespace charloci {

// coker(relations : R^r -> R^g). Columns of `relations` are relation vectors.
class FPModule {
 public:
  FPModule() = default;
  FPModule(RingPtr ring, int num_generators, PolyMatrix relations);

  static FPModule free(RingPtr ring, int rank);
  // R / I.
  static FPModule quotient(const Ideal& ideal);

  const RingPtr& ring() const { return ring_; }
  int num_generators() const { return num_gens_; }
  const PolyMatrix& relations() const { return relations_; }

  // The relations span all of R^g.
  bool is_zero() const;
  // Intersection over generators of (im A : e_j).
  Ideal annihilator() const;
  // Ideal of maximal (g x g) minors of the relation matrix.
  Ideal fitting_ideal() const;

 private:
  RingPtr ring_;
  int num_gens_ = 0;
  PolyMatrix relations_;
};

// A presentation with unit entries eliminated. `project` (new x old)
// rewrites old generators in new ones; `include` (old x new) sends each new
// generator to the old generator it came from. Both are mutually inverse
// isomorphisms of the presented modules.
struct PrunedModule {
  FPModule module;
  PolyMatrix project;
  PolyMatrix include;
};

PrunedModule prune(const FPModule& m);

// Hom(M, R) presented on generators ker(A^T).
FPModule dual_module(const FPModule& m);

struct IsoOptions {
  int degree_budget = 1;
  int attempts = 4;
  std::uint64_t seed = 1;
};

struct IsoResult {
  bool isomorphic = false;
  // A negative answer is certified only when an invariant differs.
  bool certified = false;
  int degree_used = -1;
};

// Bounded search for an isomorphism: homomorphisms of bounded degree both
// ways are found by linear algebra, and a random member of each space is
// tested for surjectivity. Surjections both ways between finitely generated
// modules are isomorphisms.
IsoResult isomorphic(const FPModule& a, const FPModule& b, const IsoOptions& options = {});

// Matrices P (b_gens x a_gens) with P * A_a in im A_b, entries of degree at
// most `degree`; returned as a basis of the Q-space.
std::vector<PolyMatrix> bounded_homs(const FPModule& a, const FPModule& b, int degree);

// Is the map of generators P : a -> b onto?
bool is_surjective(const PolyMatrix& p, const FPModule& target);

}  // namespace charloci

#endif
