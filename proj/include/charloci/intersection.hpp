#ifndef CHARLOCI_INTERSECTION_HPP
#define CHARLOCI_INTERSECTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "charloci/complex.hpp"

namespace charloci {

struct ICInput {
  FPModule module;
  int ambient_dim = 0;
  // Measure supports on the torus (units inverted) instead of affine space.
  bool torus_mode = false;
};

// Smallest odd l with 2l + 1 >= n, i.e. 2 ceil((n + 1) / 4) - 1.
int ell(int n);

bool is_reflexive(const FPModule& m);
// Hom(Hom(M, R), R), presented on generators of ker of the dual relations.
FPModule reflexive_hull(const FPModule& m);

// F_0 = Hom(M, R), F_j = tau_{<= j-1} D F_{j-1}; returns F_l with l = ell(n)
// unless overridden. Throws NotReflexive.
FreeComplex intersection_complex(const ICInput& inp, std::optional<int> ell_override = std::nullopt);
// All stages F_0..F_l of the recursion.
std::vector<FreeComplex> intersection_stages(const ICInput& inp, int l);

struct CodimBound {
  int i = 0;
  Codim codim = Codim::infinite();
  int required = 0;
  bool ok() const { return codim.at_least(required); }
};

struct ICReport {
  bool reflexive = false;
  std::string error;
  bool h0_matches = false;
  std::vector<CodimBound> codim_bounds;
  bool m_perverse = false;
  bool dual_h0_matches = false;
  std::vector<CodimBound> dual_codim_bounds;
  bool stable_under_ell_increase = false;
  std::optional<FreeComplex> complex;

  bool passed() const;
};

ICReport ic_verify(const ICInput& inp, std::optional<int> ell_override = std::nullopt);

}  // namespace charloci

#endif
