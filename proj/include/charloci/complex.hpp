#ifndef CHARLOCI_COMPLEX_HPP
#define CHARLOCI_COMPLEX_HPP

#include <map>
#include <optional>
#include <vector>

#include "charloci/module.hpp"
#include "charloci/torus.hpp"

namespace charloci {

// Bounded cochain complex of free modules. The differential leaving degree d
// is a ranks(d+1) x ranks(d) matrix acting on columns.
class FreeComplex {
 public:
  FreeComplex() = default;
  // ranks[i] is the rank in degree lo + i; diffs[i] leaves degree lo + i, so
  // diffs.size() == ranks.size() - 1 (or 0 for an empty range). Checks d*d = 0
  // and throws InvalidArgument otherwise.
  FreeComplex(RingPtr ring, int lo, std::vector<int> ranks, std::vector<PolyMatrix> diffs);

  static FreeComplex zero(RingPtr ring);
  static FreeComplex free_module(RingPtr ring, int rank, int degree = 0);

  const RingPtr& ring() const { return ring_; }
  // Degree range [lo, hi]; hi < lo for the empty complex.
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }
  int rank(int d) const;
  // Zero matrix of the right shape outside the stored range.
  PolyMatrix differential(int d) const;
  bool is_zero() const;
  bool operator==(const FreeComplex& other) const;

  // Drops zero-rank terms at both ends.
  FreeComplex trimmed() const;

 private:
  RingPtr ring_;
  int lo_ = 0;
  std::vector<int> ranks_;
  std::vector<PolyMatrix> diffs_;
};

// Degreewise matrices f(d) : source(d) -> target(d).
struct ChainMap {
  FreeComplex source;
  FreeComplex target;
  std::map<int, PolyMatrix> components;

  PolyMatrix at(int d) const;
  bool commutes() const;
};

// Bounded complex of finitely presented modules; maps[i] goes from degree
// lo + i to lo + i + 1 as a matrix on generators.
struct ModuleComplex {
  RingPtr ring;
  int lo = 0;
  std::vector<FPModule> modules;
  std::vector<PolyMatrix> maps;

  int hi() const { return lo + static_cast<int>(modules.size()) - 1; }
};

// H^i as ker(d_i) / im(d_{i-1}) presented on generators of ker(d_i).
FPModule cohomology_module(const FreeComplex& c, int i);

// Degree -> dim H^k(C (x) k(rho)). Only degrees in range are listed.
std::map<int, int> derived_fiber(const FreeComplex& c, const CharacterPoint& rho);

FreeComplex dual(const FreeComplex& c);
FreeComplex shift(const FreeComplex& c, int s);
// Throws NotAChainMap if f does not commute with the differentials.
FreeComplex cone(const ChainMap& f);
FreeComplex direct_sum(const FreeComplex& a, const FreeComplex& b);
// x_i -> rho_i x_i.
FreeComplex twist(const FreeComplex& c, const CharacterPoint& rho);
// x_i -> 1/x_i, then each differential is multiplied by the smallest
// monomial clearing its denominators.
FreeComplex invert_coords(const FreeComplex& c);
long euler_characteristic(const FreeComplex& c);

// Resolution F_L -> ... -> F_0 placed in degrees -L..0, with F_0 = R^g on the
// given generators and d_{-1} = the relation matrix. Throws ResolutionTooLong
// when the kernel is still nonzero after max_length steps (default n + 1).
FreeComplex free_resolution(const FPModule& m, std::optional<int> max_length = std::nullopt);

// Gaussian elimination of unit entries; the result is homotopy equivalent.
FreeComplex prune(const FreeComplex& c);

FreeComplex free_replacement(const ModuleComplex& m);
FreeComplex truncate_leq(const FreeComplex& c, int n);
FreeComplex truncate_geq(const FreeComplex& c, int n);

struct SupportEntry {
  int degree;
  Ideal annihilator;
  Codim codim;
};
using SupportProfile = std::vector<SupportEntry>;

// Per-degree support of cohomology over [lo, hi]; with a torus the
// annihilators are saturated at the unit monomial before taking codimension.
SupportProfile support_profile(const FreeComplex& c, const CharacterTorus* torus = nullptr);
Codim support_codim(const FPModule& m, const CharacterTorus* torus = nullptr);

// Koszul cochain complex of commuting operators T_j (each rank x rank) on
// R^rank: degree lo + p holds Lambda^p(R^r) (x) R^rank, with basis e_J (x) v
// for p-subsets J in lexicographic order and d(e_J v) = sum_j e_j ^ e_J T_j v.
FreeComplex koszul_complex(const RingPtr& ring, const std::vector<PolyMatrix>& ops, int rank, int lo);
FreeComplex koszul_complex(const std::vector<Poly>& elements, int lo);

// Degreewise comparison of cohomology presentations.
bool same_cohomology(const FreeComplex& a, const FreeComplex& b, const IsoOptions& options = {});

}  // namespace charloci

#endif
