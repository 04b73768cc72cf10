#ifndef CHARLOCI_PERVERSITY_HPP
#define CHARLOCI_PERVERSITY_HPP

#include <optional>
#include <vector>

#include "charloci/complex.hpp"
#include "charloci/loci.hpp"

namespace charloci {

// p(c) for codimensions c = 0..n.
struct SupportingFunction {
  std::vector<int> values;

  int n() const { return static_cast<int>(values.size()) - 1; }
  int operator()(int codim) const;
  // c - p(c).
  SupportingFunction dual() const;
  bool is_supporting() const;
  bool operator==(const SupportingFunction&) const = default;
};

SupportingFunction make_m(int n);      // floor(c / 2)
SupportingFunction make_m_hat(int n);  // ceil(c / 2)
// p and its dual are both nondecreasing.
bool is_valid_pair(const SupportingFunction& p);

// For every degree i with H^i != 0: p(codim Supp H^i) >= i - k.
bool in_leq(const FreeComplex& c, int k, const SupportingFunction& p, const CharacterTorus* torus = nullptr);
// in_leq(dual(c), -k, dual(p)).
bool in_geq(const FreeComplex& c, int k, const SupportingFunction& p, const CharacterTorus* torus = nullptr);
bool is_m_perverse(const FreeComplex& c, const CharacterTorus* torus = nullptr);

struct SurpriseReport {
  std::optional<int> r;  // least degree with nonzero cohomology
  Codim codim = Codim::infinite();
  bool codim_is_2r = false;
  std::vector<TranslatedSubtorus> components;
  bool equi_certified = false;
};

// Requires in_leq(c, 0, m) and in_leq(dual(c), 0, m); throws
// PreconditionFailed otherwise. Equidimensionality needs a torus.
SurpriseReport surprise_diagnostics(const FreeComplex& c, const CharacterTorus* torus = nullptr);

struct PerversityReport {
  bool leq = false;
  bool geq = false;
  bool heart = false;
  SupportProfile profile;
  std::optional<SurpriseReport> surprise;
};

PerversityReport perversity_report(const FreeComplex& c, const CharacterTorus* torus = nullptr);

}  // namespace charloci

#endif
