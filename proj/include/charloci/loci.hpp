#ifndef CHARLOCI_LOCI_HPP
#define CHARLOCI_LOCI_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "charloci/complex.hpp"
#include "charloci/torus.hpp"

namespace charloci {

// {rho : dim H^k(C (x) k(rho)) >= m} as a union of component ideals.
struct JumpLocus {
  int k = 0;
  int m = 1;
  std::vector<Ideal> components;

  bool empty() const { return components.empty(); }
  // Intersection of the component ideals (unit ideal when empty).
  Ideal flatten(const RingPtr& ring) const;
};

// Components i = 0..a: I_{b-m-i+1}(d^k) + I_{i+1}(d^{k-1}), saturated at units,
// unit ideals and duplicates dropped.
JumpLocus jump_locus(const FreeComplex& c, int k, int m, const CharacterTorus& torus);
bool locus_membership(const CharacterPoint& rho, const JumpLocus& locus);

struct OracleReport {
  int k = 0;
  int m = 1;
  std::uint64_t seed = 0;
  int samples = 0;
  int members = 0;
  std::vector<CharacterPoint> mismatches;
};

// Coordinates for sampling: {+-1, +-2, +-3, +-1/2, +-1/3, +-5} plus extras.
// Odd-numbered samples draw from {1, -1} and the extras only, so special
// characters are hit deterministically.
std::vector<CharacterPoint> sample_characters(int n, int samples, std::uint64_t seed,
                                              const std::vector<Rational>& extra = {});

OracleReport sampled_oracle_check(const FreeComplex& c, int k, int m, const CharacterTorus& torus, int samples,
                                  std::uint64_t seed, const std::vector<Rational>& extra = {});

struct DecompositionReport {
  Ideal input;
  std::vector<TranslatedSubtorus> subtori;
  bool certified = false;
  bool arithmetic = false;
  // "empty", "binomial", "points" or "none".
  std::string method;
};

DecompositionReport decompose_translated_subtori(const Ideal& ideal, const CharacterTorus& torus);
// sqrt(I : units) == sqrt(intersection of the candidate ideals).
bool verify_decomposition(const Ideal& ideal, const std::vector<TranslatedSubtorus>& candidates,
                          const CharacterTorus& torus);

}  // namespace charloci

#endif
