#ifndef CHARLOCI_GROEBNER_HPP
#define CHARLOCI_GROEBNER_HPP

#include <vector>

#include "charloci/poly.hpp"

namespace charloci {

// A term c * x^exp * e_pos of the free module R^rank.
struct ModTerm {
  int pos;
  Exponents exp;
  Rational coef;
};

// Element of a free module, terms sorted decreasingly for the
// position-over-term order in which a smaller position index is larger.
// Rank-1 vectors are just polynomials.
using ModVec = std::vector<ModTerm>;

int compare_terms(const PolyRing& ring, const ModTerm& a, const ModTerm& b);

ModVec to_modvec(const std::vector<Poly>& column);
ModVec to_modvec(const Poly& p);
std::vector<Poly> from_modvec(const RingPtr& ring, int rank, const ModVec& v);
Poly poly_from_modvec(const RingPtr& ring, const ModVec& v);

ModVec modvec_sub(const PolyRing& ring, const ModVec& a, const ModVec& b);
ModVec modvec_monic(const ModVec& v);

struct GroebnerStats {
  long pairs_considered = 0;
  long pairs_skipped = 0;
  long reductions_to_zero = 0;
};

// Reduced Groebner basis (monic, inter-reduced) of the submodule generated by
// `gens`, sorted by increasing leading term. Pairs are processed by the
// normal strategy: smallest total degree of the lcm, then smallest lcm in the
// monomial order, then index order. The output depends only on the input
// sequence.
std::vector<ModVec> reduced_groebner_basis(const RingPtr& ring, std::vector<ModVec> gens,
                                           GroebnerStats* stats = nullptr);

// Remainder of full division of v by `basis` (elements need not be monic).
ModVec normal_form(const PolyRing& ring, const ModVec& v, const std::vector<ModVec>& basis);

ModVec s_vector(const PolyRing& ring, const ModVec& f, const ModVec& g);

// Buchberger's criterion checked directly: every S-vector of two basis
// elements with equal leading position reduces to zero.
bool satisfies_buchberger_criterion(const PolyRing& ring, const std::vector<ModVec>& basis);

}  // namespace charloci

#endif
