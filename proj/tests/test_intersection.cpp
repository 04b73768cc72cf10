#include "charloci/errors.hpp"
#include "charloci/intersection.hpp"
#include "charloci/perversity.hpp"
#include "doctest.h"

using namespace charloci;

namespace {

// coker(K_3 -> K_2) in the Koszul complex on the variables: the second
// syzygy module of the residue field.
FPModule second_syzygy(int n) {
  auto R = PolyRing::standard(n);
  std::vector<Poly> vars;
  for (int i = 0; i < n; ++i) vars.push_back(Poly::variable(R, i));
  auto k = koszul_complex(vars, 0);
  // Cochain degree p holds Lambda^p; the chain map K_3 -> K_2 is the
  // transpose of d leaving degree 2.
  PolyMatrix rel = k.differential(2).transpose();
  return FPModule(R, rel.rows(), rel);
}

}  // namespace

TEST_SUITE("intersection") {

TEST_CASE("ell") {
  CHECK(ell(0) == 1);
  CHECK(ell(1) == 1);
  CHECK(ell(3) == 1);
  CHECK(ell(4) == 3);
  CHECK(ell(7) == 3);
  CHECK(ell(8) == 5);
  for (int n = 0; n < 40; ++n) {
    int l = ell(n);
    CHECK(l % 2 == 1);
    CHECK(2 * l + 1 >= n);
    CHECK((l == 1 || 2 * (l - 2) + 1 < n));
  }
}

TEST_CASE("reflexivity") {
  auto R2 = PolyRing::standard(2);
  CHECK(is_reflexive(FPModule::free(R2, 3)));
  FPModule torsion = FPModule::quotient(Ideal(R2, {Poly::variable(R2, 0)}));
  CHECK(!is_reflexive(torsion));
  CHECK(reflexive_hull(torsion).num_generators() == 0);
  // The maximal ideal (x1, x2) is torsion free but not reflexive; its hull is R.
  PolyMatrix rel = PolyMatrix::from_rows(R2, {{parse_poly(R2, "x2")}, {parse_poly(R2, "-x1")}});
  FPModule maximal(R2, 2, rel);
  CHECK(!is_reflexive(maximal));
  CHECK(isomorphic(reflexive_hull(maximal), FPModule::free(R2, 1)).isomorphic);
  FPModule syz = second_syzygy(4);
  CHECK(syz.num_generators() == 6);
  CHECK(is_reflexive(syz));
  CHECK(isomorphic(reflexive_hull(syz), syz).isomorphic);
}

TEST_CASE("intersection complex of a free module") {
  auto R2 = PolyRing::standard(2);
  ICInput inp{FPModule::free(R2, 2), 2, false};
  auto ic = intersection_complex(inp);
  CHECK(ic == FreeComplex::free_module(R2, 2));
  auto rep = ic_verify(inp);
  CHECK(rep.passed());
  CHECK(rep.codim_bounds.empty());
}

TEST_CASE("torsion input is rejected") {
  auto R2 = PolyRing::standard(2);
  ICInput inp{FPModule::quotient(Ideal(R2, {Poly::variable(R2, 0)})), 2, false};
  try {
    intersection_complex(inp);
    FAIL("torsion module accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotReflexive);
  }
  auto rep = ic_verify(inp);
  CHECK(!rep.reflexive);
  CHECK(!rep.passed());
  CHECK(rep.error.find("NotReflexive") != std::string::npos);
}

TEST_CASE("second syzygy of the residue field in four variables") {
  FPModule m = second_syzygy(4);
  ICInput inp{m, 4, false};
  auto rep = ic_verify(inp);
  CHECK(rep.reflexive);
  CHECK(rep.h0_matches);
  CHECK(rep.m_perverse);
  CHECK(rep.dual_h0_matches);
  CHECK(rep.stable_under_ell_increase);
  REQUIRE(rep.complex);
  auto prof = support_profile(*rep.complex);
  bool origin = false;
  for (const auto& b : rep.codim_bounds) {
    CHECK(b.ok());
    if (!b.codim.is_infinite()) origin = origin || b.codim == Codim::finite(4);
  }
  CHECK(origin);
  // H^1 of the IC is the residue field and nothing sits above it.
  auto R = m.ring();
  std::vector<Poly> vars;
  for (int i = 0; i < 4; ++i) vars.push_back(Poly::variable(R, i));
  CHECK(isomorphic(cohomology_module(*rep.complex, 1), FPModule::quotient(Ideal(R, vars))).isomorphic);
  for (int d = 2; d <= rep.complex->hi(); ++d) CHECK(cohomology_module(*rep.complex, d).num_generators() == 0);
  CHECK(rep.complex->lo() >= -4);
  for (const auto& b : rep.dual_codim_bounds) CHECK(b.ok());
  CHECK(rep.passed());

  // Stages alternate once 2j - 1 >= n, and each D F_j is bounded above.
  auto stages = intersection_stages(inp, 5);
  CHECK(same_cohomology(stages[5], stages[3]));
  CHECK(same_cohomology(stages[4], stages[2]));
  const int b = (4 + 1) / 2 - 1;
  for (int j = 0; j < static_cast<int>(stages.size()); ++j) {
    int bound = std::max(b, 4 - j - 1);
    for (const auto& e : support_profile(dual(stages[j])))
      if (e.degree > bound) CHECK(e.codim.is_infinite());
  }
}

}  // TEST_SUITE
