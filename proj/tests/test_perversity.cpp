#include "charloci/errors.hpp"
#include "charloci/perversity.hpp"
#include "charloci/transform.hpp"
#include "doctest.h"

using namespace charloci;

namespace {

QMatrix one() { return QMatrix::identity(1); }

LocalSystemObject pushforward(const CharacterTorus& t2, int shift) {
  LocalSystemObject o;
  o.torus = t2;
  o.h = 1;
  o.embedding = {{1, 0}, {0, 1}, {0, 0}, {0, 0}};
  o.monodromy = {one(), one()};
  o.twist = CharacterPoint::trivial(4);
  o.shift = shift;
  return o;
}

bool standard_range(const FreeComplex& c, int lo, int hi) {
  for (const auto& e : support_profile(c))
    if (!e.codim.is_infinite() && (e.degree < lo || e.degree > hi)) return false;
  return true;
}

}  // namespace

TEST_SUITE("perversity") {

TEST_CASE("supporting functions") {
  CHECK(make_m(4).values == std::vector<int>{0, 0, 1, 1, 2});
  CHECK(make_m_hat(4).values == std::vector<int>{0, 1, 1, 2, 2});
  CHECK(make_m(0).values == std::vector<int>{0});
  CHECK(make_m_hat(0).values == std::vector<int>{0});
  CHECK(make_m(5).dual() == make_m_hat(5));
  CHECK(is_valid_pair(make_m(4)));
  CHECK(is_valid_pair(make_m_hat(3)));
  CHECK(is_valid_pair(SupportingFunction{{0, 0, 0, 0}}));
  CHECK(!is_valid_pair(SupportingFunction{{0, 2, 2}}));
  CHECK(!is_valid_pair(SupportingFunction{{1, 0}}));
}

TEST_CASE("in_leq and in_geq examples") {
  CharacterTorus t(1);
  auto c = mellin_transform(LocalSystemObject::constant_sheaf(t, 1));
  auto m = make_m(2);
  CHECK(in_leq(c, 0, m, &t));
  CHECK(!in_leq(shift(c, -1), 0, m, &t));
  CHECK(in_leq(FreeComplex::zero(t.ring()), -3, m));
  CHECK(in_geq(c, 0, m, &t));
  CHECK(!in_geq(FreeComplex::free_module(t.ring(), 1, -1), 0, m));
  CHECK(in_geq(FreeComplex::zero(t.ring()), 5, m));
  CHECK_THROWS_AS(in_leq(c, 0, SupportingFunction{{0, 2, 2}}), Error);
}

TEST_CASE("is_m_perverse") {
  CharacterTorus t(1), t2(2);
  auto c = mellin_transform(LocalSystemObject::constant_sheaf(t, 1));
  CHECK(is_m_perverse(c, &t));
  CHECK(!is_m_perverse(shift(c, 1), &t));
  CHECK(!is_m_perverse(shift(c, -1), &t));
  CHECK(is_m_perverse(FreeComplex::free_module(t.ring(), 2), &t));
  CHECK(is_m_perverse(mellin_transform(pushforward(t2, 1)), &t2));
  CHECK(is_m_perverse(mellin_transform(LocalSystemObject::constant_sheaf(t2, 2)), &t2));
  // Off the perverse normalization.
  CHECK(!is_m_perverse(mellin_transform(pushforward(t2, 0)), &t2));
}

TEST_CASE("surprise_diagnostics") {
  CharacterTorus t(1), t2(2);
  auto c = surprise_diagnostics(mellin_transform(LocalSystemObject::constant_sheaf(t, 1)), &t);
  CHECK(c.r == 1);
  CHECK(c.codim == Codim::finite(2));
  CHECK(c.codim_is_2r);
  CHECK(c.equi_certified);

  auto p = surprise_diagnostics(mellin_transform(pushforward(t2, 1)), &t2);
  CHECK(p.r == 1);
  CHECK(p.codim == Codim::finite(2));
  CHECK(p.equi_certified);
  CHECK(p.components.size() == 1);

  auto s = surprise_diagnostics(FreeComplex::free_module(t.ring(), 3), &t);
  CHECK(s.r == 0);
  CHECK(s.codim == Codim::finite(0));
  CHECK(s.equi_certified);

  auto z = surprise_diagnostics(FreeComplex::zero(t.ring()), &t);
  CHECK(!z.r);

  CHECK_THROWS_AS(surprise_diagnostics(shift(mellin_transform(LocalSystemObject::constant_sheaf(t, 1)), -1), &t),
                  Error);
}

TEST_CASE("standard t-structure and heart shape") {
  CharacterTorus t(1), t2(2);
  SupportingFunction zero{{0, 0, 0}};
  std::vector<FreeComplex> corpus = {
      mellin_transform(LocalSystemObject::constant_sheaf(t, 1)),
      mellin_transform(LocalSystemObject::constant_sheaf(t, 0)),
      FreeComplex::free_module(t.ring(), 2, 1),
      direct_sum(FreeComplex::free_module(t.ring(), 1, -1), mellin_transform(LocalSystemObject::constant_sheaf(t, 1))),
  };
  for (const auto& c : corpus) {
    for (int k = -2; k <= 2; ++k) {
      CHECK(in_leq(c, k, zero) == standard_range(c, -100, k));
      if (in_geq(c, 0, make_m(2), &t)) CHECK(standard_range(c, 0, 100));
    }
    auto r = perversity_report(c, &t);
    CHECK(r.heart == is_m_perverse(c, &t));
    if (r.heart) {
      for (const auto& e : r.profile) CHECK(e.codim.at_least(2 * e.degree));
      CHECK(standard_range(c, 0, 1));
    }
  }
  auto r2 = perversity_report(mellin_transform(pushforward(t2, 1)), &t2);
  CHECK(r2.heart);
  REQUIRE(r2.surprise);
  CHECK(r2.surprise->r == 1);
}

}  // TEST_SUITE
