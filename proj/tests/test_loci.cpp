#include "charloci/errors.hpp"
#include "charloci/loci.hpp"
#include "charloci/transform.hpp"
#include "doctest.h"

using namespace charloci;

namespace {

Rational q(const char* s) { return parse_rational(s); }

QMatrix scalar(const char* s) {
  QMatrix m(1, 1);
  m(0, 0) = q(s);
  return m;
}

LocalSystemObject pushforward(const CharacterTorus& t2, int shift) {
  LocalSystemObject o;
  o.torus = t2;
  o.h = 1;
  o.embedding = {{1, 0}, {0, 1}, {0, 0}, {0, 0}};
  o.monodromy = {scalar("1"), scalar("1")};
  o.twist = CharacterPoint::trivial(4);
  o.shift = shift;
  return o;
}

}  // namespace

TEST_SUITE("loci") {

TEST_CASE("jump_locus examples") {
  CharacterTorus t(1);
  auto P = [&](const char* s) { return parse_poly(t.ring(), s); };
  auto c = mellin_transform(LocalSystemObject::constant_sheaf(t, 1));
  auto l = jump_locus(c, 0, 1, t);
  Ideal point(t.ring(), {P("x1-1"), P("x2-1")});
  REQUIRE(l.components.size() == 1);
  CHECK(same_radical(l.components[0], point));
  CHECK(jump_locus(c, 0, 3, t).empty());
  CHECK(jump_locus(c, 0, 2, t).components.size() == 1);
  CHECK(jump_locus(c, 5, 1, t).empty());

  auto sky = FreeComplex::free_module(t.ring(), 3);
  auto whole = jump_locus(sky, 0, 3, t);
  REQUIRE(whole.components.size() == 1);
  CHECK(whole.components[0].is_zero());
  CHECK(jump_locus(sky, 0, 4, t).empty());
  CHECK_THROWS_AS(jump_locus(sky, 0, 0, t), Error);
}

TEST_CASE("locus_membership") {
  CharacterTorus t(1);
  auto P = [&](const char* s) { return parse_poly(t.ring(), s); };
  JumpLocus l{0, 1, {Ideal(t.ring(), {P("x1-1"), P("x2-1")})}};
  CHECK(locus_membership(CharacterPoint::trivial(2), l));
  CHECK(!locus_membership(CharacterPoint({q("2"), q("1")}), l));
  JumpLocus all{0, 1, {Ideal::zero(t.ring())}};
  CHECK(locus_membership(CharacterPoint({q("7"), q("-1/9")}), all));
}

TEST_CASE("sampling is deterministic and hits special points") {
  auto a = sample_characters(4, 30, 9, {q("7")});
  auto b = sample_characters(4, 30, 9, {q("7")});
  CHECK(a == b);
  CHECK(a != sample_characters(4, 30, 10, {q("7")}));
  bool trivial = false;
  for (int s = 0; s < 200 && !trivial; ++s)
    for (const auto& p : sample_characters(2, 50, s)) trivial = trivial || p == CharacterPoint::trivial(2);
  CHECK(trivial);
}

TEST_CASE("sampled_oracle_check") {
  CharacterTorus t(1), t2(2);
  auto c = mellin_transform(LocalSystemObject::constant_sheaf(t, 1));
  for (int k = -1; k <= 1; ++k)
    for (int m = 1; m <= 3; ++m) {
      auto r = sampled_oracle_check(c, k, m, t, 50, 3);
      CHECK(r.mismatches.empty());
    }
  auto sky = FreeComplex::free_module(t.ring(), 2);
  auto rs = sampled_oracle_check(sky, 0, 2, t, 20, 1);
  CHECK(rs.mismatches.empty());
  CHECK(rs.members == 20);

  auto p = mellin_transform(pushforward(t2, 1));
  for (int k = -1; k <= 1; ++k) CHECK(sampled_oracle_check(p, k, 1, t2, 50, 5).mismatches.empty());

  // Twisting the complex translates the locus by the inverse character.
  CharacterPoint rho0({q("2"), q("-1")});
  auto tw = twist(c, rho0);
  auto base = jump_locus(c, 1, 1, t);
  auto moved = jump_locus(tw, 1, 1, t);
  for (const auto& rho : sample_characters(2, 50, 4, {q("1/2"), q("-1")}))
    CHECK(locus_membership(rho, moved) == locus_membership(rho * rho0, base));
  CHECK(locus_membership(rho0.inverse(), moved));
}

TEST_CASE("decompose_translated_subtori examples") {
  CharacterTorus t(1);
  auto P = [&](const char* s) { return parse_poly(t.ring(), s); };
  auto r = decompose_translated_subtori(Ideal(t.ring(), {P("x1-1"), P("x2-1")}), t);
  CHECK(r.certified);
  CHECK(r.arithmetic);
  REQUIRE(r.subtori.size() == 1);
  CHECK(r.subtori[0].rank() == 2);
  CHECK(r.subtori[0].contains(CharacterPoint::trivial(2)));
  CHECK(r.subtori[0].values == std::vector<Rational>{1, 1});

  auto half = decompose_translated_subtori(Ideal(t.ring(), {P("2*x1-1")}), t);
  CHECK(half.certified);
  CHECK(!half.arithmetic);
  REQUIRE(half.subtori.size() == 1);
  CHECK(half.subtori[0].basis == IntMatrix{{1, 0}});
  CHECK(half.subtori[0].values == std::vector<Rational>{q("1/2")});

  auto anti = decompose_translated_subtori(Ideal(t.ring(), {P("x1*x2-1")}), t);
  CHECK(anti.certified);
  CHECK(anti.arithmetic);
  REQUIRE(anti.subtori.size() == 1);
  CHECK(anti.subtori[0].basis == IntMatrix{{1, 1}});
  CHECK(anti.subtori[0].values == std::vector<Rational>{1});

  auto whole = decompose_translated_subtori(Ideal::zero(t.ring()), t);
  CHECK(whole.certified);
  REQUIRE(whole.subtori.size() == 1);
  CHECK(whole.subtori[0].dimension() == 2);
  CHECK(decompose_translated_subtori(Ideal::unit(t.ring()), t).subtori.empty());
}

TEST_CASE("decomposition of zero-dimensional non-binomial ideals") {
  CharacterTorus t(1);
  auto P = [&](const char* s) { return parse_poly(t.ring(), s); };
  // Two rational points: (1, 1) and (2, 1), plus a fat point.
  auto r = decompose_translated_subtori(Ideal(t.ring(), {P("x1^2-3*x1+2"), P("x2-1")}), t);
  CHECK(r.certified);
  CHECK(r.method == "points");
  CHECK(r.subtori.size() == 2);
  CHECK(!r.arithmetic);
  auto fat = decompose_translated_subtori(Ideal(t.ring(), {P("x1^2-2*x1+1"), P("x2^2-2*x2+1")}), t);
  CHECK(fat.certified);
  CHECK(fat.arithmetic);
  REQUIRE(fat.subtori.size() == 1);
  CHECK(fat.subtori[0].values == std::vector<Rational>{1, 1});
  // Irrational points: x1^2 = 2 has no rational roots.
  auto irr = decompose_translated_subtori(Ideal(t.ring(), {P("x1^2-2"), P("x2-1")}), t);
  CHECK(irr.certified);
  CHECK(irr.method == "binomial");
  auto cubic = decompose_translated_subtori(Ideal(t.ring(), {P("x1^3-x1-1"), P("x2-1")}), t);
  CHECK(!cubic.certified);
  CHECK(cubic.subtori.empty());
  // Positive-dimensional non-binomial input stays uncertified.
  auto curve = decompose_translated_subtori(Ideal(t.ring(), {P("x1+x2-3")}), t);
  CHECK(!curve.certified);
  CHECK(curve.method == "none");
}

TEST_CASE("verify_decomposition") {
  CharacterTorus t(1);
  auto P = [&](const char* s) { return parse_poly(t.ring(), s); };
  TranslatedSubtorus point{2, {{1, 0}, {0, 1}}, {q("1"), q("1")}};
  CHECK(verify_decomposition(Ideal(t.ring(), {P("x1-1"), P("x2-1")}), {point}, t));
  CHECK(!verify_decomposition(Ideal(t.ring(), {P("x1-1")}), {point}, t));
  TranslatedSubtorus plus{2, {{1, 0}}, {q("1")}};
  TranslatedSubtorus minus{2, {{1, 0}}, {q("-1")}};
  CHECK(verify_decomposition(Ideal(t.ring(), {P("x1^2-1")}), {plus, minus}, t));
  CHECK(!verify_decomposition(Ideal(t.ring(), {P("x1^2-1")}), {plus}, t));
  CHECK(verify_decomposition(Ideal::unit(t.ring()), {}, t));
}

TEST_CASE("monotonicity and decomposition of transform loci") {
  CharacterTorus t(1), t2(2);
  std::vector<FreeComplex> corpus = {
      mellin_transform(LocalSystemObject::constant_sheaf(t, 1)),
      mellin_transform(pushforward(t2, 1)),
      mellin_transform(LocalSystemObject::constant_sheaf(t2, 2)),
  };
  for (const auto& c : corpus) {
    CharacterTorus torus = CharacterTorus::on_ring(c.ring());
    for (int k = c.lo(); k <= c.hi(); ++k) {
      auto l1 = jump_locus(c, k, 1, torus);
      auto l2 = jump_locus(c, k, 2, torus);
      for (const auto& rho : sample_characters(torus.n(), 30, 2))
        if (locus_membership(rho, l2)) CHECK(locus_membership(rho, l1));
      for (const auto& comp : l1.components) {
        auto r = decompose_translated_subtori(comp, torus);
        CHECK(r.certified);
        CHECK(verify_decomposition(comp, r.subtori, torus));
        CHECK(r.arithmetic);
        // Codimension bound for perverse-normalized transforms.
        CHECK(Codim::of(krull_dimension(comp), torus.n()).at_least(2 * std::abs(k)));
      }
    }
  }
}

}  // TEST_SUITE
