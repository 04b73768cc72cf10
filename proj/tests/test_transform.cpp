#include <random>

#include "charloci/errors.hpp"
#include "charloci/transform.hpp"
#include "doctest.h"

using namespace charloci;

namespace {

Rational q(const char* s) { return parse_rational(s); }

QMatrix qm(std::initializer_list<std::initializer_list<const char*>> rows) {
  QMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.begin()->size()));
  int r = 0;
  for (auto row : rows) {
    int c = 0;
    for (const char* s : row) m(r, c++) = q(s);
    ++r;
  }
  return m;
}

LocalSystemObject rank_one(const CharacterTorus& t, std::vector<const char*> mono, int shift) {
  LocalSystemObject o = LocalSystemObject::constant_sheaf(t, shift);
  for (std::size_t j = 0; j < mono.size(); ++j) o.monodromy[j] = qm({{mono[j]}});
  return o;
}

// g = 2 torus, h = 1 subtorus on the first two coordinates.
LocalSystemObject pushforward(const CharacterTorus& t2, int shift) {
  LocalSystemObject o;
  o.id = "pushforward";
  o.torus = t2;
  o.h = 1;
  o.embedding = {{1, 0}, {0, 1}, {0, 0}, {0, 0}};
  o.monodromy = {qm({{"1"}}), qm({{"1"}})};
  o.twist = CharacterPoint::trivial(4);
  o.shift = shift;
  return o;
}

// Unipotent rank-2 local system on g = 1.
LocalSystemObject unipotent(const CharacterTorus& t) {
  LocalSystemObject o = LocalSystemObject::constant_sheaf(t, 1);
  o.rank = 2;
  o.monodromy = {qm({{"1", "1"}, {"0", "1"}}), qm({{"1", "0"}, {"0", "1"}})};
  return o;
}

CharacterPoint sample_point(std::mt19937_64& rng, int n, const std::vector<Rational>& extra) {
  std::vector<Rational> palette = {q("1"), q("-1"), q("2"), q("-2"), q("3"), q("1/2"), q("-1/3"), q("5")};
  palette.insert(palette.end(), extra.begin(), extra.end());
  std::uniform_int_distribution<std::size_t> pick(0, palette.size() - 1);
  std::vector<Rational> c;
  for (int i = 0; i < n; ++i) c.push_back(palette[pick(rng)]);
  return CharacterPoint(c);
}

}  // namespace

TEST_SUITE("transform") {

TEST_CASE("mellin_transform examples") {
  CharacterTorus t(1);
  auto P = [&](const char* s) { return parse_poly(t.ring(), s); };
  auto c = mellin_transform(LocalSystemObject::constant_sheaf(t, 1));
  CHECK(c == koszul_complex({P("x1-1"), P("x2-1")}, -1));
  CHECK(derived_fiber(c, CharacterPoint::trivial(2)) == std::map<int, int>{{-1, 1}, {0, 2}, {1, 1}});

  auto sky = mellin_transform(LocalSystemObject::skyscraper(t, 3));
  CHECK(sky == FreeComplex::free_module(t.ring(), 3));

  auto tw = mellin_transform(rank_one(t, {"2", "5"}, 0));
  CHECK(tw == koszul_complex({P("2*x1-1"), P("5*x2-1")}, 0));
  CHECK(derived_fiber(tw, CharacterPoint({q("1/2"), q("1/5")})) == std::map<int, int>{{0, 1}, {1, 2}, {2, 1}});
  CHECK(derived_fiber(tw, CharacterPoint::trivial(2)) == std::map<int, int>{{0, 0}, {1, 0}, {2, 0}});
}

TEST_CASE("negative embedding exponents are cleared by a unit") {
  CharacterTorus t(1);
  auto P = [&](const char* s) { return parse_poly(t.ring(), s); };
  LocalSystemObject o = LocalSystemObject::constant_sheaf(t, 1);
  o.embedding = {{1, 0}, {-1, 1}};
  o.monodromy = {qm({{"3"}}), qm({{"1"}})};
  auto c = mellin_transform(o);
  CHECK(c == koszul_complex({P("3*x1-x2"), P("x2-1")}, -1));
}

TEST_CASE("invalid objects") {
  CharacterTorus t(1);
  auto o = unipotent(t);
  o.monodromy[1] = qm({{"1", "0"}, {"1", "1"}});
  CHECK_THROWS_AS(mellin_transform(o), Error);
  try {
    o.validate();
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonCommuting);
  }
  auto s = rank_one(t, {"0", "1"}, 0);
  try {
    s.validate();
    FAIL("singular monodromy accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonInvertible);
  }
  auto dep = LocalSystemObject::constant_sheaf(t, 1);
  dep.embedding = {{1, 2}, {1, 2}};
  CHECK_THROWS_AS(dep.validate(), Error);
}

TEST_CASE("twisted_cohomology examples") {
  CharacterTorus t(1);
  auto c = LocalSystemObject::constant_sheaf(t, 1);
  CHECK(twisted_cohomology(c, CharacterPoint::trivial(2)) == std::map<int, int>{{-1, 1}, {0, 2}, {1, 1}});
  CHECK(twisted_cohomology(c, CharacterPoint({q("3"), q("1")})) == std::map<int, int>{{-1, 0}, {0, 0}, {1, 0}});
  auto sky = LocalSystemObject::skyscraper(t, 4);
  CHECK(twisted_cohomology(sky, CharacterPoint({q("2"), q("-1/3")})) == std::map<int, int>{{0, 4}});
  // Unipotent Jordan block: H^0 of a single Jordan block is one-dimensional.
  CHECK(twisted_cohomology(unipotent(t), CharacterPoint::trivial(2)) == std::map<int, int>{{-1, 1}, {0, 2}, {1, 1}});
}

TEST_CASE("verdier_dual examples") {
  CharacterTorus t(1);
  auto c = LocalSystemObject::constant_sheaf(t, 1);
  auto dc = verdier_dual(c);
  CHECK(dc.shift == 1);
  CHECK(dc.monodromy == c.monodromy);
  auto sky = verdier_dual(LocalSystemObject::skyscraper(t, 2));
  CHECK(sky.shift == 0);
  CHECK(sky.rank == 2);
  auto r = verdier_dual(rank_one(t, {"2", "5"}, 1));
  CHECK(r.monodromy[0] == qm({{"1/2"}}));
  CHECK(r.monodromy[1] == qm({{"1/5"}}));
  CHECK(r.shift == 1);
}

TEST_CASE("transform_sum") {
  CharacterTorus t(1);
  ElementaryComplex two{t, {LocalSystemObject::skyscraper(t, 1), LocalSystemObject::skyscraper(t, 1)}};
  CHECK(transform_sum(two) == FreeComplex::free_module(t.ring(), 2));
  CHECK(transform_sum(ElementaryComplex{t, {}}).is_zero());
  ElementaryComplex mixed{t, {LocalSystemObject::constant_sheaf(t, 1), LocalSystemObject::skyscraper(t, 2, -1)}};
  auto s = transform_sum(mixed);
  CHECK(euler_characteristic(s) ==
        euler_characteristic(mellin_transform(mixed.summands[0])) + euler_characteristic(mellin_transform(mixed.summands[1])));
  CharacterTorus other(2);
  ElementaryComplex bad{t, {LocalSystemObject::skyscraper(other, 1)}};
  CHECK_THROWS_AS(transform_sum(bad), Error);
}

TEST_CASE("base change, Verdier and Euler properties") {
  CharacterTorus t1(1), t2(2);
  std::vector<LocalSystemObject> corpus = {
      LocalSystemObject::constant_sheaf(t1, 1),
      LocalSystemObject::constant_sheaf(t2, 2),
      rank_one(t1, {"-1", "1"}, 1),
      rank_one(t1, {"2", "1/3"}, 0),
      unipotent(t1),
      pushforward(t2, 1),
      LocalSystemObject::skyscraper(t1, 3),
  };
  corpus[2].twist = CharacterPoint({q("1"), q("-1")});
  std::mt19937_64 rng(11);
  for (const auto& obj : corpus) {
    auto c = mellin_transform(obj);
    std::vector<Rational> extra;
    for (const auto& m : obj.monodromy) extra.push_back(Rational(1) / m(0, 0));
    for (int trial = 0; trial < 20; ++trial) {
      auto rho = sample_point(rng, obj.torus.n(), extra);
      CHECK(derived_fiber(c, rho) == twisted_cohomology(obj, rho));
      auto dual_dims = twisted_cohomology(verdier_dual(obj), rho.inverse());
      for (auto [k, dim] : twisted_cohomology(obj, rho)) CHECK(dual_dims[-k] == dim);
    }
    CHECK(euler_characteristic(c) == (obj.h == 0 ? obj.rank : 0));
  }
}

}  // TEST_SUITE
