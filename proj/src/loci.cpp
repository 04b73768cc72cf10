#include "charloci/loci.hpp"

#include <algorithm>
#include <random>

#include "charloci/errors.hpp"
#include "charloci/parallel.hpp"

namespace charloci {

namespace {

Ideal minors_or_unit(const PolyMatrix& m, int t) {
  if (t <= 0) return Ideal::unit(m.ring());
  return minors_ideal(m, t);
}

// Twisted binomial c1 x^a + c2 x^b as (a - b, -c2/c1).
bool as_binomial(const Poly& p, IntVector& diff, Rational& value) {
  if (p.size() != 2) return false;
  const auto& a = p.terms()[0];
  const auto& b = p.terms()[1];
  diff.assign(a.exp.size(), 0);
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = a.exp[i] - b.exp[i];
  value = -b.coef / a.coef;
  return true;
}

Rational character_value(const std::vector<Rational>& values, const IntVector& coeffs) {
  Rational out(1);
  for (std::size_t j = 0; j < values.size(); ++j)
    if (coeffs[j] != 0) out *= pow(values[j], static_cast<long>(coeffs[j]));
  return out;
}

std::optional<TranslatedSubtorus> binomial_subtorus(const std::vector<Poly>& basis, int n) {
  IntMatrix diffs;
  std::vector<Rational> values;
  for (const auto& p : basis) {
    IntVector d;
    Rational v;
    if (!as_binomial(p, d, v)) return std::nullopt;
    diffs.push_back(d);
    values.push_back(v);
  }
  TranslatedSubtorus out{n, {}, {}};
  if (diffs.empty()) return out;
  SmithForm s = smith_normal_form(diffs);
  IntMatrix rows = int_multiply(s.u, diffs);
  for (std::size_t i = 0; i < s.invariants.size(); ++i) {
    out.basis.push_back(rows[i]);
    out.values.push_back(character_value(values, s.u[i]));
  }
  return out;
}

// Monic minimal polynomial of x_var on R/I for zero-dimensional I, as
// coefficients c_0..c_d, found from linear dependence of normal forms.
std::vector<Rational> eliminant(const Ideal& gb, int var) {
  const RingPtr& ring = gb.ring();
  std::vector<Poly> powers;
  Poly x = Poly::variable(ring, var);
  Poly cur = Poly::constant(ring, 1);
  for (int d = 0;; ++d) {
    powers.push_back(gb.reduce(cur));
    // Coordinates of the normal forms on their joint monomial support.
    std::vector<Exponents> support;
    for (const auto& p : powers)
      for (const auto& t : p.terms()) support.push_back(t.exp);
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    QMatrix m(static_cast<int>(support.size()), static_cast<int>(powers.size()));
    for (std::size_t c = 0; c < powers.size(); ++c)
      for (const auto& t : powers[c].terms()) {
        int r = static_cast<int>(std::lower_bound(support.begin(), support.end(), t.exp) - support.begin());
        m(r, static_cast<int>(c)) = t.coef;
      }
    QMatrix ker = m.kernel();
    if (ker.cols() > 0) {
      std::vector<Rational> coeffs(powers.size());
      const Rational lead = ker(d, 0);
      for (int i = 0; i <= d; ++i) coeffs[i] = ker(i, 0) / lead;
      return coeffs;
    }
    cur = cur * x;
  }
}

std::vector<mpz_class> divisors(mpz_class v) {
  if (v < 0) v = -v;
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= v; ++d)
    if (v % d == 0) {
      out.push_back(d);
      if (d * d != v) out.push_back(v / d);
    }
  return out;
}

// Nonzero rational roots via the rational root theorem.
std::vector<Rational> rational_roots(std::vector<Rational> coeffs) {
  mpz_class den = 1;
  for (const auto& c : coeffs) den = lcm(den, mpz_class(c.get_den()));
  std::vector<mpz_class> ints;
  for (const auto& c : coeffs) ints.push_back(mpz_class(c * den));
  while (!ints.empty() && ints.front() == 0) ints.erase(ints.begin());  // drop the root 0
  std::vector<Rational> roots;
  if (ints.size() < 2) return roots;
  for (const auto& p : divisors(ints.front()))
    for (const auto& q : divisors(ints.back()))
      for (int sign : {1, -1}) {
        Rational r(sign * p, q);
        r.canonicalize();
        Rational acc(0);
        for (auto it = ints.rbegin(); it != ints.rend(); ++it) acc = acc * r + Rational(*it);
        if (acc == 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<TranslatedSubtorus> rational_points(const Ideal& gb, int n) {
  std::vector<std::vector<Rational>> roots;
  for (int i = 0; i < n; ++i) roots.push_back(rational_roots(eliminant(gb, i)));
  std::vector<TranslatedSubtorus> out;
  std::vector<Rational> point(n);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      for (const auto& g : gb.generators())
        if (!is_zero(g.evaluate(point))) return;
      TranslatedSubtorus t{n, {}, point};
      for (int j = 0; j < n; ++j) {
        IntVector e(n, 0);
        e[j] = 1;
        t.basis.push_back(e);
      }
      out.push_back(std::move(t));
      return;
    }
    for (const auto& r : roots[i]) {
      point[i] = r;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

Ideal JumpLocus::flatten(const RingPtr& ring) const {
  Ideal out = Ideal::unit(ring);
  for (const auto& c : components) out = ideal_intersection(out, c);
  return out;
}

JumpLocus jump_locus(const FreeComplex& c, int k, int m, const CharacterTorus& torus) {
  if (m < 1) throw Error(ErrorCode::PreconditionFailed, "jump_locus needs m >= 1");
  if (!same_ring(c.ring(), torus.ring())) throw Error(ErrorCode::TorusMismatch, "complex is not over the torus ring");
  const PolyMatrix f = c.differential(k - 1);
  const PolyMatrix g = c.differential(k);
  const int a = c.rank(k - 1);
  const int b = c.rank(k);
  std::vector<std::optional<Ideal>> slots(a + 1);
  parallel_for(a + 1, [&](int i) {
    Ideal gi = minors_or_unit(g, b - m - i + 1);
    if (gi.is_unit()) return;
    Ideal fi = minors_or_unit(f, i + 1);
    Ideal comp = saturate_at_units(ideal_sum(gi, fi), torus).groebner();
    if (!comp.is_unit()) slots[i] = comp;
  });
  JumpLocus out{k, m, {}};
  for (auto& s : slots) {
    if (!s) continue;
    if (std::any_of(out.components.begin(), out.components.end(), [&](const Ideal& e) { return e == *s; })) continue;
    out.components.push_back(std::move(*s));
  }
  return out;
}

bool locus_membership(const CharacterPoint& rho, const JumpLocus& locus) {
  for (const auto& comp : locus.components) {
    bool vanishes = true;
    for (const auto& g : comp.generators())
      if (!is_zero(g.evaluate(rho.coords))) {
        vanishes = false;
        break;
      }
    if (vanishes) return true;
  }
  return false;
}

std::vector<CharacterPoint> sample_characters(int n, int samples, std::uint64_t seed,
                                              const std::vector<Rational>& extra) {
  std::vector<Rational> palette;
  for (const char* s : {"1", "-1", "2", "-2", "3", "-3", "1/2", "-1/2", "1/3", "-1/3", "5", "-5"})
    palette.push_back(parse_rational(s));
  std::vector<Rational> special = {Rational(1), Rational(-1)};
  for (const auto& e : extra) {
    if (is_zero(e)) continue;
    if (std::find(special.begin(), special.end(), e) == special.end()) special.push_back(e);
    if (std::find(palette.begin(), palette.end(), e) == palette.end()) palette.push_back(e);
  }
  std::mt19937_64 rng(seed);
  std::vector<CharacterPoint> out;
  for (int s = 0; s < samples; ++s) {
    const auto& from = s % 2 == 0 ? palette : special;
    std::uniform_int_distribution<std::size_t> pick(0, from.size() - 1);
    std::vector<Rational> coords;
    for (int i = 0; i < n; ++i) coords.push_back(from[pick(rng)]);
    out.emplace_back(std::move(coords));
  }
  return out;
}

OracleReport sampled_oracle_check(const FreeComplex& c, int k, int m, const CharacterTorus& torus, int samples,
                                  std::uint64_t seed, const std::vector<Rational>& extra) {
  if (samples < 1) throw Error(ErrorCode::PreconditionFailed, "need at least one sample");
  JumpLocus locus = jump_locus(c, k, m, torus);
  OracleReport report{k, m, seed, samples, 0, {}};
  for (const auto& rho : sample_characters(torus.n(), samples, seed, extra)) {
    auto fiber = derived_fiber(c, rho);
    auto it = fiber.find(k);
    bool jumps = it != fiber.end() && it->second >= m;
    bool member = locus_membership(rho, locus);
    if (member) ++report.members;
    if (member != jumps) report.mismatches.push_back(rho);
  }
  return report;
}

bool verify_decomposition(const Ideal& ideal, const std::vector<TranslatedSubtorus>& candidates,
                          const CharacterTorus& torus) {
  Ideal joined = Ideal::unit(torus.ring());
  for (const auto& t : candidates) joined = ideal_intersection(joined, subtorus_ideal(t, torus));
  return same_radical(saturate_at_units(ideal, torus), joined);
}

DecompositionReport decompose_translated_subtori(const Ideal& ideal, const CharacterTorus& torus) {
  DecompositionReport report;
  report.input = ideal;
  Ideal gb = ideal.groebner();
  const int n = torus.n();
  if (gb.is_unit()) {
    report.certified = true;
    report.arithmetic = true;
    report.method = "empty";
    return report;
  }
  if (auto t = binomial_subtorus(gb.generators(), n)) {
    report.subtori = {*t};
    report.method = "binomial";
  } else if (krull_dimension(gb) == 0) {
    report.subtori = rational_points(gb, n);
    report.method = "points";
  } else {
    report.method = "none";
    return report;
  }
  report.certified = verify_decomposition(ideal, report.subtori, torus);
  if (!report.certified) {
    report.subtori.clear();
    return report;
  }
  report.arithmetic = std::all_of(report.subtori.begin(), report.subtori.end(),
                                  [](const TranslatedSubtorus& t) { return torsion_check(t, 2); });
  return report;
}

}  // namespace charloci
