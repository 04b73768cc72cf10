// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "charloci/groebner.hpp"
#include "charloci/intersection.hpp"
#include "charloci/io.hpp"
#include "test_support.hpp"

using namespace charloci;

namespace {

// Pinned parameters. All comparisons are exact; there is no numeric tolerance.
constexpr int kSamples = 50;
constexpr std::uint64_t kSeed = 20240611;
constexpr int kMaxM = 3;
constexpr int kExchangeCorpus = 20;
constexpr int kRandomIdeals = 30;
constexpr int kRandomModules = 12;

struct Example {
  std::string name;
  ObjectFile file;
};

struct Outcome {
  bool passed = true;
  std::vector<std::string> failures;
  std::string summary;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      passed = false;
      if (failures.size() < 4) failures.push_back(what);
    }
  }
};

std::vector<std::filesystem::path> data_files() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(CHARLOCI_DATA_DIR))
    if (e.path().extension() == ".json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Example> object_examples() {
  std::vector<Example> out;
  for (const auto& p : data_files()) {
    Json j = read_json_file(p.string());
    if (document_kind(j) == DocumentKind::Objects) out.push_back({p.stem().string(), object_file_from_json(j)});
  }
  return out;
}

std::vector<std::pair<std::string, ICFile>> ic_examples() {
  std::vector<std::pair<std::string, ICFile>> out;
  for (const auto& p : data_files()) {
    Json j = read_json_file(p.string());
    if (document_kind(j) == DocumentKind::IC) out.emplace_back(p.stem().string(), ic_file_from_json(j));
  }
  return out;
}

std::map<int, int> nonzero(const std::map<int, int>& dims) {
  std::map<int, int> out;
  for (auto [k, d] : dims)
    if (d != 0) out[k] = d;
  return out;
}

std::string point_text(const CharacterPoint& p) {
  std::string s = "(";
  for (int i = 0; i < p.size(); ++i) s += (i ? "," : "") + to_string(p.coords[i]);
  return s + ")";
}

bool is_normalized(const Example& e) { return e.file.expect.value("normalized", false); }
bool is_perverse(const Example& e) { return e.file.expect.value("perverse", false); }

bool all_objects(const Example& e, const std::function<bool(const LocalSystemObject&)>& pred) {
  return std::all_of(e.file.objects.begin(), e.file.objects.end(), pred);
}

// Read off the data: every twist coordinate and monodromy scalar is +-1.
bool plus_minus_one_data(const Example& e) {
  auto pm1 = [](const Rational& q) { return q == 1 || q == -1; };
  return all_objects(e, [&](const LocalSystemObject& o) {
    if (!std::all_of(o.twist.coords.begin(), o.twist.coords.end(), pm1)) return false;
    for (const auto& m : o.monodromy)
      if (m.rows() != 1 || !pm1(m(0, 0))) return false;
    return true;
  });
}

Codim component_codim(const Ideal& comp, const CharacterTorus& t) {
  return Codim::of(krull_dimension(comp), t.n());
}

// ---------------------------------------------------------------- 1

Outcome base_change(const std::vector<Example>& examples) {
  Outcome out;
  int checked = 0;
  for (const auto& e : examples) {
    FreeComplex c = e.file.complex();
    for (const auto& rho : sample_characters(e.file.torus.n(), kSamples, kSeed, e.file.special_values())) {
      ++checked;
      out.require(nonzero(derived_fiber(c, rho)) == nonzero(e.file.oracle_fiber(rho)),
                  e.name + " at " + point_text(rho));
    }
  }
  out.summary = std::to_string(examples.size()) + " examples, " + std::to_string(checked) + " characters";
  return out;
}

// ---------------------------------------------------------------- 2

Outcome loci_soundness(const std::vector<Example>& examples) {
  Outcome out;
  int pairs = 0, members = 0;
  for (const auto& e : examples) {
    FreeComplex c = e.file.complex();
    for (int k = c.lo() - 1; k <= c.hi() + 1; ++k)
      for (int m = 1; m <= kMaxM; ++m) {
        auto r = sampled_oracle_check(c, k, m, e.file.torus, kSamples, kSeed + k * 7 + m, e.file.special_values());
        ++pairs;
        members += r.members;
        out.require(r.mismatches.empty() && r.samples == kSamples,
                    e.name + " k=" + std::to_string(k) + " m=" + std::to_string(m) + ": " +
                        std::to_string(r.mismatches.size()) + " mismatches");
      }
  }
  out.summary = std::to_string(pairs) + " (k, m) pairs, " + std::to_string(members) + " sampled members";
  return out;
}

// ---------------------------------------------------------------- 3

Outcome structure(const std::vector<Example>& examples) {
  Outcome out;
  int certified = 0, used = 0, arithmetic_true = 0;
  for (const auto& e : examples) {
    bool rank_one = all_objects(e, [](const LocalSystemObject& o) { return o.rank == 1; });
    if (e.file.cone_multiplier || !rank_one) continue;
    ++used;
    FreeComplex c = e.file.complex();
    bool arithmetic = true;
    int comps = 0;
    for (int k = c.lo(); k <= c.hi(); ++k) {
      auto locus = jump_locus(c, k, 1, e.file.torus);
      for (const auto& comp : locus.components) {
        ++comps;
        auto dec = decompose_translated_subtori(comp, e.file.torus);
        bool ok = dec.certified && verify_decomposition(comp, dec.subtori, e.file.torus);
        out.require(ok, e.name + " k=" + std::to_string(k) + " (" + dec.method + ")");
        if (ok) ++certified;
        arithmetic = arithmetic && dec.arithmetic;
      }
    }
    out.require(comps > 0, e.name + ": no nonempty S_1^k");
    bool expected = plus_minus_one_data(e);
    out.require(arithmetic == expected, e.name + ": arithmetic flag " + (arithmetic ? "true" : "false"));
    arithmetic_true += arithmetic;
  }
  out.summary = std::to_string(used) + " examples, " + std::to_string(certified) + " certified components, " +
                std::to_string(arithmetic_true) + " arithmetic";
  return out;
}

// ---------------------------------------------------------------- 4

Outcome codim_bounds(const std::vector<Example>& examples) {
  Outcome out;
  int used = 0;
  bool equality_seen = false;
  for (const auto& e : examples) {
    if (!is_normalized(e)) continue;
    ++used;
    const CharacterTorus& t = e.file.torus;
    FreeComplex c = e.file.complex();
    auto m = make_m(t.n());
    out.require(is_m_perverse(c, &t), e.name + ": not m-perverse");
    out.require(!in_geq(shift(c, 1), 0, m, &t), e.name + ": shift +1 stays in geq");
    out.require(!in_leq(shift(c, -1), 0, m, &t), e.name + ": shift -1 stays in leq");
    bool pushforward = e.file.objects.size() == 1 && e.file.objects[0].h > 0 && e.file.objects[0].h < t.g();
    for (int k = c.lo(); k <= c.hi(); ++k) {
      std::optional<int> least;
      for (const auto& comp : jump_locus(c, k, 1, t).components) {
        auto dec = decompose_translated_subtori(comp, t);
        out.require(dec.certified, e.name + " k=" + std::to_string(k) + ": uncertified component");
        Codim cd = component_codim(comp, t);
        out.require(cd.at_least(2 * std::abs(k)), e.name + " k=" + std::to_string(k) + ": codim below |2k|");
        if (!cd.is_infinite()) least = least ? std::min(*least, cd.value()) : cd.value();
      }
      int h = e.file.objects[0].h;
      if (pushforward && std::abs(k) == h) {
        bool eq = least && *least == 2 * h;
        out.require(eq, e.name + ": codim at k=" + std::to_string(k) + " is not 2h");
        equality_seen = equality_seen || eq;
      }
    }
  }
  out.require(equality_seen, "no pushforward example attains equality");
  out.summary = std::to_string(used) + " normalized examples; equality at |k| = h on the pushforward";
  return out;
}

// ---------------------------------------------------------------- 5

Outcome generic_vanishing(const std::vector<Example>& examples) {
  Outcome out;
  int perverse = 0, zero_chi = 0, skyscrapers = 0;
  for (const auto& e : examples) {
    if (!is_perverse(e)) continue;
    ++perverse;
    const CharacterTorus& t = e.file.torus;
    FreeComplex c = e.file.complex();
    for (int k = c.lo() - 1; k <= c.hi() + 1; ++k) {
      if (k == 0) continue;
      for (const auto& comp : jump_locus(c, k, 1, t).components)
        out.require(component_codim(comp, t).at_least(1), e.name + ": S_1^" + std::to_string(k) + " not proper");
    }
    long chi = euler_characteristic(c);
    out.require(chi >= 0, e.name + ": chi < 0");
    if (!e.file.cone_multiplier && all_objects(e, [](const LocalSystemObject& o) { return o.h > 0; })) {
      ++zero_chi;
      out.require(chi == 0, e.name + ": chi = " + std::to_string(chi) + ", expected 0");
    }
    if (!e.file.cone_multiplier && all_objects(e, [](const LocalSystemObject& o) { return o.h == 0; })) {
      ++skyscrapers;
      long rank = 0;
      for (const auto& o : e.file.objects) rank += o.rank;
      out.require(chi == rank, e.name + ": chi = " + std::to_string(chi) + ", expected " + std::to_string(rank));
    }
  }
  out.require(zero_chi > 0 && skyscrapers > 0, "corpus lacks a subtorus or skyscraper example");
  out.summary = std::to_string(perverse) + " perverse examples, " + std::to_string(zero_chi) + " with chi = 0, " +
                std::to_string(skyscrapers) + " skyscrapers";
  return out;
}

// ---------------------------------------------------------------- 6

Outcome surprise(const std::vector<Example>& examples) {
  Outcome out;
  auto it = std::find_if(examples.begin(), examples.end(), [](const Example& e) {
    return e.file.torus.g() == 2 && e.file.objects.size() == 1 && e.file.objects[0].h == 1;
  });
  out.require(it != examples.end(), "no g=2 pushforward example");
  if (it == examples.end()) return out;
  auto s = surprise_diagnostics(it->file.complex(), &it->file.torus);
  out.require(s.r && *s.r == 1, "r differs from 1");
  out.require(s.codim == Codim::finite(2) && s.codim_is_2r, "codim is not exactly 2");
  out.require(s.components.size() == 1 && s.equi_certified, "not a single certified subtorus");
  out.summary = it->name + ": r = " + (s.r ? std::to_string(*s.r) : "none") + ", codim " +
                (s.codim.is_infinite() ? "inf" : std::to_string(s.codim.value())) + ", " +
                std::to_string(s.components.size()) + " component(s)";
  return out;
}

// ---------------------------------------------------------------- 7
//
// A random expression over transforms. Each node yields the complex c and a
// second complex e built without calling dual(): objects go through the
// sheaf-side dual and coordinate inversion, and the constructors are
// dualized by the usual rules.

struct Pair {
  FreeComplex c;
  FreeComplex e;
  std::string text;
};

FreeComplex scalar_cone(const FreeComplex& a, const Poly& p) {
  ChainMap f{a, a, {}};
  for (int d = a.lo(); d <= a.hi(); ++d) f.components[d] = PolyMatrix::identity(a.ring(), a.rank(d)).scaled(p);
  return cone(f);
}

Pair leaf(const LocalSystemObject& o, const std::string& name) {
  return {mellin_transform(o), invert_coords(mellin_transform(verdier_dual(o))), name};
}

Pair random_pair(const std::vector<std::pair<std::string, LocalSystemObject>>& pool, const CharacterTorus& t,
                 std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(pool.size()) - 1);
  std::uniform_int_distribution<int> op(0, depth > 0 ? 3 : 0);
  switch (op(rng)) {
    case 0: {
      const auto& [name, o] = pool[pick(rng)];
      return leaf(o, name);
    }
    case 1: {
      Pair a = random_pair(pool, t, rng, depth - 1);
      int s = std::uniform_int_distribution<int>(-1, 1)(rng);
      return {shift(a.c, s), shift(a.e, -s), a.text + "[" + std::to_string(s) + "]"};
    }
    case 2: {
      Pair a = random_pair(pool, t, rng, depth - 1);
      Pair b = random_pair(pool, t, rng, depth - 1);
      return {direct_sum(a.c, b.c), direct_sum(a.e, b.e), "(" + a.text + " + " + b.text + ")"};
    }
    default: {
      Pair a = random_pair(pool, t, rng, depth - 1);
      static const char* roots[] = {"1", "-1", "2", "1/2", "3"};
      int var = std::uniform_int_distribution<int>(0, t.n() - 1)(rng);
      Rational root = parse_rational(roots[std::uniform_int_distribution<int>(0, 4)(rng)]);
      Poly p = Poly::variable(t.ring(), var) - Poly::constant(t.ring(), root);
      return {scalar_cone(a.c, p), shift(scalar_cone(a.e, p), -1),
              "cone(" + to_string(p) + ", " + a.text + ")"};
    }
  }
}

Outcome exchange(const std::vector<Example>& examples) {
  Outcome out;
  std::map<int, std::vector<std::pair<std::string, LocalSystemObject>>> pools;
  std::map<int, CharacterTorus> tori;
  for (const auto& e : examples) {
    int g = e.file.torus.g();
    tori.emplace(g, e.file.torus);
    for (std::size_t i = 0; i < e.file.objects.size(); ++i)
      pools[g].emplace_back(e.name + "#" + std::to_string(i), e.file.objects[i]);
  }
  std::mt19937_64 rng(kSeed);
  int checks = 0;
  for (int i = 0; i < kExchangeCorpus; ++i) {
    int g = (i % 4 == 3 && pools.count(2)) ? 2 : 1;
    const CharacterTorus& t = tori.at(g);
    Pair p = random_pair(pools.at(g), t, rng, g == 2 ? 1 : 2);
    auto m = make_m(t.n());
    auto mh = make_m_hat(t.n());
    for (int k = -2; k <= 2; ++k) {
      ++checks;
      bool lhs = in_leq(p.c, k, m, &t);
      bool rhs = in_geq(p.e, -k, mh, &t);
      out.require(lhs == rhs, p.text + " at k=" + std::to_string(k));
    }
  }
  out.summary = std::to_string(kExchangeCorpus) + " random complexes, " + std::to_string(checks) + " equivalences";
  return out;
}

// ---------------------------------------------------------------- 8

Outcome ic(const std::vector<std::pair<std::string, ICFile>>& inputs) {
  Outcome out;
  out.require(ell(1) == 1 && ell(3) == 1 && ell(4) == 3, "ell values");
  bool free_seen = false, syzygy_seen = false;
  for (const auto& [name, f] : inputs) {
    const FPModule& mod = f.input.module;
    ICReport r = ic_verify(f.input);
    out.require(r.passed(), name + ": ic_verify failed " + r.error);
    bool is_free = mod.relations().is_zero();
    if (is_free && r.complex) {
      free_seen = true;
      out.require(same_cohomology(*r.complex, FreeComplex::free_module(mod.ring(), mod.num_generators())),
                  name + ": IC is not the free module");
    }
    if (!is_free && f.input.ambient_dim == 4) syzygy_seen = true;
    for (const auto& b : r.codim_bounds) out.require(b.ok(), name + ": codim bound at i=" + std::to_string(b.i));
  }
  out.require(free_seen && syzygy_seen, "missing free or n=4 syzygy input");
  out.summary = std::to_string(inputs.size()) + " inputs; ell(1,3,4) = " + std::to_string(ell(1)) + "," +
                std::to_string(ell(3)) + "," + std::to_string(ell(4));
  return out;
}

// ---------------------------------------------------------------- 9

// Dimension of a monomial ideal by search for the largest set of variables
// containing no leading monomial's support.
int brute_dimension(const std::vector<Exponents>& leads, int n) {
  int best = -1;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool independent = true;
    for (const auto& e : leads) {
      bool inside = true;
      for (int v = 0; v < n; ++v)
        if (e[v] > 0 && !(mask & (1u << v))) inside = false;
      if (inside) independent = false;
    }
    if (independent) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

bool ideal_basis_ok(const Ideal& gb) {
  std::vector<ModVec> vs;
  for (const auto& p : gb.generators()) vs.push_back(to_modvec(p));
  return satisfies_buchberger_criterion(*gb.ring(), vs);
}

bool module_basis_ok(const PolyMatrix& gb) {
  std::vector<ModVec> vs;
  for (int j = 0; j < gb.cols(); ++j) vs.push_back(to_modvec(gb.column(j)));
  return satisfies_buchberger_criterion(*gb.ring(), vs);
}

bool resolution_ok(const FreeComplex& f, std::string& why) {
  for (int d = f.lo(); d + 1 <= f.hi(); ++d)
    if (!(f.differential(d + 1) * f.differential(d)).is_zero()) {
      why = "d*d != 0 at " + std::to_string(d);
      return false;
    }
  for (int d = f.lo(); d < f.hi(); ++d) {
    PolyMatrix ker = syzygies(f.differential(d));
    if (ker.cols() == 0) continue;
    if (d == f.lo()) {
      why = "top map not injective";
      return false;
    }
    if (!lift_matrix(ker, f.differential(d - 1))) {
      why = "not exact at " + std::to_string(d);
      return false;
    }
  }
  return true;
}

Outcome kernel(const std::vector<Example>& examples) {
  Outcome out;
  std::mt19937_64 rng(kSeed);
  int bases = 0, resolutions = 0;

  for (const auto& e : examples) {
    FreeComplex c = e.file.complex();
    for (int k = c.lo(); k <= c.hi(); ++k)
      for (const auto& comp : jump_locus(c, k, 1, e.file.torus).components) {
        ++bases;
        out.require(ideal_basis_ok(comp.groebner()), e.name + ": locus basis");
      }
  }

  for (int i = 0; i < kRandomIdeals; ++i) {
    int n = 2 + i % 3;
    auto R = PolyRing::standard(n);
    int gens = 1 + static_cast<int>(rng() % 3);
    std::vector<Poly> ps;
    for (int j = 0; j < gens; ++j) ps.push_back(testing::random_poly(R, rng, 3, 2, 3));
    Ideal I(R, ps);
    Ideal gb = I.groebner();
    ++bases;
    out.require(ideal_basis_ok(gb), "random ideal basis " + std::to_string(i));
    Dimension dim = krull_dimension(I);
    if (gb.is_unit()) {
      out.require(!dim.has_value(), "unit ideal has a dimension");
      continue;
    }
    std::vector<Exponents> leads;
    for (const auto& p : gb.generators()) leads.push_back(p.leading_exp());
    auto lexR = R->with_order(MonomialOrder::lex());
    std::vector<Poly> lex_ps;
    for (const auto& p : ps) lex_ps.push_back(parse_poly(lexR, to_string(p)));
    std::vector<Exponents> lex_leads;
    for (const auto& p : groebner_basis(lexR, lex_ps)) lex_leads.push_back(p.leading_exp());
    out.require(dim && *dim == brute_dimension(leads, n) && *dim == brute_dimension(lex_leads, n),
                "krull_dimension disagrees on random ideal " + std::to_string(i));
  }

  for (int i = 0; i < kRandomModules; ++i) {
    int n = 2 + i % 2;
    auto R = PolyRing::standard(n);
    int g = 1 + static_cast<int>(rng() % 2);
    int rels = 1 + static_cast<int>(rng() % 3);
    PolyMatrix A(R, g, rels);
    for (int r = 0; r < g; ++r)
      for (int s = 0; s < rels; ++s) A(r, s) = testing::random_poly(R, rng, 2, 2, 2);
    ++bases;
    out.require(module_basis_ok(groebner_basis(A)), "random module basis " + std::to_string(i));
    FreeComplex f = free_resolution(FPModule(R, g, A));
    ++resolutions;
    std::string why;
    out.require(resolution_ok(f, why), "random resolution " + std::to_string(i) + ": " + why);
  }

  for (const auto& [name, file] : ic_examples()) {
    FreeComplex f = free_resolution(file.input.module);
    ++resolutions;
    std::string why;
    out.require(resolution_ok(f, why), name + " resolution: " + why);
  }

  out.summary = std::to_string(bases) + " bases, " + std::to_string(resolutions) + " resolutions, " +
                std::to_string(kRandomIdeals) + " dimension checks";
  return out;
}

}  // namespace

int main() {
  auto examples = object_examples();
  auto ics = ic_examples();
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"base change", [&] { return base_change(examples); }},
      {"jump-locus soundness", [&] { return loci_soundness(examples); }},
      {"structure of S_1^k", [&] { return structure(examples); }},
      {"codimension bounds", [&] { return codim_bounds(examples); }},
      {"generic vanishing and Euler characteristic", [&] { return generic_vanishing(examples); }},
      {"least-degree support", [&] { return surprise(examples); }},
      {"t-structure exchange under duality", [&] { return exchange(examples); }},
      {"intersection complex", [&] { return ic(ics); }},
      {"kernel correctness", [&] { return kernel(examples); }},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& ex) {
      o.passed = false;
      o.failures.push_back(std::string("exception: ") + ex.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.passed;
    std::ostringstream line;
    line << "criterion " << i + 1 << " [" << criteria[i].first << "]: " << (o.passed ? "PASS" : "FAIL") << " - "
         << o.summary << " (" << std::fixed;
    line.precision(1);
    line << secs << "s)";
    for (const auto& f : o.failures) line << "\n    " << f;
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}
