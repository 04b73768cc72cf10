#include "charloci/module.hpp"

#include <map>
#include <random>

#include "charloci/errors.hpp"

namespace charloci {

FPModule::FPModule(RingPtr ring, int num_generators, PolyMatrix relations)
    : ring_(std::move(ring)), num_gens_(num_generators), relations_(std::move(relations)) {
  if (relations_.rows() != num_gens_) {
    if (relations_.cols() == 0) {
      relations_ = PolyMatrix(ring_, num_gens_, 0);
    } else {
      throw Error(ErrorCode::InvalidArgument, "relation matrix must have one row per generator");
    }
  }
  if (relations_.ring()) require_same_ring(ring_, relations_.ring(), "FPModule");
}

FPModule FPModule::free(RingPtr ring, int rank) {
  PolyMatrix rel(ring, rank, 0);
  return FPModule(std::move(ring), rank, std::move(rel));
}

FPModule FPModule::quotient(const Ideal& ideal) {
  const auto& g = ideal.generators();
  PolyMatrix rel(ideal.ring(), 1, static_cast<int>(g.size()));
  for (int j = 0; j < static_cast<int>(g.size()); ++j) rel(0, j) = g[j];
  return FPModule(ideal.ring(), 1, std::move(rel));
}

bool FPModule::is_zero() const {
  if (num_gens_ == 0) return true;
  if (relations_.cols() == 0) return false;
  return Submodule(relations_).is_everything();
}

Ideal FPModule::annihilator() const {
  if (num_gens_ == 0) return Ideal::unit(ring_);
  if (relations_.cols() == 0) return Ideal::zero(ring_);
  std::optional<Ideal> acc;
  for (int j = 0; j < num_gens_; ++j) {
    PolyMatrix ej(ring_, num_gens_, 1);
    ej(j, 0) = Poly::constant(ring_, 1);
    PolyMatrix s = syzygies(PolyMatrix::hconcat(ej, relations_));
    std::vector<Poly> gens;
    for (int c = 0; c < s.cols(); ++c) gens.push_back(s(0, c));
    Ideal colon = Ideal(ring_, gens).groebner();
    acc = acc ? ideal_intersection(*acc, colon) : colon;
    if (acc->is_zero()) break;
  }
  return acc->groebner();
}

Ideal FPModule::fitting_ideal() const { return minors_ideal(relations_, num_gens_); }

PrunedModule prune(const FPModule& m) {
  const RingPtr& ring = m.ring();
  PolyMatrix a = m.relations();
  int g = m.num_generators();
  PolyMatrix project = PolyMatrix::identity(ring, g);
  PolyMatrix include = PolyMatrix::identity(ring, g);
  for (;;) {
    int pr = -1, pc = -1;
    for (int c = 0; c < a.cols() && pr < 0; ++c)
      for (int r = 0; r < a.rows(); ++r)
        if (a(r, c).is_unit()) {
          pr = r;
          pc = c;
          break;
        }
    if (pr < 0) break;
    Rational inv = 1 / a(pr, pc).constant_term();
    PolyMatrix pi(ring, g - 1, g);
    std::vector<int> keep;
    for (int r = 0; r < g; ++r)
      if (r != pr) keep.push_back(r);
    for (int i = 0; i < g - 1; ++i) {
      pi(i, keep[i]) = Poly::constant(ring, 1);
      pi(i, pr) = a(keep[i], pc) * (-inv);
    }
    PolyMatrix next = pi * a;
    std::vector<int> cols;
    for (int c = 0; c < next.cols(); ++c)
      if (c != pc) cols.push_back(c);
    a = next.select_cols(cols);
    project = pi * project;
    include = include.select_cols(keep);
    --g;
  }
  std::vector<int> nonzero_cols;
  for (int c = 0; c < a.cols(); ++c) {
    bool zero = true;
    for (int r = 0; r < a.rows() && zero; ++r) zero = a(r, c).is_zero();
    if (!zero) nonzero_cols.push_back(c);
  }
  a = a.select_cols(nonzero_cols);
  return {FPModule(ring, g, std::move(a)), std::move(project), std::move(include)};
}

FPModule dual_module(const FPModule& m) {
  const RingPtr& ring = m.ring();
  if (m.num_generators() == 0) return FPModule::free(ring, 0);
  PolyMatrix k = m.relations().cols() == 0 ? PolyMatrix::identity(ring, m.num_generators())
                                           : syzygies(m.relations().transpose());
  if (k.cols() == 0) return FPModule::free(ring, 0);
  return prune(FPModule(ring, k.cols(), syzygies(k))).module;
}

namespace {

std::vector<Exponents> monomials_up_to(int n, int degree) {
  std::vector<Exponents> out;
  Exponents e(n, 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == n) {
      out.push_back(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[var] = k;
      self(self, var + 1, left - k);
    }
    e[var] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

}  // namespace

std::vector<PolyMatrix> bounded_homs(const FPModule& a, const FPModule& b, int degree) {
  const RingPtr& ring = a.ring();
  require_same_ring(ring, b.ring(), "bounded_homs");
  const int ga = a.num_generators(), gb = b.num_generators();
  if (ga == 0 || gb == 0) return {};
  auto mons = monomials_up_to(ring->num_vars(), degree);
  struct Unknown {
    int i, j;
    std::size_t mono;
  };
  std::vector<Unknown> unknowns;
  for (int i = 0; i < gb; ++i)
    for (int j = 0; j < ga; ++j)
      for (std::size_t k = 0; k < mons.size(); ++k) unknowns.push_back({i, j, k});

  std::optional<Submodule> target;
  if (b.relations().cols() > 0) target.emplace(b.relations());
  // Rows of the linear system are (relation column, position, monomial).
  std::map<std::tuple<int, int, Exponents>, int> row_index;
  std::vector<std::vector<std::pair<int, Rational>>> columns(unknowns.size());
  const PolyMatrix& ra = a.relations();
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    const auto& [i, j, k] = unknowns[u];
    for (int c = 0; c < ra.cols(); ++c) {
      if (ra(j, c).is_zero()) continue;
      std::vector<Poly> v(gb, Poly::zero(ring));
      v[i] = ra(j, c).times_monomial(mons[k], 1);
      if (target) v = target->reduce(v);
      for (int pos = 0; pos < gb; ++pos)
        for (const auto& t : v[pos].terms()) {
          auto key = std::make_tuple(c, pos, t.exp);
          auto it = row_index.try_emplace(key, static_cast<int>(row_index.size())).first;
          columns[u].push_back({it->second, t.coef});
        }
    }
  }
  QMatrix system(static_cast<int>(row_index.size()), static_cast<int>(unknowns.size()));
  for (std::size_t u = 0; u < unknowns.size(); ++u)
    for (const auto& [r, coef] : columns[u]) system(r, static_cast<int>(u)) += coef;
  QMatrix kernel = row_index.empty() ? QMatrix::identity(static_cast<int>(unknowns.size())) : system.kernel();
  std::vector<PolyMatrix> out;
  for (int col = 0; col < kernel.cols(); ++col) {
    PolyMatrix p(ring, gb, ga);
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      const Rational& c = kernel(static_cast<int>(u), col);
      if (is_zero(c)) continue;
      const auto& [i, j, k] = unknowns[u];
      p(i, j) += Poly::monomial(ring, mons[k], c);
    }
    out.push_back(std::move(p));
  }
  return out;
}

bool is_surjective(const PolyMatrix& p, const FPModule& target) {
  if (target.num_generators() == 0) return true;
  PolyMatrix span = target.relations().cols() == 0 ? p : PolyMatrix::hconcat(p, target.relations());
  if (span.cols() == 0) return false;
  return Submodule(span).is_everything();
}

namespace {

std::optional<int> find_surjection(const FPModule& a, const FPModule& b, const IsoOptions& opt,
                                   std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int d = 0; d <= opt.degree_budget; ++d) {
    auto homs = bounded_homs(a, b, d);
    if (homs.empty()) continue;
    for (int attempt = 0; attempt < opt.attempts; ++attempt) {
      PolyMatrix p(a.ring(), b.num_generators(), a.num_generators());
      for (const auto& h : homs) {
        int c = coef(rng);
        if (attempt == 0 && homs.size() == 1) c = 1;
        if (c != 0) p = p + h.scaled(Poly::constant(a.ring(), c));
      }
      if (is_surjective(p, b)) return d;
    }
  }
  return std::nullopt;
}

}  // namespace

IsoResult isomorphic(const FPModule& a, const FPModule& b, const IsoOptions& options) {
  FPModule pa = prune(a).module, pb = prune(b).module;
  bool za = pa.is_zero(), zb = pb.is_zero();
  if (za || zb) return {za == zb, true, 0};
  std::mt19937_64 rng(options.seed);
  auto ab = find_surjection(pa, pb, options, rng);
  if (!ab) return {false, false, -1};
  auto ba = find_surjection(pb, pa, options, rng);
  if (!ba) return {false, false, -1};
  return {true, true, std::max(*ab, *ba)};
}

}  // namespace charloci
