#include "charloci/groebner.hpp"

#include <algorithm>
#include <tuple>

#include "charloci/errors.hpp"

namespace charloci {

int compare_terms(const PolyRing& ring, const ModTerm& a, const ModTerm& b) {
  if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
  return ring.compare(a.exp, b.exp);
}

ModVec to_modvec(const std::vector<Poly>& column) {
  ModVec v;
  for (std::size_t i = 0; i < column.size(); ++i) {
    for (const auto& t : column[i].terms()) v.push_back({static_cast<int>(i), t.exp, t.coef});
  }
  // Positions were visited in increasing order and each polynomial is
  // already sorted, so v is sorted for the position-over-term order.
  return v;
}

ModVec to_modvec(const Poly& p) { return to_modvec(std::vector<Poly>{p}); }

std::vector<Poly> from_modvec(const RingPtr& ring, int rank, const ModVec& v) {
  std::vector<std::vector<Term>> parts(rank);
  for (const auto& t : v) parts.at(t.pos).push_back({t.exp, t.coef});
  std::vector<Poly> out;
  out.reserve(rank);
  for (auto& p : parts) out.push_back(Poly::from_terms(ring, std::move(p)));
  return out;
}

Poly poly_from_modvec(const RingPtr& ring, const ModVec& v) { return from_modvec(ring, 1, v)[0]; }

namespace {

// a[start..] - c * x^m * g, where the leading term is known to cancel when
// `skip_leading` is set.
ModVec sub_scaled(const PolyRing& ring, const ModVec& a, std::size_t start, const Rational& c, const Exponents& m,
                  const ModVec& g, bool skip_leading) {
  ModVec out;
  out.reserve(a.size() - start + g.size());
  std::size_t i = start + (skip_leading ? 1 : 0);
  std::size_t j = skip_leading ? 1 : 0;
  ModTerm scaled;
  bool have = false;
  auto load = [&]() {
    if (j < g.size()) {
      scaled.pos = g[j].pos;
      scaled.exp = product(g[j].exp, m);
      scaled.coef = g[j].coef * c;
      have = true;
    } else {
      have = false;
    }
  };
  load();
  while (i < a.size() && have) {
    int cmp = compare_terms(ring, a[i], scaled);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      scaled.coef = -scaled.coef;
      out.push_back(std::move(scaled));
      ++j;
      load();
    } else {
      Rational s = a[i].coef - scaled.coef;
      if (!is_zero(s)) out.push_back({a[i].pos, a[i].exp, s});
      ++i;
      ++j;
      load();
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  while (have) {
    scaled.coef = -scaled.coef;
    out.push_back(std::move(scaled));
    ++j;
    load();
  }
  return out;
}

int find_divisor(const std::vector<ModVec>& basis, const ModTerm& t, int exclude = -1) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (static_cast<int>(k) == exclude || basis[k].empty()) continue;
    const ModTerm& lt = basis[k].front();
    if (lt.pos == t.pos && divides(lt.exp, t.exp)) return static_cast<int>(k);
  }
  return -1;
}

ModVec reduce_impl(const PolyRing& ring, const ModVec& v, const std::vector<ModVec>& basis, int exclude) {
  ModVec h = v;
  std::size_t start = 0;
  ModVec r;
  while (start < h.size()) {
    const ModTerm& t = h[start];
    int k = find_divisor(basis, t, exclude);
    if (k < 0) {
      r.push_back(t);
      ++start;
      continue;
    }
    const ModTerm& lt = basis[k].front();
    Rational c = t.coef / lt.coef;
    Exponents m = quotient(t.exp, lt.exp);
    h = sub_scaled(ring, h, start, c, m, basis[k], true);
    start = 0;
  }
  return r;
}

}  // namespace

ModVec modvec_sub(const PolyRing& ring, const ModVec& a, const ModVec& b) {
  if (b.empty()) return a;
  Exponents one(b.front().exp.size(), 0);
  return sub_scaled(ring, a, 0, Rational(1), one, b, false);
}

ModVec modvec_monic(const ModVec& v) {
  if (v.empty() || is_one(v.front().coef)) return v;
  Rational inv = 1 / v.front().coef;
  ModVec out = v;
  for (auto& t : out) t.coef *= inv;
  return out;
}

ModVec normal_form(const PolyRing& ring, const ModVec& v, const std::vector<ModVec>& basis) {
  return reduce_impl(ring, v, basis, -1);
}

ModVec s_vector(const PolyRing& ring, const ModVec& f, const ModVec& g) {
  const ModTerm& a = f.front();
  const ModTerm& b = g.front();
  if (a.pos != b.pos) return {};
  Exponents l = lcm(a.exp, b.exp);
  ModVec left = sub_scaled(ring, ModVec{}, 0, Rational(-1) / a.coef, quotient(l, a.exp), f, false);
  return sub_scaled(ring, left, 0, Rational(1) / b.coef, quotient(l, b.exp), g, false);
}

namespace {

struct CriticalPair {
  int i;
  int j;
  int pos;
  Exponents lcm;
  int degree;
};

class BuchbergerEngine {
 public:
  BuchbergerEngine(const PolyRing& ring, GroebnerStats* stats) : ring_(ring), stats_(stats) {}

  std::vector<ModVec> run(std::vector<ModVec> gens) {
    for (auto& g : gens) {
      if (g.empty()) continue;
      add(modvec_monic(std::move(g)));
    }
    while (!pairs_.empty()) {
      std::size_t best = select();
      CriticalPair p = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<long>(best));
      pending_[p.i][p.j] = 0;
      if (stats_) ++stats_->pairs_considered;
      if (chain_criterion(p)) {
        if (stats_) ++stats_->pairs_skipped;
        continue;
      }
      ModVec s = s_vector(ring_, basis_[p.i], basis_[p.j]);
      ModVec r = reduce_impl(ring_, s, basis_, -1);
      if (r.empty()) {
        if (stats_) ++stats_->reductions_to_zero;
        continue;
      }
      add(modvec_monic(std::move(r)));
    }
    return finish();
  }

 private:
  bool is_pending(int a, int b) const {
    if (a > b) std::swap(a, b);
    return pending_[a][b] != 0;
  }

  void add(ModVec g) {
    const int k = static_cast<int>(basis_.size());
    basis_.push_back(std::move(g));
    for (auto& row : pending_) row.push_back(0);
    pending_.emplace_back(k + 1, 0);
    const ModTerm& lk = basis_[k].front();
    const bool is_ideal = rank_one();
    for (int i = 0; i < k; ++i) {
      const ModTerm& li = basis_[i].front();
      if (li.pos != lk.pos) continue;
      // Coprime leading monomials only help for ideals.
      if (is_ideal && coprime(li.exp, lk.exp)) continue;
      Exponents l = lcm(li.exp, lk.exp);
      int d = total_degree(l);
      pairs_.push_back({i, k, lk.pos, std::move(l), d});
      pending_[i][k] = 1;
    }
  }

  bool rank_one() const {
    for (const auto& g : basis_)
      if (g.front().pos != 0) return false;
    return max_pos_ == 0;
  }

  std::size_t select() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      if (less(pairs_[k], pairs_[best])) best = k;
    }
    return best;
  }

  bool less(const CriticalPair& a, const CriticalPair& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    int c = ring_.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.pos != b.pos) return a.pos > b.pos;
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  }

  // Buchberger's chain criterion: skip (i, j) when some k with matching
  // position has LM(k) | lcm(i, j) and both (i, k), (j, k) are no longer
  // pending.
  bool chain_criterion(const CriticalPair& p) const {
    for (int k = 0; k < static_cast<int>(basis_.size()); ++k) {
      if (k == p.i || k == p.j) continue;
      const ModTerm& lk = basis_[k].front();
      if (lk.pos != p.pos || !divides(lk.exp, p.lcm)) continue;
      if (!is_pending(p.i, k) && !is_pending(p.j, k)) return true;
    }
    return false;
  }

  std::vector<ModVec> finish() {
    const int n = static_cast<int>(basis_.size());
    std::vector<bool> keep(n, true);
    for (int i = 0; i < n; ++i) {
      const ModTerm& li = basis_[i].front();
      for (int j = 0; j < n; ++j) {
        if (i == j || !keep[j]) continue;
        const ModTerm& lj = basis_[j].front();
        if (lj.pos == li.pos && divides(lj.exp, li.exp)) {
          keep[i] = false;
          break;
        }
      }
    }
    std::vector<ModVec> minimal;
    for (int i = 0; i < n; ++i)
      if (keep[i]) minimal.push_back(std::move(basis_[i]));
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      ModVec head{minimal[i].front()};
      ModVec tail(minimal[i].begin() + 1, minimal[i].end());
      ModVec reduced_tail = reduce_impl(ring_, tail, minimal, static_cast<int>(i));
      head.insert(head.end(), reduced_tail.begin(), reduced_tail.end());
      minimal[i] = std::move(head);
    }
    std::sort(minimal.begin(), minimal.end(), [this](const ModVec& a, const ModVec& b) {
      return compare_terms(ring_, a.front(), b.front()) < 0;
    });
    return minimal;
  }

  const PolyRing& ring_;
  GroebnerStats* stats_;
  std::vector<ModVec> basis_;
  std::vector<CriticalPair> pairs_;
  std::vector<std::vector<char>> pending_;

 public:
  int max_pos_ = 0;
};

}  // namespace

std::vector<ModVec> reduced_groebner_basis(const RingPtr& ring, std::vector<ModVec> gens, GroebnerStats* stats) {
  BuchbergerEngine engine(*ring, stats);
  int max_pos = 0;
  for (const auto& g : gens)
    for (const auto& t : g) max_pos = std::max(max_pos, t.pos);
  engine.max_pos_ = max_pos;
  return engine.run(std::move(gens));
}

bool satisfies_buchberger_criterion(const PolyRing& ring, const std::vector<ModVec>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (basis[i].front().pos != basis[j].front().pos) continue;
      if (!normal_form(ring, s_vector(ring, basis[i], basis[j]), basis).empty()) return false;
    }
  }
  return true;
}

}  // namespace charloci
