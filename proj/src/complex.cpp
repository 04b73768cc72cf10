#include "charloci/complex.hpp"

#include <algorithm>

#include "charloci/errors.hpp"
#include "charloci/parallel.hpp"

namespace charloci {

FreeComplex::FreeComplex(RingPtr ring, int lo, std::vector<int> ranks, std::vector<PolyMatrix> diffs)
    : ring_(std::move(ring)), lo_(lo), ranks_(std::move(ranks)), diffs_(std::move(diffs)) {
  const std::size_t expected = ranks_.empty() ? 0 : ranks_.size() - 1;
  if (diffs_.size() != expected) throw Error(ErrorCode::InvalidArgument, "wrong number of differentials");
  for (std::size_t i = 0; i < diffs_.size(); ++i) {
    const auto& d = diffs_[i];
    if (d.rows() != ranks_[i + 1] || d.cols() != ranks_[i])
      throw Error(ErrorCode::InvalidArgument, "differential shape does not match the ranks");
    if (d.ring()) require_same_ring(ring_, d.ring(), "FreeComplex");
  }
  for (std::size_t i = 0; i + 1 < diffs_.size(); ++i) {
    if (ranks_[i] == 0 || ranks_[i + 1] == 0 || ranks_[i + 2] == 0) continue;
    if (!(diffs_[i + 1] * diffs_[i]).is_zero())
      throw Error(ErrorCode::InvalidArgument, "d*d != 0 at degree " + std::to_string(lo_ + static_cast<int>(i)));
  }
}

FreeComplex FreeComplex::zero(RingPtr ring) { return FreeComplex(std::move(ring), 0, {}, {}); }

FreeComplex FreeComplex::free_module(RingPtr ring, int rank, int degree) {
  return FreeComplex(std::move(ring), degree, {rank}, {});
}

int FreeComplex::rank(int d) const {
  if (d < lo_ || d > hi()) return 0;
  return ranks_[d - lo_];
}

PolyMatrix FreeComplex::differential(int d) const {
  if (d >= lo_ && d < hi()) return diffs_[d - lo_];
  return PolyMatrix(ring_, rank(d + 1), rank(d));
}

bool FreeComplex::is_zero() const {
  return std::all_of(ranks_.begin(), ranks_.end(), [](int r) { return r == 0; });
}

FreeComplex FreeComplex::trimmed() const {
  int first = lo_, last = hi();
  while (first <= last && rank(first) == 0) ++first;
  while (last >= first && rank(last) == 0) --last;
  if (first > last) return zero(ring_);
  if (first == lo_ && last == hi()) return *this;
  std::vector<int> r;
  std::vector<PolyMatrix> d;
  for (int k = first; k <= last; ++k) {
    r.push_back(rank(k));
    if (k < last) d.push_back(differential(k));
  }
  return FreeComplex(ring_, first, std::move(r), std::move(d));
}

bool FreeComplex::operator==(const FreeComplex& other) const {
  FreeComplex a = trimmed(), b = other.trimmed();
  if (a.is_zero() && b.is_zero()) return true;
  if (a.lo_ != b.lo_ || a.ranks_ != b.ranks_) return false;
  for (std::size_t i = 0; i < a.diffs_.size(); ++i)
    if (a.diffs_[i] != b.diffs_[i]) return false;
  return true;
}

PolyMatrix ChainMap::at(int d) const {
  auto it = components.find(d);
  if (it != components.end()) return it->second;
  return PolyMatrix(target.ring(), target.rank(d), source.rank(d));
}

bool ChainMap::commutes() const {
  int lo = std::min(source.lo(), target.lo()) - 1;
  int hi = std::max(source.hi(), target.hi());
  for (int d = lo; d <= hi; ++d) {
    PolyMatrix f = at(d), g = at(d + 1);
    if (f.rows() != target.rank(d) || f.cols() != source.rank(d)) return false;
    if (target.differential(d) * f != g * source.differential(d)) return false;
  }
  return true;
}

namespace {

bool is_zero_matrix(const PolyMatrix& m) { return m.rows() == 0 || m.cols() == 0 || m.is_zero(); }

// Builds a complex from degree -> rank / differential callbacks over [lo, hi].
template <class Rank, class Diff>
FreeComplex assemble(const RingPtr& ring, int lo, int hi, Rank rank, Diff diff) {
  if (hi < lo) return FreeComplex::zero(ring);
  std::vector<int> ranks;
  std::vector<PolyMatrix> diffs;
  for (int d = lo; d <= hi; ++d) {
    ranks.push_back(rank(d));
    if (d < hi) diffs.push_back(diff(d));
  }
  return FreeComplex(ring, lo, std::move(ranks), std::move(diffs));
}

}  // namespace

FPModule cohomology_module(const FreeComplex& c, int i) {
  const RingPtr& ring = c.ring();
  const int p = c.rank(i);
  if (p == 0) return FPModule::free(ring, 0);
  PolyMatrix out = c.differential(i);
  PolyMatrix in = c.differential(i - 1);
  FPModule h;
  if (is_zero_matrix(out)) {
    std::vector<int> nz;
    for (int j = 0; j < in.cols(); ++j) {
      bool z = true;
      for (int r = 0; r < in.rows() && z; ++r) z = in(r, j).is_zero();
      if (!z) nz.push_back(j);
    }
    h = FPModule(ring, p, in.select_cols(nz));
  } else {
    PolyMatrix k = syzygies(out);
    if (k.cols() == 0) return FPModule::free(ring, 0);
    PolyMatrix rel;
    if (is_zero_matrix(in)) {
      rel = syzygies(k);
    } else {
      PolyMatrix s = syzygies(PolyMatrix::hconcat(k, in));
      rel = s.row_range(0, k.cols());
    }
    h = FPModule(ring, k.cols(), rel);
  }
  FPModule pruned = prune(h).module;
  if (pruned.num_generators() > 0 && pruned.is_zero()) return FPModule::free(ring, 0);
  return pruned;
}

std::map<int, int> derived_fiber(const FreeComplex& c, const CharacterPoint& rho) {
  if (rho.size() != c.ring()->num_vars())
    throw Error(ErrorCode::TorusMismatch, "character point has the wrong number of coordinates");
  std::map<int, int> out;
  std::map<int, int> ranks;
  for (int d = c.lo() - 1; d <= c.hi(); ++d) {
    if (c.rank(d) == 0 || c.rank(d + 1) == 0) {
      ranks[d] = 0;
      continue;
    }
    ranks[d] = c.differential(d).evaluate(rho.coords).rank();
  }
  for (int d = c.lo(); d <= c.hi(); ++d) out[d] = c.rank(d) - ranks[d] - ranks[d - 1];
  return out;
}

FreeComplex dual(const FreeComplex& c) {
  return assemble(
      c.ring(), -c.hi(), -c.lo(), [&](int e) { return c.rank(-e); },
      [&](int e) { return c.differential(-e - 1).transpose(); });
}

FreeComplex shift(const FreeComplex& c, int s) {
  const bool negate = s % 2 != 0;
  return assemble(
      c.ring(), c.lo() - s, c.hi() - s, [&](int d) { return c.rank(d + s); },
      [&](int d) {
        PolyMatrix m = c.differential(d + s);
        return negate ? -m : m;
      });
}

FreeComplex cone(const ChainMap& f) {
  if (!f.commutes()) throw Error(ErrorCode::NotAChainMap, "map does not commute with the differentials");
  const FreeComplex& a = f.source;
  const FreeComplex& b = f.target;
  if (a.is_zero() && b.is_zero()) return FreeComplex::zero(b.ring());
  int lo = std::min(a.lo() - 1, b.lo()), hi = std::max(a.hi() - 1, b.hi());
  if (a.is_zero()) lo = b.lo(), hi = b.hi();
  if (b.is_zero()) lo = a.lo() - 1, hi = a.hi() - 1;
  const RingPtr& ring = b.ring();
  return assemble(
      ring, lo, hi, [&](int k) { return a.rank(k + 1) + b.rank(k); },
      [&](int k) {
        PolyMatrix top = PolyMatrix::hconcat(-a.differential(k + 1), PolyMatrix(ring, a.rank(k + 2), b.rank(k)));
        PolyMatrix bottom = PolyMatrix::hconcat(f.at(k + 1), b.differential(k));
        return PolyMatrix::vconcat(top, bottom);
      });
}

FreeComplex direct_sum(const FreeComplex& a, const FreeComplex& b) {
  require_same_ring(a.ring(), b.ring(), "direct_sum");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return assemble(
      a.ring(), std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()), [&](int d) { return a.rank(d) + b.rank(d); },
      [&](int d) { return PolyMatrix::block_diag(a.differential(d), b.differential(d)); });
}

namespace {

Poly scale_vars(const Poly& p, const std::vector<Rational>& s) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    Rational c = t.coef;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (t.exp[i] != 0) c *= pow(s[i], t.exp[i]);
    terms.push_back({t.exp, c});
  }
  return Poly::from_terms(p.ring(), std::move(terms));
}

PolyMatrix invert_matrix_coords(const PolyMatrix& m) {
  const int n = m.ring()->num_vars();
  Exponents top(n, 0);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      for (const auto& t : m(r, c).terms())
        for (int i = 0; i < n; ++i) top[i] = std::max(top[i], t.exp[i]);
  return m.map_entries([&](const Poly& p) {
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
      Exponents e(n);
      for (int i = 0; i < n; ++i) e[i] = top[i] - t.exp[i];
      terms.push_back({std::move(e), t.coef});
    }
    return Poly::from_terms(p.ring(), std::move(terms));
  });
}

}  // namespace

FreeComplex twist(const FreeComplex& c, const CharacterPoint& rho) {
  if (rho.size() != c.ring()->num_vars())
    throw Error(ErrorCode::TorusMismatch, "twist has the wrong number of coordinates");
  return assemble(
      c.ring(), c.lo(), c.hi(), [&](int d) { return c.rank(d); },
      [&](int d) { return c.differential(d).map_entries([&](const Poly& p) { return scale_vars(p, rho.coords); }); });
}

FreeComplex invert_coords(const FreeComplex& c) {
  return assemble(
      c.ring(), c.lo(), c.hi(), [&](int d) { return c.rank(d); },
      [&](int d) { return invert_matrix_coords(c.differential(d)); });
}

long euler_characteristic(const FreeComplex& c) {
  long chi = 0;
  for (int d = c.lo(); d <= c.hi(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(c.rank(d));
  return chi;
}

namespace {

PolyMatrix drop_zero_columns(const PolyMatrix& m) {
  std::vector<int> keep;
  for (int j = 0; j < m.cols(); ++j) {
    bool z = true;
    for (int r = 0; r < m.rows() && z; ++r) z = m(r, j).is_zero();
    if (!z) keep.push_back(j);
  }
  return keep.size() == static_cast<std::size_t>(m.cols()) ? m : m.select_cols(keep);
}

// Removes generators lying in the span of the remaining ones.
PolyMatrix minimize_columns(const PolyMatrix& m) {
  PolyMatrix cur = drop_zero_columns(m);
  for (int j = cur.cols() - 1; j >= 0 && cur.cols() > 1; --j) {
    std::vector<int> others;
    for (int k = 0; k < cur.cols(); ++k)
      if (k != j) others.push_back(k);
    if (Submodule(cur.select_cols(others)).contains(cur.column(j))) cur = cur.select_cols(others);
  }
  return cur;
}

// Successive syzygy matrices starting from `first`; at most `max_steps`
// nonzero matrices are allowed.
std::vector<PolyMatrix> syzygy_chain(const PolyMatrix& first, int max_steps) {
  std::vector<PolyMatrix> out;
  PolyMatrix cur = drop_zero_columns(first);
  while (cur.cols() > 0) {
    if (static_cast<int>(out.size()) >= max_steps)
      throw Error(ErrorCode::ResolutionTooLong, "kernel still nonzero after " + std::to_string(max_steps) + " steps");
    out.push_back(cur);
    cur = minimize_columns(syzygies(cur));
  }
  return out;
}

}  // namespace

FreeComplex free_resolution(const FPModule& m, std::optional<int> max_length) {
  const RingPtr& ring = m.ring();
  int bound = max_length.value_or(ring->num_vars() + 1);
  if (bound < 1) throw Error(ErrorCode::InvalidArgument, "max_length must be at least 1");
  auto chain = syzygy_chain(m.relations(), bound);
  const int len = static_cast<int>(chain.size());
  std::vector<int> ranks(len + 1);
  std::vector<PolyMatrix> diffs;
  ranks[len] = m.num_generators();
  for (int i = 0; i < len; ++i) {
    // Degree -(len - i) holds F_{len - i}.
    ranks[i] = chain[len - 1 - i].cols();
    diffs.push_back(chain[len - 1 - i]);
  }
  return FreeComplex(ring, -len, std::move(ranks), std::move(diffs));
}

FreeComplex prune(const FreeComplex& c) {
  if (c.is_zero()) return FreeComplex::zero(c.ring());
  const RingPtr& ring = c.ring();
  const int lo = c.lo(), hi = c.hi();
  std::vector<PolyMatrix> diffs;
  for (int d = lo - 1; d <= hi; ++d) diffs.push_back(c.differential(d));
  // diffs[k] leaves degree lo - 1 + k.
  auto at = [&](int d) -> PolyMatrix& { return diffs[d - lo + 1]; };
  for (;;) {
    int deg = 0, pr = -1, pc = -1;
    for (int d = lo; d < hi && pr < 0; ++d) {
      const PolyMatrix& m = at(d);
      for (int col = 0; col < m.cols() && pr < 0; ++col)
        for (int r = 0; r < m.rows(); ++r)
          if (m(r, col).is_unit()) {
            deg = d;
            pr = r;
            pc = col;
            break;
          }
    }
    if (pr < 0) break;
    PolyMatrix& m = at(deg);
    Rational inv = 1 / m(pr, pc).constant_term();
    PolyMatrix colv = m.select_cols({pc});
    PolyMatrix rowv = m.select_rows({pr});
    PolyMatrix updated = m - (colv * rowv).scaled(Poly::constant(ring, inv));
    std::vector<int> rows, cols;
    for (int r = 0; r < m.rows(); ++r)
      if (r != pr) rows.push_back(r);
    for (int col = 0; col < m.cols(); ++col)
      if (col != pc) cols.push_back(col);
    m = updated.select_rows(rows).select_cols(cols);
    PolyMatrix& before = at(deg - 1);
    before = before.select_rows(cols);
    PolyMatrix& after = at(deg + 1);
    after = after.select_cols(rows);
  }
  std::vector<int> ranks;
  std::vector<PolyMatrix> out;
  for (int d = lo; d <= hi; ++d) {
    ranks.push_back(at(d).cols());
    if (d < hi) out.push_back(at(d));
  }
  return FreeComplex(ring, lo, std::move(ranks), std::move(out)).trimmed();
}

namespace {

PolyMatrix lift_or_throw(const PolyMatrix& target, const PolyMatrix& gens, const char* what) {
  if (is_zero_matrix(target)) return PolyMatrix(target.ring(), gens.cols(), target.cols());
  if (gens.cols() == 0) throw Error(ErrorCode::PreconditionFailed, std::string("cannot lift ") + what);
  auto x = lift_matrix(target, gens);
  if (!x) throw Error(ErrorCode::PreconditionFailed, std::string("cannot lift ") + what);
  return *x;
}

bool all_free(const ModuleComplex& m) {
  for (const auto& mod : m.modules)
    if (mod.relations().cols() > 0) return false;
  return true;
}

}  // namespace

FreeComplex free_replacement(const ModuleComplex& x) {
  const RingPtr& ring = x.ring;
  if (x.modules.empty()) return FreeComplex::zero(ring);
  if (all_free(x)) {
    return assemble(
        ring, x.lo, x.hi(), [&](int d) { return x.modules[d - x.lo].num_generators(); },
        [&](int d) { return x.maps[d - x.lo]; });
  }
  const int top = x.hi();
  FreeComplex g = shift(free_resolution(x.modules.back()), -top);
  // q[d] : G^d -> generators of X^d, a quasi-isomorphism onto X^{>= k}.
  std::map<int, PolyMatrix> q;
  q[top] = PolyMatrix::identity(ring, x.modules.back().num_generators());

  for (int k = top; k > x.lo; --k) {
    const FPModule& mk = x.modules[k - x.lo];
    const FPModule& prev = x.modules[k - 1 - x.lo];
    const PolyMatrix& f = x.maps[k - 1 - x.lo];
    FreeComplex p = shift(free_resolution(prev), -k);
    ChainMap lift{p, g, {}};
    if (p.rank(k) > 0) {
      PolyMatrix qk = q.count(k) ? q[k] : PolyMatrix(ring, mk.num_generators(), g.rank(k));
      PolyMatrix span = mk.relations().cols() > 0 ? PolyMatrix::hconcat(qk, mk.relations()) : qk;
      PolyMatrix g0 = lift_or_throw(f, span, "map onto the model").row_range(0, g.rank(k));
      PolyMatrix err = g.differential(k) * g0;
      if (!is_zero_matrix(err)) {
        PolyMatrix ker = syzygies(span).row_range(0, g.rank(k));
        PolyMatrix c = lift_or_throw(err, g.differential(k) * ker, "correction into cycles");
        g0 = g0 - ker * c;
      }
      lift.components[k] = g0;
      for (int j = k - 1; j >= p.lo(); --j) {
        PolyMatrix t = lift.components[j + 1] * p.differential(j);
        lift.components[j] = lift_or_throw(t, g.differential(j), "chain map");
      }
    }
    FreeComplex next = cone(lift);
    std::map<int, PolyMatrix> nq;
    for (const auto& [d, m] : q) {
      PolyMatrix left(ring, m.rows(), p.rank(d + 1));
      nq[d] = PolyMatrix::hconcat(left, m);
    }
    PolyMatrix id = PolyMatrix::identity(ring, prev.num_generators());
    nq[k - 1] = PolyMatrix::hconcat(id, PolyMatrix(ring, prev.num_generators(), g.rank(k - 1)));
    g = next;
    q = std::move(nq);
  }
  return prune(g);
}

FreeComplex truncate_leq(const FreeComplex& c, int n) {
  const RingPtr& ring = c.ring();
  if (c.is_zero() || n >= c.hi()) return c;
  if (n < c.lo()) return FreeComplex::zero(ring);
  PolyMatrix out = c.differential(n);
  PolyMatrix in = c.differential(n - 1);
  FPModule z;
  PolyMatrix l0;
  if (is_zero_matrix(out)) {
    z = FPModule::free(ring, c.rank(n));
    l0 = in;
  } else {
    PolyMatrix k = syzygies(out);
    z = FPModule(ring, k.cols(), k.cols() > 0 ? syzygies(k) : PolyMatrix(ring, 0, 0));
    l0 = k.cols() > 0 ? lift_or_throw(in, k, "into the kernel") : PolyMatrix(ring, 0, c.rank(n - 1));
  }
  ModuleComplex m{ring, c.lo(), {}, {}};
  for (int j = c.lo(); j < n; ++j) {
    m.modules.push_back(FPModule::free(ring, c.rank(j)));
    m.maps.push_back(j < n - 1 ? c.differential(j) : l0);
  }
  m.modules.push_back(z);
  return free_replacement(m);
}

FreeComplex truncate_geq(const FreeComplex& c, int n) {
  const RingPtr& ring = c.ring();
  if (c.is_zero() || n <= c.lo()) return c;
  if (n > c.hi()) return FreeComplex::zero(ring);
  PolyMatrix in = c.differential(n - 1);
  std::vector<PolyMatrix> tail;
  if (!is_zero_matrix(in)) tail = syzygy_chain(syzygies(in), ring->num_vars() + 1);
  const int lo = n - 1 - static_cast<int>(tail.size());
  // Degree n - 1 - i holds the i-th syzygy term for i >= 1.
  auto rank = [&](int d) {
    if (d >= n - 1) return c.rank(d);
    return tail[n - 2 - d].cols();
  };
  auto diff = [&](int d) {
    if (d >= n - 1) return c.differential(d);
    return tail[n - 2 - d];
  };
  return prune(assemble(ring, lo, c.hi(), rank, diff));
}

Codim support_codim(const FPModule& m, const CharacterTorus* torus) {
  if (m.is_zero()) return Codim::infinite();
  Ideal ann = m.annihilator();
  if (torus) ann = saturate_at_units(ann, *torus);
  return Codim::of(krull_dimension(ann), m.ring()->num_vars());
}

SupportProfile support_profile(const FreeComplex& c, const CharacterTorus* torus) {
  const RingPtr& ring = c.ring();
  FreeComplex t = c.trimmed();
  if (t.is_zero()) return {};
  const int n = t.hi() - t.lo() + 1;
  std::vector<std::optional<SupportEntry>> slots(n);
  parallel_for(n, [&](int i) {
    const int d = t.lo() + i;
    FPModule h = cohomology_module(t, d);
    if (h.num_generators() == 0) {
      slots[i] = SupportEntry{d, Ideal::unit(ring), Codim::infinite()};
      return;
    }
    Ideal ann = h.annihilator();
    if (torus) ann = saturate_at_units(ann, *torus);
    Dimension dim = krull_dimension(ann);
    slots[i] = SupportEntry{d, ann, Codim::of(dim, ring->num_vars())};
  });
  SupportProfile out;
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

namespace {

std::vector<std::vector<int>> subsets_of_size(int r, int p) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == p) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < r; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

FreeComplex koszul_complex(const RingPtr& ring, const std::vector<PolyMatrix>& ops, int rank, int lo) {
  const int r = static_cast<int>(ops.size());
  std::vector<std::vector<std::vector<int>>> bases;
  for (int p = 0; p <= r; ++p) bases.push_back(subsets_of_size(r, p));
  std::vector<int> ranks;
  std::vector<PolyMatrix> diffs;
  for (int p = 0; p <= r; ++p) ranks.push_back(static_cast<int>(bases[p].size()) * rank);
  for (int p = 0; p < r; ++p) {
    const auto& src = bases[p];
    const auto& dst = bases[p + 1];
    PolyMatrix d(ring, ranks[p + 1], ranks[p]);
    for (std::size_t a = 0; a < src.size(); ++a) {
      for (int j = 0; j < r; ++j) {
        if (std::find(src[a].begin(), src[a].end(), j) != src[a].end()) continue;
        std::vector<int> joined = src[a];
        joined.insert(std::upper_bound(joined.begin(), joined.end(), j), j);
        std::size_t b = std::lower_bound(dst.begin(), dst.end(), joined) - dst.begin();
        int before = static_cast<int>(std::count_if(src[a].begin(), src[a].end(), [&](int i) { return i < j; }));
        const bool negate = before % 2 != 0;
        for (int u = 0; u < rank; ++u)
          for (int v = 0; v < rank; ++v) {
            const Poly& e = ops[j](u, v);
            if (e.is_zero()) continue;
            d(static_cast<int>(b) * rank + u, static_cast<int>(a) * rank + v) = negate ? -e : e;
          }
      }
    }
    diffs.push_back(std::move(d));
  }
  return FreeComplex(ring, lo, std::move(ranks), std::move(diffs));
}

FreeComplex koszul_complex(const std::vector<Poly>& elements, int lo) {
  if (elements.empty()) throw Error(ErrorCode::InvalidArgument, "koszul_complex needs at least one element");
  const RingPtr& ring = elements.front().ring();
  std::vector<PolyMatrix> ops;
  for (const auto& e : elements) ops.push_back(PolyMatrix::from_rows(ring, {{e}}));
  return koszul_complex(ring, ops, 1, lo);
}

bool same_cohomology(const FreeComplex& a, const FreeComplex& b, const IsoOptions& options) {
  FreeComplex ta = a.trimmed(), tb = b.trimmed();
  int lo = std::min(ta.is_zero() ? 0 : ta.lo(), tb.is_zero() ? 0 : tb.lo());
  int hi = std::max(ta.is_zero() ? -1 : ta.hi(), tb.is_zero() ? -1 : tb.hi());
  for (int d = lo; d <= hi; ++d) {
    if (!isomorphic(cohomology_module(ta, d), cohomology_module(tb, d), options).isomorphic) return false;
  }
  return true;
}

}  // namespace charloci
