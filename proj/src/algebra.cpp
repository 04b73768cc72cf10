#include "charloci/algebra.hpp"

#include <algorithm>
#include <unordered_map>

#include "charloci/errors.hpp"

namespace charloci {

namespace {

std::vector<Poly> nonzero(std::vector<Poly> gens) {
  gens.erase(std::remove_if(gens.begin(), gens.end(), [](const Poly& p) { return p.is_zero(); }), gens.end());
  return gens;
}

std::vector<ModVec> columns_as_modvecs(const PolyMatrix& m) {
  std::vector<ModVec> out;
  out.reserve(m.cols());
  for (int j = 0; j < m.cols(); ++j) out.push_back(to_modvec(m.column(j)));
  return out;
}

bool is_constant_lead(const ModVec& v) { return total_degree(v.front().exp) == 0; }

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens) : ring_(std::move(ring)), gens_(nonzero(std::move(gens))) {
  for (const auto& g : gens_) require_same_ring(ring_, g.ring(), "ideal generators");
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Poly::constant(ring, 1);
  Ideal i(std::move(ring), {one});
  i.is_groebner_ = true;
  return i;
}

Ideal Ideal::groebner() const {
  if (is_groebner_) return *this;
  Ideal out(ring_, groebner_basis(ring_, gens_));
  out.is_groebner_ = true;
  return out;
}

bool Ideal::is_unit() const {
  const auto& basis = is_groebner_ ? gens_ : groebner().gens_;
  return basis.size() == 1 && basis[0].is_unit();
}

bool Ideal::is_zero() const { return gens_.empty(); }

Poly Ideal::reduce(const Poly& p) const {
  if (!is_groebner_) return groebner().reduce(p);
  return normal_form(p, gens_);
}

bool Ideal::contains(const Poly& p) const { return reduce(p).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
  Ideal g = groebner();
  for (const auto& p : other.generators())
    if (!g.contains(p)) return false;
  return true;
}

bool Ideal::operator==(const Ideal& other) const {
  if (!same_ring(ring_, other.ring_)) return false;
  return groebner().gens_ == other.groebner().gens_;
}

std::vector<Poly> groebner_basis(const RingPtr& ring, const std::vector<Poly>& gens, GroebnerStats* stats) {
  std::vector<ModVec> vs;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    require_same_ring(ring, g.ring(), "groebner_basis");
    vs.push_back(to_modvec(g));
  }
  auto basis = reduced_groebner_basis(ring, std::move(vs), stats);
  std::vector<Poly> out;
  out.reserve(basis.size());
  for (const auto& b : basis) out.push_back(poly_from_modvec(ring, b));
  return out;
}

PolyMatrix groebner_basis(const PolyMatrix& gens, GroebnerStats* stats) {
  auto basis = reduced_groebner_basis(gens.ring(), columns_as_modvecs(gens), stats);
  PolyMatrix out(gens.ring(), gens.rows(), static_cast<int>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    out.set_column(static_cast<int>(j), from_modvec(gens.ring(), gens.rows(), basis[j]));
  }
  return out;
}

Poly normal_form(const Poly& p, const std::vector<Poly>& basis) {
  if (p.is_zero()) return p;
  std::vector<ModVec> b;
  b.reserve(basis.size());
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    require_same_ring(p.ring(), g.ring(), "normal_form");
    b.push_back(to_modvec(g));
  }
  return poly_from_modvec(p.ring(), normal_form(*p.ring(), to_modvec(p), b));
}

std::vector<Poly> normal_form(const std::vector<Poly>& v, const PolyMatrix& basis) {
  auto r = normal_form(*basis.ring(), to_modvec(v), columns_as_modvecs(basis));
  return from_modvec(basis.ring(), basis.rows(), r);
}

Submodule::Submodule(const PolyMatrix& gens, bool with_lift)
    : ring_(gens.ring()), rank_(gens.rows()), num_gens_(gens.cols()), with_lift_(with_lift) {
  if (!with_lift) {
    basis_ = reduced_groebner_basis(ring_, columns_as_modvecs(gens));
    return;
  }
  const Exponents one(ring_->num_vars(), 0);
  std::vector<ModVec> graph;
  graph.reserve(num_gens_);
  for (int j = 0; j < num_gens_; ++j) {
    ModVec v = to_modvec(gens.column(j));
    v.push_back({rank_ + j, one, Rational(1)});
    graph.push_back(std::move(v));
  }
  graph_basis_ = reduced_groebner_basis(ring_, std::move(graph));
  for (const auto& g : graph_basis_) {
    if (g.front().pos >= rank_) continue;
    ModVec top;
    for (const auto& t : g)
      if (t.pos < rank_) top.push_back(t);
    basis_.push_back(std::move(top));
  }
}

PolyMatrix Submodule::basis_matrix() const {
  PolyMatrix out(ring_, rank_, static_cast<int>(basis_.size()));
  for (std::size_t j = 0; j < basis_.size(); ++j) out.set_column(static_cast<int>(j), from_modvec(ring_, rank_, basis_[j]));
  return out;
}

std::vector<Poly> Submodule::reduce(const std::vector<Poly>& v) const {
  return from_modvec(ring_, rank_, normal_form(*ring_, to_modvec(v), basis_));
}

bool Submodule::contains(const std::vector<Poly>& v) const {
  return normal_form(*ring_, to_modvec(v), basis_).empty();
}

bool Submodule::contains_columns(const PolyMatrix& m) const {
  for (int j = 0; j < m.cols(); ++j)
    if (!contains(m.column(j))) return false;
  return true;
}

bool Submodule::is_everything() const {
  std::vector<bool> hit(rank_, false);
  for (const auto& b : basis_)
    if (is_constant_lead(b)) hit[b.front().pos] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
}

std::optional<std::vector<Poly>> Submodule::lift(const std::vector<Poly>& v) const {
  if (!with_lift_) throw Error(ErrorCode::PreconditionFailed, "Submodule built without lifting data");
  ModVec r = normal_form(*ring_, to_modvec(v), graph_basis_);
  std::vector<std::vector<Term>> coeffs(num_gens_);
  for (const auto& t : r) {
    if (t.pos < rank_) return std::nullopt;
    coeffs[t.pos - rank_].push_back({t.exp, -t.coef});
  }
  std::vector<Poly> out;
  out.reserve(num_gens_);
  for (auto& c : coeffs) out.push_back(Poly::from_terms(ring_, std::move(c)));
  return out;
}

PolyMatrix Submodule::syzygies() const {
  if (!with_lift_) throw Error(ErrorCode::PreconditionFailed, "Submodule built without lifting data");
  std::vector<std::vector<Poly>> cols;
  for (const auto& g : graph_basis_) {
    if (g.front().pos < rank_) continue;
    ModVec bottom;
    for (const auto& t : g) bottom.push_back({t.pos - rank_, t.exp, t.coef});
    cols.push_back(from_modvec(ring_, num_gens_, bottom));
  }
  return PolyMatrix::from_columns(ring_, num_gens_, cols);
}

PolyMatrix syzygies(const PolyMatrix& m) {
  if (m.cols() == 0) return PolyMatrix(m.ring(), 0, 0);
  return Submodule(m, true).syzygies();
}

std::optional<PolyMatrix> lift_matrix(const PolyMatrix& target, const PolyMatrix& gens) {
  if (target.rows() != gens.rows()) throw Error(ErrorCode::InvalidArgument, "lift_matrix: row mismatch");
  PolyMatrix out(gens.ring(), gens.cols(), target.cols());
  if (target.cols() == 0) return out;
  if (target.is_zero()) return out;
  Submodule sub(gens, true);
  for (int j = 0; j < target.cols(); ++j) {
    auto c = sub.lift(target.column(j));
    if (!c) return std::nullopt;
    out.set_column(j, *c);
  }
  return out;
}

Dimension dimension_from_leading_terms(const std::vector<Exponents>& leads, int num_vars) {
  for (const auto& e : leads)
    if (total_degree(e) == 0) return std::nullopt;
  std::vector<unsigned> supports;
  for (const auto& e : leads) {
    unsigned mask = 0;
    for (int i = 0; i < num_vars; ++i)
      if (e[i] > 0) mask |= 1u << i;
    supports.push_back(mask);
  }
  int best = 0;
  const unsigned full = num_vars >= 32 ? ~0u : (1u << num_vars);
  for (unsigned s = 0; s < full; ++s) {
    int size = __builtin_popcount(s);
    if (size <= best) continue;
    bool independent = true;
    for (unsigned m : supports) {
      if ((m & ~s) == 0) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

Dimension krull_dimension(const Ideal& ideal) {
  Ideal g = ideal.groebner();
  std::vector<Exponents> leads;
  for (const auto& p : g.generators()) leads.push_back(p.leading_exp());
  return dimension_from_leading_terms(leads, ideal.ring()->num_vars());
}

Codim Codim::of(const Dimension& dim, int ambient) {
  if (!dim) return infinite();
  return finite(ambient - *dim);
}

std::strong_ordering Codim::operator<=>(const Codim& other) const {
  if (infinite_ || other.infinite_) {
    if (infinite_ && other.infinite_) return std::strong_ordering::equal;
    return infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return value_ <=> other.value_;
}

namespace {

class MinorCache {
 public:
  explicit MinorCache(const PolyMatrix& m) : m_(m) {}

  // Determinant of the submatrix on the given row and column masks
  // (equal popcounts), expanded along the first selected row.
  const Poly& det(unsigned rows, unsigned cols) {
    std::uint64_t key = (static_cast<std::uint64_t>(rows) << 32) | cols;
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Poly result(m_.ring());
    if (rows == 0) {
      result = Poly::constant(m_.ring(), 1);
    } else {
      int r = __builtin_ctz(rows);
      unsigned rest = rows & (rows - 1);
      int sign = 1;
      for (int c = 0; c < m_.cols(); ++c) {
        if (!(cols & (1u << c))) continue;
        const Poly& a = m_(r, c);
        if (!a.is_zero()) {
          const Poly& sub = det(rest, cols & ~(1u << c));
          if (!sub.is_zero()) {
            if (sign > 0) result += a * sub; else result -= a * sub;
          }
        }
        sign = -sign;
      }
    }
    return cache_.emplace(key, std::move(result)).first->second;
  }

 private:
  const PolyMatrix& m_;
  std::unordered_map<std::uint64_t, Poly> cache_;
};

void subsets(int n, int k, unsigned start_mask, int start, std::vector<unsigned>& out) {
  if (k == 0) {
    out.push_back(start_mask);
    return;
  }
  for (int i = start; i <= n - k; ++i) subsets(n, k - 1, start_mask | (1u << i), i + 1, out);
}

}  // namespace

Poly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  if (m.rows() > 31) throw Error(ErrorCode::InvalidArgument, "matrix too large for determinant");
  MinorCache cache(m);
  unsigned all = m.rows() == 0 ? 0 : ((1u << m.rows()) - 1);
  return cache.det(all, all);
}

Ideal minors_ideal(const PolyMatrix& m, int t) {
  if (t <= 0) return Ideal::unit(m.ring());
  if (t > m.rows() || t > m.cols()) return Ideal::zero(m.ring());
  if (m.rows() > 31 || m.cols() > 31) throw Error(ErrorCode::InvalidArgument, "matrix too large for minors");
  MinorCache cache(m);
  std::vector<unsigned> row_sets, col_sets;
  subsets(m.rows(), t, 0, 0, row_sets);
  subsets(m.cols(), t, 0, 0, col_sets);
  std::vector<Poly> gens;
  for (unsigned rs : row_sets) {
    for (unsigned cs : col_sets) {
      Poly d = cache.det(rs, cs);
      if (d.is_zero()) continue;
      d = d.monic();
      if (std::find(gens.begin(), gens.end(), d) == gens.end()) gens.push_back(std::move(d));
    }
  }
  return Ideal(m.ring(), std::move(gens));
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal_sum");
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal_product");
  std::vector<Poly> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal_intersection");
  const RingPtr& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal::zero(ring);
  const int s = static_cast<int>(a.generators().size());
  const int t = static_cast<int>(b.generators().size());
  // Kernel of [[1, a_1..a_s, 0..0], [1, 0..0, b_1..b_t]]: first coordinates
  // are exactly the elements of the intersection.
  PolyMatrix m(ring, 2, 1 + s + t);
  m(0, 0) = Poly::constant(ring, 1);
  m(1, 0) = Poly::constant(ring, 1);
  for (int i = 0; i < s; ++i) m(0, 1 + i) = a.generators()[i];
  for (int j = 0; j < t; ++j) m(1, 1 + s + j) = b.generators()[j];
  PolyMatrix k = syzygies(m);
  std::vector<Poly> gens;
  for (int j = 0; j < k.cols(); ++j) gens.push_back(k(0, j));
  return Ideal(ring, std::move(gens)).groebner();
}

Ideal ideal_quotient(const Ideal& a, const Poly& f) {
  require_same_ring(a.ring(), f.ring(), "ideal_quotient");
  const RingPtr& ring = a.ring();
  if (f.is_zero()) return Ideal::unit(ring);
  if (a.is_zero()) return Ideal::zero(ring);
  const int s = static_cast<int>(a.generators().size());
  PolyMatrix m(ring, 1, 1 + s);
  m(0, 0) = f;
  for (int i = 0; i < s; ++i) m(0, 1 + i) = a.generators()[i];
  PolyMatrix k = syzygies(m);
  std::vector<Poly> gens;
  for (int j = 0; j < k.cols(); ++j) gens.push_back(k(0, j));
  return Ideal(ring, std::move(gens)).groebner();
}

Ideal saturation(const Ideal& a, const Poly& f) {
  Ideal current = a.groebner();
  while (true) {
    Ideal next = ideal_quotient(current, f);
    if (current.contains(next)) return current;
    current = next;
  }
}

Ideal saturation_by_elimination(const Ideal& a, const Poly& f) {
  require_same_ring(a.ring(), f.ring(), "saturation");
  const RingPtr& ring = a.ring();
  if (a.is_zero()) return Ideal::zero(ring);
  RingPtr ext = ring->with_eliminated_front_var("_t");
  std::vector<Poly> gens;
  for (const auto& g : a.generators()) gens.push_back(g.embed(ext, 1));
  Poly t = Poly::variable(ext, 0);
  gens.push_back(Poly::constant(ext, 1) - t * f.embed(ext, 1));
  std::vector<Poly> out;
  for (const auto& g : groebner_basis(ext, gens)) {
    if (g.leading_exp()[0] != 0) continue;
    std::vector<Term> terms;
    for (const auto& term : g.terms()) terms.push_back({Exponents(term.exp.begin() + 1, term.exp.end()), term.coef});
    out.push_back(Poly::from_terms(ring, std::move(terms)));
  }
  return Ideal(ring, std::move(out)).groebner();
}

bool radical_membership(const Poly& p, const Ideal& ideal) {
  require_same_ring(p.ring(), ideal.ring(), "radical_membership");
  if (p.is_zero()) return true;
  std::vector<std::string> names{"_t"};
  names.insert(names.end(), ideal.ring()->var_names().begin(), ideal.ring()->var_names().end());
  RingPtr ext = PolyRing::make(std::move(names), MonomialOrder::grevlex());
  std::vector<Poly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.embed(ext, 1));
  Poly t = Poly::variable(ext, 0);
  gens.push_back(Poly::constant(ext, 1) - t * p.embed(ext, 1));
  auto basis = groebner_basis(ext, gens);
  return basis.size() == 1 && basis[0].is_unit();
}

bool same_radical(const Ideal& a, const Ideal& b) {
  for (const auto& g : a.generators())
    if (!radical_membership(g, b)) return false;
  for (const auto& g : b.generators())
    if (!radical_membership(g, a)) return false;
  return true;
}

}  // namespace charloci
