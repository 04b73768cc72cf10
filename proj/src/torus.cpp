#include "charloci/torus.hpp"

#include <cstdlib>

#include "charloci/errors.hpp"

namespace charloci {

CharacterTorus::CharacterTorus(int g, MonomialOrder order) : g_(g) {
  if (g < 0) throw Error(ErrorCode::InvalidArgument, "torus dimension must be nonnegative");
  ring_ = PolyRing::standard(2 * g, order);
  Exponents all(2 * g, 1);
  unit_ = Poly::monomial(ring_, all);
}

CharacterTorus CharacterTorus::on_ring(RingPtr ring) {
  if (ring->num_vars() % 2 != 0)
    throw Error(ErrorCode::TorusMismatch, "a character torus needs an even number of variables");
  CharacterTorus t;
  t.g_ = ring->num_vars() / 2;
  t.ring_ = std::move(ring);
  t.unit_ = Poly::monomial(t.ring_, Exponents(t.ring_->num_vars(), 1));
  return t;
}

CharacterPoint::CharacterPoint(std::vector<Rational> c) : coords(std::move(c)) {
  for (const auto& x : coords)
    if (is_zero(x)) throw Error(ErrorCode::ZeroValue, "character coordinates must be nonzero");
}

CharacterPoint CharacterPoint::inverse() const {
  CharacterPoint out = *this;
  for (auto& x : out.coords) x = 1 / x;
  return out;
}

CharacterPoint CharacterPoint::operator*(const CharacterPoint& other) const {
  if (size() != other.size()) throw Error(ErrorCode::TorusMismatch, "character points of different rank");
  CharacterPoint out = *this;
  for (int i = 0; i < size(); ++i) out.coords[i] *= other.coords[i];
  return out;
}

Rational CharacterPoint::power(const IntVector& v) const {
  Rational r(1);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) r *= pow(coords.at(i), static_cast<long>(v[i]));
  return r;
}

bool TranslatedSubtorus::primitive() const {
  if (basis.empty()) return true;
  auto snf = smith_normal_form(basis);
  if (static_cast<int>(snf.invariants.size()) != rank()) return false;
  for (long long d : snf.invariants)
    if (d != 1) return false;
  return true;
}

bool TranslatedSubtorus::contains(const CharacterPoint& p) const {
  for (int j = 0; j < rank(); ++j)
    if (p.power(basis[j]) != values[j]) return false;
  return true;
}

namespace {

IntMatrix identity(int n) {
  IntMatrix m(n, IntVector(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void row_axpy(IntMatrix& m, int dst, int src, long long q) {
  for (std::size_t j = 0; j < m[dst].size(); ++j) m[dst][j] -= q * m[src][j];
}

void col_axpy(IntMatrix& m, int dst, int src, long long q) {
  for (auto& row : m) row[dst] -= q * row[src];
}

void swap_cols(IntMatrix& m, int a, int b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const int m = static_cast<int>(a.size());
  const int n = m == 0 ? 0 : static_cast<int>(a[0].size());
  SmithForm s{a, identity(m), identity(n), {}};
  IntMatrix& d = s.d;
  for (int t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // Smallest nonzero entry of the remaining block becomes the pivot.
      int pi = -1, pj = -1;
      for (int i = t; i < m; ++i)
        for (int j = t; j < n; ++j)
          if (d[i][j] != 0 && (pi < 0 || std::llabs(d[i][j]) < std::llabs(d[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) goto done;
      std::swap(d[t], d[pi]);
      std::swap(s.u[t], s.u[pi]);
      swap_cols(d, t, pj);
      swap_cols(s.v, t, pj);
      bool clean = true;
      for (int i = t + 1; i < m; ++i) {
        long long q = d[i][t] / d[t][t];
        if (q != 0) {
          row_axpy(d, i, t, q);
          row_axpy(s.u, i, t, q);
        }
        if (d[i][t] != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        long long q = d[t][j] / d[t][t];
        if (q != 0) {
          col_axpy(d, j, t, q);
          col_axpy(s.v, j, t, q);
        }
        if (d[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      int bad = -1;
      for (int i = t + 1; i < m && bad < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (d[i][j] % d[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      row_axpy(d, t, bad, -1);
      row_axpy(s.u, t, bad, -1);
    }
    if (d[t][t] < 0) {
      for (auto& x : d[t]) x = -x;
      for (auto& x : s.u[t]) x = -x;
    }
    s.invariants.push_back(d[t][t]);
  }
done:
  return s;
}

IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t m = a.size(), k = b.size(), n = b.empty() ? 0 : b[0].size();
  IntMatrix out(m, IntVector(n, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t l = 0; l < k; ++l)
      if (a[i][l] != 0)
        for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][l] * b[l][j];
  return out;
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  // u a v = I, so a^{-1} = v u.
  auto s = smith_normal_form(a);
  for (long long d : s.invariants)
    if (d != 1) throw Error(ErrorCode::NonInvertible, "matrix is not unimodular");
  if (static_cast<int>(s.invariants.size()) != static_cast<int>(a.size()))
    throw Error(ErrorCode::NonInvertible, "matrix is not unimodular");
  return int_multiply(s.v, s.u);
}

Ideal saturate_at_units(const Ideal& ideal, const CharacterTorus& torus) {
  require_same_ring(ideal.ring(), torus.ring(), "saturate_at_units");
  if (torus.n() == 0) return ideal.groebner();
  return saturation(ideal, torus.unit_monomial());
}

Ideal subtorus_ideal(const TranslatedSubtorus& t, const CharacterTorus& torus) {
  if (t.n != torus.n()) throw Error(ErrorCode::TorusMismatch, "subtorus and torus have different rank");
  std::vector<Poly> gens;
  for (int j = 0; j < t.rank(); ++j) {
    if (is_zero(t.values[j])) throw Error(ErrorCode::ZeroValue, "subtorus value is zero");
    Exponents plus(t.n, 0), minus(t.n, 0);
    for (int i = 0; i < t.n; ++i) {
      if (t.basis[j][i] > 0) plus[i] = static_cast<int>(t.basis[j][i]);
      if (t.basis[j][i] < 0) minus[i] = static_cast<int>(-t.basis[j][i]);
    }
    gens.push_back(Poly::monomial(torus.ring(), plus) - Poly::monomial(torus.ring(), minus, t.values[j]));
  }
  return saturate_at_units(Ideal(torus.ring(), gens), torus);
}

bool torsion_check(const TranslatedSubtorus& t, int max_order) {
  if (max_order < 1) throw Error(ErrorCode::InvalidArgument, "max_order must be at least 1");
  for (const auto& c : t.values) {
    if (c == 1) continue;
    if (c == -1 && max_order >= 2) continue;
    return false;
  }
  return true;
}

LaurentImage RingMap::apply(const Poly& p) const {
  return substitute_laurent(p, target, std::vector<Rational>(images.size(), Rational(1)), images);
}

RingMap restriction_substitution(const LatticeSurjection& f, const CharacterTorus& source,
                                 const CharacterTorus& target) {
  const int rows = 2 * f.target_g, cols = 2 * f.source_g;
  if (source.g() != f.source_g || target.g() != f.target_g)
    throw Error(ErrorCode::TorusMismatch, "lattice map does not match the tori");
  if (static_cast<int>(f.matrix.size()) != rows)
    throw Error(ErrorCode::InvalidArgument, "lattice map has the wrong number of rows");
  for (const auto& r : f.matrix)
    if (static_cast<int>(r.size()) != cols) throw Error(ErrorCode::InvalidArgument, "ragged lattice map");
  auto snf = smith_normal_form(f.matrix);
  bool onto = static_cast<int>(snf.invariants.size()) == rows;
  for (long long d : snf.invariants) onto = onto && d == 1;
  if (!onto) throw Error(ErrorCode::NotSurjective, "lattice map is not surjective over Z");
  RingMap map{source.ring(), target.ring(), {}};
  for (int i = 0; i < cols; ++i) {
    std::vector<int> col(rows);
    for (int r = 0; r < rows; ++r) col[r] = static_cast<int>(f.matrix[r][i]);
    map.images.push_back(std::move(col));
  }
  return map;
}

}  // namespace charloci
