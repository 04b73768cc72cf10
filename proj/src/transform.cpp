#include "charloci/transform.hpp"

#include <bit>

#include "charloci/errors.hpp"

namespace charloci {

namespace {

IntVector positive_part(const IntVector& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] > 0 ? v[i] : 0;
  return out;
}

Exponents to_exponents(const IntVector& v) { return Exponents(v.begin(), v.end()); }

QMatrix scaled(const QMatrix& m, const Rational& c) {
  QMatrix out = m;
  for (int r = 0; r < m.rows(); ++r)
    for (int col = 0; col < m.cols(); ++col) out(r, col) *= c;
  return out;
}

// Koszul cohomology dimensions of commuting operators on Q^rank; degree p
// is Lambda^p Q^r (x) Q^rank with subsets encoded as bitmasks.
std::vector<int> koszul_dims(const std::vector<QMatrix>& ops, int rank) {
  const int r = static_cast<int>(ops.size());
  std::vector<std::vector<unsigned>> masks(r + 1);
  for (unsigned m = 0; m < (1u << r); ++m) masks[std::popcount(m)].push_back(m);
  std::vector<int> rk(r + 2, 0);  // rk[p] = rank of the map leaving degree p
  for (int p = 0; p < r; ++p) {
    const auto& src = masks[p];
    const auto& dst = masks[p + 1];
    std::map<unsigned, int> index;
    for (std::size_t i = 0; i < dst.size(); ++i) index[dst[i]] = static_cast<int>(i);
    QMatrix d(static_cast<int>(dst.size()) * rank, static_cast<int>(src.size()) * rank);
    for (std::size_t a = 0; a < src.size(); ++a) {
      for (int j = 0; j < r; ++j) {
        if (src[a] & (1u << j)) continue;
        int b = index.at(src[a] | (1u << j));
        bool negate = std::popcount(src[a] & ((1u << j) - 1)) % 2 != 0;
        for (int u = 0; u < rank; ++u)
          for (int v = 0; v < rank; ++v) {
            Rational e = ops[j](u, v);
            d(b * rank + u, static_cast<int>(a) * rank + v) = negate ? Rational(-e) : e;
          }
      }
    }
    rk[p + 1] = d.rank();
  }
  std::vector<int> dims;
  for (int p = 0; p <= r; ++p) {
    int dim = static_cast<int>(masks[p].size()) * rank;
    dims.push_back(dim - rk[p + 1] - rk[p]);
  }
  return dims;
}

}  // namespace

IntVector LocalSystemObject::column(int j) const {
  IntVector out;
  for (const auto& row : embedding) out.push_back(row[j]);
  return out;
}

void LocalSystemObject::validate() const {
  const int n = torus.n();
  if (h < 0 || h > torus.g()) throw Error(ErrorCode::InvalidArgument, "subtorus dimension out of range");
  if (rank < 1) throw Error(ErrorCode::InvalidArgument, "local system rank must be positive");
  if (static_cast<int>(embedding.size()) != n)
    throw Error(ErrorCode::InvalidArgument, "embedding must have one row per torus coordinate");
  for (const auto& row : embedding)
    if (static_cast<int>(row.size()) != sub_rank())
      throw Error(ErrorCode::InvalidArgument, "embedding must have 2h columns");
  if (h > 0) {
    IntMatrix cols;
    for (int j = 0; j < sub_rank(); ++j) cols.push_back(column(j));
    if (static_cast<int>(smith_normal_form(cols).invariants.size()) != sub_rank())
      throw Error(ErrorCode::InvalidArgument, "embedding columns are linearly dependent");
  }
  if (static_cast<int>(monodromy.size()) != sub_rank())
    throw Error(ErrorCode::InvalidArgument, "need one monodromy matrix per subtorus generator");
  for (const auto& m : monodromy) {
    if (m.rows() != rank || m.cols() != rank)
      throw Error(ErrorCode::InvalidArgument, "monodromy matrix has the wrong size");
    if (m.rank() != rank) throw Error(ErrorCode::NonInvertible, "monodromy matrix is singular");
  }
  for (std::size_t a = 0; a < monodromy.size(); ++a)
    for (std::size_t b = a + 1; b < monodromy.size(); ++b)
      if (!(monodromy[a] * monodromy[b] == monodromy[b] * monodromy[a]))
        throw Error(ErrorCode::NonCommuting,
                    "monodromy matrices " + std::to_string(a) + " and " + std::to_string(b) + " do not commute");
  if (twist.size() != n) throw Error(ErrorCode::TorusMismatch, "twist has the wrong number of coordinates");
}

LocalSystemObject LocalSystemObject::constant_sheaf(const CharacterTorus& torus, int shift) {
  LocalSystemObject o;
  o.id = "constant";
  o.torus = torus;
  o.h = torus.g();
  const int n = torus.n();
  o.embedding.assign(n, IntVector(n, 0));
  for (int i = 0; i < n; ++i) o.embedding[i][i] = 1;
  o.monodromy.assign(n, QMatrix::identity(1));
  o.twist = CharacterPoint::trivial(n);
  o.shift = shift;
  return o;
}

LocalSystemObject LocalSystemObject::skyscraper(const CharacterTorus& torus, int rank, int shift) {
  LocalSystemObject o;
  o.id = "skyscraper";
  o.torus = torus;
  o.embedding.assign(torus.n(), IntVector{});
  o.rank = rank;
  o.twist = CharacterPoint::trivial(torus.n());
  o.shift = shift;
  return o;
}

FreeComplex mellin_transform(const LocalSystemObject& obj) {
  obj.validate();
  const RingPtr& ring = obj.torus.ring();
  std::vector<PolyMatrix> ops;
  for (int j = 0; j < obj.sub_rank(); ++j) {
    IntVector iota = obj.column(j);
    IntVector neg(iota.size());
    for (std::size_t i = 0; i < iota.size(); ++i) neg[i] = iota[i] < 0 ? -iota[i] : 0;
    // rho_j c^iota x^iota - 1, multiplied through by the unit x^{iota-}.
    Rational c = obj.twist.power(iota);
    Poly plus = Poly::monomial(ring, to_exponents(positive_part(iota)));
    Poly minus = Poly::monomial(ring, to_exponents(neg));
    PolyMatrix t(ring, obj.rank, obj.rank);
    for (int u = 0; u < obj.rank; ++u)
      for (int v = 0; v < obj.rank; ++v) {
        Poly e = plus * (obj.monodromy[j](u, v) * c);
        if (u == v) e -= minus;
        t(u, v) = e;
      }
    ops.push_back(std::move(t));
  }
  return koszul_complex(ring, ops, obj.rank, -obj.shift);
}

std::map<int, int> twisted_cohomology(const LocalSystemObject& obj, const CharacterPoint& rho) {
  obj.validate();
  if (rho.size() != obj.torus.n()) throw Error(ErrorCode::TorusMismatch, "character point has the wrong size");
  CharacterPoint c = obj.twist * rho;
  std::vector<QMatrix> ops;
  for (int j = 0; j < obj.sub_rank(); ++j)
    ops.push_back(scaled(obj.monodromy[j], c.power(obj.column(j))) - QMatrix::identity(obj.rank));
  std::vector<int> dims = koszul_dims(ops, obj.rank);
  std::map<int, int> out;
  for (std::size_t p = 0; p < dims.size(); ++p) out[static_cast<int>(p) - obj.shift] = dims[p];
  return out;
}

LocalSystemObject verdier_dual(const LocalSystemObject& obj) {
  obj.validate();
  LocalSystemObject out = obj;
  out.id = obj.id.empty() ? obj.id : obj.id + "-dual";
  for (auto& m : out.monodromy) m = m.inverse().transpose();
  out.twist = obj.twist.inverse();
  out.shift = obj.sub_rank() - obj.shift;
  return out;
}

FreeComplex transform_sum(const ElementaryComplex& e) {
  FreeComplex total = FreeComplex::zero(e.torus.ring());
  for (const auto& obj : e.summands) {
    if (!(obj.torus == e.torus)) throw Error(ErrorCode::TorusMismatch, "summand " + obj.id + " is on another torus");
    total = direct_sum(total, mellin_transform(obj));
  }
  return total;
}

}  // namespace charloci
