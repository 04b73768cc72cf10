#include "charloci/io.hpp"

#include <fstream>
#include <sstream>

#include "charloci/errors.hpp"

namespace charloci {

namespace {

Error schema_error(const std::string& what) { return Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw schema_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw schema_error(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

Rational rational_from_json(const Json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw schema_error("expected a rational number as integer or string");
}

Json rational_to_json(const Rational& q) { return to_string(q); }

Poly poly_from_json(const Json& v, const RingPtr& ring) {
  if (v.is_number_integer()) return Poly::constant(ring, Rational(v.get<long>()));
  if (!v.is_string()) throw schema_error("expected a polynomial string");
  return parse_poly(ring, v.get<std::string>());
}

PolyMatrix matrix_from_json(const Json& rows, const RingPtr& ring, int nrows, int ncols) {
  PolyMatrix m(ring, nrows, ncols);
  if (!rows.is_array() || static_cast<int>(rows.size()) != nrows)
    throw schema_error("matrix has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(nrows));
  for (int r = 0; r < nrows; ++r) {
    if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != ncols)
      throw schema_error("matrix row " + std::to_string(r) + " has the wrong length");
    for (int c = 0; c < ncols; ++c) m(r, c) = poly_from_json(rows[r][c], ring);
  }
  return m;
}

Json matrix_to_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

QMatrix qmatrix_from_json(const Json& rows) {
  if (!rows.is_array() || rows.empty()) throw schema_error("monodromy matrix must be a nonempty array of rows");
  const int n = static_cast<int>(rows.size());
  QMatrix m(n, n);
  for (int r = 0; r < n; ++r) {
    if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != n)
      throw schema_error("monodromy matrix must be square");
    for (int c = 0; c < n; ++c) m(r, c) = rational_from_json(rows[r][c]);
  }
  return m;
}

Json qmatrix_to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(rational_to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

std::string serial_order_name(const MonomialOrder& o) {
  switch (o.kind) {
    case OrderKind::Lex:
      return "lex";
    case OrderKind::GrevLex:
      return "grevlex";
    default:
      throw Error(ErrorCode::InvalidArgument, "only grevlex and lex rings can be serialized");
  }
}

CharacterPoint point_from_json(const Json& v, int n) {
  if (!v.is_array() || static_cast<int>(v.size()) != n)
    throw schema_error("character point must have " + std::to_string(n) + " coordinates");
  std::vector<Rational> c;
  for (const auto& x : v) c.push_back(rational_from_json(x));
  return CharacterPoint(c);
}

Json point_to_json(const CharacterPoint& p) {
  Json out = Json::array();
  for (const auto& c : p.coords) out.push_back(rational_to_json(c));
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
    int line = 1, column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("malformed JSON", line, column);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

MonomialOrder order_from_name(const std::string& name) {
  if (name == "grevlex") return MonomialOrder::grevlex();
  if (name == "lex") return MonomialOrder::lex();
  throw Error(ErrorCode::InvalidArgument, "unknown monomial order '" + name + "'");
}

Json ring_to_json(const RingPtr& ring) {
  Json j;
  j["vars"] = ring->var_names();
  j["order"] = serial_order_name(ring->order());
  return j;
}

RingPtr ring_from_json(const Json& j) {
  const Json& vars = field(j, "vars");
  if (!vars.is_array()) throw schema_error("ring vars must be an array");
  std::string order = j.contains("order") ? j.at("order").get<std::string>() : "grevlex";
  return PolyRing::make(vars.get<std::vector<std::string>>(), order_from_name(order));
}

Json complex_to_json(const FreeComplex& c) {
  Json j;
  j["ring"] = ring_to_json(c.ring());
  j["lo"] = c.lo();
  j["hi"] = c.hi();
  Json ranks = Json::object();
  for (int d = c.lo(); d <= c.hi(); ++d) ranks[std::to_string(d)] = c.rank(d);
  j["ranks"] = ranks;
  Json diffs = Json::object();
  for (int d = c.lo(); d < c.hi(); ++d) diffs[std::to_string(d)] = matrix_to_json(c.differential(d));
  j["differentials"] = diffs;
  return j;
}

FreeComplex complex_from_json(const Json& j, std::optional<MonomialOrder> order) {
  RingPtr ring = ring_from_json(field(j, "ring"));
  if (order) ring = ring->with_order(*order);
  const int lo = int_field(j, "lo");
  const int hi = int_field(j, "hi");
  const Json& ranks = field(j, "ranks");
  const Json diffs = j.contains("differentials") ? j.at("differentials") : Json::object();
  std::vector<int> r;
  for (int d = lo; d <= hi; ++d) {
    std::string key = std::to_string(d);
    r.push_back(ranks.contains(key) ? ranks.at(key).get<int>() : 0);
  }
  std::vector<PolyMatrix> m;
  for (int d = lo; d < hi; ++d) {
    std::string key = std::to_string(d);
    int rows = r[d + 1 - lo], cols = r[d - lo];
    if (diffs.contains(key))
      m.push_back(matrix_from_json(diffs.at(key), ring, rows, cols));
    else
      m.emplace_back(ring, rows, cols);
  }
  return FreeComplex(ring, lo, r, m);
}

Json object_to_json(const LocalSystemObject& o) {
  Json j;
  j["id"] = o.id;
  j["h"] = o.h;
  j["rank"] = o.rank;
  j["embedding"] = o.h == 0 ? Json::array() : Json(o.embedding);
  Json mono = Json::array();
  for (const auto& m : o.monodromy) mono.push_back(qmatrix_to_json(m));
  j["monodromy"] = mono;
  j["twist"] = point_to_json(o.twist);
  j["shift"] = o.shift;
  return j;
}

LocalSystemObject object_from_json(const Json& j, const CharacterTorus& torus) {
  LocalSystemObject o;
  o.torus = torus;
  o.id = j.contains("id") ? j.at("id").get<std::string>() : "";
  o.h = int_field(j, "h");
  const Json& emb = field(j, "embedding");
  if (o.h == 0 && emb.empty()) {
    o.embedding.assign(torus.n(), IntVector{});
  } else {
    o.embedding = emb.get<IntMatrix>();
  }
  for (const auto& m : field(j, "monodromy")) o.monodromy.push_back(qmatrix_from_json(m));
  if (!o.monodromy.empty())
    o.rank = o.monodromy.front().rows();
  else
    o.rank = j.contains("rank") ? j.at("rank").get<int>() : 1;
  if (j.contains("rank") && j.at("rank").get<int>() != o.rank)
    throw schema_error("object " + o.id + ": rank does not match the monodromy size");
  o.twist = j.contains("twist") ? point_from_json(j.at("twist"), torus.n()) : CharacterPoint::trivial(torus.n());
  o.shift = j.contains("shift") ? j.at("shift").get<int>() : 0;
  o.validate();
  return o;
}

FreeComplex ObjectFile::complex() const {
  FreeComplex c = transform_sum(ElementaryComplex{torus, objects});
  if (!cone_multiplier) return c;
  ChainMap f{c, c, {}};
  for (int d = c.lo(); d <= c.hi(); ++d) f.components[d] = PolyMatrix::identity(torus.ring(), c.rank(d)).scaled(*cone_multiplier);
  return cone(f);
}

std::map<int, int> ObjectFile::oracle_fiber(const CharacterPoint& rho) const {
  std::map<int, int> total;
  for (const auto& o : objects)
    for (auto [k, d] : twisted_cohomology(o, rho)) total[k] += d;
  if (!cone_multiplier) return total;
  std::map<int, int> out;
  if (!is_zero(cone_multiplier->evaluate(rho.coords))) return out;
  for (auto [k, d] : total) {
    out[k] += d;
    out[k - 1] += d;
  }
  return out;
}

std::vector<Rational> ObjectFile::special_values() const {
  std::vector<Rational> out;
  auto add = [&](const Rational& q) {
    if (is_zero(q)) return;
    for (const Rational& v : {q, Rational(1 / q)})
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  };
  for (const auto& o : objects) {
    for (const auto& c : o.twist.coords) add(c);
    for (const auto& m : o.monodromy)
      for (int i = 0; i < m.rows(); ++i) add(m(i, i));
  }
  if (cone_multiplier) {
    // Roots of multipliers that are linear in one variable.
    const auto& terms = cone_multiplier->terms();
    if (terms.size() == 2 && total_degree(terms[0].exp) == 1 && total_degree(terms[1].exp) == 0)
      add(-terms[1].coef / terms[0].coef);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ObjectFile object_file_from_json(const Json& j, std::optional<MonomialOrder> order) {
  ObjectFile f;
  f.name = j.contains("name") ? j.at("name").get<std::string>() : "";
  const int g = int_field(j, "g");
  if (g < 0) throw schema_error("g must be nonnegative");
  f.torus = CharacterTorus(g, order.value_or(MonomialOrder::grevlex()));
  for (const auto& o : field(j, "objects")) f.objects.push_back(object_from_json(o, f.torus));
  if (j.contains("cone")) f.cone_multiplier = poly_from_json(field(j.at("cone"), "multiplier"), f.torus.ring());
  if (j.contains("expect")) f.expect = j.at("expect");
  return f;
}

Json object_file_to_json(const ObjectFile& f) {
  Json j;
  j["name"] = f.name;
  j["g"] = f.torus.g();
  Json objs = Json::array();
  for (const auto& o : f.objects) objs.push_back(object_to_json(o));
  j["objects"] = objs;
  if (f.cone_multiplier) j["cone"] = Json{{"multiplier", to_string(*f.cone_multiplier)}};
  j["expect"] = f.expect;
  return j;
}

ICFile ic_file_from_json(const Json& j, std::optional<MonomialOrder> order) {
  ICFile f;
  f.name = j.contains("name") ? j.at("name").get<std::string>() : "";
  RingPtr ring = ring_from_json(field(j, "ring"));
  if (order) ring = ring->with_order(*order);
  const int gens = int_field(j, "generators");
  const Json& rel = field(j, "relations");
  int cols = rel.empty() ? 0 : static_cast<int>(rel.at(0).size());
  f.input.module = FPModule(ring, gens, matrix_from_json(rel, ring, gens, cols));
  f.input.ambient_dim = ring->num_vars();
  f.input.torus_mode = j.contains("torus_mode") && j.at("torus_mode").get<bool>();
  if (j.contains("expect")) f.expect = j.at("expect");
  return f;
}

Json ic_file_to_json(const ICFile& f) {
  Json j;
  j["name"] = f.name;
  j["ring"] = ring_to_json(f.input.module.ring());
  j["torus_mode"] = f.input.torus_mode;
  j["generators"] = f.input.module.num_generators();
  j["relations"] = matrix_to_json(f.input.module.relations());
  j["expect"] = f.expect;
  return j;
}

DocumentKind document_kind(const Json& j) {
  if (j.is_object() && j.contains("objects")) return DocumentKind::Objects;
  if (j.is_object() && j.contains("differentials")) return DocumentKind::Complex;
  if (j.is_object() && j.contains("relations")) return DocumentKind::IC;
  throw schema_error("input is neither an object file, a complex nor an IC input");
}

Json codim_to_json(const Codim& c) { return c.is_infinite() ? Json(nullptr) : Json(c.value()); }

Json subtorus_to_json(const TranslatedSubtorus& t) {
  Json values = Json::array();
  for (const auto& v : t.values) values.push_back(rational_to_json(v));
  return Json{{"basis", t.basis.empty() ? Json::array() : Json(t.basis)}, {"values", values}};
}

Json profile_to_json(const SupportProfile& p) {
  Json out = Json::array();
  for (const auto& e : p) out.push_back(Json{{"degree", e.degree}, {"codim", codim_to_json(e.codim)}});
  return out;
}

Json fiber_to_json(const std::map<int, int>& dims) {
  Json out = Json::object();
  for (auto [k, d] : dims) out[std::to_string(k)] = d;
  return out;
}

Json locus_report_to_json(const JumpLocus& locus, const CharacterTorus& torus) {
  Json comps = Json::array();
  bool certified = true;
  for (const auto& c : locus.components) {
    Json gens = Json::array();
    Ideal gb = c.groebner();
    for (const auto& g : gb.generators()) gens.push_back(to_string(g));
    DecompositionReport dec = decompose_translated_subtori(c, torus);
    Json entry{{"generators", gens}, {"codim", codim_to_json(Codim::of(krull_dimension(c), torus.n()))}};
    if (dec.certified) {
      Json subs = Json::array();
      for (const auto& t : dec.subtori) subs.push_back(subtorus_to_json(t));
      entry["subtori"] = subs;
      entry["arithmetic"] = dec.arithmetic;
    }
    certified = certified && dec.certified;
    comps.push_back(entry);
  }
  return Json{{"k", locus.k}, {"m", locus.m}, {"components", comps}, {"certified", certified}};
}

Json oracle_report_to_json(const OracleReport& r) {
  Json mism = Json::array();
  for (const auto& p : r.mismatches) mism.push_back(point_to_json(p));
  return Json{{"k", r.k},          {"m", r.m},             {"seed", r.seed},
              {"samples", r.samples}, {"members", r.members}, {"mismatches", mism}};
}

Json perversity_report_to_json(const PerversityReport& r) {
  Json j{{"leq", r.leq}, {"geq", r.geq}, {"heart", r.heart}, {"profile", profile_to_json(r.profile)}};
  if (r.surprise) {
    const auto& s = *r.surprise;
    j["surprise"] = Json{{"r", s.r ? Json(*s.r) : Json(nullptr)},
                         {"codim", codim_to_json(s.codim)},
                         {"equi_certified", s.equi_certified}};
  }
  return j;
}

Json ic_report_to_json(const ICReport& r) {
  auto bounds = [](const std::vector<CodimBound>& v) {
    Json out = Json::array();
    for (const auto& b : v)
      out.push_back(Json{{"i", b.i}, {"codim", codim_to_json(b.codim)}, {"required", b.required}});
    return out;
  };
  Json j{{"h0_matches", r.h0_matches},
         {"codim_bounds", bounds(r.codim_bounds)},
         {"m_perverse", r.m_perverse},
         {"stable_under_ell_increase", r.stable_under_ell_increase},
         {"dual_h0_matches", r.dual_h0_matches},
         {"dual_codim_bounds", bounds(r.dual_codim_bounds)},
         {"reflexive", r.reflexive},
         {"passed", r.passed()}};
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

}  // namespace charloci
