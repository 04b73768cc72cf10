#include "suites.hpp"

#include <sstream>

#include "charloci/errors.hpp"

namespace charloci::cli {

namespace {

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

void record(Json& checks, bool& ok, const std::string& name, bool passed, const std::string& detail) {
  checks.push_back(Json{{"name", name}, {"passed", passed}, {"detail", detail}});
  ok = ok && passed;
}

bool wants(const SuiteOptions& o, const char* suite) { return o.suite == "all" || o.suite == suite; }

// Rank-one data with every twist and monodromy scalar equal to +-1.
bool expected_arithmetic(const ObjectFile& f) {
  for (const auto& o : f.objects) {
    for (const auto& c : o.twist.coords)
      if (c != 1 && c != -1) return false;
    for (const auto& m : o.monodromy) {
      if (m.rows() != 1) return false;
      if (m(0, 0) != 1 && m(0, 0) != -1) return false;
    }
  }
  return true;
}

void base_change(const Document& doc, const SuiteOptions& opts, Json& checks, bool& ok) {
  FreeComplex c = doc.build();
  int bad = 0;
  std::string first;
  for (const auto& rho : sample_characters(doc.torus->n(), opts.samples, opts.seed, doc.special_values())) {
    auto lhs = nonzero(derived_fiber(c, rho));
    auto rhs = nonzero(doc.objects->oracle_fiber(rho));
    if (lhs != rhs) {
      if (bad++ == 0) first = " first at rho=" + point_text(rho);
    }
  }
  record(checks, ok, "base-change",
         bad == 0,
         "derived_fiber of the transform vs twisted_cohomology on " + std::to_string(opts.samples) +
             " characters: " + std::to_string(bad) + " mismatches" + first);
}

void loci_suite(const Document& doc, const SuiteOptions& opts, Json& checks, bool& ok) {
  FreeComplex c = doc.build();
  for (int k = c.lo(); k <= c.hi(); ++k)
    for (int m = 1; m <= 3; ++m) {
      auto r = sampled_oracle_check(c, k, m, *doc.torus, opts.samples, opts.seed, doc.special_values());
      record(checks, ok, "loci k=" + std::to_string(k) + " m=" + std::to_string(m), r.mismatches.empty(),
             "jump_locus membership vs fiber dimension >= m: " + std::to_string(r.mismatches.size()) +
                 " mismatches, " + std::to_string(r.members) + " members");
    }
}

void structure_suite(const Document& doc, Json& checks, bool& ok) {
  const Json& ex = doc.expect();
  if (!ex.value("structure", false)) return;
  FreeComplex c = doc.build();
  bool arithmetic = true;
  bool any = false;
  for (int k = c.lo(); k <= c.hi(); ++k) {
    auto locus = jump_locus(c, k, 1, *doc.torus);
    for (std::size_t i = 0; i < locus.components.size(); ++i) {
      auto dec = decompose_translated_subtori(locus.components[i], *doc.torus);
      bool verified = dec.certified && verify_decomposition(locus.components[i], dec.subtori, *doc.torus);
      record(checks, ok, "structure k=" + std::to_string(k) + " component " + std::to_string(i), verified,
             "S_1^k component as a finite union of translated subtori (" + dec.method + ", " +
                 std::to_string(dec.subtori.size()) + " cosets)");
      arithmetic = arithmetic && dec.arithmetic;
      any = true;
    }
  }
  if (!any) return;
  bool expected = expected_arithmetic(*doc.objects);
  record(checks, ok, "arithmetic", arithmetic == expected,
         std::string("torsion translates reported ") + (arithmetic ? "true" : "false") + ", expected " +
             (expected ? "true" : "false"));
}

void perversity_suite(const Document& doc, Json& checks, bool& ok) {
  const Json& ex = doc.expect();
  FreeComplex c = doc.build();
  const CharacterTorus* t = &*doc.torus;
  if (ex.contains("euler")) {
    long chi = euler_characteristic(c);
    record(checks, ok, "euler", chi == ex.at("euler").get<long>(),
           "euler_characteristic " + std::to_string(chi) + ", expected " + std::to_string(ex.at("euler").get<long>()));
  }
  if (ex.contains("perverse"))
    record(checks, ok, "m-perverse", is_m_perverse(c, t) == ex.at("perverse").get<bool>(),
           "membership in the heart of the m t-structure matches the expectation");
  if (ex.value("perverse", false))
    record(checks, ok, "euler nonnegative", euler_characteristic(c) >= 0, "perverse objects have chi >= 0");
  // The remaining checks concern transforms of perverse sheaves.
  if (!ex.value("normalized", false)) return;
  auto m = make_m(t->n());
  record(checks, ok, "shift +1 leaves geq", !in_geq(shift(c, 1), 0, m, t), "c[1] must fail in_geq(0, m)");
  record(checks, ok, "shift -1 leaves leq", !in_leq(shift(c, -1), 0, m, t), "c[-1] must fail in_leq(0, m)");
  for (int k = c.lo(); k <= c.hi(); ++k) {
    auto locus = jump_locus(c, k, 1, *t);
    for (const auto& comp : locus.components) {
      Codim cd = Codim::of(krull_dimension(comp), t->n());
      record(checks, ok, "codim bound k=" + std::to_string(k), cd.at_least(2 * std::abs(k)),
             "codim of S_1^k component >= |2k|");
      if (k != 0) record(checks, ok, "generic vanishing k=" + std::to_string(k), !comp.is_zero(), "S_1^k is proper");
    }
  }
  if (ex.contains("surprise")) {
    auto s = surprise_diagnostics(c, t);
    int r = ex.at("surprise").at("r").get<int>();
    int cd = ex.at("surprise").at("codim").get<int>();
    record(checks, ok, "least degree", s.r && *s.r == r && s.codim == Codim::finite(cd) && s.codim_is_2r,
           "least nonzero cohomology degree r with codim 2r");
  }
}

void ic_suite(const Document& doc, Json& checks, bool& ok) {
  auto rep = ic_verify(doc.ic->input);
  const Json& ex = doc.expect();
  record(checks, ok, "ic reflexive", rep.reflexive == ex.value("reflexive", true), rep.error);
  if (!rep.reflexive) return;
  record(checks, ok, "ic h0", rep.h0_matches, "H^0 of the intersection complex is the input module");
  record(checks, ok, "ic m-perverse", rep.m_perverse, "intersection complex is m-perverse");
  bool bounds = true;
  for (const auto& b : rep.codim_bounds) bounds = bounds && b.ok();
  record(checks, ok, "ic codim", bounds, "codim Supp H^i >= 2i+1 for i >= 1");
  record(checks, ok, "ic dual h0", rep.dual_h0_matches, "H^0 of the dual complex is Hom(M, R)");
  record(checks, ok, "ic stable", rep.stable_under_ell_increase, "ell and ell+2 runs agree in cohomology");
}

}  // namespace

FreeComplex Document::build() const {
  if (objects) return objects->complex();
  if (complex) return *complex;
  throw Error(ErrorCode::PreconditionFailed, "an IC input has no transform");
}

std::vector<Rational> Document::special_values() const {
  return objects ? objects->special_values() : std::vector<Rational>{};
}

const Json& Document::expect() const {
  static const Json empty = Json::object();
  if (objects) return objects->expect;
  if (ic) return ic->expect;
  return empty;
}

Document load_document(const std::string& path, std::optional<MonomialOrder> order, bool affine) {
  Document doc;
  doc.path = path;
  Json j = read_json_file(path);
  doc.kind = document_kind(j);
  switch (doc.kind) {
    case DocumentKind::Objects:
      doc.objects = object_file_from_json(j, order);
      doc.torus = doc.objects->torus;
      break;
    case DocumentKind::Complex: {
      doc.complex = complex_from_json(j, order);
      int n = doc.complex->ring()->num_vars();
      if (!affine && n > 0 && n % 2 == 0) doc.torus = CharacterTorus::on_ring(doc.complex->ring());
      break;
    }
    case DocumentKind::IC:
      doc.ic = ic_file_from_json(j, order);
      if (affine) doc.ic->input.torus_mode = false;
      break;
  }
  return doc;
}

bool run_suites(const Document& doc, const SuiteOptions& opts, Json& checks) {
  static const char* known[] = {"all", "base-change", "loci", "structure", "perversity", "ic"};
  if (std::find(std::begin(known), std::end(known), opts.suite) == std::end(known))
    throw Error(ErrorCode::InvalidArgument, "unknown suite '" + opts.suite + "'");
  bool ok = true;
  if (doc.ic) {
    if (wants(opts, "ic")) ic_suite(doc, checks, ok);
    return ok;
  }
  if (!doc.torus) throw Error(ErrorCode::PreconditionFailed, "suites need a complex over a character torus");
  if (doc.objects && wants(opts, "base-change")) base_change(doc, opts, checks, ok);
  if (wants(opts, "loci")) loci_suite(doc, opts, checks, ok);
  if (doc.objects && wants(opts, "structure")) structure_suite(doc, checks, ok);
  if (doc.objects && wants(opts, "perversity")) perversity_suite(doc, checks, ok);
  return ok;
}

}  // namespace charloci::cli
