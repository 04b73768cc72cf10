#include "charloci/intersection.hpp"

#include "charloci/errors.hpp"
#include "charloci/perversity.hpp"

namespace charloci {

namespace {

// Generators of Hom(M, R) inside R^g (as columns), with M = coker A.
PolyMatrix dual_generators(const FPModule& m) {
  const RingPtr& ring = m.ring();
  if (m.relations().cols() == 0) return PolyMatrix::identity(ring, m.num_generators());
  return syzygies(m.relations().transpose());
}

struct DoubleDual {
  PolyMatrix k;   // generators of M^* in R^g
  PolyMatrix k2;  // generators of M^** in R^{#k}
};

DoubleDual double_dual(const FPModule& m) {
  const RingPtr& ring = m.ring();
  DoubleDual out;
  out.k = dual_generators(m);
  FPModule dual(ring, out.k.cols(), out.k.cols() == 0 ? PolyMatrix(ring, 0, 0) : syzygies(out.k));
  out.k2 = dual_generators(dual);
  return out;
}

std::vector<CodimBound> bounds(const FreeComplex& c, const CharacterTorus* torus) {
  std::vector<CodimBound> out;
  for (const auto& e : support_profile(c, torus))
    if (e.degree >= 1) out.push_back({e.degree, e.codim, 2 * e.degree + 1});
  return out;
}

std::optional<CharacterTorus> torus_for(const ICInput& inp) {
  if (!inp.torus_mode) return std::nullopt;
  return CharacterTorus::on_ring(inp.module.ring());
}

}  // namespace

int ell(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "dimension must be nonnegative");
  return 2 * ((n + 4) / 4) - 1;
}

bool is_reflexive(const FPModule& m) {
  if (m.num_generators() == 0) return true;
  DoubleDual dd = double_dual(m);
  if (dd.k.cols() == 0) return m.is_zero();
  // Canonical map M -> M^** sends e_i to row i of k.
  PolyMatrix can = dd.k.transpose();
  PolyMatrix kernel = syzygies(can);
  if (kernel.cols() > 0) {
    if (m.relations().cols() == 0) return false;
    if (!Submodule(m.relations()).contains_columns(kernel)) return false;
  }
  if (dd.k2.cols() == 0) return true;
  return Submodule(can).contains_columns(dd.k2);
}

FPModule reflexive_hull(const FPModule& m) {
  const RingPtr& ring = m.ring();
  if (m.num_generators() == 0) return FPModule::free(ring, 0);
  DoubleDual dd = double_dual(m);
  if (dd.k2.cols() == 0) return FPModule::free(ring, 0);
  return prune(FPModule(ring, dd.k2.cols(), syzygies(dd.k2))).module;
}

std::vector<FreeComplex> intersection_stages(const ICInput& inp, int l) {
  if (inp.module.ring()->num_vars() != inp.ambient_dim)
    throw Error(ErrorCode::InvalidArgument, "module ring does not have ambient_dim variables");
  if (!is_reflexive(inp.module)) throw Error(ErrorCode::NotReflexive, "intersection complex needs a reflexive module");
  if (l < 1) throw Error(ErrorCode::InvalidArgument, "ell must be at least 1");
  std::vector<FreeComplex> stages;
  stages.push_back(prune(free_resolution(dual_module(inp.module))));
  for (int j = 1; j <= l; ++j) stages.push_back(prune(truncate_leq(dual(stages.back()), j - 1)));
  return stages;
}

FreeComplex intersection_complex(const ICInput& inp, std::optional<int> ell_override) {
  return intersection_stages(inp, ell_override.value_or(ell(inp.ambient_dim))).back();
}

bool ICReport::passed() const {
  if (!reflexive || !h0_matches || !m_perverse || !dual_h0_matches || !stable_under_ell_increase) return false;
  for (const auto& b : codim_bounds)
    if (!b.ok()) return false;
  for (const auto& b : dual_codim_bounds)
    if (!b.ok()) return false;
  return true;
}

ICReport ic_verify(const ICInput& inp, std::optional<int> ell_override) {
  ICReport report;
  const int l = ell_override.value_or(ell(inp.ambient_dim));
  std::vector<FreeComplex> stages;
  try {
    stages = intersection_stages(inp, l + 2);
  } catch (const Error& e) {
    report.error = e.what();
    return report;
  }
  report.reflexive = true;
  auto torus = torus_for(inp);
  const CharacterTorus* tp = torus ? &*torus : nullptr;
  const FreeComplex& ic = stages[l];
  report.complex = ic;
  report.h0_matches = isomorphic(cohomology_module(ic, 0), inp.module).isomorphic;
  report.codim_bounds = bounds(ic, tp);
  report.m_perverse = is_m_perverse(ic, tp);
  FreeComplex d = dual(ic);
  report.dual_h0_matches = isomorphic(cohomology_module(d, 0), dual_module(inp.module)).isomorphic;
  report.dual_codim_bounds = bounds(d, tp);
  report.stable_under_ell_increase = same_cohomology(ic, stages[l + 2]);
  return report;
}

}  // namespace charloci
