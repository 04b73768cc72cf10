#include "charloci/perversity.hpp"

#include "charloci/errors.hpp"

namespace charloci {

namespace {

bool profile_leq(const SupportProfile& profile, int k, const SupportingFunction& p) {
  for (const auto& e : profile) {
    if (e.codim.is_infinite()) continue;
    if (p(e.codim.value()) < e.degree - k) return false;
  }
  return true;
}

void require_valid(const SupportingFunction& p, int n) {
  if (!is_valid_pair(p)) throw Error(ErrorCode::PreconditionFailed, "supporting function pair is not valid");
  if (p.n() < n) throw Error(ErrorCode::PreconditionFailed, "supporting function is too short for the ring");
}

}  // namespace

int SupportingFunction::operator()(int codim) const {
  if (codim < 0 || codim > n()) throw Error(ErrorCode::InvalidArgument, "codimension outside the supporting function");
  return values[codim];
}

SupportingFunction SupportingFunction::dual() const {
  SupportingFunction out;
  for (int c = 0; c <= n(); ++c) out.values.push_back(c - values[c]);
  return out;
}

bool SupportingFunction::is_supporting() const {
  for (int c = 0; c < n(); ++c)
    if (values[c + 1] < values[c]) return false;
  return true;
}

SupportingFunction make_m(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "n must be nonnegative");
  SupportingFunction p;
  for (int c = 0; c <= n; ++c) p.values.push_back(c / 2);
  return p;
}

SupportingFunction make_m_hat(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "n must be nonnegative");
  SupportingFunction p;
  for (int c = 0; c <= n; ++c) p.values.push_back((c + 1) / 2);
  return p;
}

bool is_valid_pair(const SupportingFunction& p) { return !p.values.empty() && p.is_supporting() && p.dual().is_supporting(); }

bool in_leq(const FreeComplex& c, int k, const SupportingFunction& p, const CharacterTorus* torus) {
  require_valid(p, c.ring()->num_vars());
  return profile_leq(support_profile(c, torus), k, p);
}

bool in_geq(const FreeComplex& c, int k, const SupportingFunction& p, const CharacterTorus* torus) {
  return in_leq(dual(c), -k, p.dual(), torus);
}

bool is_m_perverse(const FreeComplex& c, const CharacterTorus* torus) {
  auto m = make_m(c.ring()->num_vars());
  return in_leq(c, 0, m, torus) && in_geq(c, 0, m, torus);
}

SurpriseReport surprise_diagnostics(const FreeComplex& c, const CharacterTorus* torus) {
  const int n = c.ring()->num_vars();
  auto m = make_m(n);
  SupportProfile profile = support_profile(c, torus);
  if (!profile_leq(profile, 0, m) || !in_leq(dual(c), 0, m, torus))
    throw Error(ErrorCode::PreconditionFailed, "surprise_diagnostics needs c and its dual in the m-perverse D<=0");
  SurpriseReport report;
  for (const auto& e : profile) {
    if (e.codim.is_infinite()) continue;
    report.r = e.degree;
    report.codim = e.codim;
    report.codim_is_2r = e.codim == Codim::finite(2 * e.degree);
    if (torus) {
      auto dec = decompose_translated_subtori(e.annihilator, *torus);
      report.components = dec.subtori;
      report.equi_certified = dec.certified && !dec.subtori.empty() && report.codim_is_2r;
      for (const auto& t : dec.subtori)
        if (t.rank() != 2 * e.degree) report.equi_certified = false;
    }
    break;
  }
  return report;
}

PerversityReport perversity_report(const FreeComplex& c, const CharacterTorus* torus) {
  PerversityReport report;
  auto m = make_m(c.ring()->num_vars());
  report.profile = support_profile(c, torus);
  report.leq = profile_leq(report.profile, 0, m);
  report.geq = in_geq(c, 0, m, torus);
  report.heart = report.leq && report.geq;
  if (report.leq && in_leq(dual(c), 0, m, torus)) report.surprise = surprise_diagnostics(c, torus);
  return report;
}

}  // namespace charloci
