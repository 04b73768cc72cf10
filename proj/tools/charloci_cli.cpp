#include <iostream>

#include "CLI11.hpp"
#include "charloci/errors.hpp"
#include "suites.hpp"

using namespace charloci;
using charloci::cli::Document;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kVerificationFailed = 2;

struct Common {
  std::string order = "grevlex";
  std::string output = "json";
  std::string field = "q";
  bool affine = false;
};

void print_text(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) print_text(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) print_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << j.dump() << "\n";
  }
}

void emit(const Json& j, const Common& common) {
  if (common.output == "text")
    print_text(j, "", std::cout);
  else
    std::cout << j.dump(2) << "\n";
}

CharacterPoint parse_point(const std::string& text, int n) {
  std::vector<Rational> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) coords.push_back(parse_rational(item));
  if (static_cast<int>(coords.size()) != n)
    throw Error(ErrorCode::TorusMismatch, "point has " + std::to_string(coords.size()) + " coordinates, expected " +
                                              std::to_string(n));
  return CharacterPoint(coords);
}

Document load(const std::string& path, const Common& common) {
  return cli::load_document(path, order_from_name(common.order), common.affine);
}

const CharacterTorus& need_torus(const Document& doc) {
  if (!doc.torus) throw Error(ErrorCode::PreconditionFailed, doc.path + " is not over a character torus");
  return *doc.torus;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomology support loci, perverse coherent t-structures and intersection complexes"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--order", common.order, "Monomial order")->check(CLI::IsMember({"grevlex", "lex"}));
  app.add_option("--output", common.output, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--field", common.field, "Coefficient field (only q)")->check(CLI::IsMember({"q"}));
  app.add_flag("--affine", common.affine, "Measure supports in affine space, without inverting units");

  std::string file;
  std::vector<std::string> files;
  int k = 0, m = 1, samples = 0;
  std::uint64_t seed = 0;
  std::string point, suite = "all";
  std::optional<int> ell_override;

  auto* transform = app.add_subcommand("transform", "Print the transform of an object file as a complex");
  transform->add_option("file", file)->required()->check(CLI::ExistingFile);

  auto* fiber = app.add_subcommand("fiber", "Fiber cohomology dimensions at a character");
  fiber->add_option("file", file)->required()->check(CLI::ExistingFile);
  fiber->add_option("--point", point, "Comma separated coordinates, e.g. 1,1/2")->required();

  auto* loci = app.add_subcommand("loci", "Jump locus S_m^k with decomposition into translated subtori");
  loci->add_option("file", file)->required()->check(CLI::ExistingFile);
  loci->add_option("--k", k)->required();
  loci->add_option("--m", m)->check(CLI::PositiveNumber);
  loci->add_option("--samples", samples, "Cross-check against fibers at sampled characters")->check(CLI::NonNegativeNumber);
  auto* loci_seed = loci->add_option("--seed", seed);

  auto* perversity = app.add_subcommand("perversity", "Membership in the m-perverse t-structure");
  perversity->add_option("file", file)->required()->check(CLI::ExistingFile);

  auto* ic = app.add_subcommand("ic", "Intersection complex of a reflexive module");
  ic->add_option("file", file)->required()->check(CLI::ExistingFile);
  ic->add_option("--ell", ell_override, "Override the number of dualize-and-truncate steps");
  auto* ic_complex = ic->add_flag("--complex", "Include the complex in the report");

  auto* euler = app.add_subcommand("euler", "Euler characteristic");
  euler->add_option("file", file)->required()->check(CLI::ExistingFile);

  auto* verify = app.add_subcommand("verify", "Run verification suites on example files");
  verify->add_option("files", files)->required()->check(CLI::ExistingFile);
  verify->add_option("--suite", suite)->check(
      CLI::IsMember({"all", "base-change", "loci", "structure", "perversity", "ic"}));
  verify->add_option("--samples", samples)->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (transform->parsed()) {
      Document doc = load(file, common);
      emit(complex_to_json(doc.build()), common);
      return kOk;
    }
    if (fiber->parsed()) {
      Document doc = load(file, common);
      FreeComplex c = doc.build();
      CharacterPoint rho = parse_point(point, c.ring()->num_vars());
      Json j{{"point", point}, {"derived_fiber", fiber_to_json(derived_fiber(c, rho))}};
      if (doc.objects) j["twisted_cohomology"] = fiber_to_json(doc.objects->oracle_fiber(rho));
      emit(j, common);
      return kOk;
    }
    if (loci->parsed()) {
      if (samples > 0 && loci_seed->count() == 0) throw Error(ErrorCode::InvalidArgument, "--samples needs --seed");
      Document doc = load(file, common);
      const CharacterTorus& t = need_torus(doc);
      FreeComplex c = doc.build();
      Json j = locus_report_to_json(jump_locus(c, k, m, t), t);
      int code = kOk;
      if (samples > 0) {
        auto r = sampled_oracle_check(c, k, m, t, samples, seed, doc.special_values());
        j["oracle"] = oracle_report_to_json(r);
        if (!r.mismatches.empty()) code = kVerificationFailed;
      }
      emit(j, common);
      return code;
    }
    if (perversity->parsed()) {
      Document doc = load(file, common);
      FreeComplex c = doc.build();
      emit(perversity_report_to_json(perversity_report(c, doc.torus ? &*doc.torus : nullptr)), common);
      return kOk;
    }
    if (ic->parsed()) {
      Document doc = load(file, common);
      if (!doc.ic) throw Error(ErrorCode::InvalidArgument, file + " is not an IC input");
      ICReport r = ic_verify(doc.ic->input, ell_override);
      Json j = ic_report_to_json(r);
      if (ic_complex->count() && r.complex) j["complex"] = complex_to_json(*r.complex);
      emit(j, common);
      return r.passed() ? kOk : kVerificationFailed;
    }
    if (euler->parsed()) {
      Document doc = load(file, common);
      std::cout << euler_characteristic(doc.build()) << "\n";
      return kOk;
    }
    if (verify->parsed()) {
      cli::SuiteOptions opts{suite, samples > 0 ? samples : 50, seed};
      Json reports = Json::array();
      bool all = true;
      for (const auto& f : files) {
        Document doc = load(f, common);
        Json checks = Json::array();
        bool ok = cli::run_suites(doc, opts, checks);
        all = all && ok;
        reports.push_back(Json{{"file", f}, {"passed", ok}, {"checks", checks}});
      }
      emit(Json{{"suite", suite}, {"seed", seed}, {"samples", opts.samples}, {"passed", all}, {"reports", reports}},
           common);
      return all ? kOk : kVerificationFailed;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
