#ifndef CHARLOCI_TOOLS_SUITES_HPP
#define CHARLOCI_TOOLS_SUITES_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "charloci/io.hpp"

namespace charloci::cli {

struct Document {
  std::string path;
  DocumentKind kind = DocumentKind::Complex;
  std::optional<ObjectFile> objects;
  std::optional<FreeComplex> complex;
  std::optional<ICFile> ic;
  std::optional<CharacterTorus> torus;

  // Transform of an object file or the stored complex.
  FreeComplex build() const;
  std::vector<Rational> special_values() const;
  const Json& expect() const;
};

Document load_document(const std::string& path, std::optional<MonomialOrder> order, bool affine);

struct SuiteOptions {
  std::string suite = "all";
  int samples = 50;
  std::uint64_t seed = 0;
};

// Appends {name, passed, detail} entries; returns true when all passed.
bool run_suites(const Document& doc, const SuiteOptions& opts, Json& checks);

}  // namespace charloci::cli

#endif
