#ifndef CHARLOCI_IO_HPP
#define CHARLOCI_IO_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "charloci/intersection.hpp"
#include "charloci/loci.hpp"
#include "charloci/perversity.hpp"
#include "charloci/transform.hpp"
#include "json.hpp"

namespace charloci {

using Json = nlohmann::ordered_json;

// Syntax errors carry the line and column of the offending byte.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

Json ring_to_json(const RingPtr& ring);
RingPtr ring_from_json(const Json& j);
MonomialOrder order_from_name(const std::string& name);

Json complex_to_json(const FreeComplex& c);
FreeComplex complex_from_json(const Json& j, std::optional<MonomialOrder> order = std::nullopt);

Json object_to_json(const LocalSystemObject& o);
LocalSystemObject object_from_json(const Json& j, const CharacterTorus& torus);

// An object file: {g, objects: [...]} with optional cone: {multiplier} and
// expect blocks. With a multiplier p the complex is cone(p * id) on the sum.
struct ObjectFile {
  std::string name;
  CharacterTorus torus;
  std::vector<LocalSystemObject> objects;
  std::optional<Poly> cone_multiplier;
  Json expect = Json::object();

  FreeComplex complex() const;
  // Fiber dimensions from twisted_cohomology alone.
  std::map<int, int> oracle_fiber(const CharacterPoint& rho) const;
  // Coordinates worth sampling: twists, monodromy scalars, multiplier roots.
  std::vector<Rational> special_values() const;
};

ObjectFile object_file_from_json(const Json& j, std::optional<MonomialOrder> order = std::nullopt);
Json object_file_to_json(const ObjectFile& f);

struct ICFile {
  std::string name;
  ICInput input;
  Json expect = Json::object();
};

ICFile ic_file_from_json(const Json& j, std::optional<MonomialOrder> order = std::nullopt);
Json ic_file_to_json(const ICFile& f);

enum class DocumentKind { Objects, Complex, IC };
DocumentKind document_kind(const Json& j);

Json codim_to_json(const Codim& c);
Json subtorus_to_json(const TranslatedSubtorus& t);
Json profile_to_json(const SupportProfile& p);
Json fiber_to_json(const std::map<int, int>& dims);
Json locus_report_to_json(const JumpLocus& locus, const CharacterTorus& torus);
Json oracle_report_to_json(const OracleReport& r);
Json perversity_report_to_json(const PerversityReport& r);
Json ic_report_to_json(const ICReport& r);

}  // namespace charloci

#endif
