#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "acx/cone.hpp"
#include "acx/dominance.hpp"
#include "acx/economy.hpp"
#include "acx/geometry.hpp"
#include "acx/separation.hpp"
#include "acx/sets.hpp"

namespace acx {

/// Parse or validation failure; the message starts with the JSON path of the
/// offending value, e.g. "sets.Y.points[1]: ...".
class SceneError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SetDescriptor {
  enum class Kind { Points, Chain, Sum, Polyhedron };

  Kind kind = Kind::Points;
  FinitePointSet points;              // points, chain
  std::string cone;                   // chain
  std::vector<std::string> summands;  // sum: names of chain sets
  Polyhedron polyhedron;              // polyhedron

  friend bool operator==(const SetDescriptor&, const SetDescriptor&);
};

const char* to_string(SetDescriptor::Kind k);

/// A named collection of cones, sets, price systems and grids in one
/// ambient dimension.
struct Scene {
  std::size_t dimension = 0;
  std::map<std::string, Cone> cones;
  std::map<std::string, SetDescriptor> sets;
  std::map<std::string, PriceSystem> prices;
  std::map<std::string, GridDomain> grids;

  // Lookups throw SceneError for unknown names or unsuitable set kinds.
  const Cone& cone(const std::string& name) const;
  const SetDescriptor& set(const std::string& name) const;
  const PriceSystem& price(const std::string& name) const;
  const GridDomain& grid(const std::string& name) const;

  /// Points, the chain base, the materialized sum, or the vertex list.
  FinitePointSet points_of(const std::string& name) const;
  /// A chain as a one-summand set, or a sum of chains.
  DecomposableSet decomposable(const std::string& name) const;
  /// A polyhedron as declared; point sets and chains become their hulls
  /// without rays.
  Polyhedron polyhedron(const std::string& name) const;
  /// The cone a chain or sum was declared with.
  const Cone& cone_of_set(const std::string& name) const;

  friend bool operator==(const Scene&, const Scene&);
};

/// Rationals are "p/q" or integer strings, or JSON integers; JSON floats are
/// rejected so that exactness never depends on a decimal conversion.
Rational rational_from_json(const nlohmann::json& j, const std::string& path);
RationalVector vector_from_json(const nlohmann::json& j, std::size_t dimension,
                                const std::string& path);
nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const RationalVector& v);
nlohmann::json to_json(const FinitePointSet& s);
nlohmann::json to_json(const Cone& c);

/// Throws SceneError. Declared chains are validated with is_chain, and sums
/// must reference chains over a single cone.
Scene parse_scene(std::string_view text);
nlohmann::json scene_to_json(const Scene& scene);
std::string serialize_scene(const Scene& scene);

// Certificate round trips used by the CLI output and its --verify pass.
nlohmann::json to_json(const DominationCertificate& c);
DominationCertificate certificate_from_json(const nlohmann::json& j, std::size_t dimension);
nlohmann::json to_json(const SeparationResult& s);
SeparationResult separation_from_json(const nlohmann::json& j, std::size_t dimension);
nlohmann::json to_json(const DisjointnessResult& r);
DisjointnessResult disjointness_from_json(const nlohmann::json& j, std::size_t dimension);

}  // namespace acx
