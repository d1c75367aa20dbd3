#include "acx/scene.hpp"

#include <set>

#include "acx/errors.hpp"

namespace acx {

using nlohmann::json;

const char* to_string(SetDescriptor::Kind k) {
  switch (k) {
    case SetDescriptor::Kind::Points:
      return "points";
    case SetDescriptor::Kind::Chain:
      return "chain";
    case SetDescriptor::Kind::Sum:
      return "sum";
    case SetDescriptor::Kind::Polyhedron:
      return "polyhedron";
  }
  return "unknown";
}

bool operator==(const SetDescriptor& a, const SetDescriptor& b) {
  return a.kind == b.kind && a.points.points() == b.points.points() && a.cone == b.cone &&
         a.summands == b.summands && a.polyhedron.vertices.points() == b.polyhedron.vertices.points() &&
         a.polyhedron.rays == b.polyhedron.rays;
}

bool operator==(const Scene& a, const Scene& b) {
  if (a.dimension != b.dimension || a.cones != b.cones || a.sets != b.sets) return false;
  if (a.prices.size() != b.prices.size() || a.grids.size() != b.grids.size()) return false;
  for (const auto& [name, p] : a.prices) {
    const auto it = b.prices.find(name);
    if (it == b.prices.end() || it->second.price != p.price || it->second.wealth != p.wealth) {
      return false;
    }
  }
  for (const auto& [name, g] : a.grids) {
    const auto it = b.grids.find(name);
    if (it == b.grids.end() || it->second.dimension != g.dimension || it->second.step != g.step ||
        it->second.upper != g.upper) {
      return false;
    }
  }
  return true;
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw SceneError(path + ": " + what);
}

const json& member(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field '") + key + "'");
  return *it;
}

std::string string_field(const json& j, const char* key, const std::string& path) {
  const json& v = member(j, key, path);
  if (!v.is_string()) fail(path + "." + key, "expected a string");
  return v.get<std::string>();
}

RationalVector rationals_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of rationals");
  RationalVector out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(rational_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<RationalVector> vectors_from_json(const json& j, std::size_t dimension,
                                              const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of vectors");
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(vector_from_json(j[i], dimension, path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

FinitePointSet point_set_from_json(const json& j, std::size_t dimension, const std::string& path) {
  return FinitePointSet(dimension, vectors_from_json(j, dimension, path));
}

json blocks_to_json(const std::vector<RationalVector>& blocks) {
  json out = json::array();
  for (const auto& b : blocks) out.push_back(to_json(b));
  return out;
}

std::vector<RationalVector> blocks_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of weight blocks");
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(rationals_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

}  // namespace

Rational rational_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Rational(mpz_class(std::to_string(j.get<std::uint64_t>())))
                                  : Rational(mpz_class(std::to_string(j.get<std::int64_t>())));
  }
  if (j.is_number_float()) fail(path, "JSON floats are not exact; write \"p/q\" instead");
  if (!j.is_string()) fail(path, "expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

RationalVector vector_from_json(const json& j, std::size_t dimension, const std::string& path) {
  RationalVector v = rationals_from_json(j, path);
  if (v.size() != dimension) {
    fail(path, "expected " + std::to_string(dimension) + " coordinates, got " +
                   std::to_string(v.size()));
  }
  return v;
}

json to_json(const Rational& r) { return to_string(r); }

json to_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

json to_json(const FinitePointSet& s) {
  json out = json::array();
  for (const auto& p : s) out.push_back(to_json(p));
  return out;
}

json to_json(const Cone& c) {
  json gens = json::array();
  for (const auto& g : c.generators()) gens.push_back(to_json(g));
  return {{"generators", gens}, {"contains_zero", c.contains_zero()}};
}

const Cone& Scene::cone(const std::string& name) const {
  const auto it = cones.find(name);
  if (it == cones.end()) throw SceneError("cones." + name + ": unknown cone");
  return it->second;
}

const SetDescriptor& Scene::set(const std::string& name) const {
  const auto it = sets.find(name);
  if (it == sets.end()) throw SceneError("sets." + name + ": unknown set");
  return it->second;
}

const PriceSystem& Scene::price(const std::string& name) const {
  const auto it = prices.find(name);
  if (it == prices.end()) throw SceneError("prices." + name + ": unknown price system");
  return it->second;
}

const GridDomain& Scene::grid(const std::string& name) const {
  const auto it = grids.find(name);
  if (it == grids.end()) throw SceneError("grids." + name + ": unknown grid");
  return it->second;
}

FinitePointSet Scene::points_of(const std::string& name) const {
  const SetDescriptor& s = set(name);
  switch (s.kind) {
    case SetDescriptor::Kind::Points:
    case SetDescriptor::Kind::Chain:
      return s.points;
    case SetDescriptor::Kind::Sum:
      return materialize(decomposable(name));
    case SetDescriptor::Kind::Polyhedron:
      if (!s.polyhedron.rays.empty()) {
        throw SceneError("sets." + name + ": an unbounded polyhedron is not a finite point set");
      }
      return s.polyhedron.vertices;
  }
  throw SceneError("sets." + name + ": unknown kind");
}

DecomposableSet Scene::decomposable(const std::string& name) const {
  const SetDescriptor& s = set(name);
  if (s.kind == SetDescriptor::Kind::Chain) return DecomposableSet({ChainSet(s.points, cone(s.cone))});
  if (s.kind != SetDescriptor::Kind::Sum) {
    throw SceneError("sets." + name + ": expected a chain or a sum of chains, found " +
                     to_string(s.kind));
  }
  std::vector<ChainSet> chains;
  for (const auto& part : s.summands) {
    const SetDescriptor& c = set(part);
    chains.emplace_back(c.points, cone(c.cone));
  }
  return DecomposableSet(std::move(chains));
}

Polyhedron Scene::polyhedron(const std::string& name) const {
  const SetDescriptor& s = set(name);
  if (s.kind == SetDescriptor::Kind::Polyhedron) return s.polyhedron;
  return Polyhedron{points_of(name), {}};
}

const Cone& Scene::cone_of_set(const std::string& name) const {
  const SetDescriptor& s = set(name);
  if (s.kind == SetDescriptor::Kind::Chain) return cone(s.cone);
  if (s.kind == SetDescriptor::Kind::Sum && !s.summands.empty()) return cone_of_set(s.summands.front());
  throw SceneError("sets." + name + ": a " + std::string(to_string(s.kind)) + " set has no cone");
}

Scene parse_scene(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SceneError(std::string("$: malformed JSON: ") + e.what());
  }
  if (!root.is_object()) fail("$", "expected an object");

  Scene scene;
  const json& dim = member(root, "dimension", "$");
  if (!dim.is_number_unsigned() || dim.get<std::uint64_t>() == 0) {
    fail("dimension", "expected a positive integer");
  }
  scene.dimension = dim.get<std::size_t>();
  const std::size_t n = scene.dimension;

  const auto section = [&](const char* key) -> const json* {
    const auto it = root.find(key);
    if (it == root.end()) return nullptr;
    if (!it->is_object()) fail(key, "expected an object keyed by name");
    return &*it;
  };

  if (const json* cones = section("cones")) {
    for (const auto& [name, c] : cones->items()) {
      const std::string path = "cones." + name;
      std::vector<RationalVector> gens;
      if (c.contains("generators")) gens = vectors_from_json(c["generators"], n, path + ".generators");
      bool zero = false;
      if (c.contains("contains_zero")) {
        if (!c["contains_zero"].is_boolean()) fail(path + ".contains_zero", "expected a boolean");
        zero = c["contains_zero"].get<bool>();
      }
      scene.cones.emplace(name, Cone(n, std::move(gens), zero));
    }
  }

  if (const json* sets = section("sets")) {
    // Chains first, so that sums can be checked against them.
    for (const auto& [name, s] : sets->items()) {
      const std::string path = "sets." + name;
      const std::string type = string_field(s, "type", path);
      SetDescriptor d;
      if (type == "points") {
        d.kind = SetDescriptor::Kind::Points;
        d.points = point_set_from_json(member(s, "points", path), n, path + ".points");
      } else if (type == "chain") {
        d.kind = SetDescriptor::Kind::Chain;
        d.cone = string_field(s, "cone", path);
        if (!scene.cones.count(d.cone)) fail(path + ".cone", "unknown cone '" + d.cone + "'");
        d.points = point_set_from_json(member(s, "points", path), n, path + ".points");
        if (d.points.empty()) fail(path + ".points", "a chain needs at least one point");
        try {
          ChainSet(d.points, scene.cones.at(d.cone));
        } catch (const PreconditionViolation& e) {
          fail(path + ".points", e.what());
        }
      } else if (type == "sum") {
        d.kind = SetDescriptor::Kind::Sum;
        const json& parts = member(s, "summands", path);
        if (!parts.is_array() || parts.empty()) fail(path + ".summands", "expected a nonempty array");
        for (const auto& p : parts) {
          if (!p.is_string()) fail(path + ".summands", "expected set names");
          d.summands.push_back(p.get<std::string>());
        }
      } else if (type == "polyhedron") {
        d.kind = SetDescriptor::Kind::Polyhedron;
        d.polyhedron.vertices = point_set_from_json(member(s, "vertices", path), n, path + ".vertices");
        if (d.polyhedron.vertices.empty()) fail(path + ".vertices", "a polyhedron needs a vertex");
        if (s.contains("rays")) d.polyhedron.rays = vectors_from_json(s["rays"], n, path + ".rays");
      } else {
        fail(path + ".type", "unknown set type '" + type + "'");
      }
      scene.sets.emplace(name, std::move(d));
    }
    for (const auto& [name, d] : scene.sets) {
      if (d.kind != SetDescriptor::Kind::Sum) continue;
      const std::string path = "sets." + name + ".summands";
      std::set<std::string> cones;
      for (const auto& part : d.summands) {
        const auto it = scene.sets.find(part);
        if (it == scene.sets.end()) fail(path, "unknown set '" + part + "'");
        if (it->second.kind != SetDescriptor::Kind::Chain) {
          fail(path, "summand '" + part + "' is not a chain");
        }
        cones.insert(it->second.cone);
      }
      if (cones.size() != 1) fail(path, "summands must share one cone");
    }
  }

  if (const json* prices = section("prices")) {
    for (const auto& [name, p] : prices->items()) {
      const std::string path = "prices." + name;
      PriceSystem ps{vector_from_json(member(p, "price", path), n, path + ".price"),
                     rational_from_json(member(p, "wealth", path), path + ".wealth")};
      try {
        ps.validate();
      } catch (const PreconditionViolation& e) {
        fail(path, e.what());
      }
      scene.prices.emplace(name, std::move(ps));
    }
  }

  if (const json* grids = section("grids")) {
    for (const auto& [name, g] : grids->items()) {
      const std::string path = "grids." + name;
      GridDomain gd{n, rational_from_json(member(g, "step", path), path + ".step"),
                    vector_from_json(member(g, "upper", path), n, path + ".upper")};
      try {
        gd.validate();
      } catch (const PreconditionViolation& e) {
        fail(path, e.what());
      }
      scene.grids.emplace(name, std::move(gd));
    }
  }
  return scene;
}

json scene_to_json(const Scene& scene) {
  json root;
  root["dimension"] = scene.dimension;
  json cones = json::object();
  for (const auto& [name, c] : scene.cones) cones[name] = to_json(c);
  root["cones"] = cones;
  json sets = json::object();
  for (const auto& [name, d] : scene.sets) {
    json s;
    s["type"] = to_string(d.kind);
    switch (d.kind) {
      case SetDescriptor::Kind::Points:
        s["points"] = to_json(d.points);
        break;
      case SetDescriptor::Kind::Chain:
        s["cone"] = d.cone;
        s["points"] = to_json(d.points);
        break;
      case SetDescriptor::Kind::Sum:
        s["summands"] = d.summands;
        break;
      case SetDescriptor::Kind::Polyhedron: {
        s["vertices"] = to_json(d.polyhedron.vertices);
        json rays = json::array();
        for (const auto& r : d.polyhedron.rays) rays.push_back(to_json(r));
        s["rays"] = rays;
        break;
      }
    }
    sets[name] = s;
  }
  root["sets"] = sets;
  json prices = json::object();
  for (const auto& [name, p] : scene.prices) {
    prices[name] = {{"price", to_json(p.price)}, {"wealth", to_json(p.wealth)}};
  }
  root["prices"] = prices;
  json grids = json::object();
  for (const auto& [name, g] : scene.grids) {
    grids[name] = {{"step", to_json(g.step)}, {"upper", to_json(g.upper)}};
  }
  root["grids"] = grids;
  return root;
}

std::string serialize_scene(const Scene& scene) { return scene_to_json(scene).dump(2); }

json to_json(const DominationCertificate& c) {
  return {
      {"direction", c.direction == DominationCertificate::Direction::Dominating ? "dominating"
                                                                                : "dominated"},
      {"target", to_json(c.target)},
      {"witness", to_json(c.witness)},
      {"cone_vector", to_json(c.cone_vector)},
      {"cone_coefficients", to_json(c.cone_coefficients)},
      {"decomposition", blocks_to_json(c.decomposition)},
      {"summand_witnesses", blocks_to_json(c.summand_witnesses)},
  };
}

DominationCertificate certificate_from_json(const json& j, std::size_t dimension) {
  DominationCertificate c;
  const std::string dir = string_field(j, "direction", "certificate");
  if (dir == "dominating") {
    c.direction = DominationCertificate::Direction::Dominating;
  } else if (dir == "dominated") {
    c.direction = DominationCertificate::Direction::Dominated;
  } else {
    fail("certificate.direction", "unknown direction '" + dir + "'");
  }
  c.target = vector_from_json(member(j, "target", "certificate"), dimension, "certificate.target");
  c.witness = vector_from_json(member(j, "witness", "certificate"), dimension, "certificate.witness");
  c.cone_vector =
      vector_from_json(member(j, "cone_vector", "certificate"), dimension, "certificate.cone_vector");
  c.cone_coefficients = rationals_from_json(member(j, "cone_coefficients", "certificate"),
                                            "certificate.cone_coefficients");
  c.decomposition =
      blocks_from_json(member(j, "decomposition", "certificate"), "certificate.decomposition");
  c.summand_witnesses = vectors_from_json(member(j, "summand_witnesses", "certificate"), dimension,
                                          "certificate.summand_witnesses");
  return c;
}

json to_json(const SeparationResult& s) {
  json out;
  out["functional"] = to_json(s.functional);
  out["sup"] = s.sup_on_x ? json(to_string(*s.sup_on_x)) : json("+inf");
  out["inf"] = s.inf_on_y ? json(to_string(*s.inf_on_y)) : json("-inf");
  out["kind"] = to_string(s.kind);
  out["witnesses"] = s.strict_pair ? json::array({to_json(s.strict_pair->first), to_json(s.strict_pair->second)})
                                   : json(nullptr);
  return out;
}

SeparationResult separation_from_json(const json& j, std::size_t dimension) {
  SeparationResult s;
  s.functional = vector_from_json(member(j, "functional", "separator"), dimension, "separator.functional");
  const json& sup = member(j, "sup", "separator");
  if (!(sup.is_string() && sup.get<std::string>() == "+inf")) {
    s.sup_on_x = rational_from_json(sup, "separator.sup");
  }
  const json& inf = member(j, "inf", "separator");
  if (!(inf.is_string() && inf.get<std::string>() == "-inf")) {
    s.inf_on_y = rational_from_json(inf, "separator.inf");
  }
  const std::string kind = string_field(j, "kind", "separator");
  if (kind == "separated") {
    s.kind = SeparationKind::Separated;
  } else if (kind == "properly_separated") {
    s.kind = SeparationKind::ProperlySeparated;
  } else if (kind == "strictly_separated") {
    s.kind = SeparationKind::StrictlySeparated;
  } else {
    fail("separator.kind", "unknown kind '" + kind + "'");
  }
  const json& w = member(j, "witnesses", "separator");
  if (!w.is_null()) {
    const auto pair = vectors_from_json(w, dimension, "separator.witnesses");
    if (pair.size() != 2) fail("separator.witnesses", "expected two points");
    s.strict_pair.emplace(pair[0], pair[1]);
  }
  return s;
}

json to_json(const DisjointnessResult& r) {
  json out;
  out["disjoint"] = r.disjoint;
  if (r.common_point) {
    out["common_point"] = to_json(*r.common_point);
    out["x_vertex_weights"] = to_json(r.x_vertex_weights);
    out["x_ray_weights"] = to_json(r.x_ray_weights);
    out["y_weights"] = blocks_to_json(r.y_weights);
  }
  if (r.separator) out["separator"] = to_json(*r.separator);
  return out;
}

DisjointnessResult disjointness_from_json(const json& j, std::size_t dimension) {
  DisjointnessResult r;
  const json& d = member(j, "disjoint", "result");
  if (!d.is_boolean()) fail("result.disjoint", "expected a boolean");
  r.disjoint = d.get<bool>();
  if (j.contains("common_point")) {
    r.common_point = vector_from_json(j["common_point"], dimension, "result.common_point");
    r.x_vertex_weights =
        rationals_from_json(member(j, "x_vertex_weights", "result"), "result.x_vertex_weights");
    r.x_ray_weights = rationals_from_json(member(j, "x_ray_weights", "result"), "result.x_ray_weights");
    r.y_weights = blocks_from_json(member(j, "y_weights", "result"), "result.y_weights");
  }
  if (j.contains("separator")) r.separator = separation_from_json(j["separator"], dimension);
  return r;
}

}  // namespace acx
