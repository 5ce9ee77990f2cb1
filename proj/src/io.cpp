#include "isolat/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <set>

#include "isolat/error.hpp"

namespace isolat {

double clean_number(double v) {
  if (std::abs(v) <= tolerance()) return 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json error_record(const std::string& code, const std::string& path, const std::string& message) {
  return Json{{"error", {{"code", code}, {"path", path}, {"message", message}}}};
}

Json to_json(const ClassTag& t) {
  switch (t.kind) {
    case Kind::Trivial: return {{"kind", "1"}};
    case Kind::Cyclic: return {{"kind", "C"}, {"n", t.n}};
    case Kind::Dihedral: return {{"kind", "D"}, {"n", t.n}};
    case Kind::Tetra: return {{"kind", "T"}};
    case Kind::Octa: return {{"kind", "O"}};
    case Kind::Icosa: return {{"kind", "I"}};
    case Kind::Circle: return {{"kind", "SO2"}};
    case Kind::OrthCircle: return {{"kind", "O2"}};
    case Kind::Full: return {{"kind", "SO3"}};
  }
  return {};
}

ClassTag tag_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError("class tag must be an object", path);
  if (!j.contains("kind") || !j["kind"].is_string()) {
    throw SchemaError("class tag needs a string \"kind\"", path + "/kind");
  }
  const std::string kind = j["kind"];
  if (kind == "C" || kind == "D") {
    if (!j.contains("n") || !j["n"].is_number_integer()) {
      throw SchemaError("cyclic/dihedral tag needs an integer \"n\"", path + "/n");
    }
    const long long n = j["n"].get<long long>();
    if (n < 2 || n > n_cap()) {
      throw ValidationError("n must lie in [2, " + std::to_string(n_cap()) + "]", path + "/n");
    }
    return kind == "C" ? ClassTag::cyclic(static_cast<int>(n)) : ClassTag::dihedral(static_cast<int>(n));
  }
  if (j.contains("n")) throw SchemaError("\"n\" is only allowed for C and D tags", path + "/n");
  const auto t = parse_display_name(kind);
  if (!t) throw SchemaError("unknown class kind \"" + kind + "\"", path + "/kind");
  return *t;
}

Json to_json(const Rotation& r) {
  const auto aa = axis_angle_of(r);
  if (!aa) return {{"axis", {0.0, 0.0, 1.0}}, {"angle_deg", 0.0}};
  return {{"axis", {clean_number(aa->axis.x), clean_number(aa->axis.y), clean_number(aa->axis.z)}},
          {"angle_deg", clean_number(aa->angle * 180.0 / std::numbers::pi)}};
}

Rotation rotation_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError("rotation must be an object", path);
  if (!j.contains("axis") || !j["axis"].is_array() || j["axis"].size() != 3) {
    throw SchemaError("rotation needs a 3-element \"axis\"", path + "/axis");
  }
  Vec3 axis;
  double comps[3];
  for (std::size_t i = 0; i < 3; ++i) {
    if (!j["axis"][i].is_number()) {
      throw SchemaError("axis components must be numbers", path + "/axis/" + std::to_string(i));
    }
    comps[i] = j["axis"][i].get<double>();
  }
  axis = {comps[0], comps[1], comps[2]};
  if (!j.contains("angle_deg") || !j["angle_deg"].is_number()) {
    throw SchemaError("rotation needs a numeric \"angle_deg\"", path + "/angle_deg");
  }
  if (norm(axis) <= tolerance()) throw ValidationError("axis must be nonzero", path + "/axis");
  return Rotation::from_degrees(axis, j["angle_deg"].get<double>());
}

namespace {

Json vec_json(Vec3 v) { return {clean_number(v.x), clean_number(v.y), clean_number(v.z)}; }

}  // namespace

Json to_json(const ConcreteSubgroup& s) {
  if (const auto* f = std::get_if<FiniteSub>(&s)) {
    Json rots = Json::array();
    for (const auto& e : f->group.elements()) {
      if (!e.is_identity()) rots.push_back(to_json(e));
    }
    return {{"type", "finite"},
            {"class", to_json(classify_finite(f->group))},
            {"order", f->group.order()},
            {"rotations", rots}};
  }
  if (const auto* c = std::get_if<CircleSub>(&s)) {
    return {{"type", "circle"}, {"axis", vec_json(canonical_axis(c->axis))}};
  }
  if (const auto* o = std::get_if<OrthCircleSub>(&s)) {
    return {{"type", "orth_circle"},
            {"axis", vec_json(canonical_axis(o->axis))},
            {"flip_phase_deg", clean_number(o->flip_phase * 180.0 / std::numbers::pi)}};
  }
  return {{"type", "full"}};
}

Json to_json(const IsotropyLattice& l) {
  Json classes = Json::array();
  for (const auto& t : l.classes()) classes.push_back(to_json(t));
  Json hasse = Json::array();
  for (const auto& [i, j] : l.hasse()) hasse.push_back({i, j});
  return {{"classes", classes}, {"hasse", hasse}};
}

Json to_json(const AnnIsotropy& a) {
  Json out = Json::array();
  for (const auto& c : a.classes) {
    out.push_back({{"class", to_json(c.label)}, {"representative", to_json(c.representative)}});
  }
  return out;
}

Json to_json(const LiftResult& r) {
  Json out = to_json(r.lifted);
  out["base"] = to_json(r.base);
  Json wit = Json::array();
  for (const auto& w : r.witnesses) {
    wit.push_back({{"class", to_json(w.lifted)},
                   {"h1", to_json(w.h1)},
                   {"h2", to_json(w.h2)},
                   {"k", to_json(w.k)},
                   {"h1_rep", to_json(w.h1_rep)},
                   {"h2_rep", to_json(w.h2_rep)},
                   {"k_rep", to_json(w.k_rep)}});
  }
  out["witness"] = wit;
  return out;
}

bool operator==(const ProblemSpec& a, const ProblemSpec& b) {
  if (a.group.kind != b.group.kind || a.base_lattice != b.base_lattice ||
      a.declared_order != b.declared_order || a.action != b.action ||
      a.generators.size() != b.generators.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.generators.size(); ++i) {
    if (!eq(a.generators[i], b.generators[i])) return false;
  }
  if (a.group.kind == AmbientGroup::Kind::Finite) return same_elements(a.group.group, b.group.group);
  return true;
}

ProblemSpec parse_spec(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& ex) {
    throw SchemaError(std::string("malformed JSON: ") + ex.what(), "");
  }
  if (!doc.is_object()) throw SchemaError("document must be a JSON object", "");
  for (const auto& [key, _] : doc.items()) {
    if (key != "group" && key != "base_lattice" && key != "order" && key != "action") {
      throw SchemaError("unknown field \"" + key + "\"", "/" + key);
    }
  }

  ProblemSpec spec;
  if (!doc.contains("group") || !doc["group"].is_object()) {
    throw SchemaError("missing \"group\" object", "/group");
  }
  const Json& group = doc["group"];
  if (!group.contains("kind") || !group["kind"].is_string()) {
    throw SchemaError("group needs a string \"kind\"", "/group/kind");
  }
  const std::string kind = group["kind"];
  if (kind == "SO3") {
    spec.group = AmbientGroup::so3();
  } else if (kind == "circle") {
    spec.group = AmbientGroup::circle();
  } else if (kind == "finite") {
    if (!group.contains("generators") || !group["generators"].is_array()) {
      throw SchemaError("finite group needs a \"generators\" array", "/group/generators");
    }
    for (std::size_t i = 0; i < group["generators"].size(); ++i) {
      spec.generators.push_back(
          rotation_from_json(group["generators"][i], "/group/generators/" + std::to_string(i)));
    }
    try {
      spec.group = AmbientGroup::finite(close_group(spec.generators));
      (void)spec.group.tag();
    } catch (const GroupTooLarge& ex) {
      throw ValidationError(ex.what(), "/group/generators");
    } catch (const UnclassifiableGroup& ex) {
      throw ValidationError(ex.what(), "/group/generators");
    }
  } else {
    throw SchemaError("group kind must be SO3, circle or finite", "/group/kind");
  }
  if (kind != "finite" && group.contains("generators")) {
    throw SchemaError("only finite groups take generators", "/group/generators");
  }

  if (!doc.contains("base_lattice") || !doc["base_lattice"].is_array()) {
    throw SchemaError("missing \"base_lattice\" array", "/base_lattice");
  }
  const Json& base = doc["base_lattice"];
  if (base.empty()) throw ValidationError("base lattice must not be empty", "/base_lattice");
  const ClassTag outer = spec.group.tag();
  std::set<ClassTag> seen;
  for (std::size_t i = 0; i < base.size(); ++i) {
    const std::string path = "/base_lattice/" + std::to_string(i);
    const ClassTag t = tag_from_json(base[i], path);
    if (!seen.insert(t).second) throw ValidationError("duplicate class " + display_name(t), path);
    if (!is_subconjugate(t, outer)) {
      throw ValidationError(display_name(t) + " is not a subgroup class of " + display_name(outer),
                            path);
    }
    spec.base_lattice.push_back(t);
  }

  if (doc.contains("order")) {
    const Json& order = doc["order"];
    if (!order.is_array()) throw SchemaError("\"order\" must be an array of pairs", "/order");
    const int n = static_cast<int>(spec.base_lattice.size());
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t k = 0; k < order.size(); ++k) {
      const std::string path = "/order/" + std::to_string(k);
      const Json& p = order[k];
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
        throw SchemaError("order entries must be [i, j] index pairs", path);
      }
      const int i = p[0].get<int>(), j = p[1].get<int>();
      if (i < 0 || j < 0 || i >= n || j >= n) throw ValidationError("index out of range", path);
      const auto& ti = spec.base_lattice[static_cast<std::size_t>(i)];
      const auto& tj = spec.base_lattice[static_cast<std::size_t>(j)];
      if (i == j || !is_subconjugate(ti, tj)) {
        throw ValidationError("declared relation " + display_name(ti) + " < " + display_name(tj) +
                                  " contradicts subconjugation",
                              path);
      }
      pairs.emplace_back(i, j);
    }
    const auto closure = transitive_closure(static_cast<std::size_t>(n), pairs);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const bool derived = is_subconjugate(spec.base_lattice[static_cast<std::size_t>(i)],
                                             spec.base_lattice[static_cast<std::size_t>(j)]);
        if (derived && !closure.count({i, j})) {
          throw ValidationError("declared order misses " +
                                    display_name(spec.base_lattice[static_cast<std::size_t>(i)]) +
                                    " < " +
                                    display_name(spec.base_lattice[static_cast<std::size_t>(j)]),
                                "/order");
        }
      }
    }
    spec.declared_order = std::move(pairs);
  }

  if (doc.contains("action")) {
    if (!doc["action"].is_string()) throw SchemaError("\"action\" must be a string", "/action");
    const std::string name = doc["action"];
    if (!ConcreteAction::parse(name)) throw ValidationError("unknown action " + name, "/action");
    spec.action = name;
  }
  return spec;
}

std::string emit_spec(const ProblemSpec& spec) {
  Json group;
  switch (spec.group.kind) {
    case AmbientGroup::Kind::SO3: group = {{"kind", "SO3"}}; break;
    case AmbientGroup::Kind::Circle: group = {{"kind", "circle"}}; break;
    case AmbientGroup::Kind::Finite: {
      Json gens = Json::array();
      for (const auto& g : spec.generators) gens.push_back(to_json(g));
      group = {{"kind", "finite"}, {"generators", gens}};
      break;
    }
  }
  Json base = Json::array();
  for (const auto& t : spec.base_lattice) base.push_back(to_json(t));
  Json doc{{"group", group}, {"base_lattice", base}};
  if (spec.declared_order) {
    Json order = Json::array();
    for (const auto& [i, j] : *spec.declared_order) order.push_back({i, j});
    doc["order"] = order;
  }
  if (spec.action) doc["action"] = *spec.action;
  return dump(doc);
}

IsotropyLattice base_lattice_of(const ProblemSpec& spec) {
  try {
    return build_lattice(spec.base_lattice);
  } catch (const NoUniqueMinimum& ex) {
    throw NoUniqueMinimum(ex.what(), "/base_lattice");
  }
}

std::string emit_lattice(const IsotropyLattice& l, const std::string& format) {
  if (format == "dot") return to_dot(l);
  return dump(to_json(l));
}

}  // namespace isolat
