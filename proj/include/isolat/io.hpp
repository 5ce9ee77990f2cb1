#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "isolat/adjoint.hpp"
#include "isolat/lift.hpp"
#include "isolat/oracle.hpp"

namespace isolat {

using Json = nlohmann::json;

/// Rounds to 12 significant digits and clears signed zeros and sub-tolerance
/// noise so that serialized output is byte-stable.
double clean_number(double v);

Json to_json(const ClassTag& t);
/// Throws SchemaError / ValidationError with `path` pointing at the field.
ClassTag tag_from_json(const Json& j, const std::string& path);

Json to_json(const Rotation& r);
Rotation rotation_from_json(const Json& j, const std::string& path);

Json to_json(const ConcreteSubgroup& s);
Json to_json(const IsotropyLattice& l);
Json to_json(const AnnIsotropy& a);
Json to_json(const LiftResult& r);

/// Parsed and validated input document.
struct ProblemSpec {
  AmbientGroup group;
  std::vector<Rotation> generators;  // finite groups only
  std::vector<ClassTag> base_lattice;
  std::optional<std::vector<std::pair<int, int>>> declared_order;
  std::optional<std::string> action;

  friend bool operator==(const ProblemSpec& a, const ProblemSpec& b);
};

/// Schema: {"group":{"kind":"SO3"|"circle"|"finite","generators":[...]},
///          "base_lattice":[tag...], "order":[[i,j]...]?, "action":name?}
/// `order` pairs index base_lattice and mean base_lattice[i] < base_lattice[j];
/// their transitive closure must equal the subconjugation order exactly.
ProblemSpec parse_spec(const std::string& text);
std::string emit_spec(const ProblemSpec& spec);

/// Base lattice of a parsed spec (NoUniqueMinimum on bad input).
IsotropyLattice base_lattice_of(const ProblemSpec& spec);

/// "json" or "dot".
std::string emit_lattice(const IsotropyLattice& l, const std::string& format);

/// Canonical text form: two-space indented JSON, sorted keys, trailing newline.
std::string dump(const Json& j);

/// {"error":{"code","path","message"}}
Json error_record(const std::string& code, const std::string& path, const std::string& message);

}  // namespace isolat
