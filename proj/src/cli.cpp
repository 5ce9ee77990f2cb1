#include "isolat/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "isolat/error.hpp"
#include "isolat/io.hpp"
#include "isolat/momentum.hpp"

namespace isolat {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read input file " + path, "");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string tag_list(const std::set<ClassTag>& tags) {
  std::string s = "{";
  for (const auto& t : tags) s += (s.size() > 1 ? ", " : "") + display_name(t);
  return s + "}";
}

std::set<ClassTag> class_set(const IsotropyLattice& l) {
  return {l.classes().begin(), l.classes().end()};
}

MomentumValue parse_mu(const std::string& text, const AmbientGroup& g) {
  std::vector<double> comps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || end == item.c_str() || *end != '\0' || !std::isfinite(v)) {
      throw SchemaError("--mu expects comma-separated numbers", "/mu");
    }
    comps.push_back(v);
  }
  const bool vector_ok = g.kind != AmbientGroup::Kind::Circle;
  const bool scalar_ok = g.kind != AmbientGroup::Kind::SO3;
  if (comps.size() == 3 && vector_ok) return Vec3{comps[0], comps[1], comps[2]};
  if (comps.size() == 1 && scalar_ok) return comps[0];
  throw SchemaError(vector_ok && !scalar_ok ? "SO(3) momentum values have 3 components"
                                            : "circle momentum values are scalars",
                    "/mu");
}

Json mu_json(const MomentumValue& mu) {
  if (const auto* v = std::get_if<Vec3>(&mu)) {
    return Json{clean_number(v->x), clean_number(v->y), clean_number(v->z)};
  }
  return clean_number(std::get<double>(mu));
}

struct Options {
  std::string input;
  std::string dot_path;
  bool cotangent = false;
  bool serial = false;
  std::string mu = "0,0,0";
  std::string closure;
  std::string action;
  bool all_actions = false;
  std::uint64_t seed = 0;
  int samples = 10000;
  std::string tag;
  int max_n = 6;
  int n_cap = 100;
};

int cmd_lift(const Options& o, std::ostream& out) {
  const ProblemSpec spec = parse_spec(read_file(o.input));
  const IsotropyLattice base = base_lattice_of(spec);
  const LiftResult r = o.serial ? lifted_lattice_serial(spec.group, base)
                     : o.cotangent ? cotangent_lifted_lattice(spec.group, base)
                                   : lifted_lattice(spec.group, base);
  if (!lift_witness_check(r)) throw InvariantViolation("lift witness re-validation failed");
  Json doc = to_json(r);
  doc["bundle"] = o.cotangent ? "T*M" : "TM";
  out << dump(doc);
  if (!o.dot_path.empty()) {
    std::ofstream dot(o.dot_path);
    if (!dot) throw SchemaError("cannot write " + o.dot_path, "");
    dot << to_dot(r.lifted);
  }
  return kExitOk;
}

int cmd_mu(const Options& o, std::ostream& out) {
  const ProblemSpec spec = parse_spec(read_file(o.input));
  const IsotropyLattice base = base_lattice_of(spec);
  const MomentumValue mu = parse_mu(o.mu, spec.group);
  const MuLattice ml = mu_lattice(spec.group, base, mu);
  Json doc = to_json(ml.restricted);
  doc["mu"] = mu_json(mu);
  if (!o.closure.empty()) {
    const auto h = parse_display_name(o.closure);
    if (!h) throw SchemaError("unknown class name " + o.closure, "/closure");
    Json cl = Json::array();
    for (const auto& t : mu_closure(spec.group, base, mu, *h)) cl.push_back(to_json(t));
    doc["closure"] = {{"of", to_json(*h)}, {"classes", cl}};
  }
  out << dump(doc);
  return kExitOk;
}

int cmd_requilibria(const Options& o, std::ostream& out) {
  const ProblemSpec spec = parse_spec(read_file(o.input));
  const IsotropyLattice base = base_lattice_of(spec);
  const IsotropyLattice re = relative_equilibria_lattice(spec.group, base);
  Json doc = to_json(re);
  // Witness: the first base class (H) whose G.I(H, ann h) produces the class.
  Json wit = Json::array();
  for (const auto& t : re.classes()) {
    for (const auto& h : base.classes()) {
      const ConcreteSubgroup rep = canonical_rep(h);
      std::optional<ConcreteSubgroup> hit;
      if (spec.group.kind != AmbientGroup::Kind::SO3) {
        if (h == t) hit = rep;
      } else {
        for (const auto& k : isotropy_on_ann(rep).classes) {
          if (k.label == t) {
            hit = k.representative;
            break;
          }
        }
      }
      if (hit) {
        wit.push_back({{"class", to_json(t)}, {"from", to_json(h)}, {"representative", to_json(*hit)}});
        break;
      }
    }
  }
  doc["witness"] = wit;
  out << dump(doc);
  return kExitOk;
}

bool check_action(const ConcreteAction& a, const Options& o, std::ostream& out) {
  const SamplePlan plan = default_plan(a, o.seed, o.samples);
  const AmbientGroup g = a.ambient();
  const IsotropyLattice base = build_lattice(empirical_base_lattice(a, plan));
  const auto lifted = class_set(lifted_lattice(g, base).lifted);
  const auto zero = class_set(zero_level_lattice(g, base));
  const auto req = class_set(relative_equilibria_lattice(g, base));
  const auto emp_lifted = empirical_lifted_lattice(a, plan);
  const auto emp_zero = empirical_zero_momentum_lattice(a, plan);
  const auto emp_req = empirical_requilibria_lattice(a, plan);

  bool ok = true;
  const auto line = [&](const char* what, const std::set<ClassTag>& p, const std::set<ClassTag>& e) {
    const bool m = p == e;
    ok = ok && m;
    out << "  " << what << " predicted " << tag_list(p) << " empirical " << tag_list(e) << "  "
        << (m ? "MATCH" : "MISMATCH") << "\n";
  };
  out << a.name() << "  base " << tag_list(class_set(base)) << "\n";
  line("lifted     ", lifted, emp_lifted);
  line("zero-level ", zero, emp_zero);
  line("requilibria", req, emp_req);
  return ok;
}

int cmd_check(const Options& o, std::ostream& out) {
  std::vector<ConcreteAction> actions;
  if (o.all_actions) {
    actions = catalog_actions();
  } else {
    std::string name = o.action;
    if (name.empty() && !o.input.empty()) {
      const ProblemSpec spec = parse_spec(read_file(o.input));
      if (!spec.action) throw ValidationError("input names no action", "/action");
      name = *spec.action;
    }
    const auto a = ConcreteAction::parse(name);
    if (!a) throw ValidationError("unknown action " + name, "/action");
    actions.push_back(*a);
  }
  bool ok = true;
  for (const auto& a : actions) ok = check_action(a, o, out) && ok;
  out << (ok ? "MATCH" : "MISMATCH") << "\n";
  return ok ? kExitOk : kExitInternal;
}

int cmd_adjoint(const Options& o, std::ostream& out) {
  const auto t = parse_display_name(o.tag);
  if (!t) throw SchemaError("unknown class name " + o.tag, "/tag");
  if ((t->kind == Kind::Cyclic || t->kind == Kind::Dihedral) && t->n > n_cap()) {
    throw ValidationError("n exceeds the configured cap", "/tag");
  }
  out << dump(to_json(isotropy_on_ann(canonical_rep(*t))));
  return kExitOk;
}

int cmd_catalog(const Options& o, std::ostream& out) {
  std::vector<ClassTag> tags{ClassTag::trivial()};
  for (int n = 2; n <= o.max_n; ++n) tags.push_back(ClassTag::cyclic(n));
  for (int n = 2; n <= o.max_n; ++n) tags.push_back(ClassTag::dihedral(n));
  for (const auto& t : {ClassTag::tetra(), ClassTag::octa(), ClassTag::icosa(), ClassTag::circle(),
                        ClassTag::orth_circle(), ClassTag::full()}) {
    tags.push_back(t);
  }
  std::sort(tags.begin(), tags.end());
  Json names = Json::array(), table = Json::array(), reps = Json::array();
  for (const auto& a : tags) {
    names.push_back(display_name(a));
    Json row = Json::array();
    for (const auto& b : tags) row.push_back(is_subconjugate(a, b) ? 1 : 0);
    table.push_back(row);
    reps.push_back({{"class", to_json(a)}, {"representative", to_json(canonical_rep(a))}});
  }
  out << dump(Json{{"classes", names}, {"subconjugate", table}, {"representatives", reps}});
  return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Isotropy lattices of tangent- and cotangent-lifted actions", "isolat"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--n-cap", o.n_cap, "largest n for Cyclic(n)/Dihedral(n)")->check(CLI::Range(2, 1000));

  auto* lift = app.add_subcommand("lift", "isotropy lattice of the lifted action");
  lift->add_option("--input", o.input, "problem JSON")->required();
  lift->add_flag("--cotangent", o.cotangent, "label the result as the cotangent lift");
  lift->add_option("--dot", o.dot_path, "also write the lifted Hasse diagram as DOT");
  lift->add_flag("--serial", o.serial, "use the single-threaded reference engine");

  auto* mu = app.add_subcommand("mu", "isotropy lattice of a momentum level set");
  mu->add_option("--input", o.input, "problem JSON")->required();
  mu->add_option("--mu", o.mu, "momentum value, e.g. 0,0,0 (SO3) or 1 (circle)");
  mu->add_option("--closure", o.closure, "also report the mu-closure of this class (e.g. C2)");

  auto* req = app.add_subcommand("requilibria", "isotropy lattice of possible relative equilibria");
  req->add_option("--input", o.input, "problem JSON")->required();

  auto* check = app.add_subcommand("check", "compare predictions with brute-force stabilizers");
  check->add_option("--action", o.action, "SO3_on_R3, SO3_on_S2, Circle_on_R2, Finite_on_R3(T), ...");
  check->add_option("--input", o.input, "problem JSON carrying an \"action\"");
  check->add_flag("--all", o.all_actions, "check every catalog action");
  check->add_option("--seed", o.seed, "sampling seed");
  check->add_option("--samples", o.samples, "random samples per action")->check(CLI::NonNegativeNumber);

  auto* adjoint = app.add_subcommand("adjoint", "stabilizers of H acting on ann h");
  adjoint->add_option("tag", o.tag, "class name: 1, C4, D3, T, O, I, SO2, O2, SO3")->required();

  auto* catalog = app.add_subcommand("catalog", "subconjugation table and canonical representatives");
  catalog->add_option("--max-n", o.max_n, "largest n listed")->check(CLI::Range(2, 100));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    set_n_cap(o.n_cap);
    if (lift->parsed()) return cmd_lift(o, out);
    if (mu->parsed()) return cmd_mu(o, out);
    if (req->parsed()) return cmd_requilibria(o, out);
    if (check->parsed()) {
      if (o.action.empty() && o.input.empty() && !o.all_actions) {
        err << "check: one of --action, --input or --all is required\n";
        return kExitUsage;
      }
      return cmd_check(o, out);
    }
    if (adjoint->parsed()) return cmd_adjoint(o, out);
    if (catalog->parsed()) return cmd_catalog(o, out);
  } catch (const Error& e) {
    err << dump(error_record(e.code(), e.path(), e.what()));
    return e.is_validation() ? kExitValidation : kExitInternal;
  } catch (const std::exception& e) {
    err << dump(error_record("InternalError", "", e.what()));
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace isolat
