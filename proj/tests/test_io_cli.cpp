#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <unistd.h>
#include <sstream>

#include "isolat/cli.hpp"
#include "isolat/error.hpp"
#include "isolat/io.hpp"
#include "support.hpp"

using namespace isolat;
using namespace isolat::testing;

namespace {

namespace fs = std::filesystem;

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / ("isolat_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

std::string write_input(const std::string& name, const std::string& text) {
  const fs::path p = scratch_dir() / name;
  std::ofstream(p) << text;
  return p.string();
}

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kR3 = R"({"group":{"kind":"SO3"},"base_lattice":[{"kind":"SO2"},{"kind":"SO3"}]})";
const std::string kD4 =
    R"({"group":{"kind":"finite","generators":[{"axis":[0,0,1],"angle_deg":90},{"axis":[1,0,0],"angle_deg":180}]},)"
    R"("base_lattice":[{"kind":"1"},{"kind":"C","n":2},{"kind":"C","n":4},{"kind":"D","n":4}]})";

template <class E>
void expect_error(const std::string& text, const std::string& path) {
  try {
    parse_spec(text);
    FAIL("no error for " << text);
  } catch (const E& e) {
    CHECK(e.path() == path);
  }
}

}  // namespace

TEST_CASE("parse_spec examples") {
  const auto r3 = parse_spec(kR3);
  CHECK(r3.group.kind == AmbientGroup::Kind::SO3);
  CHECK(r3.base_lattice == std::vector<ClassTag>{ClassTag::circle(), ClassTag::full()});

  CHECK_THROWS_AS(parse_spec(R"({"group":{"kind":"SO3"},"base_lattice":[]})"), ValidationError);

  const auto d4 = parse_spec(kD4);
  CHECK(d4.group.kind == AmbientGroup::Kind::Finite);
  CHECK(d4.group.group.order() == 8);
  CHECK(d4.group.tag() == ClassTag::dihedral(4));
}

TEST_CASE("parse_spec rejects bad documents with a path") {
  expect_error<SchemaError>("[1,2", "");
  expect_error<SchemaError>(R"({"group":{"kind":"SO3"},"base_lattice":[{"kind":"SO3"}],"extra":1})", "/extra");
  expect_error<SchemaError>(R"({"group":{"kind":"SU2"},"base_lattice":[{"kind":"1"}]})", "/group/kind");
  expect_error<SchemaError>(R"({"group":{"kind":"SO3"},"base_lattice":[{"kind":"Q"}]})", "/base_lattice/0/kind");
  expect_error<ValidationError>(R"({"group":{"kind":"SO3"},"base_lattice":[{"kind":"C","n":1}]})",
                                "/base_lattice/0/n");
  expect_error<ValidationError>(R"({"group":{"kind":"SO3"},"base_lattice":[{"kind":"C","n":101}]})",
                                "/base_lattice/0/n");
  expect_error<ValidationError>(R"({"group":{"kind":"SO3"},"base_lattice":[{"kind":"T"},{"kind":"T"}]})",
                                "/base_lattice/1");
  expect_error<ValidationError>(R"({"group":{"kind":"circle"},"base_lattice":[{"kind":"D","n":2}]})",
                                "/base_lattice/0");
  expect_error<ValidationError>(
      R"({"group":{"kind":"finite","generators":[{"axis":[0,0,1],"angle_deg":1}]},"base_lattice":[{"kind":"1"}]})",
      "/group/generators");
  expect_error<ValidationError>(R"({"group":{"kind":"SO3"},"base_lattice":[{"kind":"SO2"},{"kind":"SO3"}],)"
                                R"("order":[[1,0]]})",
                                "/order/0");
}

TEST_CASE("declared order must equal the derived order") {
  const std::string chain = R"({"group":{"kind":"SO3"},"base_lattice":[{"kind":"1"},{"kind":"SO2"},{"kind":"SO3"}],)";
  CHECK_NOTHROW(parse_spec(chain + R"("order":[[0,1],[1,2]]})"));
  CHECK_NOTHROW(parse_spec(chain + R"("order":[[0,1],[1,2],[0,2]]})"));
  CHECK_THROWS_AS(parse_spec(chain + R"("order":[[0,1]]})"), ValidationError);
}

TEST_CASE("emit_lattice") {
  CHECK(Json::parse(emit_lattice(build_lattice(std::vector<ClassTag>{ClassTag::trivial()}), "json")) ==
        Json::parse(R"({"classes":[{"kind":"1"}],"hasse":[]})"));
  const std::string dot =
      emit_lattice(build_lattice(std::vector<ClassTag>{ClassTag::circle(), ClassTag::full()}), "dot");
  CHECK(dot.find("n0 -> n1") != std::string::npos);
  CHECK(dot.find("n1 -> ") == std::string::npos);
  const auto diamond = Json::parse(emit_lattice(
      build_lattice(std::vector<ClassTag>{ClassTag::trivial(), ClassTag::cyclic(2), ClassTag::cyclic(3),
                                          ClassTag::dihedral(6)}),
      "json"));
  CHECK(diamond["classes"].size() == 4);
  CHECK(diamond["hasse"].size() == 4);
}

TEST_CASE("number formatting") {
  CHECK(clean_number(-0.0) == 0.0);
  CHECK_FALSE(std::signbit(clean_number(-1e-15)));
  CHECK(clean_number(89.99999999999999) == 90.0);
  CHECK(dump(Json(clean_number(1.0 / 3.0))) == "0.333333333333\n");
  CHECK(to_json(Rotation::identity()) == Json::parse(R"({"angle_deg":0,"axis":[0,0,1]})"));
  CHECK(to_json(Rotation::about({0, 0, -1}, kPi / 2)) == Json::parse(R"({"angle_deg":-90,"axis":[0,0,1]})"));
  const std::string text = dump(Json::parse(R"({"b":[1,2],"a":{"y":0.5,"x":"s"}})"));
  CHECK(text == "{\n  \"a\": {\n    \"x\": \"s\",\n    \"y\": 0.5\n  },\n  \"b\": [\n    1,\n    2\n  ]\n}\n");
}

TEST_CASE("spec round trip") {
  std::mt19937_64 rng(13);
  std::vector<ClassTag> so3_pool = finite_tags(9);
  so3_pool.push_back(ClassTag::circle());
  so3_pool.push_back(ClassTag::orth_circle());
  so3_pool.push_back(ClassTag::full());
  std::bernoulli_distribution pick(0.3);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    ProblemSpec spec;
    std::vector<ClassTag> pool;
    switch (trial % 3) {
      case 0:
        spec.group = AmbientGroup::so3();
        pool = so3_pool;
        break;
      case 1:
        spec.group = AmbientGroup::circle();
        pool = {ClassTag::trivial(), ClassTag::cyclic(2), ClassTag::cyclic(5), ClassTag::cyclic(12), ClassTag::circle()};
        break;
      default: {
        const auto tags = finite_tags(6);
        const ClassTag t = tags[std::uniform_int_distribution<std::size_t>(1, tags.size() - 1)(rng)];
        const Rotation g = random_rotation(rng);
        for (const auto& r : canonical_generators(t)) spec.generators.push_back(conjugate_by(g, r));
        spec.group = AmbientGroup::finite(close_group(spec.generators));
        for (const auto& s : tags) {
          if (is_subconjugate(s, t)) pool.push_back(s);
        }
      }
    }
    for (const auto& t : pool) {
      if (pick(rng)) spec.base_lattice.push_back(t);
    }
    if (spec.base_lattice.empty()) spec.base_lattice.push_back(pool.back());
    std::shuffle(spec.base_lattice.begin(), spec.base_lattice.end(), rng);
    if (trial % 4 == 0) {
      std::vector<std::pair<int, int>> order;
      const int n = static_cast<int>(spec.base_lattice.size());
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (i != j && is_subconjugate(spec.base_lattice[i], spec.base_lattice[j])) order.emplace_back(i, j);
        }
      }
      spec.declared_order = order;
    }
    if (trial % 5 == 0) spec.action = "SO3_on_S2";

    const std::string text = emit_spec(spec);
    const ProblemSpec back = parse_spec(text);
    CHECK(back == spec);
    // Generators pass through 12-digit decimal form, so only exact groups are
    // byte-stable on re-emission.
    if (spec.group.kind != AmbientGroup::Kind::Finite) CHECK(emit_spec(back) == text);
    CHECK(parse_spec(emit_spec(back)) == spec);
    ++checked;
  }
  CHECK(checked == 150);
}

TEST_CASE("error records") {
  const auto rec = error_record("SchemaError", "/group", "missing");
  CHECK(rec == Json::parse(R"({"error":{"code":"SchemaError","message":"missing","path":"/group"}})"));
}

TEST_CASE("cli: lift") {
  const auto path = write_input("r3.json", kR3);
  const Run r = run({"lift", "--input", path});
  CHECK(r.code == kExitOk);
  const auto doc = Json::parse(r.out);
  CHECK(doc["classes"] == Json::parse(R"([{"kind":"1"},{"kind":"SO2"},{"kind":"SO3"}])"));
  CHECK(doc["hasse"] == Json::parse("[[0,1],[1,2]]"));
  CHECK(doc["bundle"] == "TM");

  // Byte determinism and the serial reference.
  CHECK(run({"lift", "--input", path}).out == r.out);
  CHECK(run({"lift", "--input", path, "--serial"}).out == r.out);

  // Cotangent alias differs only in the bundle label.
  auto co = Json::parse(run({"lift", "--input", path, "--cotangent"}).out);
  CHECK(co["bundle"] == "T*M");
  co["bundle"] = "TM";
  CHECK(co == doc);

  const auto dot = (scratch_dir() / "r3.dot").string();
  CHECK(run({"lift", "--input", path, "--dot", dot}).code == kExitOk);
  std::ifstream in(dot);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text.find("rankdir=BT") != std::string::npos);
}

TEST_CASE("cli: validation failures exit 2 with an error record") {
  const auto bad = write_input("bad.json", R"({"group":{"kind":"SO3"},"base_lattice":[{"kind":"C","n":2},{"kind":"C","n":3}]})");
  const Run r = run({"lift", "--input", bad});
  CHECK(r.code == kExitValidation);
  CHECK(r.out.empty());
  const auto err = Json::parse(r.err);
  CHECK(err["error"]["code"] == "NoUniqueMinimum");
  CHECK(err["error"]["path"] == "/base_lattice");
  CHECK(err["error"].contains("message"));

  const Run missing = run({"lift", "--input", (scratch_dir() / "nope.json").string()});
  CHECK(missing.code == kExitValidation);
  CHECK(Json::parse(missing.err)["error"].contains("code"));

  const Run not_iso = run({"mu", "--input", write_input("r3.json", kR3), "--mu", "0,0,1"});
  CHECK(not_iso.code == kExitValidation);
  CHECK(Json::parse(not_iso.err)["error"]["code"] == "NotTotallyIsotropic");

  CHECK(run({"adjoint", "C200"}).code == kExitValidation);
  CHECK(run({"check", "--action", "Nope"}).code == kExitValidation);
}

TEST_CASE("cli: usage errors exit 1") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"lift"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("cli: check") {
  const Run r = run({"check", "--action", "SO3_on_S2", "--samples", "2000"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("MATCH") != std::string::npos);
  CHECK(r.out.find("MISMATCH") == std::string::npos);
  CHECK(r.out.substr(r.out.size() - 6) == "MATCH\n");

  const auto spec = write_input("s2.json", R"({"group":{"kind":"SO3"},"base_lattice":[{"kind":"SO2"}],"action":"SO3_on_S2"})");
  CHECK(run({"check", "--input", spec, "--samples", "500"}).code == kExitOk);
}

TEST_CASE("cli: mu, requilibria, adjoint, catalog") {
  const auto circle = write_input(
      "circle.json", R"({"group":{"kind":"circle"},"base_lattice":[{"kind":"C","n":2},{"kind":"C","n":4},{"kind":"SO2"}]})");
  const Run mu = run({"mu", "--input", circle, "--mu", "1", "--closure", "C2"});
  CHECK(mu.code == kExitOk);
  const auto doc = Json::parse(mu.out);
  CHECK(doc["classes"] == Json::parse(R"([{"kind":"C","n":2},{"kind":"C","n":4}])"));
  CHECK(doc["closure"]["classes"].size() == 2);

  const auto s2 = write_input("s2only.json", R"({"group":{"kind":"SO3"},"base_lattice":[{"kind":"SO2"}]})");
  const Run re = run({"requilibria", "--input", s2});
  CHECK(re.code == kExitOk);
  const auto rdoc = Json::parse(re.out);
  CHECK(rdoc["classes"] == Json::parse(R"([{"kind":"1"},{"kind":"SO2"}])"));
  CHECK(rdoc["witness"].size() == 2);

  const Run adj = run({"adjoint", "D4"});
  CHECK(adj.code == kExitOk);
  CHECK(Json::parse(adj.out).size() == 5);

  const Run cat = run({"catalog", "--max-n", "3"});
  CHECK(cat.code == kExitOk);
  CHECK(Json::parse(cat.out)["classes"].size() == 11);
}

TEST_CASE("cli: n-cap") {
  const auto big = write_input("big.json", R"({"group":{"kind":"SO3"},"base_lattice":[{"kind":"C","n":150},{"kind":"SO3"}]})");
  CHECK(run({"lift", "--input", big}).code == kExitValidation);
  CHECK(run({"--n-cap", "200", "lift", "--input", big}).code == kExitOk);
  CHECK(run({"lift", "--input", big}).code == kExitValidation);
}
