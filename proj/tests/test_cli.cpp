#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "oracles.hpp"
#include "vlh/cli.hpp"
#include "vlh/error.hpp"
#include "vlh/io.hpp"

using namespace vlh;
using nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
  json parsed() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "vlh");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string corpus_file(const std::string& name) { return std::string(VLH_CORPUS_DIR) + "/" + name; }

std::filesystem::path scratch(const std::string& name, const std::string& text) {
  const auto dir = std::filesystem::temp_directory_path() / "vlh_cli_tests";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("graded unknot") {
    const Run r = run({"compute", "--diagram", corpus_file("unknot.json"), "--theory", "manturov", "--graded"});
    CHECK(r.code == 0);
    const json rep = r.parsed()["reports"][0];
    CHECK(rep["qtable"] == json::parse(R"({"0": {"-1": 1, "1": 1}})"));
    CHECK(rep["betti"] == json::parse(R"({"0": 2})"));
    CHECK(rep["euler_matches_jones"] == true);
  }

  TEST_CASE("gauss text input over the rationals") {
    const auto path = scratch("trefoil.gauss", "# right-handed trefoil\nO1+,U2+,O3+,\nU1+,O2+,U3+\n");
    const Run r = run({"compute", "--diagram", path.string(), "--triple", "1,0,1", "--field", "q"});
    CHECK(r.code == 0);
    const json rep = r.parsed()["reports"][0];
    CHECK(rep["diagram"] == "trefoil");
    CHECK(rep["betti"] == json::parse(R"({"0": 2})"));
    CHECK(rep["euler"] == 2);
    CHECK(rep["dims"] == json::parse("[4, 6, 12, 8]"));
    const auto d = load_diagram(path).diagram;
    CHECK(rep["betti"]["0"] == oracle::classical_betti(d, Scalar(Field::rationals(), 1), Scalar(Field::rationals(), 2),
                                                       Scalar(Field::rationals(), -2))
                                   .at(0));
  }

  TEST_CASE("euler equals the state sum at one across the corpus") {
    std::vector<std::string> args{"compute", "--theory", "f2_row8"};
    for (const auto& rec : oracle::corpus()) {
      args.push_back("--diagram");
      args.push_back(rec.source);
    }
    const Run r = run(args);
    CHECK(r.code == 0);
    const json reports = r.parsed()["reports"];
    CHECK(reports.size() == oracle::corpus().size());
    for (const auto& rep : reports) CHECK(rep["euler"] == rep["jones_at_one"]);
  }

  TEST_CASE("verify") {
    for (const auto& name : preset_names()) {
      const Run r = run({"verify", "--theory", name});
      CHECK(r.code == 0);
      CHECK(r.parsed()["all_passed"] == true);
    }
    const Run bad = run({"verify", "--params", "a=1,t=0,lambda=1,mu=1,beta=0,field=f2"});
    CHECK(bad.code == 2);
    bool eq2_failed = false;
    const json report = bad.parsed();
    for (const auto& c : report["checks"]) {
      if (c["name"] == "eq2_classification") eq2_failed = c["passed"] == false && c["witness"] == "residual = 1";
    }
    CHECK(eq2_failed);

    const Run triple = run({"verify", "--triple", "1,1,1,field=q"});
    CHECK(triple.code == 0);
    CHECK(triple.parsed()["theory"]["t"] == "-1");
  }

  TEST_CASE("surface") {
    CHECK(run({"surface", "--genus", "0", "--crosscaps", "0", "--theory", "f2_row1"}).parsed()["value"] == "0");
    CHECK(run({"surface", "--genus", "1", "--crosscaps", "0", "--theory", "f2_row1"}).parsed()["value"] == "0");
    CHECK(run({"surface", "--genus", "1", "--triple", "1,0,1"}).parsed()["value"] == "2");
    CHECK(run({"surface", "--crosscaps", "1", "--theory", "f2_row7"}).parsed()["value"] == "1");
  }

  TEST_CASE("jones") {
    const Run r = run({"jones", "--diagram", corpus_file("trefoil.json")});
    CHECK(r.code == 0);
    CHECK(r.parsed()["reports"][0]["jones"] == json::parse(R"({"1": 1, "3": 1, "5": 1, "9": -1})"));
  }

  TEST_CASE("invariance") {
    const Run none = run({"invariance", "--diagram", corpus_file("trefoil.json"), "--theory", "manturov",
                          "--moves", "0", "--seed", "1"});
    CHECK(none.code == 0);
    CHECK(none.parsed()["mismatches"].empty());

    const std::vector<std::string> args{"invariance", "--diagram", corpus_file("r3_mixed_a.json"), "--diagram",
                                        corpus_file("r3_mixed_b.json"), "--diagram", corpus_file("virtual_trefoil.json"),
                                        "--theory", "manturov", "--moves", "6", "--seed", "42"};
    const Run first = run(args);
    CHECK(first.code == 0);
    CHECK(first.parsed()["mismatches"].empty());
    CHECK(first.parsed()["r3_pairs"].size() == 1);
    CHECK(first.parsed()["r3_pairs"][0]["equal"] == true);
    CHECK(run(args).out == first.out);
  }

  TEST_CASE("repeated runs are byte-identical") {
    const std::vector<std::string> args{"compute", "--diagram", corpus_file("borromean.json"), "--diagram",
                                        corpus_file("kishino.json"), "--triple", "2,1,3"};
    CHECK(run(args).out == run(args).out);
  }

  TEST_CASE("text format") {
    const Run r = run({"compute", "--diagram", corpus_file("trefoil.json"), "--theory", "manturov", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out.find("trefoil") != std::string::npos);
    CHECK_THROWS(json::parse(r.out));
  }

  TEST_CASE("output file") {
    const auto path = std::filesystem::temp_directory_path() / "vlh_cli_tests" / "report.json";
    std::filesystem::create_directories(path.parent_path());
    const Run r = run({"jones", "--diagram", corpus_file("unknot.json"), "--out", path.string()});
    CHECK(r.code == 0);
    std::ifstream in(path);
    CHECK(json::parse(in)["reports"][0]["jones"] == json::parse(R"({"-1": 1, "1": 1})"));
  }

  TEST_CASE("exit codes and error reports") {
    const Run missing = run({"compute", "--diagram", "/nonexistent/x.json", "--theory", "manturov"});
    CHECK(missing.code == 3);
    CHECK(missing.parsed()["error"]["kind"] == "IoError");

    const Run two = run({"compute", "--diagram", corpus_file("unknot.json"), "--theory", "manturov", "--triple",
                         "1,0,1"});
    CHECK(two.code == 3);
    CHECK(two.parsed()["error"]["kind"] == "InvalidConfig");

    const Run bad_gauss = run({"compute", "--diagram", scratch("bad.gauss", "O1+,U1-").string(), "--theory",
                               "manturov"});
    CHECK(bad_gauss.code == 3);
    CHECK(bad_gauss.parsed()["error"]["kind"] == "SignMismatch");

    const Run invalid = run({"compute", "--diagram", corpus_file("unknot.json"), "--params",
                             "a=1,t=0,lambda=1,mu=1,beta=0,field=f2"});
    CHECK(invalid.code == 3);
    CHECK(invalid.parsed()["error"]["kind"] == "ConstraintViolated");
    CHECK(invalid.parsed()["error"]["subject"] == "eq2");

    const Run preset_over_q = run({"compute", "--diagram", corpus_file("unknot.json"), "--theory", "f2_row1",
                                   "--field", "q"});
    CHECK(preset_over_q.code == 3);

    const Run ungraded = run({"compute", "--diagram", corpus_file("virtual_trefoil.json"), "--theory", "f2_row7",
                              "--graded"});
    CHECK(ungraded.code == 3);
    CHECK(ungraded.parsed()["error"]["kind"] == "InvalidConfig");

    CHECK(run({"frobnicate"}).code == 3);
    CHECK(run({"compute", "--theory", "nonsense", "--diagram", corpus_file("unknot.json")}).code == 3);
  }

  TEST_CASE("diagram files round-trip through json") {
    for (const auto& rec : oracle::corpus()) {
      const DiagramRecord back = diagram_from_json(json::parse(diagram_to_json(rec).dump()));
      CHECK(back.diagram == rec.diagram);
      CHECK(back.diagram.name() == rec.diagram.name());
      CHECK(back.classical == rec.classical);
      CHECK(back.equivalence_class == rec.equivalence_class);
    }
    CHECK_THROWS_AS(diagram_from_json(json::parse(R"({"components": [[{"c": 1, "o": true}]]})")), Error);
  }
}
