#include "doctest.h"

#include "leibniz/cli.hpp"
#include "leibniz/io.hpp"
#include "leibniz/triangular.hpp"

#include "json.hpp"

#include <filesystem>

using leibniz::cli::Report;
using leibniz::cli::run;

namespace {

namespace fs = std::filesystem;

fs::path scratch() {
  fs::path dir = fs::temp_directory_path() / "leibniz_lab_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string write(const std::string& name, const std::string& content) {
  const std::string path = (scratch() / name).string();
  leibniz::write_file(path, content);
  return path;
}

std::string verdict(const Report& r, const std::string& key) {
  for (const auto& [k, v] : r.verdicts)
    if (k == key) return v;
  return "<missing>";
}

}  // namespace

TEST_CASE("triangular then check") {
  const std::string path = (scratch() / "t4.json").string();
  Report t = run({"triangular", "--n", "4", "--out", path});
  CHECK(t.exit_code == 0);
  CHECK(t.artifacts == std::vector<std::string>{path});
  Report c = run({"check", path});
  CHECK(c.exit_code == 0);
  CHECK(verdict(c, "leibniz") == "true");
  CHECK(verdict(c, "lie") == "true");
  CHECK(verdict(c, "lower_central") == "(6,3,1,0)");
  CHECK(verdict(c, "derived") == "(6,3,0)");
  CHECK(leibniz::load_algebra(path) == leibniz::triangular(4));
}

TEST_CASE("check refutes a non-Leibniz table with exit 1") {
  const std::string path = write("broken.json", R"({"dim": 2, "labels": ["a", "b"], "brackets": [
    {"left": "a", "right": "b", "value": [{"coef": "1", "basis": "a"}]},
    {"left": "b", "right": "b", "value": [{"coef": "1", "basis": "b"}]}]})");
  Report r = run({"check", path});
  CHECK(r.exit_code == 1);
  CHECK(verdict(r, "leibniz") == "false");
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(run({}).exit_code == 2);
  CHECK(run({"frobnicate"}).exit_code == 2);
  CHECK(run({"triangular"}).exit_code == 2);
  CHECK(run({"triangular", "--n", "4", "--bogus"}).exit_code == 2);
  CHECK(run({"triangular", "--n", "2"}).exit_code == 2);
  CHECK(run({"--format", "xml", "triangular", "--n", "4"}).exit_code == 2);
  CHECK(run({"verify", "--n", "4"}).exit_code == 2);
  CHECK(run({"verify", "--lemma", "9.9", "--n", "4", "--f", "1"}).exit_code == 2);
  CHECK(run({"verify", "--theorem", "3.4", "--lemma", "3.1", "--n", "4"}).exit_code == 2);
  CHECK(run({"check", "/nonexistent.json"}).exit_code == 2);
  CHECK(run({"canonical", "--form", "L9"}).exit_code == 2);
  CHECK(run({"canonical", "--form", "L1"}).exit_code == 2);  // all parameters zero is Lie
}

TEST_CASE("malformed algebra file reports line or field") {
  Report r = run({"check", write("syntax.json", "{\n\"dim\": 1,\n\"labels\": [\"a\"\n")});
  CHECK(r.exit_code == 2);
  CHECK(r.error.find("line") != std::string::npos);
  Report f = run({"series", write("field.json", R"({"dim": 1, "labels": ["a"], "brackets": [{"left": "a"}]})")});
  CHECK(f.exit_code == 2);
  CHECK(f.error.find("algebra.brackets[0]") != std::string::npos);
}

TEST_CASE("verify relation and shape checks") {
  CHECK(run({"verify", "--lemma", "3.1", "--n", "4", "--f", "1"}).exit_code == 0);
  CHECK(run({"verify", "--lemma", "3.2", "--n", "3", "--f", "2"}).exit_code == 0);
  CHECK(run({"verify", "--lemma", "2.4", "--n", "4", "--f", "1", "--samples", "10"}).exit_code == 0);
  CHECK(run({"verify", "--restrictions", "--n", "4", "--f", "1", "--samples", "50"}).exit_code == 0);
}

TEST_CASE("verify maximal extension and its corrupted control") {
  CHECK(run({"verify", "--theorem", "3.4", "--n", "4", "--samples", "10"}).exit_code == 0);
  Report c = run({"verify", "--theorem", "3.4", "--n", "4", "--samples", "5", "--corrupt-normalization"});
  CHECK(c.exit_code == 1);
  CHECK(verdict(c, "symbolic_forced_lie") == "false");
  CHECK(run({"verify", "--theorem", "3.4", "--n", "7"}).exit_code == 2);
}

TEST_CASE("extend, N1n annihilation and the restriction message") {
  const std::string params = write("ext.txt", "a1_12_12 = 1\na1_23_23 = 1\na1_34_34 = -2\ns11_14 = 3\n");
  const std::string out = (scratch() / "ext.json").string();
  Report e = run({"extend", "--n", "4", "--f", "1", "--params", params, "--out", out});
  CHECK(e.exit_code == 0);
  CHECK(verdict(e, "lie") == "false");
  Report v = run({"verify", "--eq", "3", out});
  CHECK(v.exit_code == 0);
  CHECK(verdict(v, "verified") == "true");

  Report bad = run({"extend", "--n", "4", "--f", "1", "--params", write("bad.txt", "a1_12_12 = 1\nb1_12_14 = 1\n")});
  CHECK(bad.exit_code == 2);
  CHECK(bad.error.find("restriction") != std::string::npos);
}

TEST_CASE("classify-l41 and canonical") {
  const std::string params = write("l41.txt", "a1_23_23 = 2\na1_23_14 = 2\nb1_23_14 = -2\na1_34_13 = 4\nb1_12_14 = 1\n");
  const std::string witness = (scratch() / "w.txt").string();
  Report c = run({"classify-l41", "--params", params, "--witness-out", witness});
  CHECK(c.exit_code == 0);
  CHECK(verdict(c, "form") == "L1");
  CHECK(verdict(c, "b1_12_14") == "1/2");
  CHECK(leibniz::read_file(witness).size() > 0);

  Report bad = run({"classify-l41", "--params", write("l41bad.txt", "a1_12_12 = 1\nb1_12_14 = 1\n")});
  CHECK(bad.exit_code == 2);
  CHECK(bad.error.find("a1_12_12*b1_12_14") != std::string::npos);

  const std::string form = write("l3.txt", "a1_23_23 = 5\n");
  const std::string table = (scratch() / "l3.json").string();
  CHECK(run({"canonical", "--form", "L3", "--params", form, "--out", table}).exit_code == 0);
  Report chk = run({"check", table});
  CHECK(verdict(chk, "lie") == "false");
}

TEST_CASE("derivations and series") {
  const std::string path = (scratch() / "t3.json").string();
  run({"triangular", "--n", "3", "--out", path});
  Report d = run({"derivations", path});
  CHECK(d.exit_code == 0);
  CHECK(verdict(d, "dim_der") == "6");
  Report s = run({"series", path});
  CHECK(verdict(s, "nilpotent") == "true");
}

TEST_CASE("structured output and determinism") {
  Report a = run({"--format", "structured", "--seed", "5", "verify", "--lemma", "2.4", "--n", "4", "--f", "1",
                  "--samples", "5"});
  Report b = run({"verify", "--lemma", "2.4", "--n", "4", "--f", "1", "--samples", "5", "--seed", "5",
                  "--format", "structured"});
  CHECK(a.structured);
  CHECK(a.verdicts == b.verdicts);
  auto doc = nlohmann::json::parse(leibniz::cli::render_structured(a));
  CHECK(doc["exit_code"] == 0);
  CHECK(doc["verdicts"]["structure_failures"] == "0");
  CHECK(doc["command"].size() == a.command.size());
}
