#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "qci/serialize.hpp"

using qci::Json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = qci::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string spec(const char* name) { return std::string(QCI_SPECS_DIR "/") + name; }

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "qci-cli-tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

}  // namespace

TEST_CASE("verify exit codes") {
  const Run ok = run({"verify", "--spec", spec("a23_qminus1.toml"), "--coproduct", "paper31", "--g", "auto"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("verdict: PASS") != std::string::npos);

  const Run remark = run({"verify", "--spec", spec("a23_qminus1.toml"), "--coproduct", "signed62"});
  CHECK(remark.code == 1);
  CHECK(remark.out.find("S(1) = 1+x2^2") != std::string::npos);

  const Run bad = run({"verify", "--spec", spec("bad.toml")});
  CHECK(bad.code == 64);
  CHECK(bad.err.find("invalid-spec") != std::string::npos);

  CHECK(run({"verify", "--spec", spec("nope.toml")}).code == 64);
  CHECK(run({"verify", "--bogus"}).code == 64);
  CHECK(run({}).code == 64);
  CHECK(run({"verify", "--spec", spec("a23_qminus1.toml"), "--coproduct", "other"}).code == 64);
  // q = 2 has no g-solution: a precondition failure.
  CHECK(run({"verify", "--field", "Fp:5", "--a", "2,2", "--q", "2"}).code == 2);
  CHECK(run({"verify", "--a", "2,3", "--q", "1"}).code == 2);
}

TEST_CASE("verify JSON report") {
  const Run r = run({"verify", "--spec", spec("a22_q1_f5.toml"), "--format", "json"});
  REQUIRE(r.code == 0);
  const Json doc = Json::parse(r.out);
  CHECK(doc["command"] == "verify");
  CHECK(doc["verdict"] == "pass");
  CHECK(doc["coproduct"] == "paper31");
  CHECK(doc["g"]["h"] == Json::array({"4", "1"}));
  CHECK(doc["antipode"]["is_identity"] == false);
  CHECK(doc["report"]["overall"] == true);

  const Run s62 = run({"verify", "--spec", spec("a222_qminus1.json"), "--coproduct", "signed62", "--format", "json"});
  REQUIRE(s62.code == 0);
  CHECK(Json::parse(s62.out)["antipode"]["is_identity"] == true);

  const Run err = run({"verify", "--spec", spec("bad.toml"), "--format", "json"});
  CHECK(Json::parse(err.out)["error"]["kind"] == "invalid-spec");
}

TEST_CASE("primitives, compare, obstruction, searches") {
  const Run p = run({"primitives", "--spec", spec("a23_qminus1.toml"), "--coproduct", "path61", "--format", "json"});
  REQUIRE(p.code == 0);
  CHECK(Json::parse(p.out)["dim"] == 2);

  const Run c = run({"compare", "--spec", spec("a23_qminus1.toml"), "--format", "json"});
  REQUIRE(c.code == 0);
  const Json cd = Json::parse(c.out);
  CHECK(cd["distinguished"] == true);
  CHECK(cd["primitive_dims"] == Json::array({4, 2}));
  CHECK(run({"compare", "--spec", spec("a23_qminus1.toml"), "--coproduct", "path61"}).code == 64);

  const Run o = run({"obstruction", "--a", "2,3", "--char", "0", "--format", "json"});
  REQUIRE(o.code == 0);
  CHECK(Json::parse(o.out)["verdict"] == "no-bialgebra");
  const Run o2 = run({"obstruction", "--a", "6,2", "--char", "2"});
  CHECK(o2.out.find("binom(6,2) = 15") != std::string::npos);
  CHECK(run({"obstruction", "--a", "6,x"}).code == 64);
  CHECK(run({"obstruction", "--a", "6,2", "--char", "4"}).code == 2);
  CHECK(run({"obstruction"}).code == 64);

  const Run cij = run({"search-cij", "--q", "1", "--field", "Fp:3", "--format", "json"});
  REQUIRE(cij.code == 0);
  CHECK(Json::parse(cij.out)["solutions"] == Json::array());
  CHECK(Json::parse(run({"search-cij", "--q", "-1", "--field", "Fp:5", "--format", "json"}).out)["solutions"].size() == 6);

  const Run g = run({"search-g", "--field", "Fp:5", "--a", "2,2", "--q", "2", "--format", "json"});
  REQUIRE(g.code == 0);
  CHECK(Json::parse(g.out)["examined"] == 16);
  CHECK(Json::parse(g.out)["passing"] == 0);
  const Run big = run({"search-g", "--field", "Fp:5", "--a", "2,2", "--q", "1", "--bound", "3"});
  CHECK(big.code == 2);
  CHECK(big.err.find("search-space-too-large") != std::string::npos);
}

TEST_CASE("search bound from the environment") {
  setenv("QCI_SEARCH_BOUND", "3", 1);
  CHECK(run({"search-g", "--field", "Fp:5", "--a", "2,2", "--q", "1"}).code == 2);
  CHECK(run({"search-g", "--field", "Fp:5", "--a", "2,2", "--q", "1", "--bound", "100"}).code == 0);
  setenv("QCI_SEARCH_BOUND", "abc", 1);
  CHECK(run({"search-g", "--field", "Fp:5", "--a", "2,2", "--q", "1"}).code == 64);
  unsetenv("QCI_SEARCH_BOUND");
  CHECK(run({"search-g", "--field", "Fp:5", "--a", "2,2", "--q", "1"}).code == 0);
}

TEST_CASE("exported tables reproduce the report") {
  // The signed table on a=(2,3) is not coassociative, so it would be rejected on import.
  const std::vector<std::pair<std::string, const char*>> cases = {
      {"paper31", "a23_qminus1.toml"}, {"paper31", "a22_q1_f5.toml"},
      {"path61", "a23_qminus1.toml"}, {"signed62", "a222_qminus1.json"}};
  for (const auto& [sel, file] : cases) {
    CAPTURE(sel);
    const std::vector<std::string> base = {"--spec", spec(file), "--format", "json"};
    std::vector<std::string> exp = {"export-coproduct", "--coproduct", sel};
    exp.insert(exp.end(), base.begin(), base.end());
    const Run e = run(exp);
    REQUIRE(e.code == 0);
    const auto path = scratch(sel + "-" + file + ".json");
    write(path, e.out);

    std::vector<std::string> direct = {"verify", "--coproduct", sel};
    direct.insert(direct.end(), base.begin(), base.end());
    const Run first = run(direct);
    // No --spec: the table carries its own algebra.
    const Run again = run({"verify", "--coproduct", "file:" + path.string(), "--format", "json"});
    CHECK(first.code == again.code);
    Json a = Json::parse(first.out);
    Json b = Json::parse(again.out);
    CHECK(b["coproduct"] == sel);
    CHECK(a["report"].dump() == b["report"].dump());
    CHECK(a["antipode"].dump() == b["antipode"].dump());
    CHECK(a.dump() == b.dump());
  }
}

TEST_CASE("file tables are validated") {
  const Run e = run({"export-coproduct", "--spec", spec("a23_qminus1.toml"), "--format", "json"});
  Json doc = Json::parse(e.out);
  doc["coproduct"][1]["image"][0]["coeff"] = "2";
  const auto path = scratch("broken.json");
  write(path, doc.dump());
  const Run r = run({"verify", "--coproduct", "file:" + path.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("fails") != std::string::npos);

  write(scratch("signed62-a23.json"),
        run({"export-coproduct", "--coproduct", "signed62", "--spec", spec("a23_qminus1.toml")}).out);
  const Run rejected = run({"verify", "--coproduct", "file:" + scratch("signed62-a23.json").string()});
  CHECK(rejected.code == 2);
  CHECK(rejected.err.find("coassociativity at v=(0,2)") != std::string::npos);

  write(scratch("garbage.json"), "{not json");
  CHECK(run({"verify", "--coproduct", "file:" + scratch("garbage.json").string()}).code == 64);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::vector<std::string>> commands = {
      {"verify", "--spec", spec("a33_q1_gauss.toml"), "--format", "json"},
      {"search-g", "--field", "Fp:5", "--a", "2,3", "--q", "-1", "--format", "json"},
      {"search-cij", "--field", "Fp:7", "--q", "-1", "--format", "json"},
      {"compare", "--spec", spec("a222_qminus1.json"), "--coproduct", "path61", "--coproduct", "signed62",
       "--format", "json"},
  };
  for (const auto& cmd : commands) {
    const Run a = run(cmd);
    const Run b = run(cmd);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}
