#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "dcf/cli.hpp"
#include "json.hpp"

using namespace dcf;
using Json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("dcfield_cli_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kQ23 =
    R"({"base":"Q","gens":[{"name":"a","minpoly":"x^2-2"},{"name":"b","minpoly":"x^2-3"}]})";

}  // namespace

TEST(Cli, FactorExamples) {
  auto r = run({"factor", "--field", R"({"base":"Q","gens":[]})", "--poly", "x^4-1"});
  EXPECT_EQ(r.code, 0);
  auto j = r.json();
  ASSERT_EQ(j["factors"].size(), 3u);
  EXPECT_EQ(j["factors"][2]["poly"], "x^2+1");

  auto z = run({"factor", "--field", R"({"base":"Q","gens":[]})", "--poly", "0"});
  EXPECT_EQ(z.code, 1);
  EXPECT_NE(z.err.find("zero polynomial"), std::string::npos);

  auto t = run({"factor", "--field", R"({"base":"Q","gens":[{"name":"a","minpoly":"x^2-2"}]})", "--poly",
                "x^4-10*x^2+1"});
  EXPECT_EQ(t.code, 0);
  EXPECT_EQ(t.json()["factors"].size(), 2u);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"factor", "--field", "{not json", "--poly", "x"}).code, 2);
  EXPECT_EQ(run({"factor", "--field", R"({"base":"Q"})", "--poly", "x^^2"}).code, 2);
  auto red = run({"galois", "--tower", R"({"base":"Q","gens":[{"name":"a","minpoly":"x^2-4"}]})"});
  EXPECT_EQ(red.code, 1);
  EXPECT_NE(red.err.find("reducible"), std::string::npos);
  auto nn = run({"galois", "--tower", R"({"base":"Q","gens":[{"name":"r","minpoly":"x^3-2"}]})"});
  EXPECT_EQ(nn.code, 1);
  EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, NcpExamples) {
  auto r = run({"ncp", "--group", "S3"});
  EXPECT_EQ(r.code, 0);
  auto j = r.json();
  EXPECT_FALSE(j["holds"].get<bool>());
  EXPECT_TRUE(j["counterexample"]["verified"].get<bool>());
  EXPECT_EQ(j["counterexample"]["M"], Json::array({"e"}));

  auto c = run({"ncp", "--group", "C2xC2"}).json();
  EXPECT_TRUE(c["holds"].get<bool>());
  auto p = run({"ncp", "product", "--g", "C2", "--h", "C3"}).json();
  EXPECT_FALSE(p["violation"].get<bool>());

  auto pretty = run({"--pretty", "ncp", "--group", "C2"});
  EXPECT_EQ(pretty.code, 0);
  EXPECT_NE(pretty.out.find("holds: true"), std::string::npos);
}

TEST(Cli, GoursatAndGalois) {
  auto g = run({"goursat", "--g1", "C2", "--g2", "C2", "--subgroup", "[[0,0],[1,1]]"});
  EXPECT_EQ(g.code, 0);
  EXPECT_TRUE(g.json()["is_isomorphism_graph"].get<bool>());

  auto gal = run({"galois", "--tower", kQ23});
  EXPECT_EQ(gal.code, 0);
  auto j = gal.json();
  EXPECT_EQ(j["order"], 4);
  EXPECT_EQ(j["label"], "C2xC2");

  auto chain = run({"galois", "chain", "--tower", R"({"base":"Q"})", "--adjoin", "x^3-2"});
  EXPECT_EQ(chain.code, 0);
}

TEST(Cli, ClosureSessionAndReplay) {
  auto dir = scratch("closure");
  const std::string s = (dir / "s.json").string();
  EXPECT_EQ(run({"closure", "new", "--session", s, "--base", "\"Q\""}).code, 0);
  EXPECT_NE(run({"closure", "new", "--session", s, "--base", "\"Q\""}).code, 0);
  auto a = run({"closure", "adjoin", "--session", s, "--poly", "x^2-2"});
  EXPECT_EQ(a.code, 0);
  auto a2 = run({"closure", "adjoin", "--session", s, "--poly", "x^2-2"});
  EXPECT_EQ(a.json()["root"], a2.json()["root"]);
  auto rs = run({"closure", "roots", "--session", s, "--poly", "x^3-2"});
  EXPECT_EQ(rs.json()["roots"].size(), 3u);
  auto c = run({"closure", "conjugates", "--session", s, "--elem", a.json()["root"].get<std::string>()});
  EXPECT_EQ(c.code, 0);
  auto rep = run({"closure", "replay", "--session", s});
  EXPECT_EQ(rep.code, 0);
  EXPECT_TRUE(rep.json()["identical"].get<bool>());
  EXPECT_EQ(run({"closure", "show", "--session", s}).code, 0);

  auto t = (dir / "t.json").string();
  EXPECT_EQ(run({"closure", "new", "--session", t, "--base", R"({"FpT":2})"}).code, 0);
  auto pk = run({"closure", "pk-root", "--session", t, "--elem", "t", "--k", "1"});
  EXPECT_EQ(pk.code, 0);
  EXPECT_EQ(run({"closure", "pk-root", "--session", s, "--elem", "2", "--k", "1"}).code, 1);
  fs::remove_all(dir);
}

TEST(Cli, ExtendAndReplay) {
  auto dir = scratch("extend");
  const std::string s = (dir / "k.json").string();
  ASSERT_EQ(run({"closure", "new", "--session", s, "--base", "\"Q\""}).code, 0);
  ASSERT_EQ(run({"closure", "adjoin", "--session", s, "--poly", "x^2-2"}).code, 0);
  auto e = run({"extend", "--tower", R"({"base":"Q","gens":[{"name":"a","minpoly":"x^2-2"}]})", "--map", R"(["-r1"])",
                "--target", s, "--adjoin", "x^4-2", "--query", "r1"});
  ASSERT_EQ(e.code, 0) << e.err;
  auto j = e.json();
  ASSERT_EQ(j["assignments"].size(), 2u);
  EXPECT_EQ(j["assignments"][0]["stage"], "given");
  EXPECT_EQ(j["assignments"][1]["stage"], "separable");
  const auto old = (dir / "old.json").string();
  std::ofstream(old) << e.out;
  auto r = run({"extend", "--tower", R"({"base":"Q","gens":[{"name":"a","minpoly":"x^2-2"}]})", "--map", R"(["-r1"])",
                "--target", s, "--replay", old, "--query", "r1"});
  EXPECT_EQ(r.code, 0) << r.err;
  auto bad = run({"extend", "--tower", R"({"base":"Q","gens":[{"name":"a","minpoly":"x^2-2"}]})", "--map", R"(["1"])",
                  "--target", s});
  EXPECT_EQ(bad.code, 1);
  fs::remove_all(dir);
}

TEST(Cli, DifferenceCommands) {
  auto ok = run({"difference", "check", "--tower", R"({"base":"Q","gens":[{"name":"a","minpoly":"x^2-2"}]})",
                 "--sigma", R"(["-a"])"});
  EXPECT_TRUE(ok.json()["automorphism"].get<bool>());
  auto no = run({"difference", "check", "--tower", R"({"base":"Q","gens":[{"name":"a","minpoly":"x^2-2"}]})",
                 "--sigma", R"(["1+a"])"});
  EXPECT_FALSE(no.json()["automorphism"].get<bool>());

  const std::string sub = R"({"tower":{"base":"Q","gens":[{"name":"c","minpoly":"x^2-3"}]},"sigma":["c"]})";
  const std::string both = R"({"tower":)" + kQ23 + R"(,"sigma":["-a","-b"]})";
  const std::string one = R"({"tower":)" + kQ23 + R"(,"sigma":["-a","b"]})";
  EXPECT_FALSE(run({"difference", "embeds", "--sub", sub, "--sup", both}).json()["embeds"].get<bool>());
  EXPECT_TRUE(run({"difference", "embeds", "--sub", sub, "--sup", one}).json()["embeds"].get<bool>());

  auto dir = scratch("difference");
  const std::string s = (dir / "c.json").string();
  ASSERT_EQ(run({"closure", "new", "--session", s, "--base", "\"Q\""}).code, 0);
  auto x = run({"difference", "extend", "--df", one, "--session", s, "--query", "a", "--query", "a*b"});
  ASSERT_EQ(x.code, 0) << x.err;
  fs::remove_all(dir);
}

TEST(Cli, Demos) {
  auto g = run({"demo", "groups"});
  EXPECT_EQ(g.code, 0);
  EXPECT_TRUE(g.json().contains("groups"));
  auto s = run({"demo", "separation"});
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(s.json()["fixed_by_tau"], Json::array({2}));
  auto d = run({"demo", "discriminants", "--count", "2", "--galois", "1"});
  EXPECT_EQ(d.code, 0);
}

TEST(CliProperty, DeterministicSessions) {
  auto script = [](const fs::path& dir) {
    const std::string s = (dir / "s.json").string();
    std::string transcript;
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"closure", "new", "--session", s, "--base", "\"Q\""},
             {"closure", "adjoin", "--session", s, "--poly", "x^2-2"},
             {"closure", "roots", "--session", s, "--poly", "x^4-2"},
             {"closure", "conjugates", "--session", s, "--elem", "r1+1"},
             {"galois", "--tower", kQ23},
             {"ncp", "--group", "D8"}}) {
      auto r = run(args);
      transcript += std::to_string(r.code) + r.out + r.err;
    }
    return transcript + slurp(s);
  };
  auto d1 = scratch("det1"), d2 = scratch("det2");
  const std::string t1 = script(d1), t2 = script(d2);
  // Paths differ only in the directory name, which never appears in output.
  EXPECT_EQ(t1, t2);
  fs::remove_all(d1);
  fs::remove_all(d2);
}
