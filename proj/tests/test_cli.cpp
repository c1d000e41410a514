#include "sandwich/cli.hpp"
#include "sandwich/errors.hpp"
#include "sandwich/render.hpp"
#include "sandwich/specfile.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace sandwich;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = parse_and_run(args, out, err);
  return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

std::string temp_path(const std::string& name) { return std::string(P_tmpdir) + "/sandwich_test_" + name; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("atlas renders at least the reference rows") {
    auto r = run({"atlas", "--genus", "2"});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) >= 2 + 7);
    auto csv = run({"atlas", "--genus", "2", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("g(A),G,eigenspaces,branch,table\n", 0) == 0);
    CHECK(count_lines(csv.out) >= 8);
  }

  TEST_CASE("classify with a comparison") {
    auto r = run({"classify", "--genus-f", "3", "--group", "2,2,2", "--base-a", "0", "--base-b", "0", "--pg", "3..6",
                  "--compare", "zero"});
    CHECK(r.code == 0);
    CHECK(r.out.find("0 discrepancies against zero") != std::string::npos);
  }

  TEST_CASE("family table columns") {
    auto r = run({"classify", "--genus-f", "2", "--group", "2,2", "--base-a", "0", "--base-b", "0", "--pg", "3..6"});
    CHECK(r.code == 0);
    const std::string header = r.out.substr(0, r.out.find('\n'));
    std::size_t pos = 0;
    for (const char* col : {"G", "g(A)", "g(B)", "g(F)", "g(D)", "K²", "t"}) {
      auto p = header.find(col, pos);
      CHECK(p != std::string::npos);
      pos = p;
    }
    CHECK(r.out.find("2m-1") != std::string::npos);
    CHECK(r.out.find("8m+8") != std::string::npos);
  }

  TEST_CASE("invalid input exits with 1") {
    CHECK(run({"invariants", "missing.json"}).code == 1);
    CHECK(run({"atlas", "--genus", "7"}).code == 1);
    CHECK(run({"atlas", "--genus", "2", "--bogus"}).code == 1);
    CHECK(run({"classify", "--genus-f", "4"}).code == 1);
    CHECK(run({"classify", "--genus-f", "3", "--pg", "5..3"}).code == 1);
    CHECK(run({"compare", "nonexistent"}).code == 1);
    CHECK(run({"covers", "--group", "2,x", "--base-genus", "0", "--genus", "2"}).code == 1);
    CHECK(run({}).code == 1);
    auto r = run({"invariants", "missing.json"});
    CHECK_FALSE(r.err.empty());
    CHECK(exit_code_for(ErrorKind::InternalConsistency) == 2);
    CHECK(exit_code_for(ErrorKind::InvalidInput) == 1);
  }

  TEST_CASE("empty result as CSV is a header line") {
    auto r = run({"classify", "--genus-f", "3", "--group", "3", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 1);
    CHECK(to_csv(TextTable{{"a", "b"}, {}}) == "a,b\n");
  }

  TEST_CASE("CSV quoting") {
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"x\"") == "\"say \"\"x\"\"\"");
    CHECK(csv_field("two\nlines") == "\"two\nlines\"");
  }

  TEST_CASE("identical invocations give identical bytes") {
    std::vector<std::string> args = {"classify", "--genus-f", "3", "--group", "all", "--pg", "3..5", "--format", "json"};
    auto a = run(args);
    auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto c = run({"atlas", "--genus", "3", "--format", "csv"});
    auto d = run({"atlas", "--genus", "3", "--format", "csv"});
    CHECK(c.out == d.out);
  }

  TEST_CASE("JSON witnesses round-trip through the spec reader") {
    auto r = run({"classify", "--genus-f", "3", "--group", "2,2", "--group", "2,8", "--pg", "3..5", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.is_array());
    int n = 0;
    for (const auto& fam : j)
      for (const auto& pt : fam["points"]) {
        auto s = sandwich_from_json(pt["witness"]);
        auto rep = invariants(s);
        CHECK(rep.p_g == pt["p_g"].get<long long>());
        CHECK(rep.K2 == pt["K2"].get<long long>());
        CHECK(rep.t_z == pt["t_z"].get<long long>());
        CHECK(sandwich_to_json(s) == pt["witness"]);
        ++n;
      }
    CHECK(n > 10);
  }

  TEST_CASE("invariants subcommand") {
    const std::string path = temp_path("spec.json");
    {
      std::ofstream f(path);
      f << R"({"group":[2,2,2],"coverF":{"base_genus":0,"branch":[{"elem":[0,1,1],"mult":1},{"elem":[1,0,1],"mult":1},
             {"elem":[1,1,0],"mult":1},{"elem":[1,1,1],"mult":2}]},
             "coverD":{"base_genus":0,"branch":[{"elem":[0,0,1],"mult":8},{"elem":[0,1,0],"mult":2},{"elem":[1,0,0],"mult":2}]}})";
    }
    auto r = run({"invariants", path, "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    for (const char* k : {"p_g", "q", "chi", "euler_e", "K2", "t_z", "sing", "canonical_character"})
      CHECK(j.contains(k));
    CHECK(j["p_g"] == 3);
    CHECK(j["K2"] == 32);
    CHECK(j["euler_e"] == 16);
    CHECK(j["canonical_character"] == nlohmann::json::array({0, 0, 1}));
    auto flipped = run({"invariants", path, "--flip", "--format", "json"});
    CHECK(flipped.out == r.out);
    auto table = run({"invariants", path});
    CHECK(table.code == 0);
    CHECK(table.out.find("K2") != std::string::npos);

    {
      std::ofstream f(path);
      f << R"({"group":[2],"coverF":{"base_genus":0,"branch":[{"elem":[1],"mult":6}]},"coverD":{"base_genus":0,"branch":[{"elem":[1],"mult":6}]},"extra":1})";
    }
    CHECK(run({"invariants", path}).code == 1);
    {
      std::ofstream f(path);
      f << R"({"group":[2,2],"coverF":{"base_genus":0,"branch":[{"elem":[1,0],"mult":1},{"elem":[0,1],"mult":1}]},"coverD":{"base_genus":0,"branch":[{"elem":[1,0],"mult":2},{"elem":[0,1],"mult":8}]}})";
    }
    CHECK(run({"invariants", path}).code == 1);
    {
      std::ofstream f(path);
      f << "{not json";
    }
    CHECK(run({"invariants", path}).code == 1);
    std::remove(path.c_str());
  }

  TEST_CASE("compare subcommand") {
    auto r = run({"compare", "tabelladue"});
    CHECK(r.code == 0);
    CHECK(r.out.find("extra") != std::string::npos);
    CHECK(r.out.find("(0 missing, 4 extra)") != std::string::npos);
    auto e = run({"compare", "genus3-elliptic", "--format", "json"});
    CHECK(e.code == 0);
    CHECK(nlohmann::json::parse(e.out).empty());
  }

  TEST_CASE("covers subcommand") {
    auto r = run({"covers", "--group", "3", "--base-genus", "0", "--genus", "2", "--format", "json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.size() == 1);
    auto c = cover_from_json(Group({3}), j[0].contains("cover") ? j[0]["cover"] : nlohmann::json{
        {"base_genus", j[0]["base_genus"]}, {"branch", j[0]["branch"]}, {"twist", j[0]["twist"]}});
    CHECK(genus(c) == 2);
  }
}
