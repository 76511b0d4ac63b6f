#include <sstream>

#include "catch_amalgamated.hpp"

#include "garside/cli.hpp"

namespace {
  struct Result {
    int         code;
    std::string out, err;
  };

  Result run(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int                code = garside::cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  bool contains(std::string const& s, std::string const& what) {
    return s.find(what) != std::string::npos;
  }

  // Splits a replay line into arguments, honouring double quotes.
  std::vector<std::string> split_command(std::string const& line) {
    std::vector<std::string> out;
    std::string              cur;
    bool                     quoted = false, any = false;
    for (char c : line) {
      if (c == '"') {
        quoted = !quoted;
        any    = true;
      } else if (c == ' ' && !quoted) {
        if (any || !cur.empty()) {
          out.push_back(cur);
        }
        cur.clear();
        any = false;
      } else {
        cur += c;
      }
    }
    if (any || !cur.empty()) {
      out.push_back(cur);
    }
    return out;
  }

  std::vector<std::string> replay_args(std::string const& report) {
    auto pos = report.find("replay: garside ");
    REQUIRE(pos != std::string::npos);
    auto start = pos + std::string("replay: garside ").size();
    return split_command(report.substr(start, report.find('\n', pos) - start));
  }
}  // namespace

TEST_CASE("check on A_2") {
  auto r = run({"check", "--family", "artin", "--rank2", "3", "--bound", "8",
                "--nmax", "6"});
  REQUIRE(r.code == 0);
  REQUIRE(contains(r.out, "PROPERTY i: PASS\n"));
  REQUIRE(contains(r.out, "PROPERTY ii: PASS\n"));
  REQUIRE(contains(r.out, "PROPERTY iii: PASS\n"));
}

TEST_CASE("check on the Godelle monoid prints a replayable witness") {
  auto r = run({"check", "--family", "godelle", "--bound", "6", "--nmax", "2"});
  REQUIRE(r.code == 1);
  REQUIRE(contains(r.out, "PROPERTY iii: FAIL\n"));
  REQUIRE(contains(r.out, "witness: "));
  auto again = run(replay_args(r.out));
  REQUIRE(again.code == 0);
  REQUIRE(again.out == "GCD: a a\n");
}

TEST_CASE("check on the Chow monoid") {
  auto r = run({"check", "--family", "chow", "--n", "2", "--bound", "8"});
  REQUIRE(r.code == 1);
  REQUIRE(contains(r.out, "PROPERTY ii: FAIL\n"));
  REQUIRE(contains(r.out, "PROPERTY iii: PASS\n"));
  auto again = run(replay_args(r.out));
  REQUIRE(again.code == 0);
  REQUIRE(contains(again.out, "BALANCED: no"));
}

TEST_CASE("rbbt replays its witness") {
  auto r = run({"rbbt", "--family", "godelle", "--bound", "6", "--lb", "2",
                "--j", "2"});
  REQUIRE(r.code == 1);
  REQUIRE(contains(r.out, "PROPERTY rbbt: FAIL"));
  auto args = replay_args(r.out);
  REQUIRE(args == std::vector<std::string>{"rbbt", "--family", "godelle",
                                           "--bound", "6", "--r", "a", "--b",
                                           "b", "--j", "2"});
  auto again = run(args);
  REQUIRE(again.code == 1);
  REQUIRE(contains(again.out, "no atom u"));
  REQUIRE(run({"rbbt", "--family", "artin", "--typeA", "2", "--lb", "3", "--j",
               "3"})
              .code
          == 0);
}

TEST_CASE("word verbs") {
  auto nf = run({"nf", "--family", "artin", "--rank2", "3", "s t s t"});
  REQUIRE(nf.code == 0);
  REQUIRE(nf.out == "DELTA: s t s\nNF: s t s | t\n");
  REQUIRE(run({"lcm", "--family", "artin", "--rank2", "3", "s", "t"}).out
          == "LCM: s t s\n");
  REQUIRE(run({"gcd", "--family", "artin", "--rank2", "3", "sts", "ss"}).out
          == "GCD: s\n");
  REQUIRE(run({"tau", "--family", "artin", "--rank2", "3", "s t"}).out
          == "TAU: t s\n");
  REQUIRE(run({"center", "--family", "fhm", "--h", "3", "--m", "2"}).out
          == "DELTA: x1 x2 x1\nCENTER: exponent 2 (permutation order 2)\n");
  REQUIRE(run({"alpha", "--family", "bkl", "--n", "2", "a21 a21 a21"}).out
          == "ALPHA: a21\n");
  REQUIRE(run({"alpha", "--family", "artin", "--typeA", "2", "s1", "s2 s1"}).code
          == 0);
  REQUIRE(run({"conj", "--family", "artin", "--rank2", "3", "s t s"}).out
          == "CONJ: s->t t->s\nPERMUTATION: yes\n");
  REQUIRE(run({"sizes", "--family", "godelle", "--bound", "3"}).out
          == "SIZES: 1 2 3 4\n");
}

TEST_CASE("presentation files") {
  auto path = std::string(GARSIDE_TEST_DATA) + "/a2.pres";
  auto r    = run({"check", "--pres", path, "--bound", "8"});
  REQUIRE(r.code == 0);
  auto small = run({"check", "--pres", path, "--bound", "6", "--nmax", "2"});
  REQUIRE(small.code == 0);
  REQUIRE(run({"check", "--pres", "/nonexistent.pres"}).code == 2);
}

TEST_CASE("embedding and span verbs") {
  auto e = run({"embed-check"});
  REQUIRE(e.code == 0);
  REQUIRE(contains(e.out, "PROPERTY g31-embedding: PASS"));
  auto file = std::string(GARSIDE_TEST_DATA) + "/e12_e21.txt";
  auto s    = run({"span", "--file", file});
  REQUIRE(s.code == 0);
  REQUIRE(contains(s.out, "dimension 4\n"));
  REQUIRE(contains(run({"lie-span", "--file", file}).out, "dimension 3\n"));
}

TEST_CASE("exit codes for input and bound errors") {
  REQUIRE(run({}).code == 2);
  REQUIRE(run({"frobnicate"}).code == 2);
  REQUIRE(run({"check", "--family", "nosuch"}).code == 2);
  REQUIRE(run({"check"}).code == 2);
  REQUIRE(run({"check", "--family", "artin"}).code == 2);
  REQUIRE(run({"nf", "--family", "artin", "--rank2", "3", "s u"}).code == 2);
  REQUIRE(run({"check", "--family", "godelle", "--dump", "xml"}).code == 2);
  REQUIRE(run({"span", "--file", "/nonexistent"}).code == 2);
  REQUIRE(run({"nf", "--family", "artin", "--rank2", "3", "--bound", "3",
               "s t s t"})
              .code
          == 3);
  REQUIRE(run({"center", "--family", "artin", "--rank2", "3", "--bound", "5"})
              .code
          == 3);
  REQUIRE(run({"lcm", "--pres", std::string(GARSIDE_TEST_DATA) + "/free2.pres",
               "--bound", "4", "a", "b"})
              .code
          == 3);
  REQUIRE(run({"--help"}).code == 0);
}

TEST_CASE("structured output") {
  auto r = run({"check", "--family", "godelle", "--bound", "6", "--nmax", "2",
                "--dump", "json"});
  REQUIRE(r.code == 1);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["exit_code"] == 1);
  REQUIRE(j["reports"].size() == 3);
  REQUIRE(j["reports"][2]["property"] == "iii");
  REQUIRE(j["reports"][2]["verdict"] == "FAIL");
  REQUIRE(j["reports"][2]["witnesses"][0]["items"]["gcd"] == "a a");
  REQUIRE(j["reports"][2]["witnesses"][0]["exponent"] == 2);
}

TEST_CASE("output is deterministic") {
  std::vector<std::string> args{"check", "--family", "bkl", "--n", "3"};
  REQUIRE(run(args).out == run(args).out);
  std::vector<std::string> chow{"check", "--family", "chow", "--n", "3",
                                "--bound", "7", "--dump", "json"};
  REQUIRE(run(chow).out == run(chow).out);
}
