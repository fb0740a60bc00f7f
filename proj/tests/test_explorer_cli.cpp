#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "support.hpp"
#include "syzygy/cli.hpp"
#include "syzygy/explorer.hpp"

using namespace syzygy;
using namespace syzygy::test;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool is_stable(const std::vector<Monomial>& gens) {
  auto in = [&](const Monomial& m) {
    return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
  };
  for (const auto& m : gens) {
    std::size_t top = m.size();
    while (top > 0 && m[top - 1] == 0) --top;
    if (top == 0) continue;
    const auto xi = Monomial::variable(m.size(), top - 1);
    for (std::size_t j = 0; j + 1 < top; ++j) {
      if (!in(m / xi * Monomial::variable(m.size(), j))) return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("explorer") {

TEST_CASE("closure examples") {
  CHECK(stable_closure({Monomial{0, 2}}) ==
        std::vector<Monomial>{Monomial{2, 0}, Monomial{1, 1}, Monomial{0, 2}});
  CHECK(squarefree_strongly_stable_closure({Monomial{0, 1, 1}}) ==
        std::vector<Monomial>{Monomial{1, 1, 0}, Monomial{1, 0, 1}, Monomial{0, 1, 1}});
  CHECK_THROWS_AS(squarefree_strongly_stable_closure({Monomial{2, 0}}), InvalidArgumentError);
}

TEST_CASE("closures contain their input and are idempotent") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const auto gens = random_monomials(rng, 4, 4, 1 + static_cast<int>(rng() % 4));
    const auto c = stable_closure(gens);
    REQUIRE(stable_closure(c) == c);
    REQUIRE(is_stable(c));
    for (const auto& g : gens) {
      REQUIRE(std::any_of(c.begin(), c.end(), [&](const Monomial& h) { return h.divides(g); }));
    }
    std::vector<Monomial> sq;
    for (const auto& g : gens) {
      std::vector<Monomial::Exponent> e(g.exponents().begin(), g.exponents().end());
      for (auto& x : e) x = x ? 1 : 0;
      sq.emplace_back(std::span<const Monomial::Exponent>(e));
    }
    const auto s = squarefree_strongly_stable_closure(sq);
    REQUIRE(squarefree_strongly_stable_closure(s) == s);
    for (const auto& g : sq) {
      REQUIRE(std::any_of(s.begin(), s.end(), [&](const Monomial& h) { return h.divides(g); }));
    }
  }
}

TEST_CASE("random ideals are deterministic and honour the class") {
  SearchParams p;
  p.seed = 9;
  for (auto cls : {IdealClass::generic_monomial, IdealClass::stable,
                   IdealClass::squarefree_strongly_stable, IdealClass::generic_homogeneous}) {
    p.ideal_class = cls;
    for (std::uint64_t i = 0; i < 20; ++i) {
      const auto a = random_ideal(p, i);
      const auto b = random_ideal(p, i);
      REQUIRE(a == b);
      REQUIRE_FALSE(a.empty());
      for (const auto& g : a) {
        REQUIRE(g.homogeneous_degree().has_value());
        if (cls != IdealClass::generic_homogeneous) REQUIRE(g.size() == 1);
        if (cls == IdealClass::squarefree_strongly_stable) {
          for (auto e : g.lead_monomial().exponents()) REQUIRE(e <= 1);
        }
      }
    }
  }
  CHECK(to_string(IdealClass::squarefree_strongly_stable) == "squarefree-strongly-stable");
  CHECK(parse_ideal_class("stable") == IdealClass::stable);
  CHECK_FALSE(parse_ideal_class("other").has_value());
}

TEST_CASE("parameter validation") {
  SearchParams p;
  p.ideal_class = IdealClass::squarefree_strongly_stable;
  p.nvars = 3;
  p.max_degree = 4;
  CHECK_THROWS_AS(p.validate(), InvalidArgumentError);
  SearchParams q;
  q.nvars = 0;
  CHECK_THROWS_AS(q.validate(), InvalidArgumentError);
  SearchParams r;
  r.min_generators = 5;
  r.max_generators = 2;
  CHECK_THROWS_AS(r.validate(), InvalidArgumentError);
}

TEST_CASE("empty search") {
  SearchParams p;
  p.samples = 0;
  const auto s = search(p);
  CHECK(s.completed == 0);
  CHECK_FALSE(s.internal_failure());
  CHECK_FALSE(s.findings());
}

TEST_CASE("stable search, seed 7") {
  SearchParams p;
  p.ideal_class = IdealClass::stable;
  p.seed = 7;
  p.samples = 100;
  const auto s = search(p);
  CHECK(s.completed == 100);
  CHECK(s.theorem1.empty());
  CHECK(s.subadditivity.empty());
  CHECK(s.herzog_srinivasan.empty());
  CHECK(s.other.empty());
  CHECK(s.histograms.count("theorem1"));
}

TEST_CASE("generic monomial search") {
  SearchParams p;
  p.samples = 100;
  const auto s = search(p);
  CHECK(s.theorem1.empty());
  CHECK(s.herzog_srinivasan.empty());
  CHECK_FALSE(s.internal_failure());
}

}  // TEST_SUITE

TEST_SUITE("cli") {

TEST_CASE("check on the mixed height four fixture") {
  const auto report = std::string("cli-check-report.json");
  const auto r = run({"check", fixture_path("gorenstein-h4-mixed.ideal"), "--report", report});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("T = (0, 3, 4, 6, 8)") != std::string::npos);
  CHECK(r.out.find("expect: matches") != std::string::npos);
  std::ifstream in(report);
  const auto doc = nlohmann::json::parse(in);
  CHECK(doc["T"] == std::vector<int>{0, 3, 4, 6, 8});
  CHECK(doc["gorenstein"]["h"] == 4);
  std::remove(report.c_str());
}

TEST_CASE("betti on the zero ideal") {
  const auto r = run({"betti", fixture_path("zero.ideal")});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "       0\ntotal: 1\n    0: 1\nt = (0)\nT = (0)\n");
}

TEST_CASE("witness on the complete intersection") {
  const auto r = run({"witness", fixture_path("ci-x2-y3.ideal"), "--step", "2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("degree 5, bound t_1 + T_1 = 5") != std::string::npos);
  CHECK(r.out.find("verified: yes") != std::string::npos);
}

TEST_CASE("resolve prints ranks and shifts") {
  const auto r = run({"resolve", "ring QQ[x,y] ideal x^2, y^3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "F_0: rank 1, shifts (0)\nF_1: rank 2, shifts (2, 3)\nF_2: rank 1, shifts (5)\n");
}

TEST_CASE("global flags") {
  const auto lex = run({"--order", "lex", "betti", fixture_path("gorenstein-h4-mixed.ideal")});
  const auto grevlex = run({"betti", fixture_path("gorenstein-h4-mixed.ideal")});
  CHECK(lex.code == kExitOk);
  CHECK(lex.out == grevlex.out);
  const auto ci = fixture_path("ci-x2-y3.ideal");
  CHECK(run({"betti", ci, "--rationals"}).out == run({"betti", ci}).out);
  CHECK(run({"--char", "7", "betti", fixture_path("ci-x2-y3.ideal")}).code == kExitOk);
  CHECK(run({"--quiet", "check", fixture_path("ci-x2-y3.ideal")}).out.empty());
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"betti"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"--char", "4", "betti", fixture_path("zero.ideal")}).code == kExitUsage);
  CHECK(run({"--char", "7", "--rationals", "betti", fixture_path("zero.ideal")}).code == kExitUsage);
  CHECK(run({"witness", fixture_path("ci-x2-y3.ideal"), "--step", "3"}).code == kExitUsage);
  CHECK(run({"explore", "--class", "bogus"}).code == kExitUsage);
  CHECK(run({"explore", "--class", "squarefree-strongly-stable", "--vars", "2", "--max-deg", "3"}).code ==
        kExitUsage);
  CHECK(run({"betti", "ideal x"}).code == kExitParse);
  CHECK(run({"betti", "ring GF(7)[x] ideal y"}).code == kExitParse);
  CHECK(run({"--budget", "2", "betti", fixture_path("gorenstein-h4-pure.ideal")}).code == kExitBudget);
  CHECK(run({"betti", "ring GF(7)[x,y] ideal x + y^2"}).code == kExitError);
  CHECK(run({"betti", "no-such-file.ideal"}).code == kExitError);
  CHECK(run({"check", "ring QQ[x,y] ideal x^2, y^3 expect T = (3, 6)"}).code == kExitFindings);
  CHECK(run({"check", "ring QQ[x,y] ideal x^2, y^3 expect T = (3, 5)"}).code == kExitOk);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("non-Gorenstein subadditivity failures are informational") {
  // Not Gorenstein, so the check still passes whatever the subadditivity records say.
  const auto r = run({"check", "ring GF(32003)[x,y,z] ideal x^2, x*y, y*z^3"});
  CHECK(r.code == kExitOk);
}

TEST_CASE("explore") {
  const auto a = run({"explore", "--class", "stable", "--vars", "4", "--max-deg", "4", "--samples", "25",
                      "--seed", "7"});
  const auto b = run({"explore", "--class", "stable", "--vars", "4", "--max-deg", "4", "--samples", "25",
                      "--seed", "7"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(a.out.find("completed 25") != std::string::npos);
  const auto report = std::string("cli-explore-report.json");
  CHECK(run({"--report", report, "explore", "--samples", "5"}).code == kExitOk);
  std::ifstream in(report);
  const auto doc = nlohmann::json::parse(in);
  CHECK(doc["schema_version"] == "1");
  CHECK(doc["explorer"]["completed"] == 5);
  std::remove(report.c_str());
}

TEST_CASE("identical invocations give identical output") {
  const std::vector<std::string> args{"check", fixture_path("gorenstein-h4-pure.ideal")};
  CHECK(run(args).out == run(args).out);
}

}  // TEST_SUITE
