#include <limits>
#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace syzygy;
using namespace syzygy::test;

namespace {

BettiTable table_of(const std::string& fixture) {
  const auto l = load(read_fixture(fixture));
  return resolve(l.ring, l.gens).table;
}

BettiTable table_of_text(const std::string& text) {
  const auto l = load(text);
  return resolve(l.ring, l.gens).table;
}

template <class R>
const R* find_record(const std::vector<R>& records, int a, int b) {
  for (const auto& r : records) {
    if (r.a == a && r.b == b) return &r;
  }
  return nullptr;
}

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("inequality records on the mixed height four fixture") {
  const auto B = table_of("gorenstein-h4-mixed.ideal");
  const auto r = check_inequalities(B, false, 4, 4);
  const auto* rec = find_record(r.subadditivity, 2, 2);
  REQUIRE(rec != nullptr);
  CHECK(rec->T_sum == 8);
  CHECK(rec->bound == 8);
  CHECK(rec->holds);
  CHECK(rec->tight);
  CHECK(r.theorem1_holds());
  CHECK(r.bayer_mumford_holds());
  CHECK(r.herzog_srinivasan.empty());
  CHECK(r.tail.size() == 5);
}

TEST_CASE("Gorenstein detection") {
  const auto g = detect_gorenstein(table_of("gorenstein-h4-mixed.ideal"));
  CHECK(g.is_cm_gorenstein);
  CHECK(g.h == 4);
  CHECK(g.c == 8);
  CHECK(g.duality_ok);
  CHECK(g.dual_shifts_ok);

  const auto not_cm = detect_gorenstein(table_of_text("ring GF(32003)[x,y] ideal x^2, x*y"));
  CHECK(not_cm.last_rank_one);
  CHECK(not_cm.projdim == 2);
  CHECK(not_cm.h == 1);
  CHECK_FALSE(not_cm.is_cm_gorenstein);

  const auto ci = detect_gorenstein(table_of_text("ring GF(32003)[x,y] ideal x^2, y^2"));
  CHECK(ci.is_cm_gorenstein);
  CHECK(ci.h == 2);
  CHECK(ci.c == 4);
}

TEST_CASE("purity") {
  const auto pure = detect_pure(table_of("gorenstein-h4-pure.ideal"));
  CHECK(pure.is_pure);
  CHECK(pure.shifts == std::vector<int>{3, 4, 5, 8});
  CHECK(pure.chain_ok);
  CHECK_FALSE(detect_pure(table_of("gorenstein-h4-mixed.ideal")).is_pure);
  CHECK(detect_pure(table_of_text("ring GF(32003)[x,y,z] ideal x^3, y^3, z^3")).is_pure);
}

TEST_CASE("Bayer-Mumford bound saturates instead of overflowing") {
  const auto B = table_of_text("ring GF(32003)[a,b,c,d,e,f,g,h] ideal a^9");
  const auto r = check_inequalities(B, true, 70);
  REQUIRE(r.bayer_mumford.size() == 1);
  CHECK(r.bayer_mumford[0].bound == std::numeric_limits<std::int64_t>::max());
  CHECK(r.bayer_mumford[0].holds);
  CHECK(check_inequalities(B, true, 1).bayer_mumford.empty());
}

TEST_CASE("witness at n = 2 is the Koszul relation g_1 f_1b - g_b f_11") {
  const auto l = load(read_fixture("ci-x2-y3.ideal"));
  const auto r = resolve(l.ring, l.gens);
  const auto cert = construct_witness(r.resolution, 2);
  CHECK(cert.verified());
  CHECK(cert.degree == 5);
  CHECK(cert.bound == 5);
  CHECK(cert.degree == r.table.t(2));

  const auto& d1 = r.resolution.differential(1);
  const std::size_t beta1 = d1.source().rank();
  const auto explicit_cert = construct_witness(r.resolution, 2, static_cast<int>(beta1));
  const auto g1 = d1.entry(0, 0);
  const auto gb = d1.entry(0, beta1 - 1);
  const auto expected = ModuleElement<Fp>::basis(l.ring, static_cast<std::uint32_t>(beta1 - 1)).times(g1) -
                        ModuleElement<Fp>::basis(l.ring, 0).times(gb);
  CHECK(explicit_cert.cycle == expected);
  CHECK(explicit_cert.degree == r.table.t(1) + r.table.T(1));
}

TEST_CASE("witness step bounds and explicit zero columns") {
  const auto l = load(read_fixture("ci-x2-y3.ideal"));
  const auto r = resolve(l.ring, l.gens);
  CHECK_THROWS_AS(construct_witness(r.resolution, 1), InvalidArgumentError);
  CHECK_THROWS_AS(construct_witness(r.resolution, 3), InvalidArgumentError);
  CHECK_THROWS_AS(construct_witness(r.resolution, 2, 3), InvalidArgumentError);
  // Z(f_11, f_11) vanishes.
  const auto zero = construct_witness(r.resolution, 2, 1);
  CHECK_FALSE(zero.nonzero);
  CHECK(zero.lift_ok);
  const auto F = free_resolution(l.ring, l.gens);
  CHECK_THROWS_AS(WitnessBuilder<Fp>{F}, ContractError);
}

TEST_CASE("witnesses on the mixed height four fixture") {
  const auto l = load(read_fixture("gorenstein-h4-mixed.ideal"));
  const auto r = resolve(l.ring, l.gens);
  WitnessBuilder<Fp> builder(r.resolution);
  for (int n = 2; n <= 4; ++n) {
    const auto c = builder.construct(n);
    CHECK(c.verified());
    CHECK(c.degree <= r.table.t(1) + r.table.T(n - 1));
    CHECK(apply(r.resolution.differential(n), c.lift) == c.cycle);
  }
  const auto c4 = builder.construct(4);
  CHECK(c4.bound == 8);
  CHECK(c4.degree == 8);
}

TEST_CASE("analyze on the zero ideal") {
  const auto l = load("ring GF(32003)[x,y] ideal 0");
  const auto rep = analyze(l.ring, l.gens);
  CHECK(rep.betti.projdim() == 0);
  CHECK(rep.generator_count == 0);
  CHECK(rep.witnesses.empty());
  CHECK(rep.theorem_failures().empty());
  CHECK(rep.hilbert_consistent);
}

TEST_CASE("analyze on a random monomial ideal, seed 42") {
  std::mt19937_64 rng(42);
  const auto ring = prime_ring(4);
  const auto gens = monomial_generators(ring, random_monomials(rng, 4, 4, 5));
  const auto rep = analyze(ring, gens);
  CHECK(rep.is_monomial);
  CHECK(rep.inequalities.theorem1_holds());
  CHECK(rep.inequalities.herzog_srinivasan_holds());
  CHECK(rep.theorem_failures().empty());
  REQUIRE(record_hilbert(ring, gens, rep.betti));
}

TEST_CASE("t_n <= t_1 + T_{n-1} on random ideals") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 60; ++round) {
    const auto ring = prime_ring(3);
    std::vector<Polynomial<Fp>> gens;
    if (round % 2) {
      gens = monomial_generators(ring, random_monomials(rng, 3, 4, 1 + static_cast<int>(rng() % 6)));
    } else {
      for (int i = 0; i < 3; ++i) gens.push_back(random_form(rng, ring, 1 + static_cast<int>(rng() % 3), 3));
    }
    const auto r = resolve(ring, gens);
    REQUIRE(r.hilbert_ok);
    for (int n = 1; n <= r.table.projdim(); ++n) {
      REQUIRE(r.table.t(n) <= r.table.t(1) + r.table.T(n - 1));
    }
  }
}

}  // TEST_SUITE
