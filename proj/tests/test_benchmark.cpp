// Licensed under the Apache License 2.0 (see LICENSE file).

#include <doctest.h>

#include <cstdint>
#include <vector>

#include "core/benchmark.hpp"
#include "core/errors.hpp"
#include "core/game.hpp"
#include "core/generator.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace mco;

namespace {
doctest::Approx near(double x) { return doctest::Approx(x).epsilon(1e-12); }
}  // namespace

TEST_SUITE("benchmark") {

TEST_CASE("exhaustive optimum equals the oracle scan") {
  GeneratorSpec g;
  g.users = 9;
  for (std::uint64_t seed : {910u, 911u, 912u, 913u}) {
    g.seed = seed;
    Scenario s = generate_scenario(g);
    Optimum opt = optimum_exhaustive(s);
    oracle::ScanOptimum ref = oracle::optimum(s);
    CHECK(opt.cost == near(ref.cost));
    CHECK(oracle::to_bits(opt.profile) == ref.profile);
  }
}

TEST_CASE("branch and bound reproduces the exhaustive scan bit for bit") {
  GeneratorSpec g;
  for (std::size_t users : {2u, 5u, 9u, 12u, 14u}) {
    g.users = users;
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      g.seed = seed * 1000 + users;
      Scenario s = generate_scenario(g);
      Optimum scan = optimum_exhaustive(s);
      Optimum bnb = optimum_branch_and_bound(s);
      CHECK(bnb.cost == scan.cost);          // identical doubles, same route
      CHECK(bnb.profile == scan.profile);    // including tie-breaks
    }
  }
}

TEST_CASE("the dispatcher switches to branch and bound above the cap") {
  GeneratorSpec g;
  g.users = 10;
  g.seed = 55;
  Scenario s = generate_scenario(g);
  Optimum via_scan = centralized_optimum(s, 20);
  Optimum via_bnb = centralized_optimum(s, 4);
  CHECK(via_scan.cost == via_bnb.cost);
  CHECK(via_scan.profile == via_bnb.profile);

  g.users = 25;
  g.seed = 56;
  Scenario big = generate_scenario(g);
  CHECK_THROWS_AS(optimum_exhaustive(big), CapacityError);
  Optimum o = centralized_optimum(big);  // falls through to branch and bound
  CHECK(o.profile.size() == 25);
  CHECK(o.cost > 0.0);
  CHECK(o.cost <= baselines(big).all_local);
  CHECK(o.cost <= baselines(big).all_cloud);
}

TEST_CASE("baselines and bound match frozen values on the reference instances") {
  Scenario a = fixtures::instance_a();
  CHECK(poa_bound(a) == near(fixtures::a::poa_bound));

  Scenario b = fixtures::instance_b();
  Baselines base = baselines(b);
  CHECK(base.all_local == near(fixtures::b::all_local));
  CHECK(base.all_cloud == near(fixtures::b::all_cloud));
  CHECK(poa_bound(b) == near(fixtures::b::poa_bound));
}

TEST_CASE("price of anarchy sandwich on generated scenarios") {
  GeneratorSpec g;
  for (std::size_t users : {3u, 6u, 10u}) {
    g.users = users;
    for (std::uint64_t seed : {5u, 6u, 7u, 8u}) {
      g.seed = seed * 100 + users;
      Scenario s = generate_scenario(g);
      double ratio = poa(s);
      double bound = poa_bound(s);
      CHECK(ratio >= 1.0);
      CHECK(ratio <= bound);
    }
  }
}

TEST_CASE("report bundles enumeration, optimum, ratios and baselines coherently") {
  GeneratorSpec g;
  g.users = 8;
  g.seed = 321;
  Scenario s = generate_scenario(g);
  EquilibriumReport r = equilibrium_report(s);

  CHECK(r.equilibrium_count >= 1);
  CHECK(is_nash(s, r.best_equilibrium));
  CHECK(is_nash(s, r.worst_equilibrium));
  CHECK(r.best_equilibrium_cost <= r.worst_equilibrium_cost);
  CHECK(r.optimum_cost <= r.best_equilibrium_cost);
  CHECK(r.price_of_anarchy == near(r.worst_equilibrium_cost / r.optimum_cost));
  CHECK(r.price_of_anarchy >= 1.0);
  CHECK(r.price_of_anarchy <= r.price_of_anarchy_bound);
  CHECK(r.all_local_cost == near(baselines(s).all_local));
  CHECK(r.all_cloud_cost == near(baselines(s).all_cloud));
  CHECK(r.optimum_cost == near(centralized_optimum(s).cost));
  // Reported costs always go through the canonical cost route.
  CHECK(r.worst_equilibrium_cost == system_cost(s, r.worst_equilibrium));
  CHECK(r.optimum_cost == system_cost(s, r.optimum_profile));
}

TEST_CASE("single-user instance degenerates cleanly") {
  Scenario s = fixtures::instance_a();
  EquilibriumReport r = equilibrium_report(s);
  // Offloading dominates: cloud cost 0.0189 vs local 0.505.
  CHECK(r.optimum_profile.to_string() == "1");
  CHECK(r.equilibrium_count == 1);
  CHECK(r.price_of_anarchy == near(1.0));
  CHECK(r.optimum_cost == near(fixtures::a::cloud_cost_solo));
}

TEST_CASE("optimum never exceeds either uniform baseline") {
  GeneratorSpec g;
  g.users = 11;
  for (std::uint64_t seed : {71u, 72u, 73u}) {
    g.seed = seed;
    Scenario s = generate_scenario(g);
    Optimum o = centralized_optimum(s);
    Baselines base = baselines(s);
    CHECK(o.cost <= base.all_local);
    CHECK(o.cost <= base.all_cloud);
  }
}

}  // TEST_SUITE
