#include "doctest.h"
#include "support/oracles.hpp"
#include "toroidal/catalog.hpp"
#include "toroidal/towers.hpp"

using namespace toroidal;

namespace {

Tower tower(KnotExpr initial, std::vector<Stage> prefix, std::vector<Stage> cycle) {
  Tower t;
  t.name = "t";
  t.initial = std::move(initial);
  t.prefix = std::move(prefix);
  t.cycle = std::move(cycle);
  return t;
}

const KnotExpr kTrefoil = KnotExpr::torus(2, 3);

Tower tame_trefoil() { return find_catalog_tower("tame_trefoil"); }
Tower dyadic() { return find_catalog_tower("dyadic_solenoid"); }
Tower whitehead() { return find_catalog_tower("whitehead"); }
Tower unknot_tower() { return tower(KnotExpr::unknot(), {}, {Stage::core_parallel()}); }
Tower truncated_sum() {
  return tower(KnotExpr::unknot(),
               {Stage::swallow(kTrefoil), Stage::swallow(KnotExpr::torus(2, 5))},
               {Stage::core_parallel()});
}

bool has(const ValidationReport& r, ViolationKind k) {
  for (const auto& v : r.violations) {
    if (v.kind == k) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("validation") {
  const Tower bad = tower(kTrefoil, {}, {Stage::wind(2, 0)});
  const ValidationReport r = validate_tower(bad);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations.size() == 1);
  CHECK(r.violations[0].kind == ViolationKind::SchubertViolation);
  CHECK(r.violations[0].where == StageRef{Section::Cycle, 0, 1});
  CHECK(r.to_string().find("cycle[0]") != std::string::npos);
  CHECK_THROWS_AS(genus_of_tower(bad), TowerValidationError);

  CHECK(validate_tower(dyadic()).ok());
  CHECK(has(validate_tower(tower(KnotExpr::unknot(), {}, {Stage::generic(2, 0, std::nullopt, true)})),
            ViolationKind::ConcentricityContract));
  CHECK(has(validate_tower(tower(KnotExpr::unknot(), {}, {})), ViolationKind::MalformedStage));
  CHECK(has(validate_tower(tower(KnotExpr::unknot(), {}, {Stage::wind(-1)})),
            ViolationKind::MalformedStage));
  CHECK(has(validate_tower(tower(KnotExpr::torus(2, 4), {}, {Stage::core_parallel()})),
            ViolationKind::MalformedStage));

  // A declaration that only fails on the second pass through the cycle.
  const Tower second_pass = tower(KnotExpr::unknot(), {Stage::swallow(kTrefoil)},
                                  {Stage::wind(2, 3)});
  const ValidationReport r2 = validate_tower(second_pass);
  REQUIRE_FALSE(r2.ok());
  CHECK(r2.violations[0].where.pass == 2);
}

TEST_CASE("Schubert chain") {
  const GenusChain chain = unroll_genus_chain(truncated_sum(), 2);
  REQUIRE(chain.steps.size() == 4);
  CHECK(chain.steps[0].lower_after == 1);
  CHECK(chain.steps[1].lower_after == 3);
  CHECK(chain.steps[3].exact_after == 3);

  const GenusChain blow = unroll_genus_chain(find_catalog_tower("knotted_dyadic_solenoid"), 3);
  CHECK(blow.steps[0].lower_after == 2);
  CHECK(blow.steps[1].lower_after == 4);
  CHECK(blow.steps[2].lower_after == 8);
}

TEST_CASE("cohomology") {
  CHECK(cech_h1(whitehead()).h1_class == H1Class::Trivial);
  CHECK_FALSE(cech_h1(whitehead()).steinitz.has_value());
  CHECK(cech_h1(tame_trefoil()).h1_class == H1Class::Z);
  CHECK(steinitz_to_string(*cech_h1(tame_trefoil()).steinitz) == "1");
  const CohProfile d = cech_h1(dyadic());
  CHECK(d.h1_class == H1Class::NotFinitelyGenerated);
  CHECK(steinitz_to_string(*d.steinitz) == "2^inf");
  CHECK(d.h2_trivial);

  // Prefix windings contribute finite exponents, cycle windings infinite ones;
  // windings before a zero are forgotten by the direct limit.
  const Tower mixed = tower(KnotExpr::unknot(),
                            {Stage::wind(5), Stage::generic(0, 0), Stage::wind(12), Stage::wind(3)},
                            {Stage::wind(2), Stage::wind(1)});
  Steinitz expected;
  for (const auto& [p, e] : oracle::factor(12 * 3)) expected[p] = e;
  for (const auto& [p, e] : oracle::factor(2)) expected[p] = std::nullopt;
  CHECK(cech_h1(mixed).steinitz == expected);
  CHECK(steinitz_to_string(expected) == "2^inf*3^2");
}

TEST_CASE("genus of towers") {
  CHECK(genus_of_tower(find_catalog_tower("knotted_dyadic_solenoid")) ==
        GenusResult::infinite(GenusReason::WindingBlowup));
  CHECK(genus_of_tower(find_catalog_tower("infinite_trefoil_sum")) ==
        GenusResult::infinite(GenusReason::StronglyKnotted));
  CHECK(genus_of_tower(truncated_sum()) == GenusResult::exact(3));
  CHECK(genus_of_tower(tame_trefoil()) == GenusResult::exact(1));
  CHECK(genus_of_tower(dyadic()) == GenusResult::exact(0));
  CHECK(genus_of_tower(whitehead()) == GenusResult::exact(0));
  // Unknown pattern genus only yields the chain bound.
  const GenusResult lb = genus_of_tower(
      tower(kTrefoil, {}, {Stage::generic(1, std::nullopt)}));
  CHECK(lb.kind == GenusKind::LowerBound);
  CHECK(lb.value == 1);
  CHECK(lb.to_string() == ">=1");

  CHECK(is_unknotted_tower(dyadic()));
  CHECK_FALSE(is_unknotted_tower(tame_trefoil()));
  CHECK(is_unknotted_tower(unknot_tower()));
}

TEST_CASE("stabilized Alexander polynomial") {
  const LaurentPoly trefoil = oracle::to_lib(oracle::torus_alexander(2, 3));
  CHECK(tower_alexander(tame_trefoil()) == trefoil);
  CHECK(tower_alexander(tower(KnotExpr::unknot(), {Stage::swallow(kTrefoil)},
                              {Stage::core_parallel()})) == trefoil);
  CHECK(tower_alexander(unknot_tower()) == LaurentPoly(1));
  CHECK(tower_alexander(truncated_sum()) ==
        oracle::to_lib(oracle::mul(oracle::torus_alexander(2, 3), oracle::torus_alexander(2, 5))));

  // A prefix cable stage substitutes t -> t^w in the companion. Its genus
  // 2*1 + 0 has to be declared: Schubert alone only bounds it.
  const Tower cabled = tower(kTrefoil, {Stage::wind(2, 2)}, {Stage::core_parallel()});
  CHECK_THROWS_AS(tower_alexander(tower(kTrefoil, {Stage::wind(2)}, {Stage::core_parallel()})),
                  PreconditionFailed);
  CHECK(tower_alexander(cabled) == subst_power(trefoil, 2));

  try {
    tower_alexander(dyadic());
    FAIL("expected PreconditionFailed");
  } catch (const PreconditionFailed& e) {
    CHECK(e.reason() == PreconditionReason::H1NotZ);
  }
  try {
    tower_alexander(find_catalog_tower("infinite_trefoil_sum"));
    FAIL("expected PreconditionFailed");
  } catch (const PreconditionFailed& e) {
    CHECK(e.reason() == PreconditionReason::InfiniteGenus);
  }
}

TEST_CASE("Alexander polynomial is unchanged by refining the basis past stabilization") {
  const Tower base = truncated_sum();
  const LaurentPoly delta = tower_alexander(base);
  Tower refined = base;
  for (int i = 0; i < 4; ++i) {
    refined.prefix.push_back(Stage::core_parallel());
    CHECK(tower_alexander(refined) == delta);
  }
}

TEST_CASE("re-embedding") {
  const Tower u = reembed_unknotted(tame_trefoil());
  CHECK(u.initial == KnotExpr::unknot());
  CHECK(u.cycle == std::vector<Stage>{Stage::core_parallel()});
  CHECK(is_unknotted_tower(u));
  CHECK(reembed_unknotted(dyadic()) == dyadic());
  CHECK(is_unknotted_tower(reembed_unknotted(truncated_sum())));
  CHECK_THROWS_AS(reembed_unknotted(find_catalog_tower("infinite_trefoil_sum")), PreconditionFailed);
}

TEST_CASE("homeomorphism verdicts") {
  const HomeoVerdict kds = homeo_attractor_verdict(find_catalog_tower("knotted_dyadic_solenoid"));
  CHECK(kds.obstructed);
  CHECK(kds.rule == HomeoRule::InfiniteGenus);
  CHECK(homeo_attractor_verdict(find_catalog_tower("infinite_trefoil_sum")).rule ==
        HomeoRule::InfiniteGenus);
  const HomeoVerdict sol = homeo_attractor_verdict(dyadic());
  CHECK_FALSE(sol.obstructed);
  CHECK(sol.to_string() == "no_obstruction_found");

  // Knotted prefix, then a solenoid whose genus is only bounded: R2 applies.
  const Tower knotted = tower(KnotExpr::unknot(), {Stage::swallow(kTrefoil)},
                              {Stage::generic(3, std::nullopt)});
  const GenusResult g = genus_of_tower(knotted);
  CHECK(g.is_infinite());  // winding 3 after a knotted torus
  const Tower zero_then_knotted = tower(kTrefoil, {Stage::generic(0, 0)},
                                        {Stage::wind(2, 0)});
  CHECK(genus_of_tower(zero_then_knotted) == GenusResult::exact(0));
  CHECK_FALSE(homeo_attractor_verdict(zero_then_knotted).obstructed);
}

TEST_CASE("flow verdicts") {
  CHECK(flow_attractor_verdict(dyadic()).rule == FlowRule::H1NotZ);
  CHECK(flow_attractor_verdict(whitehead()).rule == FlowRule::H1NotZ);
  const FlowVerdict mw = flow_attractor_verdict(find_catalog_tower("modified_whitehead"));
  CHECK_FALSE(mw.realizable);
  CHECK(mw.rule == FlowRule::PersistentlyNonConcentric);
  CHECK_FALSE(mw.extrapolated);
  const FlowVerdict tame = flow_attractor_verdict(tame_trefoil());
  CHECK(tame.realizable);
  CHECK(tame.to_string() == "realizable:eventually_concentric");

  const Tower mixed = tower(KnotExpr::unknot(), {},
                            {Stage::core_parallel(), Stage::generic(1, 0, LaurentPoly(1))});
  const FlowVerdict v = flow_attractor_verdict(mixed);
  CHECK_FALSE(v.realizable);
  CHECK(v.extrapolated);
}

TEST_CASE("connected sums") {
  const Tower trefoils = find_catalog_tower("infinite_trefoil_sum");
  const Tower alternating = tower(kTrefoil, {},
                                  {Stage::swallow(KnotExpr::torus(2, 5)), Stage::swallow(kTrefoil)});
  const SumDistinction d = distinguish_connected_sums(trefoils, alternating);
  CHECK(d.result == SumComparison::Inequivalent);
  CHECK(d.witness == prime_key(KnotExpr::torus(2, 5)));
  CHECK(distinguish_connected_sums(trefoils, trefoils).result == SumComparison::Inconclusive);

  // Truncated masks with distinct cycle summands.
  const Tower s = mask_tower("101010");
  const Tower s2 = mask_tower("110110");
  CHECK(distinguish_connected_sums(s, s2).result == SumComparison::Inequivalent);

  const SummandMultiset m = connected_sum_summands(trefoils);
  REQUIRE(m.size() == 1);
  CHECK(m.begin()->second.omega);
  CHECK_THROWS_AS(connected_sum_summands(dyadic()), PreconditionFailed);
}

TEST_CASE("mask towers") {
  const Tower t = mask_tower("0110");
  CHECK(t.name == "mask_0110");
  REQUIRE(t.prefix.size() == 4);
  CHECK(t.prefix[0] == Stage::core_parallel());
  CHECK(t.prefix[1] == Stage::swallow(KnotExpr::torus(3, 4)));
  CHECK(t.cycle == std::vector<Stage>{Stage::swallow(KnotExpr::torus(6, 7))});
  CHECK_THROWS_AS(mask_tower(""), ValidationError);
  CHECK_THROWS_AS(mask_tower("012"), ValidationError);
}

TEST_CASE("r invariant") {
  for (const auto& t : builtin_catalog()) CHECK(r_of_toroidal(t) == 1);

  struct Row {
    std::optional<std::int64_t> r;
    H1Kind h1;
    bool h2;
    bool connected;
    RClass expected;
  };
  const Row rows[] = {
      {1, H1Kind::Other, true, true, RClass::Toroidal},
      {1, H1Kind::Other, true, false, RClass::ToroidalComponentPlusCellular},
      {1, H1Kind::Z, true, true, RClass::Inconclusive},
      {1, H1Kind::Zero, true, true, RClass::Inconclusive},
      {1, H1Kind::Other, false, true, RClass::Inconclusive},
      {std::nullopt, H1Kind::Other, true, true, RClass::Inconclusive},
  };
  for (const auto& row : rows) CHECK(classify_by_r(row.r, row.h1, row.h2, row.connected).kind == row.expected);
  const RClassification zero = classify_by_r(0, H1Kind::Zero, true, true);
  CHECK(zero.kind == RClass::Inconclusive);
  CHECK(zero.note == "connected case would be cellular");
}
