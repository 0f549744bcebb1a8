#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "loops/catalog.hpp"
#include "loops/groups.hpp"
#include "loops/halfiso.hpp"
#include "loops/structure.hpp"
#include "oracle.hpp"

using namespace loops;

namespace {

std::vector<std::vector<Element>> brute(const LoopTable& a, const LoopTable& b) {
  std::vector<std::vector<Element>> out;
  for (const auto& m : oracle::half_isomorphisms(oracle::raw(a), oracle::raw(b)))
    out.emplace_back(m.begin(), m.end());
  return out;
}

}  // namespace

TEST_CASE("identity map from example21_star to example21_dot") {
  const auto star = example21_star(), dot = example21_dot();
  const auto id = fixtures::identity_map(7);
  REQUIRE(is_half_isomorphism(star, dot, id));
  const auto f = make_half_iso(star, dot, id);
  const auto c = classify(f, {.audit = true});
  CHECK_FALSE(c.is_isomorphism);
  CHECK_FALSE(c.is_anti_isomorphism);
  CHECK_FALSE(c.trivial);
  CHECK_FALSE(c.is_special);
  CHECK_FALSE(*c.special_by_inverse);
  CHECK_FALSE(*c.special_by_image_sets);
  CHECK(c.gg_triple_count == 4);
  const std::vector<Triple> expected{{2, 1, 5}, {2, 1, 6}, {2, 4, 5}, {2, 4, 6}};
  CHECK(c.gg_triples == expected);
  for (const auto& t : expected) CHECK(is_gg_triple(f, t[0], t[1], t[2]));

  // f(3*2) = 4 = f(3)f(2) != f(2)f(3) and f(3*6) = 1 = f(6)f(3) != f(3)f(6).
  CHECK(star.mul(2, 1) == 3);
  CHECK(dot.mul(2, 1) == 3);
  CHECK(dot.mul(1, 2) == 6);
  CHECK(star.mul(2, 5) == 0);
  CHECK(dot.mul(5, 2) == 0);
  CHECK(dot.mul(2, 5) != 0);

  const auto back = is_half_isomorphism(dot, star, id);
  CHECK_FALSE(back);
  CHECK(back.witness == std::vector<Element>{1, 2});
  CHECK_THROWS_AS(make_half_iso(dot, star, id), std::invalid_argument);
}

TEST_CASE("half-isomorphisms example21_star -> example21_dot") {
  const auto star = example21_star(), dot = example21_dot();
  const auto pruned = enumerate_half_isos(star, dot, EnumerationMode::pruned);
  const auto naive = enumerate_half_isos(star, dot, EnumerationMode::naive);
  CHECK(pruned.maps.size() == 6);
  CHECK(pruned.maps == naive.maps);
  CHECK(pruned.maps == brute(star, dot));
  CHECK_FALSE(pruned.power_rules);
  CHECK(pruned.warnings.size() == 1);
  for (const auto& m : pruned.maps) {
    const auto c = classify({star, dot, m});
    CHECK_FALSE(c.trivial);
    CHECK_FALSE(c.is_special);
  }
  CHECK_THROWS_AS(preserves_powers({star, dot, fixtures::identity_map(7)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(is_semi_homomorphism({star, dot, fixtures::identity_map(7)}), NotFlexible);
}

TEST_CASE("pruned, naive and brute force agree") {
  auto loops = fixtures::all_loops(5);
  for (const auto& a : loops)
    for (const auto& b : loops) {
      if (a.order() != b.order()) continue;
      const auto pruned = enumerate_half_isos(a, b, EnumerationMode::pruned).maps;
      CHECK(pruned == enumerate_half_isos(a, b, EnumerationMode::naive).maps);
      CHECK(pruned == brute(a, b));
    }
  const auto a6 = fixtures::automorphic6();
  CHECK(enumerate_half_isos(a6, a6).maps == brute(a6, a6));
  CHECK(enumerate_half_isos(cyclic_group(3), cyclic_group(4)).maps.empty());
}

TEST_CASE("enumeration stops when the visitor says so") {
  std::size_t seen = 0;
  for_each_half_iso(cyclic_group(7), cyclic_group(7), EnumerationMode::pruned,
                    [&](std::span<const Element>) { return ++seen < 2; });
  CHECK(seen == 2);
}

TEST_CASE("isomorphisms and anti-isomorphisms are half-isomorphisms") {
  const auto dot = example21_dot();
  const auto id = fixtures::identity_map(7);
  const auto op = opposite(dot);
  const auto to_op = classify({dot, op, id});
  CHECK(to_op.is_anti_isomorphism);
  CHECK_FALSE(to_op.is_isomorphism);
  CHECK(to_op.trivial);
  CHECK(to_op.is_special);
  const auto self = classify({dot, dot, id});
  CHECK(self.is_isomorphism);
  CHECK(self.gg_triple_count == 0);
  // A commutative loop: both at once.
  const auto g5 = cyclic_group(5);
  const auto c5 = classify({g5, g5, fixtures::identity_map(5)});
  CHECK(c5.is_isomorphism);
  CHECK(c5.is_anti_isomorphism);
}

TEST_CASE("speciality criteria agree on every enumerated map") {
  auto loops = fixtures::all_loops(5);
  loops.push_back(example21_star());
  loops.push_back(example21_dot());
  loops.push_back(fixtures::automorphic6());
  for (const auto& a : loops)
    for (const auto& b : loops) {
      if (a.order() != b.order()) continue;
      for (const auto& m : enumerate_half_isos(a, b).maps) {
        const HalfIso f{a, b, m};
        const bool c = special_by_commuting(f).holds;
        CHECK(special_by_inverse(f) == c);
        CHECK(special_by_image_sets(f) == c);
      }
    }
}

TEST_CASE("powers are preserved between power-associative loops") {
  auto loops = fixtures::all_loops(5);
  loops.push_back(fixtures::automorphic6());
  for (const auto& a : loops)
    for (const auto& b : loops) {
      if (a.order() != b.order() || !is_power_associative(a) || !is_power_associative(b))
        continue;
      for (const auto& m : enumerate_half_isos(a, b).maps) CHECK(preserves_powers({a, b, m}));
    }
}

TEST_CASE("audit on automorphic loops") {
  for (const auto& a : fixtures::automorphic_loops(6))
    for (const auto& b : fixtures::automorphic_loops(6)) {
      if (a.order() != b.order()) continue;
      const auto audit = audit_theorem41(a, b);
      const bool co1 = satisfies_co1(b).verdict.holds;
      CHECK(audit.hypotheses_met == co1);
      if (audit.hypotheses_met) CHECK(audit.violations == 0);
    }
  const auto rejected = audit_theorem41(example21_star(), example21_dot());
  CHECK_FALSE(rejected.hypotheses_met);
  CHECK(rejected.maps_checked == 0);
  CHECK(rejected.report.count(FindingStatus::skipped) == 1);
}

TEST_CASE("audit checks pass one by one on groups") {
  const auto g = direct_product(cyclic_group(3), cyclic_group(3));
  for (const auto& m : enumerate_half_isos(g, g).maps) {
    const HalfIso f{g, g, m};
    CHECK(check_speciality_consequences(f));
    CHECK(check_commuting_images(f));
    CHECK(check_conjugation_transport(f));
    CHECK(check_branch_partition(f));
    CHECK(is_semi_homomorphism(f));
  }
}

TEST_CASE("conjecture scan") {
  CHECK(scan_conjecture51({}).report.findings.empty());
  std::vector<LoopTable> groups;
  for (std::size_t n = 1; n <= 7; ++n) groups.push_back(cyclic_group(n));
  groups.push_back(direct_product(cyclic_group(2), cyclic_group(2)));
  const auto g = scan_conjecture51(groups);
  CHECK_FALSE(g.report.has_violations());
  CHECK(g.confirmed_non_special == 0);
  const auto a = fixtures::automorphic_loops(6);
  const auto s = scan_conjecture51(a);
  CHECK(s.pairs == 1 + 1 + 1 + 4 + 1 + 9);
  CHECK_FALSE(s.report.has_violations());
}

TEST_CASE("no non-special maps onto a non-automorphic loop are hidden by the scan filter") {
  // The scan only looks at automorphic loops; example21_dot is excluded.
  const std::vector<LoopTable> mixed{example21_star(), example21_dot()};
  const auto s = scan_conjecture51(mixed);
  CHECK(s.pairs == 1);
  CHECK_FALSE(s.report.has_violations());
}
