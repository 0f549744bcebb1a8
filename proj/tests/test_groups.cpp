#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "loops/catalog.hpp"
#include "loops/groups.hpp"
#include "oracle.hpp"

using namespace loops;

TEST_CASE("inner mappings of example21_dot") {
  const auto dot = example21_dot();
  // T_2 = (3 7 6) in 1-based cycle notation.
  const auto t2 = inner_t(dot, 1);
  const std::vector<Element> expected{0, 1, 6, 3, 4, 2, 5};
  CHECK(std::equal(t2.images().begin(), t2.images().end(), expected.begin()));
  CHECK(inn_group(dot).size() == 720);
  CHECK(mlt_group(dot).size() == 5040);
  CHECK_FALSE(is_automorphic(dot));
  CHECK(automorphism_group(dot).size() == 1);
}

TEST_CASE("groups have trivial inner mapping group") {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto c = cyclic_group(n);
    CHECK(inn_group(c).size() == 1);
    CHECK(mlt_group(c).size() == n);
    CHECK(is_automorphic(c));
  }
  CHECK(automorphism_group(cyclic_group(7)).size() == 6);
  CHECK(automorphism_group(direct_product(cyclic_group(2), cyclic_group(2))).size() == 6);
}

TEST_CASE("generator labels and count") {
  const auto gens = inner_generators(cyclic_group(3));
  CHECK(gens.size() == 3 + 2 * 9);
  CHECK(gens[0].label == "T(1)");
  CHECK(std::any_of(gens.begin(), gens.end(), [](const auto& g) { return g.label == "R(2,3)"; }));
  CHECK(std::any_of(gens.begin(), gens.end(), [](const auto& g) { return g.label == "L(3,2)"; }));
}

TEST_CASE("closure cap sets the truncated flag") {
  const auto dot = example21_dot();
  const auto capped = mlt_group(dot, 100);
  CHECK(capped.truncated);
  CHECK(capped.size() <= 100);
  CHECK_FALSE(mlt_group(dot).truncated);
}

TEST_CASE("Inn fixes the identity and lies inside Mlt") {
  for (const auto& l : fixtures::all_loops(5)) {
    const auto inn = inn_group(l);
    const auto mlt = mlt_group(l);
    CHECK(mlt.size() % inn.size() == 0);
    CHECK(mlt.size() == inn.size() * l.order());
    for (const auto& p : inn.elements) {
      CHECK(p(l.identity()) == l.identity());
      CHECK(mlt.contains(p));
    }
  }
}

TEST_CASE("is_automorphic agrees with the oracle on every loop of order <= 6") {
  std::size_t automorphic = 0;
  for (const auto& l : fixtures::all_loops(6)) {
    const bool got = is_automorphic(l).holds;
    CHECK(got == oracle::is_automorphic(oracle::raw(l)));
    automorphic += got;
  }
  CHECK(automorphic == 1 + 1 + 1 + 2 + 1 + 3);
}

TEST_CASE("automorphic loops are flexible with AAIP") {
  for (const auto& l : fixtures::all_loops(6)) {
    if (!is_automorphic(l)) continue;
    CHECK(is_flexible(l));
    CHECK(has_aaip(l));
  }
}

TEST_CASE("automorphism groups against brute force") {
  auto loops = fixtures::all_loops(5);
  loops.push_back(fixtures::automorphic6());
  for (const auto& l : loops) {
    const auto aut = automorphism_group(l);
    auto brute = oracle::automorphisms(oracle::raw(l));
    REQUIRE(aut.size() == brute.size());
    for (const auto& p : aut.elements) {
      CHECK(is_automorphism(l, p));
      const std::vector<int> v(p.images().begin(), p.images().end());
      CHECK(std::find(brute.begin(), brute.end(), v) != brute.end());
    }
  }
}

TEST_CASE("isomorphisms are found in lexicographic order") {
  const auto c5 = cyclic_group(5);
  const Permutation p(std::vector<Element>{0, 2, 4, 1, 3});
  const auto r = relabel(c5, p);
  std::vector<std::vector<Element>> seen;
  for_each_isomorphism(c5, r, [&](std::span<const Element> m) {
    seen.emplace_back(m.begin(), m.end());
    return true;
  });
  CHECK(seen.size() == 4);
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  const auto iso = find_isomorphism(c5, r);
  REQUIRE(iso);
  for (Element a = 0; a < 5; ++a)
    for (Element b = 0; b < 5; ++b) CHECK((*iso)(c5.mul(a, b)) == r.mul((*iso)(a), (*iso)(b)));
  CHECK_FALSE(find_isomorphism(example21_star(), example21_dot()));
}

TEST_CASE("automorphic failure names the generator") {
  const auto v = is_automorphic(example21_dot());
  REQUIRE_FALSE(v.holds);
  CHECK(v.witness.size() >= 3);
  CHECK_FALSE(v.detail.empty());
}
