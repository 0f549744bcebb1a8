#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "loops/catalog.hpp"
#include "loops/loop.hpp"
#include "loops/permutation.hpp"

using namespace loops;

TEST_CASE("permutations act on the right") {
  const Permutation p(std::vector<Element>{1, 2, 0});
  const Permutation q(std::vector<Element>{0, 2, 1});
  const auto pq = compose(p, q);
  for (Element x = 0; x < 3; ++x) CHECK(pq(x) == q(p(x)));
  CHECK(compose(p, invert(p)).is_identity());
  CHECK(compose(invert(p), p).is_identity());
  CHECK_THROWS_AS(Permutation(std::vector<Element>{0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(compose(p, Permutation::identity(4)), std::invalid_argument);
  CHECK(is_bijection(std::vector<Element>{2, 0, 1}));
  CHECK_FALSE(is_bijection(std::vector<Element>{2, 0, 3}));
}

TEST_CASE("composition is associative on random permutations") {
  std::mt19937_64 rng(7);
  auto random_perm = [&](std::size_t n) {
    std::vector<Element> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Element>(i);
    std::shuffle(v.begin(), v.end(), rng);
    return Permutation(v);
  };
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_perm(9), b = random_perm(9), c = random_perm(9);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(invert(compose(a, b)) == compose(invert(b), invert(a)));
  }
}

TEST_CASE("make_loop validation") {
  SUBCASE("row repeat") {
    try {
      make_loop({{0, 1, 2}, {1, 1, 0}, {2, 0, 1}});
      FAIL("expected NotLatinSquare");
    } catch (const NotLatinSquare& e) {
      CHECK(e.in_row());
      CHECK(e.index() == 1);
    }
  }
  SUBCASE("column repeat") {
    try {
      make_loop({{0, 1, 2}, {1, 2, 0}, {1, 0, 2}});
      FAIL("expected NotLatinSquare");
    } catch (const NotLatinSquare& e) {
      CHECK_FALSE(e.in_row());
      CHECK(e.index() == 0);
    }
  }
  SUBCASE("no identity") { CHECK_THROWS_AS(make_loop(fixtures::no_identity3()), NoIdentity); }
  SUBCASE("shape") {
    CHECK_THROWS_AS(make_loop({}), std::invalid_argument);
    CHECK_THROWS_AS(make_loop({{0, 1}, {1}}), std::invalid_argument);
  }
  SUBCASE("identity need not be 0") {
    const auto l = make_loop({{1, 0}, {0, 1}});
    CHECK(l.identity() == 1);
  }
  SUBCASE("too large") {
    LoopTable::Matrix m(65, std::vector<Element>(65));
    for (std::size_t i = 0; i < 65; ++i)
      for (std::size_t j = 0; j < 65; ++j) m[i][j] = static_cast<Element>((i + j) % 65);
    CHECK_THROWS_AS(make_loop(m), OrderTooLarge);
  }
}

TEST_CASE("example21_dot basics") {
  const auto dot = example21_dot();
  CHECK(dot.order() == 7);
  CHECK(dot.identity() == 0);
  const std::vector<std::size_t> orders{1, 7, 5, 7, 7, 5, 5};
  for (Element a = 0; a < 7; ++a) CHECK(element_order(dot, a) == orders[a]);
  CHECK_FALSE(is_associative(dot));
  CHECK_FALSE(is_commutative(dot));
  CHECK_FALSE(is_flexible(dot));
  CHECK_FALSE(is_power_associative(dot));
  CHECK(inverse_table(dot).empty());
  CHECK_THROWS_AS(two_sided_inverse(dot, 1), NoTwoSidedInverse);
  CHECK_FALSE(has_aaip(dot));
}

TEST_CASE("cyclic groups") {
  for (std::size_t n = 1; n <= 9; ++n) {
    const auto c = cyclic_group(n);
    CHECK(c.name() == "C" + std::to_string(n));
    CHECK(is_associative(c));
    CHECK(is_commutative(c));
    CHECK(is_power_associative(c));
    CHECK(is_uniquely_2_divisible(c).holds == (n % 2 == 1));
    if (n > 1) CHECK(element_order(c, 1) == n);
  }
  const auto c7 = cyclic_group(7);
  CHECK(power(c7, 3, 0) == 0);
  CHECK(power(c7, 3, 2) == 6);
  CHECK(power(c7, 3, -1) == 4);
  CHECK(power(c7, 3, -2) == 1);
  for (Element a = 0; a < 7; ++a) CHECK(c7.mul(sqrt(c7, a), sqrt(c7, a)) == a);
  CHECK_THROWS_AS(sqrt(cyclic_group(4), 0), NotUniquely2Divisible);
  CHECK(is_uniquely_2_divisible(cyclic_group(4)).witness == std::vector<Element>{0, 2});
}

TEST_CASE("constructions") {
  const auto v4 = direct_product(cyclic_group(2), cyclic_group(2));
  CHECK(v4.order() == 4);
  CHECK(v4.name() == "C2xC2");
  for (Element a = 0; a < 4; ++a) CHECK(element_order(v4, a) <= 2);
  const auto dot = example21_dot();
  CHECK(opposite(opposite(dot)) == dot);
  CHECK(opposite(dot).name() == "example21_dot^op");
  for (Element a = 0; a < 7; ++a)
    for (Element b = 0; b < 7; ++b) CHECK(opposite(dot).mul(a, b) == dot.mul(b, a));
  const Permutation p(std::vector<Element>{0, 3, 1, 2, 6, 5, 4});
  const auto r = relabel(dot, p);
  for (Element a = 0; a < 7; ++a)
    for (Element b = 0; b < 7; ++b) CHECK(r.mul(p(a), p(b)) == p(dot.mul(a, b)));
}

TEST_CASE("division tables and translations on every loop of order <= 5") {
  for (const auto& l : fixtures::all_loops(5)) {
    const auto n = static_cast<Element>(l.order());
    for (Element a = 0; a < n; ++a) {
      const auto la = left_translation(l, a), ra = right_translation(l, a);
      for (Element b = 0; b < n; ++b) {
        CHECK(l.mul(a, l.ldiv(a, b)) == b);
        CHECK(l.mul(l.rdiv(a, b), a) == b);
        CHECK(la(b) == l.mul(a, b));
        CHECK(ra(b) == l.mul(b, a));
      }
    }
  }
}

TEST_CASE("predicates are invariant under relabeling") {
  std::mt19937_64 rng(11);
  for (const auto& l : fixtures::all_loops(5)) {
    std::vector<Element> images = fixtures::identity_map(l.order());
    std::shuffle(images.begin(), images.end(), rng);
    const auto r = relabel(l, Permutation(images));
    CHECK(is_commutative(r).holds == is_commutative(l).holds);
    CHECK(is_associative(r).holds == is_associative(l).holds);
    CHECK(is_flexible(r).holds == is_flexible(l).holds);
    CHECK(has_aaip(r).holds == has_aaip(l).holds);
    CHECK(is_power_associative(r).holds == is_power_associative(l).holds);
    CHECK(r.identity() == images[l.identity()]);
  }
}

TEST_CASE("element order matches the left-nested power cycle") {
  for (const auto& l : fixtures::all_loops(5)) {
    for (Element a = 0; a < l.order(); ++a) {
      const auto k = element_order(l, a);
      CHECK(power(l, a, static_cast<long long>(k)) == l.identity());
      for (std::size_t j = 1; j < k; ++j)
        CHECK(power(l, a, static_cast<long long>(j)) != l.identity());
    }
  }
}

TEST_CASE("witnesses are lexicographically least") {
  const auto dot = example21_dot();
  // Brute force the first non-commuting pair.
  std::vector<Element> first;
  for (Element a = 0; a < 7 && first.empty(); ++a)
    for (Element b = 0; b < 7; ++b)
      if (dot.mul(a, b) != dot.mul(b, a)) {
        first = {a, b};
        break;
      }
  CHECK(is_commutative(dot).witness == first);
}
