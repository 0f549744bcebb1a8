#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "fixtures.hpp"
#include "loops/catalog.hpp"
#include "loops/groups.hpp"
#include "loops/structure.hpp"
#include "oracle.hpp"

using namespace loops;

TEST_CASE("parse the printed star table") {
  const auto l = parse_loop_file(
      "loop 7 star\n"
      "1 2 3 4 5 6 7\n2 3 4 5 6 7 1\n3 4 5 6 7 1 2\n4 5 6 7 1 2 3\n"
      "5 6 7 1 2 3 4\n6 7 1 2 3 4 5\n7 1 2 3 4 5 6\n");
  CHECK(l == cyclic_group(7));
  CHECK(l.name() == "star");
  CHECK(l == example21_star());
}

TEST_CASE("trivial loop, comments and blank lines") {
  CHECK(parse_loop_file("loop 1\n1\n").order() == 1);
  const auto l = parse_loop_file("# header comment\n\nloop 2   two # name\n 1 2 # row\n\n2   1\n");
  CHECK(l.name() == "two");
  CHECK(l == cyclic_group(2));
}

TEST_CASE("parse errors report line and column") {
  auto expect = [](const std::string& text, std::size_t line, std::size_t column) {
    try {
      parse_loop_file(text);
      FAIL("expected LoopFileError");
    } catch (const LoopFileError& e) {
      CHECK(e.line() == line);
      CHECK(e.column() == column);
    }
  };
  expect("loop 3\n1 2 3\n2 2 1\n3 1 2\n", 3, 3);
  expect("loop 3\n1 2 3\n2 3 1\n2 1 3\n", 4, 1);
  expect("loop 2\n1 2\n2 x\n", 3, 3);
  expect("loop 2\n1 2\n2 3\n", 3, 3);
  expect("loop 2\n1 2\n", 2, 0);
  expect("loop 2\n1 2\n2 1\n1 2\n", 4, 0);
  expect("loop 2\n1 2 1\n", 2, 0);
  expect("lop 2\n", 1, 1);
  expect("loop zero\n", 1, 6);
  expect("", 1, 0);
  CHECK_THROWS_AS(parse_loop_file("loop 3\n1 2 3\n2 1 3\n3 3 1\n"), LoopFileError);
  CHECK(parse_loop_file("loop 2\n2 1\n1 2\n").identity() == 1);
  CHECK_THROWS_AS(parse_loop_file("loop 3\n1 3 2\n3 2 1\n2 1 3\n"), NoIdentity);
}

TEST_CASE("writer round-trips normalized files") {
  for (const auto& l : {example21_dot(), cyclic_group(12), fixtures::automorphic6()}) {
    const auto text = write_loop_file(l);
    const auto parsed = parse_loop_file(text);
    CHECK(parsed == l);
    CHECK(parsed.name() == l.name());
    CHECK(write_loop_file(parsed) == text);
  }
  CHECK(write_loop_file(cyclic_group(2)) == "loop 2 C2\n1 2\n2 1\n");
  CHECK(write_loop_file(cyclic_group(10)).find("\n 2  3") != std::string::npos);
}

TEST_CASE("read_loop_file uses the stem as fallback name") {
  const auto dir = std::filesystem::temp_directory_path() / "loops_catalog_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "tiny.loop";
  std::ofstream(path) << "loop 2\n1 2\n2 1\n";
  CHECK(read_loop_file(path).name() == "tiny");
  CHECK(resolve_loop(path.string()) == cyclic_group(2));
  CHECK_THROWS_AS(read_loop_file(dir / "missing.loop"), std::runtime_error);
}

TEST_CASE("builtins") {
  const auto c = builtin_loops();
  CHECK(c.size() == 18);
  CHECK(c.entries[0].name == "example21_star");
  CHECK(c.entries[0].flags.associative);
  CHECK_FALSE(c.entries[1].flags.associative);
  CHECK(resolve_loop("example21_dot") == example21_dot());
  CHECK(resolve_loop("C5") == cyclic_group(5));
  CHECK(resolve_loop("C3xC3").order() == 9);
  CHECK(resolve_loop("C2xC2xC2").order() == 8);
  CHECK(resolve_loop("example21_starxC2").order() == 14);
  CHECK(resolve_loop("loop6.1").order() == 6);
  CHECK_THROWS_AS(resolve_loop("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(resolve_loop("loop5.99"), std::invalid_argument);
}

TEST_CASE("isomorphism tests") {
  CHECK(are_isomorphic(cyclic_group(7), example21_star()));
  CHECK_FALSE(are_isomorphic(example21_star(), example21_dot()));
  CHECK_FALSE(are_isomorphic(cyclic_group(4), cyclic_group(5)));
  CHECK_FALSE(are_isomorphic(cyclic_group(4), direct_product(cyclic_group(2), cyclic_group(2))));
  CHECK_THROWS_AS(canonical_form(cyclic_group(9)), OrderTooLarge);
  const Permutation p(std::vector<Element>{0, 4, 8, 3, 7, 2, 6, 1, 5});
  CHECK(are_isomorphic(cyclic_group(9), relabel(cyclic_group(9), p)));
  CHECK_FALSE(are_isomorphic(cyclic_group(9), direct_product(cyclic_group(3), cyclic_group(3))));
}

TEST_CASE("canonical form is idempotent and relabeling-invariant") {
  std::mt19937_64 rng(3);
  auto loops = fixtures::all_loops(6);
  loops.push_back(example21_dot());
  loops.push_back(direct_product(cyclic_group(2), cyclic_group(4)));
  for (const auto& l : loops) {
    const auto c = canonical_form(l);
    CHECK(c.identity() == 0);
    CHECK(canonical_form(c) == c);
    for (int k = 0; k < 3; ++k) {
      auto images = fixtures::identity_map(l.order());
      std::shuffle(images.begin(), images.end(), rng);
      CHECK(canonical_form(relabel(l, Permutation(images))) == c);
    }
  }
}

TEST_CASE("canonical form is the least table over identity-fixing relabelings") {
  for (const auto& l : fixtures::all_loops(5)) {
    auto images = fixtures::identity_map(l.order());
    std::vector<Element> least;
    // Identity is 0 in generated loops; permute the rest.
    do {
      const auto r = relabel(l, Permutation(images));
      if (least.empty() || r.cells() < least) least = r.cells();
    } while (std::next_permutation(images.begin() + 1, images.end()));
    CHECK(canonical_form(l).cells() == least);
  }
}

TEST_CASE("canonical forms and backtracking agree on every pair of order <= 5") {
  std::vector<LoopTable> loops;
  std::mt19937_64 rng(5);
  for (const auto& l : fixtures::all_loops(5)) {
    loops.push_back(l);
    auto images = fixtures::identity_map(l.order());
    std::shuffle(images.begin(), images.end(), rng);
    loops.push_back(relabel(l, Permutation(images)));
  }
  for (const auto& a : loops)
    for (const auto& b : loops) {
      if (a.order() != b.order()) continue;
      CHECK((canonical_form(a) == canonical_form(b)) == find_isomorphism(a, b).has_value());
    }
}

TEST_CASE("reduced Latin square counts") {
  const std::size_t expected[] = {1, 1, 1, 4, 56, 9408};
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(for_each_reduced_loop(n, [](const LoopTable&) { return true; }) == expected[n - 1]);
    if (n <= 5) CHECK(oracle::reduced_latin_squares(static_cast<int>(n)).size() == expected[n - 1]);
  }
}

TEST_CASE("generated catalogs match the oracle") {
  for (int n = 1; n <= 5; ++n)
    CHECK(generate_loops(static_cast<std::size_t>(n)).size() == oracle::count_loop_classes(n));
  CHECK(generate_loops(6).size() == 109);
}

TEST_CASE("generated catalogs: names, order, pairwise non-isomorphic") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto c = generate_loops(n, {.jobs = 2});
    for (std::size_t k = 0; k < c.size(); ++k) {
      CHECK(c.entries[k].name == "loop" + std::to_string(n) + "." + std::to_string(k + 1));
      CHECK(canonical_form(c.entries[k].loop) == c.entries[k].loop);
      if (k) CHECK(c.entries[k - 1].loop.cells() < c.entries[k].loop.cells());
    }
  }
  CHECK(generate_loops(1).entries[0].loop == cyclic_group(1));
  CHECK(generate_loops(2).entries[0].loop == cyclic_group(2));
  CHECK(are_isomorphic(generate_loops(3).entries[0].loop, cyclic_group(3)));
}

TEST_CASE("filters are monotone and re-check") {
  const std::vector<LoopFilter> all{LoopFilter::automorphic, LoopFilter::commutative,
                                    LoopFilter::odd_order, LoopFilter::co1,
                                    LoopFilter::power_associative};
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto full = generate_loops(n);
    for (auto f : all) {
      const auto sub = generate_loops(n, {.filters = {f}});
      for (const auto& e : sub.entries) {
        CHECK(passes(e.loop, f));
        const auto it = std::find_if(full.entries.begin(), full.entries.end(),
                                     [&](const CatalogEntry& x) { return x.name == e.name; });
        REQUIRE(it != full.entries.end());
        CHECK(it->loop == e.loop);
      }
      std::size_t expected = 0;
      for (const auto& e : full.entries) expected += passes(e.loop, f);
      CHECK(sub.size() == expected);
    }
  }
  CHECK(generate_loops(5, {.filters = {LoopFilter::automorphic}}).size() == 1);
  CHECK(generate_loops(6, {.filters = {LoopFilter::automorphic}}).size() == 3);
  CHECK(parse_filter("odd-order") == LoopFilter::odd_order);
  CHECK_FALSE(parse_filter("even"));
}

TEST_CASE("the non-associative automorphic loop of order 6") {
  const auto c = generate_loops(6, {.filters = {LoopFilter::automorphic}});
  std::size_t nonassoc = 0;
  for (const auto& e : c.entries) {
    CHECK(e.flags.automorphic);
    if (e.flags.associative) continue;
    ++nonassoc;
    CHECK(are_isomorphic(e.loop, fixtures::automorphic6()));
    CHECK_FALSE(e.flags.commutative);
    CHECK_FALSE(e.flags.co1);
  }
  CHECK(nonassoc == 1);
}

TEST_CASE("generation caps") {
  const auto big = generate_loops(8);
  CHECK(big.size() == 0);
  CHECK(big.warnings.size() == 1);
  CHECK(generate_loops(0).size() == 0);
}
