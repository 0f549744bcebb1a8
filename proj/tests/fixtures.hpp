#ifndef LOOPS_TEST_FIXTURES_HPP
#define LOOPS_TEST_FIXTURES_HPP

#include <numeric>
#include <vector>

#include "loops/catalog.hpp"
#include "loops/loop.hpp"

namespace fixtures {

using loops::Element;
using loops::LoopTable;

// The smallest non-associative automorphic loop (order 6), 0-based rows.
inline LoopTable automorphic6() {
  return loops::make_loop({{0, 1, 2, 3, 4, 5},
                           {1, 0, 3, 4, 5, 2},
                           {2, 5, 0, 1, 3, 4},
                           {3, 2, 4, 5, 1, 0},
                           {4, 3, 5, 2, 0, 1},
                           {5, 4, 1, 0, 2, 3}},
                          "A6");
}

// Quasigroup x*y = -(x+y) mod 3: Latin, but no identity.
inline LoopTable::Matrix no_identity3() { return {{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}; }

inline std::vector<Element> identity_map(std::size_t n) {
  std::vector<Element> v(n);
  std::iota(v.begin(), v.end(), Element{0});
  return v;
}

// Every generated loop of order 1..max, cached per process.
inline const std::vector<LoopTable>& all_loops(std::size_t max) {
  static std::vector<std::vector<LoopTable>> cache(8);
  auto& slot = cache[max];
  if (slot.empty())
    for (std::size_t n = 1; n <= max; ++n)
      for (auto& e : loops::generate_loops(n).entries) slot.push_back(e.loop);
  return slot;
}

inline std::vector<LoopTable> automorphic_loops(std::size_t max) {
  std::vector<LoopTable> out;
  for (std::size_t n = 1; n <= max; ++n)
    for (auto& e : loops::generate_loops(n, {.filters = {loops::LoopFilter::automorphic}}).entries)
      out.push_back(e.loop);
  return out;
}

}  // namespace fixtures

#endif  // LOOPS_TEST_FIXTURES_HPP
