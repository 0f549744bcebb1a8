#ifndef LOOPS_ORACLE_HPP
#define LOOPS_ORACLE_HPP

// Brute-force reference implementations. They read only the raw Cayley
// table and share no search code with the library.

#include <cstddef>
#include <vector>

#include "loops/loop.hpp"

namespace loops::oracle {

using Table = std::vector<std::vector<int>>;

Table raw(const LoopTable& loop);

/// Reduced Latin squares of order n by plain recursion.
std::vector<Table> reduced_latin_squares(int n);

/// Number of isomorphism classes of loops of order n: reduced squares
/// deduplicated by taking the least flattened image over every relabeling
/// that fixes 0.
std::size_t count_loop_classes(int n);

/// Every bijection f (as an image vector) with f(ab) in {f(a)f(b), f(b)f(a)},
/// found by next_permutation over all n! candidates.
std::vector<std::vector<int>> half_isomorphisms(const Table& a, const Table& b);

std::vector<std::vector<int>> automorphisms(const Table& a);

bool is_automorphic(const Table& a);

}  // namespace loops::oracle

#endif  // LOOPS_ORACLE_HPP
