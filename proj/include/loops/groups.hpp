#ifndef LOOPS_GROUPS_HPP
#define LOOPS_GROUPS_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "loops/loop.hpp"
#include "loops/permutation.hpp"

namespace loops {

struct LabeledPermutation {
  std::string label;
  Permutation perm;
};

/// An explicitly enumerated permutation group.
///
/// `elements` is sorted. When `truncated` is set the closure stopped at
/// the cap and `elements` is only a subset of the group.
struct PermGroup {
  std::size_t degree = 0;
  std::vector<LabeledPermutation> generators;
  std::vector<Permutation> elements;
  bool truncated = false;

  std::size_t size() const { return elements.size(); }
  bool contains(const Permutation& p) const;
};

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

/// Breadth-first closure of the generators under composition.
PermGroup group_closure(std::vector<LabeledPermutation> generators,
                        std::size_t degree,
                        std::size_t cap = kDefaultClosureCap);

/// R(x,y) = R_x R_y R_xy^-1, L(x,y) = L_x L_y L_yx^-1 and T(x) = R_x L_x^-1
/// for all x, y, labeled with 1-based arguments, e.g. "R(2,3)".
std::vector<LabeledPermutation> inner_generators(const LoopTable& loop);

/// y -> x\(y*x).
Permutation inner_t(const LoopTable& loop, Element x);

/// Closure of all left and right translations.
PermGroup mlt_group(const LoopTable& loop, std::size_t cap = kDefaultClosureCap);
/// Closure of inner_generators(). Throws std::logic_error if a member
/// moves the identity.
PermGroup inn_group(const LoopTable& loop, std::size_t cap = kDefaultClosureCap);

/// Witness: the least pair (a, b) with (ab)p != (a)p (b)p.
Verdict is_automorphism(const LoopTable& loop, const Permutation& p);

/// Every inner generator is an automorphism. On failure `detail` names the
/// generator and `witness` holds its 0-based arguments followed by the
/// failing pair.
Verdict is_automorphic(const LoopTable& loop);

/// Visits every isomorphism a -> b as an image sequence, in
/// lexicographic order. The visitor returns false to stop early.
void for_each_isomorphism(
    const LoopTable& a, const LoopTable& b,
    const std::function<bool(std::span<const Element>)>& visit);

std::optional<Permutation> find_isomorphism(const LoopTable& a, const LoopTable& b);

/// Aut(L) by backtracking over images with product propagation.
PermGroup automorphism_group(const LoopTable& loop);

}  // namespace loops

#endif  // LOOPS_GROUPS_HPP
