#ifndef LOOPS_STRUCTURE_HPP
#define LOOPS_STRUCTURE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "loops/loop.hpp"

namespace loops {

struct SubloopClosure {
  /// Sorted.
  std::vector<Element> members;
  std::vector<Element> generated_from;

  bool contains(Element x) const;
  std::size_t size() const { return members.size(); }
};

/// Least multiplication-closed subset containing `generators`. In a finite
/// loop this is a subloop; division closure is asserted, not built.
/// Throws std::invalid_argument for an empty generator set and
/// std::logic_error if the result is not division-closed.
SubloopClosure subloop_generated(const LoopTable& loop,
                                 std::span<const Element> generators);

/// Elements commuting with every member of `set`, sorted.
std::vector<Element> commutant(const LoopTable& loop, std::span<const Element> set);

/// Which side of the x(xy) = (yx)x <=> xy = yx equivalence broke.
enum class Co1Direction : std::uint8_t {
  none,
  /// x(xy) = (yx)x but xy != yx.
  forward,
  /// xy = yx but x(xy) != (yx)x. Impossible in flexible loops.
  backward,
};

struct Co1Verdict {
  Verdict verdict;
  Co1Direction direction = Co1Direction::none;

  explicit operator bool() const { return verdict.holds; }
};

/// For all x, y: x(xy) = (yx)x exactly when xy = yx.
Co1Verdict satisfies_co1(const LoopTable& loop);

/// For all x, y: (y)T_x^2 = y exactly when (y)T_x = y. Equivalent to
/// satisfies_co1 on flexible loops only.
Co1Verdict satisfies_co2(const LoopTable& loop);

class NotAutomorphic : public LoopError {
 public:
  NotAutomorphic() : LoopError("loop is not automorphic") {}
};

struct HypothesisCheck {
  Verdict verdict;
  /// False when the loop is not automorphic, in which case the verdict is
  /// only an empirical observation.
  bool hypothesis_met = true;

  explicit operator bool() const { return verdict.holds; }
};

/// For all x, y: x(xy) = (yx)x exactly when x^2 y = y x^2. With
/// `require_automorphic`, throws NotAutomorphic instead of running on a
/// loop outside the hypothesis.
HypothesisCheck check_theorem31(const LoopTable& loop, bool require_automorphic = false);

/// Generated subloops of commuting (resp. associating) subsets are
/// commutative (resp. associative). Every commuting pair is checked; in
/// addition `trials` random commuting or associating subsets of up to
/// five elements are grown from `seed`.
/// Witness: the generating subset.
HypothesisCheck check_cor21(const LoopTable& loop, std::size_t trials = 200,
                            std::uint64_t seed = 0);

}  // namespace loops

#endif  // LOOPS_STRUCTURE_HPP
