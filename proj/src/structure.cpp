#include "loops/structure.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>

#include "loops/groups.hpp"

namespace loops {

bool SubloopClosure::contains(Element x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

SubloopClosure subloop_generated(const LoopTable& loop,
                                 std::span<const Element> generators) {
  if (generators.empty())
    throw std::invalid_argument("subloop_generated: empty generator set");
  std::vector<bool> in(loop.order(), false);
  std::vector<Element> members;
  for (Element g : generators)
    if (!in[g]) {
      in[g] = true;
      members.push_back(g);
    }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (Element p : {loop.mul(members[i], members[j]), loop.mul(members[j], members[i])})
        if (!in[p]) {
          in[p] = true;
          members.push_back(p);
        }

  for (Element a : members)
    for (Element b : members)
      if (!in[loop.ldiv(a, b)] || !in[loop.rdiv(a, b)])
        throw std::logic_error("generated subset is not division-closed");

  std::sort(members.begin(), members.end());
  SubloopClosure out;
  out.members = std::move(members);
  out.generated_from.assign(generators.begin(), generators.end());
  return out;
}

std::vector<Element> commutant(const LoopTable& loop, std::span<const Element> set) {
  std::vector<Element> out;
  const auto n = static_cast<Element>(loop.order());
  for (Element x = 0; x < n; ++x)
    if (std::all_of(set.begin(), set.end(),
                    [&](Element y) { return loop.mul(x, y) == loop.mul(y, x); }))
      out.push_back(x);
  return out;
}

namespace {

Co1Verdict equivalence_check(const LoopTable& loop, auto&& left, auto&& right,
                             const char* forward, const char* backward) {
  const auto n = static_cast<Element>(loop.order());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const bool l = left(x, y), r = right(x, y);
      if (l && !r) return {Verdict::fail({x, y}, forward), Co1Direction::forward};
      if (!l && r) return {Verdict::fail({x, y}, backward), Co1Direction::backward};
    }
  return {Verdict::pass(), Co1Direction::none};
}

}  // namespace

Co1Verdict satisfies_co1(const LoopTable& loop) {
  return equivalence_check(
      loop,
      [&](Element x, Element y) {
        return loop.mul(x, loop.mul(x, y)) == loop.mul(loop.mul(y, x), x);
      },
      [&](Element x, Element y) { return loop.mul(x, y) == loop.mul(y, x); },
      "x(xy) = (yx)x but xy != yx", "xy = yx but x(xy) != (yx)x");
}

Co1Verdict satisfies_co2(const LoopTable& loop) {
  auto t = [&](Element x, Element y) { return loop.ldiv(x, loop.mul(y, x)); };
  return equivalence_check(
      loop, [&](Element x, Element y) { return t(x, t(x, y)) == y; },
      [&](Element x, Element y) { return t(x, y) == y; },
      "(y)T_x^2 = y but (y)T_x != y", "(y)T_x = y but (y)T_x^2 != y");
}

HypothesisCheck check_theorem31(const LoopTable& loop, bool require_automorphic) {
  const bool automorphic = is_automorphic(loop).holds;
  if (require_automorphic && !automorphic) throw NotAutomorphic();
  auto verdict = equivalence_check(
      loop,
      [&](Element x, Element y) {
        return loop.mul(x, loop.mul(x, y)) == loop.mul(loop.mul(y, x), x);
      },
      [&](Element x, Element y) {
        const Element xx = loop.mul(x, x);
        return loop.mul(xx, y) == loop.mul(y, xx);
      },
      "x(xy) = (yx)x but x^2y != yx^2", "x^2y = yx^2 but x(xy) != (yx)x");
  return {std::move(verdict.verdict), automorphic};
}

namespace {

bool subset_commutes(const LoopTable& loop, std::span<const Element> s) {
  for (Element a : s)
    for (Element b : s)
      if (loop.mul(a, b) != loop.mul(b, a)) return false;
  return true;
}

bool subset_associates(const LoopTable& loop, std::span<const Element> s) {
  for (Element a : s)
    for (Element b : s)
      for (Element c : s)
        if (loop.mul(loop.mul(a, b), c) != loop.mul(a, loop.mul(b, c))) return false;
  return true;
}

std::optional<Verdict> closure_defect(const LoopTable& loop, std::vector<Element> s) {
  const bool comm = subset_commutes(loop, s);
  const bool assoc = subset_associates(loop, s);
  if (!comm && !assoc) return std::nullopt;
  const auto closure = subloop_generated(loop, s);
  if (comm && !subset_commutes(loop, closure.members))
    return Verdict::fail(std::move(s), "commuting subset generates a non-commutative subloop");
  if (assoc && !subset_associates(loop, closure.members))
    return Verdict::fail(std::move(s), "associative subset generates a non-associative subloop");
  return std::nullopt;
}

}  // namespace

HypothesisCheck check_cor21(const LoopTable& loop, std::size_t trials, std::uint64_t seed) {
  const bool automorphic = is_automorphic(loop).holds;
  const auto n = static_cast<Element>(loop.order());
  for (Element x = 0; x < n; ++x)
    for (Element y = x; y < n; ++y) {
      std::vector<Element> s{x};
      if (y != x) s.push_back(y);
      if (auto bad = closure_defect(loop, std::move(s))) return {std::move(*bad), automorphic};
    }

  // Random subsets are almost never commuting, so grow them greedily from
  // a shuffled pool: even trials keep commuting, odd trials associating.
  if (n > 2) {
    std::mt19937_64 rng(seed);
    std::vector<Element> pool(n);
    for (Element i = 0; i < n; ++i) pool[i] = i;
    for (std::size_t t = 0; t < trials; ++t) {
      std::shuffle(pool.begin(), pool.end(), rng);
      const bool want_commuting = t % 2 == 0;
      std::vector<Element> s;
      for (Element candidate : pool) {
        if (s.size() == 5) break;
        s.push_back(candidate);
        const bool ok = want_commuting ? subset_commutes(loop, s) : subset_associates(loop, s);
        if (!ok) s.pop_back();
      }
      std::sort(s.begin(), s.end());
      if (auto bad = closure_defect(loop, std::move(s))) return {std::move(*bad), automorphic};
    }
  }
  return {Verdict::pass(), automorphic};
}

}  // namespace loops
