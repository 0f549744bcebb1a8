#include "loops/groups.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>

namespace loops {

namespace {

std::string label1(char kind, Element x) {
  return std::string(1, kind) + "(" + std::to_string(x + 1) + ")";
}

std::string label2(char kind, Element x, Element y) {
  return std::string(1, kind) + "(" + std::to_string(x + 1) + "," +
         std::to_string(y + 1) + ")";
}

Permutation inner_r(const LoopTable& loop, Element x, Element y) {
  std::vector<Element> images(loop.order());
  const Element xy = loop.mul(x, y);
  for (std::size_t z = 0; z < images.size(); ++z)
    images[z] = loop.rdiv(xy, loop.mul(loop.mul(static_cast<Element>(z), x), y));
  return Permutation(std::move(images));
}

Permutation inner_l(const LoopTable& loop, Element x, Element y) {
  std::vector<Element> images(loop.order());
  const Element yx = loop.mul(y, x);
  for (std::size_t z = 0; z < images.size(); ++z)
    images[z] = loop.ldiv(yx, loop.mul(y, loop.mul(x, static_cast<Element>(z))));
  return Permutation(std::move(images));
}

// Failing pair of p as an automorphism, if any.
std::optional<std::pair<Element, Element>> automorphism_defect(
    const LoopTable& loop, std::span<const Element> p) {
  const auto n = static_cast<Element>(loop.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (p[loop.mul(a, b)] != loop.mul(p[a], p[b])) return std::pair{a, b};
  return std::nullopt;
}

}  // namespace

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

PermGroup group_closure(std::vector<LabeledPermutation> generators,
                        std::size_t degree, std::size_t cap) {
  PermGroup group;
  group.degree = degree;

  std::vector<Permutation> distinct;
  {
    std::unordered_set<Permutation, PermutationHash> seen;
    for (const auto& g : generators) {
      if (g.perm.degree() != degree)
        throw std::invalid_argument("group_closure: generator degree mismatch");
      if (!g.perm.is_identity() && seen.insert(g.perm).second) distinct.push_back(g.perm);
    }
  }
  group.generators = std::move(generators);

  std::unordered_set<Permutation, PermutationHash> members;
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  members.insert(frontier.front());
  while (!frontier.empty() && !group.truncated) {
    std::vector<Permutation> next;
    for (const auto& p : frontier) {
      for (const auto& g : distinct) {
        Permutation q = compose(p, g);
        if (members.contains(q)) continue;
        if (members.size() >= cap) {
          group.truncated = true;
          break;
        }
        members.insert(q);
        next.push_back(std::move(q));
      }
      if (group.truncated) break;
    }
    frontier = std::move(next);
  }

  group.elements.assign(members.begin(), members.end());
  std::sort(group.elements.begin(), group.elements.end());
  return group;
}

Permutation inner_t(const LoopTable& loop, Element x) {
  std::vector<Element> images(loop.order());
  for (std::size_t y = 0; y < images.size(); ++y)
    images[y] = loop.ldiv(x, loop.mul(static_cast<Element>(y), x));
  return Permutation(std::move(images));
}

std::vector<LabeledPermutation> inner_generators(const LoopTable& loop) {
  const auto n = static_cast<Element>(loop.order());
  std::vector<LabeledPermutation> out;
  out.reserve(n + 2u * n * n);
  for (Element x = 0; x < n; ++x) out.push_back({label1('T', x), inner_t(loop, x)});
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      out.push_back({label2('R', x, y), inner_r(loop, x, y)});
      out.push_back({label2('L', x, y), inner_l(loop, x, y)});
    }
  return out;
}

PermGroup mlt_group(const LoopTable& loop, std::size_t cap) {
  std::vector<LabeledPermutation> gens;
  const auto n = static_cast<Element>(loop.order());
  for (Element a = 0; a < n; ++a) {
    gens.push_back({label1('L', a), left_translation(loop, a)});
    gens.push_back({label1('R', a), right_translation(loop, a)});
  }
  return group_closure(std::move(gens), n, cap);
}

PermGroup inn_group(const LoopTable& loop, std::size_t cap) {
  auto group = group_closure(inner_generators(loop), loop.order(), cap);
  for (const auto& p : group.elements)
    if (p(loop.identity()) != loop.identity())
      throw std::logic_error("inner mapping moves the identity");
  return group;
}

Verdict is_automorphism(const LoopTable& loop, const Permutation& p) {
  if (p.degree() != loop.order())
    throw std::invalid_argument("is_automorphism: degree mismatch");
  if (auto bad = automorphism_defect(loop, p.images()))
    return Verdict::fail({bad->first, bad->second}, "(ab)p != (a)p (b)p");
  return Verdict::pass();
}

Verdict is_automorphic(const LoopTable& loop) {
  const auto n = static_cast<Element>(loop.order());
  auto check = [&](const Permutation& p, std::string label,
                   std::vector<Element> args) -> std::optional<Verdict> {
    if (auto bad = automorphism_defect(loop, p.images())) {
      args.push_back(bad->first);
      args.push_back(bad->second);
      return Verdict::fail(std::move(args), label + " is not an automorphism");
    }
    return std::nullopt;
  };
  for (Element x = 0; x < n; ++x)
    if (auto v = check(inner_t(loop, x), label1('T', x), {x})) return *v;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (auto v = check(inner_r(loop, x, y), label2('R', x, y), {x, y})) return *v;
      if (auto v = check(inner_l(loop, x, y), label2('L', x, y), {x, y})) return *v;
    }
  return Verdict::pass();
}

namespace {

// Backtracking search for bijections phi: a -> b with
// phi(xy) = phi(x)phi(y). Assigning a pair forces the image of its product.
class IsomorphismSearch {
 public:
  IsomorphismSearch(const LoopTable& a, const LoopTable& b)
      : a_(a), b_(b), n_(a.order()), image_(n_, kUnset), allowed_(n_, full_mask()) {
    if (is_power_associative(a) && is_power_associative(b)) {
      for (std::size_t x = 0; x < n_; ++x) {
        const auto ox = element_order(a, static_cast<Element>(x));
        std::uint64_t mask = 0;
        for (std::size_t y = 0; y < n_; ++y)
          if (element_order(b, static_cast<Element>(y)) == ox) mask |= bit(y);
        allowed_[x] = mask;
      }
    }
  }

  void run(const std::function<bool(std::span<const Element>)>& visit) {
    if (a_.order() != b_.order()) return;
    if (!assign(a_.identity(), b_.identity())) return;
    visit_ = &visit;
    search();
  }

 private:
  static constexpr Element kUnset = 0xFFFF;

  static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }
  std::uint64_t full_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : bit(n_) - 1;
  }

  // Assigns x -> v and everything it forces. On failure the partial
  // assignment is left on the stack for the caller to undo.
  bool assign(Element x, Element v) {
    std::vector<std::pair<Element, Element>> queue{{x, v}};
    while (!queue.empty()) {
      auto [p, w] = queue.back();
      queue.pop_back();
      if (image_[p] != kUnset) {
        if (image_[p] != w) return false;
        continue;
      }
      if ((used_ & bit(w)) || !(allowed_[p] & bit(w))) return false;
      image_[p] = w;
      used_ |= bit(w);
      assigned_.push_back(p);
      for (Element q : assigned_) {
        queue.emplace_back(a_.mul(p, q), b_.mul(w, image_[q]));
        queue.emplace_back(a_.mul(q, p), b_.mul(image_[q], w));
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (assigned_.size() > mark) {
      const Element p = assigned_.back();
      assigned_.pop_back();
      used_ &= ~bit(image_[p]);
      image_[p] = kUnset;
    }
  }

  // Returns false once the visitor asked to stop.
  bool search() {
    std::size_t x = 0;
    while (x < n_ && image_[x] != kUnset) ++x;
    if (x == n_) return (*visit_)(image_);
    std::uint64_t candidates = allowed_[x] & ~used_;
    while (candidates) {
      const auto v = static_cast<Element>(std::countr_zero(candidates));
      candidates &= candidates - 1;
      const std::size_t mark = assigned_.size();
      const bool ok = assign(static_cast<Element>(x), v);
      const bool go_on = !ok || search();
      undo(mark);
      if (!go_on) return false;
    }
    return true;
  }

  const LoopTable& a_;
  const LoopTable& b_;
  std::size_t n_;
  std::vector<Element> image_;
  std::vector<std::uint64_t> allowed_;
  std::vector<Element> assigned_;
  std::uint64_t used_ = 0;
  const std::function<bool(std::span<const Element>)>* visit_ = nullptr;
};

}  // namespace

void for_each_isomorphism(const LoopTable& a, const LoopTable& b,
                          const std::function<bool(std::span<const Element>)>& visit) {
  IsomorphismSearch(a, b).run(visit);
}

std::optional<Permutation> find_isomorphism(const LoopTable& a, const LoopTable& b) {
  std::optional<Permutation> found;
  for_each_isomorphism(a, b, [&](std::span<const Element> images) {
    found = Permutation({images.begin(), images.end()});
    return false;
  });
  return found;
}

PermGroup automorphism_group(const LoopTable& loop) {
  PermGroup group;
  group.degree = loop.order();
  for_each_isomorphism(loop, loop, [&](std::span<const Element> images) {
    if (group.elements.size() >= kDefaultClosureCap) {
      group.truncated = true;
      return false;
    }
    group.elements.emplace_back(std::vector<Element>(images.begin(), images.end()));
    return true;
  });
  // Visited in lexicographic order, so already sorted.
  return group;
}

}  // namespace loops
