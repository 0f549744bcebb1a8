#include "loops/loop.hpp"

#include <algorithm>
#include <string>

namespace loops {

NotLatinSquare::NotLatinSquare(bool in_row, std::size_t index)
    : LoopError(std::string("not a Latin square: ") + (in_row ? "row " : "column ") +
                std::to_string(index + 1) + " repeats an entry"),
      in_row_(in_row),
      index_(index) {}

NoTwoSidedInverse::NoTwoSidedInverse(Element element, Element right_inverse,
                                     Element left_inverse)
    : LoopError("element " + std::to_string(element + 1) +
                " has no two-sided inverse (right inverse " +
                std::to_string(right_inverse + 1) + ", left inverse " +
                std::to_string(left_inverse + 1) + ")"),
      element_(element),
      right_(right_inverse),
      left_(left_inverse) {}

OrderTooLarge::OrderTooLarge(std::size_t order, std::size_t cap)
    : LoopError("order " + std::to_string(order) + " exceeds the cap of " +
                std::to_string(cap)) {}

LoopTable LoopTable::from_matrix(const Matrix& rows, std::string name) {
  const std::size_t n = rows.size();
  if (n == 0) throw std::invalid_argument("empty Cayley table");
  if (n > kMaxOrder) throw OrderTooLarge(n, kMaxOrder);
  for (const auto& row : rows)
    if (row.size() != n) throw std::invalid_argument("Cayley table is not square");

  LoopTable loop;
  loop.n_ = n;
  loop.name_ = std::move(name);
  loop.mul_.resize(n * n);
  loop.ldiv_.resize(n * n);
  loop.rdiv_.resize(n * n);

  std::vector<bool> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t b = 0; b < n; ++b) {
      Element v = rows[a][b];
      if (v >= n || seen[v]) throw NotLatinSquare(true, a);
      seen[v] = true;
      loop.mul_[a * n + b] = v;
      loop.ldiv_[a * n + v] = static_cast<Element>(b);
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t a = 0; a < n; ++a) {
      Element v = rows[a][b];
      if (seen[v]) throw NotLatinSquare(false, b);
      seen[v] = true;
      loop.rdiv_[b * n + v] = static_cast<Element>(a);
    }
  }

  // In a Latin square a two-sided identity, if any, is unique.
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = rows[e][x] == x && rows[x][e] == x;
    if (ok) {
      loop.identity_ = static_cast<Element>(e);
      return loop;
    }
  }
  throw NoIdentity();
}

LoopTable LoopTable::with_name(std::string name) const {
  LoopTable copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

LoopTable::Matrix LoopTable::rows() const {
  Matrix out(n_, std::vector<Element>(n_));
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) out[a][b] = mul_[a * n_ + b];
  return out;
}

LoopTable make_loop(const LoopTable::Matrix& rows, std::string name) {
  return LoopTable::from_matrix(rows, std::move(name));
}

Permutation left_translation(const LoopTable& loop, Element a) {
  std::vector<Element> images(loop.order());
  for (std::size_t x = 0; x < images.size(); ++x)
    images[x] = loop.mul(a, static_cast<Element>(x));
  return Permutation(std::move(images));
}

Permutation right_translation(const LoopTable& loop, Element a) {
  std::vector<Element> images(loop.order());
  for (std::size_t x = 0; x < images.size(); ++x)
    images[x] = loop.mul(static_cast<Element>(x), a);
  return Permutation(std::move(images));
}

Element two_sided_inverse(const LoopTable& loop, Element a) {
  const Element right = loop.ldiv(a, loop.identity());
  const Element left = loop.rdiv(a, loop.identity());
  if (right != left) throw NoTwoSidedInverse(a, right, left);
  return right;
}

std::vector<Element> inverse_table(const LoopTable& loop) {
  std::vector<Element> inv(loop.order());
  for (std::size_t a = 0; a < inv.size(); ++a) {
    const Element right = loop.ldiv(static_cast<Element>(a), loop.identity());
    if (right != loop.rdiv(static_cast<Element>(a), loop.identity())) return {};
    inv[a] = right;
  }
  return inv;
}

Element power(const LoopTable& loop, Element a, long long k) {
  if (k < 0) {
    a = two_sided_inverse(loop, a);
    k = -k;
  }
  Element x = loop.identity();
  for (long long i = 0; i < k; ++i) x = loop.mul(x, a);
  return x;
}

std::size_t element_order(const LoopTable& loop, Element a) {
  std::size_t k = 1;
  for (Element x = a; x != loop.identity(); x = loop.mul(x, a)) ++k;
  return k;
}

Verdict is_commutative(const LoopTable& loop) {
  const auto n = static_cast<Element>(loop.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (loop.mul(a, b) != loop.mul(b, a)) return Verdict::fail({a, b}, "ab != ba");
  return Verdict::pass();
}

Verdict is_associative(const LoopTable& loop) {
  const auto n = static_cast<Element>(loop.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (loop.mul(loop.mul(a, b), c) != loop.mul(a, loop.mul(b, c)))
          return Verdict::fail({a, b, c}, "(ab)c != a(bc)");
  return Verdict::pass();
}

Verdict is_flexible(const LoopTable& loop) {
  const auto n = static_cast<Element>(loop.order());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (loop.mul(x, loop.mul(y, x)) != loop.mul(loop.mul(x, y), x))
        return Verdict::fail({x, y}, "x(yx) != (xy)x");
  return Verdict::pass();
}

Verdict has_aaip(const LoopTable& loop) {
  const auto n = static_cast<Element>(loop.order());
  const auto inv = inverse_table(loop);
  if (inv.empty()) {
    for (Element a = 0; a < n; ++a)
      if (loop.ldiv(a, loop.identity()) != loop.rdiv(a, loop.identity()))
        return Verdict::fail({a}, "no two-sided inverse");
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (inv[loop.mul(a, b)] != loop.mul(inv[b], inv[a]))
        return Verdict::fail({a, b}, "(ab)^-1 != b^-1 a^-1");
  return Verdict::pass();
}

namespace {

std::vector<Element> multiplicative_closure(const LoopTable& loop,
                                            std::vector<Element> members) {
  std::vector<bool> in(loop.order(), false);
  for (Element m : members) in[m] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (Element p : {loop.mul(members[i], members[j]),
                        loop.mul(members[j], members[i])}) {
        if (!in[p]) {
          in[p] = true;
          members.push_back(p);
        }
      }
    }
  }
  return members;
}

}  // namespace

Verdict is_power_associative(const LoopTable& loop) {
  const auto n = static_cast<Element>(loop.order());
  for (Element a = 0; a < n; ++a) {
    const auto sub = multiplicative_closure(loop, {a});
    for (Element x : sub)
      for (Element y : sub) {
        if (loop.mul(x, y) != loop.mul(y, x))
          return Verdict::fail({a}, "<a> is not commutative");
        for (Element z : sub)
          if (loop.mul(loop.mul(x, y), z) != loop.mul(x, loop.mul(y, z)))
            return Verdict::fail({a}, "<a> is not associative");
      }
  }
  return Verdict::pass();
}

std::vector<Element> squaring_map(const LoopTable& loop) {
  std::vector<Element> sq(loop.order());
  for (std::size_t x = 0; x < sq.size(); ++x)
    sq[x] = loop.mul(static_cast<Element>(x), static_cast<Element>(x));
  return sq;
}

Verdict is_uniquely_2_divisible(const LoopTable& loop) {
  const auto sq = squaring_map(loop);
  for (std::size_t a = 0; a < sq.size(); ++a)
    for (std::size_t b = a + 1; b < sq.size(); ++b)
      if (sq[a] == sq[b])
        return Verdict::fail({static_cast<Element>(a), static_cast<Element>(b)},
                             "a^2 = b^2");
  return Verdict::pass();
}

Element sqrt(const LoopTable& loop, Element a) {
  if (!is_uniquely_2_divisible(loop)) throw NotUniquely2Divisible();
  const auto sq = squaring_map(loop);
  return static_cast<Element>(std::find(sq.begin(), sq.end(), a) - sq.begin());
}

LoopTable cyclic_group(std::size_t n) {
  LoopTable::Matrix rows(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) rows[a][b] = static_cast<Element>((a + b) % n);
  return LoopTable::from_matrix(rows, "C" + std::to_string(n));
}

LoopTable direct_product(const LoopTable& a, const LoopTable& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  if (n > kMaxOrder) throw OrderTooLarge(n, kMaxOrder);
  LoopTable::Matrix rows(n, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto first = a.mul(static_cast<Element>(x / nb), static_cast<Element>(y / nb));
      const auto second = b.mul(static_cast<Element>(x % nb), static_cast<Element>(y % nb));
      rows[x][y] = static_cast<Element>(first * nb + second);
    }
  std::string name;
  if (!a.name().empty() && !b.name().empty()) name = a.name() + "x" + b.name();
  return LoopTable::from_matrix(rows, std::move(name));
}

LoopTable opposite(const LoopTable& loop) {
  auto rows = loop.rows();
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < a; ++b) std::swap(rows[a][b], rows[b][a]);
  return LoopTable::from_matrix(rows, loop.name().empty() ? "" : loop.name() + "^op");
}

LoopTable relabel(const LoopTable& loop, const Permutation& relabeling) {
  const std::size_t n = loop.order();
  LoopTable::Matrix rows(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto ea = static_cast<Element>(a), eb = static_cast<Element>(b);
      rows[relabeling(ea)][relabeling(eb)] = relabeling(loop.mul(ea, eb));
    }
  return LoopTable::from_matrix(rows, loop.name());
}

}  // namespace loops
