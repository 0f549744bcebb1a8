#ifndef LOOPS_PERMUTATION_HPP
#define LOOPS_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace loops {

/// Internal element index, 0-based. Files and the CLI use 1-based labels.
using Element = std::uint16_t;

/// A bijection on {0, ..., n-1}, stored as its dense image sequence.
///
/// Permutations act on the right, matching postfix operator notation:
/// compose(p, q) applies p first, so (x)pq = ((x)p)q.
class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<Element> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Element operator()(Element x) const { return images_[x]; }
  std::span<const Element> images() const { return images_; }
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<Element> images)
      : images_(std::move(images)) {}

  friend Permutation compose(const Permutation& p, const Permutation& q);
  friend Permutation invert(const Permutation& p);

  std::vector<Element> images_;
};

/// Left-to-right product: apply(compose(p, q), x) == q(p(x)).
/// Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation invert(const Permutation& p);
inline Element apply(const Permutation& p, Element x) { return p(x); }

/// True when `images` is a bijection on [0, images.size()).
bool is_bijection(std::span<const Element> images);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace loops

#endif  // LOOPS_PERMUTATION_HPP
