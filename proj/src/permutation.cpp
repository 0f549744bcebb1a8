#include "loops/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace loops {

bool is_bijection(std::span<const Element> images) {
  std::vector<bool> seen(images.size(), false);
  for (Element x : images) {
    if (x >= images.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Permutation::Permutation(std::vector<Element> images)
    : images_(std::move(images)) {
  if (!is_bijection(images_))
    throw std::invalid_argument("permutation images are not a bijection");
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Element> images(degree);
  std::iota(images.begin(), images.end(), Element{0});
  return Permutation(Unchecked{}, std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<Element> images(p.degree());
  for (std::size_t x = 0; x < images.size(); ++x)
    images[x] = q.images_[p.images_[x]];
  return Permutation(Permutation::Unchecked{}, std::move(images));
}

Permutation invert(const Permutation& p) {
  std::vector<Element> images(p.degree());
  for (std::size_t x = 0; x < images.size(); ++x)
    images[p.images_[x]] = static_cast<Element>(x);
  return Permutation(Permutation::Unchecked{}, std::move(images));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image sequence.
  std::size_t h = 1469598103934665603ull;
  for (Element x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace loops
