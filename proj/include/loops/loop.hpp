#ifndef LOOPS_LOOP_HPP
#define LOOPS_LOOP_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "loops/permutation.hpp"

namespace loops {

inline constexpr std::size_t kMaxOrder = 64;

class LoopError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A row or column of the input matrix repeats an entry (or has an
/// out-of-range one). `index` is 0-based.
class NotLatinSquare : public LoopError {
 public:
  NotLatinSquare(bool in_row, std::size_t index);
  bool in_row() const { return in_row_; }
  std::size_t index() const { return index_; }

 private:
  bool in_row_;
  std::size_t index_;
};

class NoIdentity : public LoopError {
 public:
  NoIdentity() : LoopError("no element acts as a two-sided identity") {}
};

class NoTwoSidedInverse : public LoopError {
 public:
  NoTwoSidedInverse(Element element, Element right_inverse,
                    Element left_inverse);
  Element element() const { return element_; }
  /// x with a*x = 1.
  Element right_inverse() const { return right_; }
  /// y with y*a = 1.
  Element left_inverse() const { return left_; }

 private:
  Element element_, right_, left_;
};

class NotUniquely2Divisible : public LoopError {
 public:
  NotUniquely2Divisible()
      : LoopError("loop is not uniquely 2-divisible") {}
};

class OrderTooLarge : public LoopError {
 public:
  OrderTooLarge(std::size_t order, std::size_t cap);
};

/// Outcome of an exhaustive predicate. On failure `witness` holds the
/// lexicographically least failing tuple (0-based element ids).
struct Verdict {
  bool holds = true;
  std::vector<Element> witness;
  std::string detail;

  explicit operator bool() const { return holds; }

  static Verdict pass() { return {}; }
  static Verdict fail(std::vector<Element> witness, std::string detail = {}) {
    return {false, std::move(witness), std::move(detail)};
  }
};

/// A finite loop given by its validated Cayley table. Immutable.
///
/// Entry (a, b) holds a*b. Left and right division tables are built at
/// construction, so every operation below is a lookup.
class LoopTable {
 public:
  using Matrix = std::vector<std::vector<Element>>;

  /// Validates the Latin-square property and locates the identity.
  /// Throws NotLatinSquare, NoIdentity, OrderTooLarge, or
  /// std::invalid_argument for a non-square or empty matrix.
  static LoopTable from_matrix(const Matrix& rows, std::string name = {});

  std::size_t order() const { return n_; }
  Element identity() const { return identity_; }
  const std::string& name() const { return name_; }
  LoopTable with_name(std::string name) const;

  Element mul(Element a, Element b) const { return mul_[a * n_ + b]; }
  /// The unique x with a*x = b.
  Element ldiv(Element a, Element b) const { return ldiv_[a * n_ + b]; }
  /// The unique y with y*a = b.
  Element rdiv(Element a, Element b) const { return rdiv_[a * n_ + b]; }

  /// Row-major flattened table.
  const std::vector<Element>& cells() const { return mul_; }
  Matrix rows() const;

  /// Tables and identity compare equal; names are ignored.
  friend bool operator==(const LoopTable& a, const LoopTable& b) {
    return a.n_ == b.n_ && a.mul_ == b.mul_;
  }

 private:
  LoopTable() = default;

  std::size_t n_ = 0;
  Element identity_ = 0;
  std::vector<Element> mul_, ldiv_, rdiv_;
  std::string name_;
};

/// Same as LoopTable::from_matrix.
LoopTable make_loop(const LoopTable::Matrix& rows, std::string name = {});

Permutation left_translation(const LoopTable& loop, Element a);
Permutation right_translation(const LoopTable& loop, Element a);

/// x with a*x = x*a = 1. Throws NoTwoSidedInverse otherwise.
Element two_sided_inverse(const LoopTable& loop, Element a);

/// Inverse of every element, or empty when some element lacks a
/// two-sided inverse.
std::vector<Element> inverse_table(const LoopTable& loop);

/// Left-nested power: a^0 = 1, a^k = a^(k-1)*a, a^-k = (a^-1)^k.
Element power(const LoopTable& loop, Element a, long long k);

/// Least k >= 1 with a^k = 1. The left-nested powers of a form the orbit
/// of the identity under R_a, so this is the length of that cycle.
std::size_t element_order(const LoopTable& loop, Element a);

Verdict is_commutative(const LoopTable& loop);
Verdict is_associative(const LoopTable& loop);
/// x(yx) = (xy)x for all x, y.
Verdict is_flexible(const LoopTable& loop);
/// (xy)^-1 = y^-1 x^-1. Fails with a one-element witness when some
/// element has no two-sided inverse.
Verdict has_aaip(const LoopTable& loop);
/// Every singleton generates an associative, commutative subloop.
/// Witness: the generating element.
Verdict is_power_associative(const LoopTable& loop);

/// x -> x*x.
std::vector<Element> squaring_map(const LoopTable& loop);
/// Witness: the least pair (a, b), a < b, with a^2 = b^2.
Verdict is_uniquely_2_divisible(const LoopTable& loop);
/// The unique x with x*x = a. Throws NotUniquely2Divisible.
Element sqrt(const LoopTable& loop, Element a);

LoopTable cyclic_group(std::size_t n);
/// Componentwise product; (a, b) is encoded as a * |B| + b.
LoopTable direct_product(const LoopTable& a, const LoopTable& b);
/// Transposed table: x o y = y*x.
LoopTable opposite(const LoopTable& loop);

/// The loop with elements renamed by `relabeling` (old -> new).
LoopTable relabel(const LoopTable& loop, const Permutation& relabeling);

}  // namespace loops

#endif  // LOOPS_LOOP_HPP
