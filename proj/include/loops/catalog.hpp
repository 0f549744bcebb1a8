#ifndef LOOPS_CATALOG_HPP
#define LOOPS_CATALOG_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "loops/loop.hpp"

namespace loops {

/// Parse or validation failure in a loop file. `line` and `column` are
/// 1-based; column 0 means the whole line.
class LoopFileError : public LoopError {
 public:
  LoopFileError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

/// Format:
///
///     loop <n> [name]
///     <n rows of n whitespace-separated 1-based entries>
///
/// `#` starts a comment; blank lines are ignored. A repeated entry in a
/// row or column is reported at the line and column of the repeat.
/// `fallback_name` is used when the header carries no name.
LoopTable parse_loop_file(std::string_view text, std::string fallback_name = {});

/// Normalized form: header, then rows joined by single spaces, entries
/// right-aligned to the width of n. Ends with a newline.
std::string write_loop_file(const LoopTable& loop);

/// Reads and parses a file; the file stem is the fallback name. Throws
/// std::runtime_error when the file cannot be read.
LoopTable read_loop_file(const std::filesystem::path& path);

/// The two Cayley tables of the half-isomorphism example: the cyclic group
/// of order 7 and a non-associative loop of order 7.
LoopTable example21_star();
LoopTable example21_dot();

struct PropertyFlags {
  bool automorphic = false;
  bool commutative = false;
  bool associative = false;
  bool power_associative = false;
  bool flexible = false;
  bool odd_order = false;
  /// x(xy) = (yx)x exactly when xy = yx.
  bool co1 = false;
};

PropertyFlags compute_flags(const LoopTable& loop);

struct CatalogEntry {
  std::string name;
  LoopTable loop;
  PropertyFlags flags;
};

struct Catalog {
  std::vector<CatalogEntry> entries;
  std::vector<std::string> warnings;

  std::size_t size() const { return entries.size(); }
  std::vector<LoopTable> loops() const;
};

/// example21_star, example21_dot and C1..C16.
Catalog builtin_loops();

/// A loop from a file path, a builtin name, `C<n>`, `loop<n>.<k>` (the k-th
/// entry of generate_loops(n)), or direct products written `AxB`.
/// Throws std::invalid_argument for unknown names.
LoopTable resolve_loop(std::string_view spec);

inline constexpr std::size_t kCanonicalFormCap = 8;

/// Lexicographically least row-major table over all relabelings sending the
/// identity to 0. Throws OrderTooLarge above kCanonicalFormCap.
LoopTable canonical_form(const LoopTable& loop);

/// Canonical forms up to the cap, backtracking search above it.
bool are_isomorphic(const LoopTable& a, const LoopTable& b);

enum class LoopFilter : std::uint8_t { automorphic, commutative, odd_order, co1, power_associative };

const char* to_string(LoopFilter filter);
std::optional<LoopFilter> parse_filter(std::string_view name);

bool passes(const LoopTable& loop, LoopFilter filter);

struct GenerateOptions {
  std::vector<LoopFilter> filters;
  std::size_t jobs = 1;
  /// Orders above 6 are generated with a warning; above the cap the result
  /// is empty with a warning.
  std::size_t order_cap = 7;
};

/// All loops of order n up to isomorphism that pass every filter, as
/// canonical forms sorted by table and named `loop<n>.<k>` (1-based k).
Catalog generate_loops(std::size_t n, const GenerateOptions& options = {});

/// Every reduced Latin square of order n (first row and column 0..n-1),
/// in lexicographic order of the flattened table. Visitor returns false to
/// stop. Returns the number visited.
std::size_t for_each_reduced_loop(std::size_t n,
                                  const std::function<bool(const LoopTable&)>& visit);

}  // namespace loops

#endif  // LOOPS_CATALOG_HPP
