#include "loops/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "loops/groups.hpp"
#include "loops/structure.hpp"

namespace loops {

LoopFileError::LoopFileError(const std::string& message, std::size_t line, std::size_t column)
    : LoopError("line " + std::to_string(line) +
                (column ? ", column " + std::to_string(column) : std::string()) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> split_line(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::optional<std::size_t> parse_count(std::string_view s) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

LoopTable parse_loop_file(std::string_view text, std::string fallback_name) {
  std::size_t n = 0;
  std::string name = std::move(fallback_name);
  bool have_header = false;
  LoopTable::Matrix rows;
  std::vector<std::size_t> row_lines;

  std::size_t line_no = 0, last_line = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto tokens = split_line(line);
    if (tokens.empty()) continue;
    last_line = line_no;

    if (!have_header) {
      if (tokens[0].text != "loop")
        throw LoopFileError("expected header 'loop <n> [name]'", line_no, tokens[0].column);
      if (tokens.size() < 2) throw LoopFileError("missing order after 'loop'", line_no, 0);
      const auto order = parse_count(tokens[1].text);
      if (!order || *order == 0)
        throw LoopFileError("order must be a positive integer", line_no, tokens[1].column);
      if (*order > kMaxOrder) throw OrderTooLarge(*order, kMaxOrder);
      n = *order;
      if (tokens.size() > 2) {
        const std::size_t start = tokens[2].column - 1;
        std::string_view rest = line.substr(start);
        if (auto hash = rest.find('#'); hash != std::string_view::npos) rest = rest.substr(0, hash);
        while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\t' || rest.back() == '\r'))
          rest.remove_suffix(1);
        name = std::string(rest);
      }
      have_header = true;
      continue;
    }

    if (rows.size() == n) throw LoopFileError("more than " + std::to_string(n) + " rows", line_no, 0);
    if (tokens.size() != n)
      throw LoopFileError("expected " + std::to_string(n) + " entries, found " +
                              std::to_string(tokens.size()),
                          line_no, 0);
    std::vector<Element> row;
    std::vector<bool> seen(n, false);
    for (const auto& token : tokens) {
      const auto value = parse_count(token.text);
      if (!value || *value < 1 || *value > n)
        throw LoopFileError("entry '" + std::string(token.text) + "' is not in 1.." +
                                std::to_string(n),
                            line_no, token.column);
      if (seen[*value - 1])
        throw LoopFileError("not a Latin square: row repeats " + std::string(token.text), line_no,
                            token.column);
      seen[*value - 1] = true;
      row.push_back(static_cast<Element>(*value - 1));
    }
    std::vector<std::size_t> cols;
    for (const auto& token : tokens) cols.push_back(token.column);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i][j] == row[j])
          throw LoopFileError("not a Latin square: column " + std::to_string(j + 1) +
                                  " repeats " + std::to_string(row[j] + 1) + " from line " +
                                  std::to_string(row_lines[i]),
                              line_no, cols[j]);
    rows.push_back(std::move(row));
    row_lines.push_back(line_no);
  }
  if (!have_header) throw LoopFileError("empty file, expected 'loop <n> [name]'", last_line, 0);
  if (rows.size() != n)
    throw LoopFileError("expected " + std::to_string(n) + " rows, found " +
                            std::to_string(rows.size()),
                        last_line, 0);
  return make_loop(rows, std::move(name));
}

std::string write_loop_file(const LoopTable& loop) {
  const std::size_t n = loop.order();
  const std::size_t width = std::to_string(n).size();
  std::string out = "loop " + std::to_string(n);
  if (!loop.name().empty()) out += " " + loop.name();
  out += '\n';
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const auto entry = std::to_string(loop.mul(a, b) + 1);
      if (b) out += ' ';
      out.append(width - entry.size(), ' ');
      out += entry;
    }
    out += '\n';
  }
  return out;
}

LoopTable read_loop_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_loop_file(buffer.str(), path.stem().string());
}

namespace {

LoopTable from_one_based(const std::vector<std::vector<int>>& rows, std::string name) {
  LoopTable::Matrix m;
  for (const auto& row : rows) {
    auto& r = m.emplace_back();
    for (int v : row) r.push_back(static_cast<Element>(v - 1));
  }
  return make_loop(m, std::move(name));
}

}  // namespace

LoopTable example21_star() {
  return from_one_based({{1, 2, 3, 4, 5, 6, 7},
                         {2, 3, 4, 5, 6, 7, 1},
                         {3, 4, 5, 6, 7, 1, 2},
                         {4, 5, 6, 7, 1, 2, 3},
                         {5, 6, 7, 1, 2, 3, 4},
                         {6, 7, 1, 2, 3, 4, 5},
                         {7, 1, 2, 3, 4, 5, 6}},
                        "example21_star");
}

LoopTable example21_dot() {
  return from_one_based({{1, 2, 3, 4, 5, 6, 7},
                         {2, 3, 7, 5, 6, 1, 4},
                         {3, 4, 5, 6, 7, 2, 1},
                         {4, 5, 6, 7, 1, 3, 2},
                         {5, 6, 4, 1, 2, 7, 3},
                         {6, 7, 1, 2, 3, 4, 5},
                         {7, 1, 2, 3, 4, 5, 6}},
                        "example21_dot");
}

PropertyFlags compute_flags(const LoopTable& loop) {
  PropertyFlags f;
  f.automorphic = is_automorphic(loop).holds;
  f.commutative = is_commutative(loop).holds;
  f.associative = is_associative(loop).holds;
  f.power_associative = is_power_associative(loop).holds;
  f.flexible = is_flexible(loop).holds;
  f.odd_order = loop.order() % 2 == 1;
  f.co1 = satisfies_co1(loop).verdict.holds;
  return f;
}

std::vector<LoopTable> Catalog::loops() const {
  std::vector<LoopTable> out;
  for (const auto& e : entries) out.push_back(e.loop);
  return out;
}

Catalog builtin_loops() {
  Catalog c;
  for (auto loop : {example21_star(), example21_dot()})
    c.entries.push_back({loop.name(), loop, compute_flags(loop)});
  for (std::size_t n = 1; n <= 16; ++n) {
    auto loop = cyclic_group(n);
    c.entries.push_back({loop.name(), loop, compute_flags(loop)});
  }
  return c;
}

namespace {

std::optional<LoopTable> resolve_atom(std::string_view spec) {
  if (spec == "example21_star") return example21_star();
  if (spec == "example21_dot") return example21_dot();
  if (spec.size() > 1 && spec[0] == 'C') {
    if (auto n = parse_count(spec.substr(1)); n && *n >= 1 && *n <= kMaxOrder)
      return cyclic_group(*n);
  }
  if (spec.starts_with("loop")) {
    const auto dot = spec.find('.');
    if (dot != std::string_view::npos) {
      const auto n = parse_count(spec.substr(4, dot - 4));
      const auto k = parse_count(spec.substr(dot + 1));
      if (n && k && *n >= 1 && *n <= 6 && *k >= 1) {
        const auto catalog = generate_loops(*n);
        if (*k <= catalog.size()) return catalog.entries[*k - 1].loop;
      }
    }
  }
  return std::nullopt;
}

std::optional<LoopTable> resolve_product(std::string_view spec) {
  if (auto atom = resolve_atom(spec)) return atom;
  for (std::size_t i = spec.find('x'); i != std::string_view::npos; i = spec.find('x', i + 1)) {
    auto left = resolve_atom(spec.substr(0, i));
    if (!left) continue;
    auto right = resolve_product(spec.substr(i + 1));
    if (right) return direct_product(*left, *right);
  }
  return std::nullopt;
}

}  // namespace

LoopTable resolve_loop(std::string_view spec) {
  const std::filesystem::path path{std::string(spec)};
  std::error_code ec;
  if (std::filesystem::is_regular_file(path, ec)) return read_loop_file(path);
  if (auto loop = resolve_product(spec)) return *loop;
  throw std::invalid_argument("unknown loop '" + std::string(spec) +
                              "': not a file, builtin, C<n>, loop<n>.<k> or product");
}

namespace {

// Branch-and-bound over relabelings. Cells are filled row-major; when a
// cell needs the preimage of a label not yet assigned we branch over the
// unlabeled elements, and a product landing on an unlabeled element takes
// the next free label (any other choice makes that cell larger).
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const LoopTable& loop)
      : loop_(loop),
        n_(loop.order()),
        sigma_(n_, kUnset),
        preimage_(n_, kUnset),
        current_(n_ * n_),
        best_(n_ * n_) {
    set_label(loop.identity(), 0);
  }

  std::vector<Element> run() {
    for (std::size_t k = 0; k < n_; ++k) {
      current_[k] = static_cast<Element>(k);
      current_[k * n_] = static_cast<Element>(k);
    }
    search(n_);
    return best_;
  }

 private:
  static constexpr Element kUnset = 0xFFFF;

  void set_label(Element e, Element label) {
    sigma_[e] = label;
    preimage_[label] = e;
    ++next_;
  }
  void clear_label(Element e) {
    preimage_[sigma_[e]] = kUnset;
    sigma_[e] = kUnset;
    --next_;
  }

  // -1, 0, 1 as current[0..cell] compares with best[0..cell].
  int compare_prefix(std::size_t cell) const {
    for (std::size_t k = 0; k <= cell; ++k)
      if (current_[k] != best_[k]) return current_[k] < best_[k] ? -1 : 1;
    return 0;
  }

  void search(std::size_t cell) {
    if (cell == n_ * n_) {
      if (!have_best_ || current_ < best_) best_ = current_;
      have_best_ = true;
      return;
    }
    const std::size_t i = cell / n_, j = cell % n_;
    if (j == 0) return search(cell + 1);
    if (std::max(i, j) >= next_) {
      const auto label = static_cast<Element>(next_);
      for (Element e = 0; e < n_; ++e) {
        if (sigma_[e] != kUnset) continue;
        set_label(e, label);
        search(cell);
        clear_label(e);
      }
      return;
    }
    const Element v = loop_.mul(preimage_[i], preimage_[j]);
    const bool fresh = sigma_[v] == kUnset;
    if (fresh) set_label(v, static_cast<Element>(next_));
    current_[cell] = sigma_[v];
    if (!have_best_ || compare_prefix(cell) <= 0) search(cell + 1);
    if (fresh) clear_label(v);
  }

  const LoopTable& loop_;
  std::size_t n_;
  std::size_t next_ = 0;
  std::vector<Element> sigma_, preimage_;
  std::vector<Element> current_, best_;
  bool have_best_ = false;
};

LoopTable::Matrix to_matrix(const std::vector<Element>& cells, std::size_t n) {
  LoopTable::Matrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    m[i].assign(cells.begin() + static_cast<std::ptrdiff_t>(i * n),
                cells.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
  return m;
}

std::vector<Element> canonical_cells(const LoopTable& loop) {
  if (loop.order() > kCanonicalFormCap) throw OrderTooLarge(loop.order(), kCanonicalFormCap);
  return CanonicalSearch(loop).run();
}

}  // namespace

LoopTable canonical_form(const LoopTable& loop) {
  return LoopTable::from_matrix(to_matrix(canonical_cells(loop), loop.order()), loop.name());
}

bool are_isomorphic(const LoopTable& a, const LoopTable& b) {
  if (a.order() != b.order()) return false;
  if (a.order() <= kCanonicalFormCap) return canonical_cells(a) == canonical_cells(b);
  return find_isomorphism(a, b).has_value();
}

const char* to_string(LoopFilter filter) {
  switch (filter) {
    case LoopFilter::automorphic: return "automorphic";
    case LoopFilter::commutative: return "commutative";
    case LoopFilter::odd_order: return "odd-order";
    case LoopFilter::co1: return "co1";
    case LoopFilter::power_associative: return "power-associative";
  }
  return "?";
}

std::optional<LoopFilter> parse_filter(std::string_view name) {
  for (auto f : {LoopFilter::automorphic, LoopFilter::commutative, LoopFilter::odd_order,
                 LoopFilter::co1, LoopFilter::power_associative})
    if (name == to_string(f)) return f;
  return std::nullopt;
}

bool passes(const LoopTable& loop, LoopFilter filter) {
  switch (filter) {
    case LoopFilter::automorphic: return is_automorphic(loop).holds;
    case LoopFilter::commutative: return is_commutative(loop).holds;
    case LoopFilter::odd_order: return loop.order() % 2 == 1;
    case LoopFilter::co1: return satisfies_co1(loop).verdict.holds;
    case LoopFilter::power_associative: return is_power_associative(loop).holds;
  }
  return false;
}

namespace {

// Reduced Latin square under construction: flat row-major cells with
// per-row and per-column masks of used symbols.
struct Square {
  std::size_t n;
  std::vector<Element> cells;
  std::vector<std::uint64_t> row_used, col_used;

  explicit Square(std::size_t order)
      : n(order), cells(order * order), row_used(order), col_used(order) {
    for (std::size_t i = 0; i < n; ++i) {
      put(i, static_cast<Element>(i));
      put(i * n, static_cast<Element>(i));
    }
  }
  void put(std::size_t cell, Element v) {
    cells[cell] = v;
    row_used[cell / n] |= std::uint64_t{1} << v;
    col_used[cell % n] |= std::uint64_t{1} << v;
  }
  void take(std::size_t cell) {
    const Element v = cells[cell];
    row_used[cell / n] &= ~(std::uint64_t{1} << v);
    col_used[cell % n] &= ~(std::uint64_t{1} << v);
  }
};

std::size_t next_free_cell(std::size_t n, std::size_t cell) {
  ++cell;
  if (cell % n == 0) ++cell;
  return cell;
}

// Completes `sq` from `cell` up to (not including) `stop`, calling
// visit(sq) at each completion. Returns false when the visitor stopped.
bool fill(Square& sq, std::size_t cell, std::size_t stop,
          const std::function<bool(const Square&)>& visit) {
  if (cell >= stop) return visit(sq);
  const std::size_t n = sq.n;
  const std::uint64_t free = ~(sq.row_used[cell / n] | sq.col_used[cell % n]);
  for (Element v = 0; v < n; ++v) {
    if (!(free & (std::uint64_t{1} << v))) continue;
    sq.put(cell, v);
    const bool go_on = fill(sq, next_free_cell(n, cell), stop, visit);
    sq.take(cell);
    if (!go_on) return false;
  }
  return true;
}

// Necessary conditions on the raw table, cheap enough to run on every
// reduced square. Automorphic loops are flexible and have the
// antiautomorphic inverse property.
bool raw_prefilter(const Square& sq, const std::vector<LoopFilter>& filters) {
  const std::size_t n = sq.n;
  const auto& t = sq.cells;
  auto mul = [&](std::size_t a, std::size_t b) { return t[a * n + b]; };
  for (auto f : filters) {
    if (f == LoopFilter::odd_order && n % 2 == 0) return false;
    if (f == LoopFilter::commutative) {
      for (std::size_t a = 1; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
          if (mul(a, b) != mul(b, a)) return false;
    }
    if (f == LoopFilter::automorphic) {
      for (std::size_t x = 1; x < n; ++x)
        for (std::size_t y = 1; y < n; ++y)
          if (mul(x, mul(y, x)) != mul(mul(x, y), x)) return false;
      std::vector<Element> inv(n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (mul(a, b) == 0) {
            if (mul(b, a) != 0) return false;
            inv[a] = static_cast<Element>(b);
          }
      for (std::size_t a = 1; a < n; ++a)
        for (std::size_t b = 1; b < n; ++b)
          if (inv[mul(a, b)] != mul(inv[b], inv[a])) return false;
    }
  }
  return true;
}

struct CellsHash {
  std::size_t operator()(const std::vector<Element>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Element e : v) h = (h ^ e) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

std::size_t for_each_reduced_loop(std::size_t n,
                                  const std::function<bool(const LoopTable&)>& visit) {
  if (n == 0 || n > kMaxOrder) return 0;
  std::size_t count = 0;
  Square sq(n);
  fill(sq, n + 1, n * n, [&](const Square& s) {
    ++count;
    return visit(LoopTable::from_matrix(to_matrix(s.cells, n)));
  });
  return count;
}

namespace {

// Canonical forms of all loops of order n passing `filters`.
std::map<std::vector<Element>, bool> generate_classes(std::size_t n,
                                                      const std::vector<LoopFilter>& filters,
                                                      std::size_t jobs_requested) {
  // Shard on the completions of row 1.
  std::vector<Square> prefixes;
  {
    Square sq(n);
    fill(sq, n + 1, n >= 2 ? 2 * n : n * n, [&](const Square& s) {
      prefixes.push_back(s);
      return true;
    });
  }

  const std::size_t jobs = std::max<std::size_t>(1, std::min(jobs_requested, prefixes.size()));
  std::atomic<std::size_t> next{0};
  std::mutex merge_mutex;
  std::map<std::vector<Element>, bool> found;

  auto worker = [&] {
    std::unordered_set<std::vector<Element>, CellsHash> local;
    for (std::size_t k = next++; k < prefixes.size(); k = next++) {
      Square sq = prefixes[k];
      fill(sq, 2 * n + 1, n * n, [&](const Square& s) {
        if (!raw_prefilter(s, filters)) return true;
        const auto loop = LoopTable::from_matrix(to_matrix(s.cells, n));
        for (auto f : filters)
          if (!passes(loop, f)) return true;
        local.insert(canonical_cells(loop));
        return true;
      });
    }
    std::lock_guard lock(merge_mutex);
    for (auto& cells : local) found.emplace(cells, true);
  };
  {
    std::vector<std::jthread> threads;
    for (std::size_t t = 1; t < jobs; ++t) threads.emplace_back(worker);
    worker();
  }
  return found;
}

}  // namespace

Catalog generate_loops(std::size_t n, const GenerateOptions& options) {
  Catalog catalog;
  if (n == 0) return catalog;
  if (n > options.order_cap || n > kCanonicalFormCap) {
    catalog.warnings.push_back("order " + std::to_string(n) + " exceeds the generation cap " +
                               std::to_string(options.order_cap) + "; nothing generated");
    return catalog;
  }

  // Up to order 6 the whole catalog is cheap, so entries keep the number
  // they have in the unfiltered catalog. Above that filters run before
  // deduplication and the names carry the filters.
  const bool full = n <= 6;
  std::string prefix = "loop" + std::to_string(n) + ".";
  if (!full) {
    catalog.warnings.push_back("order " + std::to_string(n) +
                               " is above the exhaustive range 1..6; generation is slow");
    for (auto f : options.filters) prefix += std::string(to_string(f)) + ".";
  }
  const auto classes = generate_classes(n, full ? std::vector<LoopFilter>{} : options.filters,
                                        options.jobs);
  std::size_t k = 0;
  for (const auto& [cells, unused] : classes) {
    auto name = prefix + std::to_string(++k);
    auto loop = LoopTable::from_matrix(to_matrix(cells, n), name);
    if (full && !std::all_of(options.filters.begin(), options.filters.end(),
                             [&](LoopFilter f) { return passes(loop, f); }))
      continue;
    auto flags = compute_flags(loop);
    catalog.entries.push_back({std::move(name), std::move(loop), flags});
  }
  return catalog;
}

}  // namespace loops
