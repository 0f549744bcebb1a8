#ifndef LOOPS_HALFISO_HPP
#define LOOPS_HALFISO_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "loops/loop.hpp"
#include "loops/report.hpp"

namespace loops {

/// A bijection f: source -> target with f(ab) in {f(a)f(b), f(b)f(a)}.
/// Holds references; the loops must outlive it.
struct HalfIso {
  std::reference_wrapper<const LoopTable> source;
  std::reference_wrapper<const LoopTable> target;
  std::vector<Element> map;
};

/// Exhaustive pair check. Witness: least (a, b) with f(ab) outside
/// {f(a)f(b), f(b)f(a)}. Throws std::invalid_argument if the orders differ
/// or `map` is not a bijection.
Verdict is_half_isomorphism(const LoopTable& source, const LoopTable& target,
                            std::span<const Element> map);

/// Throws std::invalid_argument (with the witness) unless `map` is a
/// half-isomorphism.
HalfIso make_half_iso(const LoopTable& source, const LoopTable& target,
                      std::vector<Element> map);

using Triple = std::array<Element, 3>;

struct Classification {
  bool is_isomorphism = false;
  bool is_anti_isomorphism = false;
  bool is_special = false;
  /// Isomorphism or anti-isomorphism; both flags may hold at once when
  /// every pair of images commutes.
  bool trivial = false;
  /// Least failing pairs for the two homomorphism conditions.
  Verdict isomorphism_witness;
  Verdict anti_isomorphism_witness;
  /// Least commuting pair with non-commuting images.
  Verdict speciality_witness;
  /// Lexicographically first GG-triples, at most `gg_cap` of them.
  std::vector<Triple> gg_triples;
  std::size_t gg_triple_count = 0;
  /// Filled in audit mode: the inverse map is a half-isomorphism, and the
  /// image-set criterion.
  std::optional<bool> special_by_inverse;
  std::optional<bool> special_by_image_sets;
};

struct ClassifyOptions {
  std::size_t gg_cap = 10;
  bool audit = false;
};

Classification classify(const HalfIso& f, const ClassifyOptions& options = {});

/// The three equivalent speciality criteria.
bool special_by_inverse(const HalfIso& f);
bool special_by_image_sets(const HalfIso& f);
Verdict special_by_commuting(const HalfIso& f);

/// f(xy) = f(x)f(y) != f(y)f(x) and f(xz) = f(z)f(x) != f(x)f(z).
bool is_gg_triple(const HalfIso& f, Element x, Element y, Element z);

enum class EnumerationMode : std::uint8_t { naive, pruned };

const char* to_string(EnumerationMode mode);

struct EnumerationResult {
  /// Image sequences in lexicographic order.
  std::vector<std::vector<Element>> maps;
  /// Whether the power rules (inverses, element orders) were applied.
  bool power_rules = false;
  std::vector<std::string> warnings;
};

/// Every half-isomorphism source -> target exactly once, in lexicographic
/// order of the image sequence. The visitor returns false to stop.
///
/// naive: depth-first over all bijections, checking the membership
/// condition on every pair whose product is already assigned.
/// pruned: forces f(1) = 1 and propagates the two-candidate constraint on
/// products; when both loops are power-associative it also forces
/// f(x^k) = f(x)^k and matches element orders. Otherwise those rules are
/// dropped with a warning.
EnumerationResult for_each_half_iso(const LoopTable& source, const LoopTable& target,
                                    EnumerationMode mode,
                                    const std::function<bool(std::span<const Element>)>& visit);

EnumerationResult enumerate_half_isos(const LoopTable& source, const LoopTable& target,
                                      EnumerationMode mode = EnumerationMode::pruned);

class NotFlexible : public LoopError {
 public:
  NotFlexible() : LoopError("semi-homomorphism needs flexible source and target") {}
};

/// f((xy)x) = (f(x)f(y))f(x). Throws NotFlexible.
Verdict is_semi_homomorphism(const HalfIso& f);

/// f(x^k) = f(x)^k for |k| <= order. Requires both loops power-associative
/// (std::invalid_argument otherwise). Witness: (x, |k|), detail gives k.
Verdict preserves_powers(const HalfIso& f);

/// The speciality consequences: commuting pairs have commuting images,
/// and the branch taken by (x, y) is mirrored by (y, x).
Verdict check_speciality_consequences(const HalfIso& f);

/// If f(xy) = f(x)f(y) and f(yx^-1) = f(x^-1)f(y) then f(x), f(y)
/// commute. Needs two-sided inverses in the source.
Verdict check_commuting_images(const HalfIso& f);

/// Conjugation transport with u^x = x^-1(ux): for commuting x, y
/// f(y^x) = f(y)^f(x) = f(y)^(f(x)^-1); otherwise the exponent is f(x) or
/// f(x)^-1 according to the branch of f(xy), swapped for y^(x^-1).
/// Needs two-sided inverses in both loops.
Verdict check_conjugation_transport(const HalfIso& f);

/// A = {x : f(xu) = f(x)f(u) for all u}, B likewise with f(u)f(x). With no
/// GG-triples A and B cover the source, and then one of them is all of it.
Verdict check_branch_partition(const HalfIso& f);

struct AuditOptions {
  EnumerationMode mode = EnumerationMode::pruned;
  std::size_t gg_cap = 10;
};

struct AuditResult {
  AnalysisReport report;
  bool hypotheses_met = false;
  std::vector<std::string> unmet_hypotheses;
  std::size_t maps_checked = 0;
  /// Number of violated checks over all maps.
  std::size_t violations = 0;
};

/// With Q, Q' automorphic and Q' satisfying x(xy) = (yx)x <=> xy = yx,
/// every half-isomorphism Q -> Q' must be trivial, special and a
/// semi-homomorphism with no GG-triples, and Q must satisfy the same
/// condition. Runs every check on every enumerated map; any failure is a
/// violation. When a hypothesis fails the report lists it and stops.
AuditResult audit_theorem41(const LoopTable& source, const LoopTable& target,
                            const AuditOptions& options = {});

struct ScanResult {
  AnalysisReport report;
  std::size_t pairs = 0;
  std::size_t maps = 0;
  /// Non-special maps found by the pruned search and re-found by the
  /// naive one.
  std::size_t confirmed_non_special = 0;
};

/// Every ordered pair of automorphic loops of equal order in `catalog`:
/// enumerate half-isomorphisms and report any that is not special. Each
/// such map is searched for again in naive mode before it is reported.
/// With no automorphic loop in `catalog` the report is empty.
ScanResult scan_conjecture51(std::span<const LoopTable> catalog);

}  // namespace loops

#endif  // LOOPS_HALFISO_HPP
