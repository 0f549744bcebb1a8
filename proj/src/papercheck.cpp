#include "loops/papercheck.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>

#include "loops/catalog.hpp"
#include "loops/groups.hpp"
#include "loops/halfiso.hpp"
#include "loops/identity.hpp"
#include "loops/structure.hpp"
#include "oracle.hpp"

namespace loops {

namespace {

struct Pair {
  LoopTable source;
  LoopTable target;
};

class Context {
 public:
  explicit Context(const PapercheckOptions& options) : options_(options) {}

  const Catalog& all(std::size_t n) { return cached(all_, n, {}); }
  const Catalog& automorphic(std::size_t n) {
    return cached(automorphic_, n, {LoopFilter::automorphic});
  }

  std::vector<LoopTable> automorphic_up_to(std::size_t max) {
    std::vector<LoopTable> out;
    for (std::size_t n = 1; n <= max; ++n)
      for (const auto& e : automorphic(n).entries) out.push_back(e.loop);
    return out;
  }

  const PapercheckOptions& options() const { return options_; }

 private:
  const Catalog& cached(std::map<std::size_t, Catalog>& cache, std::size_t n,
                        std::vector<LoopFilter> filters) {
    auto it = cache.find(n);
    if (it == cache.end()) {
      GenerateOptions g{.filters = std::move(filters), .jobs = options_.jobs};
      it = cache.emplace(n, generate_loops(n, g)).first;
    }
    return it->second;
  }

  PapercheckOptions options_;
  std::map<std::size_t, Catalog> all_, automorphic_;
};

std::size_t exhaustive_max(const PapercheckOptions& o) { return std::min<std::size_t>(o.max_order, 6); }
std::size_t audit_max(const PapercheckOptions& o) { return std::min<std::size_t>(o.max_order, 7); }

std::string fmt(const std::vector<Element>& w) { return format_tuple(w); }

// 1: the printed half-isomorphism example.
std::pair<bool, std::string> printed_half_iso(Context&) {
  const auto star = example21_star(), dot = example21_dot();
  std::vector<Element> id(7);
  for (Element i = 0; i < 7; ++i) id[i] = i;
  std::string detail;
  bool ok = is_half_isomorphism(star, dot, id).holds;
  const HalfIso f{star, dot, id};
  const auto c = classify(f);
  ok = ok && !c.trivial && !c.is_special;
  // f(3*2) = 4 = f(3)f(2) != f(2)f(3); f(3*6) = 1 = f(6)f(3) != f(3)f(6).
  ok = ok && star.mul(2, 1) == 3 && dot.mul(2, 1) == 3 && dot.mul(1, 2) != 3;
  ok = ok && star.mul(2, 5) == 0 && dot.mul(5, 2) == 0 && dot.mul(2, 5) != 0;
  const auto back = is_half_isomorphism(dot, star, id);
  // f^-1(2.3) = 7, while f^-1(2)*f^-1(3) = f^-1(3)*f^-1(2) = 4.
  ok = ok && !back.holds && dot.mul(1, 2) == 6 && star.mul(1, 2) == 3 && star.mul(2, 1) == 3;
  const bool gg = is_gg_triple(f, 2, 1, 5) &&
                  std::find(c.gg_triples.begin(), c.gg_triples.end(), Triple{2, 1, 5}) !=
                      c.gg_triples.end();
  ok = ok && gg;
  detail = std::string(c.trivial ? "trivial" : "nontrivial") +
           (c.is_special ? ", special" : ", non-special") +
           "; inverse map fails at " + fmt(back.witness) + "; GG-triples " +
           std::to_string(c.gg_triple_count) + (gg ? " incl. (3,2,6)" : " without (3,2,6)");
  return {ok, detail};
}

// 2: x(xy)=(yx)x <=> x^2 y = y x^2 on automorphic loops.
std::pair<bool, std::string> theorem31(Context& ctx) {
  std::size_t loops = 0;
  for (const auto& q : ctx.automorphic_up_to(exhaustive_max(ctx.options()))) {
    ++loops;
    if (auto v = check_theorem31(q, true); !v)
      return {false, q.name() + " fails at " + fmt(v.verdict.witness)};
  }
  return {true, std::to_string(loops) + " automorphic loops, 0 violations"};
}

// 3: uniquely 2-divisible automorphic loops satisfy co1; odd order agrees.
std::pair<bool, std::string> odd_order_co1(Context& ctx) {
  std::size_t divisible = 0, loops = 0;
  for (const auto& q : ctx.automorphic_up_to(exhaustive_max(ctx.options()))) {
    ++loops;
    const bool u2d = is_uniquely_2_divisible(q).holds;
    if (u2d != (q.order() % 2 == 1))
      return {false, q.name() + ": unique 2-divisibility disagrees with odd order"};
    if (!u2d) continue;
    ++divisible;
    if (auto co1 = satisfies_co1(q); !co1)
      return {false, q.name() + " fails co1 at " + fmt(co1.verdict.witness)};
  }
  return {true, std::to_string(divisible) + " of " + std::to_string(loops) +
                    " automorphic loops uniquely 2-divisible, all satisfy co1"};
}

bool in_corpus_scope(const std::string& name) {
  static const char* const kPrefixes[] = {"lemma31_", "lemma34_", "prop30",   "aaip",
                                          "flexibility", "tx_inv", "prop22_", "theorem31_"};
  return std::any_of(std::begin(kPrefixes), std::end(kPrefixes),
                     [&](const char* p) { return name.starts_with(p); });
}

// 4: identity corpus.
std::pair<bool, std::string> corpus(Context& ctx) {
  const auto& lib = builtin_library();
  std::size_t statements = 0, checks = 0;
  for (const auto& s : lib.statements) statements += in_corpus_scope(s.name);
  for (const auto& q : ctx.automorphic_up_to(exhaustive_max(ctx.options())))
    for (const auto& s : lib.statements) {
      if (!in_corpus_scope(s.name)) continue;
      ++checks;
      const auto r = evaluate(q, s, lib.macros, {.automorphic = true});
      if (!r) return {false, s.name + " fails on " + q.name() + " at " + fmt(r.counterexample)};
    }
  return {true, std::to_string(statements) + " statements, " + std::to_string(checks) +
                    " loop checks, 0 counterexamples"};
}

std::vector<Pair> odd_audit_pairs(Context& ctx) {
  std::vector<Pair> pairs;
  for (std::size_t n = 1; n <= audit_max(ctx.options()); n += 2) {
    const auto& cat = ctx.automorphic(n);
    for (const auto& a : cat.entries)
      for (const auto& b : cat.entries) pairs.push_back({a.loop, b.loop});
  }
  return pairs;
}

// 5: every half-isomorphism between odd-order automorphic loops is trivial.
std::pair<bool, std::string> triviality(Context& ctx) {
  std::size_t maps = 0, pairs = 0;
  for (const auto& p : odd_audit_pairs(ctx)) {
    ++pairs;
    const auto audit = audit_theorem41(p.source, p.target);
    if (!audit.hypotheses_met)
      return {false, p.source.name() + " -> " + p.target.name() + ": hypotheses not met"};
    if (audit.violations) {
      for (const auto& f : audit.report.findings)
        if (f.status == FindingStatus::violation)
          return {false, f.kind + " on " + p.source.name() + " -> " + p.target.name()};
    }
    maps += audit.maps_checked;
  }
  return {true, std::to_string(pairs) + " pairs, " + std::to_string(maps) +
                    " half-isomorphisms, all trivial, special, semi-homomorphic, no GG-triples"};
}

std::vector<Pair> small_catalog_pairs(Context& ctx) {
  std::vector<Pair> pairs;
  for (std::size_t n = 1; n <= std::min<std::size_t>(ctx.options().max_order, 5); ++n) {
    const auto& cat = ctx.all(n);
    for (const auto& a : cat.entries)
      for (const auto& b : cat.entries) pairs.push_back({a.loop, b.loop});
  }
  pairs.push_back({example21_star(), example21_dot()});
  return pairs;
}

std::vector<Pair> conjecture_pairs(Context& ctx) {
  std::vector<Pair> pairs;
  for (std::size_t n = 1; n <= exhaustive_max(ctx.options()); ++n) {
    const auto& cat = ctx.automorphic(n);
    for (const auto& a : cat.entries)
      for (const auto& b : cat.entries) pairs.push_back({a.loop, b.loop});
  }
  return pairs;
}

// Every pair whose half-isomorphisms are enumerated by criteria 5, 8, 10.
std::vector<Pair> suite_pairs(Context& ctx) {
  std::vector<Pair> out;
  std::set<std::pair<std::vector<Element>, std::vector<Element>>> seen;
  for (auto&& group : {odd_audit_pairs(ctx), small_catalog_pairs(ctx), conjecture_pairs(ctx)})
    for (const auto& p : group)
      if (seen.emplace(p.source.cells(), p.target.cells()).second) out.push_back(p);
  return out;
}

// 6: the three speciality criteria agree.
std::pair<bool, std::string> speciality_criteria(Context& ctx) {
  std::size_t maps = 0, special = 0;
  for (const auto& p : suite_pairs(ctx)) {
    for (const auto& m : enumerate_half_isos(p.source, p.target).maps) {
      ++maps;
      const HalfIso f{p.source, p.target, m};
      const bool a = special_by_inverse(f), b = special_by_image_sets(f),
                 c = special_by_commuting(f).holds;
      if (a != b || b != c)
        return {false, "criteria disagree on a map " + p.source.name() + " -> " + p.target.name()};
      special += a;
    }
  }
  return {true, std::to_string(maps) + " half-isomorphisms, " + std::to_string(special) +
                    " special, 0 disagreements"};
}

// 7: powers are preserved between power-associative loops.
std::pair<bool, std::string> powers(Context& ctx) {
  std::size_t maps = 0;
  for (const auto& p : suite_pairs(ctx)) {
    if (!is_power_associative(p.source) || !is_power_associative(p.target)) continue;
    for (const auto& m : enumerate_half_isos(p.source, p.target).maps) {
      ++maps;
      if (auto v = preserves_powers({p.source, p.target, m}); !v)
        return {false, p.source.name() + " -> " + p.target.name() + ": " + v.detail};
    }
  }
  return {true, std::to_string(maps) + " half-isomorphisms, f(x^n) = f(x)^n throughout"};
}

// 8: pruned and naive enumeration agree.
std::pair<bool, std::string> pruned_vs_naive(Context& ctx) {
  std::size_t pairs = 0, maps = 0;
  for (const auto& p : small_catalog_pairs(ctx)) {
    ++pairs;
    const auto pruned = enumerate_half_isos(p.source, p.target, EnumerationMode::pruned).maps;
    const auto naive = enumerate_half_isos(p.source, p.target, EnumerationMode::naive).maps;
    std::vector<std::vector<Element>> brute;
    for (const auto& m : oracle::half_isomorphisms(oracle::raw(p.source), oracle::raw(p.target)))
      brute.emplace_back(m.begin(), m.end());
    if (pruned != naive || naive != brute)
      return {false, p.source.name() + " -> " + p.target.name() + ": " +
                         std::to_string(pruned.size()) + " pruned vs " +
                         std::to_string(naive.size()) + " naive vs " +
                         std::to_string(brute.size()) + " brute force"};
    maps += pruned.size();
  }
  return {true, std::to_string(pairs) + " pairs, " + std::to_string(maps) + " maps, pruned = naive = brute force"};
}

// 9: generator counts against the oracle; canonical form sanity.
std::pair<bool, std::string> generator(Context& ctx) {
  std::string counts;
  for (int n = 1; n <= static_cast<int>(std::min<std::size_t>(ctx.options().max_order, 5)); ++n) {
    const auto got = ctx.all(static_cast<std::size_t>(n)).size();
    const auto want = oracle::count_loop_classes(n);
    counts += (counts.empty() ? "" : ",") + std::to_string(got);
    if (got != want)
      return {false, "order " + std::to_string(n) + ": " + std::to_string(got) +
                         " generated vs " + std::to_string(want) + " by oracle"};
  }
  std::mt19937_64 rng(ctx.options().seed);
  std::size_t loops = 0;
  for (std::size_t n = 1; n <= exhaustive_max(ctx.options()); ++n)
    for (const auto& e : ctx.all(n).entries) {
      ++loops;
      const auto canon = canonical_form(e.loop);
      if (!(canonical_form(canon) == canon)) return {false, e.name + ": not idempotent"};
      std::vector<Element> images(n);
      for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Element>(i);
      std::shuffle(images.begin(), images.end(), rng);
      if (!(canonical_form(relabel(e.loop, Permutation(images))) == canon))
        return {false, e.name + ": canonical form changes under relabeling"};
    }
  return {true, "counts " + counts + " match oracle; " + std::to_string(loops) +
                    " loops idempotent and relabeling-invariant"};
}

// 10: no non-special half-isomorphism between automorphic loops.
std::pair<bool, std::string> conjecture(Context& ctx) {
  const auto loops = ctx.automorphic_up_to(exhaustive_max(ctx.options()));
  const auto scan = scan_conjecture51(loops);
  const auto found = static_cast<std::size_t>(
      std::count_if(scan.report.findings.begin(), scan.report.findings.end(), [](const Finding& f) {
        return f.status == FindingStatus::violation && f.kind != "conjecture51.summary";
      }));
  std::string detail = std::to_string(scan.pairs) + " pairs, " + std::to_string(scan.maps) +
                       " half-isomorphisms, " + std::to_string(found) + " non-special";
  if (scan.confirmed_non_special)
    detail += "; CONFIRMED by naive re-check: " + std::to_string(scan.confirmed_non_special);
  return {found == 0, detail};
}

struct Criterion {
  int id;
  const char* title;
  double budget;
  std::pair<bool, std::string> (*run)(Context&);
};

constexpr Criterion kCriteria[] = {
    {1, "half-isomorphism example", 1, printed_half_iso},
    {2, "x(xy)=(yx)x <=> x^2y=yx^2 on automorphic loops", 60, theorem31},
    {3, "uniquely 2-divisible automorphic loops satisfy co1", 60, odd_order_co1},
    {4, "identity corpus on automorphic loops", 120, corpus},
    {5, "half-isomorphisms of odd automorphic loops are trivial", 300, triviality},
    {6, "speciality criteria agree", 120, speciality_criteria},
    {7, "half-isomorphisms preserve powers", 60, powers},
    {8, "pruned and naive enumeration agree", 120, pruned_vs_naive},
    {9, "generator counts and canonical form", 120, generator},
    {10, "half-isomorphisms of automorphic loops are special", 600, conjecture},
};

}  // namespace

std::vector<CriterionResult> run_papercheck(
    const PapercheckOptions& options, const std::function<void(const CriterionResult&)>& on_result) {
  Context ctx(options);
  std::vector<CriterionResult> results;
  for (const auto& c : kCriteria) {
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), c.id) == options.only.end())
      continue;
    CriterionResult r{.id = c.id, .title = c.title, .budget = c.budget};
    const auto start = std::chrono::steady_clock::now();
    try {
      auto [ok, detail] = c.run(ctx);
      r.passed = ok;
      r.detail = std::move(detail);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.seconds > r.budget) {
      r.passed = false;
      r.detail += "; over time budget";
    }
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace loops
