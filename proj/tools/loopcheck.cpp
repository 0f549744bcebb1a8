// loopcheck: command-line front end for the loops library.
//
// Exit codes: 0 success / everything holds, 1 findings (violation or
// counterexample), 2 usage or I/O error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "loops/catalog.hpp"
#include "loops/groups.hpp"
#include "loops/halfiso.hpp"
#include "loops/identity.hpp"
#include "loops/papercheck.hpp"
#include "loops/report.hpp"
#include "loops/structure.hpp"

using namespace loops;

namespace {

constexpr int kOk = 0, kFindings = 1, kUsage = 2;

struct Globals {
  std::string format = "text";
  std::uint64_t seed = 0;
  std::size_t jobs = 1;

  ReportFormat report_format() const {
    return format == "json-lines" ? ReportFormat::json_lines : ReportFormat::text;
  }
};

Finding predicate(const std::string& kind, const LoopTable& loop, const Verdict& v) {
  Finding f{.kind = kind, .status = FindingStatus::info, .loops = {loop.name()},
            .witness = v.witness, .detail = v.detail};
  f.data["value"] = v.holds;
  return f;
}

int finish(const AnalysisReport& report, const Globals& g) {
  render(std::cout, report, g.report_format());
  return report.has_violations() ? kFindings : kOk;
}

int run_analyze(const std::string& spec, const Globals& g) {
  const auto loop = resolve_loop(spec);
  AnalysisReport r;
  Finding order{.kind = "order", .loops = {loop.name()}};
  order.data["value"] = loop.order();
  order.data["identity"] = loop.identity() + 1;
  r.add(std::move(order));

  r.add(predicate("is_commutative", loop, is_commutative(loop)));
  r.add(predicate("is_associative", loop, is_associative(loop)));
  r.add(predicate("is_flexible", loop, is_flexible(loop)));
  r.add(predicate("has_aaip", loop, has_aaip(loop)));
  r.add(predicate("is_power_associative", loop, is_power_associative(loop)));
  r.add(predicate("is_uniquely_2_divisible", loop, is_uniquely_2_divisible(loop)));
  const auto automorphic = is_automorphic(loop);
  r.add(predicate("is_automorphic", loop, automorphic));
  auto co1 = satisfies_co1(loop);
  auto& co1f = r.add(predicate("satisfies_co1", loop, co1.verdict));
  co1f.anchor = "x(xy)=(yx)x <=> xy=yx";
  r.add(predicate("satisfies_co2", loop, satisfies_co2(loop).verdict));

  std::vector<std::size_t> orders;
  for (Element a = 0; a < loop.order(); ++a) orders.push_back(element_order(loop, a));
  Finding ord{.kind = "element_orders", .loops = {loop.name()}};
  ord.data["value"] = orders;
  r.add(std::move(ord));

  for (auto [kind, group] : {std::pair{"inn_size", inn_group(loop)},
                             std::pair{"mlt_size", mlt_group(loop)},
                             std::pair{"aut_size", automorphism_group(loop)}}) {
    Finding f{.kind = kind, .loops = {loop.name()}};
    f.data["value"] = group.size();
    f.data["truncated"] = group.truncated;
    r.add(std::move(f));
  }

  const auto t31 = check_theorem31(loop);
  Finding f{.kind = "theorem31", .loops = {loop.name()}, .witness = t31.verdict.witness,
            .anchor = "automorphic: x(xy)=(yx)x <=> x^2y=yx^2", .detail = t31.verdict.detail};
  if (t31.hypothesis_met)
    f.status = t31.verdict.holds ? FindingStatus::holds : FindingStatus::violation;
  f.data["value"] = t31.verdict.holds;
  f.data["hypothesis_met"] = t31.hypothesis_met;
  r.add(std::move(f));

  if (automorphic) {
    const auto c21 = check_cor21(loop, 200, g.seed);
    Finding s{.kind = "cor21", .status = c21.verdict.holds ? FindingStatus::holds
                                                           : FindingStatus::violation,
              .loops = {loop.name()}, .witness = c21.verdict.witness,
              .anchor = "commuting/associating subsets generate commutative/associative subloops",
              .detail = c21.verdict.detail};
    s.data["seed"] = g.seed;
    r.add(std::move(s));
  }
  return finish(r, g);
}

std::vector<Element> parse_map(const std::string& text, std::size_t n) {
  std::vector<Element> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const int v = std::stoi(item);
    if (v < 1 || static_cast<std::size_t>(v) > n)
      throw std::invalid_argument("map entry " + item + " out of range");
    out.push_back(static_cast<Element>(v - 1));
  }
  if (out.size() != n) throw std::invalid_argument("map needs " + std::to_string(n) + " entries");
  return out;
}

nlohmann::json one_based(const std::vector<Element>& v) {
  auto j = nlohmann::json::array();
  for (Element e : v) j.push_back(e + 1);
  return j;
}

struct HalfisoArgs {
  std::string a, b, map;
  bool enumerate = false, classify = false, audit = false;
  std::string mode = "pruned";
  std::size_t gg_cap = 10;
};

int run_halfiso(const HalfisoArgs& args, const Globals& g) {
  const auto a = resolve_loop(args.a), b = resolve_loop(args.b);
  const auto mode = args.mode == "naive" ? EnumerationMode::naive : EnumerationMode::pruned;
  const std::vector<std::string> names{a.name(), b.name()};
  AnalysisReport r;

  if (args.audit) {
    auto audit = audit_theorem41(a, b, {.mode = mode, .gg_cap = args.gg_cap});
    return finish(audit.report, g);
  }

  if (args.enumerate) {
    std::size_t count = 0;
    auto result = for_each_half_iso(a, b, mode, [&](std::span<const Element> m) {
      ++count;
      const std::vector<Element> map(m.begin(), m.end());
      const auto c = classify(HalfIso{a, b, map}, {.gg_cap = args.gg_cap});
      Finding f{.kind = "halfiso.map", .loops = names};
      f.data["map"] = one_based(map);
      f.data["isomorphism"] = c.is_isomorphism;
      f.data["anti_isomorphism"] = c.is_anti_isomorphism;
      f.data["special"] = c.is_special;
      f.data["gg_triples"] = c.gg_triple_count;
      r.add(std::move(f));
      return true;
    });
    Finding s{.kind = "halfiso.count", .loops = names};
    s.data["value"] = count;
    s.data["mode"] = to_string(mode);
    s.data["power_rules"] = result.power_rules;
    s.data["warnings"] = result.warnings;
    r.add(std::move(s));
    return finish(r, g);
  }

  std::vector<Element> map;
  if (args.map.empty()) {
    for (Element i = 0; i < a.order(); ++i) map.push_back(i);
  } else {
    map = parse_map(args.map, a.order());
  }
  if (a.order() != b.order()) throw std::invalid_argument("loops have different orders");
  const auto check = is_half_isomorphism(a, b, map);
  Finding f{.kind = "halfiso.check",
            .status = check.holds ? FindingStatus::holds : FindingStatus::violation,
            .loops = names, .witness = check.witness,
            .anchor = "f(ab) in {f(a)f(b), f(b)f(a)}", .detail = check.detail};
  f.data["map"] = one_based(map);
  r.add(std::move(f));
  if (check.holds) {
    const HalfIso h{a, b, map};
    const auto c = classify(h, {.gg_cap = args.gg_cap, .audit = true});
    Finding k{.kind = "halfiso.classification", .loops = names};
    k.detail = std::string(c.trivial ? "trivial" : "nontrivial") +
               (c.is_special ? ", special" : ", non-special");
    k.data["isomorphism"] = c.is_isomorphism;
    k.data["anti_isomorphism"] = c.is_anti_isomorphism;
    k.data["special"] = c.is_special;
    k.data["special_by_inverse"] = *c.special_by_inverse;
    k.data["special_by_image_sets"] = *c.special_by_image_sets;
    k.data["isomorphism_witness"] = one_based(c.isomorphism_witness.witness);
    k.data["anti_isomorphism_witness"] = one_based(c.anti_isomorphism_witness.witness);
    k.data["speciality_witness"] = one_based(c.speciality_witness.witness);
    k.data["gg_triple_count"] = c.gg_triple_count;
    r.add(std::move(k));
    for (const auto& t : c.gg_triples)
      r.add({.kind = "halfiso.gg_triple", .loops = names, .witness = {t[0], t[1], t[2]},
             .anchor = "f(xy)=f(x)f(y)!=f(y)f(x), f(xz)=f(z)f(x)!=f(x)f(z)"});
  }
  return finish(r, g);
}

IdentityFile load_identities(const std::string& spec) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) {
    std::ifstream in(spec);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_identity_file(text.str());
  }
  const auto& lib = builtin_library();
  IdentityFile file{lib.macros, {}};
  if (spec == "all") {
    file.statements = lib.statements;
    return file;
  }
  std::string name;
  std::istringstream in(spec);
  while (std::getline(in, name, ',')) {
    bool any = false;
    // A name ending in '*' selects every statement with that prefix.
    const bool prefix = !name.empty() && name.back() == '*';
    const std::string stem = prefix ? name.substr(0, name.size() - 1) : name;
    for (const auto& s : lib.statements)
      if (prefix ? s.name.starts_with(stem) : s.name == stem) {
        file.statements.push_back(s);
        any = true;
      }
    if (!any) throw std::invalid_argument("unknown identity '" + name + "'");
  }
  return file;
}

int run_identity_check(const std::string& ids, const std::string& spec, const Globals& g) {
  const auto loop = resolve_loop(spec);
  const auto file = load_identities(ids);
  const bool automorphic = is_automorphic(loop).holds;
  AnalysisReport r;
  for (const auto& s : file.statements) {
    const auto result = evaluate(loop, s, file.macros, {.automorphic = automorphic});
    Finding f{.kind = "identity",
              .status = result.holds ? FindingStatus::holds : FindingStatus::violation,
              .loops = {loop.name()}, .witness = result.counterexample,
              .anchor = print_identity(s)};
    f.detail = s.name.empty() ? std::string("statement") : s.name;
    f.data["variables"] = s.variables;
    if (!result.warnings.empty()) f.data["warnings"] = result.warnings;
    r.add(std::move(f));
  }
  return finish(r, g);
}

struct GenerateArgs {
  std::size_t order = 0;
  std::vector<std::string> filters;
  std::string out;
};

int run_generate(const GenerateArgs& args, const Globals& g) {
  GenerateOptions options{.jobs = g.jobs};
  for (const auto& name : args.filters) {
    auto f = parse_filter(name);
    if (!f) throw CLI::ValidationError("--filter", "unknown filter " + name);
    options.filters.push_back(*f);
  }
  const auto catalog = generate_loops(args.order, options);
  for (const auto& w : catalog.warnings) std::cerr << "warning: " << w << '\n';
  if (!args.out.empty()) std::filesystem::create_directories(args.out);
  AnalysisReport r;
  for (const auto& e : catalog.entries) {
    Finding f{.kind = "catalog.entry", .loops = {e.name}};
    f.data["automorphic"] = e.flags.automorphic;
    f.data["commutative"] = e.flags.commutative;
    f.data["associative"] = e.flags.associative;
    f.data["power_associative"] = e.flags.power_associative;
    f.data["flexible"] = e.flags.flexible;
    f.data["co1"] = e.flags.co1;
    r.add(std::move(f));
    if (!args.out.empty()) {
      std::ofstream file(std::filesystem::path(args.out) / (e.name + ".loop"));
      file << write_loop_file(e.loop);
      if (!file) throw std::runtime_error("cannot write to " + args.out);
    }
  }
  Finding count{.kind = "catalog.count"};
  count.data["order"] = args.order;
  count.data["value"] = catalog.size();
  r.add(std::move(count));
  return finish(r, g);
}

int run_papercheck_cmd(std::size_t max_order, const std::vector<int>& only, const Globals& g) {
  bool all = true;
  run_papercheck({.max_order = max_order, .seed = g.seed, .jobs = g.jobs, .only = only},
                 [&](const CriterionResult& c) {
                   all = all && c.passed;
                   if (g.report_format() == ReportFormat::json_lines) {
                     nlohmann::json j{{"criterion", c.id},      {"title", c.title},
                                      {"passed", c.passed},     {"detail", c.detail},
                                      {"seconds", c.seconds},   {"budget", c.budget}};
                     std::cout << j.dump() << std::endl;
                   } else {
                     std::cout << (c.passed ? "PASS" : "FAIL") << "  " << std::setw(2) << c.id
                               << "  " << c.title << " (" << std::fixed << std::setprecision(2)
                               << c.seconds << "s / " << std::setprecision(0) << c.budget
                               << "s): " << c.detail << std::endl;
                   }
                 });
  return all ? kOk : kFindings;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite loops: predicates, half-isomorphisms, identities, catalogs"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Report format")
      ->check(CLI::IsMember({"text", "json-lines"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for sampled checks")->capture_default_str();
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();

  std::string analyze_loop;
  auto* analyze = app.add_subcommand("analyze", "All predicates and group sizes of one loop");
  analyze->add_option("loop", analyze_loop, "File, builtin name, C<n>, loop<n>.<k> or AxB")
      ->required();

  HalfisoArgs hargs;
  auto* halfiso = app.add_subcommand("halfiso", "Check, classify, enumerate or audit half-isomorphisms");
  halfiso->add_option("source", hargs.a)->required();
  halfiso->add_option("target", hargs.b)->required();
  auto* en = halfiso->add_flag("--enumerate", hargs.enumerate, "List every half-isomorphism");
  auto* cl = halfiso->add_flag("--classify", hargs.classify, "Classify one map (default)");
  auto* au = halfiso->add_flag("--audit", hargs.audit, "Run the triviality audit on every map");
  en->excludes(cl)->excludes(au);
  cl->excludes(au);
  halfiso->add_option("--map", hargs.map, "Images of 1..n, comma separated (default identity)");
  halfiso->add_option("--mode", hargs.mode, "Enumeration mode")
      ->check(CLI::IsMember({"pruned", "naive"}))
      ->capture_default_str();
  halfiso->add_option("--gg-cap", hargs.gg_cap, "GG-triples listed per map")->capture_default_str();

  auto* identity = app.add_subcommand("identity", "Evaluate identities");
  identity->require_subcommand(1);
  std::string ids, id_loop;
  auto* check = identity->add_subcommand("check", "Evaluate identities on a loop");
  check->add_option("ids", ids, "Identity file, builtin names (comma separated, prefix*), or all")
      ->required();
  check->add_option("loop", id_loop)->required();
  auto* builtins = identity->add_subcommand("builtins", "Print the builtin identity corpus");

  GenerateArgs gargs;
  auto* generate = app.add_subcommand("generate", "Loops of one order up to isomorphism");
  generate->add_option("--order", gargs.order)->required()->check(CLI::Range(1, 7));
  generate->add_option("--filter", gargs.filters,
                       "automorphic, commutative, odd-order, co1, power-associative");
  generate->add_option("--out", gargs.out, "Directory for one .loop file per entry");

  std::size_t max_order = 7;
  std::vector<int> only;
  auto* papercheck = app.add_subcommand("papercheck", "Run the acceptance criteria");
  papercheck->add_option("--max-order", max_order)->check(CLI::Range(1, 7))->capture_default_str();
  papercheck->add_option("--only", only, "Criterion ids")->check(CLI::Range(1, 10));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze) return run_analyze(analyze_loop, g);
    if (*halfiso) return run_halfiso(hargs, g);
    if (*builtins) {
      std::cout << builtin_library_source();
      return kOk;
    }
    if (*check) return run_identity_check(ids, id_loop, g);
    if (*generate) return run_generate(gargs, g);
    if (*papercheck) return run_papercheck_cmd(max_order, only, g);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
