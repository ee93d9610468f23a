#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "scottrep/combinators.hpp"
#include "scottrep/free_theory.hpp"
#include "scottrep/karoubi.hpp"
#include "scottrep/lambda_calculus.hpp"
#include "scottrep/law_report.hpp"
#include "scottrep/normalize.hpp"
#include "scottrep/presheaf.hpp"
#include "scottrep/retracts.hpp"
#include "scottrep/rewrite.hpp"
#include "scottrep/syntax.hpp"
#include "scottrep/theory.hpp"

namespace scottrep::cli {
namespace {

using nlohmann::json;

struct Config {
  std::size_t fuel = kDefaultFuel;
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  std::size_t max_scope = 3;
  double unknown_threshold = kDefaultUnknownThreshold;
  bool json = false;

  SampleOptions sample_options() const { return {samples, seed, fuel}; }
  LawCheckOptions law_options() const { return {samples, seed, fuel, max_scope}; }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "lambda", or "free:a,b,..".
std::variant<LambdaCalculus, FreeTheory> parse_theory(const std::string& spec) {
  if (spec == "lambda") return LambdaCalculus(TermGenOptions{.allow_self_application = false});
  if (spec.rfind("free:", 0) == 0 || spec == "free") {
    std::vector<std::string> labels;
    std::stringstream ss(spec.size() > 5 ? spec.substr(5) : "");
    for (std::string item; std::getline(ss, item, ',');) {
      if (!item.empty()) labels.push_back(item);
    }
    return FreeTheory(std::move(labels));
  }
  throw UsageError("unknown theory '" + spec + "' (expected lambda or free:a,b,..)");
}

FinCategory load_category(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return FinCategory::from_json(text);
}

int emit(const LawReport& report, const Config& cfg, std::ostream& out) {
  out << (cfg.json ? report.to_json(cfg.unknown_threshold) : report.to_text(cfg.unknown_threshold));
  if (cfg.json) out << '\n';
  return exit_code(report.verdict(cfg.unknown_threshold));
}

LawReport rule_self_tests(const Config& cfg) {
  LawReport report;
  SelfTestOptions opt;
  opt.seed = cfg.seed;
  opt.fuel = cfg.fuel;
  opt.max_scope = cfg.max_scope;
  for (const RewriteRule& rule : core_rules()) {
    const SelfTestReport r = self_test(rule, opt);
    LawTally& t = report.law(rule.name);
    t.pass = r.equal;
    t.unknown = r.unknown;
    if (r.counterexample) {
      t.fail = 1;
      t.counterexample = r.counterexample;
    } else if (r.equal == 0) {
      t.fail = 1;
      t.counterexample = "no instance could be drawn";
    }
  }
  return report;
}

LawReport karoubi_suite(const Config& cfg, const std::optional<std::string>& category_file) {
  LawReport report;
  report.suite = "karoubi";
  if (category_file) {
    const FinCategory c = load_category(*category_file);
    const LawReport base = c.check_laws();
    if (base.failures() > 0) {
      report.append(base, "base.");
      return report;
    }
    report.append(karoubi_check(c, *category_file));
    return report;
  }
  report.append(karoubi_check(monoid_category(matrix_monoid()), "matrix"), "matrix.");
  report.append(karoubi_check(three_object_fixture(), "fixture"), "fixture.");
  report.append(matrix_example_check(), "example.");
  report.append(monoid_iso_check(cfg.sample_options()), "L0_L1.");
  return report;
}

LawReport laws_suite(const std::string& suite, const Config& cfg, const std::optional<std::string>& theory,
                     const std::optional<std::string>& category_file) {
  LawReport report;
  report.suite = suite;
  if (suite == "theory") {
    auto th = parse_theory(theory.value_or("free:a,b"));
    if (auto* free = std::get_if<FreeTheory>(&th)) {
      report.append(check_theory_laws_exhaustive(*free, cfg.max_scope, cfg.fuel));
    } else {
      report.append(check_theory_laws(std::get<LambdaCalculus>(th), cfg.law_options()));
    }
  } else if (suite == "lambda") {
    const LambdaCalculus lc(TermGenOptions{.allow_self_application = false});
    report.append(check_theory_laws(lc, cfg.law_options()));
    report.append(rule_self_tests(cfg), "rule.");
  } else if (suite == "combinators") {
    report.append(combinator_laws(cfg.sample_options()));
  } else if (suite == "retracts") {
    const RetractCategory cat({cfg.fuel, UnknownPolicy::Warn});
    report.append(retract_ccc_check(cfg.sample_options()), "ccc.");
    report.append(u_reflexive_check(cfg.fuel), "U.");
    report.append(check_theory_laws(scott_theory(cat), cfg.law_options()), "E(U).");
    report.append(r_as_karoubi_check(cfg.sample_options()), "karoubi.");
  } else if (suite == "presheaf") {
    auto th = parse_theory(theory.value_or("lambda"));
    if (auto* free = std::get_if<FreeTheory>(&th)) {
      report.append(presheaf_laws_exhaustive(*free, cfg.max_scope));
    } else {
      report.append(presheaf_laws(cfg.sample_options(), cfg.max_scope));
    }
  } else if (suite == "karoubi") {
    report.append(karoubi_suite(cfg, category_file));
  } else {
    throw UsageError("unknown suite '" + suite + "'");
  }
  return report;
}

int cmd_normalize(const std::string& text, std::optional<std::size_t> scope, bool trace, const Config& cfg,
                  std::ostream& out) {
  const Term input = text.find('@') != std::string::npos ? parse_scoped(text) : parse_term(text, scope.value_or(0));
  const PropagateResult r = propagate_subst(input, cfg.fuel);
  if (cfg.json) {
    json j{{"input", render_scoped(input)},
           {"result", render(r.term)},
           {"scope", r.term.scope()},
           {"steps", r.trace.steps.size()},
           {"exhausted", r.exhausted}};
    if (trace) j["trace"] = json::parse(trace_to_json(r.trace));
    out << j.dump(2) << '\n';
  } else {
    if (trace) out << emit_script(r.trace) << "steps: " << r.trace.steps.size() << '\n';
    out << render(r.term) << '\n';
    if (r.exhausted) out << "fuel exhausted after " << r.trace.steps.size() << " steps\n";
  }
  return r.exhausted ? kExitInconclusive : kExitPass;
}

int cmd_combinator(const std::string& name, const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto term = lookup_combinator(name);
  if (!term) {
    err << "unknown combinator '" << name << "'; known:";
    for (const auto& n : combinator_names()) err << ' ' << n;
    err << '\n';
    return kExitUsage;
  }
  const NormalizeResult nf = normalize(*term, cfg.fuel);
  const auto* done = std::get_if<NormalForm>(&nf);
  if (cfg.json) {
    json j{{"name", name}, {"term", render_scoped(*term)}};
    j["normal_form"] = done ? json(render(done->term)) : json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    out << name << " = " << render_scoped(*term) << '\n';
    out << "nf: " << (done ? render(done->term) : std::string("<fuel exhausted>")) << '\n';
  }
  return done ? kExitPass : kExitInconclusive;
}

int cmd_karoubi(const std::optional<std::string>& file, bool envelope, const Config& cfg, std::ostream& out) {
  const FinCategory c = file ? load_category(*file) : monoid_category(matrix_monoid());
  const std::string name = file ? *file : "matrix monoid";
  const LawReport base = c.check_laws();
  if (base.failures() > 0) return emit(base, cfg, out);
  LawReport report = karoubi_check(c, name);
  if (!cfg.json) {
    const KaroubiEnvelope k = set_karoubi(c);
    out << "envelope of " << name << ": " << k.category.object_count() << " objects, " << k.category.arrow_count()
        << " arrows\n";
    for (std::size_t x = 0; x < k.category.object_count(); ++x) {
      out << "  " << k.category.object_name(x) << ": " << k.category.hom(x, x).size() << " endomorphisms, "
          << endo_iso_count(k.category, x) << " invertible\n";
    }
    if (envelope) out << k.category.to_json() << '\n';
  } else if (envelope) {
    json j = json::parse(report.to_json(cfg.unknown_threshold));
    j["envelope"] = json::parse(set_karoubi(c).category.to_json());
    out << j.dump(2) << '\n';
    return exit_code(report.verdict(cfg.unknown_threshold));
  }
  return emit(report, cfg, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Scott representation toolkit: terms, rewriting, law suites and Karoubi envelopes", "scottrep"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--fuel", cfg.fuel, "normalization fuel per check")->check(CLI::PositiveNumber);
  app.add_option("--samples", cfg.samples, "samples per law")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--max-scope", cfg.max_scope, "largest scope n used by the law suites")->check(CLI::PositiveNumber);
  app.add_option("--unknown-threshold", cfg.unknown_threshold, "tolerated Unknown rate per law")
      ->check(CLI::Range(0.0, 1.0));
  app.add_flag("--json", cfg.json, "machine-readable output");

  std::string term_text;
  std::optional<std::size_t> scope;
  bool trace = false;
  auto* normalize_cmd = app.add_subcommand("normalize", "propagate substitutions and beta-normalize a term");
  normalize_cmd->add_option("term", term_text, "term text, optionally suffixed with @n")->required();
  normalize_cmd->add_option("--scope", scope, "scope when the term has no @n suffix");
  normalize_cmd->add_flag("--trace", trace, "print the rewrite steps");

  std::string suite;
  std::optional<std::string> theory;
  std::optional<std::string> category_file;
  auto* laws_cmd = app.add_subcommand("laws", "run a law suite");
  laws_cmd->add_option("suite", suite, "theory, lambda, combinators, retracts, presheaf or karoubi")
      ->required()
      ->check(CLI::IsMember({"theory", "lambda", "combinators", "retracts", "presheaf", "karoubi"}));
  laws_cmd->add_option("--theory", theory, "lambda or free:a,b,.. (default free:a,b for theory, lambda for presheaf)");
  laws_cmd->add_option("--category", category_file, "finite category JSON for the karoubi suite");

  std::string variant;
  std::size_t n = 1;
  auto* srt_cmd = app.add_subcommand("srt", "representation round-trips at scope n");
  srt_cmd->add_option("variant", variant, "scott or hyland")->required()->check(CLI::IsMember({"scott", "hyland"}));
  srt_cmd->add_option("-n", n, "scope");

  std::string combinator;
  auto* comb_cmd = app.add_subcommand("combinator", "show a named combinator and its normal form");
  comb_cmd->add_option("name", combinator, "combinator name")->required();

  bool envelope = false;
  std::optional<std::string> karoubi_file;
  auto* karoubi_cmd = app.add_subcommand("karoubi", "build and check the Karoubi envelope of a finite category");
  karoubi_cmd->add_option("--category", karoubi_file, "category JSON (default: the matrix monoid)");
  karoubi_cmd->add_flag("--envelope", envelope, "print the envelope as JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (normalize_cmd->parsed()) return cmd_normalize(term_text, scope, trace, cfg, out);
    if (laws_cmd->parsed()) return emit(laws_suite(suite, cfg, theory, category_file), cfg, out);
    if (srt_cmd->parsed()) {
      const LawReport r = variant == "scott" ? scott_roundtrip(n, cfg.sample_options())
                                             : hyland_roundtrip(n, cfg.sample_options());
      return emit(r, cfg, out);
    }
    if (comb_cmd->parsed()) return cmd_combinator(combinator, cfg, out, err);
    if (karoubi_cmd->parsed()) return cmd_karoubi(karoubi_file, envelope, cfg, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const TermError& e) {
    err << "term error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const CategoryError& e) {
    err << "category error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "invalid JSON: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace scottrep::cli
