#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "scottrep/normalize.hpp"
#include "scottrep/rng.hpp"
#include "scottrep/term.hpp"

namespace scottrep {

// Term patterns over the four constructors plus metavariables.
class Pattern {
 public:
  enum class Kind { Meta, AnyVar, BoundVar, App, Abs, Subst, Lifted };

  // Any term; repeated names must match structurally equal terms.
  static Pattern meta(std::string name);
  // Any variable, bound under `name`.
  static Pattern any_var(std::string name);
  // The variable x_{s - depth} at the current scope s; depth 0 is the
  // variable of the nearest enclosing binder.
  static Pattern bound_var(std::size_t depth = 0);
  static Pattern app(Pattern fun, Pattern arg);
  static Pattern abs(Pattern body);
  // A substitution whose argument tuple is bound under `args`.
  static Pattern subst(Pattern subject, std::string args);
  // A term at scope s + 1 that is a weakening of a term at scope s, either
  // as an explicit identity-prefix Subst or structurally.
  static Pattern lifted(Pattern inner);

  Kind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  std::size_t depth() const noexcept { return depth_; }
  const std::vector<Pattern>& kids() const noexcept { return kids_; }

 private:
  Pattern(Kind kind, std::string name, std::size_t depth, std::vector<Pattern> kids)
      : kind_(kind), name_(std::move(name)), depth_(depth), kids_(std::move(kids)) {}

  Kind kind_;
  std::string name_;
  std::size_t depth_ = 0;
  std::vector<Pattern> kids_;
};

struct Bindings {
  std::map<std::string, Term> terms;
  std::map<std::string, std::vector<Term>> tuples;
  // Target scope of each bound tuple (needed when a tuple is empty).
  std::map<std::string, std::size_t> tuple_scopes;

  const Term& term(const std::string& name) const;
  const std::vector<Term>& tuple(const std::string& name) const;
  std::size_t tuple_scope(const std::string& name) const;
};

bool match(const Pattern& p, const Term& t, Bindings& out);

// Builds a random term fitting the pattern at the given scope, extending the
// bindings; nullopt when the draw does not fit.
std::optional<Term> instantiate(const Pattern& p, std::size_t scope, Rng& rng, Bindings& bindings);

struct RewriteRule {
  using Rewriter = std::function<std::optional<Term>(const Bindings&, const Term& matched)>;

  std::string name;
  Pattern lhs;
  Rewriter rewrite;

  std::optional<Term> apply(const Term& t) const;
};

// The core rules in registration order: tuple_ext, subst_var, subst_app,
// subst_abs, beta.
std::vector<RewriteRule> core_rules();

// Example extension rules for the combinator toolkit.
RewriteRule compose_distribution_rule();
RewriteRule proj1_pair_rule();

struct SelfTestOptions {
  std::size_t instances = 20;
  std::size_t max_draws = 400;
  std::size_t max_scope = 3;
  std::uint64_t seed = 0x5eed;
  std::size_t fuel = kDefaultFuel;
};

struct SelfTestReport {
  std::size_t equal = 0;
  std::size_t unknown = 0;
  std::optional<std::string> counterexample;
  bool accepted() const { return !counterexample && equal > 0; }
};

// Checks the rule's output against beta_eq on random instantiations.
// Instances that do not normalize within the fuel are redrawn.
SelfTestReport self_test(const RewriteRule& rule, const SelfTestOptions& options = {});

class RuleRejected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RuleRegistry {
 public:
  RuleRegistry() = default;

  // The five core rules; shared and immutable.
  static const RuleRegistry& core();

  // Self-tests the rule first; throws RuleRejected on failure.
  void register_rule(RewriteRule rule, const SelfTestOptions& options = {});
  void register_core_rules();

  std::span<const RewriteRule> rules() const noexcept { return rules_; }
  const RewriteRule* find(std::string_view name) const;

 private:
  std::vector<RewriteRule> rules_;
};

struct TraceStep {
  std::string rule;
  Path path;
  Term before;
  Term after;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct Trace {
  Term initial;
  std::vector<TraceStep> steps;
  Term final_term;
};

struct PropagateResult {
  Term term;
  Trace trace;
  bool exhausted = false;
};

// Repeatedly rewrites the outermost-leftmost subterm matched by some rule,
// trying rules in registration order at each node.  One step costs one unit
// of fuel.
PropagateResult propagate_subst(const Term& t, const RuleRegistry& registry, std::size_t fuel = kDefaultFuel);
PropagateResult propagate_subst(const Term& t, std::size_t fuel = kDefaultFuel);

class ReplayError : public std::runtime_error {
 public:
  ReplayError(std::size_t step, const std::string& what)
      : std::runtime_error("step " + std::to_string(step) + ": " + what), step_(step) {}
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

// Re-applies the recorded steps to t.  With a registry, each step is also
// re-derived from its named rule.
Term replay(const Term& t, const Trace& trace);
Term replay(const Term& t, const Trace& trace, const RuleRegistry& registry);
Term replay_steps(const Term& t, std::span<const TraceStep> steps, const RuleRegistry* registry = nullptr);

std::string render_path(std::span<const std::size_t> path);
Path parse_path(std::string_view text);

// One line per step: `rule=<name> path=<i.j.k> lhs=<term @n> rhs=<term @n>`.
std::string emit_script(const Trace& trace);
std::vector<TraceStep> parse_script(std::string_view script);

std::string trace_to_json(const Trace& trace);
Trace trace_from_json(std::string_view json);

}  // namespace scottrep
