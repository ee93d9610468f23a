#include "scottrep/rewrite.hpp"

#include <charconv>
#include <sstream>

#include <json.hpp>

#include "scottrep/generate.hpp"
#include "scottrep/syntax.hpp"

namespace scottrep {

Pattern Pattern::meta(std::string name) { return Pattern(Kind::Meta, std::move(name), 0, {}); }
Pattern Pattern::any_var(std::string name) { return Pattern(Kind::AnyVar, std::move(name), 0, {}); }
Pattern Pattern::bound_var(std::size_t depth) { return Pattern(Kind::BoundVar, "", depth, {}); }
Pattern Pattern::app(Pattern fun, Pattern arg) {
  return Pattern(Kind::App, "", 0, {std::move(fun), std::move(arg)});
}
Pattern Pattern::abs(Pattern body) { return Pattern(Kind::Abs, "", 0, {std::move(body)}); }
Pattern Pattern::subst(Pattern subject, std::string args) {
  return Pattern(Kind::Subst, std::move(args), 0, {std::move(subject)});
}
Pattern Pattern::lifted(Pattern inner) { return Pattern(Kind::Lifted, "", 0, {std::move(inner)}); }

const Term& Bindings::term(const std::string& name) const {
  auto it = terms.find(name);
  if (it == terms.end()) throw std::out_of_range("unbound metavariable " + name);
  return it->second;
}

const std::vector<Term>& Bindings::tuple(const std::string& name) const {
  auto it = tuples.find(name);
  if (it == tuples.end()) throw std::out_of_range("unbound tuple " + name);
  return it->second;
}

std::size_t Bindings::tuple_scope(const std::string& name) const {
  auto it = tuple_scopes.find(name);
  if (it == tuple_scopes.end()) throw std::out_of_range("unbound tuple " + name);
  return it->second;
}

namespace {

bool bind_term(Bindings& b, const std::string& name, const Term& t) {
  auto [it, inserted] = b.terms.try_emplace(name, t);
  return inserted || it->second == t;
}

// Strips one level of weakening, if t is one.
std::optional<Term> unweaken(const Term& t) {
  if (t.scope() == 0) return std::nullopt;
  if (t.kind() == TermKind::Subst && t.subject().scope() + 1 == t.scope() &&
      is_identity_prefix(t.args(), t.scope())) {
    return t.subject();
  }
  return unlift(t, 1);
}

}  // namespace

bool match(const Pattern& p, const Term& t, Bindings& out) {
  switch (p.kind()) {
    case Pattern::Kind::Meta:
      return bind_term(out, p.name(), t);
    case Pattern::Kind::AnyVar:
      return t.kind() == TermKind::Var && bind_term(out, p.name(), t);
    case Pattern::Kind::BoundVar:
      return t.kind() == TermKind::Var && t.scope() > p.depth() && t.index() == t.scope() - p.depth();
    case Pattern::Kind::App:
      return t.kind() == TermKind::App && match(p.kids()[0], t.fun(), out) && match(p.kids()[1], t.arg(), out);
    case Pattern::Kind::Abs:
      return t.kind() == TermKind::Abs && match(p.kids()[0], t.body(), out);
    case Pattern::Kind::Subst: {
      if (t.kind() != TermKind::Subst || !match(p.kids()[0], t.subject(), out)) return false;
      std::vector<Term> args(t.args().begin(), t.args().end());
      auto [it, inserted] = out.tuples.try_emplace(p.name(), args);
      if (!inserted && it->second != args) return false;
      out.tuple_scopes[p.name()] = t.scope();
      return true;
    }
    case Pattern::Kind::Lifted: {
      auto inner = unweaken(t);
      return inner && match(p.kids()[0], *inner, out);
    }
  }
  return false;
}

std::optional<Term> instantiate(const Pattern& p, std::size_t scope, Rng& rng, Bindings& b) {
  TermGenOptions gen;
  gen.continue_prob = 0.5;
  gen.max_depth = 4;
  switch (p.kind()) {
    case Pattern::Kind::Meta: {
      if (auto it = b.terms.find(p.name()); it != b.terms.end()) {
        if (it->second.scope() != scope) return std::nullopt;
        return it->second;
      }
      auto t = random_normalizing_term(rng, scope, gen, kDefaultFuel, 20);
      if (!t) return std::nullopt;
      b.terms.emplace(p.name(), *t);
      return t;
    }
    case Pattern::Kind::AnyVar: {
      if (scope == 0) return std::nullopt;
      if (auto it = b.terms.find(p.name()); it != b.terms.end()) {
        if (it->second.scope() != scope) return std::nullopt;
        return it->second;
      }
      Term v = mk_var(scope, rng.between(1, scope));
      b.terms.emplace(p.name(), v);
      return v;
    }
    case Pattern::Kind::BoundVar:
      if (scope <= p.depth()) return std::nullopt;
      return mk_var(scope, scope - p.depth());
    case Pattern::Kind::App: {
      auto f = instantiate(p.kids()[0], scope, rng, b);
      if (!f) return std::nullopt;
      auto a = instantiate(p.kids()[1], scope, rng, b);
      if (!a) return std::nullopt;
      return mk_app(std::move(*f), std::move(*a));
    }
    case Pattern::Kind::Abs: {
      auto body = instantiate(p.kids()[0], scope + 1, rng, b);
      if (!body) return std::nullopt;
      return mk_abs(std::move(*body));
    }
    case Pattern::Kind::Subst: {
      std::vector<Term> args;
      if (auto it = b.tuples.find(p.name()); it != b.tuples.end()) {
        if (b.tuple_scopes.at(p.name()) != scope) return std::nullopt;
        args = it->second;
      } else {
        const std::size_t m = rng.between(0, 3);
        if (m <= scope && rng.chance(0.25)) {
          args = identity_tuple(m, scope);
        } else {
          for (std::size_t k = 0; k < m; ++k) {
            auto a = random_normalizing_term(rng, scope, gen, kDefaultFuel, 20);
            if (!a) return std::nullopt;
            args.push_back(std::move(*a));
          }
        }
        b.tuples.emplace(p.name(), args);
        b.tuple_scopes[p.name()] = scope;
      }
      auto subject = instantiate(p.kids()[0], args.size(), rng, b);
      if (!subject) return std::nullopt;
      return mk_subst(std::move(*subject), std::move(args), scope);
    }
    case Pattern::Kind::Lifted: {
      if (scope == 0) return std::nullopt;
      auto inner = instantiate(p.kids()[0], scope - 1, rng, b);
      if (!inner) return std::nullopt;
      return rng.chance(0.5) ? weaken(*inner, 1) : lift(*inner, 1);
    }
  }
  return std::nullopt;
}

std::optional<Term> RewriteRule::apply(const Term& t) const {
  Bindings b;
  if (!match(lhs, t, b)) return std::nullopt;
  std::optional<Term> out = rewrite(b, t);
  if (out && out->scope() != t.scope()) {
    throw std::logic_error("rule " + name + " changed the scope of " + render_scoped(t));
  }
  return out;
}

namespace {

// Argument of a substitution moved under one binder.  Variables are renamed
// structurally; compound arguments get an explicit weakening.
Term extend_arg(const Term& a) {
  if (a.kind() == TermKind::Var) return mk_var(a.scope() + 1, a.index());
  return weaken(a, 1);
}

Term compose_at(const Term& a, const Term& b) {
  const std::size_t n = a.scope();
  return mk_abs(mk_app(weaken(a, 1), mk_app(weaken(b, 1), mk_var(n + 1, n + 1))));
}

}  // namespace

std::vector<RewriteRule> core_rules() {
  using P = Pattern;
  std::vector<RewriteRule> rules;
  rules.push_back({"tuple_ext", P::subst(P::meta("s"), "v"),
                   [](const Bindings& b, const Term& t) -> std::optional<Term> {
                     const Term& s = b.term("s");
                     if (!is_identity_prefix(b.tuple("v"), t.scope())) return std::nullopt;
                     return lift(s, t.scope() - s.scope());
                   }});
  rules.push_back({"subst_var", P::subst(P::any_var("j"), "v"),
                   [](const Bindings& b, const Term&) -> std::optional<Term> {
                     return b.tuple("v")[b.term("j").index() - 1];
                   }});
  rules.push_back({"subst_app", P::subst(P::app(P::meta("f"), P::meta("a")), "v"),
                   [](const Bindings& b, const Term& t) -> std::optional<Term> {
                     const auto& v = b.tuple("v");
                     return mk_app(mk_subst(b.term("f"), v, t.scope()), mk_subst(b.term("a"), v, t.scope()));
                   }});
  rules.push_back({"subst_abs", P::subst(P::abs(P::meta("b")), "v"),
                   [](const Bindings& b, const Term& t) -> std::optional<Term> {
                     const std::size_t n = t.scope();
                     std::vector<Term> ext;
                     for (const Term& a : b.tuple("v")) ext.push_back(extend_arg(a));
                     ext.push_back(mk_var(n + 1, n + 1));
                     return mk_abs(mk_subst(b.term("b"), std::move(ext), n + 1));
                   }});
  rules.push_back({"beta", P::app(P::abs(P::meta("b")), P::meta("a")),
                   [](const Bindings& b, const Term& t) -> std::optional<Term> {
                     const std::size_t n = t.scope();
                     std::vector<Term> args = identity_tuple(n, n);
                     args.push_back(b.term("a"));
                     return mk_subst(b.term("b"), std::move(args), n);
                   }});
  return rules;
}

RewriteRule compose_distribution_rule() {
  using P = Pattern;
  // (a ∘ b) • t = (a • t) ∘ (b • t), with a ∘ b = λ. ι(a) (ι(b) x_{n+1}).
  Pattern composite = P::abs(P::app(P::lifted(P::meta("a")), P::app(P::lifted(P::meta("b")), P::bound_var())));
  return {"compose_dist", P::subst(composite, "t"), [](const Bindings& b, const Term& t) -> std::optional<Term> {
            const auto& args = b.tuple("t");
            return compose_at(mk_subst(b.term("a"), args, t.scope()), mk_subst(b.term("b"), args, t.scope()));
          }};
}

RewriteRule proj1_pair_rule() {
  using P = Pattern;
  // π₁ (a, b) = a, with π₁ = λ. x (λλ. x') and (a, b) = λ. x ι(a) ι(b).
  Pattern proj1 = P::abs(P::app(P::bound_var(), P::abs(P::abs(P::bound_var(1)))));
  Pattern pair = P::abs(P::app(P::app(P::bound_var(), P::lifted(P::meta("a"))), P::lifted(P::meta("b"))));
  return {"proj1_pair", P::app(proj1, pair),
          [](const Bindings& b, const Term&) -> std::optional<Term> { return b.term("a"); }};
}

SelfTestReport self_test(const RewriteRule& rule, const SelfTestOptions& options) {
  SelfTestReport report;
  Rng rng(options.seed);
  for (std::size_t draw = 0; draw < options.max_draws && report.equal + report.unknown < options.instances;
       ++draw) {
    Bindings b;
    const std::size_t scope = rng.between(0, options.max_scope);
    auto instance = instantiate(rule.lhs, scope, rng, b);
    if (!instance) continue;
    auto out = rule.apply(*instance);
    if (!out) continue;
    if (std::holds_alternative<FuelExhausted>(normalize(*instance, options.fuel))) continue;
    const EqResult r = beta_eq(*instance, *out, options.fuel);
    if (r.is_distinct()) {
      report.counterexample = render_scoped(*instance) + "  ~>  " + render_scoped(*out);
      return report;
    }
    if (r.is_equal()) {
      ++report.equal;
    } else {
      ++report.unknown;
    }
  }
  return report;
}

const RuleRegistry& RuleRegistry::core() {
  static const RuleRegistry registry = [] {
    RuleRegistry r;
    r.register_core_rules();
    return r;
  }();
  return registry;
}

void RuleRegistry::register_rule(RewriteRule rule, const SelfTestOptions& options) {
  if (find(rule.name) != nullptr) throw RuleRejected("rule " + rule.name + " is already registered");
  const SelfTestReport report = self_test(rule, options);
  if (report.counterexample) {
    throw RuleRejected("rule " + rule.name + " breaks beta-equality: " + *report.counterexample);
  }
  if (report.equal == 0) throw RuleRejected("rule " + rule.name + " could not be exercised by its self-test");
  rules_.push_back(std::move(rule));
}

void RuleRegistry::register_core_rules() {
  for (RewriteRule& r : core_rules()) {
    if (find(r.name) != nullptr) throw RuleRejected("rule " + r.name + " is already registered");
    rules_.push_back(std::move(r));
  }
}

const RewriteRule* RuleRegistry::find(std::string_view name) const {
  for (const RewriteRule& r : rules_) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

namespace {

struct Redex {
  const RewriteRule* rule;
  Path path;
  Term before;
  Term after;
};

std::optional<Redex> find_redex(const Term& t, const RuleRegistry& registry, Path& path) {
  for (const RewriteRule& rule : registry.rules()) {
    if (auto out = rule.apply(t)) return Redex{&rule, path, t, std::move(*out)};
  }
  auto kids = t.children();
  for (std::size_t k = 0; k < kids.size(); ++k) {
    path.push_back(k);
    auto r = find_redex(kids[k], registry, path);
    path.pop_back();
    if (r) return r;
  }
  return std::nullopt;
}

}  // namespace

PropagateResult propagate_subst(const Term& t, const RuleRegistry& registry, std::size_t fuel) {
  Term cur = t;
  std::vector<TraceStep> steps;
  bool exhausted = false;
  for (;;) {
    Path path;
    auto redex = find_redex(cur, registry, path);
    if (!redex) break;
    if (steps.size() >= fuel) {
      exhausted = true;
      break;
    }
    cur = replace_at(cur, redex->path, redex->after);
    steps.push_back({redex->rule->name, std::move(redex->path), std::move(redex->before), std::move(redex->after)});
  }
  return PropagateResult{cur, Trace{t, std::move(steps), cur}, exhausted};
}

PropagateResult propagate_subst(const Term& t, std::size_t fuel) {
  return propagate_subst(t, RuleRegistry::core(), fuel);
}

Term replay_steps(const Term& t, std::span<const TraceStep> steps, const RuleRegistry* registry) {
  Term cur = t;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const TraceStep& s = steps[k];
    auto at = subterm_at(cur, s.path);
    if (!at) throw ReplayError(k, "path " + render_path(s.path) + " does not exist");
    if (!(*at == s.before)) {
      throw ReplayError(k, "subterm at " + render_path(s.path) + " is " + render_scoped(*at) + ", expected " +
                               render_scoped(s.before));
    }
    if (s.after.scope() != s.before.scope()) throw ReplayError(k, "rewrite changes the scope");
    if (registry != nullptr) {
      const RewriteRule* rule = registry->find(s.rule);
      if (rule == nullptr) throw ReplayError(k, "unknown rule " + s.rule);
      auto out = rule->apply(s.before);
      if (!out || !(*out == s.after)) throw ReplayError(k, "rule " + s.rule + " does not produce the recorded term");
    }
    cur = replace_at(cur, s.path, s.after);
  }
  return cur;
}

namespace {

Term replay_checked(const Term& t, const Trace& trace, const RuleRegistry* registry) {
  if (!(t == trace.initial)) throw ReplayError(0, "input differs from the trace's initial term");
  Term out = replay_steps(t, trace.steps, registry);
  if (!(out == trace.final_term)) throw ReplayError(trace.steps.size(), "result differs from the trace's final term");
  return out;
}

}  // namespace

Term replay(const Term& t, const Trace& trace) { return replay_checked(t, trace, nullptr); }

Term replay(const Term& t, const Trace& trace, const RuleRegistry& registry) {
  return replay_checked(t, trace, &registry);
}

std::string render_path(std::span<const std::size_t> path) {
  std::string out;
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (k > 0) out += '.';
    out += std::to_string(path[k]);
  }
  return out;
}

Path parse_path(std::string_view text) {
  Path path;
  if (text.empty()) return path;
  std::size_t start = 0;
  for (;;) {
    const std::size_t dot = text.find('.', start);
    const std::string_view part = text.substr(start, dot == std::string_view::npos ? text.npos : dot - start);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw ParseError("bad path component '" + std::string(part) + "'", start);
    }
    path.push_back(value);
    if (dot == std::string_view::npos) return path;
    start = dot + 1;
  }
}

std::string emit_script(const Trace& trace) {
  std::string out;
  for (const TraceStep& s : trace.steps) {
    out += "rule=" + s.rule + " path=" + render_path(s.path) + " lhs=" + render_scoped(s.before) +
           " rhs=" + render_scoped(s.after) + "\n";
  }
  return out;
}

std::vector<TraceStep> parse_script(std::string_view script) {
  std::vector<TraceStep> steps;
  std::size_t offset = 0;
  while (offset < script.size()) {
    std::size_t eol = script.find('\n', offset);
    if (eol == std::string_view::npos) eol = script.size();
    const std::string_view line = script.substr(offset, eol - offset);
    const std::size_t line_start = offset;
    offset = eol + 1;
    if (line.empty()) continue;
    const std::size_t p = line.find(" path=");
    const std::size_t l = line.find(" lhs=");
    const std::size_t r = line.find(" rhs=");
    if (line.rfind("rule=", 0) != 0 || p == line.npos || l == line.npos || r == line.npos || !(p < l && l < r)) {
      throw ParseError("malformed script line", line_start);
    }
    TraceStep step{std::string(line.substr(5, p - 5)), parse_path(line.substr(p + 6, l - p - 6)),
                   parse_scoped(line.substr(l + 5, r - l - 5)), parse_scoped(line.substr(r + 5))};
    steps.push_back(std::move(step));
  }
  return steps;
}

std::string trace_to_json(const Trace& trace) {
  nlohmann::ordered_json j;
  j["initial"] = render_scoped(trace.initial);
  j["steps"] = nlohmann::ordered_json::array();
  for (const TraceStep& s : trace.steps) {
    nlohmann::ordered_json step;
    step["rule"] = s.rule;
    step["path"] = s.path;
    step["before"] = render_scoped(s.before);
    step["after"] = render_scoped(s.after);
    j["steps"].push_back(std::move(step));
  }
  j["final"] = render_scoped(trace.final_term);
  return j.dump(2);
}

Trace trace_from_json(std::string_view json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid trace JSON: ") + e.what(), e.byte);
  }
  try {
    std::vector<TraceStep> steps;
    for (const auto& s : j.at("steps")) {
      steps.push_back({s.at("rule").get<std::string>(), s.at("path").get<Path>(),
                       parse_scoped(s.at("before").get<std::string>()),
                       parse_scoped(s.at("after").get<std::string>())});
    }
    return Trace{parse_scoped(j.at("initial").get<std::string>()), std::move(steps),
                 parse_scoped(j.at("final").get<std::string>())};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed trace: ") + e.what(), 0);
  }
}

}  // namespace scottrep
