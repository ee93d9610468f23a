#include <gtest/gtest.h>

#include "oracle.hpp"
#include "scottrep/generate.hpp"
#include "scottrep/rewrite.hpp"
#include "scottrep/syntax.hpp"

using namespace scottrep;

namespace {

std::vector<std::string> rule_names(const Trace& trace) {
  std::vector<std::string> out;
  for (const TraceStep& s : trace.steps) out.push_back(s.rule);
  return out;
}

}  // namespace

TEST(Rewrite, BigExampleTakesTenSteps) {
  const PropagateResult r = propagate_subst(parse_scoped("\\.x5 (x1 x2 (x4 x3)) [x1,x2,x3,x1] @3"));
  EXPECT_FALSE(r.exhausted);
  EXPECT_EQ(render(r.term), "\\.x4 (x1 x2 (x1 x3))");
  const std::vector<std::string> expected{"subst_abs", "subst_app", "subst_var", "subst_app", "subst_app",
                                          "subst_var", "subst_var", "subst_app", "subst_var", "subst_var"};
  EXPECT_EQ(rule_names(r.trace), expected);
}

TEST(Rewrite, UTermTakesThreeSteps) {
  const PropagateResult r = propagate_subst(parse_scoped("(\\.x1)[\\.x1] @0"));
  EXPECT_EQ(rule_names(r.trace), (std::vector<std::string>{"subst_abs", "subst_var", "tuple_ext"}));
  EXPECT_EQ(r.term, parse_scoped("\\.\\.x2 @0"));
}

TEST(Rewrite, NormalInputIsUnchanged) {
  const Term t = parse_scoped("\\.x1 (x1 x2) @1");
  const PropagateResult r = propagate_subst(t);
  EXPECT_TRUE(r.trace.steps.empty());
  EXPECT_EQ(r.term, t);
}

TEST(Rewrite, ExhaustionIsReported) {
  const PropagateResult r = propagate_subst(parse_scoped("(\\.x1 x1) (\\.x1 x1) @0"), 25);
  EXPECT_TRUE(r.exhausted);
  EXPECT_EQ(r.trace.steps.size(), 25u);
}

TEST(Rewrite, SoundAgainstOracleAndReplayable) {
  Rng rng(21);
  std::size_t checked = 0;
  for (int k = 0; k < 300; ++k) {
    const Term t = random_term(rng, rng.between(0, 3));
    const auto expected = oracle::normalize(oracle::translate(t), 2000);
    if (!expected) continue;
    const PropagateResult r = propagate_subst(t);
    ASSERT_FALSE(r.exhausted) << render_scoped(t);
    EXPECT_TRUE(oracle::equal(oracle::translate(r.term), *expected)) << render_scoped(t);
    EXPECT_EQ(replay(t, r.trace), r.term);
    EXPECT_EQ(replay(t, r.trace, RuleRegistry::core()), r.term);
    ++checked;
  }
  EXPECT_GT(checked, 200u);
}

TEST(Rewrite, ScriptAndJsonRoundTrip) {
  const Term t = parse_scoped("\\.x5 (x1 x2 (x4 x3)) [x1,x2,x3,x1] @3");
  const PropagateResult r = propagate_subst(t);
  const auto steps = parse_script(emit_script(r.trace));
  EXPECT_EQ(steps, r.trace.steps);
  EXPECT_EQ(replay_steps(t, steps, &RuleRegistry::core()), r.term);
  const Trace back = trace_from_json(trace_to_json(r.trace));
  EXPECT_EQ(back.steps, r.trace.steps);
  EXPECT_EQ(back.initial, t);
  EXPECT_EQ(back.final_term, r.term);
}

TEST(Rewrite, ReplayRejectsTamperedTrace) {
  const Term t = parse_scoped("\\.x5 (x1 x2 (x4 x3)) [x1,x2,x3,x1] @3");
  PropagateResult r = propagate_subst(t);
  r.trace.steps[2].after = mk_var(4, 3);
  EXPECT_THROW(replay(t, r.trace, RuleRegistry::core()), ReplayError);
  Trace wrong_path = propagate_subst(t).trace;
  wrong_path.steps[1].path = Path{1};
  EXPECT_THROW(replay(t, wrong_path), ReplayError);
}

TEST(Rewrite, PathCodec) {
  EXPECT_EQ(render_path(Path{}), "");
  EXPECT_EQ(render_path(Path{0, 1, 2}), "0.1.2");
  EXPECT_EQ(parse_path("0.1.2"), (Path{0, 1, 2}));
  EXPECT_EQ(parse_path(""), Path{});
}

TEST(Rewrite, CoreRulesPassSelfTest) {
  for (const RewriteRule& rule : core_rules()) {
    const SelfTestReport r = self_test(rule);
    EXPECT_TRUE(r.accepted()) << rule.name << ": " << r.counterexample.value_or("no instances");
  }
}

TEST(Rewrite, ExtensionRulesRegister) {
  RuleRegistry reg;
  reg.register_core_rules();
  reg.register_rule(compose_distribution_rule());
  reg.register_rule(proj1_pair_rule());
  EXPECT_NE(reg.find("tuple_ext"), nullptr);
  EXPECT_EQ(reg.rules().size(), 7u);
  EXPECT_THROW(reg.register_rule(proj1_pair_rule()), RuleRejected);
}

TEST(Rewrite, UnsoundRuleIsRejected) {
  // x y ~> y x is not a beta-equality.
  RewriteRule swap{"swap", Pattern::app(Pattern::any_var("x"), Pattern::any_var("y")),
                   [](const Bindings& b, const Term&) -> std::optional<Term> {
                     if (b.term("x") == b.term("y")) return std::nullopt;
                     return mk_app(b.term("y"), b.term("x"));
                   }};
  RuleRegistry reg;
  EXPECT_THROW(reg.register_rule(swap), RuleRejected);
  EXPECT_TRUE(self_test(swap).counterexample.has_value());
}

TEST(Rewrite, PatternMatching) {
  Bindings b;
  const Pattern p = Pattern::app(Pattern::abs(Pattern::meta("body")), Pattern::meta("arg"));
  EXPECT_TRUE(match(p, parse_scoped("(\\.x2) x1 @1"), b));
  EXPECT_EQ(render_scoped(b.term("body")), "x2 @2");
  Bindings c;
  EXPECT_FALSE(match(p, parse_scoped("x1 x1 @1"), c));
  Bindings d;
  const Pattern same = Pattern::app(Pattern::meta("m"), Pattern::meta("m"));
  EXPECT_TRUE(match(same, parse_scoped("x1 x1 @1"), d));
  Bindings e;
  EXPECT_FALSE(match(same, parse_scoped("x1 x2 @2"), e));
}
