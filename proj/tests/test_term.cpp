#include <gtest/gtest.h>

#include <variant>

#include "oracle.hpp"
#include "scottrep/generate.hpp"
#include "scottrep/normalize.hpp"
#include "scottrep/syntax.hpp"
#include "scottrep/term.hpp"

using namespace scottrep;

namespace {

Term nf(const Term& t, std::size_t fuel = kDefaultFuel) {
  const NormalizeResult r = normalize(t, fuel);
  EXPECT_TRUE(std::holds_alternative<NormalForm>(r)) << render_scoped(t);
  return std::get<NormalForm>(r).term;
}

}  // namespace

TEST(Term, ScopeDiscipline) {
  EXPECT_THROW(mk_var(2, 3), TermError);
  EXPECT_THROW(mk_var(1, 0), TermError);
  EXPECT_THROW(mk_app(mk_var(1, 1), mk_var(2, 1)), TermError);
  EXPECT_THROW(mk_subst(mk_var(2, 1), {mk_var(1, 1)}, 1), TermError);
  const Term t = mk_subst(mk_var(2, 2), {mk_var(3, 1), mk_var(3, 3)}, 3);
  EXPECT_EQ(t.scope(), 3u);
  EXPECT_EQ(mk_abs(mk_var(1, 1)).scope(), 0u);
}

TEST(Term, ParseRenderRoundTrip) {
  for (const char* text : {"\\.x5 (x1 x2 (x4 x3)) [x1,x2,x3,x1] @3", "\\.x1 @0", "x1 x2 @2", "(\\.x1 x1) (\\.x1 x1) @0",
                           "\\.\\.x2 @0", "\\.x1 [] @2"}) {
    const Term t = parse_scoped(text);
    EXPECT_EQ(render_scoped(t), text);
    EXPECT_EQ(parse_scoped(render_scoped(t)), t);
  }
}

TEST(Term, ParseErrors) {
  EXPECT_THROW(parse_scoped("\\.x1 ("), ParseError);
  EXPECT_THROW(parse_scoped("x1 @"), ParseError);
  EXPECT_THROW(parse_term("x3", 2), TermError);
  EXPECT_THROW(parse_term("(\\.x1)[f]", 0), ParseError);
}

TEST(Term, RandomRoundTrip) {
  Rng rng(7);
  for (int k = 0; k < 300; ++k) {
    const Term t = random_term(rng, rng.between(0, 3));
    EXPECT_EQ(parse_scoped(render_scoped(t)), t) << render_scoped(t);
  }
}

TEST(Term, KnownNormalForms) {
  EXPECT_EQ(nf(parse_scoped("(\\.x1) (\\.\\.x2) @0")), parse_scoped("\\.\\.x2 @0"));
  EXPECT_EQ(nf(parse_scoped("\\.x5 (x1 x2 (x4 x3)) [x1,x2,x3,x1] @3")), parse_scoped("\\.x4 (x1 x2 (x1 x3)) @3"));
  // K x1 x2 -> x1 under no binders.
  EXPECT_EQ(nf(parse_scoped("(\\.\\.x3) x1 x2 @2")), parse_scoped("x1 @2"));
}

TEST(Term, OmegaExhaustsFuel) {
  const NormalizeResult r = normalize(parse_scoped("(\\.x1 x1) (\\.x1 x1) @0"), 100);
  ASSERT_TRUE(std::holds_alternative<FuelExhausted>(r));
  EXPECT_LE(std::get<FuelExhausted>(r).fuel_spent, 100u);
  EXPECT_TRUE(beta_eq(parse_scoped("(\\.x1 x1) (\\.x1 x1) @0"), parse_scoped("\\.x1 @0"), 100).is_unknown());
}

TEST(Term, NormalizerAgreesWithOracle) {
  Rng rng(11);
  std::size_t compared = 0;
  for (int k = 0; k < 400; ++k) {
    const Term t = random_term(rng, rng.between(0, 3));
    const auto expected = oracle::normalize(oracle::translate(t), 2000);
    const NormalizeResult r = normalize(t);
    if (!expected) continue;
    ASSERT_TRUE(std::holds_alternative<NormalForm>(r)) << render_scoped(t);
    const Term got = std::get<NormalForm>(r).term;
    EXPECT_FALSE(contains_subst(got));
    EXPECT_TRUE(is_beta_normal(got));
    EXPECT_TRUE(oracle::equal(oracle::translate(got), *expected))
        << render_scoped(t) << " gave " << render_scoped(got) << ", oracle " << oracle::show(*expected);
    ++compared;
  }
  EXPECT_GT(compared, 300u);
}

TEST(Term, RandomOrderReductionAgrees) {
  Rng rng(12), order(13);
  TermGenOptions opt;
  opt.allow_self_application = false;
  for (int k = 0; k < 200; ++k) {
    const Term t = random_term(rng, rng.between(0, 3), opt);
    const auto leftmost = oracle::normalize(oracle::translate(t), 2000);
    const auto shuffled = oracle::normalize(oracle::translate(t), 2000, &order);
    if (!leftmost || !shuffled) continue;
    EXPECT_TRUE(oracle::equal(*leftmost, *shuffled)) << render_scoped(t);
  }
}

TEST(Term, WeakenAndLiftAgree) {
  Rng rng(5);
  for (int k = 0; k < 200; ++k) {
    const Term t = random_term(rng, rng.between(0, 3));
    const std::size_t extra = rng.between(0, 2);
    const Term w = weaken(t, extra), l = lift(t, extra);
    EXPECT_EQ(w.scope(), t.scope() + extra);
    EXPECT_TRUE(oracle::equal(oracle::translate(w), oracle::translate(l))) << render_scoped(t);
    const auto back = unlift(l, extra);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, t);
  }
}

TEST(Term, BetaEqVerdicts) {
  EXPECT_TRUE(beta_eq(parse_scoped("(\\.x1) (\\.x1) @0"), parse_scoped("\\.x1 @0")).is_equal());
  EXPECT_TRUE(beta_eq(parse_scoped("\\.\\.x1 @0"), parse_scoped("\\.\\.x2 @0")).is_distinct());
  EXPECT_THROW(beta_eq(parse_scoped("x1 @1"), parse_scoped("\\.x1 @0")), TermError);
}

TEST(Term, RhoOfClosedTerm) {
  const Term f = parse_scoped("\\.\\.x2 @0");
  EXPECT_EQ(rho(f).scope(), 1u);
  EXPECT_TRUE(beta_eq(rho(f), parse_scoped("\\.x2 @1")).is_equal());
}

TEST(Term, PathsAddressChildren) {
  const Term t = parse_scoped("\\.x1 (x1 x2) @1");
  const auto sub = subterm_at(t, Path{0, 1});
  ASSERT_TRUE(sub.has_value());
  EXPECT_EQ(render_scoped(*sub), "x1 x2 @2");
  const Term replaced = replace_at(t, Path{0, 1}, mk_var(2, 2));
  EXPECT_EQ(render_scoped(replaced), "\\.x1 x2 @1");
  EXPECT_FALSE(subterm_at(t, Path{3}).has_value());
}
