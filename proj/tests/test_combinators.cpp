#include <gtest/gtest.h>

#include "scottrep/combinators.hpp"
#include "scottrep/generate.hpp"
#include "scottrep/syntax.hpp"

using namespace scottrep;

namespace {

void expect_beta(const Term& a, const Term& b) {
  EXPECT_TRUE(beta_eq(a, b).is_equal()) << render_scoped(a) << " vs " << render_scoped(b);
}

}  // namespace

TEST(Combinators, Definitions) {
  EXPECT_EQ(U(), parse_scoped("\\.x1 @0"));
  EXPECT_EQ(I(), parse_scoped("\\.\\.x2 @0"));
  expect_beta(proj(1), parse_scoped("\\.x1 (\\.\\.x2) @0"));
  expect_beta(proj(2), parse_scoped("\\.x1 (\\.\\.x3) @0"));
}

TEST(Combinators, PairingAndProjections) {
  const Term a = parse_scoped("\\.\\.x1 @0"), b = parse_scoped("\\.x1 x1 @0");
  expect_beta(apply(proj(1), pair(a, b)), a);
  expect_beta(apply(proj(2), pair(a, b)), b);
  expect_beta(pair(a, b), parse_scoped("\\.x1 (\\.\\.x2) (\\.x2 x2) @0"));
}

TEST(Combinators, CompositionIsFunctionComposition) {
  const Term f = parse_scoped("\\.x1 (\\.x2) @0"), g = parse_scoped("\\.\\.x1 @0");
  const Term x = parse_scoped("\\.\\.\\.x3 @0");
  expect_beta(apply(compose(f, g), x), apply(f, apply(g, x)));
  expect_beta(compose(I(), I()), I());
  expect_beta(compose(U(), f), f);
}

TEST(Combinators, TuplesAndProjections) {
  const std::vector<Term> elems{parse_scoped("\\.x1 @0"), parse_scoped("\\.\\.x1 @0"), parse_scoped("\\.\\.x2 @0")};
  const Term t = ntuple(elems);
  for (std::size_t i = 1; i <= elems.size(); ++i) expect_beta(apply(nproj(elems.size(), i), t), elems[i - 1]);
  expect_beta(ntuple({}), U());
}

TEST(Combinators, PsiInverseRoundTrip) {
  // Applying sampled combinators to each other may diverge, so Unknown is
  // tolerated but Distinct is not.
  Rng rng(4);
  std::size_t equal = 0;
  for (int k = 0; k < 50; ++k) {
    const Term f = random_closed_combinator(rng);
    const Term a = random_closed_combinator(rng), b = random_closed_combinator(rng);
    // psi(f) a b = f (a, b) and psi_inv(f) (a, b) = f a b.
    const EqResult r1 = beta_eq(mk_app(mk_app(psi(f), a), b), mk_app(f, pair(a, b)));
    const EqResult r2 = beta_eq(mk_app(psi_inv(f), pair(a, b)), mk_app(mk_app(f, a), b));
    EXPECT_FALSE(r1.is_distinct()) << render_scoped(f);
    EXPECT_FALSE(r2.is_distinct()) << render_scoped(f);
    equal += (r1.is_equal() ? 1 : 0) + (r2.is_equal() ? 1 : 0);
  }
  EXPECT_GE(equal, 80u);
}

TEST(Combinators, ScopedVariants) {
  const Term x1 = mk_var(2, 1), x2 = mk_var(2, 2);
  expect_beta(compose_at(x1, x2), parse_scoped("\\.x1 (x2 x3) @2"));
  expect_beta(pair_at(x1, x2), parse_scoped("\\.x3 x1 x2 @2"));
  expect_beta(identity_at(2), parse_scoped("\\.x3 @2"));
  EXPECT_EQ(raise(mk_var(1, 1)), mk_var(2, 1));
}

TEST(Combinators, LookupTable) {
  for (const auto& name : combinator_names()) EXPECT_TRUE(lookup_combinator(name).has_value()) << name;
  EXPECT_FALSE(lookup_combinator("nope").has_value());
  EXPECT_EQ(*lookup_combinator("pi1"), proj(1));
}

TEST(Combinators, LawSuitePasses) {
  const LawReport r = combinator_laws();
  EXPECT_EQ(r.verdict(), Verdict::Pass) << r.to_text();
}
