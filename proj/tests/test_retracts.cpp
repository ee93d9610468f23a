#include <gtest/gtest.h>

#include "scottrep/combinators.hpp"
#include "scottrep/generate.hpp"
#include "scottrep/karoubi.hpp"
#include "scottrep/retracts.hpp"
#include "scottrep/syntax.hpp"

using namespace scottrep;

TEST(Retracts, ObjectsMustBeIdempotent) {
  const RetractCategory cat;
  EXPECT_NO_THROW(cat.object(U()));
  EXPECT_NO_THROW(cat.object(I()));
  // K = λx y. x is not idempotent: K ∘ K = λx y z. x.
  EXPECT_THROW(cat.object(parse_scoped("\\.\\.x1 @0")), CertificateError);
  EXPECT_THROW(cat.object(parse_scoped("x1 @1")), std::exception);
}

TEST(Retracts, MorphismsMustBeAbsorbed) {
  const RetractCategory cat;
  const RObject u = cat.object(U()), one = cat.object(I());
  EXPECT_NO_THROW(cat.morphism(u, one, I()));
  // λx. x is absorbed by U but not by I on the left.
  EXPECT_THROW(cat.morphism(u, one, U()), CertificateError);
}

TEST(Retracts, UnknownPolicy) {
  const Term omega = parse_scoped("(\\.x1 x1) (\\.x1 x1) @0");
  const RetractCategory warn({50, UnknownPolicy::Warn});
  const RetractCategory strict({50, UnknownPolicy::Error});
  EXPECT_TRUE(warn.object(omega).idempotency.is_unknown());
  EXPECT_THROW(strict.object(omega), CertificateError);
}

TEST(Retracts, ProductsAndExponentials) {
  const RetractCategory cat;
  const RObject u = cat.object(U());
  const RObject uu = cat.product(u, u);
  Rng rng(2);
  for (int k = 0; k < 20; ++k) {
    const Term a = random_closed_combinator(rng), b = random_closed_combinator(rng);
    const Term p = pair(a, b);
    EXPECT_TRUE(beta_eq(mk_app(cat.proj1(u, u).term, p), a).is_equal());
    EXPECT_TRUE(beta_eq(mk_app(cat.proj2(u, u).term, p), b).is_equal());
  }
  EXPECT_TRUE(beta_eq(compose(uu.term, uu.term), uu.term).is_equal());
  const RObject e = cat.exponential(u, u);
  EXPECT_TRUE(beta_eq(e.term, U()).is_distinct());
  EXPECT_TRUE(beta_eq(compose(e.term, e.term), e.term).is_equal());
}

TEST(Retracts, CurryUncurryTranspose) {
  const RetractCategory cat;
  Rng rng(9);
  for (int k = 0; k < 30; ++k) {
    const RObject a = cat.sample_object(rng, 1), b = cat.sample_object(rng, 1), c = cat.sample_object(rng, 1);
    const RMorphism f = cat.sample_morphism(cat.product(a, b), c, rng);
    const RMorphism g = cat.curry(a, b, f);
    EXPECT_TRUE(cat.equal(cat.uncurry(a, b, c, g), f, kDefaultFuel).is_equal());
  }
}

TEST(Retracts, ScottPsiMatchesDefinition) {
  const Term f = parse_scoped("\\.x1 (\\.\\.x3) @0");
  // psi_1(f) = f (U, x1) at scope 1.
  EXPECT_TRUE(beta_eq(scott_psi(f, 1), parse_scoped("x1 @1")).is_equal());
  EXPECT_TRUE(beta_eq(scott_psi(f, 0), mk_app(f, U())).is_equal());
  for (std::size_t n = 0; n <= 3; ++n) {
    Rng rng(n + 1);
    const auto t = random_normalizing_term(rng, n, TermGenOptions{.allow_self_application = false});
    ASSERT_TRUE(t.has_value());
    EXPECT_TRUE(beta_eq(scott_psi(scott_psi_inv(*t), n), *t).is_equal()) << render_scoped(*t);
    EXPECT_TRUE(beta_eq(compose(scott_psi_inv(*t), u_power(n)), scott_psi_inv(*t)).is_equal());
  }
}

TEST(Retracts, ReflexiveU) {
  const LawReport r = u_reflexive_check();
  EXPECT_EQ(r.verdict(), Verdict::Pass) << r.to_text();
  const RetractCategory cat;
  EXPECT_TRUE(U_reflexive(cat).retract_cert.is_equal());
}

TEST(Retracts, ScottSuite) {
  SampleOptions opt;
  opt.samples = 40;
  for (std::size_t n = 0; n <= 2; ++n) {
    const LawReport r = scott_roundtrip(n, opt);
    EXPECT_EQ(r.verdict(), Verdict::Pass) << r.to_text();
    EXPECT_EQ(r.unknowns(), 0u);
  }
}

TEST(Retracts, CccSuite) {
  SampleOptions opt;
  opt.samples = 20;
  const LawReport r = retract_ccc_check(opt);
  EXPECT_EQ(r.verdict(), Verdict::Pass) << r.to_text();
}

TEST(Retracts, EndomorphismTheoryLaws) {
  const RetractCategory cat;
  const ScottTheory th = scott_theory(cat);
  LawCheckOptions opt;
  opt.samples = 15;
  opt.max_scope = 2;
  const LawReport r = check_theory_laws(th, opt);
  EXPECT_EQ(r.verdict(), Verdict::Pass) << r.to_text();
}

TEST(Retracts, AgreesWithKaroubiPresentation) {
  SampleOptions opt;
  opt.samples = 30;
  EXPECT_EQ(r_as_karoubi_check(opt).verdict(), Verdict::Pass);
}
