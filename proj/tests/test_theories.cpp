#include <gtest/gtest.h>

#include "scottrep/ccc.hpp"
#include "scottrep/free_theory.hpp"
#include "scottrep/lambda_calculus.hpp"
#include "scottrep/syntax.hpp"
#include "scottrep/theory.hpp"

using namespace scottrep;

namespace {

// Substitution that forgets the last argument: breaks var_subst.
class ForgetfulTheory : public FreeTheory {
 public:
  ForgetfulTheory() : FreeTheory({"a", "b"}) {}
  Element subst(const Element& f, std::span<const Element> g, std::size_t n) const {
    if (f.tag == Element::Tag::Index && f.value == g.size() && g.size() > 1) return label("a");
    return FreeTheory::subst(f, g, n);
  }
  std::string name() const { return "forgetful"; }
};

// rho that drops its argument: breaks beta.
class BrokenRho : public LambdaCalculus {
 public:
  using LambdaCalculus::LambdaCalculus;
  Term rho(std::size_t n, const Term&) const { return mk_var(n + 1, n + 1); }
};

}  // namespace

TEST(FreeTheory, CarrierAndSubstitution) {
  const FreeTheory th({"a", "b"});
  EXPECT_EQ(th.enumerate(0).size(), 2u);
  EXPECT_EQ(th.enumerate(3).size(), 5u);
  const std::vector<FreeElement> g{th.label("b"), th.var(2, 1)};
  EXPECT_EQ(th.subst(th.var(2, 1), g, 2), th.label("b"));
  EXPECT_EQ(th.subst(th.var(2, 2), g, 2), th.var(2, 1));
  EXPECT_EQ(th.subst(th.label("a"), g, 2), th.label("a"));
  EXPECT_EQ(th.parse("2", 3), th.var(3, 2));
  EXPECT_EQ(th.parse("b", 3), th.label("b"));
  EXPECT_THROW(th.var(1, 2), std::invalid_argument);
}

TEST(FreeTheory, LawsHoldExhaustively) {
  const LawReport r = check_theory_laws_exhaustive(FreeTheory({"a", "b"}), 3);
  EXPECT_EQ(r.verdict(), Verdict::Pass) << r.to_text();
  EXPECT_EQ(r.failures(), 0u);
  // x_{l,j} • g over all l <= 3, all tuples g at scopes 0..3 and every j.
  std::size_t expected = 0;
  for (std::size_t n = 0; n <= 3; ++n) {
    std::size_t count = 1;
    for (std::size_t l = 1; l <= 3; ++l) {
      count *= n + 2;
      expected += count * l;
    }
  }
  EXPECT_EQ(r.find("var_subst")->total(), expected);
}

TEST(FreeTheory, BrokenSubstitutionIsCaught) {
  const LawReport r = check_theory_laws_exhaustive(ForgetfulTheory(), 3);
  EXPECT_EQ(r.verdict(), Verdict::Fail);
  ASSERT_NE(r.find("var_subst"), nullptr);
  EXPECT_GT(r.find("var_subst")->fail, 0u);
  EXPECT_TRUE(r.find("var_subst")->counterexample.has_value());
}

TEST(LambdaTheory, LawsHoldOnSamples) {
  const LambdaCalculus lc(TermGenOptions{.allow_self_application = false});
  LawCheckOptions opt;
  opt.samples = 200;
  const LawReport r = check_theory_laws(lc, opt);
  for (const char* law : {"var_subst", "subst_identity", "subst_assoc", "weaken_subst", "weaken_compat",
                          "lam_natural", "rho_natural", "beta"}) {
    const LawTally* t = r.find(law);
    ASSERT_NE(t, nullptr) << law;
    EXPECT_EQ(t->fail, 0u) << law;
    EXPECT_LE(t->unknown_rate(), 0.01) << law;
    EXPECT_EQ(t->total(), 200u) << law;
  }
}

TEST(LambdaTheory, BrokenRhoIsCaught) {
  const BrokenRho broken(TermGenOptions{.allow_self_application = false});
  LawCheckOptions opt;
  opt.samples = 50;
  const LawReport r = check_theory_laws(broken, opt);
  EXPECT_GT(r.find("beta")->fail, 0u);
}

TEST(LambdaTheory, SeedDeterminism) {
  const LambdaCalculus lc;
  LawCheckOptions opt;
  opt.samples = 30;
  opt.seed = 99;
  EXPECT_EQ(check_theory_laws(lc, opt).to_json(), check_theory_laws(lc, opt).to_json());
}

TEST(LambdaTheory, InitialMorphismIntoItselfIsIdentityUpToBeta) {
  const LambdaCalculus lc(TermGenOptions{.allow_self_application = false});
  const auto id = initial_morphism(lc, lc);
  LawCheckOptions opt;
  opt.samples = 50;
  const LawReport r = check_morphism_laws(id, opt);
  EXPECT_EQ(r.verdict(), Verdict::Pass) << r.to_text();
  Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    const Term t = lc.sample(rng.between(0, 3), rng);
    EXPECT_FALSE(beta_eq(interpret(lc, t), t).is_distinct()) << render_scoped(t);
  }
}

TEST(TerminalTheory, IsConstant) {
  const TerminalCategory cat;
  const auto th = trivial_theory(cat);
  LawCheckOptions opt;
  opt.samples = 20;
  EXPECT_EQ(check_theory_laws(th, opt).verdict(), Verdict::Pass);
}

TEST(LawReport, VerdictsAndThreshold) {
  LawReport r;
  r.suite = "s";
  LawTally& t = r.law("x");
  for (int k = 0; k < 99; ++k) t.record(EqResult::equal(), [] { return std::string(); });
  t.record(EqResult::unknown(), [] { return std::string("u"); });
  EXPECT_EQ(r.verdict(0.01), Verdict::Pass);
  EXPECT_EQ(r.verdict(0.0), Verdict::Inconclusive);
  r.law("y").record(false, [] { return std::string("boom"); });
  EXPECT_EQ(r.verdict(), Verdict::Fail);
  EXPECT_EQ(*r.find("y")->counterexample, "boom");
  EXPECT_EQ(exit_code(Verdict::Pass), 0);
  EXPECT_EQ(exit_code(Verdict::Inconclusive), 2);
  EXPECT_EQ(exit_code(Verdict::Fail), 3);
}
