#include <gtest/gtest.h>

#include <algorithm>

#include "scottrep/free_theory.hpp"
#include "scottrep/generate.hpp"
#include "scottrep/presheaf.hpp"
#include "scottrep/syntax.hpp"

using namespace scottrep;

namespace {

// Acts through the reversed tuple: breaks act_identity at scope >= 2.
class ReversedAction {
 public:
  using Theory = FreeTheory;
  using Element = FreeElement;

  explicit ReversedAction(const FreeTheory& th) : th_(&th) {}
  const FreeTheory& theory() const noexcept { return *th_; }
  Element act(const Element& p, std::span<const Element> f, std::size_t n) const {
    std::vector<Element> r(f.rbegin(), f.rend());
    return th_->subst(p, r, n);
  }
  EqResult eq(const Element& a, const Element& b, std::size_t n, std::size_t fuel) const {
    return th_->eq(a, b, n, fuel);
  }
  Element sample(std::size_t n, Rng& rng) const { return th_->sample(n, rng); }
  std::vector<Element> enumerate(std::size_t n) const { return th_->enumerate(n); }
  std::string render(const Element& e) const { return th_->render(e); }
  std::string name() const { return "reversed"; }

 private:
  const FreeTheory* th_;
};

static_assert(Presheaf<ReversedAction>);

}  // namespace

TEST(Presheaf, ActionLawsExhaustiveOnFreeTheory) {
  const FreeTheory th({"a", "b"});
  LawReport r;
  check_action_laws_exhaustive(r, theory_presheaf(th), "T.", 3, kDefaultFuel);
  check_action_laws_exhaustive(r, plus1(theory_presheaf(th)), "plus1.", 2, kDefaultFuel);
  EXPECT_EQ(r.verdict(), Verdict::Pass) << r.to_text();
}

TEST(Presheaf, BrokenActionIsCaught) {
  const FreeTheory th({"a", "b"});
  LawReport r;
  check_action_laws_exhaustive(r, ReversedAction(th), "bad.", 3, kDefaultFuel);
  EXPECT_EQ(r.verdict(), Verdict::Fail);
  EXPECT_GT(r.find("bad.act_identity")->fail, 0u);
}

TEST(Presheaf, PowerAndProductAct) {
  const FreeTheory th({"a"});
  const PowerPresheaf<FreeTheory> P(th, 2);
  const std::vector<FreeElement> p{th.var(2, 2), th.label("a")};
  const std::vector<FreeElement> f{th.var(1, 1), th.label("a")};
  const auto q = P.act(p, f, 1);
  ASSERT_EQ(q.size(), 2u);
  EXPECT_EQ(q[0], th.label("a"));
  EXPECT_EQ(q[1], th.label("a"));
  const auto prod = psh_product(theory_presheaf(th), theory_presheaf(th));
  const auto e = prod.act({th.var(2, 1), th.var(2, 2)}, f, 1);
  EXPECT_EQ(e.first, th.var(1, 1));
  EXPECT_EQ(e.second, th.label("a"));
}

TEST(Presheaf, YonedaBijection) {
  const LambdaCalculus lc(TermGenOptions{.allow_self_application = false});
  const auto L = theory_presheaf(lc);
  Rng rng(8);
  for (std::size_t n = 0; n <= 3; ++n) {
    const PowerPresheaf<LambdaCalculus> Ln(lc, n);
    for (int k = 0; k < 20; ++k) {
      const Term germ = lc.sample(n, rng);
      const auto m = yoneda_to(L, germ);
      EXPECT_TRUE(beta_eq(yoneda_from(Ln, m), germ).is_equal());
      LawTally nat;
      check_naturality(nat, Ln, L, m, 5, 3, rng, kDefaultFuel);
      EXPECT_EQ(nat.fail, 0u);
    }
  }
}

TEST(Presheaf, CurryUncurryOnFreeTheory) {
  const FreeTheory th({"a", "b"});
  const auto T = theory_presheaf(th);
  const auto AT = plus1(T);
  // f(p, t) = t, transposed and back.
  const PresheafMorphism<ProductPresheaf<TheoryPresheaf<FreeTheory>, TheoryPresheaf<FreeTheory>>,
                         TheoryPresheaf<FreeTheory>>
      f{[](std::size_t, const std::pair<FreeElement, FreeElement>& e) { return e.second; }};
  const auto g = psh_curry<TheoryPresheaf<FreeTheory>, TheoryPresheaf<FreeTheory>>(T, f);
  const auto back = psh_uncurry<TheoryPresheaf<FreeTheory>, TheoryPresheaf<FreeTheory>>(T, g);
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const auto& p : th.enumerate(n)) {
      for (const auto& t : th.enumerate(n)) EXPECT_EQ(back(n, {p, t}), t);
      EXPECT_EQ(g(n, p), th.var(n + 1, n + 1));
    }
  }
  LawReport r;
  check_action_laws_exhaustive(r, AT, "A.", 2, kDefaultFuel);
  EXPECT_EQ(r.verdict(), Verdict::Pass);
}

TEST(Presheaf, LawvereLaws) {
  const FreeTheory th({"a", "b"});
  LawCheckOptions opt;
  opt.samples = 100;
  EXPECT_EQ(check_lawvere_laws(lawvere(th), opt).verdict(), Verdict::Pass);
  const LambdaCalculus lc(TermGenOptions{.allow_self_application = false});
  EXPECT_EQ(check_lawvere_laws(lawvere(lc), opt).verdict(), Verdict::Pass);
  const auto L = lawvere(th);
  const auto id = L.identity(2);
  ASSERT_EQ(id.size(), 2u);
  EXPECT_EQ(L.proj(2, 1)[0], th.var(2, 1));
}

TEST(Presheaf, CategoryStructureOverFreeTheory) {
  const FreeTheory th({"a", "b"});
  const PresheafCategory<FreeTheory> cat(th);
  const PshObject t1{1, 0}, t2{2, 0};
  const auto p = cat.product(t1, t1);
  EXPECT_EQ(p, t2);
  const auto pr1 = cat.proj1(t1, t1), pr2 = cat.proj2(t1, t1);
  const auto pair = cat.pairing(pr2, pr1);
  EXPECT_TRUE(cat.equal(cat.compose(pr1, pair), pr2, kDefaultFuel).is_equal());
  EXPECT_TRUE(cat.equal(cat.compose(pr2, pair), pr1, kDefaultFuel).is_equal());
  EXPECT_TRUE(cat.equal(cat.compose(pr1, pair), pr1, kDefaultFuel).is_distinct());
  const auto e = cat.exponential(t1, t1);
  EXPECT_EQ(e, (PshObject{1, 1}));
  const auto c = cat.curry(t1, t1, pr2);
  EXPECT_EQ(c.dst, e);
  EXPECT_TRUE(cat.equal(cat.uncurry(t1, t1, t1, c), pr2, kDefaultFuel).is_equal());
}

TEST(Presheaf, HylandPhiRoundTrip) {
  const LambdaCalculus lc;
  const HylandCategory cat(lc);
  Rng rng(17);
  for (std::size_t n = 0; n <= 3; ++n) {
    for (int k = 0; k < 20; ++k) {
      const auto t = random_normalizing_term(rng, n, TermGenOptions{.allow_self_application = false});
      ASSERT_TRUE(t.has_value());
      const auto f = hyland_phi_inv(cat, *t);
      EXPECT_EQ(f.src, (PshObject{n, 0}));
      EXPECT_TRUE(beta_eq(hyland_phi(cat, f), *t).is_equal());
    }
  }
  const auto X = hyland_reflexive(cat);
  EXPECT_TRUE(X.retract_cert.is_equal());
}

TEST(Presheaf, HylandSuitePasses) {
  for (std::size_t n = 0; n <= 2; ++n) {
    SampleOptions opt;
    opt.samples = 40;
    const LawReport r = hyland_roundtrip(n, opt);
    EXPECT_EQ(r.verdict(), Verdict::Pass) << r.to_text();
    EXPECT_EQ(r.unknowns(), 0u);
  }
}

TEST(Presheaf, LawSuitesPass) {
  SampleOptions opt;
  opt.samples = 40;
  EXPECT_EQ(presheaf_laws(opt).verdict(), Verdict::Pass);
  EXPECT_EQ(presheaf_laws_exhaustive(FreeTheory({"a", "b"}), 3).verdict(), Verdict::Pass);
}
