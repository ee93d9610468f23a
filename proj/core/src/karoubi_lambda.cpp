#include "scottrep/combinators.hpp"
#include "scottrep/generate.hpp"
#include "scottrep/karoubi.hpp"
#include "scottrep/retracts.hpp"
#include "scottrep/syntax.hpp"

namespace scottrep {

EqResult LambdaMonoids::in_L0(const Term& f) const {
  if (f.scope() != 0) throw TermError("L0 holds closed terms");
  return beta_eq(lam(rho(f)), f, fuel);
}

Term LambdaMonoids::op0(const Term& f, const Term& g) const { return compose(f, g); }

Term LambdaMonoids::unit0() const { return lam(unit1()); }

Term LambdaMonoids::op1(const Term& s, const Term& t) const {
  if (s.scope() != 1 || t.scope() != 1) throw TermError("L1 holds terms at scope 1");
  return mk_subst(s, {t}, 1);
}

Term LambdaMonoids::unit1() const { return mk_var(1, 1); }

Term LambdaMonoids::rho(const Term& f) const {
  if (f.scope() != 0) throw TermError("rho : L0 -> L1 expects a closed term");
  return scottrep::rho(f);
}

Term LambdaMonoids::lam(const Term& t) const {
  if (t.scope() != 1) throw TermError("lam : L1 -> L0 expects a term at scope 1");
  return mk_abs(t);
}

LambdaMonoids monoid_L0_L1(std::size_t fuel) { return LambdaMonoids{fuel}; }

namespace {

Term sample_L1(Rng& rng, std::size_t fuel) {
  TermGenOptions opt;
  opt.allow_self_application = false;
  if (auto t = random_normalizing_term(rng, 1, opt, fuel)) return *t;
  throw std::runtime_error("could not draw a normalizing term");
}

}  // namespace

LawReport monoid_iso_check(const SampleOptions& opt) {
  const LambdaMonoids M = monoid_L0_L1(opt.fuel);
  LawReport report;
  report.suite = "L0 ≅ L1";
  Rng rng(opt.seed);
  const auto rec = [&](const char* law, const Term& a, const Term& b) {
    report.law(law).record(beta_eq(a, b, opt.fuel), [&] { return render_scoped(a) + " vs " + render_scoped(b); });
  };
  rec("rho_unit", M.rho(M.unit0()), M.unit1());
  rec("lam_unit", M.lam(M.unit1()), M.unit0());
  for (std::size_t s = 0; s < opt.samples; ++s) {
    const Term f = random_closed_combinator(rng, opt.fuel);
    const Term g = random_closed_combinator(rng, opt.fuel);
    const Term h = random_closed_combinator(rng, opt.fuel);
    report.law("L0_membership").record(M.in_L0(f), [&] { return render_scoped(f); });
    rec("L0_left_unit", M.op0(M.unit0(), f), f);
    rec("L0_right_unit", M.op0(f, M.unit0()), f);
    rec("L0_assoc", M.op0(M.op0(f, g), h), M.op0(f, M.op0(g, h)));
    rec("lam_rho", M.lam(M.rho(f)), f);
    rec("rho_hom", M.rho(M.op0(f, g)), M.op1(M.rho(f), M.rho(g)));

    const Term s1 = sample_L1(rng, opt.fuel), t1 = sample_L1(rng, opt.fuel), u1 = sample_L1(rng, opt.fuel);
    rec("L1_left_unit", M.op1(M.unit1(), s1), s1);
    rec("L1_right_unit", M.op1(s1, M.unit1()), s1);
    rec("L1_assoc", M.op1(M.op1(s1, t1), u1), M.op1(s1, M.op1(t1, u1)));
    rec("rho_lam", M.rho(M.lam(s1)), s1);
    rec("lam_hom", M.lam(M.op1(s1, t1)), M.op0(M.lam(s1), M.lam(t1)));
  }
  return report;
}

LawReport r_as_karoubi_check(const SampleOptions& opt) {
  const LambdaMonoids M = monoid_L0_L1(opt.fuel);
  const RetractCategory cat({opt.fuel, UnknownPolicy::Warn});
  LawReport report;
  report.suite = "R as set_karoubi(M(L0))";
  Rng rng(opt.seed);
  const auto eq = [&](const Term& a, const Term& b) { return beta_eq(a, b, opt.fuel); };
  for (const Term& fixed : {U(), I()}) {
    report.law("object_membership").record(M.in_L0(fixed), [&] { return render_scoped(fixed); });
  }
  for (std::size_t s = 0; s < opt.samples; ++s) {
    const RObject a = cat.sample_object(rng), b = cat.sample_object(rng), c = cat.sample_object(rng);
    report.law("object_membership").record(M.in_L0(a.term), [&] { return render_scoped(a.term); });
    report.law("object_idempotent").record(eq(M.op0(a.term, a.term), a.term), [&] { return render_scoped(a.term); });
    report.law("identity_agrees").record(cat.identity(a).term == a.term, [&] { return render_scoped(a.term); });

    const RMorphism f = cat.sample_morphism(a, b, rng);
    const RMorphism g = cat.sample_morphism(b, c, rng);
    report.law("morphism_membership").record(M.in_L0(f.term), [&] { return render_scoped(f.term); });
    report.law("morphism_condition").record(eq(M.op0(M.op0(b.term, f.term), a.term), f.term),
                                            [&] { return render_scoped(f.term); });
    const Term gf = M.op0(g.term, f.term);
    report.law("composite_agrees")
        .record(eq(cat.compose(g, f).term, gf) && eq(M.op0(M.op0(c.term, gf), a.term), gf),
                [&] { return render_scoped(gf); });
  }
  return report;
}

}  // namespace scottrep
