#include "scottrep/retracts.hpp"

#include <memory>
#include <vector>

#include "scottrep/combinators.hpp"
#include "scottrep/generate.hpp"
#include "scottrep/syntax.hpp"

namespace scottrep {

void RetractCategory::check(const EqResult& cert, const std::string& what) const {
  if (cert.is_distinct()) throw CertificateError(what + " fails");
  if (cert.is_unknown() && options_.unknown == UnknownPolicy::Error) {
    throw CertificateError(what + " is undecided within fuel " + std::to_string(options_.fuel));
  }
}

RObject RetractCategory::object(const Term& a) const {
  if (a.scope() != 0) throw TermError("objects of R are closed terms");
  const EqResult cert = beta_eq(scottrep::compose(a, a), a, options_.fuel);
  check(cert, "idempotency of " + scottrep::render(a));
  return {a, cert};
}

RMorphism RetractCategory::morphism(const RObject& src, const RObject& dst, const Term& f) const {
  if (f.scope() != 0) throw TermError("morphisms of R are closed terms");
  const EqResult cert = beta_eq(scottrep::compose(dst.term, f), f, options_.fuel) &&
                        beta_eq(scottrep::compose(f, src.term), f, options_.fuel);
  check(cert, "absorption of " + scottrep::render(f) + " : " + scottrep::render(src.term) + " -> " + scottrep::render(dst.term));
  return {src, dst, f, cert};
}

RMorphism RetractCategory::identity(const RObject& a) const { return morphism(a, a, a.term); }

RMorphism RetractCategory::compose(const RMorphism& g, const RMorphism& f) const {
  if (!(f.dst.term == g.src.term)) {
    throw CertificateError("cannot compose: " + scottrep::render(f.dst.term) + " vs " + scottrep::render(g.src.term));
  }
  return morphism(f.src, g.dst, scottrep::compose(g.term, f.term));
}

RObject RetractCategory::terminal() const { return object(I()); }

RMorphism RetractCategory::to_terminal(const RObject& a) const { return morphism(a, terminal(), I()); }

RObject RetractCategory::product(const RObject& a, const RObject& b) const { return object(prod_obj(a.term, b.term)); }

RMorphism RetractCategory::proj1(const RObject& a, const RObject& b) const {
  return morphism(product(a, b), a, scottrep::compose(a.term, proj(1)));
}

RMorphism RetractCategory::proj2(const RObject& a, const RObject& b) const {
  return morphism(product(a, b), b, scottrep::compose(b.term, proj(2)));
}

RMorphism RetractCategory::pairing(const RMorphism& f, const RMorphism& g) const {
  if (!(f.src.term == g.src.term)) throw CertificateError("pairing of morphisms with different sources");
  return morphism(f.src, product(f.dst, g.dst), spair(f.term, g.term));
}

RObject RetractCategory::exponential(const RObject& b, const RObject& c) const {
  return object(exp_obj(b.term, c.term));
}

RMorphism RetractCategory::curry(const RObject& a, const RObject& b, const RMorphism& f) const {
  if (!(f.src.term == prod_obj(a.term, b.term))) throw CertificateError("curry: source is not A × B");
  return morphism(a, exponential(b, f.dst), psi(f.term));
}

RMorphism RetractCategory::uncurry(const RObject& a, const RObject& b, const RObject& c, const RMorphism& g) const {
  if (!(g.src.term == a.term)) throw CertificateError("uncurry: source is not A");
  return morphism(product(a, b), c, psi_inv(g.term));
}

EqResult RetractCategory::equal(const RMorphism& f, const RMorphism& g, std::size_t fuel) const {
  return beta_eq(f.term, g.term, fuel);
}

std::string RetractCategory::render(const RMorphism& f) const { return scottrep::render(f.term); }

RObject RetractCategory::sample_object(Rng& rng, std::size_t depth) const {
  const std::size_t choice = depth == 0 ? rng.below(2) : rng.below(4);
  switch (choice) {
    case 0: return object(U());
    case 1: return terminal();
    case 2: return product(sample_object(rng, depth - 1), sample_object(rng, depth - 1));
    default: return exponential(sample_object(rng, depth - 1), sample_object(rng, depth - 1));
  }
}

RMorphism RetractCategory::sample_morphism(const RObject& a, const RObject& b, Rng& rng) const {
  const Term t = random_closed_combinator(rng, options_.fuel);
  return morphism(a, b, scottrep::compose(b.term, scottrep::compose(t, a.term)));
}

ReflexiveObject<RetractCategory> U_reflexive(const RetractCategory& cat) {
  const RObject u = cat.object(U());
  const RObject uu = cat.exponential(u, u);
  return make_reflexive(cat, u, cat.morphism(uu, u, uu.term), cat.morphism(u, uu, uu.term), cat.options().fuel);
}

namespace {

TermGenOptions scott_generator() {
  TermGenOptions opt;
  opt.allow_self_application = false;
  return opt;
}

Term sample_open_term(Rng& rng, std::size_t n, std::size_t fuel) {
  if (auto t = random_normalizing_term(rng, n, scott_generator(), fuel)) return *t;
  throw std::runtime_error("could not draw a normalizing term");
}

}  // namespace

Term scott_psi(const Term& f, std::size_t n) {
  if (f.scope() != 0) throw TermError("psi_n expects a closed term");
  return mk_app(weaken(f, n), ntuple_at(n, identity_tuple(n, n)));
}

Term scott_psi_inv(const Term& g) {
  const std::size_t n = g.scope();
  const Term x1 = mk_var(1, 1);
  std::vector<Term> args;
  args.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) args.push_back(mk_app(raise(nproj(n, i)), x1));
  return mk_abs(mk_subst(g, std::move(args), 1));
}

RMorphism scott_psi_inv(const ScottTheory& theory, const Term& g) {
  const auto& cat = theory.category();
  return cat.morphism(theory.power(g.scope()), theory.reflexive().carrier, scott_psi_inv(g));
}

Term u_power(std::size_t n) {
  const Term x1 = mk_var(1, 1);
  std::vector<Term> comps;
  comps.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) comps.push_back(mk_app(raise(nproj(n, i)), x1));
  return mk_abs(ntuple_at(1, comps));
}

ScottTheory scott_theory(const RetractCategory& cat) {
  auto x = U_reflexive(cat);
  // The sampler needs U^n exactly as the theory builds it.
  auto powers = std::make_shared<std::vector<RObject>>();
  powers->push_back(cat.terminal());
  const RObject u = x.carrier;
  const std::size_t fuel = cat.options().fuel;
  auto sampler = [&cat, powers, u, fuel](std::size_t n, Rng& rng) {
    while (powers->size() <= n) powers->push_back(cat.product(powers->back(), u));
    return cat.morphism((*powers)[n], u, scott_psi_inv(sample_open_term(rng, n, fuel)));
  };
  return ScottTheory(cat, std::move(x), sampler, "E(U)");
}

LawReport scott_roundtrip(std::size_t n, const SampleOptions& opt) {
  RetractCategory cat({opt.fuel, UnknownPolicy::Warn});
  const ScottTheory E = scott_theory(cat);
  LawReport report;
  report.suite = "scott n=" + std::to_string(n);
  Rng root(opt.seed);
  const std::size_t fuel = opt.fuel;
  const auto show = [](const Term& t) { return render_scoped(t); };

  {
    LawTally& t = report.law("psi_psi_inv");
    Rng rng = root.split();
    for (std::size_t s = 0; s < opt.samples; ++s) {
      const Term g = sample_open_term(rng, n, fuel);
      const Term back = scott_psi(scott_psi_inv(g), n);
      t.record(beta_eq(back, g, fuel), [&] { return "g = " + show(g) + ", psi(psi_inv(g)) = " + show(back); });
    }
  }
  {
    LawTally& t = report.law("psi_inv_psi");
    Rng rng = root.split();
    for (std::size_t s = 0; s < opt.samples; ++s) {
      // Build elements through the theory operations, not only psi^{-1} images.
      const RMorphism f0 = E.sample(n, rng);
      std::vector<RMorphism> g;
      for (std::size_t i = 0; i < n; ++i) g.push_back(E.sample(n, rng));
      const RMorphism f = E.subst(f0, g, n);
      const Term back = scott_psi_inv(scott_psi(f.term, n));
      t.record(beta_eq(back, f.term, fuel), [&] { return "f = " + show(f.term) + ", psi_inv(psi(f)) = " + show(back); });
    }
  }
  {
    LawTally& t = report.law("preserves_var");
    for (std::size_t i = 1; i <= n; ++i) {
      const Term image = scott_psi(E.var(n, i).term, n);
      t.record(beta_eq(image, mk_var(n, i), fuel), [&] { return "psi(x_" + std::to_string(i) + ") = " + show(image); });
    }
  }
  {
    LawTally& t = report.law("preserves_subst");
    Rng rng = root.split();
    for (std::size_t s = 0; s < opt.samples; ++s) {
      const std::size_t m = rng.between(0, 3);
      const RMorphism f = E.sample(m, rng);
      std::vector<RMorphism> g;
      std::vector<Term> psi_g;
      for (std::size_t i = 0; i < m; ++i) {
        g.push_back(E.sample(n, rng));
        psi_g.push_back(scott_psi(g.back().term, n));
      }
      const Term lhs = scott_psi(E.subst(f, g, n).term, n);
      const Term rhs = mk_subst(scott_psi(f.term, m), psi_g, n);
      t.record(beta_eq(lhs, rhs, fuel), [&] { return show(lhs) + " vs " + show(rhs); });
    }
  }
  {
    LawTally& t = report.law("preserves_lam");
    Rng rng = root.split();
    for (std::size_t s = 0; s < opt.samples; ++s) {
      const RMorphism f = E.sample(n + 1, rng);
      const Term lhs = scott_psi(E.lam(n, f).term, n);
      const Term rhs = mk_abs(scott_psi(f.term, n + 1));
      t.record(beta_eq(lhs, rhs, fuel), [&] { return show(lhs) + " vs " + show(rhs); });
    }
  }
  {
    LawTally& t = report.law("preserves_rho");
    Rng rng = root.split();
    for (std::size_t s = 0; s < opt.samples; ++s) {
      const RMorphism g = E.sample(n, rng);
      const Term lhs = scott_psi(E.rho(n, g).term, n + 1);
      const Term rhs = rho(scott_psi(g.term, n));
      t.record(beta_eq(lhs, rhs, fuel), [&] { return show(lhs) + " vs " + show(rhs); });
    }
  }
  {
    LawTally& t = report.law("absorbs_u_power");
    Rng rng = root.split();
    const Term un = u_power(n);
    for (std::size_t s = 0; s < opt.samples; ++s) {
      const Term f = scott_psi_inv(sample_open_term(rng, n, fuel));
      t.record(beta_eq(compose(f, un), f, fuel), [&] { return "f = " + show(f); });
    }
  }
  return report;
}

LawReport retract_ccc_check(const SampleOptions& opt) {
  RetractCategory cat({opt.fuel, UnknownPolicy::Warn});
  LawReport report;
  report.suite = "retracts";
  Rng root(opt.seed);
  const std::size_t fuel = opt.fuel;
  const auto show = [&](const RMorphism& f) { return cat.render(f); };
  const auto eq = [&](LawTally& t, const RMorphism& a, const RMorphism& b) {
    t.record(cat.equal(a, b, fuel), [&] { return show(a) + " vs " + show(b); });
  };

  {
    report.law("left_unit");
    report.law("right_unit");
    Rng rng = root.split();
    for (std::size_t s = 0; s < opt.samples; ++s) {
      const RObject a = cat.sample_object(rng), b = cat.sample_object(rng);
      const RMorphism f = cat.sample_morphism(a, b, rng);
      eq(report.laws[0], cat.compose(cat.identity(b), f), f);
      eq(report.laws[1], cat.compose(f, cat.identity(a)), f);
    }
  }
  {
    LawTally& t = report.law("assoc");
    Rng rng = root.split();
    for (std::size_t s = 0; s < opt.samples; ++s) {
      const RObject a = cat.sample_object(rng), b = cat.sample_object(rng), c = cat.sample_object(rng),
                    d = cat.sample_object(rng);
      const RMorphism f = cat.sample_morphism(a, b, rng), g = cat.sample_morphism(b, c, rng),
                      h = cat.sample_morphism(c, d, rng);
      eq(t, cat.compose(h, cat.compose(g, f)), cat.compose(cat.compose(h, g), f));
    }
  }
  {
    LawTally& t = report.law("terminal_unique");
    Rng rng = root.split();
    const RObject one = cat.terminal();
    for (std::size_t s = 0; s < opt.samples; ++s) {
      const RObject a = cat.sample_object(rng);
      eq(t, cat.sample_morphism(a, one, rng), cat.to_terminal(a));
    }
  }
  {
    report.law("product_beta1");
    report.law("product_beta2");
    report.law("product_eta");
    const std::size_t base = report.laws.size() - 3;
    Rng rng = root.split();
    for (std::size_t s = 0; s < opt.samples; ++s) {
      const RObject z = cat.sample_object(rng), a = cat.sample_object(rng), b = cat.sample_object(rng);
      const RMorphism f = cat.sample_morphism(z, a, rng), g = cat.sample_morphism(z, b, rng);
      const RMorphism fg = cat.pairing(f, g);
      eq(report.laws[base], cat.compose(cat.proj1(a, b), fg), f);
      eq(report.laws[base + 1], cat.compose(cat.proj2(a, b), fg), g);
      const RMorphism h = cat.sample_morphism(z, cat.product(a, b), rng);
      eq(report.laws[base + 2], cat.pairing(cat.compose(cat.proj1(a, b), h), cat.compose(cat.proj2(a, b), h)), h);
    }
  }
  {
    report.law("exp_psi_inv_psi");
    report.law("exp_psi_psi_inv");
    report.law("exp_natural");
    const std::size_t base = report.laws.size() - 3;
    Rng rng = root.split();
    for (std::size_t s = 0; s < opt.samples; ++s) {
      const RObject a = cat.sample_object(rng), b = cat.sample_object(rng), c = cat.sample_object(rng);
      const RMorphism f = cat.sample_morphism(cat.product(a, b), c, rng);
      eq(report.laws[base], cat.uncurry(a, b, c, cat.curry(a, b, f)), f);
      const RMorphism g = cat.sample_morphism(a, cat.exponential(b, c), rng);
      eq(report.laws[base + 1], cat.curry(a, b, cat.uncurry(a, b, c, g)), g);
      const RObject a2 = cat.sample_object(rng);
      const RMorphism h = cat.sample_morphism(a2, a, rng);
      const RMorphism h_x_b = cat.pairing(cat.compose(h, cat.proj1(a2, b)), cat.proj2(a2, b));
      eq(report.laws[base + 2], cat.curry(a2, b, cat.compose(f, h_x_b)), cat.compose(cat.curry(a, b, f), h));
    }
  }
  return report;
}

LawReport u_reflexive_check(std::size_t fuel) {
  RetractCategory cat({fuel, UnknownPolicy::Warn});
  LawReport report;
  report.suite = "U reflexive";
  const auto x = U_reflexive(cat);
  report.law("retract").record(x.retract_cert, [&] { return "app ∘ abs = " + cat.render(cat.compose(x.app, x.abs)); });
  report.law("U_idempotent").record(beta_eq(compose(U(), U()), U(), fuel), [] { return std::string("U ∘ U"); });
  const RMorphism aa = cat.compose(x.abs, x.app);
  const EqResult r = cat.equal(aa, cat.identity(x.carrier), fuel);
  report.law("abs_app_not_identity").record(!r.is_equal(), [&] { return "abs ∘ app = " + cat.render(aa); });
  return report;
}

}  // namespace scottrep
