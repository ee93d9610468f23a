#include "scottrep/presheaf.hpp"

#include <algorithm>

#include "scottrep/free_theory.hpp"
#include "scottrep/generate.hpp"
#include "scottrep/syntax.hpp"

namespace scottrep {

namespace {

TermGenOptions hyland_generator() {
  TermGenOptions opt;
  opt.allow_self_application = false;
  return opt;
}

Term normalizing_sample(Rng& rng, std::size_t n, std::size_t fuel) {
  if (auto t = random_normalizing_term(rng, n, hyland_generator(), fuel)) return *t;
  throw std::runtime_error("could not draw a normalizing term");
}

using Terms = std::vector<Term>;

Terms sample_terms(Rng& rng, std::size_t len, std::size_t n, std::size_t fuel) {
  Terms out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) out.push_back(normalizing_sample(rng, n, fuel));
  return out;
}

}  // namespace

HylandCategory::HylandCategory(const LambdaCalculus& th, std::size_t fuel)
    : PresheafCategory<LambdaCalculus>(th, [fuel](std::size_t n, Rng& rng) { return normalizing_sample(rng, n, fuel); }) {}

ReflexiveObject<HylandCategory> hyland_reflexive(const HylandCategory& cat) {
  const auto& th = cat.theory();
  const PshObject x{1, 0};
  const PshObject xx = cat.exponential(x, x);
  auto abs = cat.from_family(xx, x, [&th](std::size_t n, const Terms& q) { return Terms{th.lam(n, q[0])}; });
  auto app = cat.from_germ(x, xx, {th.rho(1, th.var(1, 1))});
  return make_reflexive(cat, x, std::move(abs), std::move(app));
}

HylandTheory hyland_theory(const HylandCategory& cat) {
  return HylandTheory(cat, hyland_reflexive(cat), [&cat](std::size_t n, Rng& rng) {
    return cat.from_germ({n, 0}, {1, 0}, cat.sample_element({1, 0}, n, rng));
  }, "E(H(lambda))");
}

Term hyland_phi(const HylandCategory& cat, const PshMorphism<LambdaCalculus>& f) {
  if (!(f.dst == PshObject{1, 0})) throw std::invalid_argument("phi expects a morphism into L");
  return cat.germ_of(f)[0];
}

PshMorphism<LambdaCalculus> hyland_phi_inv(const HylandCategory& cat, const Term& t) {
  return cat.from_germ({t.scope(), 0}, {1, 0}, {t});
}

namespace {

// Action laws of L, A(L) and L^n, plus the naturality of the lam and rho
// families and of a Yoneda-induced family.
void presheaf_structure_laws(LawReport& report, const LambdaCalculus& th, std::size_t n, std::size_t samples,
                             std::size_t max_scope, Rng& root, std::size_t fuel) {
  const auto L = theory_presheaf(th);
  const auto AL = plus1(L);
  const PowerPresheaf<LambdaCalculus> Ln(th, n);
  {
    Rng rng = root.split();
    check_action_laws(report, L, "L.", samples, max_scope, rng, fuel);
  }
  {
    Rng rng = root.split();
    check_action_laws(report, AL, "plus1.", samples, max_scope, rng, fuel);
  }
  {
    Rng rng = root.split();
    check_action_laws(report, Ln, "power.", samples, max_scope, rng, fuel);
  }
  {
    Rng rng = root.split();
    const PresheafMorphism<Plus1<TheoryPresheaf<LambdaCalculus>>, TheoryPresheaf<LambdaCalculus>> lam{
        [&th](std::size_t k, const Term& q) { return th.lam(k, q); }};
    check_naturality(report.law("lam_natural"), AL, L, lam, samples, max_scope, rng, fuel);
  }
  {
    Rng rng = root.split();
    const PresheafMorphism<TheoryPresheaf<LambdaCalculus>, Plus1<TheoryPresheaf<LambdaCalculus>>> rho{
        [&th](std::size_t k, const Term& g) { return th.rho(k, g); }};
    check_naturality(report.law("rho_natural"), L, AL, rho, samples, max_scope, rng, fuel);
  }
  {
    Rng rng = root.split();
    LawTally& t = report.law("yoneda_natural");
    for (std::size_t s = 0; s < samples; ++s) {
      const auto f = yoneda_to(L, normalizing_sample(rng, n, fuel));
      Rng inner = rng.split();
      check_naturality(t, Ln, L, f, 1, max_scope, inner, fuel);
    }
  }
}

// hom(L^n × L, L) ≅ hom(L^n, A(L)) through psh_curry, psh_uncurry and eval.
void exponential_laws(LawReport& report, const LambdaCalculus& th, std::size_t n, std::size_t samples,
                      std::size_t max_scope, Rng& root, std::size_t fuel) {
  using LP = TheoryPresheaf<LambdaCalculus>;
  using Pn = PowerPresheaf<LambdaCalculus>;
  const LP L(th);
  const Pn Ln(th, n);
  report.law("exp_uncurry_curry");
  report.law("exp_curry_uncurry");
  const std::size_t base = report.laws.size() - 2;
  Rng rng = root.split();
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t m = rng.between(0, max_scope);
    const Terms x = sample_terms(rng, n, m, fuel);
    const Term t = normalizing_sample(rng, m, fuel);

    const Term q = normalizing_sample(rng, n + 1, fuel);
    const PresheafMorphism<ProductPresheaf<Pn, LP>, LP> f{[q, &th](std::size_t k, const std::pair<Terms, Term>& e) {
      Terms args = e.first;
      args.push_back(e.second);
      return th.subst(q, args, k);
    }};
    const auto back = psh_uncurry<Pn, LP>(L, psh_curry<Pn, LP>(Ln, f));
    const Term lhs = back(m, {x, t}), rhs = f(m, {x, t});
    report.laws[base].record(th.eq(lhs, rhs, m, fuel), [&] { return render_scoped(lhs) + " vs " + render_scoped(rhs); });

    const Term r = normalizing_sample(rng, n + 1, fuel);
    const auto AL = plus1(L);
    const PresheafMorphism<Pn, Plus1<LP>> g{[r, AL](std::size_t k, const Terms& y) { return AL.act(r, y, k); }};
    const auto again = psh_curry<Pn, LP>(Ln, psh_uncurry<Pn, LP>(L, g));
    const Term lhs2 = again(m, x), rhs2 = g(m, x);
    report.laws[base + 1].record(th.eq(lhs2, rhs2, m + 1, fuel),
                                 [&] { return render_scoped(lhs2) + " vs " + render_scoped(rhs2); });
  }
}

}  // namespace

LawReport hyland_roundtrip(std::size_t n, const SampleOptions& opt) {
  const LambdaCalculus th(hyland_generator());
  const HylandCategory cat(th, opt.fuel);
  const HylandTheory E = hyland_theory(cat);
  LawReport report;
  report.suite = "hyland n=" + std::to_string(n);
  Rng root(opt.seed);
  const std::size_t fuel = opt.fuel;
  const std::size_t S = 3;
  const auto phi = [&](const PshMorphism<LambdaCalculus>& f) { return hyland_phi(cat, f); };
  const auto rec = [&](LawTally& t, const Term& a, const Term& b) {
    t.record(beta_eq(a, b, fuel), [&] { return render_scoped(a) + " vs " + render_scoped(b); });
  };

  {
    LawTally& t = report.law("phi_phi_inv");
    Rng rng = root.split();
    for (std::size_t s = 0; s < opt.samples; ++s) {
      const Term g = normalizing_sample(rng, n, fuel);
      rec(t, phi(hyland_phi_inv(cat, g)), g);
    }
  }
  {
    // A family given pointwise, never through its germ:
    // f_m(s) = lam(g • (iota_{m,1}(s_i))_i + (x_{m+1})).
    LawTally& t = report.law("phi_inv_phi");
    Rng rng = root.split();
    for (std::size_t s = 0; s < opt.samples; ++s) {
      const Term g = normalizing_sample(rng, n + 1, fuel);
      const auto f = cat.from_family({n, 0}, {1, 0}, [&th, g](std::size_t m, const Terms& x) {
        return Terms{th.lam(m, th.subst(g, extend_tuple(th, std::span<const Term>(x), m), m + 1))};
      });
      const auto round = hyland_phi_inv(cat, phi(f));
      const std::size_t m = rng.between(0, S);
      const Terms x = sample_terms(rng, n, m, fuel);
      rec(t, cat.apply(round, m, x)[0], f.family(m, x)[0]);
    }
  }
  {
    LawTally& t = report.law("preserves_var");
    for (std::size_t i = 1; i <= n; ++i) rec(t, phi(E.var(n, i)), th.var(n, i));
  }
  {
    LawTally& t = report.law("preserves_subst");
    Rng rng = root.split();
    for (std::size_t s = 0; s < opt.samples; ++s) {
      const std::size_t m = rng.between(0, S);
      const auto f = E.sample(m, rng);
      std::vector<PshMorphism<LambdaCalculus>> g;
      Terms phig;
      for (std::size_t i = 0; i < m; ++i) {
        g.push_back(E.sample(n, rng));
        phig.push_back(phi(g.back()));
      }
      rec(t, phi(E.subst(f, g, n)), th.subst(phi(f), phig, n));
    }
  }
  {
    LawTally& t = report.law("preserves_lam");
    Rng rng = root.split();
    for (std::size_t s = 0; s < opt.samples; ++s) {
      const auto f = E.sample(n + 1, rng);
      rec(t, phi(E.lam(n, f)), th.lam(n, phi(f)));
    }
  }
  {
    LawTally& t = report.law("preserves_rho");
    Rng rng = root.split();
    for (std::size_t s = 0; s < opt.samples; ++s) {
      const auto g = E.sample(n, rng);
      rec(t, phi(E.rho(n, g)), th.rho(n, phi(g)));
    }
  }
  {
    LawTally& t = report.law("retract");
    t.record(E.reflexive().retract_cert, [] { return std::string("app ∘ abs on probes"); });
    Rng rng = root.split();
    const auto& x = E.reflexive();
    const auto ra = cat.compose(x.app, x.abs);
    for (std::size_t s = 0; s < opt.samples; ++s) {
      const std::size_t m = rng.between(0, S);
      const Terms q = cat.sample_element(x.app.dst, m, rng);
      rec(t, cat.apply(ra, m, q)[0], q[0]);
    }
  }
  presheaf_structure_laws(report, th, n, opt.samples, S, root, fuel);
  exponential_laws(report, th, n, opt.samples, S, root, fuel);
  return report;
}

LawReport presheaf_laws(const SampleOptions& opt, std::size_t max_scope) {
  const LambdaCalculus th(hyland_generator());
  LawReport report;
  report.suite = "presheaf(lambda)";
  Rng root(opt.seed);
  for (std::size_t n = 0; n <= max_scope; ++n) {
    LawReport part;
    presheaf_structure_laws(part, th, n, opt.samples, max_scope, root, opt.fuel);
    exponential_laws(part, th, n, opt.samples, max_scope, root, opt.fuel);
    report.append(part, "n=" + std::to_string(n) + ".");
  }
  report.append(check_lawvere_laws(lawvere(th), {opt.samples, root.next(), opt.fuel, max_scope}), "lawvere.");
  const HylandCategory cat(th, opt.fuel);
  const HylandTheory E = hyland_theory(cat);
  report.append(check_theory_laws(E, {opt.samples, root.next(), opt.fuel, max_scope}), "E(H).");
  return report;
}

LawReport presheaf_laws_exhaustive(const FreeTheory& th, std::size_t max_scope) {
  using E = FreeElement;
  using Hom = std::vector<E>;
  LawReport report;
  report.suite = "presheaf(" + th.name() + ") (exhaustive)";
  const auto T = theory_presheaf(th);
  check_action_laws_exhaustive(report, T, "T.", max_scope, 0);
  if (max_scope > 0) check_action_laws_exhaustive(report, plus1(T), "plus1.", max_scope - 1, 0);

  // Lawvere laws over every hom, associativity up to scope 2.
  const auto L = lawvere(th);
  std::vector<std::vector<E>> car;
  for (std::size_t n = 0; n <= max_scope; ++n) car.push_back(th.enumerate(n));
  const auto homs = [&](std::size_t m, std::size_t n) {
    std::vector<Hom> out;
    detail::for_each_tuple(car[m], n, [&](std::span<const E> h) { out.emplace_back(h.begin(), h.end()); });
    return out;
  };
  for (const char* name : {"lawvere.left_unit", "lawvere.right_unit", "lawvere.assoc", "lawvere.pairing_eta"}) {
    report.law(name);
  }
  const std::size_t base = report.laws.size() - 4;
  const auto rec = [&](std::size_t law, const Hom& a, const Hom& b, std::size_t m) {
    report.laws[base + law].record(L.eq(a, b, m, 0), [&] { return L.render(a) + " vs " + L.render(b); });
  };
  for (std::size_t m = 0; m <= max_scope; ++m) {
    for (std::size_t n = 0; n <= max_scope; ++n) {
      for (const Hom& f : homs(m, n)) {
        rec(0, L.compose(L.identity(n), f, m), f, m);
        rec(1, L.compose(f, L.identity(m), m), f, m);
        std::vector<Hom> parts;
        for (std::size_t i = 1; i <= n; ++i) parts.push_back(L.compose(L.proj(n, i), f, m));
        rec(3, L.pairing(parts), f, m);
      }
    }
  }
  const std::size_t A = std::min<std::size_t>(max_scope, 2);
  for (std::size_t a = 0; a <= A; ++a) {
    for (std::size_t b = 0; b <= A; ++b) {
      for (std::size_t c = 0; c <= A; ++c) {
        for (std::size_t d = 0; d <= A; ++d) {
          const auto fs = homs(a, b), gs = homs(b, c), hs = homs(c, d);
          for (const Hom& f : fs) {
            for (const Hom& g : gs) {
              const Hom gf = L.compose(g, f, a);
              for (const Hom& h : hs) rec(2, L.compose(h, gf, a), L.compose(L.compose(h, g, b), f, a), a);
            }
          }
        }
      }
    }
  }
  return report;
}

}  // namespace scottrep
