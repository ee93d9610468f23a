#pragma once

#include <concepts>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "scottrep/ccc.hpp"
#include "scottrep/lambda_calculus.hpp"
#include "scottrep/law_report.hpp"
#include "scottrep/normalize.hpp"
#include "scottrep/rng.hpp"
#include "scottrep/theory.hpp"

namespace scottrep {

class FreeTheory;

// A presheaf over an algebraic theory T: carriers P_n with a right action
// p • f in P_n for p in P_m and f in T_n^m.
template <class P>
concept Presheaf = requires(const P& p, const typename P::Element& e,
                            std::span<const typename P::Theory::Element> f, std::size_t n, std::size_t fuel,
                            Rng& rng) {
  typename P::Theory;
  typename P::Element;
  { p.theory() } -> std::same_as<const typename P::Theory&>;
  { p.act(e, f, n) } -> std::same_as<typename P::Element>;
  { p.eq(e, e, n, fuel) } -> std::same_as<EqResult>;
  { p.sample(n, rng) } -> std::same_as<typename P::Element>;
  { p.render(e) } -> std::convertible_to<std::string>;
  { p.name() } -> std::convertible_to<std::string>;
};

// T acting on itself by substitution.
template <AlgebraicTheory T>
class TheoryPresheaf {
 public:
  using Theory = T;
  using Element = ElementOf<T>;

  explicit TheoryPresheaf(const T& th) : th_(&th) {}

  const T& theory() const noexcept { return *th_; }
  Element act(const Element& p, std::span<const Element> f, std::size_t n) const { return th_->subst(p, f, n); }
  EqResult eq(const Element& a, const Element& b, std::size_t n, std::size_t fuel) const {
    return th_->eq(a, b, n, fuel);
  }
  Element sample(std::size_t n, Rng& rng) const { return th_->sample(n, rng); }
  std::vector<Element> enumerate(std::size_t n) const
    requires EnumerableTheory<T>
  {
    return th_->enumerate(n);
  }
  std::string render(const Element& e) const { return th_->render(e); }
  std::string name() const { return th_->name(); }

 private:
  const T* th_;
};

template <AlgebraicTheory T>
TheoryPresheaf<T> theory_presheaf(const T& th) {
  return TheoryPresheaf<T>(th);
}

// A(Q)_n = Q_{n+1}, with q • f = q •_Q (iota_{n,1}(f_1), .., iota_{n,1}(f_m), x_{n+1}).
template <Presheaf Q>
class Plus1 {
 public:
  using Theory = typename Q::Theory;
  using Element = typename Q::Element;

  explicit Plus1(Q base) : base_(std::move(base)) {}

  const Theory& theory() const noexcept { return base_.theory(); }
  const Q& base() const noexcept { return base_; }
  Element act(const Element& q, std::span<const ElementOf<Theory>> f, std::size_t n) const {
    const auto ext = extend_tuple(theory(), f, n);
    return base_.act(q, ext, n + 1);
  }
  EqResult eq(const Element& a, const Element& b, std::size_t n, std::size_t fuel) const {
    return base_.eq(a, b, n + 1, fuel);
  }
  Element sample(std::size_t n, Rng& rng) const { return base_.sample(n + 1, rng); }
  std::vector<Element> enumerate(std::size_t n) const
    requires requires(const Q& q) { q.enumerate(n); }
  {
    return base_.enumerate(n + 1);
  }
  std::string render(const Element& e) const { return base_.render(e); }
  std::string name() const { return "plus1(" + base_.name() + ")"; }

 private:
  Q base_;
};

template <Presheaf Q>
Plus1<Q> plus1(Q q) {
  return Plus1<Q>(std::move(q));
}

// (P × Q)_n = P_n × Q_n with the componentwise action.
template <Presheaf P, Presheaf Q>
  requires std::same_as<typename P::Theory, typename Q::Theory>
class ProductPresheaf {
 public:
  using Theory = typename P::Theory;
  using Element = std::pair<typename P::Element, typename Q::Element>;

  ProductPresheaf(P p, Q q) : p_(std::move(p)), q_(std::move(q)) {}

  const Theory& theory() const noexcept { return p_.theory(); }
  const P& first() const noexcept { return p_; }
  const Q& second() const noexcept { return q_; }
  Element act(const Element& e, std::span<const ElementOf<Theory>> f, std::size_t n) const {
    return {p_.act(e.first, f, n), q_.act(e.second, f, n)};
  }
  EqResult eq(const Element& a, const Element& b, std::size_t n, std::size_t fuel) const {
    return p_.eq(a.first, b.first, n, fuel) && q_.eq(a.second, b.second, n, fuel);
  }
  Element sample(std::size_t n, Rng& rng) const {
    auto a = p_.sample(n, rng);
    return {std::move(a), q_.sample(n, rng)};
  }
  std::string render(const Element& e) const { return "(" + p_.render(e.first) + ", " + q_.render(e.second) + ")"; }
  std::string name() const { return p_.name() + " × " + q_.name(); }

 private:
  P p_;
  Q q_;
};

template <Presheaf P, Presheaf Q>
ProductPresheaf<P, Q> psh_product(P p, Q q) {
  return ProductPresheaf<P, Q>(std::move(p), std::move(q));
}

// T^k with (T^k)_n = T_n^k.  Isomorphic to the k-fold psh_product of the
// theory presheaf; vectors avoid the nesting.
template <AlgebraicTheory T>
class PowerPresheaf {
 public:
  using Theory = T;
  using Element = std::vector<ElementOf<T>>;

  PowerPresheaf(const T& th, std::size_t k) : th_(&th), k_(k) {}

  const T& theory() const noexcept { return *th_; }
  std::size_t arity() const noexcept { return k_; }
  Element act(const Element& p, std::span<const ElementOf<T>> f, std::size_t n) const {
    Element out;
    out.reserve(p.size());
    for (const auto& x : p) out.push_back(th_->subst(x, f, n));
    return out;
  }
  EqResult eq(const Element& a, const Element& b, std::size_t n, std::size_t fuel) const {
    if (a.size() != b.size()) return EqResult::distinct();
    EqResult r = EqResult::equal();
    for (std::size_t i = 0; i < a.size(); ++i) r = r && th_->eq(a[i], b[i], n, fuel);
    return r;
  }
  Element sample(std::size_t n, Rng& rng) const {
    Element out;
    out.reserve(k_);
    for (std::size_t i = 0; i < k_; ++i) out.push_back(th_->sample(n, rng));
    return out;
  }
  std::string render(const Element& e) const { return detail::render_tuple(*th_, std::span<const ElementOf<T>>(e)); }
  std::string name() const { return th_->name() + "^" + std::to_string(k_); }

 private:
  const T* th_;
  std::size_t k_;
};

// A family f_n : P_n -> Q_n.  Naturality is a sampled property, not a
// construction invariant.
template <Presheaf P, Presheaf Q>
struct PresheafMorphism {
  std::function<typename Q::Element(std::size_t n, const typename P::Element&)> apply;

  typename Q::Element operator()(std::size_t n, const typename P::Element& e) const { return apply(n, e); }
};

// f_n(p • g) = f_m(p) • g on sampled p in P_m and g in T_n^m.
template <Presheaf P, Presheaf Q>
void check_naturality(LawTally& tally, const P& p, const Q& q, const PresheafMorphism<P, Q>& f, std::size_t samples,
                      std::size_t max_scope, Rng& rng, std::size_t fuel) {
  const auto& th = p.theory();
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t m = rng.between(0, max_scope), n = rng.between(0, max_scope);
    const auto x = p.sample(m, rng);
    const auto g = detail::sample_tuple(th, m, n, rng);
    const auto lhs = f(n, p.act(x, g, n));
    const auto rhs = q.act(f(m, x), g, n);
    tally.record(q.eq(lhs, rhs, n, fuel), [&] {
      return "p = " + p.render(x) + ", g = " + detail::render_tuple(th, std::span<const ElementOf<std::remove_cvref_t<decltype(th)>>>(g)) +
             ": " + q.render(lhs) + " vs " + q.render(rhs);
    });
  }
}

// p • (x_i)_i = p and (p • g) • h = p • (g_i • h)_i on samples.
template <Presheaf P>
void check_action_laws(LawReport& report, const P& p, const std::string& prefix, std::size_t samples,
                       std::size_t max_scope, Rng& rng, std::size_t fuel) {
  const auto& th = p.theory();
  using TE = ElementOf<std::remove_cvref_t<decltype(th)>>;
  {
    LawTally& t = report.law(prefix + "act_identity");
    for (std::size_t s = 0; s < samples; ++s) {
      const std::size_t n = rng.between(0, max_scope);
      const auto x = p.sample(n, rng);
      const auto id = variables(th, n);
      const auto lhs = p.act(x, id, n);
      t.record(p.eq(lhs, x, n, fuel), [&] { return "p = " + p.render(x) + ", p • id = " + p.render(lhs); });
    }
  }
  {
    LawTally& t = report.law(prefix + "act_assoc");
    for (std::size_t s = 0; s < samples; ++s) {
      const std::size_t l = rng.between(0, max_scope), m = rng.between(0, max_scope), n = rng.between(0, max_scope);
      const auto x = p.sample(l, rng);
      const auto g = detail::sample_tuple(th, l, m, rng);
      const auto h = detail::sample_tuple(th, m, n, rng);
      std::vector<TE> gh;
      for (const auto& gi : g) gh.push_back(th.subst(gi, h, n));
      const auto lhs = p.act(p.act(x, g, m), h, n);
      const auto rhs = p.act(x, gh, n);
      t.record(p.eq(lhs, rhs, n, fuel), [&] { return "p = " + p.render(x) + ": " + p.render(lhs) + " vs " + p.render(rhs); });
    }
  }
}

// The same two laws over every element and tuple, for finite carriers.
template <Presheaf P>
  requires requires(const P& p, std::size_t n) { p.enumerate(n); }
void check_action_laws_exhaustive(LawReport& report, const P& p, const std::string& prefix, std::size_t max_scope,
                                  std::size_t fuel) {
  const auto& th = p.theory();
  using TE = ElementOf<std::remove_cvref_t<decltype(th)>>;
  std::vector<std::vector<TE>> tcar;
  for (std::size_t n = 0; n <= max_scope; ++n) tcar.push_back(th.enumerate(n));
  report.law(prefix + "act_identity");
  report.law(prefix + "act_assoc");
  const std::size_t base = report.laws.size() - 2;
  for (std::size_t n = 0; n <= max_scope; ++n) {
    const auto id = variables(th, n);
    for (const auto& x : p.enumerate(n)) {
      const auto lhs = p.act(x, id, n);
      report.laws[base].record(p.eq(lhs, x, n, fuel), [&] { return "p = " + p.render(x); });
    }
  }
  for (std::size_t l = 0; l <= max_scope; ++l) {
    const auto xs = p.enumerate(l);
    for (std::size_t m = 0; m <= max_scope; ++m) {
      for (std::size_t n = 0; n <= max_scope; ++n) {
        detail::for_each_tuple(tcar[m], l, [&](std::span<const TE> g) {
          detail::for_each_tuple(tcar[n], m, [&](std::span<const TE> h) {
            std::vector<TE> gh;
            for (const auto& gi : g) gh.push_back(th.subst(gi, h, n));
            for (const auto& x : xs) {
              const auto lhs = p.act(p.act(x, g, m), h, n);
              const auto rhs = p.act(x, gh, n);
              report.laws[base + 1].record(p.eq(lhs, rhs, n, fuel), [&] { return "p = " + p.render(x); });
            }
          });
        });
      }
    }
  }
}

// The Yoneda bijection hom(T^n, Q) ≅ Q_n: a germ q acts on tuples, and a
// morphism is sent to its value at the generic element (x_1, .., x_n).
template <Presheaf Q>
PresheafMorphism<PowerPresheaf<typename Q::Theory>, Q> yoneda_to(const Q& q, typename Q::Element germ) {
  return {[q, germ = std::move(germ)](std::size_t n, const std::vector<ElementOf<typename Q::Theory>>& t) {
    return q.act(germ, t, n);
  }};
}

template <Presheaf Q>
typename Q::Element yoneda_from(const PowerPresheaf<typename Q::Theory>& src,
                                const PresheafMorphism<PowerPresheaf<typename Q::Theory>, Q>& m) {
  return m(src.arity(), variables(src.theory(), src.arity()));
}

// eval : A(Q) × T -> Q, (q, t) ↦ q • (x_1, .., x_n, t).
template <Presheaf Q>
PresheafMorphism<ProductPresheaf<Plus1<Q>, TheoryPresheaf<typename Q::Theory>>, Q> psh_eval(const Q& q) {
  return {[q](std::size_t n, const std::pair<typename Q::Element, ElementOf<typename Q::Theory>>& e) {
    auto args = variables(q.theory(), n);
    args.push_back(e.second);
    return q.act(e.first, args, n);
  }};
}

// hom(P × T, Q) -> hom(P, A(Q)): curry(f)_n(p) = f_{n+1}(iota_{n,1}(p), x_{n+1}).
template <Presheaf P, Presheaf Q>
PresheafMorphism<P, Plus1<Q>> psh_curry(
    const P& p, const PresheafMorphism<ProductPresheaf<P, TheoryPresheaf<typename Q::Theory>>, Q>& f) {
  return {[p, f](std::size_t n, const typename P::Element& x) {
    const auto& th = p.theory();
    std::vector<ElementOf<typename Q::Theory>> prefix;
    for (std::size_t i = 1; i <= n; ++i) prefix.push_back(th.var(n + 1, i));
    return f(n + 1, {p.act(x, prefix, n + 1), th.var(n + 1, n + 1)});
  }};
}

// hom(P, A(Q)) -> hom(P × T, Q): eval ∘ (g × id).
template <Presheaf P, Presheaf Q>
PresheafMorphism<ProductPresheaf<P, TheoryPresheaf<typename Q::Theory>>, Q> psh_uncurry(
    const Q& q, const PresheafMorphism<P, Plus1<Q>>& g) {
  const auto eval = psh_eval(q);
  return {[eval, g](std::size_t n, const std::pair<typename P::Element, ElementOf<typename Q::Theory>>& e) {
    return eval(n, {g(n, e.first), e.second});
  }};
}

// The Lawvere theory of T: objects are naturals and hom(m, n) = T_m^n.
template <AlgebraicTheory T>
class LawvereCategory {
 public:
  using Hom = std::vector<ElementOf<T>>;

  explicit LawvereCategory(const T& th) : th_(&th) {}

  const T& theory() const noexcept { return *th_; }
  Hom identity(std::size_t n) const { return variables(*th_, n); }
  // g : m -> n after f : l -> m is (g_i • f)_i.
  Hom compose(const Hom& g, const Hom& f, std::size_t l) const {
    Hom out;
    out.reserve(g.size());
    for (const auto& gi : g) out.push_back(th_->subst(gi, f, l));
    return out;
  }
  Hom proj(std::size_t n, std::size_t i) const { return {th_->var(n, i)}; }
  Hom pairing(std::span<const Hom> fs) const {
    Hom out;
    for (const Hom& f : fs) out.insert(out.end(), f.begin(), f.end());
    return out;
  }
  EqResult eq(const Hom& a, const Hom& b, std::size_t m, std::size_t fuel) const {
    if (a.size() != b.size()) return EqResult::distinct();
    EqResult r = EqResult::equal();
    for (std::size_t i = 0; i < a.size(); ++i) r = r && th_->eq(a[i], b[i], m, fuel);
    return r;
  }
  Hom sample(std::size_t m, std::size_t n, Rng& rng) const { return detail::sample_tuple(*th_, n, m, rng); }
  std::string render(const Hom& h) const { return detail::render_tuple(*th_, std::span<const ElementOf<T>>(h)); }

 private:
  const T* th_;
};

template <AlgebraicTheory T>
LawvereCategory<T> lawvere(const T& th) {
  return LawvereCategory<T>(th);
}

// Unit and associativity, and that n is the n-fold power of 1:
// p_i ∘ ⟨f_1, .., f_n⟩ = f_i and ⟨p_1 ∘ h, .., p_n ∘ h⟩ = h.
template <AlgebraicTheory T>
LawReport check_lawvere_laws(const LawvereCategory<T>& L, const LawCheckOptions& opt = {}) {
  using Hom = typename LawvereCategory<T>::Hom;
  LawReport report;
  report.suite = "lawvere(" + L.theory().name() + ")";
  Rng root(opt.seed);
  const std::size_t S = opt.max_scope;
  const auto rec = [&](LawTally& t, const Hom& a, const Hom& b, std::size_t m) {
    t.record(L.eq(a, b, m, opt.fuel), [&] { return L.render(a) + " vs " + L.render(b); });
  };
  {
    report.law("left_unit");
    report.law("right_unit");
    Rng rng = root.split();
    for (std::size_t s = 0; s < opt.samples; ++s) {
      const std::size_t m = rng.between(0, S), n = rng.between(0, S);
      const Hom f = L.sample(m, n, rng);
      rec(report.laws[0], L.compose(L.identity(n), f, m), f, m);
      rec(report.laws[1], L.compose(f, L.identity(m), m), f, m);
    }
  }
  {
    LawTally& t = report.law("assoc");
    Rng rng = root.split();
    for (std::size_t s = 0; s < opt.samples; ++s) {
      const std::size_t a = rng.between(0, S), b = rng.between(0, S), c = rng.between(0, S), d = rng.between(0, S);
      const Hom f = L.sample(a, b, rng), g = L.sample(b, c, rng), h = L.sample(c, d, rng);
      rec(t, L.compose(h, L.compose(g, f, a), a), L.compose(L.compose(h, g, b), f, a), a);
    }
  }
  {
    LawTally& t = report.law("proj_pairing");
    Rng rng = root.split();
    for (std::size_t s = 0; s < opt.samples; ++s) {
      const std::size_t l = rng.between(0, S), n = rng.between(1, std::max<std::size_t>(S, 1));
      std::vector<Hom> fs;
      for (std::size_t i = 0; i < n; ++i) fs.push_back(L.sample(l, 1, rng));
      const Hom pair = L.pairing(fs);
      const std::size_t i = rng.between(1, n);
      rec(t, L.compose(L.proj(n, i), pair, l), fs[i - 1], l);
    }
  }
  {
    LawTally& t = report.law("pairing_eta");
    Rng rng = root.split();
    for (std::size_t s = 0; s < opt.samples; ++s) {
      const std::size_t l = rng.between(0, S), n = rng.between(0, S);
      const Hom h = L.sample(l, n, rng);
      std::vector<Hom> parts;
      for (std::size_t i = 1; i <= n; ++i) parts.push_back(L.compose(L.proj(n, i), h, l));
      rec(t, L.pairing(parts), h, l);
    }
  }
  return report;
}

// Objects of the presheaf category used for E(H(T)): (T^k)^(T^s), whose
// carrier at n is T_{n+s}^k.  s = 0 gives the representable powers, s = 1
// with k = 1 the exponential T^T = A(T).
struct PshObject {
  std::size_t arity = 1;
  std::size_t shift = 0;

  friend bool operator==(const PshObject&, const PshObject&) = default;
};

inline std::string to_string(const PshObject& a) {
  const std::string base = "T^" + std::to_string(a.arity);
  return a.shift == 0 ? base : "(" + base + ")^(T^" + std::to_string(a.shift) + ")";
}

// A morphism is its Yoneda germ when the source is representable and a
// computable family otherwise.
template <AlgebraicTheory T>
struct PshMorphism {
  using E = ElementOf<T>;
  using Family = std::function<std::vector<E>(std::size_t n, const std::vector<E>&)>;

  PshObject src;
  PshObject dst;
  std::optional<std::vector<E>> germ;
  Family family;
};

// The full subcategory of T-presheaves on the objects above, a cartesian
// closed category.  Hom-equality is exact on germs; out of non-representable
// sources it is decided on sampled probe elements.
template <AlgebraicTheory T>
class PresheafCategory {
 public:
  using Object = PshObject;
  using Morphism = PshMorphism<T>;
  using E = ElementOf<T>;
  using Sampler = std::function<E(std::size_t n, Rng& rng)>;

  explicit PresheafCategory(const T& th, Sampler sampler = {}, std::size_t probes = 3)
      : th_(&th), sampler_(std::move(sampler)), probes_(probes) {
    if (!sampler_) sampler_ = [this](std::size_t n, Rng& rng) { return th_->sample(n, rng); };
  }
  PresheafCategory(const PresheafCategory&) = delete;
  PresheafCategory& operator=(const PresheafCategory&) = delete;

  const T& theory() const noexcept { return *th_; }

  // q • f in the carrier of a, for q in a(m) and f in T_n^m.
  std::vector<E> act(const Object& a, const std::vector<E>& q, std::span<const E> f, std::size_t n) const {
    std::vector<E> ext;
    if (a.shift == 0) {
      ext.assign(f.begin(), f.end());
    } else {
      for (const E& fj : f) ext.push_back(weaken(*th_, fj, n, a.shift));
      for (std::size_t i = 1; i <= a.shift; ++i) ext.push_back(th_->var(n + a.shift, n + i));
    }
    std::vector<E> out;
    out.reserve(q.size());
    for (const E& qi : q) out.push_back(th_->subst(qi, ext, n + a.shift));
    return out;
  }

  std::vector<E> apply(const Morphism& f, std::size_t n, const std::vector<E>& x) const {
    if (f.germ) return act(f.dst, *f.germ, x, n);
    return f.family(n, x);
  }

  std::vector<E> germ_of(const Morphism& f) const {
    if (f.src.shift != 0) throw std::invalid_argument("germ of a morphism out of " + to_string(f.src));
    if (f.germ) return *f.germ;
    return f.family(f.src.arity, variables(*th_, f.src.arity));
  }

  Morphism from_germ(const Object& src, const Object& dst, std::vector<E> germ) const {
    if (src.shift != 0) throw std::invalid_argument("germs need a representable source");
    if (germ.size() != dst.arity) throw std::invalid_argument("germ has the wrong arity");
    return {src, dst, std::move(germ), {}};
  }

  Morphism from_family(const Object& src, const Object& dst, typename Morphism::Family family) const {
    return {src, dst, std::nullopt, std::move(family)};
  }

  Morphism identity(const Object& a) const {
    if (a.shift == 0) return from_germ(a, a, variables(*th_, a.arity));
    return from_family(a, a, [](std::size_t, const std::vector<E>& x) { return x; });
  }

  Morphism compose(const Morphism& g, const Morphism& f) const {
    if (!(f.dst == g.src)) {
      throw std::invalid_argument("cannot compose " + to_string(f.dst) + " with " + to_string(g.src));
    }
    if (f.src.shift == 0) return from_germ(f.src, g.dst, apply(g, f.src.arity, germ_of(f)));
    return from_family(f.src, g.dst, [this, g, f](std::size_t n, const std::vector<E>& x) {
      return apply(g, n, apply(f, n, x));
    });
  }

  Object terminal() const { return {0, 0}; }

  Morphism to_terminal(const Object& a) const {
    if (a.shift == 0) return from_germ(a, terminal(), {});
    return from_family(a, terminal(), [](std::size_t, const std::vector<E>&) { return std::vector<E>{}; });
  }

  Object product(const Object& a, const Object& b) const {
    if (a.arity == 0) return b;
    if (b.arity == 0) return a;
    if (a.shift != b.shift) throw std::invalid_argument("product of " + to_string(a) + " and " + to_string(b));
    return {a.arity + b.arity, a.shift};
  }

  Morphism proj1(const Object& a, const Object& b) const { return slice(product(a, b), a, 0); }
  Morphism proj2(const Object& a, const Object& b) const { return slice(product(a, b), b, a.arity); }

  Morphism pairing(const Morphism& f, const Morphism& g) const {
    if (!(f.src == g.src)) throw std::invalid_argument("pairing of morphisms with different sources");
    const Object dst = product(f.dst, g.dst);
    if (f.src.shift == 0) {
      auto germ = germ_of(f);
      const auto tail = germ_of(g);
      germ.insert(germ.end(), tail.begin(), tail.end());
      return from_germ(f.src, dst, std::move(germ));
    }
    return from_family(f.src, dst, [this, f, g](std::size_t n, const std::vector<E>& x) {
      auto out = apply(f, n, x);
      const auto tail = apply(g, n, x);
      out.insert(out.end(), tail.begin(), tail.end());
      return out;
    });
  }

  // C^(T^j)_n = C_{n+j}.
  Object exponential(const Object& b, const Object& c) const {
    if (b.shift != 0) throw std::invalid_argument("exponent " + to_string(b) + " is not representable");
    return {c.arity, c.shift + b.arity};
  }

  // Both transposes keep the germ: C(A × B)_(a+b) and (C^B)_a are the same set.
  Morphism curry(const Object& a, const Object& b, const Morphism& f) const {
    if (!(f.src == product(a, b))) throw std::invalid_argument("curry: source is not A × B");
    return from_germ(a, exponential(b, f.dst), germ_of(f));
  }

  Morphism uncurry(const Object& a, const Object& b, const Object& c, const Morphism& g) const {
    if (!(g.src == a) || !(g.dst == exponential(b, c))) throw std::invalid_argument("uncurry: bad type");
    return from_germ(product(a, b), c, germ_of(g));
  }

  EqResult equal(const Morphism& f, const Morphism& g, std::size_t fuel) const {
    if (!(f.src == g.src) || !(f.dst == g.dst)) return EqResult::distinct();
    if (f.src.shift == 0) {
      return vec_eq(germ_of(f), germ_of(g), f.src.arity + f.dst.shift, fuel);
    }
    Rng rng(0x9e5e'7a11ULL);
    EqResult r = EqResult::equal();
    for (std::size_t n = 0; n < probes_; ++n) {
      for (std::size_t s = 0; s < probes_; ++s) {
        const auto x = sample_element(f.src, n, rng);
        r = r && vec_eq(apply(f, n, x), apply(g, n, x), n + f.dst.shift, fuel);
        if (r.is_distinct()) return r;
      }
    }
    return r;
  }

  std::string render(const Morphism& f) const {
    if (f.src.shift != 0) return "<family " + to_string(f.src) + " -> " + to_string(f.dst) + ">";
    const auto germ = germ_of(f);
    return detail::render_tuple(*th_, std::span<const E>(germ));
  }

  std::vector<E> sample_element(const Object& a, std::size_t n, Rng& rng) const {
    std::vector<E> out;
    out.reserve(a.arity);
    for (std::size_t i = 0; i < a.arity; ++i) out.push_back(sampler_(n + a.shift, rng));
    return out;
  }

 private:
  Morphism slice(const Object& src, const Object& dst, std::size_t offset) const {
    if (src.shift == 0) {
      std::vector<E> germ;
      for (std::size_t i = 1; i <= dst.arity; ++i) germ.push_back(th_->var(src.arity, offset + i));
      return from_germ(src, dst, std::move(germ));
    }
    return from_family(src, dst, [offset, k = dst.arity](std::size_t, const std::vector<E>& x) {
      return std::vector<E>(x.begin() + static_cast<std::ptrdiff_t>(offset),
                            x.begin() + static_cast<std::ptrdiff_t>(offset + k));
    });
  }

  EqResult vec_eq(const std::vector<E>& a, const std::vector<E>& b, std::size_t n, std::size_t fuel) const {
    if (a.size() != b.size()) return EqResult::distinct();
    EqResult r = EqResult::equal();
    for (std::size_t i = 0; i < a.size(); ++i) r = r && th_->eq(a[i], b[i], n, fuel);
    return r;
  }

  const T* th_;
  Sampler sampler_;
  std::size_t probes_;
};

// The lambda calculus as a presheaf category, with probes drawn from
// normalizing terms.
class HylandCategory : public PresheafCategory<LambdaCalculus> {
 public:
  explicit HylandCategory(const LambdaCalculus& th, std::size_t fuel = kDefaultFuel);
};

static_assert(CartesianClosedCategory<HylandCategory>);

using HylandTheory = EndomorphismTheory<HylandCategory>;

// The theory presheaf of a lambda theory is reflexive: abs is the lam family
// A(L) -> L and app the rho family L -> A(L), with germ rho(x_1) = x_1 x_2.
ReflexiveObject<HylandCategory> hyland_reflexive(const HylandCategory& cat);

// E(H(Λ)), sampled as Yoneda germs of random terms.
HylandTheory hyland_theory(const HylandCategory& cat);

// phi_n(f) = f_n(x_1, .., x_n) and its inverse t ↦ ((s_i)_i ↦ t • s).
Term hyland_phi(const HylandCategory& cat, const PshMorphism<LambdaCalculus>& f);
PshMorphism<LambdaCalculus> hyland_phi_inv(const HylandCategory& cat, const Term& t);

// Both phi round trips on hom(L^n, L), preservation of var, •, lam and rho,
// the action laws of the presheaves involved, the reflexive structure and
// the plus-1 exponential transposes.
LawReport hyland_roundtrip(std::size_t n, const SampleOptions& options = {});

// Action, naturality, Yoneda, exponential and Lawvere laws over the lambda
// calculus, and the lambda-theory laws of E(H(Λ)).
LawReport presheaf_laws(const SampleOptions& options = {}, std::size_t max_scope = 3);

// Action and Lawvere laws over a free theory, exhaustively up to max_scope.
LawReport presheaf_laws_exhaustive(const FreeTheory& th, std::size_t max_scope);

}  // namespace scottrep
