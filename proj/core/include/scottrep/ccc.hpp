#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "scottrep/law_report.hpp"
#include "scottrep/normalize.hpp"
#include "scottrep/rng.hpp"
#include "scottrep/theory.hpp"

namespace scottrep {

// A cartesian closed category with a fuel-bounded hom-equality.
// compose(g, f) is g ∘ f; curry(A, B, f) sends f : A × B -> C to A -> C^B
// and uncurry(A, B, C, g) is its inverse.
template <class C>
concept CartesianClosedCategory = requires(const C& c, const typename C::Object& a, const typename C::Morphism& f,
                                           std::size_t fuel) {
  typename C::Object;
  typename C::Morphism;
  { c.identity(a) } -> std::same_as<typename C::Morphism>;
  { c.compose(f, f) } -> std::same_as<typename C::Morphism>;
  { c.terminal() } -> std::same_as<typename C::Object>;
  { c.to_terminal(a) } -> std::same_as<typename C::Morphism>;
  { c.product(a, a) } -> std::same_as<typename C::Object>;
  { c.proj1(a, a) } -> std::same_as<typename C::Morphism>;
  { c.proj2(a, a) } -> std::same_as<typename C::Morphism>;
  { c.pairing(f, f) } -> std::same_as<typename C::Morphism>;
  { c.exponential(a, a) } -> std::same_as<typename C::Object>;
  { c.curry(a, a, f) } -> std::same_as<typename C::Morphism>;
  { c.uncurry(a, a, a, f) } -> std::same_as<typename C::Morphism>;
  { c.equal(f, f, fuel) } -> std::same_as<EqResult>;
  { c.render(f) } -> std::convertible_to<std::string>;
};

// X together with a retraction app ∘ abs = id of X^X onto X.
template <CartesianClosedCategory C>
struct ReflexiveObject {
  typename C::Object carrier;
  typename C::Morphism abs;  // X^X -> X
  typename C::Morphism app;  // X -> X^X
  EqResult retract_cert;
};

template <CartesianClosedCategory C>
ReflexiveObject<C> make_reflexive(const C& cat, typename C::Object x, typename C::Morphism abs,
                                  typename C::Morphism app, std::size_t fuel = kDefaultFuel) {
  const EqResult cert = cat.equal(cat.compose(app, abs), cat.identity(cat.exponential(x, x)), fuel);
  return {std::move(x), std::move(abs), std::move(app), cert};
}

// The endomorphism lambda theory E(X) of a reflexive object:
// E(X)_n = hom(X^n, X) with X^0 = 1 and X^{n+1} = X^n × X.  Variables are
// projections, f • g = f ∘ ⟨g_1, .., g_m⟩, lam(f) = abs ∘ curry(f) and
// rho(g) = uncurry(app ∘ g).
template <CartesianClosedCategory C>
class EndomorphismTheory {
 public:
  using Object = typename C::Object;
  using Element = typename C::Morphism;
  using Sampler = std::function<Element(std::size_t n, Rng& rng)>;

  EndomorphismTheory(const C& cat, ReflexiveObject<C> x, Sampler sampler, std::string name = "E(X)",
                     std::size_t cached_powers = 6)
      : cat_(&cat), x_(std::move(x)), sampler_(std::move(sampler)), name_(std::move(name)) {
    powers_.push_back(cat_->terminal());
    for (std::size_t n = 1; n <= cached_powers; ++n) powers_.push_back(cat_->product(powers_.back(), x_.carrier));
  }

  const C& category() const noexcept { return *cat_; }
  const ReflexiveObject<C>& reflexive() const noexcept { return x_; }

  Object power(std::size_t n) const {
    if (n < powers_.size()) return powers_[n];
    Object p = powers_.back();
    for (std::size_t k = powers_.size(); k <= n; ++k) p = cat_->product(p, x_.carrier);
    return p;
  }

  Element var(std::size_t n, std::size_t i) const {
    if (i == 0 || i > n) throw std::invalid_argument("variable " + std::to_string(i) + " at scope " + std::to_string(n));
    const Object prev = power(n - 1);
    if (i == n) return cat_->proj2(prev, x_.carrier);
    return cat_->compose(var(n - 1, i), cat_->proj1(prev, x_.carrier));
  }

  // ⟨g_1, .., g_m⟩ : X^n -> X^m.
  Element tuple(std::span<const Element> g, std::size_t n) const {
    if (g.empty()) return cat_->to_terminal(power(n));
    return cat_->pairing(tuple(g.first(g.size() - 1), n), g.back());
  }

  Element subst(const Element& f, std::span<const Element> g, std::size_t n) const {
    return cat_->compose(f, tuple(g, n));
  }

  EqResult eq(const Element& a, const Element& b, std::size_t, std::size_t fuel) const {
    return cat_->equal(a, b, fuel);
  }

  Element sample(std::size_t n, Rng& rng) const { return sampler_(n, rng); }

  Element lam(std::size_t n, const Element& f) const {
    return cat_->compose(x_.abs, cat_->curry(power(n), x_.carrier, f));
  }

  Element rho(std::size_t n, const Element& g) const {
    return cat_->uncurry(power(n), x_.carrier, x_.carrier, cat_->compose(x_.app, g));
  }

  std::string render(const Element& e) const { return cat_->render(e); }
  std::string name() const { return name_; }

 private:
  const C* cat_;
  ReflexiveObject<C> x_;
  Sampler sampler_;
  std::string name_;
  std::vector<Object> powers_;
};

// The category with one object and one morphism; every object of it is
// reflexive and its endomorphism theory is constant.
class TerminalCategory {
 public:
  struct Object {
    friend bool operator==(const Object&, const Object&) = default;
  };
  struct Morphism {
    friend bool operator==(const Morphism&, const Morphism&) = default;
  };

  Morphism identity(const Object&) const { return {}; }
  Morphism compose(const Morphism&, const Morphism&) const { return {}; }
  Object terminal() const { return {}; }
  Morphism to_terminal(const Object&) const { return {}; }
  Object product(const Object&, const Object&) const { return {}; }
  Morphism proj1(const Object&, const Object&) const { return {}; }
  Morphism proj2(const Object&, const Object&) const { return {}; }
  Morphism pairing(const Morphism&, const Morphism&) const { return {}; }
  Object exponential(const Object&, const Object&) const { return {}; }
  Morphism curry(const Object&, const Object&, const Morphism&) const { return {}; }
  Morphism uncurry(const Object&, const Object&, const Object&, const Morphism&) const { return {}; }
  EqResult equal(const Morphism&, const Morphism&, std::size_t) const { return EqResult::equal(); }
  std::string render(const Morphism&) const { return "*"; }
};

static_assert(CartesianClosedCategory<TerminalCategory>);

inline EndomorphismTheory<TerminalCategory> trivial_theory(const TerminalCategory& cat) {
  return EndomorphismTheory<TerminalCategory>(
      cat, make_reflexive(cat, TerminalCategory::Object{}, {}, {}),
      [](std::size_t, Rng&) { return TerminalCategory::Morphism{}; }, "E(1)");
}

}  // namespace scottrep
