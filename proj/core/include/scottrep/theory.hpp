#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "scottrep/law_report.hpp"
#include "scottrep/normalize.hpp"
#include "scottrep/rng.hpp"

namespace scottrep {

// An algebraic theory (abstract clone): graded carriers T_n, variables
// x_{n,i} and substitution f • g for f in T_m, g in T_n^m.
template <class T>
concept AlgebraicTheory = requires(const T& th, const typename T::Element& e,
                                   std::span<const typename T::Element> tuple, std::size_t n, std::size_t fuel,
                                   Rng& rng) {
  typename T::Element;
  { th.var(n, n) } -> std::same_as<typename T::Element>;
  { th.subst(e, tuple, n) } -> std::same_as<typename T::Element>;
  { th.eq(e, e, n, fuel) } -> std::same_as<EqResult>;
  { th.sample(n, rng) } -> std::same_as<typename T::Element>;
  { th.render(e) } -> std::convertible_to<std::string>;
  { th.name() } -> std::convertible_to<std::string>;
};

// lam(n, .) : T_{n+1} -> T_n and rho(n, .) : T_n -> T_{n+1}.
template <class T>
concept LambdaTheory = AlgebraicTheory<T> && requires(const T& th, const typename T::Element& e, std::size_t n) {
  { th.lam(n, e) } -> std::same_as<typename T::Element>;
  { th.rho(n, e) } -> std::same_as<typename T::Element>;
};

template <class T>
concept EnumerableTheory = AlgebraicTheory<T> && requires(const T& th, std::size_t n) {
  { th.enumerate(n) } -> std::same_as<std::vector<typename T::Element>>;
};

template <AlgebraicTheory T>
using ElementOf = typename T::Element;

template <AlgebraicTheory T>
std::vector<ElementOf<T>> variables(const T& th, std::size_t n) {
  std::vector<ElementOf<T>> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back(th.var(n, i));
  return out;
}

// iota_{m,k}(f) = f • (x_{m+k,1}, .., x_{m+k,m}).
template <AlgebraicTheory T>
ElementOf<T> weaken(const T& th, const ElementOf<T>& f, std::size_t m, std::size_t k) {
  std::vector<ElementOf<T>> prefix;
  prefix.reserve(m);
  for (std::size_t i = 1; i <= m; ++i) prefix.push_back(th.var(m + k, i));
  return th.subst(f, prefix, m + k);
}

// (iota_{n,1}(h_1), .., iota_{n,1}(h_m)) + (x_{n+1}), the tuple used to move a
// substitution under a binder.
template <AlgebraicTheory T>
std::vector<ElementOf<T>> extend_tuple(const T& th, std::span<const ElementOf<T>> h, std::size_t n) {
  std::vector<ElementOf<T>> out;
  out.reserve(h.size() + 1);
  for (const auto& e : h) out.push_back(weaken(th, e, n, 1));
  out.push_back(th.var(n + 1, n + 1));
  return out;
}

// app'(f, g) = rho(x_{1,1}) • (f, g).
template <LambdaTheory L>
ElementOf<L> app_prime(const L& th, const ElementOf<L>& f, const ElementOf<L>& g, std::size_t n) {
  const std::vector<ElementOf<L>> fg{f, g};
  return th.subst(th.rho(1, th.var(1, 1)), fg, n);
}

struct LawCheckOptions {
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  std::size_t fuel = kDefaultFuel;
  std::size_t max_scope = 3;
};

namespace detail {

template <AlgebraicTheory T>
std::vector<ElementOf<T>> sample_tuple(const T& th, std::size_t len, std::size_t n, Rng& rng) {
  std::vector<ElementOf<T>> out;
  out.reserve(len);
  for (std::size_t k = 0; k < len; ++k) out.push_back(th.sample(n, rng));
  return out;
}

template <AlgebraicTheory T>
std::string render_tuple(const T& th, std::span<const ElementOf<T>> g) {
  std::string out = "(";
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (k > 0) out += ", ";
    out += th.render(g[k]);
  }
  return out + ")";
}

// The individual laws, shared by the sampled and exhaustive drivers.
template <AlgebraicTheory T>
struct Laws {
  const T& th;
  std::size_t fuel;

  using E = ElementOf<T>;
  using Span = std::span<const E>;

  void var_subst(LawTally& tally, std::size_t l, std::size_t j, Span g, std::size_t n) const {
    const E lhs = th.subst(th.var(l, j), g, n);
    tally.record(th.eq(lhs, g[j - 1], n, fuel), [&] {
      return "x_{" + std::to_string(l) + "," + std::to_string(j) + "} • " + render_tuple(th, g) + " = " +
             th.render(lhs) + " vs " + th.render(g[j - 1]);
    });
  }

  void subst_identity(LawTally& tally, const E& f, std::size_t n) const {
    const auto id = variables(th, n);
    const E lhs = th.subst(f, id, n);
    tally.record(th.eq(lhs, f, n, fuel), [&] { return "f = " + th.render(f) + ", f • id = " + th.render(lhs); });
  }

  void subst_assoc(LawTally& tally, const E& f, Span g, std::size_t m, Span h, std::size_t n) const {
    const E lhs = th.subst(th.subst(f, g, m), h, n);
    std::vector<E> gh;
    gh.reserve(g.size());
    for (const E& gi : g) gh.push_back(th.subst(gi, h, n));
    const E rhs = th.subst(f, gh, n);
    tally.record(th.eq(lhs, rhs, n, fuel), [&] {
      return "f = " + th.render(f) + ", g = " + render_tuple(th, g) + ", h = " + render_tuple(th, h) +
             ": (f•g)•h = " + th.render(lhs) + " vs f•(g•h) = " + th.render(rhs);
    });
  }

  // iota_{m,k}(f) • g = f • (g_i)_{i<=m} for g of length m + k.
  void weaken_subst(LawTally& tally, const E& f, std::size_t m, std::size_t k, Span g, std::size_t n) const {
    const E lhs = th.subst(weaken(th, f, m, k), g, n);
    const E rhs = th.subst(f, g.subspan(0, m), n);
    tally.record(th.eq(lhs, rhs, n, fuel), [&] {
      return "f = " + th.render(f) + ", g = " + render_tuple(th, g) + ": " + th.render(lhs) + " vs " +
             th.render(rhs);
    });
  }

  // iota_{n,k}(f • g) = f • (iota_{n,k}(g_i))_i.
  void weaken_compat(LawTally& tally, const E& f, Span g, std::size_t n, std::size_t k) const {
    const E lhs = weaken(th, th.subst(f, g, n), n, k);
    std::vector<E> wg;
    wg.reserve(g.size());
    for (const E& gi : g) wg.push_back(weaken(th, gi, n, k));
    const E rhs = th.subst(f, wg, n + k);
    tally.record(th.eq(lhs, rhs, n + k, fuel), [&] {
      return "f = " + th.render(f) + ", g = " + render_tuple(th, g) + ": " + th.render(lhs) + " vs " +
             th.render(rhs);
    });
  }
};

template <LambdaTheory T>
struct LambdaLaws {
  const T& th;
  std::size_t fuel;

  using E = ElementOf<T>;
  using Span = std::span<const E>;

  // lam_m(f) • h = lam_n(f • ext(h)).
  void lam_natural(LawTally& tally, const E& f, std::size_t m, Span h, std::size_t n) const {
    const E lhs = th.subst(th.lam(m, f), h, n);
    const E rhs = th.lam(n, th.subst(f, extend_tuple(th, h, n), n + 1));
    tally.record(th.eq(lhs, rhs, n, fuel), [&] {
      return "f = " + th.render(f) + ", h = " + render_tuple(th, h) + ": " + th.render(lhs) + " vs " +
             th.render(rhs);
    });
  }

  // rho_m(g) • ext(h) = rho_n(g • h).
  void rho_natural(LawTally& tally, const E& g, std::size_t m, Span h, std::size_t n) const {
    const E lhs = th.subst(th.rho(m, g), extend_tuple(th, h, n), n + 1);
    const E rhs = th.rho(n, th.subst(g, h, n));
    tally.record(th.eq(lhs, rhs, n + 1, fuel), [&] {
      return "g = " + th.render(g) + ", h = " + render_tuple(th, h) + ": " + th.render(lhs) + " vs " +
             th.render(rhs);
    });
  }

  void beta(LawTally& tally, const E& f, std::size_t n) const {
    const E lhs = th.rho(n, th.lam(n, f));
    tally.record(th.eq(lhs, f, n + 1, fuel),
                 [&] { return "f = " + th.render(f) + ", rho(lam(f)) = " + th.render(lhs); });
  }
};

}  // namespace detail

// Sampled check of the clone laws (and, for lambda theories, the two
// naturality laws and beta).  Each law draws its own scopes in
// [0, max_scope] from a stream derived from the seed.
template <AlgebraicTheory T>
LawReport check_theory_laws(const T& th, const LawCheckOptions& opt = {}) {
  LawReport report;
  report.suite = th.name();
  Rng root(opt.seed);
  const detail::Laws<T> laws{th, opt.fuel};
  const std::size_t S = opt.max_scope;

  {
    LawTally& t = report.law("var_subst");
    Rng rng = root.split();
    for (std::size_t s = 0; s < opt.samples; ++s) {
      const std::size_t l = rng.between(1, std::max<std::size_t>(S, 1));
      const std::size_t j = rng.between(1, l);
      const std::size_t n = rng.between(0, S);
      const auto g = detail::sample_tuple(th, l, n, rng);
      laws.var_subst(t, l, j, g, n);
    }
  }
  {
    LawTally& t = report.law("subst_identity");
    Rng rng = root.split();
    for (std::size_t s = 0; s < opt.samples; ++s) {
      const std::size_t n = rng.between(0, S);
      laws.subst_identity(t, th.sample(n, rng), n);
    }
  }
  {
    LawTally& t = report.law("subst_assoc");
    Rng rng = root.split();
    for (std::size_t s = 0; s < opt.samples; ++s) {
      const std::size_t l = rng.between(0, S), m = rng.between(0, S), n = rng.between(0, S);
      const auto f = th.sample(l, rng);
      const auto g = detail::sample_tuple(th, l, m, rng);
      const auto h = detail::sample_tuple(th, m, n, rng);
      laws.subst_assoc(t, f, g, m, h, n);
    }
  }
  {
    LawTally& t = report.law("weaken_subst");
    Rng rng = root.split();
    for (std::size_t s = 0; s < opt.samples; ++s) {
      const std::size_t m = rng.between(0, S), k = rng.between(0, 2), n = rng.between(0, S);
      const auto f = th.sample(m, rng);
      const auto g = detail::sample_tuple(th, m + k, n, rng);
      laws.weaken_subst(t, f, m, k, g, n);
    }
  }
  {
    LawTally& t = report.law("weaken_compat");
    Rng rng = root.split();
    for (std::size_t s = 0; s < opt.samples; ++s) {
      const std::size_t m = rng.between(0, S), n = rng.between(0, S), k = rng.between(0, 2);
      const auto f = th.sample(m, rng);
      const auto g = detail::sample_tuple(th, m, n, rng);
      laws.weaken_compat(t, f, g, n, k);
    }
  }

  if constexpr (LambdaTheory<T>) {
    const detail::LambdaLaws<T> lam{th, opt.fuel};
    {
      LawTally& t = report.law("lam_natural");
      Rng rng = root.split();
      for (std::size_t s = 0; s < opt.samples; ++s) {
        const std::size_t m = rng.between(0, S), n = rng.between(0, S);
        const auto f = th.sample(m + 1, rng);
        const auto h = detail::sample_tuple(th, m, n, rng);
        lam.lam_natural(t, f, m, h, n);
      }
    }
    {
      LawTally& t = report.law("rho_natural");
      Rng rng = root.split();
      for (std::size_t s = 0; s < opt.samples; ++s) {
        const std::size_t m = rng.between(0, S), n = rng.between(0, S);
        const auto g = th.sample(m, rng);
        const auto h = detail::sample_tuple(th, m, n, rng);
        lam.rho_natural(t, g, m, h, n);
      }
    }
    {
      LawTally& t = report.law("beta");
      Rng rng = root.split();
      for (std::size_t s = 0; s < opt.samples; ++s) {
        const std::size_t n = rng.between(0, S);
        lam.beta(t, th.sample(n + 1, rng), n);
      }
    }
  }
  return report;
}

namespace detail {

// Calls fn on every tuple of length len over elems.
template <class E, class Fn>
void for_each_tuple(const std::vector<E>& elems, std::size_t len, Fn&& fn) {
  if (len > 0 && elems.empty()) return;
  std::vector<std::size_t> idx(len, 0);
  std::vector<E> tuple;
  for (;;) {
    tuple.clear();
    for (std::size_t k : idx) tuple.push_back(elems[k]);
    fn(std::span<const E>(tuple));
    std::size_t pos = 0;
    while (pos < len && ++idx[pos] == elems.size()) idx[pos++] = 0;
    if (pos == len) return;
  }
}

}  // namespace detail

// Exhaustive check of the clone laws for theories with finite carriers, over
// all scopes up to max_scope (weakening by up to 2 extra variables).
template <EnumerableTheory T>
LawReport check_theory_laws_exhaustive(const T& th, std::size_t max_scope, std::size_t fuel = kDefaultFuel) {
  using E = ElementOf<T>;
  LawReport report;
  report.suite = th.name() + " (exhaustive)";
  const detail::Laws<T> laws{th, fuel};
  std::vector<std::vector<E>> carrier;
  for (std::size_t n = 0; n <= max_scope + 2; ++n) carrier.push_back(th.enumerate(n));

  for (const char* name : {"var_subst", "subst_identity", "subst_assoc", "weaken_subst", "weaken_compat"}) {
    report.law(name);
  }
  LawTally& vs = report.laws[0];
  LawTally& id = report.laws[1];
  LawTally& as = report.laws[2];
  LawTally& ws = report.laws[3];
  LawTally& wc = report.laws[4];

  for (std::size_t n = 0; n <= max_scope; ++n) {
    for (const E& f : carrier[n]) laws.subst_identity(id, f, n);
    for (std::size_t l = 1; l <= max_scope; ++l) {
      detail::for_each_tuple(carrier[n], l, [&](std::span<const E> g) {
        for (std::size_t j = 1; j <= l; ++j) laws.var_subst(vs, l, j, g, n);
      });
    }
  }
  for (std::size_t l = 0; l <= max_scope; ++l) {
    for (std::size_t m = 0; m <= max_scope; ++m) {
      for (std::size_t n = 0; n <= max_scope; ++n) {
        for (const E& f : carrier[l]) {
          detail::for_each_tuple(carrier[m], l, [&](std::span<const E> g) {
            detail::for_each_tuple(carrier[n], m, [&](std::span<const E> h) { laws.subst_assoc(as, f, g, m, h, n); });
          });
        }
      }
    }
  }
  for (std::size_t m = 0; m <= max_scope; ++m) {
    for (std::size_t k = 0; k <= 2 && m + k <= max_scope; ++k) {
      for (std::size_t n = 0; n <= max_scope; ++n) {
        for (const E& f : carrier[m]) {
          detail::for_each_tuple(carrier[n], m + k, [&](std::span<const E> g) { laws.weaken_subst(ws, f, m, k, g, n); });
          detail::for_each_tuple(carrier[n], m, [&](std::span<const E> g) { laws.weaken_compat(wc, f, g, n, k); });
        }
      }
    }
  }
  return report;
}

// A family of maps f_n : S_n -> T_n.
template <AlgebraicTheory S, AlgebraicTheory T>
struct TheoryMorphism {
  const S* source;
  const T* target;
  std::function<ElementOf<T>(std::size_t n, const ElementOf<S>&)> apply;

  ElementOf<T> operator()(std::size_t n, const ElementOf<S>& e) const { return apply(n, e); }
};

// Sampled check that a morphism preserves variables and substitution, and
// lam and rho when both sides are lambda theories.
template <AlgebraicTheory S, AlgebraicTheory T>
LawReport check_morphism_laws(const TheoryMorphism<S, T>& mor, const LawCheckOptions& opt = {}) {
  const S& src = *mor.source;
  const T& dst = *mor.target;
  LawReport report;
  report.suite = "morphism " + src.name() + " -> " + dst.name();
  Rng root(opt.seed);
  const std::size_t S_ = opt.max_scope;

  {
    LawTally& t = report.law("preserves_var");
    for (std::size_t n = 1; n <= std::max<std::size_t>(S_, 1); ++n) {
      for (std::size_t i = 1; i <= n; ++i) {
        const auto lhs = mor(n, src.var(n, i));
        t.record(dst.eq(lhs, dst.var(n, i), n, opt.fuel), [&] {
          return "x_{" + std::to_string(n) + "," + std::to_string(i) + "} -> " + dst.render(lhs);
        });
      }
    }
  }
  {
    LawTally& t = report.law("preserves_subst");
    Rng rng = root.split();
    for (std::size_t s = 0; s < opt.samples; ++s) {
      const std::size_t m = rng.between(0, S_), n = rng.between(0, S_);
      const auto f = src.sample(m, rng);
      const auto g = detail::sample_tuple(src, m, n, rng);
      const auto lhs = mor(n, src.subst(f, g, n));
      std::vector<ElementOf<T>> mg;
      for (const auto& gi : g) mg.push_back(mor(n, gi));
      const auto rhs = dst.subst(mor(m, f), mg, n);
      t.record(dst.eq(lhs, rhs, n, opt.fuel), [&] {
        return "f = " + src.render(f) + ", g = " + detail::render_tuple(src, std::span<const ElementOf<S>>(g)) +
               ": " + dst.render(lhs) + " vs " + dst.render(rhs);
      });
    }
  }
  if constexpr (LambdaTheory<S> && LambdaTheory<T>) {
    {
      LawTally& t = report.law("preserves_lam");
      Rng rng = root.split();
      for (std::size_t s = 0; s < opt.samples; ++s) {
        const std::size_t n = rng.between(0, S_);
        const auto f = src.sample(n + 1, rng);
        const auto lhs = mor(n, src.lam(n, f));
        const auto rhs = dst.lam(n, mor(n + 1, f));
        t.record(dst.eq(lhs, rhs, n, opt.fuel),
                 [&] { return "f = " + src.render(f) + ": " + dst.render(lhs) + " vs " + dst.render(rhs); });
      }
    }
    {
      LawTally& t = report.law("preserves_rho");
      Rng rng = root.split();
      for (std::size_t s = 0; s < opt.samples; ++s) {
        const std::size_t n = rng.between(0, S_);
        const auto g = src.sample(n, rng);
        const auto lhs = mor(n + 1, src.rho(n, g));
        const auto rhs = dst.rho(n, mor(n, g));
        t.record(dst.eq(lhs, rhs, n + 1, opt.fuel),
                 [&] { return "g = " + src.render(g) + ": " + dst.render(lhs) + " vs " + dst.render(rhs); });
      }
    }
  }
  return report;
}

}  // namespace scottrep
