#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include "scottrep/generate.hpp"
#include "scottrep/normalize.hpp"
#include "scottrep/rng.hpp"
#include "scottrep/term.hpp"
#include "scottrep/theory.hpp"

namespace scottrep {

// The untyped lambda calculus as a lambda theory: carriers are terms up to
// beta, lam is abstraction and rho(f) = App(f • (x_1..x_n), x_{n+1}).
class LambdaCalculus {
 public:
  using Element = Term;

  explicit LambdaCalculus(TermGenOptions generator = {}) : generator_(generator) {}

  Term var(std::size_t n, std::size_t i) const { return mk_var(n, i); }
  Term subst(const Term& f, std::span<const Term> g, std::size_t n) const;
  EqResult eq(const Term& a, const Term& b, std::size_t n, std::size_t fuel) const;
  Term sample(std::size_t n, Rng& rng) const { return random_term(rng, n, generator_); }
  Term lam(std::size_t n, const Term& f) const;
  Term rho(std::size_t n, const Term& g) const;

  std::string render(const Term& t) const;
  Term parse(std::string_view text, std::size_t n) const;
  std::string name() const { return "lambda"; }

  const TermGenOptions& generator() const noexcept { return generator_; }

 private:
  TermGenOptions generator_;
};

static_assert(LambdaTheory<LambdaCalculus>);

// The unique lambda-theory morphism out of the lambda calculus, by structural
// recursion: variables to variables, App to app', Abs to lam and Subst to
// substitution.
template <LambdaTheory L>
ElementOf<L> interpret(const L& target, const Term& t) {
  const std::size_t n = t.scope();
  switch (t.kind()) {
    case TermKind::Var:
      return target.var(n, t.index());
    case TermKind::App:
      return app_prime(target, interpret(target, t.fun()), interpret(target, t.arg()), n);
    case TermKind::Abs:
      return target.lam(n, interpret(target, t.body()));
    case TermKind::Subst: {
      std::vector<ElementOf<L>> args;
      args.reserve(t.args().size());
      for (const Term& a : t.args()) args.push_back(interpret(target, a));
      return target.subst(interpret(target, t.subject()), args, n);
    }
  }
  throw std::logic_error("unreachable");
}

template <LambdaTheory L>
TheoryMorphism<LambdaCalculus, L> initial_morphism(const LambdaCalculus& source, const L& target) {
  return {&source, &target, [&target](std::size_t, const Term& t) { return interpret(target, t); }};
}

}  // namespace scottrep
