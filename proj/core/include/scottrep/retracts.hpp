#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "scottrep/ccc.hpp"
#include "scottrep/law_report.hpp"
#include "scottrep/normalize.hpp"
#include "scottrep/rng.hpp"
#include "scottrep/term.hpp"

namespace scottrep {

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// What to do when a certificate comes back Unknown.  Distinct is always an
// error.
enum class UnknownPolicy { Warn, Error };

// A closed term A with A ∘ A ≡β A.
struct RObject {
  Term term;
  EqResult idempotency;
};

// f : A -> B, a closed term with B ∘ f ≡β f ≡β f ∘ A.
struct RMorphism {
  RObject src;
  RObject dst;
  Term term;
  EqResult absorption;
};

// Scott's category of retracts over the lambda calculus.  Certificates are
// checked when objects and morphisms are built.
class RetractCategory {
 public:
  using Object = RObject;
  using Morphism = RMorphism;

  struct Options {
    std::size_t fuel = kDefaultFuel;
    UnknownPolicy unknown = UnknownPolicy::Warn;
  };

  RetractCategory() = default;
  explicit RetractCategory(Options options) : options_(options) {}

  const Options& options() const noexcept { return options_; }

  RObject object(const Term& a) const;
  RMorphism morphism(const RObject& src, const RObject& dst, const Term& f) const;

  RMorphism identity(const RObject& a) const;
  RMorphism compose(const RMorphism& g, const RMorphism& f) const;
  RObject terminal() const;
  RMorphism to_terminal(const RObject& a) const;
  RObject product(const RObject& a, const RObject& b) const;
  RMorphism proj1(const RObject& a, const RObject& b) const;
  RMorphism proj2(const RObject& a, const RObject& b) const;
  RMorphism pairing(const RMorphism& f, const RMorphism& g) const;
  RObject exponential(const RObject& b, const RObject& c) const;
  // psi : R(A × B, C) -> R(A, C^B) and its inverse.
  RMorphism curry(const RObject& a, const RObject& b, const RMorphism& f) const;
  RMorphism uncurry(const RObject& a, const RObject& b, const RObject& c, const RMorphism& g) const;

  EqResult equal(const RMorphism& f, const RMorphism& g, std::size_t fuel) const;
  std::string render(const RMorphism& f) const;

  // Objects drawn from U, I, products and exponentials, nested to `depth`.
  RObject sample_object(Rng& rng, std::size_t depth = 2) const;
  // B ∘ t ∘ A for a sampled closed normalizing t.
  RMorphism sample_morphism(const RObject& a, const RObject& b, Rng& rng) const;

 private:
  void check(const EqResult& cert, const std::string& what) const;
  Options options_;
};

static_assert(CartesianClosedCategory<RetractCategory>);

// U = λx.x is reflexive: abs and app are both the idempotent U^U, seen as
// the section U^U -> U and the retraction U -> U^U.
ReflexiveObject<RetractCategory> U_reflexive(const RetractCategory& cat);

using ScottTheory = EndomorphismTheory<RetractCategory>;

// E(U), sampled as psi_n^{-1} images of random terms.
ScottTheory scott_theory(const RetractCategory& cat);

// psi_n(f) = iota_{0,n}(f) (x_1, .., x_n), a term at scope n.
Term scott_psi(const Term& f, std::size_t n);
// psi_n^{-1}(g) = λx1. g • (π_{n,i} x1)_i, a closed term.
Term scott_psi_inv(const Term& g);
RMorphism scott_psi_inv(const ScottTheory& theory, const Term& g);

// U^n = ⟨π_{n,1}, .., π_{n,n}⟩ as a closed term.
Term u_power(std::size_t n);

// Both psi round trips on E(U)_n and preservation of var, •, lam and rho.
LawReport scott_roundtrip(std::size_t n, const SampleOptions& options = {});

// Category laws, terminal uniqueness, product equations and exponential
// transposes of R on sampled morphisms.
LawReport retract_ccc_check(const SampleOptions& options = {});

// The reflexive structure of U: app ∘ abs = id, U ∘ U = U, and abs ∘ app,
// which beta alone does not identify with the identity.
LawReport u_reflexive_check(std::size_t fuel = kDefaultFuel);

}  // namespace scottrep
