#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scottrep/law_report.hpp"
#include "scottrep/term.hpp"

namespace scottrep {

// Scott's closed-term toolkit.  Every operation takes and returns terms at
// scope 0; constants are moved under a binder by an explicit empty
// substitution iota_{0,1}(a) = a • ().

Term U();  // λx1. x1
Term I();  // λx1 x2. x2, the terminal object

Term compose(const Term& a, const Term& b);  // λx1. a (b x1)
Term pair(const Term& a, const Term& b);     // λx1. x1 a b
Term spair(const Term& a, const Term& b);    // λx1. (a x1, b x1)
Term proj(std::size_t i);                    // λx1. x1 (λx2 x3. x_{i+1})
Term ntuple(std::span<const Term> elems);    // ((..((U, a1), a2)..), an)
Term nproj(std::size_t n, std::size_t i);    // π2 ∘ π1^{n-i}
Term prod_obj(const Term& a, const Term& b);  // ⟨A ∘ π1, B ∘ π2⟩
Term exp_obj(const Term& b, const Term& c);   // λx1. C ∘ x1 ∘ B
Term psi(const Term& f);      // λx1 x2. f (x1, x2)
Term psi_inv(const Term& g);  // λx1. g (π1 x1) (π2 x1)

// Application after weakening both sides to the larger scope.
Term apply(const Term& c, const Term& d);

// The same shapes at an arbitrary scope n, for arguments at scope n.
Term raise(const Term& t);  // iota_{n,1}, structural on variables
Term compose_at(const Term& a, const Term& b);
Term pair_at(const Term& a, const Term& b);
Term identity_at(std::size_t n);
Term ntuple_at(std::size_t n, std::span<const Term> elems);

// The CLI's named combinators: I, U, pi1, pi2, K, S, omega, Omega.
std::optional<Term> lookup_combinator(std::string_view name);
std::vector<std::string> combinator_names();

// The computation laws of the toolkit on sampled closed normalizing terms:
// projections of pairs, projections after spair, n-ary projections of
// n-tuples (n <= 4), the left nesting of ntuple, associativity of compose
// and I ∘ I = I.
LawReport combinator_laws(const SampleOptions& options = {});

}  // namespace scottrep
