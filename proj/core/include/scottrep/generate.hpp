#pragma once

#include <cstddef>
#include <optional>

#include "scottrep/normalize.hpp"
#include "scottrep/rng.hpp"
#include "scottrep/term.hpp"

namespace scottrep {

// Each node continues to a compound constructor with probability
// continue_prob (until max_depth), choosing uniformly among App, Abs and
// Subst; otherwise it is a uniformly chosen variable.  At scope 0 a compound
// node is forced, and past max_depth that node is an abstraction.
struct TermGenOptions {
  double continue_prob = 0.3;
  std::size_t max_depth = 6;
  std::size_t max_subst_args = 3;
  bool allow_subst = true;
  // When false, x_i x_i is never generated.
  bool allow_self_application = true;
};

Term random_term(Rng& rng, std::size_t scope, const TermGenOptions& options = {});

// Draws until a term normalizes within `fuel`; nullopt after max_attempts.
std::optional<Term> random_normalizing_term(Rng& rng, std::size_t scope, const TermGenOptions& options,
                                            std::size_t fuel = kDefaultFuel, std::size_t max_attempts = 200);

// The closed-term generator used for combinator and retract samples:
// Subst-free, no self-application, normalizing.
Term random_closed_combinator(Rng& rng, std::size_t fuel = kDefaultFuel);

}  // namespace scottrep
