#include "scottrep/generate.hpp"

#include <stdexcept>

namespace scottrep {

namespace {

Term gen(Rng& rng, std::size_t scope, std::size_t depth, const TermGenOptions& opt) {
  const bool forced = scope == 0;
  if (!forced && (depth >= opt.max_depth || !rng.chance(opt.continue_prob))) {
    return mk_var(scope, rng.between(1, scope));
  }
  if (depth >= opt.max_depth) return mk_abs(gen(rng, scope + 1, depth + 1, opt));

  const std::size_t kinds = opt.allow_subst ? 3 : 2;
  switch (rng.below(kinds)) {
    case 0: {
      Term f = gen(rng, scope, depth + 1, opt);
      Term a = gen(rng, scope, depth + 1, opt);
      if (!opt.allow_self_application && f.kind() == TermKind::Var && a.kind() == TermKind::Var &&
          f.index() == a.index()) {
        a = mk_abs(mk_var(scope + 1, scope + 1));
      }
      return mk_app(std::move(f), std::move(a));
    }
    case 1:
      return mk_abs(gen(rng, scope + 1, depth + 1, opt));
    default: {
      const std::size_t m = rng.between(0, opt.max_subst_args);
      Term subject = gen(rng, m, depth + 1, opt);
      std::vector<Term> args;
      args.reserve(m);
      for (std::size_t k = 0; k < m; ++k) args.push_back(gen(rng, scope, depth + 1, opt));
      return mk_subst(std::move(subject), std::move(args), scope);
    }
  }
}

}  // namespace

Term random_term(Rng& rng, std::size_t scope, const TermGenOptions& options) {
  return gen(rng, scope, 0, options);
}

std::optional<Term> random_normalizing_term(Rng& rng, std::size_t scope, const TermGenOptions& options,
                                            std::size_t fuel, std::size_t max_attempts) {
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    Term t = random_term(rng, scope, options);
    if (std::holds_alternative<NormalForm>(normalize(t, fuel))) return t;
  }
  return std::nullopt;
}

Term random_closed_combinator(Rng& rng, std::size_t fuel) {
  TermGenOptions opt;
  opt.continue_prob = 0.55;
  opt.max_depth = 5;
  opt.allow_subst = false;
  opt.allow_self_application = false;
  if (auto t = random_normalizing_term(rng, 0, opt, fuel)) return *t;
  throw std::runtime_error("could not draw a normalizing closed term");
}

}  // namespace scottrep
