#include "scottrep/lambda_calculus.hpp"

#include "scottrep/syntax.hpp"

namespace scottrep {

Term LambdaCalculus::subst(const Term& f, std::span<const Term> g, std::size_t n) const {
  return mk_subst(f, {g.begin(), g.end()}, n);
}

EqResult LambdaCalculus::eq(const Term& a, const Term& b, std::size_t, std::size_t fuel) const {
  return beta_eq(a, b, fuel);
}

Term LambdaCalculus::lam(std::size_t n, const Term& f) const {
  if (f.scope() != n + 1) throw TermError("lam at scope " + std::to_string(n) + " of a term at scope " +
                                          std::to_string(f.scope()));
  return mk_abs(f);
}

Term LambdaCalculus::rho(std::size_t n, const Term& g) const {
  if (g.scope() != n) throw TermError("rho at scope " + std::to_string(n) + " of a term at scope " +
                                      std::to_string(g.scope()));
  return scottrep::rho(g);
}

std::string LambdaCalculus::render(const Term& t) const { return render_scoped(t); }

Term LambdaCalculus::parse(std::string_view text, std::size_t n) const { return parse_term(text, n); }

}  // namespace scottrep
