#include "scottrep/combinators.hpp"

#include <algorithm>

#include "scottrep/generate.hpp"
#include "scottrep/syntax.hpp"

namespace scottrep {

namespace {

void require_closed(const Term& t, const char* what) {
  if (t.scope() != 0) {
    throw TermError(std::string(what) + " expects closed terms, got scope " + std::to_string(t.scope()));
  }
}

void require_same_scope(const Term& a, const Term& b, const char* what) {
  if (a.scope() != b.scope()) {
    throw TermError(std::string(what) + " on scopes " + std::to_string(a.scope()) + " and " +
                    std::to_string(b.scope()));
  }
}

}  // namespace

Term raise(const Term& t) {
  if (t.kind() == TermKind::Var) return mk_var(t.scope() + 1, t.index());
  return weaken(t, 1);
}

Term identity_at(std::size_t n) { return mk_abs(mk_var(n + 1, n + 1)); }

Term compose_at(const Term& a, const Term& b) {
  require_same_scope(a, b, "compose");
  const std::size_t n = a.scope();
  return mk_abs(mk_app(raise(a), mk_app(raise(b), mk_var(n + 1, n + 1))));
}

Term pair_at(const Term& a, const Term& b) {
  require_same_scope(a, b, "pair");
  const std::size_t n = a.scope();
  return mk_abs(mk_app(mk_app(mk_var(n + 1, n + 1), raise(a)), raise(b)));
}

Term ntuple_at(std::size_t n, std::span<const Term> elems) {
  Term acc = identity_at(n);
  for (const Term& e : elems) acc = pair_at(acc, e);
  return acc;
}

Term U() { return identity_at(0); }

Term I() { return mk_abs(mk_abs(mk_var(2, 2))); }

Term compose(const Term& a, const Term& b) {
  require_closed(a, "compose");
  require_closed(b, "compose");
  return compose_at(a, b);
}

Term pair(const Term& a, const Term& b) {
  require_closed(a, "pair");
  require_closed(b, "pair");
  return pair_at(a, b);
}

Term spair(const Term& a, const Term& b) {
  require_closed(a, "spair");
  require_closed(b, "spair");
  const Term x1 = mk_var(1, 1);
  return mk_abs(pair_at(mk_app(raise(a), x1), mk_app(raise(b), x1)));
}

Term proj(std::size_t i) {
  if (i != 1 && i != 2) throw TermError("projection index must be 1 or 2");
  return mk_abs(mk_app(mk_var(1, 1), mk_abs(mk_abs(mk_var(3, i + 1)))));
}

Term ntuple(std::span<const Term> elems) {
  for (const Term& e : elems) require_closed(e, "ntuple");
  return ntuple_at(0, elems);
}

Term nproj(std::size_t n, std::size_t i) {
  if (i == 0 || i > n) throw TermError("projection " + std::to_string(i) + " of a " + std::to_string(n) + "-tuple");
  const std::size_t k = n - i;
  if (k == 0) return proj(2);
  Term first = proj(1);
  for (std::size_t j = 1; j < k; ++j) first = compose(proj(1), first);
  return compose(proj(2), first);
}

Term prod_obj(const Term& a, const Term& b) { return spair(compose(a, proj(1)), compose(b, proj(2))); }

Term exp_obj(const Term& b, const Term& c) {
  require_closed(b, "exp_obj");
  require_closed(c, "exp_obj");
  const Term x1 = mk_var(1, 1);
  return mk_abs(compose_at(raise(c), compose_at(x1, raise(b))));
}

Term psi(const Term& f) {
  require_closed(f, "psi");
  return mk_abs(mk_abs(mk_app(weaken(f, 2), pair_at(mk_var(2, 1), mk_var(2, 2)))));
}

Term psi_inv(const Term& g) {
  require_closed(g, "psi_inv");
  const Term x1 = mk_var(1, 1);
  return mk_abs(mk_app(mk_app(raise(g), mk_app(raise(proj(1)), x1)), mk_app(raise(proj(2)), x1)));
}

Term apply(const Term& c, const Term& d) {
  const std::size_t n = std::max(c.scope(), d.scope());
  const auto up = [n](const Term& t) { return t.scope() == n ? t : weaken(t, n - t.scope()); };
  return mk_app(up(c), up(d));
}

std::optional<Term> lookup_combinator(std::string_view name) {
  if (name == "I") return I();
  if (name == "U") return U();
  if (name == "pi1") return proj(1);
  if (name == "pi2") return proj(2);
  if (name == "K") return parse_scoped("\\.\\.x1 @0");
  if (name == "S") return parse_scoped("\\.\\.\\.x1 x3 (x2 x3) @0");
  if (name == "omega") return parse_scoped("\\.x1 x1 @0");
  if (name == "Omega") return parse_scoped("(\\.x1 x1) (\\.x1 x1) @0");
  return std::nullopt;
}

std::vector<std::string> combinator_names() { return {"I", "U", "pi1", "pi2", "K", "S", "omega", "Omega"}; }

LawReport combinator_laws(const SampleOptions& opt) {
  LawReport report;
  report.suite = "combinators";
  Rng rng(opt.seed);
  const auto rec = [&](const std::string& law, const Term& a, const Term& b) {
    report.law(law).record(beta_eq(a, b, opt.fuel), [&] { return render(a) + " vs " + render(b); });
  };
  const auto sample = [&] { return random_closed_combinator(rng, opt.fuel); };
  rec("compose_I_I", compose(I(), I()), I());
  for (std::size_t s = 0; s < opt.samples; ++s) {
    const Term a = sample(), b = sample(), c = sample();
    rec("proj1_pair", apply(proj(1), pair(a, b)), a);
    rec("proj2_pair", apply(proj(2), pair(a, b)), b);
    const Term x1 = mk_var(1, 1);
    rec("proj1_spair", compose(proj(1), spair(a, b)), mk_abs(mk_app(raise(a), x1)));
    rec("proj2_spair", compose(proj(2), spair(a, b)), mk_abs(mk_app(raise(b), x1)));
    rec("compose_assoc", compose(compose(a, b), c), compose(a, compose(b, c)));

    const std::size_t n = rng.between(1, 4);
    std::vector<Term> elems;
    for (std::size_t i = 0; i < n; ++i) elems.push_back(sample());
    const Term tuple = ntuple(elems);
    const std::size_t i = rng.between(1, n);
    rec("nproj_ntuple", apply(nproj(n, i), tuple), elems[i - 1]);
    Term nested = U();
    for (const Term& e : elems) nested = pair(nested, e);
    report.law("ntuple_shape").record(tuple == nested, [&] { return render(tuple); });
  }
  return report;
}

}  // namespace scottrep
