#include "scottrep/normalize.hpp"

#include <optional>

namespace scottrep {

namespace {

class Normalizer {
 public:
  explicit Normalizer(std::size_t fuel) : fuel_(fuel) {}

  Term run(const Term& t) { return norm(t); }
  bool exhausted() const { return exhausted_; }
  std::size_t spent() const { return spent_; }

 private:
  bool tick() {
    if (spent_ >= fuel_) {
      exhausted_ = true;
      return false;
    }
    ++spent_;
    return true;
  }

  // Weak head normal form: a Var, an Abs, or an application spine headed by
  // a variable.  On exhaustion the partially reduced term is returned.
  Term whnf(Term t) {
    for (;;) {
      switch (t.kind()) {
        case TermKind::Var:
        case TermKind::Abs:
          return t;
        case TermKind::App: {
          Term f = whnf(t.fun());
          if (f.kind() != TermKind::Abs || !tick()) return mk_app(std::move(f), t.arg());
          const std::size_t n = t.scope();
          std::vector<Term> args = identity_tuple(n, n);
          args.push_back(t.arg());
          t = mk_subst(f.body(), std::move(args), n);
          continue;
        }
        case TermKind::Subst: {
          std::optional<Term> next = push(t);
          if (!next) return t;
          t = std::move(*next);
          continue;
        }
      }
    }
  }

  // One substitution step at the root of a Subst node.
  std::optional<Term> push(const Term& t) {
    const std::size_t n = t.scope();
    std::span<const Term> v = t.args();
    const Term& s = t.subject();
    if (is_identity_prefix(v, n)) {
      if (!tick()) return std::nullopt;
      return lift(s, n - s.scope());
    }
    Term head = s.kind() == TermKind::Subst ? whnf(s) : s;
    if (head.kind() == TermKind::Subst || !tick()) {
      if (!head.same_node(s)) return mk_subst(std::move(head), {v.begin(), v.end()}, n);
      return std::nullopt;
    }
    switch (head.kind()) {
      case TermKind::Var:
        return v[head.index() - 1];
      case TermKind::App:
        return mk_app(mk_subst(head.fun(), {v.begin(), v.end()}, n),
                      mk_subst(head.arg(), {v.begin(), v.end()}, n));
      case TermKind::Abs: {
        std::vector<Term> ext;
        ext.reserve(v.size() + 1);
        for (const Term& a : v) ext.push_back(lift(a, 1));
        ext.push_back(mk_var(n + 1, n + 1));
        return mk_abs(mk_subst(head.body(), std::move(ext), n + 1));
      }
      case TermKind::Subst:
        break;
    }
    return std::nullopt;
  }

  Term norm(const Term& t) {
    Term h = whnf(t);
    if (exhausted_) return h;
    switch (h.kind()) {
      case TermKind::Abs:
        return mk_abs(norm(h.body()));
      case TermKind::App:
        return norm_spine(h);
      default:
        return h;
    }
  }

  // h is a variable-headed spine already in weak head normal form.
  Term norm_spine(const Term& h) {
    if (h.kind() != TermKind::App) return h;
    Term f = norm_spine(h.fun());
    Term a = exhausted_ ? h.arg() : norm(h.arg());
    return mk_app(std::move(f), std::move(a));
  }

  std::size_t fuel_;
  std::size_t spent_ = 0;
  bool exhausted_ = false;
};

}  // namespace

NormalizeResult normalize(const Term& t, std::size_t fuel) {
  Normalizer nz(fuel);
  Term out = nz.run(t);
  if (nz.exhausted()) return FuelExhausted{std::move(out), nz.spent()};
  return NormalForm{std::move(out), nz.spent()};
}

EqResult operator&&(const EqResult& a, const EqResult& b) {
  const std::size_t spent = a.fuel_spent + b.fuel_spent;
  if (a.is_distinct() || b.is_distinct()) return EqResult::distinct(spent);
  if (a.is_unknown() || b.is_unknown()) return EqResult::unknown(spent);
  return EqResult::equal(spent);
}

std::string to_string(EqVerdict v) {
  switch (v) {
    case EqVerdict::Equal: return "Equal";
    case EqVerdict::Distinct: return "Distinct";
    case EqVerdict::Unknown: return "Unknown";
  }
  return "?";
}

EqResult beta_eq(const Term& s, const Term& t, std::size_t fuel) {
  if (s.scope() != t.scope()) {
    throw TermError("beta_eq on scopes " + std::to_string(s.scope()) + " and " + std::to_string(t.scope()));
  }
  if (s == t) return EqResult::equal();
  NormalizeResult a = normalize(s, fuel);
  NormalizeResult b = normalize(t, fuel);
  const auto spent = [](const NormalizeResult& r) {
    return std::visit([](const auto& x) { return x.fuel_spent; }, r);
  };
  const std::size_t total = spent(a) + spent(b);
  if (std::holds_alternative<FuelExhausted>(a) || std::holds_alternative<FuelExhausted>(b)) {
    return EqResult::unknown(total);
  }
  const bool same = std::get<NormalForm>(a).term == std::get<NormalForm>(b).term;
  return same ? EqResult::equal(total) : EqResult::distinct(total);
}

}  // namespace scottrep
