#pragma once

// Independent reference semantics for the term kernel: terms are translated
// into a conventional de Bruijn-index calculus with meta-level substitution,
// then reduced by textbook shifting and substitution.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "scottrep/rng.hpp"
#include "scottrep/term.hpp"

namespace oracle {

struct Node;
using Expr = std::shared_ptr<const Node>;

// Free: a top-level free variable (never substituted).  Bound: de Bruijn index.
struct Node {
  enum Kind { Free, Bound, App, Lam } kind;
  std::size_t n = 0;
  Expr a, b;
};

inline Expr free_var(std::size_t i) { return std::make_shared<const Node>(Node{Node::Free, i, nullptr, nullptr}); }
inline Expr bound(std::size_t k) { return std::make_shared<const Node>(Node{Node::Bound, k, nullptr, nullptr}); }
inline Expr app(Expr f, Expr x) { return std::make_shared<const Node>(Node{Node::App, 0, std::move(f), std::move(x)}); }
inline Expr lam(Expr body) { return std::make_shared<const Node>(Node{Node::Lam, 0, std::move(body), nullptr}); }

inline Expr shift(const Expr& e, std::size_t by, std::size_t cutoff = 0) {
  switch (e->kind) {
    case Node::Free: return e;
    case Node::Bound: return e->n >= cutoff ? bound(e->n + by) : e;
    case Node::App: return app(shift(e->a, by, cutoff), shift(e->b, by, cutoff));
    case Node::Lam: return lam(shift(e->a, by, cutoff + 1));
  }
  return e;
}

// e[k := s], removing binder k.
inline Expr subst(const Expr& e, std::size_t k, const Expr& s) {
  switch (e->kind) {
    case Node::Free: return e;
    case Node::Bound:
      if (e->n == k) return shift(s, k);
      return e->n > k ? bound(e->n - 1) : e;
    case Node::App: return app(subst(e->a, k, s), subst(e->b, k, s));
    case Node::Lam: return lam(subst(e->a, k + 1, s));
  }
  return e;
}

// env[i - 1] is the expression for level i, valid under the current binders.
inline Expr translate(const scottrep::Term& t, const std::vector<Expr>& env) {
  using scottrep::TermKind;
  switch (t.kind()) {
    case TermKind::Var: return env.at(t.index() - 1);
    case TermKind::App: return app(translate(t.fun(), env), translate(t.arg(), env));
    case TermKind::Abs: {
      std::vector<Expr> inner;
      inner.reserve(env.size() + 1);
      for (const Expr& e : env) inner.push_back(shift(e, 1));
      inner.push_back(bound(0));
      return lam(translate(t.body(), inner));
    }
    case TermKind::Subst: {
      std::vector<Expr> sub;
      for (const scottrep::Term& g : t.args()) sub.push_back(translate(g, env));
      return translate(t.subject(), sub);
    }
  }
  return nullptr;
}

inline Expr translate(const scottrep::Term& t) {
  std::vector<Expr> env;
  for (std::size_t i = 1; i <= t.scope(); ++i) env.push_back(free_var(i));
  return translate(t, env);
}

inline bool equal(const Expr& x, const Expr& y) {
  if (x->kind != y->kind || x->n != y->n) return false;
  switch (x->kind) {
    case Node::Free:
    case Node::Bound: return true;
    case Node::App: return equal(x->a, y->a) && equal(x->b, y->b);
    case Node::Lam: return equal(x->a, y->a);
  }
  return false;
}

inline std::size_t count_redexes(const Expr& e) {
  switch (e->kind) {
    case Node::Free:
    case Node::Bound: return 0;
    case Node::App: return (e->a->kind == Node::Lam ? 1 : 0) + count_redexes(e->a) + count_redexes(e->b);
    case Node::Lam: return count_redexes(e->a);
  }
  return 0;
}

// Contracts the k-th redex in pre-order (leftmost-outermost first).
inline Expr contract(const Expr& e, std::size_t& k, bool& done) {
  switch (e->kind) {
    case Node::Free:
    case Node::Bound: return e;
    case Node::Lam: return lam(contract(e->a, k, done));
    case Node::App: {
      if (e->a->kind == Node::Lam) {
        if (k == 0) {
          done = true;
          return subst(e->a->a, 0, e->b);
        }
        --k;
      }
      Expr f = contract(e->a, k, done);
      if (done) return app(f, e->b);
      return app(e->a, contract(e->b, k, done));
    }
  }
  return e;
}

// Normal order, or a uniformly random redex each step when rng is given.
inline std::optional<Expr> normalize(Expr e, std::size_t max_steps, scottrep::Rng* rng = nullptr) {
  for (std::size_t step = 0; step <= max_steps; ++step) {
    const std::size_t redexes = count_redexes(e);
    if (redexes == 0) return e;
    std::size_t k = rng ? rng->below(redexes) : 0;
    bool done = false;
    e = contract(e, k, done);
  }
  return std::nullopt;
}

inline std::string show(const Expr& e) {
  switch (e->kind) {
    case Node::Free: return "x" + std::to_string(e->n);
    case Node::Bound: return "#" + std::to_string(e->n);
    case Node::App: return "(" + show(e->a) + " " + show(e->b) + ")";
    case Node::Lam: return "\\." + show(e->a);
  }
  return "?";
}

}  // namespace oracle
