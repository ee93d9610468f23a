#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace scottrep {

// Thrown whenever a construction would violate the scope discipline.
class TermError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class TermKind { Var, App, Abs, Subst };

// An immutable, scoped, untyped lambda term with explicit substitutions.
//
// Variables are de Bruijn levels: at scope n the free variables are
// x_1 .. x_n, and an abstraction at scope n binds x_{n+1}.  Child order is
// the order used by rewrite paths: App = [fun, arg], Abs = [body],
// Subst = [subject, arg_1, .., arg_m].
class Term {
 public:
  TermKind kind() const noexcept { return node_->kind; }
  std::size_t scope() const noexcept { return node_->scope; }

  std::size_t index() const;  // Var only
  const Term& fun() const;    // App only
  const Term& arg() const;    // App only
  const Term& body() const;   // Abs only
  const Term& subject() const;  // Subst only
  std::span<const Term> args() const;  // Subst only

  std::span<const Term> children() const noexcept { return node_->children; }

  std::size_t size() const noexcept { return node_->size; }
  std::size_t hash() const noexcept { return node_->hash; }
  bool same_node(const Term& other) const noexcept { return node_ == other.node_; }

  friend bool operator==(const Term& a, const Term& b) noexcept;

 private:
  struct Node {
    TermKind kind;
    std::size_t scope;
    std::size_t index;
    std::vector<Term> children;
    std::size_t size;
    std::size_t hash;
  };

  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Term make(TermKind kind, std::size_t scope, std::size_t index, std::vector<Term> children);

  std::shared_ptr<const Node> node_;

  friend Term mk_var(std::size_t, std::size_t);
  friend Term mk_app(Term, Term);
  friend Term mk_abs(Term);
  friend Term mk_subst(Term, std::vector<Term>, std::size_t);
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept { return t.hash(); }
};

Term mk_var(std::size_t n, std::size_t i);
Term mk_app(Term fun, Term arg);
Term mk_abs(Term body);
Term mk_subst(Term subject, std::vector<Term> args, std::size_t n);
// Infers the target scope from the first argument; the tuple must be non-empty.
Term mk_subst(Term subject, std::vector<Term> args);

// Left-associated application f a_1 .. a_k.
Term mk_apps(Term fun, std::span<const Term> args);

// (x_{n,1}, .., x_{n,m}) with m <= n.
std::vector<Term> identity_tuple(std::size_t m, std::size_t n);
bool is_identity_prefix(std::span<const Term> args, std::size_t n);

// iota_{m,extra}: t • (x_1 .. x_m) at scope m + extra, as an explicit Subst.
Term weaken(const Term& t, std::size_t extra);

// Structural weakening: renames bound variables so t lives at scope + extra.
// The result is Subst-compatible and beta-equal to weaken(t, extra).
Term lift(const Term& t, std::size_t extra);

// The inverse of lift when the top `removed` free variables do not occur.
std::optional<Term> unlift(const Term& t, std::size_t removed);

// rho(f) = App(f • (x_1 .. x_n), x_{n+1}).
Term rho(const Term& f);

// A free variable x_i is used by t (through Subst subjects as well).
bool occurs_free(const Term& t, std::size_t i);
bool contains_subst(const Term& t);
bool is_beta_normal(const Term& t);

// Paths are child-index sequences from the root.
using Path = std::vector<std::size_t>;
std::optional<Term> subterm_at(const Term& t, std::span<const std::size_t> path);
// Replaces the subterm at `path`; the replacement must keep its scope.
Term replace_at(const Term& t, std::span<const std::size_t> path, const Term& replacement);
// Rebuilds a node of the same kind with new children.
Term with_children(const Term& t, std::vector<Term> children);

}  // namespace scottrep
