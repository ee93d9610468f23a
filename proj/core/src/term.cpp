#include "scottrep/term.hpp"

#include <functional>

namespace scottrep {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

const char* kind_name(TermKind k) {
  switch (k) {
    case TermKind::Var: return "Var";
    case TermKind::App: return "App";
    case TermKind::Abs: return "Abs";
    case TermKind::Subst: return "Subst";
  }
  return "?";
}

[[noreturn]] void wrong_kind(TermKind have, const char* accessor) {
  throw std::logic_error(std::string(accessor) + "() called on a " + kind_name(have) + " node");
}

}  // namespace

Term Term::make(TermKind kind, std::size_t scope, std::size_t index, std::vector<Term> children) {
  std::size_t size = 1;
  std::size_t h = mix(mix(mix(0, static_cast<std::size_t>(kind)), scope), index);
  for (const Term& c : children) {
    size += c.size();
    h = mix(h, c.hash());
  }
  return Term(std::make_shared<const Node>(Node{kind, scope, index, std::move(children), size, h}));
}

std::size_t Term::index() const {
  if (kind() != TermKind::Var) wrong_kind(kind(), "index");
  return node_->index;
}
const Term& Term::fun() const {
  if (kind() != TermKind::App) wrong_kind(kind(), "fun");
  return node_->children[0];
}
const Term& Term::arg() const {
  if (kind() != TermKind::App) wrong_kind(kind(), "arg");
  return node_->children[1];
}
const Term& Term::body() const {
  if (kind() != TermKind::Abs) wrong_kind(kind(), "body");
  return node_->children[0];
}
const Term& Term::subject() const {
  if (kind() != TermKind::Subst) wrong_kind(kind(), "subject");
  return node_->children[0];
}
std::span<const Term> Term::args() const {
  if (kind() != TermKind::Subst) wrong_kind(kind(), "args");
  return std::span<const Term>(node_->children).subspan(1);
}

bool operator==(const Term& a, const Term& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size()) return false;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.scope != y.scope || x.index != y.index) return false;
  if (x.children.size() != y.children.size()) return false;
  for (std::size_t i = 0; i < x.children.size(); ++i) {
    if (!(x.children[i] == y.children[i])) return false;
  }
  return true;
}

Term mk_var(std::size_t n, std::size_t i) {
  if (i == 0) throw TermError("variable index must be at least 1");
  if (i > n) {
    throw TermError("index " + std::to_string(i) + " exceeds scope " + std::to_string(n));
  }
  return Term::make(TermKind::Var, n, i, {});
}

Term mk_app(Term fun, Term arg) {
  if (fun.scope() != arg.scope()) {
    throw TermError("scope mismatch in application: " + std::to_string(fun.scope()) + " vs " +
                    std::to_string(arg.scope()));
  }
  const std::size_t n = fun.scope();
  return Term::make(TermKind::App, n, 0, {std::move(fun), std::move(arg)});
}

Term mk_abs(Term body) {
  if (body.scope() == 0) throw TermError("abstraction body must have positive scope");
  const std::size_t n = body.scope() - 1;
  return Term::make(TermKind::Abs, n, 0, {std::move(body)});
}

Term mk_subst(Term subject, std::vector<Term> args, std::size_t n) {
  if (args.size() != subject.scope()) {
    throw TermError("arg count " + std::to_string(args.size()) + " != subject scope " +
                    std::to_string(subject.scope()));
  }
  std::vector<Term> children;
  children.reserve(args.size() + 1);
  children.push_back(std::move(subject));
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (args[k].scope() != n) {
      throw TermError("substitution argument " + std::to_string(k + 1) + " has scope " +
                      std::to_string(args[k].scope()) + ", expected " + std::to_string(n));
    }
    children.push_back(std::move(args[k]));
  }
  return Term::make(TermKind::Subst, n, 0, std::move(children));
}

Term mk_subst(Term subject, std::vector<Term> args) {
  if (args.empty()) throw TermError("cannot infer the scope of an empty substitution");
  const std::size_t n = args.front().scope();
  return mk_subst(std::move(subject), std::move(args), n);
}

Term mk_apps(Term fun, std::span<const Term> args) {
  for (const Term& a : args) fun = mk_app(std::move(fun), a);
  return fun;
}

std::vector<Term> identity_tuple(std::size_t m, std::size_t n) {
  if (m > n) throw TermError("identity tuple of length " + std::to_string(m) + " at scope " + std::to_string(n));
  std::vector<Term> out;
  out.reserve(m);
  for (std::size_t i = 1; i <= m; ++i) out.push_back(mk_var(n, i));
  return out;
}

bool is_identity_prefix(std::span<const Term> args, std::size_t n) {
  if (args.size() > n) return false;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const Term& a = args[i];
    if (a.kind() != TermKind::Var || a.index() != i + 1) return false;
  }
  return true;
}

Term weaken(const Term& t, std::size_t extra) {
  const std::size_t m = t.scope();
  return mk_subst(t, identity_tuple(m, m + extra), m + extra);
}

namespace {

// Renames variables above `cut` by +extra; Subst subjects have their own
// context and are left alone.
Term rename_up(const Term& t, std::size_t cut, std::size_t extra) {
  switch (t.kind()) {
    case TermKind::Var: {
      const std::size_t i = t.index();
      return mk_var(t.scope() + extra, i <= cut ? i : i + extra);
    }
    case TermKind::App:
      return mk_app(rename_up(t.fun(), cut, extra), rename_up(t.arg(), cut, extra));
    case TermKind::Abs:
      return mk_abs(rename_up(t.body(), cut, extra));
    case TermKind::Subst: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const Term& a : t.args()) args.push_back(rename_up(a, cut, extra));
      return mk_subst(t.subject(), std::move(args), t.scope() + extra);
    }
  }
  throw std::logic_error("unreachable");
}

std::optional<Term> rename_down(const Term& t, std::size_t cut, std::size_t removed) {
  switch (t.kind()) {
    case TermKind::Var: {
      const std::size_t i = t.index();
      if (i <= cut) return mk_var(t.scope() - removed, i);
      if (i <= cut + removed) return std::nullopt;
      return mk_var(t.scope() - removed, i - removed);
    }
    case TermKind::App: {
      auto f = rename_down(t.fun(), cut, removed);
      if (!f) return std::nullopt;
      auto a = rename_down(t.arg(), cut, removed);
      if (!a) return std::nullopt;
      return mk_app(std::move(*f), std::move(*a));
    }
    case TermKind::Abs: {
      auto b = rename_down(t.body(), cut, removed);
      if (!b) return std::nullopt;
      return mk_abs(std::move(*b));
    }
    case TermKind::Subst: {
      std::vector<Term> args;
      for (const Term& a : t.args()) {
        auto r = rename_down(a, cut, removed);
        if (!r) return std::nullopt;
        args.push_back(std::move(*r));
      }
      return mk_subst(t.subject(), std::move(args), t.scope() - removed);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

Term lift(const Term& t, std::size_t extra) {
  if (extra == 0) return t;
  return rename_up(t, t.scope(), extra);
}

std::optional<Term> unlift(const Term& t, std::size_t removed) {
  if (removed == 0) return t;
  if (removed > t.scope()) return std::nullopt;
  return rename_down(t, t.scope() - removed, removed);
}

Term rho(const Term& f) {
  const std::size_t n = f.scope();
  return mk_app(mk_subst(f, identity_tuple(n, n + 1), n + 1), mk_var(n + 1, n + 1));
}

bool occurs_free(const Term& t, std::size_t i) {
  switch (t.kind()) {
    case TermKind::Var:
      return t.index() == i;
    case TermKind::Subst:
      for (const Term& a : t.args()) {
        if (occurs_free(a, i)) return true;
      }
      return false;
    default:
      for (const Term& c : t.children()) {
        if (occurs_free(c, i)) return true;
      }
      return false;
  }
}

bool contains_subst(const Term& t) {
  if (t.kind() == TermKind::Subst) return true;
  for (const Term& c : t.children()) {
    if (contains_subst(c)) return true;
  }
  return false;
}

bool is_beta_normal(const Term& t) {
  switch (t.kind()) {
    case TermKind::Var: return true;
    case TermKind::Subst: return false;
    case TermKind::Abs: return is_beta_normal(t.body());
    case TermKind::App:
      return t.fun().kind() != TermKind::Abs && is_beta_normal(t.fun()) && is_beta_normal(t.arg());
  }
  return false;
}

std::optional<Term> subterm_at(const Term& t, std::span<const std::size_t> path) {
  const Term* cur = &t;
  for (std::size_t step : path) {
    auto kids = cur->children();
    if (step >= kids.size()) return std::nullopt;
    cur = &kids[step];
  }
  return *cur;
}

Term with_children(const Term& t, std::vector<Term> children) {
  switch (t.kind()) {
    case TermKind::Var:
      if (!children.empty()) throw TermError("a variable has no children");
      return t;
    case TermKind::App:
      if (children.size() != 2) throw TermError("an application has two children");
      return mk_app(std::move(children[0]), std::move(children[1]));
    case TermKind::Abs:
      if (children.size() != 1) throw TermError("an abstraction has one child");
      return mk_abs(std::move(children[0]));
    case TermKind::Subst: {
      if (children.empty()) throw TermError("a substitution needs a subject");
      Term subject = std::move(children[0]);
      std::vector<Term> args(std::make_move_iterator(children.begin() + 1),
                             std::make_move_iterator(children.end()));
      return mk_subst(std::move(subject), std::move(args), t.scope());
    }
  }
  throw std::logic_error("unreachable");
}

Term replace_at(const Term& t, std::span<const std::size_t> path, const Term& replacement) {
  if (path.empty()) {
    if (replacement.scope() != t.scope()) {
      throw TermError("replacement has scope " + std::to_string(replacement.scope()) + ", expected " +
                      std::to_string(t.scope()));
    }
    return replacement;
  }
  auto kids = t.children();
  if (path[0] >= kids.size()) throw TermError("path component " + std::to_string(path[0]) + " out of range");
  std::vector<Term> children(kids.begin(), kids.end());
  children[path[0]] = replace_at(kids[path[0]], path.subspan(1), replacement);
  return with_children(t, std::move(children));
}

}  // namespace scottrep
