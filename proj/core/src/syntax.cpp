#include "scottrep/syntax.hpp"

#include <cctype>
#include <charconv>
#include <memory>
#include <vector>

namespace scottrep {

namespace {

struct Raw {
  TermKind kind;
  std::size_t index = 0;
  std::vector<std::unique_ptr<Raw>> kids;
  std::size_t position = 0;
};

using RawPtr = std::unique_ptr<Raw>;

RawPtr raw(TermKind kind, std::size_t position) {
  auto r = std::make_unique<Raw>();
  r->kind = kind;
  r->position = position;
  return r;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RawPtr parse_all(bool allow_scope_suffix) {
    RawPtr t = expr();
    skip_ws();
    if (!at_end() && !(allow_scope_suffix && peek() == '@')) fail("unexpected '" + std::string(1, peek()) + "'");
    return t;
  }

  std::size_t parse_scope_suffix() {
    skip_ws();
    if (at_end() || peek() != '@') fail("expected '@n' scope suffix");
    ++pos_;
    skip_ws();
    const std::size_t n = number();
    skip_ws();
    if (!at_end()) fail("trailing input after scope suffix");
    return n;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::size_t number() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a natural number");
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_) fail("number out of range");
    return value;
  }

  bool starts_item() {
    skip_ws();
    if (at_end()) return false;
    const char c = peek();
    return c == 'x' || c == '(' || c == '\\';
  }

  // An application sequence, with postfix substitutions applying to
  // everything parsed so far.
  RawPtr expr() {
    RawPtr acc = item();
    for (;;) {
      skip_ws();
      if (at_end()) return acc;
      if (peek() == '[') {
        acc = subst(std::move(acc));
      } else if (starts_item()) {
        const std::size_t at = pos_;
        RawPtr rhs = item();
        RawPtr app = raw(TermKind::App, at);
        app->kids.push_back(std::move(acc));
        app->kids.push_back(std::move(rhs));
        acc = std::move(app);
      } else {
        return acc;
      }
    }
  }

  // Like expr, but stops before a '[' so the substitution binds outside.
  RawPtr lambda_body() {
    RawPtr acc = item();
    while (starts_item()) {
      const std::size_t at = pos_;
      RawPtr rhs = item();
      RawPtr app = raw(TermKind::App, at);
      app->kids.push_back(std::move(acc));
      app->kids.push_back(std::move(rhs));
      acc = std::move(app);
    }
    return acc;
  }

  RawPtr subst(RawPtr subject) {
    RawPtr s = raw(TermKind::Subst, pos_);
    expect('[');
    s->kids.push_back(std::move(subject));
    skip_ws();
    if (!at_end() && peek() == ']') {
      ++pos_;
      return s;
    }
    for (;;) {
      s->kids.push_back(expr());
      skip_ws();
      if (at_end()) fail("unterminated substitution");
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() == ']') {
        ++pos_;
        return s;
      }
      fail("expected ',' or ']'");
    }
  }

  RawPtr item() {
    skip_ws();
    if (at_end()) fail("unexpected end of input");
    const std::size_t at = pos_;
    const char c = peek();
    if (c == 'x') {
      ++pos_;
      RawPtr v = raw(TermKind::Var, at);
      v->index = number();
      return v;
    }
    if (c == '(') {
      ++pos_;
      RawPtr inner = expr();
      expect(')');
      return inner;
    }
    if (c == '\\') {
      ++pos_;
      expect('.');
      RawPtr a = raw(TermKind::Abs, at);
      a->kids.push_back(lambda_body());
      return a;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Term check(const Raw& r, std::size_t n) {
  switch (r.kind) {
    case TermKind::Var:
      return mk_var(n, r.index);
    case TermKind::App:
      return mk_app(check(*r.kids[0], n), check(*r.kids[1], n));
    case TermKind::Abs:
      return mk_abs(check(*r.kids[0], n + 1));
    case TermKind::Subst: {
      const std::size_t m = r.kids.size() - 1;
      std::vector<Term> args;
      args.reserve(m);
      for (std::size_t k = 1; k < r.kids.size(); ++k) args.push_back(check(*r.kids[k], n));
      return mk_subst(check(*r.kids[0], m), std::move(args), n);
    }
  }
  throw std::logic_error("unreachable");
}

void emit(const Term& t, std::string& out);

void emit_fun(const Term& t, std::string& out) {
  if (t.kind() == TermKind::Abs || t.kind() == TermKind::Subst) {
    out += '(';
    emit(t, out);
    out += ')';
  } else {
    emit(t, out);
  }
}

void emit_arg(const Term& t, std::string& out) {
  if (t.kind() == TermKind::Var) {
    emit(t, out);
  } else {
    out += '(';
    emit(t, out);
    out += ')';
  }
}

void emit(const Term& t, std::string& out) {
  switch (t.kind()) {
    case TermKind::Var:
      out += 'x';
      out += std::to_string(t.index());
      return;
    case TermKind::App:
      emit_fun(t.fun(), out);
      out += ' ';
      emit_arg(t.arg(), out);
      return;
    case TermKind::Abs:
      out += "\\.";
      if (t.body().kind() == TermKind::Subst) {
        out += '(';
        emit(t.body(), out);
        out += ')';
      } else {
        emit(t.body(), out);
      }
      return;
    case TermKind::Subst: {
      emit(t.subject(), out);
      out += " [";
      bool first = true;
      for (const Term& a : t.args()) {
        if (!first) out += ',';
        first = false;
        emit(a, out);
      }
      out += ']';
      return;
    }
  }
}

}  // namespace

Term parse_term(std::string_view text, std::size_t scope) {
  Parser p(text);
  RawPtr r = p.parse_all(false);
  return check(*r, scope);
}

Term parse_scoped(std::string_view text) {
  Parser p(text);
  RawPtr r = p.parse_all(true);
  const std::size_t n = p.parse_scope_suffix();
  return check(*r, n);
}

std::string render(const Term& t) {
  std::string out;
  emit(t, out);
  return out;
}

std::string render_scoped(const Term& t) { return render(t) + " @" + std::to_string(t.scope()); }

}  // namespace scottrep
