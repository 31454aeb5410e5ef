#include "lambdamap/term.hpp"

#include "lambdamap/term_ops.hpp"

namespace lambdamap {

Term Term::var(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::variable;
  node->name = std::move(name);
  return Term(std::move(node));
}

Term Term::app(Term function, Term argument) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::application;
  node->left = std::make_unique<Term>(std::move(function));
  node->right = std::make_unique<Term>(std::move(argument));
  return Term(std::move(node));
}

Term Term::abs(std::string binder, Term body) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::abstraction;
  node->name = std::move(binder);
  node->left = std::make_unique<Term>(std::move(body));
  return Term(std::move(node));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::variable:
      return a.name() == b.name();
    case Term::Kind::application:
      return a.function() == b.function() && a.argument() == b.argument();
    case Term::Kind::abstraction:
      return a.name() == b.name() && a.body() == b.body();
  }
  return false;
}

namespace detail {
void validate_linear(const Context& context, const Term& term);
}

LinearTerm::LinearTerm(Context context, Term term) : context_(std::move(context)), term_(std::move(term)) {
  detail::validate_linear(context_, term_);
}

namespace {

void print(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::variable:
      out += t.name();
      return;
    case Term::Kind::abstraction:
      out += '\\';
      out += t.name();
      out += '.';
      print(t.body(), out);
      return;
    case Term::Kind::application: {
      const Term& f = t.function();
      if (f.is_abs()) {
        out += '(';
        print(f, out);
        out += ')';
      } else {
        print(f, out);
      }
      out += ' ';
      const Term& a = t.argument();
      if (a.is_var()) {
        out += a.name();
      } else {
        out += '(';
        print(a, out);
        out += ')';
      }
      return;
    }
  }
}

}  // namespace

std::string to_string(const Term& t) {
  std::string out;
  print(t, out);
  return out;
}

std::string to_string(const LinearTerm& t) {
  std::string out;
  for (std::size_t i = 0; i < t.context().size(); ++i) {
    if (i > 0) out += ", ";
    out += t.context()[i];
  }
  if (!t.context().empty()) out += " |- ";
  out += to_string(t.term());
  return out;
}

std::string to_string(const CanonicalTerm& c) {
  std::string out;
  for (std::int32_t token : c.code()) {
    if (!out.empty()) out += ' ';
    if (token == CanonicalTerm::application) {
      out += '@';
    } else if (token == CanonicalTerm::abstraction) {
      out += '\\';
    } else if (CanonicalTerm::is_free_token(token)) {
      out += '$' + std::to_string(CanonicalTerm::free_position(token));
    } else {
      out += '#' + std::to_string(token);
    }
  }
  return out;
}

}  // namespace lambdamap
