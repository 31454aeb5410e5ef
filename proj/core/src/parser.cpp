#include "lambdamap/parser.hpp"

#include <cctype>
#include <string>

#include "lambdamap/errors.hpp"

namespace lambdamap {

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Term parse() {
    Term t = term();
    skip_space();
    if (pos_ < text_.size()) {
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    return t;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_atom_start() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return is_name_start(c) || c == '\\' || c == '(';
  }

  std::string name() {
    skip_space();
    if (pos_ >= text_.size() || !is_name_start(text_[pos_])) throw ParseError("expected a variable name", pos_);
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  Term term() {
    if (!at_atom_start()) throw ParseError("expected a term", pos_);
    Term t = atom();
    while (at_atom_start()) t = Term::app(std::move(t), atom());
    return t;
  }

  Term atom() {
    skip_space();
    const char c = text_[pos_];
    if (c == '\\') {
      ++pos_;
      std::string binder = name();
      expect('.');
      return Term::abs(std::move(binder), term());
    }
    if (c == '(') {
      ++pos_;
      Term inner = term();
      expect(')');
      return inner;
    }
    return Term::var(name());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Term parse_raw_term(std::string_view text) { return Parser(text).parse(); }

LinearTerm parse_term(std::string_view text, const Context& context) {
  return LinearTerm(context, parse_raw_term(text));
}

Context parse_context(std::string_view text) {
  Context out;
  if (trim(text).empty()) return out;
  std::size_t offset = 0;
  while (true) {
    const std::size_t comma = text.find(',', offset);
    const std::string_view piece = text.substr(offset, comma == std::string_view::npos ? text.npos : comma - offset);
    const std::string_view n = trim(piece);
    if (n.empty() || !is_name_start(n.front())) throw ParseError("expected a context variable name", offset);
    for (char c : n) {
      if (!is_name_char(c)) throw ParseError("invalid character in context variable name", offset);
    }
    out.emplace_back(n);
    if (comma == std::string_view::npos) break;
    offset = comma + 1;
  }
  return out;
}

LinearTerm parse_judgment(std::string_view text) {
  const std::size_t turnstile = text.find("|-");
  if (turnstile == std::string_view::npos) return parse_term(text, {});
  const Context context = parse_context(text.substr(0, turnstile));
  // Blank out the context so parse errors report offsets into the whole line.
  std::string body(turnstile + 2, ' ');
  body += text.substr(turnstile + 2);
  return parse_term(body, context);
}

}  // namespace lambdamap
