#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace lambdamap {

// Immutable lambda term AST. Copies share structure.
class Term {
 public:
  enum class Kind : std::uint8_t { variable, application, abstraction };

  static Term var(std::string name);
  static Term app(Term function, Term argument);
  static Term abs(std::string binder, Term body);

  Kind kind() const noexcept { return node_->kind; }
  bool is_var() const noexcept { return kind() == Kind::variable; }
  bool is_app() const noexcept { return kind() == Kind::application; }
  bool is_abs() const noexcept { return kind() == Kind::abstraction; }

  // Variable name, or the binder of an abstraction.
  const std::string& name() const noexcept { return node_->name; }
  const Term& function() const noexcept { return *node_->left; }
  const Term& argument() const noexcept { return *node_->right; }
  const Term& body() const noexcept { return *node_->left; }

  // Structural equality, names included.
  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::unique_ptr<Term> left;
    std::unique_ptr<Term> right;
  };

  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Ordered list of distinct free variables.
using Context = std::vector<std::string>;

namespace detail {
struct LinearTermAccess;
}

// A context together with a term that is linear in it. Construction checks
// linearity, so every value satisfies the invariant.
class LinearTerm {
 public:
  // Throws LinearityError.
  LinearTerm(Context context, Term term);

  const Context& context() const noexcept { return context_; }
  const Term& term() const noexcept { return term_; }
  bool is_closed() const noexcept { return context_.empty(); }

 private:
  friend struct detail::LinearTermAccess;
  struct unchecked_t {};
  LinearTerm(unchecked_t, Context context, Term term)
      : context_(std::move(context)), term_(std::move(term)) {}

  Context context_;
  Term term_;
};

namespace detail {
// For builders whose output is linear by construction.
struct LinearTermAccess {
  static LinearTerm make_unchecked(Context context, Term term) {
    return LinearTerm(LinearTerm::unchecked_t{}, std::move(context), std::move(term));
  }
};
}  // namespace detail

// Alpha-normal form as a prefix code. Applications and abstractions are
// markers; a bound variable is the nesting depth of its binder (0 for the
// outermost abstraction); a free variable is encoded by its context position
// as free_base - position.
class CanonicalTerm {
 public:
  static constexpr std::int32_t application = -1;
  static constexpr std::int32_t abstraction = -2;
  static constexpr std::int32_t free_base = -3;

  CanonicalTerm() = default;
  CanonicalTerm(std::size_t context_length, std::vector<std::int32_t> code)
      : context_length_(context_length), code_(std::move(code)) {}

  std::size_t context_length() const noexcept { return context_length_; }
  const std::vector<std::int32_t>& code() const noexcept { return code_; }

  static constexpr std::int32_t free_token(std::size_t position) {
    return free_base - static_cast<std::int32_t>(position);
  }
  static constexpr bool is_free_token(std::int32_t token) { return token <= free_base; }
  static constexpr std::size_t free_position(std::int32_t token) {
    return static_cast<std::size_t>(free_base - token);
  }

  friend bool operator==(const CanonicalTerm&, const CanonicalTerm&) = default;
  friend auto operator<=>(const CanonicalTerm&, const CanonicalTerm&) = default;

 private:
  std::size_t context_length_ = 0;
  std::vector<std::int32_t> code_;
};

// Printed in the concrete syntax: "\x. body", left-associative juxtaposition.
std::string to_string(const Term& t);
// "x, y |- t" for open terms, just "t" when closed.
std::string to_string(const LinearTerm& t);
// Compact code such as "\\.\\.@ #0 #1" (free variables as "$i").
std::string to_string(const CanonicalTerm& c);

}  // namespace lambdamap
