#include "lambdamap/term_ops.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>

#include "lambdamap/errors.hpp"

namespace lambdamap {

const char* to_string(LinearityViolation kind) noexcept {
  switch (kind) {
    case LinearityViolation::variable_used_twice:
      return "variable used twice";
    case LinearityViolation::unbound_variable:
      return "unbound variable";
    case LinearityViolation::context_variable_unused:
      return "context variable unused";
    case LinearityViolation::binder_unused:
      return "bound variable unused";
    case LinearityViolation::duplicate_context_variable:
      return "duplicate context variable";
  }
  return "linearity violation";
}

LinearityError::LinearityError(LinearityViolation kind, const std::string& variable)
    : std::runtime_error(std::string(to_string(kind)) + ": " + variable), kind_(kind), variable_(variable) {}

namespace {

// Each variable in scope gets a key; keys grow with binding depth, so sorting
// free variables by key gives the ambient context order. With build == false
// only the keys are tracked.
class Deriver {
 public:
  Deriver(const Context& context, bool build) : build_(build) {
    for (const auto& name : context) {
      auto& stack = scope_[name];
      if (!stack.empty()) throw LinearityError(LinearityViolation::duplicate_context_variable, name);
      stack.push_back(fresh_key(name));
    }
  }

  struct Result {
    std::optional<Derivation> derivation;  // set when building
    std::vector<std::size_t> keys;
  };

  Result derive(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::variable: {
        const auto it = scope_.find(t.name());
        if (it == scope_.end() || it->second.empty()) {
          throw LinearityError(LinearityViolation::unbound_variable, t.name());
        }
        Result out;
        out.keys.push_back(it->second.back());
        if (build_) out.derivation = Derivation{Derivation::Rule::variable, {t.name()}, t, {}, 0};
        return out;
      }
      case Term::Kind::application: {
        Result left = derive(t.function());
        Result right = derive(t.argument());
        Result out;
        // Merge by key; count inversions of the concatenation.
        std::size_t i = 0;
        std::size_t j = 0;
        std::size_t exchanges = 0;
        const auto& lk = left.keys;
        const auto& rk = right.keys;
        out.keys.reserve(lk.size() + rk.size());
        while (i < lk.size() || j < rk.size()) {
          if (i < lk.size() && j < rk.size() && lk[i] == rk[j]) {
            throw LinearityError(LinearityViolation::variable_used_twice, names_[lk[i]]);
          }
          if (j == rk.size() || (i < lk.size() && lk[i] < rk[j])) {
            out.keys.push_back(lk[i++]);
          } else {
            exchanges += lk.size() - i;
            out.keys.push_back(rk[j++]);
          }
        }
        if (build_) {
          out.derivation = Derivation{Derivation::Rule::application, {}, t, {}, exchanges};
          for (std::size_t key : out.keys) out.derivation->context.push_back(names_[key]);
          out.derivation->premises.push_back(std::move(*left.derivation));
          out.derivation->premises.push_back(std::move(*right.derivation));
        }
        return out;
      }
      case Term::Kind::abstraction: {
        const std::size_t key = fresh_key(t.name());
        scope_[t.name()].push_back(key);
        Result body = derive(t.body());
        scope_[t.name()].pop_back();
        if (body.keys.empty() || body.keys.back() != key) {
          throw LinearityError(LinearityViolation::binder_unused, t.name());
        }
        Result out;
        out.keys.assign(body.keys.begin(), body.keys.end() - 1);
        if (build_) {
          const Context& inner = body.derivation->context;
          out.derivation = Derivation{Derivation::Rule::abstraction, Context(inner.begin(), inner.end() - 1), t, {}, 0};
          out.derivation->premises.push_back(std::move(*body.derivation));
        }
        return out;
      }
    }
    throw InternalError("unknown term kind");
  }

 private:
  std::size_t fresh_key(const std::string& name) {
    names_.push_back(name);
    return names_.size() - 1;
  }

  bool build_;
  std::unordered_map<std::string, std::vector<std::size_t>> scope_;
  std::vector<std::string> names_;
};

std::vector<std::size_t> checked_keys(const Context& context, const Term& term, bool build,
                                      std::optional<Derivation>* derivation) {
  Deriver deriver(context, build);
  Deriver::Result result = deriver.derive(term);
  std::vector<bool> used(context.size(), false);
  for (std::size_t key : result.keys) {
    if (key < context.size()) used[key] = true;
  }
  for (std::size_t i = 0; i < context.size(); ++i) {
    if (!used[i]) throw LinearityError(LinearityViolation::context_variable_unused, context[i]);
  }
  if (derivation) *derivation = std::move(result.derivation);
  return std::move(result.keys);
}

void flatten(const Derivation& d, std::vector<LinearTerm>& out) {
  out.push_back(detail::LinearTermAccess::make_unchecked(d.context, d.term));
  for (const auto& p : d.premises) flatten(p, out);
}

void encode(const Term& t, std::unordered_map<std::string, std::vector<std::int32_t>>& scope,
            std::int32_t depth, std::vector<std::int32_t>& code) {
  switch (t.kind()) {
    case Term::Kind::variable:
      code.push_back(scope.at(t.name()).back());
      return;
    case Term::Kind::application:
      code.push_back(CanonicalTerm::application);
      encode(t.function(), scope, depth, code);
      encode(t.argument(), scope, depth, code);
      return;
    case Term::Kind::abstraction:
      code.push_back(CanonicalTerm::abstraction);
      scope[t.name()].push_back(depth);
      encode(t.body(), scope, depth + 1, code);
      scope[t.name()].pop_back();
      return;
  }
}

class Decoder {
 public:
  Decoder(const CanonicalTerm& c, const Context& context)
      : code_(c.code()), context_(context), next_name_(context.size() + 1) {}

  Term decode() {
    Term t = next();
    if (pos_ != code_.size()) throw InvalidArgument("trailing tokens in canonical code");
    return t;
  }

 private:
  Term next() {
    if (pos_ >= code_.size()) throw InvalidArgument("truncated canonical code");
    const std::int32_t token = code_[pos_++];
    if (token == CanonicalTerm::application) {
      Term f = next();
      Term a = next();
      return Term::app(std::move(f), std::move(a));
    }
    if (token == CanonicalTerm::abstraction) {
      binders_.push_back("x" + std::to_string(next_name_++));
      Term body = next();
      std::string name = std::move(binders_.back());
      binders_.pop_back();
      return Term::abs(std::move(name), std::move(body));
    }
    if (CanonicalTerm::is_free_token(token)) {
      const std::size_t position = CanonicalTerm::free_position(token);
      if (position >= context_.size()) throw InvalidArgument("free variable outside the context");
      return Term::var(context_[position]);
    }
    if (static_cast<std::size_t>(token) >= binders_.size()) throw InvalidArgument("dangling bound variable");
    return Term::var(binders_[static_cast<std::size_t>(token)]);
  }

  const std::vector<std::int32_t>& code_;
  const Context& context_;
  std::vector<std::string> binders_;
  std::size_t next_name_;
  std::size_t pos_ = 0;
};

std::size_t free_count(const Term& t, bool is_root, bool& closed_proper) {
  switch (t.kind()) {
    case Term::Kind::variable:
      return 1;
    case Term::Kind::application: {
      const std::size_t n = free_count(t.function(), false, closed_proper) +
                            free_count(t.argument(), false, closed_proper);
      if (n == 0 && !is_root) closed_proper = true;
      return n;
    }
    case Term::Kind::abstraction: {
      const std::size_t n = free_count(t.body(), false, closed_proper) - 1;
      if (n == 0 && !is_root) closed_proper = true;
      return n;
    }
  }
  return 0;
}

void count_nodes(const Term& t, TermSize& size) {
  switch (t.kind()) {
    case Term::Kind::variable:
      return;
    case Term::Kind::application:
      ++size.applications;
      count_nodes(t.function(), size);
      count_nodes(t.argument(), size);
      return;
    case Term::Kind::abstraction:
      ++size.abstractions;
      count_nodes(t.body(), size);
      return;
  }
}

}  // namespace

Derivation check_linear(const Context& context, const Term& term) {
  std::optional<Derivation> d;
  checked_keys(context, term, true, &d);
  // The root judgment is stated in the given context order.
  d->context = context;
  return std::move(*d);
}

namespace detail {
void validate_linear(const Context& context, const Term& term) { checked_keys(context, term, false, nullptr); }
}  // namespace detail

CanonicalTerm alpha_canonical(const LinearTerm& t) {
  std::unordered_map<std::string, std::vector<std::int32_t>> scope;
  for (std::size_t i = 0; i < t.context().size(); ++i) {
    scope[t.context()[i]].push_back(CanonicalTerm::free_token(i));
  }
  std::vector<std::int32_t> code;
  encode(t.term(), scope, 0, code);
  return CanonicalTerm(t.context().size(), std::move(code));
}

LinearTerm from_canonical(const CanonicalTerm& c) {
  Context context;
  for (std::size_t i = 0; i < c.context_length(); ++i) context.push_back("x" + std::to_string(i + 1));
  Term term = Decoder(c, context).decode();
  return LinearTerm(std::move(context), std::move(term));
}

bool alpha_equivalent(const LinearTerm& a, const LinearTerm& b) { return alpha_canonical(a) == alpha_canonical(b); }

std::vector<LinearTerm> subterms(const LinearTerm& t) {
  std::vector<LinearTerm> out;
  flatten(check_linear(t.context(), t.term()), out);
  return out;
}

bool is_decomposable(const LinearTerm& t) {
  bool closed_proper = false;
  free_count(t.term(), true, closed_proper);
  return closed_proper;
}

LinearTerm lambda_lift(const LinearTerm& t) {
  Term lifted = t.term();
  for (auto it = t.context().rbegin(); it != t.context().rend(); ++it) lifted = Term::abs(*it, std::move(lifted));
  return detail::LinearTermAccess::make_unchecked({}, std::move(lifted));
}

TermSize term_size(const Term& t) {
  TermSize size;
  count_nodes(t, size);
  return size;
}

TermSize term_size(const LinearTerm& t) { return term_size(t.term()); }

}  // namespace lambdamap
