#include "lambdamap/typing.hpp"

#include <string>
#include <unordered_map>

#include "lambdamap/errors.hpp"

namespace lambdamap {

LinType LinType::variable(std::size_t id) {
  auto node = std::make_shared<Node>();
  node->id = id;
  return LinType(std::move(node));
}

LinType LinType::imp(LinType domain, LinType codomain) {
  auto node = std::make_shared<Node>();
  node->domain = std::make_unique<LinType>(std::move(domain));
  node->codomain = std::make_unique<LinType>(std::move(codomain));
  return LinType(std::move(node));
}

bool operator==(const LinType& a, const LinType& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_variable() != b.is_variable()) return false;
  if (a.is_variable()) return a.id() == b.id();
  return a.domain() == b.domain() && a.codomain() == b.codomain();
}

namespace {

std::string ascii_name(std::size_t id) {
  std::string name(1, static_cast<char>('a' + id % 26));
  if (id >= 26) name += std::to_string(id / 26);
  return name;
}

std::string greek_name(std::size_t id) {
  static const char* const letters[] = {"α", "β", "γ", "δ", "ε", "ζ", "η", "θ", "ι", "κ", "μ", "ν",
                                        "ξ", "π", "ρ", "σ", "τ", "υ", "φ", "χ", "ψ", "ω"};
  constexpr std::size_t count = sizeof(letters) / sizeof(letters[0]);
  std::string name = letters[id % count];
  if (id >= count) name += std::to_string(id / count);
  return name;
}

template <typename Namer>
void print_type(const LinType& t, const char* arrow, Namer namer, std::string& out) {
  if (t.is_variable()) {
    out += namer(t.id());
    return;
  }
  if (t.domain().is_variable()) {
    print_type(t.domain(), arrow, namer, out);
  } else {
    out += '(';
    print_type(t.domain(), arrow, namer, out);
    out += ')';
  }
  out += arrow;
  print_type(t.codomain(), arrow, namer, out);
}

void collect_paths(const Term& t, std::string& path, std::vector<std::string>& out) {
  out.push_back(path.empty() ? "root" : path);
  switch (t.kind()) {
    case Term::Kind::variable:
      return;
    case Term::Kind::application:
      path.push_back('f');
      collect_paths(t.function(), path, out);
      path.back() = 'a';
      collect_paths(t.argument(), path, out);
      path.pop_back();
      return;
    case Term::Kind::abstraction:
      path.push_back('b');
      collect_paths(t.body(), path, out);
      path.pop_back();
      return;
  }
}

// First-order unification over an arena of type nodes.
class Unifier {
 public:
  std::size_t fresh() {
    nodes_.push_back({true, nodes_.size(), 0, 0});
    return nodes_.size() - 1;
  }

  std::size_t imp(std::size_t domain, std::size_t codomain) {
    nodes_.push_back({false, 0, domain, codomain});
    return nodes_.size() - 1;
  }

  std::size_t find(std::size_t n) const {
    while (nodes_[n].is_var && nodes_[n].binding != n) n = nodes_[n].binding;
    return n;
  }

  void unify(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (nodes_[a].is_var) return bind(a, b);
    if (nodes_[b].is_var) return bind(b, a);
    unify(nodes_[a].domain, nodes_[b].domain);
    unify(nodes_[a].codomain, nodes_[b].codomain);
  }

  // Fully resolved type, with variables renamed in first-visit order.
  LinType resolve(std::size_t n, std::unordered_map<std::size_t, std::size_t>& names) const {
    n = find(n);
    if (nodes_[n].is_var) {
      const auto [it, inserted] = names.emplace(n, names.size());
      return LinType::variable(it->second);
    }
    LinType domain = resolve(nodes_[n].domain, names);
    LinType codomain = resolve(nodes_[n].codomain, names);
    return LinType::imp(std::move(domain), std::move(codomain));
  }

 private:
  struct Node {
    bool is_var;
    std::size_t binding;  // self when unbound
    std::size_t domain;
    std::size_t codomain;
  };

  bool occurs(std::size_t var, std::size_t n) const {
    n = find(n);
    if (n == var) return true;
    if (nodes_[n].is_var) return false;
    return occurs(var, nodes_[n].domain) || occurs(var, nodes_[n].codomain);
  }

  void bind(std::size_t var, std::size_t target) {
    if (occurs(var, target)) throw InternalError("occurs check failed while typing a linear term");
    nodes_[var].binding = target;
  }

  std::vector<Node> nodes_;
};

class Inference {
 public:
  Inference(const Context& context) {
    for (const auto& name : context) {
      const std::size_t ty = unifier_.fresh();
      context_types_.push_back(ty);
      scope_[name].push_back(ty);
    }
  }

  std::size_t infer(const Term& t) {
    const std::size_t wire = wires_.size();
    wires_.push_back(0);
    std::size_t result = 0;
    switch (t.kind()) {
      case Term::Kind::variable:
        result = scope_.at(t.name()).back();
        break;
      case Term::Kind::application: {
        const std::size_t f = infer(t.function());
        const std::size_t a = infer(t.argument());
        result = unifier_.fresh();
        unifier_.unify(f, unifier_.imp(a, result));
        break;
      }
      case Term::Kind::abstraction: {
        const std::size_t param = unifier_.fresh();
        scope_[t.name()].push_back(param);
        const std::size_t body = infer(t.body());
        scope_[t.name()].pop_back();
        result = unifier_.imp(param, body);
        break;
      }
    }
    wires_[wire] = result;
    return result;
  }

  PrincipalTyping finish(std::size_t result) const {
    std::unordered_map<std::size_t, std::size_t> names;
    std::vector<LinType> context;
    for (std::size_t ty : context_types_) context.push_back(unifier_.resolve(ty, names));
    LinType result_type = unifier_.resolve(result, names);
    std::vector<LinType> wires;
    for (std::size_t ty : wires_) wires.push_back(unifier_.resolve(ty, names));
    return {std::move(context), std::move(result_type), std::move(wires)};
  }

 private:
  Unifier unifier_;
  std::vector<std::size_t> context_types_;
  std::vector<std::size_t> wires_;
  std::unordered_map<std::string, std::vector<std::size_t>> scope_;
};

// Preorder walk computing wire values; `choices` feed binders in preorder.
class KleinPropagation {
 public:
  KleinPropagation(const Context& context, const std::vector<Klein>& choices) : choices_(choices) {
    for (const auto& name : context) scope_[name].push_back(next_choice());
  }

  Klein walk(const Term& t) {
    const std::size_t wire = wires_.size();
    wires_.push_back(Klein::one);
    Klein value = Klein::one;
    switch (t.kind()) {
      case Term::Kind::variable:
        value = scope_.at(t.name()).back();
        break;
      case Term::Kind::application: {
        // function : X -o Y with X the argument type, so Y = function * argument.
        const Klein f = walk(t.function());
        const Klein a = walk(t.argument());
        value = klein_mul(f, a);
        break;
      }
      case Term::Kind::abstraction: {
        const Klein param = next_choice();
        scope_[t.name()].push_back(param);
        const Klein body = walk(t.body());
        scope_[t.name()].pop_back();
        value = klein_imp(param, body);
        break;
      }
    }
    wires_[wire] = value;
    return value;
  }

  WireColoring take() { return std::move(wires_); }

 private:
  Klein next_choice() {
    if (used_ >= choices_.size()) throw InvalidArgument("not enough Klein choices for the term's variables");
    return choices_[used_++];
  }

  const std::vector<Klein>& choices_;
  std::size_t used_ = 0;
  WireColoring wires_;
  std::unordered_map<std::string, std::vector<Klein>> scope_;
};

std::size_t count_binders(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::variable:
      return 0;
    case Term::Kind::application:
      return count_binders(t.function()) + count_binders(t.argument());
    case Term::Kind::abstraction:
      return 1 + count_binders(t.body());
  }
  return 0;
}

// For each abstraction wire, the wire of the occurrence of its variable.
class OccurrenceIndex {
 public:
  void walk(const Term& t) {
    const std::size_t wire = next_++;
    switch (t.kind()) {
      case Term::Kind::variable: {
        auto it = scope_.find(t.name());
        if (it != scope_.end() && !it->second.empty()) occurrence_[it->second.back()] = wire;
        return;
      }
      case Term::Kind::application:
        walk(t.function());
        walk(t.argument());
        return;
      case Term::Kind::abstraction:
        scope_[t.name()].push_back(wire);
        walk(t.body());
        scope_[t.name()].pop_back();
        return;
    }
  }

  std::unordered_map<std::size_t, std::size_t> occurrence_;

 private:
  std::size_t next_ = 0;
  std::unordered_map<std::string, std::vector<std::size_t>> scope_;
};

bool check_rules(const Term& t, const WireColoring& c, const OccurrenceIndex& occ, std::size_t& wire) {
  const std::size_t here = wire++;
  switch (t.kind()) {
    case Term::Kind::variable:
      return true;
    case Term::Kind::application: {
      const std::size_t f = wire;
      if (!check_rules(t.function(), c, occ, wire)) return false;
      const std::size_t a = wire;
      if (!check_rules(t.argument(), c, occ, wire)) return false;
      return c[f] == klein_imp(c[a], c[here]);
    }
    case Term::Kind::abstraction: {
      const std::size_t body = wire;
      if (!check_rules(t.body(), c, occ, wire)) return false;
      return c[here] == klein_imp(c[occ.occurrence_.at(here)], c[body]);
    }
  }
  return false;
}

}  // namespace

std::string to_string(const LinType& t) {
  std::string out;
  print_type(t, " -o ", ascii_name, out);
  return out;
}

std::string to_unicode_string(const LinType& t) {
  std::string out;
  print_type(t, " ⊸ ", greek_name, out);
  return out;
}

std::vector<std::string> wire_paths(const Term& t) {
  std::vector<std::string> out;
  std::string path;
  collect_paths(t, path, out);
  return out;
}

PrincipalTyping infer_principal_type(const LinearTerm& t) {
  Inference inference(t.context());
  const std::size_t result = inference.infer(t.term());
  return inference.finish(result);
}

Klein instantiate(const LinType& type, const std::map<std::size_t, Klein>& assignment) {
  if (type.is_variable()) {
    const auto it = assignment.find(type.id());
    return it == assignment.end() ? Klein::one : it->second;
  }
  return klein_imp(instantiate(type.domain(), assignment), instantiate(type.codomain(), assignment));
}

WireColoring propagate_klein(const LinearTerm& t, const std::vector<Klein>& choices) {
  KleinPropagation propagation(t.context(), choices);
  propagation.walk(t.term());
  return propagation.take();
}

bool is_valid_three_typing(const LinearTerm& t, const WireColoring& c) {
  OccurrenceIndex occ;
  occ.walk(t.term());
  if (c.size() != wire_paths(t.term()).size()) return false;
  std::size_t wire = 0;
  return check_rules(t.term(), c, occ, wire);
}

bool is_proper_three_typing(const LinearTerm& t, const WireColoring& c) {
  if (!is_valid_three_typing(t, c)) return false;
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] == Klein::one) return false;
  }
  return true;
}

namespace {

template <typename Visit>
void for_each_choice(const LinearTerm& t, bool proper_only, Visit visit) {
  if (!t.is_closed()) throw InvalidArgument("3-typings are defined for closed terms");
  const std::size_t binders = count_binders(t.term());
  const auto& palette = proper_only ? std::vector<Klein>(klein_colors.begin(), klein_colors.end())
                                    : std::vector<Klein>(klein_elements.begin(), klein_elements.end());
  std::vector<std::size_t> digits(binders, 0);
  std::vector<Klein> choices(binders, palette[0]);
  while (true) {
    for (std::size_t i = 0; i < binders; ++i) choices[i] = palette[digits[i]];
    WireColoring c = propagate_klein(t, choices);
    bool keep = true;
    if (proper_only) {
      for (std::size_t i = 1; i < c.size() && keep; ++i) keep = c[i] != Klein::one;
    }
    if (keep && !visit(std::move(c))) return;
    // Odometer, last binder fastest.
    std::size_t pos = binders;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < palette.size()) break;
      digits[pos] = 0;
      if (pos == 0) return;
    }
    if (binders == 0) return;
  }
}

}  // namespace

std::vector<WireColoring> three_typings(const LinearTerm& t, bool proper_only) {
  std::vector<WireColoring> out;
  for_each_choice(t, proper_only, [&](WireColoring c) {
    out.push_back(std::move(c));
    return true;
  });
  return out;
}

bool has_proper_three_typing(const LinearTerm& t) {
  bool found = false;
  for_each_choice(t, true, [&](WireColoring) {
    found = true;
    return false;
  });
  return found;
}

}  // namespace lambdamap
