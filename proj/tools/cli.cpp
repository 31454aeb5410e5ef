#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <map>
#include <optional>
#include <sstream>
#include <variant>

#include "lambdamap/bijection.hpp"
#include "lambdamap/coloring.hpp"
#include "lambdamap/enumeration.hpp"
#include "lambdamap/errors.hpp"
#include "lambdamap/graph.hpp"
#include "lambdamap/map_json.hpp"
#include "lambdamap/maps.hpp"
#include "lambdamap/parser.hpp"
#include "lambdamap/series.hpp"
#include "lambdamap/term_ops.hpp"
#include "lambdamap/typing.hpp"

namespace lambdamap::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SemanticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<std::size_t> size;
  std::size_t free = 0;
  std::string filter = "all";
  std::string family = "linear";
  std::string format = "text";
  std::optional<std::string> context;
  std::vector<std::string> inputs;
  std::vector<std::string> terms;
  bool principal = false;
  bool klein = false;
  bool proper = false;
};

using Subject = std::variant<LinearTerm, RootedTrivalentMap, ClassicalMap>;

class Runner {
 public:
  Runner(const Options& opts, std::istream& in, std::ostream& out) : opts_(opts), in_(in), out_(out) {}

  void enumerate() {
    const std::size_t n = require_size();
    const TermFilter filter = parse_term_filter();
    const auto terms = enumerate_terms(n, opts_.free, filter, {workers_from_environment()});
    if (json_output()) {
      json doc = {{"size", n}, {"free", opts_.free}, {"filter", to_string(filter)}, {"terms", json::array()}};
      for (const auto& c : terms) doc["terms"].push_back(to_string(from_canonical(c)));
      out_ << doc.dump() << '\n';
      return;
    }
    for (const auto& c : terms) out_ << to_string(from_canonical(c)) << '\n';
  }

  void count() {
    const std::size_t n = require_size();
    const TermFilter filter = parse_term_filter();
    const std::uint64_t total = count_terms(n, opts_.free, filter, {workers_from_environment()});
    if (json_output()) {
      out_ << json{{"size", n}, {"free", opts_.free}, {"filter", to_string(filter)}, {"count", total}}.dump()
           << '\n';
      return;
    }
    out_ << total << '\n';
  }

  void series() {
    static const std::map<std::string, SeriesFamily> families = {
        {"linear", SeriesFamily::linear},
        {"indec", SeriesFamily::indecomposable},
        {"indecomposable", SeriesFamily::indecomposable},
        {"planar", SeriesFamily::planar},
        {"planar-indec", SeriesFamily::planar_indecomposable},
        {"planar-indecomposable", SeriesFamily::planar_indecomposable},
    };
    const auto it = families.find(opts_.family);
    if (it == families.end()) throw UsageError("unknown series family: " + opts_.family);
    const std::size_t n = require_size();
    const CoefficientTable table = series_table(it->second, n);
    // Columns k = 0 .. n+1; beyond that every entry vanishes.
    if (json_output()) {
      json rows = json::array();
      for (std::size_t row = 0; row <= n; ++row) {
        json cells = json::array();
        for (std::size_t k = 0; k <= n + 1; ++k) cells.push_back(table.at(row, k).str());
        rows.push_back(std::move(cells));
      }
      out_ << json{{"family", to_string(it->second)}, {"rows", std::move(rows)}}.dump() << '\n';
      return;
    }
    for (std::size_t row = 0; row <= n; ++row) {
      for (std::size_t k = 0; k <= n + 1; ++k) out_ << (k ? "\t" : "") << table.at(row, k).str();
      out_ << '\n';
    }
  }

  void to_map() {
    const RootedTrivalentMap m = term_to_map(expect_term(single_subject()));
    out_ << to_json(m, json_output() ? 2 : -1) << '\n';
  }

  void to_term() {
    const Subject s = single_subject();
    const auto* m = std::get_if<RootedTrivalentMap>(&s);
    if (m == nullptr) throw SemanticError("to-term expects a rooted trivalent map");
    const LinearTerm t = map_to_term(*m);
    if (json_output()) {
      out_ << json{{"context", t.context()}, {"term", to_string(t.term())}}.dump() << '\n';
      return;
    }
    out_ << to_string(t) << '\n';
  }

  void genus() {
    const Subject s = single_subject();
    unsigned g = 0;
    if (const auto* c = std::get_if<ClassicalMap>(&s)) {
      g = lambdamap::genus(*c);
    } else {
      g = lambdamap::genus(as_rooted(s));
    }
    if (json_output()) {
      out_ << json{{"genus", g}}.dump() << '\n';
      return;
    }
    out_ << g << '\n';
  }

  void bridges() {
    const Subject s = single_subject();
    const std::vector<DartLabel>* labels = nullptr;
    UndirectedGraph g;
    std::optional<RootedTrivalentMap> rooted;
    if (const auto* c = std::get_if<ClassicalMap>(&s)) {
      g = underlying_graph(*c);
      labels = &c->darts();
    } else {
      rooted = as_rooted(s);
      g = underlying_graph(*rooted);
      labels = &rooted->darts();
    }
    const auto cut = lambdamap::bridges(g);
    json doc = json::array();
    for (std::size_t id : cut) {
      const auto& edge = g.edges[id];
      const DartLabel a = (*labels)[edge.first_dart];
      const DartLabel b = (*labels)[edge.second_dart];
      if (json_output()) {
        doc.push_back({a, b});
      } else {
        out_ << a << ' ' << b << '\n';
      }
    }
    if (json_output()) out_ << json{{"bridges", std::move(doc)}}.dump() << '\n';
  }

  void iso() {
    const std::vector<Subject> subjects = load_subjects();
    if (subjects.size() != 2) throw UsageError("iso needs exactly two inputs (--input and/or --term)");
    bool same = false;
    const auto* c0 = std::get_if<ClassicalMap>(&subjects[0]);
    const auto* c1 = std::get_if<ClassicalMap>(&subjects[1]);
    if (c0 != nullptr && c1 != nullptr) {
      same = rooted_isomorphic(*c0, *c1);
    } else if (c0 == nullptr && c1 == nullptr) {
      same = rooted_isomorphic(as_rooted(subjects[0]), as_rooted(subjects[1]));
    } else {
      throw SemanticError("cannot compare a classical map with a rooted trivalent map");
    }
    if (json_output()) {
      out_ << json{{"isomorphic", same}}.dump() << '\n';
      return;
    }
    out_ << (same ? "true" : "false") << '\n';
  }

  void type() {
    const LinearTerm t = expect_term(single_subject());
    if (opts_.klein || opts_.proper) {
      klein_typings(t);
      return;
    }
    const PrincipalTyping p = infer_principal_type(t);
    if (json_output()) {
      json ctx = json::array();
      for (std::size_t i = 0; i < t.context().size(); ++i) {
        ctx.push_back({{"name", t.context()[i]}, {"type", to_string(p.context_types[i])}});
      }
      out_ << json{{"context", std::move(ctx)}, {"type", to_string(p.result)}}.dump() << '\n';
      return;
    }
    for (std::size_t i = 0; i < t.context().size(); ++i) {
      out_ << (i ? ", " : "") << t.context()[i] << " : " << to_string(p.context_types[i]);
    }
    if (!t.context().empty()) out_ << " |- ";
    out_ << to_string(p.result) << '\n';
  }

  void color() {
    const Subject s = single_subject();
    std::optional<ClassicalMap> smoothed;
    const ClassicalMap* m = std::get_if<ClassicalMap>(&s);
    if (m == nullptr) {
      smoothed = smooth_root(as_rooted(s));
      m = &*smoothed;
    }
    const UndirectedGraph g = underlying_graph(*m);
    const auto colorings = edge_three_colorings(*m);
    if (json_output()) {
      json edges = json::array();
      for (const auto& edge : g.edges) edges.push_back({m->darts()[edge.first_dart], m->darts()[edge.second_dart]});
      json all = json::array();
      for (const auto& c : colorings) {
        json row = json::array();
        for (Klein k : c) row.push_back(std::string(to_string(k)));
        all.push_back(std::move(row));
      }
      out_ << json{{"edges", std::move(edges)}, {"colorings", std::move(all)}}.dump() << '\n';
      return;
    }
    for (const auto& c : colorings) {
      for (std::size_t i = 0; i < g.edges.size(); ++i) {
        out_ << (i ? " " : "") << m->darts()[g.edges[i].first_dart] << '-' << m->darts()[g.edges[i].second_dart]
             << '=' << to_string(c[i]);
      }
      out_ << '\n';
    }
  }

  int fourct() {
    const std::size_t n = opts_.size.value_or(9);
    const FourColorReport report = fourct_desk_check(n, workers_from_environment());
    if (json_output()) {
      json rows = json::array();
      for (const auto& row : report.rows) rows.push_back({{"size", row.size}, {"terms", row.terms}, {"passed", row.passed}});
      json bad = json::array();
      for (const auto& c : report.counterexamples) bad.push_back(to_string(from_canonical(c)));
      out_ << json{{"rows", std::move(rows)}, {"total", report.total_terms()}, {"counterexamples", std::move(bad)}}
                  .dump()
           << '\n';
    } else {
      for (const auto& row : report.rows) out_ << row.size << '\t' << row.terms << '\t' << row.passed << '\n';
      out_ << "total\t" << report.total_terms() << '\n';
      for (const auto& c : report.counterexamples) out_ << "counterexample\t" << to_string(from_canonical(c)) << '\n';
      out_ << (report.ok() ? "ok" : "FAILED") << '\n';
    }
    return report.ok() ? 0 : 1;
  }

  void export_dot() {
    const Subject s = single_subject();
    if (const auto* c = std::get_if<ClassicalMap>(&s)) {
      out_ << to_dot(*c);
    } else {
      out_ << to_dot(as_rooted(s));
    }
  }

 private:
  bool json_output() const { return opts_.format == "json"; }

  std::size_t require_size() const {
    if (!opts_.size) throw UsageError("--size is required");
    return *opts_.size;
  }

  TermFilter parse_term_filter() const {
    const auto f = parse_filter(opts_.filter);
    if (!f) throw UsageError("unknown filter: " + opts_.filter);
    return *f;
  }

  std::string read_input(const std::string& path) {
    if (path == "-") return std::string(std::istreambuf_iterator<char>(in_), {});
    std::ifstream file(path);
    if (!file) throw SemanticError("cannot read " + path);
    return std::string(std::istreambuf_iterator<char>(file), {});
  }

  LinearTerm parse_term_text(const std::string& text) const {
    if (opts_.context) return parse_term(text, parse_context(*opts_.context));
    return parse_judgment(text);
  }

  Subject parse_subject(const std::string& text) const {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
      auto parsed = any_map_from_json(text);
      if (auto* r = std::get_if<RootedTrivalentMap>(&parsed)) return std::move(*r);
      return std::get<ClassicalMap>(std::move(parsed));
    }
    std::string line = text;
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    return parse_term_text(line);
  }

  std::vector<Subject> load_subjects() {
    std::vector<Subject> out;
    for (const auto& path : opts_.inputs) out.push_back(parse_subject(read_input(path)));
    for (const auto& text : opts_.terms) out.push_back(parse_term_text(text));
    return out;
  }

  Subject single_subject() {
    std::vector<Subject> subjects = load_subjects();
    if (subjects.size() != 1) throw UsageError("exactly one of --term or --input is required");
    return std::move(subjects.front());
  }

  static LinearTerm expect_term(const Subject& s) {
    if (const auto* t = std::get_if<LinearTerm>(&s)) return *t;
    if (const auto* m = std::get_if<RootedTrivalentMap>(&s)) return map_to_term(*m);
    throw SemanticError("expected a term or a rooted trivalent map");
  }

  static RootedTrivalentMap as_rooted(const Subject& s) {
    if (const auto* m = std::get_if<RootedTrivalentMap>(&s)) return *m;
    if (const auto* t = std::get_if<LinearTerm>(&s)) return term_to_map(*t);
    throw SemanticError("expected a rooted trivalent map");
  }

  void klein_typings(const LinearTerm& t) {
    const auto paths = wire_paths(t.term());
    const auto typings = three_typings(t, opts_.proper);
    if (json_output()) {
      json all = json::array();
      for (const auto& c : typings) {
        json one = json::object();
        for (std::size_t i = 0; i < paths.size(); ++i) one[paths[i]] = std::string(to_string(c[i]));
        all.push_back(std::move(one));
      }
      out_ << json{{"typings", std::move(all)}}.dump() << '\n';
      return;
    }
    for (std::size_t n = 0; n < typings.size(); ++n) {
      if (n > 0) out_ << '\n';
      for (std::size_t i = 0; i < paths.size(); ++i) out_ << paths[i] << ": " << to_string(typings[n][i]) << '\n';
    }
  }

  const Options& opts_;
  std::istream& in_;
  std::ostream& out_;
};

void add_size(CLI::App* cmd, Options& o, const std::string& what) {
  cmd->add_option("-n,--size", o.size, what)->check(CLI::NonNegativeNumber);
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

void add_subject(CLI::App* cmd, Options& o) {
  cmd->add_option("--term", o.terms, "Term, optionally as a judgment \"x, y |- t\"");
  cmd->add_option("--context", o.context, "Comma-separated context for --term");
  cmd->add_option("--input", o.inputs, "Map JSON or term file, '-' for stdin");
}

void add_enumeration(CLI::App* cmd, Options& o) {
  add_size(cmd, o, "Number of applications plus abstractions");
  cmd->add_option("-k,--free", o.free, "Number of free variables")->check(CLI::NonNegativeNumber);
  cmd->add_option("--filter", o.filter, "Term family")
      ->check(CLI::IsMember({"all", "indecomposable", "planar", "planar-indecomposable", "bridgeless-map"}));
  add_format(cmd, o);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Linear lambda terms and rooted trivalent maps", "lambdamap"};
  app.require_subcommand(1);

  auto* enumerate = app.add_subcommand("enumerate", "List terms of a given size and context length");
  add_enumeration(enumerate, opts);
  auto* count = app.add_subcommand("count", "Count terms of a given size and context length");
  add_enumeration(count, opts);
  auto* series = app.add_subcommand("series", "Coefficient table from the generating-function recurrence");
  add_size(series, opts, "Largest size");
  series->add_option("--family", opts.family, "Series family")
      ->check(CLI::IsMember({"linear", "indec", "indecomposable", "planar", "planar-indec", "planar-indecomposable"}));
  add_format(series, opts);
  auto* to_map = app.add_subcommand("to-map", "Rooted trivalent map of a term, as JSON");
  add_subject(to_map, opts);
  add_format(to_map, opts);
  auto* to_term = app.add_subcommand("to-term", "Term of a rooted trivalent map");
  add_subject(to_term, opts);
  add_format(to_term, opts);
  auto* genus = app.add_subcommand("genus", "Genus of a map or of the map of a term");
  add_subject(genus, opts);
  add_format(genus, opts);
  auto* bridges = app.add_subcommand("bridges", "Cut edges of the underlying graph, as dart pairs");
  add_subject(bridges, opts);
  add_format(bridges, opts);
  auto* iso = app.add_subcommand("iso", "Rooted isomorphism of two maps");
  add_subject(iso, opts);
  add_format(iso, opts);
  auto* type = app.add_subcommand("type", "Principal type or Klein 3-typings of a term");
  add_subject(type, opts);
  add_format(type, opts);
  type->add_flag("--principal", opts.principal, "Principal type (default)");
  type->add_flag("--klein", opts.klein, "All 3-typings, one wire per line");
  type->add_flag("--proper", opts.proper, "Only proper 3-typings");
  auto* color = app.add_subcommand("color", "Proper edge 3-colorings (rooted maps are smoothed first)");
  add_subject(color, opts);
  add_format(color, opts);
  auto* fourct = app.add_subcommand("fourct", "Check closed planar indecomposable terms for a proper 3-typing");
  add_size(fourct, opts, "Largest size (default 9)");
  add_format(fourct, opts);
  auto* export_dot = app.add_subcommand("export-dot", "Graphviz rendering of a map");
  add_subject(export_dot, opts);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "lambdamap: " << e.what() << '\n';
    return 2;
  }

  Runner runner(opts, in, out);
  try {
    if (enumerate->parsed()) runner.enumerate();
    if (count->parsed()) runner.count();
    if (series->parsed()) runner.series();
    if (to_map->parsed()) runner.to_map();
    if (to_term->parsed()) runner.to_term();
    if (genus->parsed()) runner.genus();
    if (bridges->parsed()) runner.bridges();
    if (iso->parsed()) runner.iso();
    if (type->parsed()) runner.type();
    if (color->parsed()) runner.color();
    if (fourct->parsed()) return runner.fourct();
    if (export_dot->parsed()) runner.export_dot();
  } catch (const UsageError& e) {
    err << "lambdamap: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "lambdamap: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace lambdamap::cli
