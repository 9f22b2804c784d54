// Command-line front end: check predicates, build open/closed-set lattices,
// enumerate, verify suites, search, export DOT.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "orderkit/errors.hpp"
#include "orderkit/generators.hpp"
#include "orderkit/limits.hpp"
#include "orderkit/poset_io.hpp"
#include "orderkit/report.hpp"
#include "orderkit/stone_dual.hpp"
#include "orderkit/verifier.hpp"

namespace {

using namespace orderkit;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitLimit = 3;

/// A path to a poset file, or a structure name such as M3 or chain(4).
FinitePoset load_input(const std::string& input) {
  if (std::filesystem::is_regular_file(input)) {
    std::ifstream in(input);
    std::stringstream buf;
    buf << in.rdbuf();
    FinitePoset p = parse_poset(buf.str());
    if (p.name().empty()) p = p.renamed(std::filesystem::path(input).stem().string());
    return p;
  }
  try {
    return named(input);
  } catch (const UnknownName&) {
    throw OrderError("'" + input + "' is neither a readable file nor a known structure name");
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw OrderError("cannot write '" + path + "'");
  out << text;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

struct CheckArgs {
  std::string input;
  std::string properties = "all";
  bool witness = false;
  bool json = false;
  bool no_assert = false;
  bool oracle = false;
};

int run_check(const CheckArgs& a) {
  const FinitePoset p = load_input(a.input);
  std::vector<std::string> names = a.properties == "all" ? property_names() : split_list(a.properties);
  for (const auto& n : names)
    if (n != "poset" && std::find(property_names().begin(), property_names().end(), n) == property_names().end())
      throw OrderError("unknown property '" + n + "'");
  const CheckReport report = check_properties(p, names, a.oracle ? Mode::oracle : Mode::fast);
  if (a.json)
    std::cout << to_json(report, a.witness).dump(2) << '\n';
  else
    std::cout << to_text(report, a.witness);
  return (report.all_hold() || a.no_assert) ? kExitPass : kExitFail;
}

struct DualArgs {
  std::string input;
  bool opens = false;
  bool closed = false;
  std::string output;
  std::size_t limit = std::size_t{1} << 20;
};

int run_dual(const DualArgs& a) {
  if (a.opens == a.closed) throw OrderError("give exactly one of --scott-opens and --scott-closed");
  const FinitePoset p = load_input(a.input);
  const SetLattice s = a.opens ? scott_opens(p, a.limit) : scott_closed_lattice(p, a.limit);
  write_output(a.output, emit_poset(s.lattice.poset()));
  return kExitPass;
}

struct EnumerateArgs {
  std::size_t n = 1;
  std::string kind = "posets";
  std::string filter;
  bool count = false;
  std::string emit_dir;
};

int run_enumerate(const EnumerateArgs& a) {
  std::vector<FinitePoset> items;
  if (a.kind == "lattices") {
    for (const auto& l : enumerate_lattices(a.n)) items.push_back(l.poset());
  } else if (a.kind == "posets") {
    items = enumerate_posets(a.n);
  } else {
    throw OrderError("--kind must be posets or lattices");
  }
  if (!a.filter.empty()) {
    const auto expr = PredicateExpr::parse(a.filter);
    std::erase_if(items, [&](const FinitePoset& p) { return !expr.evaluate(p); });
  }
  if (a.count) {
    std::cout << items.size() << '\n';
  } else if (!a.emit_dir.empty()) {
    std::filesystem::create_directories(a.emit_dir);
    for (const auto& p : items) write_output((std::filesystem::path(a.emit_dir) / (p.name() + ".poset")).string(), emit_poset(p));
    std::cout << items.size() << " files written to " << a.emit_dir << '\n';
  } else {
    for (std::size_t i = 0; i < items.size(); ++i) std::cout << (i ? "\n" : "") << emit_poset(items[i]);
  }
  return kExitPass;
}

struct VerifyArgs {
  std::string suite = "full";
  std::size_t min_n = 1;
  std::size_t max_n = 4;
  bool json = false;
  bool deterministic = false;
  std::size_t jobs = 1;
  bool fast = false;
};

int run_verify(const VerifyArgs& a) {
  const auto suite = parse_suite(a.suite);
  if (!suite) throw OrderError("unknown suite '" + a.suite + "'");
  SuiteOptions opts;
  opts.mode = a.fast ? Mode::fast : Mode::oracle;
  opts.jobs = a.jobs;
  opts.deterministic = a.deterministic;
  const auto reports = run_suites(*suite, Universe{a.min_n, a.max_n}, opts);
  if (a.json)
    std::cout << verify_json(reports, a.max_n).dump(2) << '\n';
  else
    std::cout << verify_text(reports);
  bool failed = false, limited = false;
  for (const auto& r : reports) {
    failed = failed || !r.passed();
    limited = limited || !r.limited.empty();
  }
  return failed ? kExitFail : (limited ? kExitLimit : kExitPass);
}

struct SearchArgs {
  std::string expr;
  std::string kind = "posets";
  std::size_t min_n = 1;
  std::size_t max_n = 5;
};

int run_search(const SearchArgs& a) {
  const auto expr = PredicateExpr::parse(a.expr);
  if (a.kind != "posets" && a.kind != "lattices") throw OrderError("--kind must be posets or lattices");
  const auto kind = a.kind == "lattices" ? UniverseKind::lattices : UniverseKind::posets;
  const auto found = search(Universe{a.min_n, a.max_n}, kind, expr);
  if (!found) {
    std::cout << "none\n";
    return kExitFail;
  }
  if (auto alias = recognize(*found)) std::cout << "# isomorphic to " << *alias << '\n';
  std::cout << emit_poset(*found);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  apply_env_limits();

  CLI::App app{"orderkit: exact checks on finite posets and lattices"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Evaluate continuity predicates on a poset");
  c->add_option("input", check.input, "Poset file or structure name (M3, N5, chain(k), ...)")->required();
  c->add_option("--properties", check.properties, "Comma-separated predicate names, or 'all'");
  c->add_flag("--witness", check.witness, "Report witnesses for failing predicates");
  c->add_flag("--json", check.json, "Emit the JSON report");
  c->add_flag("--no-assert", check.no_assert, "Exit 0 even if a predicate fails");
  c->add_flag("--oracle", check.oracle, "Use the definitional oracles for auxiliary relations");

  DualArgs dual_args;
  auto* d = app.add_subcommand("dual", "Write the lattice of Scott-open or Scott-closed sets");
  d->add_option("input", dual_args.input)->required();
  d->add_flag("--scott-opens", dual_args.opens);
  d->add_flag("--scott-closed", dual_args.closed);
  d->add_option("-o,--output", dual_args.output, "Output file (default stdout)");
  d->add_option("--limit", dual_args.limit, "Maximum number of open sets");

  EnumerateArgs en;
  auto* e = app.add_subcommand("enumerate", "List posets or lattices up to isomorphism");
  e->add_option("--n", en.n, "Element count")->required();
  e->add_option("--kind", en.kind, "posets or lattices");
  e->add_option("--filter", en.filter, "Predicate expression, e.g. 'lattice & !distributive'");
  auto* count_flag = e->add_flag("--count", en.count, "Print only the count");
  e->add_option("--emit", en.emit_dir, "Write one poset file per instance into this directory")->excludes(count_flag);

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Run theorem suites over enumerated instances");
  v->add_option("--suite", ver.suite,
                "lemma31|thm32|thm34|thm21|thm23|thm25|chains|characterizations|full");
  v->add_option("--min-n", ver.min_n);
  v->add_option("--max-n", ver.max_n);
  v->add_flag("--json", ver.json);
  v->add_flag("--deterministic", ver.deterministic, "Omit timings");
  v->add_option("--jobs", ver.jobs, "Worker threads");
  v->add_flag("--fast", ver.fast, "Use closed forms instead of the definitional oracles");

  SearchArgs se;
  auto* s = app.add_subcommand("search", "Find the first instance satisfying a predicate expression");
  s->add_option("expr", se.expr)->required();
  s->add_option("--kind", se.kind, "posets or lattices");
  s->add_option("--min-n", se.min_n);
  s->add_option("--max-n", se.max_n);

  std::string dot_input, dot_output;
  auto* x = app.add_subcommand("export-dot", "Write the Hasse diagram in DOT syntax");
  x->add_option("input", dot_input)->required();
  x->add_option("-o,--output", dot_output);

  std::string emit_input, emit_output;
  auto* m = app.add_subcommand("emit", "Write a structure as a poset file");
  m->add_option("input", emit_input)->required();
  m->add_option("-o,--output", emit_output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int rc = app.exit(err);
    return rc == 0 ? kExitPass : kExitInput;
  }

  try {
    if (*c) return run_check(check);
    if (*d) return run_dual(dual_args);
    if (*e) return run_enumerate(en);
    if (*v) return run_verify(ver);
    if (*s) return run_search(se);
    if (*x) {
      write_output(dot_output, export_dot(load_input(dot_input)));
      return kExitPass;
    }
    if (*m) {
      write_output(emit_output, emit_poset(load_input(emit_input)));
      return kExitPass;
    }
  } catch (const SizeLimit& err) {
    std::cerr << "orderkit: " << err.what() << '\n';
    return kExitLimit;
  } catch (const std::exception& err) {
    std::cerr << "orderkit: " << err.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
