#include "orderkit/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cctype>
#include <chrono>
#include <map>
#include <thread>

#include "orderkit/canonical.hpp"
#include "orderkit/errors.hpp"
#include "orderkit/properties.hpp"
#include "orderkit/stone_dual.hpp"

namespace orderkit {

// ---------------------------------------------------------------------------
// Named predicates

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = {
      "lattice",         "continuous",       "quasicontinuous", "meet_continuous",          "meet_continuous_algebraic",
      "join_continuous", "frame",            "hypercontinuous", "prime_continuous",         "distributive",
      "completely_distributive"};
  return names;
}

bool is_lattice_property(std::string_view name) {
  return name == "meet_continuous_algebraic" || name == "join_continuous" || name == "frame" ||
         name == "hypercontinuous" || name == "prime_continuous" || name == "distributive" ||
         name == "completely_distributive";
}

std::optional<Verdict> evaluate_property(std::string_view name, const FinitePoset& p, Mode mode) {
  if (name == "poset") return Verdict::pass();
  if (name == "lattice") {
    try {
      (void)as_lattice(p);
      return Verdict::pass();
    } catch (const NotALattice& e) {
      Witness w;
      if (!e.first().empty()) w.elements = {e.first(), e.second()};
      w.detail = e.what();
      return Verdict::fail(std::move(w));
    }
  }
  if (name == "continuous") return is_continuous(p, mode);
  if (name == "quasicontinuous") return is_quasicontinuous(p);
  if (name == "meet_continuous") return is_meet_continuous(p, mode);
  if (!is_lattice_property(name)) throw OrderError("unknown property '" + std::string(name) + "'");
  if (!is_lattice(p)) return std::nullopt;
  const FiniteLattice l = as_lattice(p);
  if (name == "meet_continuous_algebraic") return is_meet_continuous_algebraic(l);
  if (name == "join_continuous") return is_join_continuous(l);
  if (name == "frame") return is_frame(l);
  if (name == "hypercontinuous") return is_hypercontinuous(l, mode);
  if (name == "prime_continuous") return is_prime_continuous(l, mode);
  if (name == "distributive") return is_distributive(l);
  return is_completely_distributive_oracle(l, 2);
}

struct PredicateExpr::Node {
  enum class Kind { name, negate, conj, disj } kind;
  std::string name;
  std::shared_ptr<const Node> left, right;
};

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  std::shared_ptr<const PredicateExpr::Node> parse() {
    auto node = parse_or();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return node;
  }

 private:
  using Node = PredicateExpr::Node;

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::shared_ptr<const Node> parse_or() {
    auto left = parse_and();
    while (accept('|')) left = std::make_shared<const Node>(Node{Node::Kind::disj, {}, left, parse_and()});
    return left;
  }

  std::shared_ptr<const Node> parse_and() {
    auto left = parse_unary();
    while (accept('&')) left = std::make_shared<const Node>(Node{Node::Kind::conj, {}, left, parse_unary()});
    return left;
  }

  std::shared_ptr<const Node> parse_unary() {
    if (accept('!')) return std::make_shared<const Node>(Node{Node::Kind::negate, {}, parse_unary(), nullptr});
    if (accept('(')) {
      auto inner = parse_or();
      if (!accept(')')) throw ParseError(pos_, "expected ')'");
      return inner;
    }
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) {
      if (pos_ == text_.size()) throw ParseError(pos_, "unexpected end of expression");
      throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    }
    std::string name(text_.substr(start, pos_ - start));
    const auto& names = property_names();
    if (name != "poset" && std::find(names.begin(), names.end(), name) == names.end())
      throw ParseError(start, "unknown predicate '" + name + "'");
    return std::make_shared<const Node>(Node{Node::Kind::name, std::move(name), nullptr, nullptr});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool eval_node(const PredicateExpr::Node& node, const FinitePoset& p, Mode mode, std::map<std::string, bool>& cache) {
  using Kind = PredicateExpr::Node::Kind;
  switch (node.kind) {
    case Kind::negate:
      return !eval_node(*node.left, p, mode, cache);
    case Kind::conj:
      return eval_node(*node.left, p, mode, cache) && eval_node(*node.right, p, mode, cache);
    case Kind::disj:
      return eval_node(*node.left, p, mode, cache) || eval_node(*node.right, p, mode, cache);
    case Kind::name:
      break;
  }
  auto it = cache.find(node.name);
  if (it != cache.end()) return it->second;
  const auto v = evaluate_property(node.name, p, mode);
  const bool value = v && v->holds;
  cache.emplace(node.name, value);
  return value;
}

}  // namespace

PredicateExpr PredicateExpr::parse(std::string_view text) {
  PredicateExpr e;
  e.root_ = ExprParser(text).parse();
  e.text_ = std::string(text);
  return e;
}

bool PredicateExpr::evaluate(const FinitePoset& p, Mode mode) const {
  std::map<std::string, bool> cache;
  return eval_node(*root_, p, mode, cache);
}

// ---------------------------------------------------------------------------
// Per-instance checks

Verdict lemma31_check(const FiniteLattice& l) {
  const std::size_t n = l.size();
  require_subset_cap(n, "Lemma check (elements)");
  const FinitePoset& p = l.poset();
  const auto down = p.down_masks();
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

  std::optional<Witness> equation_failure, identity_failure;
  for_each_mask_shortlex(n, [&](std::uint64_t m) {
    std::uint64_t down_m = 0;
    std::uint64_t meet_of_complements = all;
    Element rhs = l.bottom();
    for (std::uint64_t r = m; r; r &= r - 1) {
      const int k = std::countr_zero(r);
      down_m |= down[k];
      meet_of_complements &= all & ~down[k];
      rhs = l.join(rhs, l.inf_mask(all & ~down[k]));
    }
    const std::uint64_t complement = all & ~down_m;
    const Element lhs = l.inf_mask(complement);
    const auto members = p.labels_of(Subset::from_mask(n, m));
    if (!identity_failure && complement != meet_of_complements) {
      identity_failure = Witness{{}, {members}, set_label(p, Subset::from_mask(n, complement)),
                                 set_label(p, Subset::from_mask(n, meet_of_complements)),
                                 "L \\ down(M) differs from the intersection of the L \\ down(m)"};
    }
    if (!equation_failure && lhs != rhs) {
      equation_failure = Witness{{}, {members}, l.label(lhs), l.label(rhs),
                                 "inf(L \\ down M) differs from the join of inf(L \\ down m)"};
    }
    return !(equation_failure && identity_failure);
  });

  Verdict v;
  v.profile["equation"] = !equation_failure;
  v.profile["set_identity"] = !identity_failure;
  v.holds = !equation_failure && !identity_failure;
  if (equation_failure)
    v.witness = equation_failure;
  else if (identity_failure)
    v.witness = identity_failure;
  return v;
}

namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }

Verdict from_profile(std::map<std::string, bool> profile, bool holds, std::string detail) {
  Verdict v;
  v.holds = holds;
  v.profile = std::move(profile);
  if (!holds) {
    Witness w;
    for (const auto& [k, b] : v.profile) w.elements.push_back(k + "=" + yes_no(b));
    w.detail = std::move(detail);
    v.witness = std::move(w);
  }
  return v;
}

}  // namespace

Verdict thm32_check(const FiniteLattice& l, Mode mode) {
  const bool join = is_join_continuous(l).holds;
  const bool hyper = is_hypercontinuous(l, mode).holds;
  const bool prime = is_prime_continuous(l, mode).holds;
  return from_profile({{"join_continuous", join}, {"hypercontinuous", hyper}, {"prime_continuous", prime}},
                      (join && hyper) == prime, "join_continuous & hypercontinuous differs from prime_continuous");
}

Verdict thm34_check(const FinitePoset& p, Mode mode) {
  const bool meet = is_meet_continuous(p, mode).holds;
  const bool quasi = is_quasicontinuous(p).holds;
  const bool cont = is_continuous(p, mode).holds;
  return from_profile({{"meet_continuous", meet}, {"quasicontinuous", quasi}, {"continuous", cont}},
                      (meet && quasi) == cont, "meet_continuous & quasicontinuous differs from continuous");
}

Verdict thm21_check(const FinitePoset& p, Mode mode) {
  const SetLattice opens = scott_opens(p);
  const SetLattice closed = scott_closed_lattice(p);
  const bool cont = is_continuous(p, mode).holds;
  // Open-set lattices can have 2^n elements, beyond the reach of the
  // way-way-below oracle; the closed form is cross-checked separately.
  const bool prime = is_prime_continuous(opens.lattice, Mode::fast).holds;
  const bool dual_iso = complement_is_dual_isomorphism(opens, closed) &&
                        is_isomorphic(closed.lattice.poset(), dual(opens.lattice.poset()));
  return from_profile({{"continuous", cont}, {"sigma_prime_continuous", prime}, {"gamma_is_dual_of_sigma", dual_iso}},
                      cont == prime && prime && dual_iso,
                      "continuity of P, prime continuity of its open sets, or the closed/open duality disagree");
}

Verdict thm23_check(const FinitePoset& p, Mode mode) {
  const SetLattice opens = scott_opens(p);
  const SetLattice closed = scott_closed_lattice(p);
  const bool meet = is_meet_continuous(p, mode).holds;
  const bool join = is_join_continuous(opens.lattice).holds;
  const bool frame = is_frame(closed.lattice).holds;
  return from_profile({{"meet_continuous", meet}, {"sigma_join_continuous", join}, {"gamma_frame", frame}},
                      meet == join && join == frame,
                      "meet continuity of P, join continuity of its opens and the frame law of its closed sets disagree");
}

Verdict thm25_check(const FinitePoset& p, Mode mode) {
  const SetLattice opens = scott_opens(p);
  const bool quasi = is_quasicontinuous(p).holds;
  const bool hyper = is_hypercontinuous(opens.lattice, mode).holds;
  return from_profile({{"quasicontinuous", quasi}, {"sigma_hypercontinuous", hyper}}, quasi == hyper,
                      "quasicontinuity of P differs from hypercontinuity of its opens");
}

Verdict chain_check(const FiniteLattice& l, Mode mode) {
  const bool prime = is_prime_continuous(l, mode).holds;
  const bool join = is_join_continuous(l).holds;
  const bool frame = is_frame(l).holds;
  const bool hyper = is_hypercontinuous(l, mode).holds;
  const bool cont = is_continuous(l.poset(), mode).holds;
  const bool ok = (!prime || join) && (!prime || frame) && (!prime || hyper) && (!hyper || cont);
  return from_profile({{"prime_continuous", prime},
                       {"join_continuous", join},
                       {"frame", frame},
                       {"hypercontinuous", hyper},
                       {"continuous", cont}},
                      ok, "an implication between continuity notions fails");
}

Verdict characterization_check(const FiniteLattice& l, Mode mode) {
  const std::size_t n = l.size();
  bool form_cont = true, form_hyper = true, form_prime = true;
  std::optional<Witness> mismatch;
  auto record = [&](bool& form, Element x, Element rhs, const char* which) {
    if (rhs == x) return;
    form = false;
    if (!mismatch) mismatch = Witness{{l.label(x)}, {}, l.label(x), l.label(rhs), which};
  };
  for (Element x = 0; x < n; ++x) {
    record(form_cont, x, supinf_continuous_rhs(l, x), "open-set form");
    record(form_hyper, x, supinf_hyper_rhs(l, x), "finite-set form");
    record(form_prime, x, supinf_prime_rhs(l, x), "single-element form");
  }
  const bool cont = is_continuous(l.poset(), mode).holds;
  const bool hyper = is_hypercontinuous(l, mode).holds;
  const bool prime = is_prime_continuous(l, mode).holds;
  return from_profile({{"continuous", cont},
                       {"continuous_form", form_cont},
                       {"hypercontinuous", hyper},
                       {"hypercontinuous_form", form_hyper},
                       {"prime_continuous", prime},
                       {"prime_continuous_form", form_prime}},
                      cont == form_cont && hyper == form_hyper && prime == form_prime,
                      mismatch ? "a continuity predicate disagrees with its sup-inf form; first form mismatch at " +
                                     mismatch->elements[0] + " (" + mismatch->detail + ")"
                               : "a continuity predicate disagrees with its sup-inf form");
}

// ---------------------------------------------------------------------------
// Suites

namespace {

constexpr Suite kAllSuites[] = {Suite::lemma31, Suite::thm32, Suite::thm34,  Suite::thm21,
                                Suite::thm23,   Suite::thm25, Suite::chains, Suite::characterizations};

bool is_lattice_suite(Suite s) {
  return s == Suite::lemma31 || s == Suite::thm32 || s == Suite::chains || s == Suite::characterizations;
}

std::vector<std::string> trivialized_conjuncts(Suite s) {
  switch (s) {
    case Suite::lemma31:
      return {};
    case Suite::thm32:
      return {"hypercontinuous"};
    case Suite::thm34:
      return {"meet_continuous", "quasicontinuous", "continuous"};
    case Suite::thm21:
      return {"continuous(P)", "prime_continuous(sigma(P))"};
    case Suite::thm23:
      return {"meet_continuous(P)", "join_continuous(sigma(P))", "frame(gamma(P))"};
    case Suite::thm25:
      return {"quasicontinuous(P)", "hypercontinuous(sigma(P))"};
    case Suite::chains:
      return {"hypercontinuous => continuous"};
    case Suite::characterizations:
      return {"continuous <=> open-set form", "hypercontinuous <=> finite-set form"};
    case Suite::full:
      break;
  }
  return {};
}

std::string suite_note(Suite s) {
  switch (s) {
    case Suite::lemma31:
      return "equation required on join-continuous lattices; other lattices are recorded as observations "
             "when it fails there; the set identity is required everywhere";
    case Suite::thm32:
      return "non-trivial at finite scale: join continuity and prime continuity both coincide with distributivity";
    case Suite::chains:
      return "prime => join, prime => frame and prime => hyper are non-trivial at finite scale";
    case Suite::characterizations:
      return "prime continuity <=> single-element form is the non-trivial agreement";
    default:
      return "trivialized at finite scale: every conjunct holds on all finite posets; the suite cross-checks "
             "the predicate implementations";
  }
}

enum class Outcome { pass, fail, observation, limited };

struct Slot {
  Outcome outcome = Outcome::pass;
  Verdict verdict;
  std::string message;
};

Slot check_instance(Suite s, const FinitePoset& p, const std::optional<FiniteLattice>& l, Mode mode) {
  Slot slot;
  try {
    switch (s) {
      case Suite::lemma31: {
        slot.verdict = lemma31_check(*l);
        if (!slot.verdict.holds) {
          const bool hypothesis = is_join_continuous(*l).holds;
          slot.verdict.profile["join_continuous"] = hypothesis;
          const bool identity_ok = slot.verdict.profile["set_identity"];
          slot.outcome = (hypothesis || !identity_ok) ? Outcome::fail : Outcome::observation;
        }
        return slot;
      }
      case Suite::thm32:
        slot.verdict = thm32_check(*l, mode);
        break;
      case Suite::thm34:
        slot.verdict = thm34_check(p, mode);
        break;
      case Suite::thm21:
        slot.verdict = thm21_check(p, mode);
        break;
      case Suite::thm23:
        slot.verdict = thm23_check(p, mode);
        break;
      case Suite::thm25:
        slot.verdict = thm25_check(p, mode);
        break;
      case Suite::chains:
        slot.verdict = chain_check(*l, mode);
        break;
      case Suite::characterizations:
        slot.verdict = characterization_check(*l, mode);
        break;
      case Suite::full:
        throw OrderError("full is not a single suite");
    }
    if (!slot.verdict.holds) slot.outcome = Outcome::fail;
  } catch (const SizeLimit& e) {
    slot.outcome = Outcome::limited;
    slot.message = e.what();
  }
  return slot;
}

std::string universe_text(Suite s, const Universe& u) {
  return std::string(is_lattice_suite(s) ? "lattices" : "posets") + " n=" + std::to_string(u.min_n) + ".." +
         std::to_string(u.max_n);
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : kAllSuites)
    if (suite_name(s) == name) return s;
  if (name == "full") return Suite::full;
  return std::nullopt;
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::lemma31: return "lemma31";
    case Suite::thm32: return "thm32";
    case Suite::thm34: return "thm34";
    case Suite::thm21: return "thm21";
    case Suite::thm23: return "thm23";
    case Suite::thm25: return "thm25";
    case Suite::chains: return "chains";
    case Suite::characterizations: return "characterizations";
    case Suite::full: return "full";
  }
  return "?";
}

SuiteReport run_suite(Suite suite, const Universe& universe, const SuiteOptions& options) {
  if (suite == Suite::full) throw OrderError("run_suite takes a single suite; use run_suites for full");
  const auto started = std::chrono::steady_clock::now();

  std::vector<FinitePoset> instances;
  std::vector<std::optional<FiniteLattice>> lattices;
  for (std::size_t n = universe.min_n; n <= universe.max_n; ++n) {
    if (is_lattice_suite(suite)) {
      for (auto& l : enumerate_lattices(n)) {
        instances.push_back(l.poset());
        lattices.emplace_back(std::move(l));
      }
    } else {
      for (auto& p : enumerate_posets(n)) {
        instances.push_back(std::move(p));
        lattices.emplace_back(std::nullopt);
      }
    }
  }

  std::vector<Slot> slots(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < instances.size(); i = next++)
      slots[i] = check_instance(suite, instances[i], lattices[i], options.mode);
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, instances.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SuiteReport report;
  report.suite = suite_name(suite);
  report.universe = universe_text(suite, universe);
  report.instances = instances.size();
  report.trivialized = trivialized_conjuncts(suite);
  report.note = suite_note(suite);
  for (std::size_t i = 0; i < slots.size(); ++i) {
    auto& slot = slots[i];
    switch (slot.outcome) {
      case Outcome::pass:
        break;
      case Outcome::fail:
        report.failures.push_back({instances[i], recognize(instances[i]), std::move(slot.verdict)});
        break;
      case Outcome::observation:
        report.observations.push_back({instances[i], recognize(instances[i]), std::move(slot.verdict)});
        break;
      case Outcome::limited:
        report.limited.push_back(instances[i].name() + ": " + slot.message);
        break;
    }
  }
  if (!options.deterministic)
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

std::vector<SuiteReport> run_suites(Suite suite, const Universe& universe, const SuiteOptions& options) {
  std::vector<SuiteReport> out;
  if (suite != Suite::full) {
    out.push_back(run_suite(suite, universe, options));
    return out;
  }
  for (Suite s : kAllSuites) out.push_back(run_suite(s, universe, options));
  return out;
}

std::optional<FinitePoset> search(const Universe& universe, UniverseKind kind, const PredicateExpr& expr, Mode mode) {
  for (std::size_t n = universe.min_n; n <= universe.max_n; ++n) {
    if (kind == UniverseKind::lattices) {
      for (const auto& l : enumerate_lattices(n))
        if (expr.evaluate(l.poset(), mode)) return l.poset();
    } else {
      for (const auto& p : enumerate_posets(n))
        if (expr.evaluate(p, mode)) return p;
    }
  }
  return std::nullopt;
}

}  // namespace orderkit
