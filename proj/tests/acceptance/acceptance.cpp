// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Expected values come from the brute-force oracles in
// support/oracles.hpp, not from the library under test.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "orderkit/canonical.hpp"
#include "orderkit/generators.hpp"
#include "orderkit/poset_io.hpp"
#include "orderkit/properties.hpp"
#include "orderkit/relations.hpp"
#include "orderkit/report.hpp"
#include "orderkit/stone_dual.hpp"
#include "orderkit/verifier.hpp"
#include "support/oracles.hpp"

using namespace orderkit;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::ostringstream info;
  std::vector<std::string> problems;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (problems.size() < 5) problems.push_back(what);
  }
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::vector<FiniteLattice> lattices_up_to(std::size_t n) {
  std::vector<FiniteLattice> out;
  for (std::size_t k = 1; k <= n; ++k)
    for (auto& l : enumerate_lattices(k)) out.push_back(std::move(l));
  return out;
}

std::vector<FinitePoset> posets_up_to(std::size_t n) {
  std::vector<FinitePoset> out;
  for (std::size_t k = 1; k <= n; ++k)
    for (auto& p : enumerate_posets(k)) out.push_back(std::move(p));
  return out;
}

std::vector<std::vector<bool>> matrix(const Relation& r) {
  std::vector<std::vector<bool>> m(r.size(), std::vector<bool>(r.size()));
  for (Element x = 0; x < r.size(); ++x)
    for (Element y = 0; y < r.size(); ++y) m[x][y] = r.contains(x, y);
  return m;
}

// ---------------------------------------------------------------------------

void discrimination(Outcome& out) {
  const auto start = Clock::now();
  const auto ls = lattices_up_to(7);
  out.expect(ls.size() == 78, "expected 78 lattices, got " + std::to_string(ls.size()));
  std::size_t distributive_count = 0;
  for (const auto& l : ls) {
    const auto o = oracle::from(l.poset());
    const bool jc = is_join_continuous(l).holds;
    const bool fr = is_frame(l).holds;
    const bool di = is_distributive(l).holds;
    const bool pc = is_prime_continuous(l, Mode::oracle).holds;
    const bool hc = is_hypercontinuous(l, Mode::oracle).holds;
    const bool want = oracle::distributive(o);
    distributive_count += want ? 1 : 0;
    const std::string at = " at " + l.name();
    out.expect(jc == fr && fr == di && di == pc, "predicates disagree" + at);
    out.expect(hc, "hypercontinuity fails" + at);
    out.expect(di == want, "distributivity differs from oracle" + at);
    out.expect(jc == oracle::join_continuous_all_sets(o), "join continuity differs from all-S oracle" + at);
    out.expect(fr == oracle::frame_all_sets(o), "frame law differs from all-S oracle" + at);
    out.expect(pc == oracle::join_of_predecessors(o, oracle::way_way_below(o)), "prime continuity differs" + at);
    out.expect(hc == oracle::join_of_predecessors(o, oracle::prec(o)), "hypercontinuity differs" + at);
  }
  const double t = seconds_since(start);
  out.expect(t < 300.0, "runtime over 5 minutes");
  out.info << ls.size() << " lattices, " << distributive_count << " distributive, " << t << "s";
}

void lemma_suite(Outcome& out) {
  std::size_t jc_count = 0;
  for (const auto& l : lattices_up_to(7)) {
    const auto o = oracle::from(l.poset());
    bool equation = true, identity = true;
    for (oracle::Mask m = 0; m <= o.full(); ++m) {
      const oracle::Mask comp = o.full() & ~oracle::down_set(o, m);
      oracle::Mask meet_of = o.full();
      int rhs = *oracle::sup(o, 0);
      for (int k = 0; k < o.n; ++k)
        if (oracle::in(m, k)) {
          meet_of &= o.full() & ~o.down(k);
          rhs = oracle::join(o, rhs, *oracle::inf(o, o.full() & ~o.down(k)));
        }
      equation = equation && *oracle::inf(o, comp) == rhs;
      identity = identity && comp == meet_of;
    }
    const bool jc = oracle::join_continuous_all_sets(o);
    jc_count += jc ? 1 : 0;
    const auto v = lemma31_check(l);
    const std::string at = " at " + l.name();
    out.expect(identity, "set identity fails" + at);
    if (jc) out.expect(equation, "equation fails on a join-continuous lattice" + at);
    out.expect(v.profile.at("equation") == equation, "library equation verdict differs" + at);
    out.expect(v.profile.at("set_identity") == identity, "library identity verdict differs" + at);
  }
  const auto m3 = lemma31_check(as_lattice(named("M3")));
  const bool witness_ok = !m3.holds && m3.witness &&
                          m3.witness->subsets == std::vector<std::vector<std::string>>{{"a", "b"}} &&
                          m3.witness->lhs == std::optional<std::string>("c") &&
                          m3.witness->rhs == std::optional<std::string>("bot");
  out.expect(witness_ok, "M3 witness is not M={a,b}, lhs=c, rhs=bot");
  const auto suite = run_suite(Suite::lemma31, {1, 7});
  out.expect(suite.passed(), "lemma31 suite reports failures");
  out.info << jc_count << " join-continuous of 78; M3 witness M={a,b} lhs=c rhs=bot";
}

void biconditional_suites(Outcome& out) {
  const auto lat = run_suite(Suite::thm32, {1, 7});
  const auto pos = run_suite(Suite::thm34, {1, 5});
  out.expect(lat.instances == 78 && lat.passed(), "thm32 suite failed or wrong universe");
  out.expect(pos.instances == 87 && pos.passed(), "thm34 suite failed or wrong universe");
  out.expect(lat.trivialized == std::vector<std::string>{"hypercontinuous"}, "thm32 trivialized conjuncts not flagged");
  out.expect(pos.trivialized == std::vector<std::string>{"meet_continuous", "quasicontinuous", "continuous"},
             "thm34 trivialized conjuncts not flagged");
  for (const auto& l : lattices_up_to(7)) {
    const auto o = oracle::from(l.poset());
    const bool lhs = oracle::join_continuous_all_sets(o) && oracle::join_of_predecessors(o, oracle::prec(o));
    const bool rhs = oracle::join_of_predecessors(o, oracle::way_way_below(o));
    out.expect(lhs == rhs, "oracle biconditional fails at " + l.name());
  }
  for (const auto& p : posets_up_to(5)) {
    const auto o = oracle::from(p);
    const bool cont = oracle::way_below(o) == o.le;  // every element is then its own approximant sup
    out.expect(cont, "way-below oracle is not the order at " + p.name());
  }
  out.info << "thm32 " << lat.instances << " lattices, thm34 " << pos.instances
           << " posets; trivialized flagged: hypercontinuous | meet_continuous, quasicontinuous, continuous";
}

// Prime continuity of a family of sets closed under union, read off the
// definition: u <| v fails iff some S with union >= v has no member >= u,
// and the largest such S is {s | u not within s}.
bool opens_prime_continuous(const std::vector<oracle::Mask>& sets) {
  for (oracle::Mask v : sets) {
    oracle::Mask join_of_preds = 0;
    for (oracle::Mask u : sets) {
      if ((u & ~v) != 0) continue;
      oracle::Mask worst = 0;
      for (oracle::Mask s : sets)
        if ((u & ~s) != 0) worst |= s;
      if ((v & ~worst) != 0) join_of_preds |= u;
    }
    if (join_of_preds != v) return false;
  }
  return true;
}

void stone_suites(Outcome& out) {
  const auto start = Clock::now();
  for (Suite s : {Suite::thm21, Suite::thm23, Suite::thm25}) {
    const auto r = run_suite(s, {1, 5});
    out.expect(r.instances == 87 && r.passed(), suite_name(s) + " suite failed or wrong universe");
  }
  for (const auto& p : posets_up_to(5)) {
    const auto o = oracle::from(p);
    const auto want = oracle::scott_opens(o);
    const auto opens = scott_opens(p);
    const auto closed = scott_closed_lattice(p);
    std::vector<oracle::Mask> got;
    for (const auto& s : opens.sets) got.push_back(s.mask());
    std::sort(got.begin(), got.end());
    const std::string at = " at " + p.name();
    out.expect(got == want, "open sets differ from the oracle" + at);
    out.expect(opens_prime_continuous(want), "opens not prime continuous (oracle)" + at);
    out.expect(is_prime_continuous(opens.lattice).holds, "opens not prime continuous (library)" + at);

    // closed sets are the complements, ordered by reverse inclusion
    std::vector<oracle::Mask> closed_masks;
    for (const auto& c : closed.sets) closed_masks.push_back(c.mask());
    bool dual_ok = closed_masks.size() == want.size();
    for (oracle::Mask u : want)
      dual_ok = dual_ok && std::find(closed_masks.begin(), closed_masks.end(), o.full() & ~u) != closed_masks.end();
    out.expect(dual_ok, "closed sets are not the complements of the opens" + at);
    out.expect(is_isomorphic(closed.lattice.poset(), dual(opens.lattice.poset())), "gamma is not dual of sigma" + at);
  }
  const double t = seconds_since(start);
  out.expect(t < 300.0, "runtime over 5 minutes");
  out.info << "87 posets, sigma prime continuous, gamma iso dual(sigma), " << t << "s";
}

void oracle_equivalence(Outcome& out) {
  std::vector<FiniteLattice> ls = lattices_up_to(6);
  std::vector<FinitePoset> extra_posets;
  for (const char* name : {"M3", "N5", "one-point", "chain(2)", "chain(5)", "chain(7)", "boolean(2)", "boolean(3)"})
    ls.push_back(as_lattice(named(name)));
  for (const char* name : {"antichain(1)", "antichain(3)", "antichain(5)"}) extra_posets.push_back(named(name));
  std::size_t checked = 0;
  for (const auto& l : ls) {
    const auto o = oracle::from(l.poset());
    const std::string at = " at " + l.name();
    const auto order = Relation::of_order(l.poset());
    const auto wwb = way_way_below(l, Mode::fast);
    out.expect(wwb == way_way_below(l, Mode::oracle), "closed form differs from library oracle" + at);
    out.expect(matrix(wwb) == oracle::way_way_below(o), "closed form differs from 2^n oracle" + at);
    out.expect(prec(l, Mode::oracle) == order, "prec oracle differs from order" + at);
    out.expect(oracle::prec(o) == o.le, "test prec oracle differs from order" + at);
    out.expect(way_below(l.poset(), Mode::oracle) == order, "way-below oracle differs from order" + at);
    out.expect(oracle::way_below(o) == o.le, "test way-below oracle differs from order" + at);
    ++checked;
  }
  for (const auto& p : extra_posets) {
    out.expect(way_below(p, Mode::oracle) == Relation::of_order(p), "way-below oracle differs at " + p.name());
    ++checked;
  }
  out.info << checked << " structures (25 lattices n<=6 plus named examples)";
}

void characterizations(Outcome& out) {
  std::size_t count = 0;
  for (const auto& l : lattices_up_to(6)) {
    const auto v = characterization_check(l);
    out.expect(v.holds, "characterization_check fails at " + l.name());
    out.expect(v.profile.at("prime_continuous_form") == oracle::distributive(oracle::from(l.poset())),
               "single-element form differs from distributivity at " + l.name());
    ++count;
  }
  out.info << count << " lattices";
}

void enumeration_counts(Outcome& out) {
  const std::vector<std::size_t> posets{1, 2, 5, 16, 63};
  const std::vector<std::size_t> lattices{1, 1, 1, 2, 5, 15, 53};
  std::ostringstream got_p, got_l;
  for (std::size_t n = 1; n <= posets.size(); ++n) {
    const std::size_t c = enumerate_posets(n).size();
    got_p << (n > 1 ? "," : "") << c;
    out.expect(c == posets[n - 1], "poset count mismatch at n=" + std::to_string(n));
    const auto brute = oracle::all_posets(static_cast<int>(n));
    out.expect(brute.size() == posets[n - 1], "brute-force poset count mismatch at n=" + std::to_string(n));
  }
  for (std::size_t n = 1; n <= lattices.size(); ++n) {
    const std::size_t c = enumerate_lattices(n).size();
    got_l << (n > 1 ? "," : "") << c;
    out.expect(c == lattices[n - 1], "lattice count mismatch at n=" + std::to_string(n));
  }
  out.info << "posets " << got_p.str() << "; lattices " << got_l.str();
}

#ifdef ORDERKIT_CLI_PATH
std::optional<std::string> capture(const std::string& cmd) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return std::nullopt;
  std::string out;
  char buf[4096];
  while (std::size_t k = std::fread(buf, 1, sizeof buf, pipe.get())) out.append(buf, k);
  return out;
}
#endif

void determinism(Outcome& out) {
  std::string reference;
  for (int run = 0; run < 2; ++run)
    for (std::size_t jobs : {1, 2, 4, 8}) {
      const auto text = verify_json(run_suites(Suite::full, {1, 4}, {Mode::oracle, jobs, true}), 4).dump(2);
      if (reference.empty()) reference = text;
      out.expect(text == reference, "library report differs at jobs=" + std::to_string(jobs));
    }
#ifdef ORDERKIT_CLI_PATH
  const std::string cli = ORDERKIT_CLI_PATH;
  std::optional<std::string> first;
  for (int run = 0; run < 2; ++run)
    for (int jobs : {1, 3, 8}) {
      const auto text =
          capture("\"" + cli + "\" verify --suite full --max-n 4 --json --deterministic --jobs " + std::to_string(jobs));
      out.expect(text.has_value() && !text->empty(), "CLI produced no output");
      if (!text) continue;
      if (!first) first = text;
      out.expect(*text == *first, "CLI output differs at --jobs " + std::to_string(jobs));
    }
  if (first) out.expect(*first == reference + "\n", "CLI output differs from the library report");
#endif
  const auto expr = PredicateExpr::parse("lattice & !join_continuous");
  std::optional<std::string> found;
  for (int run = 0; run < 3; ++run) {
    const auto hit = search({1, 5}, UniverseKind::posets, expr);
    out.expect(hit.has_value(), "search found nothing");
    if (!hit) continue;
    const std::string text = emit_poset(*hit);
    if (!found) found = text;
    out.expect(text == *found, "search result differs between runs");
    out.expect(oracle::brute_isomorphic(oracle::from(*hit), oracle::from(named("M3"))), "search hit is not M3");
  }
  out.info << "verify report " << reference.size() << " bytes identical across runs and jobs; search -> M3";
}

void round_trip(Outcome& out) {
  std::mt19937_64 rng(2024);
  std::size_t count = 0;
  for (const auto& p : posets_up_to(5)) {
    out.expect(parse_poset(emit_poset(p)) == p, "canonical poset not reproduced exactly: " + p.name());
    std::vector<Element> order(p.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const auto q = permute(p, order);
    const auto back = parse_poset(emit_poset(q));
    out.expect(oracle::brute_isomorphic(oracle::from(back), oracle::from(p)), "round trip broke " + p.name());
    ++count;
  }
  out.info << count << " posets";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "discrimination on lattices n<=7", discrimination},
      {2, "lemma31 equation and set identity on lattices n<=7", lemma_suite},
      {3, "thm32 (lattices n<=7) and thm34 (posets n<=5) with trivialized conjuncts", biconditional_suites},
      {4, "thm21/thm23/thm25 on posets n<=5, sigma prime continuous, gamma = dual(sigma)", stone_suites},
      {5, "oracle equivalence for <|, prec and << on lattices n<=6 and named examples", oracle_equivalence},
      {6, "characterization_check on lattices n<=6", characterizations},
      {7, "enumeration counts", enumeration_counts},
      {8, "determinism of verify reports and search", determinism},
      {9, "parse(emit(P)) isomorphic to P for posets n<=5", round_trip},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Outcome out;
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.ok = false;
      out.problems.push_back(std::string("exception: ") + e.what());
    }
    all = all && out.ok;
    std::cout << (out.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " -- " << out.info.str()
              << '\n';
    for (const auto& p : out.problems) std::cout << "    " << p << '\n';
    std::cout.flush();
  }
  return all ? 0 : 1;
}
