#include "orderkit/report.hpp"

#include <iomanip>
#include <sstream>

#include "orderkit/poset_io.hpp"

namespace orderkit {

bool CheckReport::all_hold() const {
  for (const auto& [name, v] : results)
    if (v && !v->holds) return false;
  return true;
}

CheckReport check_properties(const FinitePoset& p, const std::vector<std::string>& names, Mode mode) {
  CheckReport r;
  r.name = p.name();
  r.n = p.size();
  for (const auto& name : names) r.results.emplace_back(name, evaluate_property(name, p, mode));
  return r;
}

nlohmann::json witness_json(const Witness& w) {
  nlohmann::json j;
  j["elements"] = w.elements;
  j["subsets"] = w.subsets;
  j["lhs"] = w.lhs ? nlohmann::json(*w.lhs) : nlohmann::json(nullptr);
  j["rhs"] = w.rhs ? nlohmann::json(*w.rhs) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const CheckReport& report, bool with_witnesses) {
  nlohmann::json j;
  j["name"] = report.name;
  j["n"] = report.n;
  j["properties"] = nlohmann::json::object();
  j["witnesses"] = nlohmann::json::object();
  for (const auto& [name, v] : report.results) {
    if (!v) {
      j["properties"][name] = "skipped";
      continue;
    }
    j["properties"][name] = v->holds;
    if (with_witnesses && !v->holds && v->witness) j["witnesses"][name] = witness_json(*v->witness);
  }
  return j;
}

namespace {

std::string join_words(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) out += (out.empty() ? "" : ",") + w;
  return out;
}

std::string describe(const Witness& w) {
  std::vector<std::string> parts;
  if (!w.elements.empty()) parts.push_back("elements (" + join_words(w.elements) + ")");
  for (const auto& s : w.subsets) parts.push_back("{" + join_words(s) + "}");
  if (w.lhs) parts.push_back("lhs=" + *w.lhs);
  if (w.rhs) parts.push_back("rhs=" + *w.rhs);
  if (!w.detail.empty()) parts.push_back(": " + w.detail);
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " ") + p;
  return out;
}

nlohmann::json instance_json(const InstanceResult& r) {
  nlohmann::json j;
  j["instance"] = r.instance.name();
  j["alias"] = r.alias ? nlohmann::json(*r.alias) : nlohmann::json(nullptr);
  j["poset"] = emit_poset(r.instance);
  j["profile"] = r.verdict.profile;
  if (r.verdict.witness) {
    j["witness"] = witness_json(*r.verdict.witness);
    j["detail"] = r.verdict.witness->detail;
  }
  return j;
}

std::string instance_name(const InstanceResult& r) {
  return r.instance.name() + (r.alias ? " (" + *r.alias + ")" : "");
}

}  // namespace

std::string to_text(const CheckReport& report, bool with_witnesses) {
  std::ostringstream out;
  out << report.name << " (n=" << report.n << ")\n";
  for (const auto& [name, v] : report.results) {
    out << "  " << std::left << std::setw(27) << name << (v ? (v->holds ? "true" : "false") : "skipped") << '\n';
    if (with_witnesses && v && !v->holds && v->witness) out << "    witness: " << describe(*v->witness) << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const SuiteReport& report) {
  nlohmann::json j;
  j["suite"] = report.suite;
  j["universe"] = report.universe;
  j["instances"] = report.instances;
  j["passed"] = report.passed();
  j["failures"] = nlohmann::json::array();
  for (const auto& f : report.failures) j["failures"].push_back(instance_json(f));
  j["observations"] = nlohmann::json::array();
  for (const auto& o : report.observations) j["observations"].push_back(instance_json(o));
  j["limited"] = report.limited;
  j["trivialized_at_finite_scale"] = report.trivialized;
  j["note"] = report.note;
  if (report.wall_seconds) j["wall_seconds"] = *report.wall_seconds;
  return j;
}

nlohmann::json verify_json(const std::vector<SuiteReport>& reports, std::size_t max_n) {
  nlohmann::json j;
  j["name"] = "verify";
  j["n"] = max_n;
  j["properties"] = nlohmann::json::object();
  j["witnesses"] = nlohmann::json::object();
  j["suite"] = nlohmann::json::array();
  for (const auto& r : reports) {
    j["properties"][r.suite] = r.passed();
    if (!r.failures.empty() && r.failures.front().verdict.witness)
      j["witnesses"][r.suite] = witness_json(*r.failures.front().verdict.witness);
    j["suite"].push_back(to_json(r));
  }
  return j;
}

std::string verify_text(const std::vector<SuiteReport>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    out << (r.passed() ? "PASS " : "FAIL ") << r.suite << "  [" << r.universe << "]  instances=" << r.instances
        << " failures=" << r.failures.size();
    if (!r.observations.empty()) out << " observations=" << r.observations.size();
    if (!r.limited.empty()) out << " limited=" << r.limited.size();
    if (r.wall_seconds) out << std::fixed << std::setprecision(3) << "  " << *r.wall_seconds << "s";
    out << '\n';
    if (!r.trivialized.empty()) out << "  trivialized at finite scale: " << join_words(r.trivialized) << '\n';
    out << "  note: " << r.note << '\n';
    for (const auto& f : r.failures)
      out << "  failure " << instance_name(f) << ": " << (f.verdict.witness ? describe(*f.verdict.witness) : "") << '\n';
    for (const auto& o : r.observations)
      out << "  observation " << instance_name(o) << ": " << (o.verdict.witness ? describe(*o.verdict.witness) : "")
          << '\n';
    for (const auto& l : r.limited) out << "  limited " << l << '\n';
  }
  return out.str();
}

}  // namespace orderkit
