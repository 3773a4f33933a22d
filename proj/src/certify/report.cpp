#include "fanocert/certify/report.hpp"

#include <sstream>

#include "fanocert/error.hpp"

namespace fanocert::certify {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Paper: return "paper";
    case Provenance::Derived: return "derived";
    case Provenance::Trivial: return "trivial";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Flagged: return "flagged";
  }
  return "?";
}

std::optional<Provenance> parse_provenance(const std::string& s) {
  if (s == "paper") return Provenance::Paper;
  if (s == "derived") return Provenance::Derived;
  if (s == "trivial") return Provenance::Trivial;
  return std::nullopt;
}

Certificate check(std::string id, std::string description, std::string expected, Provenance prov,
                  std::string computed) {
  Certificate c{std::move(id), std::move(description), {std::move(expected), prov}, std::move(computed), Verdict::Fail,
                {}};
  c.verdict = c.computed == c.expected.value ? Verdict::Pass : Verdict::Fail;
  return c;
}

Certificate flag(std::string id, std::string description, std::string expected, Provenance prov, std::string computed,
                 std::string note) {
  return {std::move(id), std::move(description), {std::move(expected), prov}, std::move(computed), Verdict::Flagged,
          std::move(note)};
}

Summary Report::summary() const {
  Summary s;
  s.total = certificates.size();
  for (const auto& c : certificates) {
    if (c.verdict == Verdict::Pass) ++s.pass;
    if (c.verdict == Verdict::Fail) ++s.fail;
    if (c.verdict == Verdict::Flagged) ++s.flagged;
  }
  return s;
}

nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json doc;
  doc["suite"] = r.suite;
  doc["config"] = {{"seed", r.config.seed},
                   {"trials", r.config.trials},
                   {"degree_bound", r.config.degree_bound},
                   {"genus_min", r.config.genus_min},
                   {"genus_max", r.config.genus_max},
                   {"excluded_genera", r.config.excluded_genera}};
  auto s = r.summary();
  doc["summary"] = {{"total", s.total}, {"pass", s.pass}, {"fail", s.fail}, {"flagged", s.flagged}};
  auto& list = doc["certificates"] = nlohmann::ordered_json::array();
  for (const auto& c : r.certificates) {
    nlohmann::ordered_json j;
    j["id"] = c.id;
    j["description"] = c.description;
    j["expected"] = {{"value", c.expected.value}, {"provenance", to_string(c.expected.provenance)}};
    j["computed"] = c.computed;
    j["verdict"] = to_string(c.verdict);
    if (!c.note.empty()) j["note"] = c.note;
    list.push_back(std::move(j));
  }
  return doc;
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << "suite " << r.suite << " (seed " << r.config.seed << ", trials " << r.config.trials << ", degree bound "
     << r.config.degree_bound << ")\n";
  for (const auto& c : r.certificates) {
    std::string v = to_string(c.verdict);
    for (auto& ch : v) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    os << v << std::string(8 - v.size(), ' ') << c.id << "\n";
    os << "        " << c.description << "\n";
    os << "        computed: " << c.computed << "\n";
    os << "        expected: " << c.expected.value << " [" << to_string(c.expected.provenance) << "]\n";
    if (!c.note.empty()) os << "        note: " << c.note << "\n";
  }
  auto s = r.summary();
  os << s.total << " certificates: " << s.pass << " pass, " << s.fail << " fail, " << s.flagged << " flagged\n";
  return os.str();
}

void validate_report(const nlohmann::ordered_json& doc) {
  if (!doc.is_object() || !doc.contains("certificates") || !doc["certificates"].is_array())
    throw Error("report has no certificate list");
  Summary s;
  for (const auto& c : doc["certificates"]) {
    std::string id = c.value("id", std::string("?"));
    if (!c.contains("expected") || !c["expected"].is_object() || !c["expected"].contains("provenance"))
      throw Error("certificate '" + id + "' has an untagged expectation");
    const auto& tag = c["expected"]["provenance"];
    if (!tag.is_string() || !parse_provenance(tag.get<std::string>()))
      throw Error("certificate '" + id + "' has an unknown provenance tag");
    std::string v = c.value("verdict", std::string());
    ++s.total;
    if (v == "pass")
      ++s.pass;
    else if (v == "fail")
      ++s.fail;
    else if (v == "flagged")
      ++s.flagged;
    else
      throw Error("certificate '" + id + "' has an unknown verdict");
  }
  if (doc.contains("summary")) {
    const auto& sm = doc["summary"];
    if (sm.value("total", s.total + 1) != s.total || sm.value("pass", s.pass + 1) != s.pass ||
        sm.value("fail", s.fail + 1) != s.fail || sm.value("flagged", s.flagged + 1) != s.flagged)
      throw Error("report summary disagrees with its certificates");
  }
}

}  // namespace fanocert::certify
