#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

namespace fanocert::certify {

enum class Provenance { Paper, Derived, Trivial };
enum class Verdict { Pass, Fail, Flagged };

std::string to_string(Provenance p);
std::string to_string(Verdict v);
std::optional<Provenance> parse_provenance(const std::string& s);

struct Expected {
  std::string value;
  Provenance provenance = Provenance::Derived;
};

struct Certificate {
  std::string id;
  std::string description;
  Expected expected;
  std::string computed;
  Verdict verdict = Verdict::Fail;
  std::string note;
};

/// Pass iff computed == expected.
Certificate check(std::string id, std::string description, std::string expected, Provenance prov,
                  std::string computed);
/// A logged inconsistency in the source material: reported, never failing.
Certificate flag(std::string id, std::string description, std::string expected, Provenance prov, std::string computed,
                 std::string note);

struct SuiteConfig {
  std::uint64_t seed = 0;
  unsigned trials = 500;
  unsigned degree_bound = 6;
  // genus window of the Fano classification used by the divisibility elimination
  unsigned genus_min = 7;
  unsigned genus_max = 12;
  std::set<unsigned> excluded_genera = {11};
};

struct Summary {
  std::size_t total = 0, pass = 0, fail = 0, flagged = 0;
};

struct Report {
  std::string suite;
  SuiteConfig config;
  std::vector<Certificate> certificates;  // sorted by id

  Summary summary() const;
};

nlohmann::ordered_json to_json(const Report& r);
std::string to_text(const Report& r);

/// Rejects documents whose certificates lack a known provenance tag or whose counts disagree.
void validate_report(const nlohmann::ordered_json& doc);

}  // namespace fanocert::certify
