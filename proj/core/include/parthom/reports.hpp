#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "parthom/json.hpp"
#include "parthom/poset_view.hpp"
#include "parthom/reps.hpp"

namespace parthom {

struct Assertion {
  std::string name;
  bool passed = true;
  /// Informational checks are reported but never fail the report.
  bool informational = false;
  /// Instances checked, failures, and a command that reproduces a failure.
  Json witness;
};

struct Report {
  std::string kind;
  Json inputs = Json::object();
  std::vector<std::string> methods;
  Json results = Json::object();
  std::vector<Assertion> assertions;

  Assertion& check(std::string name, bool passed, Json witness = Json::object());
  Assertion& note(std::string name, bool passed, Json witness = Json::object());
  bool passed() const;
  std::size_t failures() const;
  Json to_json() const;
};

/// Tracks a_S, a'_S, b_S, b'_S and the (n-j, j) and (n-j, 1^j) multiplicities
/// (j <= k) for n up to n_max, asserting stability from n = 2 max(S) + j on,
/// and checks the bridge identities between S, S+1 and {1} u (S+1) at every n.
Report stability_report(const RankSet& s, int k, int n_max);

/// Suites: "conj-3.9" (alias "simsun-bound"), "conj-3.7" (alias
/// "even-h-positive", report only), "hh", "euler", "orbits", "top-homology",
/// "even-block". Throws std::invalid_argument for unknown names.
Report conjecture_check(std::string_view suite, int n_max);
std::vector<std::string> conjecture_suites();

/// Homology of a family view with its predicted module, where one is known.
Report subposet_homology_report(Family family, int n, int k);

/// Name used on the command line for a family ("qnk", "even-top", ...).
Family parse_family(std::string_view name);

}  // namespace parthom
