#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "cache.hpp"
#include "parthom/chain_complex.hpp"
#include "parthom/errors.hpp"
#include "parthom/homology.hpp"
#include "parthom/json.hpp"
#include "parthom/numbers.hpp"
#include "parthom/poset_view.hpp"
#include "parthom/reports.hpp"
#include "parthom/reps.hpp"
#include "symfunc_text.hpp"

namespace parthom::cli {

namespace {

struct Options {
  int n = -1;
  std::string ranks = "-";
  int k = -1;
  std::string family;
  std::string poset = "full";
  std::string method;
  std::string mult;
  std::string format = "pretty";
  std::string out;
  std::string cache_dir;
  int jobs = 1;
  int max_n = -1;
  std::string suite;
  std::string basis;
  std::string boundary_out;
  std::string op;
  std::string f;
  std::string g;
  std::string mu;
  int max_degree = -1;
};

/// A thrown assertion failure that carries a witness.
struct AssertionFailure : std::runtime_error {
  Json witness;
  AssertionFailure(const std::string& what, Json w) : std::runtime_error(what), witness(std::move(w)) {}
};

// Runs fn(i) for i in [0, count) on up to `jobs` threads; results are written
// by index so the outcome never depends on scheduling.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  const std::size_t width = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(jobs, 1)));
  if (width <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < width; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

void require_n(const Options& o) {
  if (o.n < 0) throw std::invalid_argument("--n is required");
}

std::string cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

Json row_json(int n, const RankSet& s, const Multiplicities& m) {
  Json row;
  row["n"] = n;
  row["S"] = s.to_string();
  row["a_S"] = integer_to_json(m.a);
  row["a'_S"] = integer_to_json(m.a_prime);
  row["b_S"] = integer_to_json(m.b);
  row["b'_S"] = integer_to_json(m.b_prime);
  return row;
}

const std::vector<std::string> kRowColumns{"n", "S", "a_S", "a'_S", "b_S", "b'_S"};

// --mult tokens: trivial, refl, sign, two-row-J, hook-J, or a dotted partition "4.2.1".
IntPartition mult_partition(const std::string& token, int n) {
  auto suffix = [&](std::string_view prefix) -> std::optional<int> {
    if (token.rfind(prefix, 0) != 0) return std::nullopt;
    return std::stoi(token.substr(prefix.size()));
  };
  IntPartition lambda;
  if (token == "trivial") {
    lambda = IntPartition::row(n);
  } else if (token == "refl") {
    lambda = IntPartition::from_unsorted({n - 1, 1});
  } else if (token == "sign") {
    lambda = IntPartition::column(n);
  } else if (auto j = suffix("two-row-")) {
    lambda = IntPartition::from_unsorted({n - *j, *j});
  } else if (auto h = suffix("hook-")) {
    lambda = IntPartition::hook(n, *h);
  } else {
    std::string commas = token;
    std::replace(commas.begin(), commas.end(), '.', ',');
    lambda = parse_partition(commas);
  }
  if (lambda.weight() != n) {
    throw std::invalid_argument("--mult " + token + " does not name a partition of " + std::to_string(n));
  }
  return lambda;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, sep)) {
    if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

Basis output_basis(const Options& o, Basis fallback) {
  return o.basis.empty() ? fallback : parse_basis(o.basis);
}

// ---------------------------------------------------------------- commands

Json compute_module(const Options& o, bool is_beta) {
  require_n(o);
  const RankSet s = RankSet::parse(o.ranks);
  s.validate(o.n);
  Json p;
  p["command"] = is_beta ? "beta" : "alpha";
  p["n"] = o.n;
  p["S"] = s.to_string();
  SymFunc f;
  Multiplicities m;
  if (is_beta) {
    const BetaMethod method = o.method.empty() ? BetaMethod::recurrence : parse_beta_method(o.method);
    p["method"] = std::string(method_name(method));
    f = beta(o.n, s, method);
    m = multiplicities(o.n, s, method);
  } else {
    const AlphaMethod method = o.method.empty() ? AlphaMethod::recurrence : parse_alpha_method(o.method);
    p["method"] = std::string(method_name(method));
    f = alpha(o.n, s, method);
    m = multiplicities(o.n, s,
                       method == AlphaMethod::chains ? BetaMethod::inclusion_exclusion : BetaMethod::recurrence);
  }
  const Basis basis = output_basis(o, Basis::s);
  p["characteristic"] = symfunc_to_json(convert(f, basis));
  p["dimension"] = to_string(dimension(f));
  p["row"] = row_json(o.n, s, m);
  Json mults = Json::array();
  const SymFunc in_s = convert(f, Basis::s);
  for (const auto& token : split(o.mult, ',')) {
    const IntPartition lambda = mult_partition(token, o.n);
    Json item;
    item["name"] = token;
    item["partition"] = partition_to_json(lambda);
    item["value"] = to_string(in_s.coeff(lambda));
    mults.push_back(std::move(item));
  }
  p["mult"] = std::move(mults);
  return p;
}

void render_module(const Json& p, const std::string& format, std::ostream& os) {
  if (format == "tsv") {
    std::vector<std::string> header = kRowColumns;
    for (const auto& m : p["mult"]) header.push_back(m["name"].get<std::string>());
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "\t" : "") << header[i];
    os << "\n";
    bool first = true;
    for (const auto& col : kRowColumns) {
      os << (first ? "" : "\t") << cell(p["row"][col]);
      first = false;
    }
    for (const auto& m : p["mult"]) os << "\t" << cell(m["value"]);
    os << "\n";
    return;
  }
  const std::string name = p["command"].get<std::string>();
  os << name << "_S(n) for n = " << p["n"].dump() << ", S = " << p["S"].get<std::string>() << " ("
     << p["method"].get<std::string>() << ")\n";
  os << "  " << symfunc_from_json(p["characteristic"]).to_string() << "\n";
  os << "  dimension " << p["dimension"].get<std::string>() << "\n";
  for (const auto& col : {"a_S", "a'_S", "b_S", "b'_S"}) os << "  " << col << " = " << cell(p["row"][col]) << "\n";
  for (const auto& m : p["mult"]) {
    os << "  <" << name << ", s" << partition_from_json(m["partition"]).to_string() << "> = " << cell(m["value"])
       << "\n";
  }
}

Json compute_homology(const Options& o) {
  require_n(o);
  const PosetView view(o.n, ViewSpec::parse(o.poset));
  const auto cc = ChainComplex::order_complex(view);
  if (!cc.boundary_squared_zero()) throw std::logic_error("boundary maps do not compose to zero");
  Json p;
  p["command"] = "homology";
  p["homology"] = homology_to_json(homology(cc, view.name()));
  p["mobius"] = integer_to_json(mobius_number(view));
  Json counts = Json::object();
  for (int d = -1; d <= cc.top_dimension(); ++d) counts[std::to_string(d)] = cc.simplex_count(d);
  p["simplices"] = counts;
  if (!o.boundary_out.empty()) {
    std::filesystem::create_directories(o.boundary_out);
    for (int d = 0; d <= cc.top_dimension(); ++d) {
      const auto path = std::filesystem::path(o.boundary_out) / ("boundary_" + std::to_string(d) + ".txt");
      std::ofstream file(path);
      if (!file) throw std::runtime_error("cannot write " + path.string());
      cc.boundary(d).write_triplets(file);
    }
  }
  return p;
}

void render_homology(const Json& p, const std::string& format, std::ostream& os) {
  const Json& h = p["homology"];
  if (format == "tsv") {
    os << "degree\tbetti\ttorsion\n";
    for (const auto& [d, b] : h["betti"].items()) {
      std::string torsion;
      if (h["torsion"].contains(d)) {
        for (const auto& t : h["torsion"][d]) torsion += (torsion.empty() ? "" : ",") + cell(t);
      }
      os << d << "\t" << cell(b) << "\t" << torsion << "\n";
    }
    return;
  }
  os << "reduced homology of " << h["view"].get<std::string>() << "\n";
  bool any = false;
  for (const auto& [d, b] : h["betti"].items()) {
    const bool has_torsion = h["torsion"].contains(d);
    if (cell(b) == "0" && !has_torsion) continue;
    any = true;
    os << "  H_" << d << " = ";
    std::string sep;
    if (cell(b) != "0") {
      os << "Z^" << cell(b);
      sep = " + ";
    }
    if (has_torsion) {
      for (const auto& t : h["torsion"][d]) {
        os << sep << "Z/" << cell(t);
        sep = " + ";
      }
    }
    os << "\n";
  }
  if (!any) os << "  (acyclic)\n";
  os << "  Mobius number " << cell(p["mobius"]) << "\n";
}

Json table_payload(std::string family, std::vector<std::string> columns) {
  Json p;
  p["command"] = "table";
  p["family"] = std::move(family);
  p["columns"] = std::move(columns);
  p["rows"] = Json::array();
  return p;
}

std::pair<int, int> n_range(const Options& o, int lo_default) {
  if (o.n >= 0) return {o.n, o.n};
  if (o.max_n >= 0) return {lo_default, o.max_n};
  throw std::invalid_argument("give --n or --max-n");
}

Json compute_table(const Options& o) {
  const std::string family = o.family.empty() ? "bS" : o.family;
  if (family == "bS") {
    const auto [lo, hi] = n_range(o, 4);
    std::vector<std::pair<int, RankSet>> jobs;
    for (int n = std::max(lo, 3); n <= hi; ++n) {
      if (n > kMaxRecurrenceN) {
        throw FeasibilityError("table bS is limited to n <= " + std::to_string(kMaxRecurrenceN));
      }
      for (const auto& s : all_rank_sets(n)) jobs.emplace_back(n, s);
    }
    std::vector<Json> rows(jobs.size());
    parallel_for(jobs.size(), o.jobs, [&](std::size_t i) {
      const auto& [n, s] = jobs[i];
      const Json row = row_json(n, s, multiplicities(n, s));
      Json arr = Json::array();
      for (const auto& col : kRowColumns) arr.push_back(row[col]);
      rows[i] = std::move(arr);
    });
    Json p = table_payload(family, kRowColumns);
    for (auto& r : rows) p["rows"].push_back(std::move(r));
    return p;
  }
  if (family == "ai" || family == "bi" || family == "Ek") {
    const auto [lo, hi] = n_range(o, 2);
    Json p = table_payload(family, {"n", family == "Ek" ? "k" : "i", family == "ai" ? "a_i(n)" : family == "bi" ? "b_i(n)" : "E_k(n)"});
    for (int n = lo; n <= hi; ++n) {
      const int from = family == "ai" ? 0 : 2;
      const int to = family == "ai" ? n / 2 : n;
      for (int i = from; i <= to; ++i) {
        const Integer v = family == "ai" ? simsun(i, n) : family == "bi" ? bi(i, n) : even_refinement(i, n);
        p["rows"].push_back(Json::array({n, i, integer_to_json(v)}));
      }
    }
    return p;
  }
  if (family == "euler") {
    const auto [lo, hi] = n_range(o, 0);
    Json p = table_payload(family, {"n", "E_n"});
    for (int n = lo; n <= hi; ++n) p["rows"].push_back(Json::array({n, integer_to_json(euler_number(n))}));
    return p;
  }
  throw std::invalid_argument("unknown table family '" + family + "' (bS|ai|bi|Ek|euler)");
}

void render_table(const Json& p, const std::string& format, std::ostream& os) {
  const auto& columns = p["columns"];
  if (format == "tsv") {
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "\t" : "") << cell(columns[i]);
    os << "\n";
    for (const auto& row : p["rows"]) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "\t" : "") << cell(row[i]);
      os << "\n";
    }
    return;
  }
  std::vector<std::size_t> width(columns.size(), 0);
  for (std::size_t i = 0; i < columns.size(); ++i) width[i] = cell(columns[i]).size();
  for (const auto& row : p["rows"]) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], cell(row[i]).size());
  }
  auto line = [&](const Json& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << cell(row[i]);
    }
    os << "\n";
  };
  line(columns);
  for (const auto& row : p["rows"]) line(row);
}

Json compute_numbers(const Options& o, const std::string& which) {
  Options t = o;
  if (which == "euler") {
    t.family = "euler";
    if (t.n >= 0 && t.max_n < 0) {
      t.max_n = t.n;
      t.n = -1;
    }
  } else {
    t.family = which == "simsun" ? "ai" : "bi";
  }
  Json p = compute_table(t);
  p["command"] = which;
  if (which == "bi") {
    p["columns"] = Json::array({"n", "i", "b_i(n)", "E_i(n)"});
    for (auto& row : p["rows"]) {
      row.push_back(integer_to_json(even_refinement(row[1].get<int>(), row[0].get<int>())));
    }
  }
  return p;
}

int default_max_n(const std::string& suite) {
  static const std::map<std::string, int> defaults{{"conj-3.9", 7}, {"simsun-bound", 7}, {"conj-3.7", 4},
                                                   {"even-h-positive", 4}, {"hh", 7}, {"euler", 7},
                                                   {"orbits", 8}, {"top-homology", 7}, {"even-block", 3}};
  auto it = defaults.find(suite);
  return it == defaults.end() ? 7 : it->second;
}

Json compute_check(const Options& o) {
  if (o.suite.empty()) throw std::invalid_argument("--suite is required");
  std::vector<std::string> suites;
  if (o.suite == "all") {
    for (const auto& s : {"conj-3.9", "conj-3.7", "hh", "euler", "orbits", "top-homology", "even-block"}) {
      suites.emplace_back(s);
    }
  } else {
    suites = split(o.suite, ',');
  }
  const auto known = conjecture_suites();
  for (const auto& s : suites) {
    if (std::find(known.begin(), known.end(), s) == known.end()) {
      throw std::invalid_argument("unknown suite '" + s + "'");
    }
  }
  std::vector<Json> reports(suites.size());
  std::vector<bool> passed(suites.size());
  parallel_for(suites.size(), o.jobs, [&](std::size_t i) {
    const Report r = conjecture_check(suites[i], o.max_n >= 0 ? o.max_n : default_max_n(suites[i]));
    reports[i] = r.to_json();
    passed[i] = r.passed();
  });
  Json p;
  p["command"] = "check";
  p["reports"] = Json::array();
  bool all = true;
  for (std::size_t i = 0; i < suites.size(); ++i) {
    p["reports"].push_back(std::move(reports[i]));
    all = all && passed[i];
  }
  p["passed"] = all;
  return p;
}

void render_report_list(const Json& reports, const std::string& format, std::ostream& os) {
  if (format == "tsv") os << "report\tassertion\tstatus\tchecked\n";
  for (const auto& r : reports) {
    const std::string kind = r["kind"].get<std::string>();
    if (format != "tsv") os << kind << ": " << (r["passed"].get<bool>() ? "PASS" : "FAIL") << "\n";
    for (const auto& a : r["assertions"]) {
      const bool info = a.value("informational", false);
      const bool ok = a["passed"].get<bool>();
      const std::string status = info ? (ok ? "REPORT-OK" : "REPORT-FOUND") : (ok ? "PASS" : "FAIL");
      const std::string checked = a["witness"].contains("checked") ? cell(a["witness"]["checked"]) : "";
      if (format == "tsv") {
        os << kind << "\t" << a["name"].get<std::string>() << "\t" << status << "\t" << checked << "\n";
      } else {
        os << "  [" << status << "] " << a["name"].get<std::string>();
        if (!checked.empty()) os << " (" << checked << " instances)";
        os << "\n";
      }
    }
  }
}

Json compute_report(const Options& o) {
  const std::string family = o.family.empty() ? "stability" : o.family;
  Report r;
  if (family == "stability") {
    const RankSet s = RankSet::parse(o.ranks);
    if (s.empty()) throw std::invalid_argument("stability report needs --ranks");
    const int k = std::max(o.k, 0);
    const int n_max = o.max_n >= 0 ? o.max_n : std::min(kMaxRecurrenceN, 2 * s.max() + k + 3);
    r = stability_report(s, k, n_max);
  } else {
    require_n(o);
    r = subposet_homology_report(parse_family(family), o.n, o.k);
  }
  Json p;
  p["command"] = "report";
  p["reports"] = Json::array({r.to_json()});
  p["passed"] = r.passed();
  return p;
}

Json compute_sf(const Options& o) {
  if (o.op.empty()) throw std::invalid_argument("--op is required");
  Json p;
  p["command"] = "sf";
  p["op"] = o.op;
  auto need_f = [&] {
    if (o.f.empty()) throw std::invalid_argument("--f is required for --op " + o.op);
    return parse_symfunc(o.f);
  };
  auto need_g = [&] {
    if (o.g.empty()) throw std::invalid_argument("--g is required for --op " + o.op);
    return parse_symfunc(o.g);
  };
  auto emit = [&](const SymFunc& result, Basis fallback) {
    p["result"] = symfunc_to_json(convert(result, output_basis(o, fallback)));
  };
  if (o.op == "convert") {
    const auto f = need_f();
    emit(f, f.basis());
  } else if (o.op == "multiply") {
    const auto f = need_f();
    emit(multiply(f, need_g()), f.basis());
  } else if (o.op == "plethysm") {
    const auto f = need_f();
    const auto g = need_g();
    const int max_degree = o.max_degree >= 0 ? o.max_degree : f.max_degree() * g.max_degree();
    emit(plethysm(f, g, max_degree), f.basis());
  } else if (o.op == "plethysm-H") {
    require_n(o);
    const auto f = need_f();
    emit(plethysm_with_H(f, o.n), f.basis());
  } else if (o.op == "inner") {
    p["value"] = to_string(inner_product(need_f(), need_g()));
  } else if (o.op == "skew") {
    const auto f = need_f();
    emit(skew(f, parse_partition(o.mu)), f.basis());
  } else if (o.op == "sign-twist") {
    const auto f = need_f();
    emit(sign_twist(f), f.basis());
  } else if (o.op == "d-dp1") {
    const auto f = need_f();
    emit(d_dp1(f), f.basis());
  } else if (o.op == "positivity") {
    const Basis b = output_basis(o, Basis::s);
    if (b != Basis::s && b != Basis::h) throw std::invalid_argument("positivity is checked in the h or s basis");
    const auto cert = positivity(need_f(), b);
    p["positive"] = cert.positive;
    p["result"] = symfunc_to_json(cert.coefficients);
    Json v = Json::array();
    for (const auto& lambda : cert.violations) v.push_back(partition_to_json(lambda));
    p["violations"] = v;
  } else if (o.op == "hook") {
    require_n(o);
    if (o.k < 0) throw std::invalid_argument("--k is required for --op hook");
    emit(hook_schur(o.n, o.k), Basis::s);
  } else if (o.op == "dimension") {
    p["value"] = to_string(dimension(need_f()));
  } else if (o.op == "lie") {
    require_n(o);
    emit(lie_top_homology(o.n), Basis::s);
  } else if (o.op == "whitehouse") {
    require_n(o);
    emit(whitehouse(o.n, o.k), Basis::s);
  } else {
    throw std::invalid_argument("unknown --op '" + o.op +
                                "' (convert|multiply|plethysm|plethysm-H|inner|skew|sign-twist|d-dp1|positivity|hook|"
                                "dimension|lie|whitehouse)");
  }
  return p;
}

void render_sf(const Json& p, const std::string& format, std::ostream& os) {
  if (format == "tsv") {
    if (p.contains("value")) {
      os << "value\n" << cell(p["value"]) << "\n";
      return;
    }
    os << "basis\tpartition\tcoeff\n";
    const std::string b = p["result"]["basis"].get<std::string>();
    for (const auto& t : p["result"]["terms"]) {
      os << b << "\t" << partition_from_json(t["partition"]).to_string() << "\t" << cell(t["coeff"]) << "\n";
    }
    return;
  }
  if (p.contains("value")) {
    os << cell(p["value"]) << "\n";
    return;
  }
  if (p.contains("positive")) os << (p["positive"].get<bool>() ? "positive: " : "not positive: ");
  const SymFunc f = symfunc_from_json(p["result"]);
  os << (f.is_zero() ? "0" : f.to_string()) << "\n";
}

// ---------------------------------------------------------------- driver

struct Command {
  std::function<Json(const Options&)> compute;
  std::function<void(const Json&, const std::string&, std::ostream&)> render;
  std::function<std::string(const Options&)> key;
};

std::string canonical_ranks(const std::string& text) { return RankSet::parse(text).to_string(); }

std::map<std::string, Command> command_table() {
  std::map<std::string, Command> t;
  auto module_key = [](const Options& o) {
    return "n=" + std::to_string(o.n) + "|S=" + canonical_ranks(o.ranks) + "|method=" + o.method +
           "|basis=" + o.basis + "|mult=" + o.mult;
  };
  t["alpha"] = {[](const Options& o) { return compute_module(o, false); }, render_module, module_key};
  t["beta"] = {[](const Options& o) { return compute_module(o, true); }, render_module, module_key};
  t["homology"] = {compute_homology, render_homology, [](const Options& o) {
                     return "n=" + std::to_string(o.n) + "|poset=" + ViewSpec::parse(o.poset).to_string();
                   }};
  t["table"] = {compute_table, render_table, [](const Options& o) {
                  return "family=" + (o.family.empty() ? std::string("bS") : o.family) + "|n=" + std::to_string(o.n) +
                         "|max_n=" + std::to_string(o.max_n);
                }};
  for (const std::string which : {"euler", "simsun", "bi"}) {
    t[which] = {[which](const Options& o) { return compute_numbers(o, which); }, render_table,
                [](const Options& o) { return "n=" + std::to_string(o.n) + "|max_n=" + std::to_string(o.max_n); }};
  }
  t["check"] = {compute_check,
                [](const Json& p, const std::string& f, std::ostream& os) { render_report_list(p["reports"], f, os); },
                [](const Options& o) { return "suite=" + o.suite + "|max_n=" + std::to_string(o.max_n); }};
  t["report"] = {compute_report,
                 [](const Json& p, const std::string& f, std::ostream& os) { render_report_list(p["reports"], f, os); },
                 [](const Options& o) {
                   return "family=" + o.family + "|n=" + std::to_string(o.n) + "|k=" + std::to_string(o.k) +
                          "|S=" + canonical_ranks(o.ranks) + "|max_n=" + std::to_string(o.max_n);
                 }};
  t["sf"] = {compute_sf, render_sf, [](const Options& o) {
               return "op=" + o.op + "|f=" + o.f + "|g=" + o.g + "|basis=" + o.basis + "|mu=" + o.mu +
                      "|n=" + std::to_string(o.n) + "|k=" + std::to_string(o.k) +
                      "|max_degree=" + std::to_string(o.max_degree);
             }};
  return t;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "tsv", "pretty"}));
  sub->add_option("--out", o.out, "Write the artifact to this file instead of stdout");
  sub->add_option("--cache-dir", o.cache_dir, "Result cache directory (default: $PARTHOM_CACHE_DIR)");
  sub->add_option("--jobs", o.jobs, "Worker threads for independent jobs")->check(CLI::PositiveNumber);
}

void collect_failures(const Json& payload, Json& out) {
  if (!payload.contains("reports")) return;
  for (const auto& r : payload["reports"]) {
    for (const auto& a : r["assertions"]) {
      if (a.value("informational", false) || a["passed"].get<bool>()) continue;
      Json w;
      w["report"] = r["kind"];
      w["assertion"] = a["name"];
      w["failures"] = a["witness"].contains("failures") ? a["witness"]["failures"] : a["witness"];
      out.push_back(std::move(w));
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"parthom: homology representations of the partition lattice and its subposets", "parthom"};
  app.require_subcommand(1, 1);

  auto* sf = app.add_subcommand("sf", "Symmetric function arithmetic");
  sf->add_option("--op", o.op, "convert|multiply|plethysm|plethysm-H|inner|skew|sign-twist|d-dp1|positivity|hook|"
                               "dimension|lie|whitehouse");
  sf->add_option("--f", o.f, "First operand, e.g. '3*h(2,1) - s(3)'");
  sf->add_option("--g", o.g, "Second operand");
  sf->add_option("--mu", o.mu, "Skewing partition, e.g. 2,1");
  sf->add_option("--basis", o.basis, "Output basis (p|h|e|m|s)");
  sf->add_option("--n", o.n, "Degree");
  sf->add_option("--k", o.k, "Hook leg or Whitehouse parameter");
  sf->add_option("--max-degree", o.max_degree, "Plethysm truncation degree");

  for (const char* name : {"alpha", "beta"}) {
    auto* sub = app.add_subcommand(name, std::string(name) + "_S(n) and its multiplicities");
    sub->add_option("--n", o.n, "Ground set size")->required();
    sub->add_option("--ranks", o.ranks, "Rank set, e.g. 2,4,5 or 1-3 ('-' for empty)");
    sub->add_option("--method", o.method,
                    std::string(name) == "alpha" ? "chains|recurrence" : "inclusion_exclusion|recurrence");
    sub->add_option("--mult", o.mult, "Extra multiplicity columns: trivial,refl,sign,two-row-J,hook-J,4.2.1");
    sub->add_option("--basis", o.basis, "Basis for the characteristic (default s)");
  }

  auto* hom = app.add_subcommand("homology", "Reduced integral homology of a subposet");
  hom->add_option("--n", o.n, "Ground set size")->required();
  hom->add_option("--poset", o.poset, "View: full, ranks:1,3, qnk:k=3, pnk:k=3, le:k=2, ne:k=3, even, even-top:k=2");
  hom->add_option("--boundary-out", o.boundary_out, "Directory for boundary matrices in triplet form");

  auto* table = app.add_subcommand("table", "Tables of multiplicities and numbers");
  table->add_option("--family", o.family, "bS|ai|bi|Ek|euler");
  table->add_option("--n", o.n, "Single n");
  table->add_option("--max-n", o.max_n, "Largest n");

  auto* check = app.add_subcommand("check", "Run a verification suite");
  check->add_option("--suite", o.suite, "Suite name, comma list, or 'all'")->required();
  check->add_option("--max-n", o.max_n, "Largest n checked");

  const std::pair<const char*, const char*> number_commands[] = {
      {"euler", "Euler (zigzag) numbers E_0..E_n"},
      {"simsun", "Simsun numbers a_i(n) by descent count"},
      {"bi", "Even-block multiplicities b_i(n)"},
  };
  for (const auto& [name, about] : number_commands) {
    auto* sub = app.add_subcommand(name, about);
    sub->add_option("--n", o.n, "n");
    sub->add_option("--max-n", o.max_n, "Largest n");
  }

  auto* report = app.add_subcommand("report", "Stability or subposet homology report");
  report->add_option("--family", o.family, "stability|qnk|pnk|le|ne|full|even|even-top");
  report->add_option("--poset", o.family, "Alias of --family");
  report->add_option("--n", o.n, "Ground set size");
  report->add_option("--k", o.k, "Family parameter or skew depth");
  report->add_option("--ranks", o.ranks, "Rank set for stability");
  report->add_option("--max-n", o.max_n, "Largest n for stability");

  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) add_common(sub, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const auto table_of_commands = command_table();
  const Command& cmd = table_of_commands.at(command);

  try {
    std::optional<ResultCache> cache;
    std::string cache_dir = o.cache_dir;
    if (cache_dir.empty()) {
      if (const char* env = std::getenv("PARTHOM_CACHE_DIR")) cache_dir = env;
    }
    if (!cache_dir.empty() && o.boundary_out.empty()) cache.emplace(cache_dir);

    std::optional<Json> payload;
    std::string key;
    if (cache) {
      key = command + "|" + cmd.key(o) + "|schema=" + std::to_string(kCacheSchemaVersion);
      payload = cache->load(key, err);
    }
    if (!payload) {
      payload = cmd.compute(o);
      if (cache) cache->store(key, *payload, err);
    }

    std::ostringstream rendered;
    if (o.format == "json") {
      rendered << payload->dump(2) << "\n";
    } else {
      cmd.render(*payload, o.format, rendered);
    }
    if (o.out.empty()) {
      out << rendered.str();
    } else {
      std::ofstream file(o.out, std::ios::binary);
      if (!file) throw std::invalid_argument("cannot write --out file " + o.out);
      file << rendered.str();
    }

    if (payload->contains("passed") && !(*payload)["passed"].get<bool>()) {
      Json failures = Json::array();
      collect_failures(*payload, failures);
      Json witness;
      witness["status"] = "assertion-failed";
      witness["failures"] = failures;
      err << witness.dump() << "\n";
      return kAssertionFailed;
    }
    return kOk;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const FeasibilityError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    Json witness;
    witness["status"] = "assertion-failed";
    witness["error"] = e.what();
    witness["command"] = args;
    err << witness.dump() << "\n";
    return kAssertionFailed;
  }
}

}  // namespace parthom::cli
