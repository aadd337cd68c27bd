#include "parthom/reps.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

#include "parthom/chains.hpp"
#include "parthom/errors.hpp"
#include "parthom/numbers.hpp"
#include "parthom/poset_view.hpp"
#include "parthom/set_partition.hpp"

namespace parthom {

RankSet::RankSet(std::vector<int> ranks) : ranks_(std::move(ranks)) {
  std::sort(ranks_.begin(), ranks_.end());
  ranks_.erase(std::unique(ranks_.begin(), ranks_.end()), ranks_.end());
  if (!ranks_.empty() && ranks_.front() < 1) {
    throw std::invalid_argument("rank " + std::to_string(ranks_.front()) + " is not positive");
  }
}

RankSet RankSet::parse(std::string_view text) {
  if (text.empty() || text == "-") return RankSet();
  try {
    return RankSet(parse_int_list(text));
  } catch (const InvalidView& e) {
    throw std::invalid_argument(std::string("bad rank set: ") + e.what());
  }
}

RankSet RankSet::interval(int a, int b) {
  std::vector<int> r;
  for (int s = a; s <= b; ++s) r.push_back(s);
  return RankSet(std::move(r));
}

bool RankSet::contains(int s) const { return std::binary_search(ranks_.begin(), ranks_.end(), s); }

bool RankSet::fits(int n) const { return ranks_.empty() || (ranks_.front() >= 1 && ranks_.back() <= n - 2); }

void RankSet::validate(int n) const {
  if (!fits(n)) {
    throw std::invalid_argument("rank set {" + to_string() + "} is not contained in [1, " + std::to_string(n - 2) +
                                "]");
  }
}

RankSet RankSet::shifted(int d) const {
  std::vector<int> r;
  r.reserve(ranks_.size());
  for (int s : ranks_) r.push_back(s + d);
  return RankSet(std::move(r));
}

RankSet RankSet::peeled() const {
  std::vector<int> r;
  for (std::size_t i = 1; i < ranks_.size(); ++i) r.push_back(ranks_[i] - ranks_[0]);
  return RankSet(std::move(r));
}

RankSet RankSet::without_min() const {
  return RankSet(std::vector<int>(ranks_.begin() + (ranks_.empty() ? 0 : 1), ranks_.end()));
}

RankSet RankSet::with(int s) const {
  auto r = ranks_;
  r.push_back(s);
  return RankSet(std::move(r));
}

std::vector<RankSet> RankSet::subsets() const {
  std::vector<RankSet> out;
  const std::size_t m = ranks_.size();
  out.reserve(std::size_t{1} << m);
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<int> r;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (std::size_t{1} << i)) r.push_back(ranks_[i]);
    }
    out.emplace_back(std::move(r));
  }
  return out;
}

bool RankSet::is_initial_interval() const {
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    if (ranks_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

std::string RankSet::to_string() const {
  if (ranks_.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(ranks_[i]);
  }
  return out;
}

std::vector<RankSet> all_rank_sets(int n) { return RankSet::interval(1, n - 2).subsets(); }

AlphaMethod parse_alpha_method(std::string_view name) {
  if (name == "chains") return AlphaMethod::chains;
  if (name == "recurrence") return AlphaMethod::recurrence;
  throw std::invalid_argument("unknown alpha method '" + std::string(name) + "' (chains|recurrence)");
}

BetaMethod parse_beta_method(std::string_view name) {
  if (name == "inclusion_exclusion" || name == "ie") return BetaMethod::inclusion_exclusion;
  if (name == "recurrence") return BetaMethod::recurrence;
  throw std::invalid_argument("unknown beta method '" + std::string(name) + "' (inclusion_exclusion|recurrence)");
}

std::string_view method_name(AlphaMethod m) { return m == AlphaMethod::chains ? "chains" : "recurrence"; }
std::string_view method_name(BetaMethod m) {
  return m == BetaMethod::inclusion_exclusion ? "inclusion_exclusion" : "recurrence";
}

namespace {

using Key = std::tuple<int, std::vector<int>, int>;

class ResultCache {
 public:
  std::optional<SymFunc> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void insert(const Key& key, const SymFunc& value) {
    std::unique_lock lock(mutex_);
    map_.emplace(key, value);
  }
  void clear() {
    std::unique_lock lock(mutex_);
    map_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, SymFunc> map_;
};

ResultCache& alpha_cache() {
  static ResultCache c;
  return c;
}
ResultCache& beta_cache() {
  static ResultCache c;
  return c;
}

void check_bounds(int n, const RankSet& s, int bound, std::string_view what) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  s.validate(n);
  if (n > bound) {
    throw FeasibilityError(std::string(what) + " is limited to n <= " + std::to_string(bound) + " (asked for n = " +
                           std::to_string(n) + ")");
  }
}

SymFunc h_in_p(int n) { return convert(complete(n), Basis::p); }

}  // namespace

void clear_module_caches() {
  alpha_cache().clear();
  beta_cache().clear();
}

ClassFunction alpha_character(int n, const RankSet& s) {
  check_bounds(n, s, kMaxChainsN, "the chains method");
  ClassFunction chi(n);
  if (n < 2) {
    chi.set(IntPartition::column(n), 1);
    return chi;
  }
  const PosetView view(n, ViewSpec::rank_selected(s.ranks()));
  for (const auto& lambda : partitions_of(n)) chi.set(lambda, Rational(fixed_chain_count(view, lambda)));
  return chi;
}

SymFunc alpha(int n, const RankSet& s, AlphaMethod method) {
  check_bounds(n, s, method == AlphaMethod::chains ? kMaxChainsN : kMaxRecurrenceN, "alpha");
  const Key key{n, s.ranks(), static_cast<int>(method)};
  if (auto hit = alpha_cache().find(key)) return *hit;
  SymFunc result;
  if (method == AlphaMethod::chains) {
    result = alpha_character(n, s).frobenius();
  } else if (s.empty()) {
    result = h_in_p(n);
  } else {
    result = plethysm_with_H(alpha(n - s.min(), s.peeled(), method), n);
  }
  alpha_cache().insert(key, result);
  return result;
}

SymFunc beta(int n, const RankSet& s, BetaMethod method) {
  check_bounds(n, s, method == BetaMethod::inclusion_exclusion ? kMaxChainsN : kMaxRecurrenceN, "beta");
  const Key key{n, s.ranks(), static_cast<int>(method)};
  if (auto hit = beta_cache().find(key)) return *hit;
  SymFunc result(Basis::p);
  if (method == BetaMethod::inclusion_exclusion) {
    for (const auto& t : s.subsets()) {
      const auto a = alpha(n, t, AlphaMethod::chains);
      if ((s.size() - t.size()) % 2 == 0) {
        result += a;
      } else {
        result -= a;
      }
    }
  } else if (s.empty()) {
    result = h_in_p(n);
  } else {
    result = plethysm_with_H(beta(n - s.min(), s.peeled(), method), n) - beta(n, s.without_min(), method);
  }
  const auto cert = positivity(result, Basis::s);
  if (!cert.positive) {
    throw std::logic_error("beta(" + std::to_string(n) + ", {" + s.to_string() + "}) via " +
                           std::string(method_name(method)) + " is not Schur-positive: " +
                           cert.coefficients.to_string());
  }
  beta_cache().insert(key, result);
  return result;
}

namespace {

int number_theoretic_mobius(int d) {
  int result = 1;
  for (int p = 2; p * p <= d; ++p) {
    if (d % p == 0) {
      d /= p;
      if (d % p == 0) return 0;
      result = -result;
    }
  }
  if (d > 1) result = -result;
  return result;
}

}  // namespace

SymFunc lie_top_homology(int n) {
  if (n < 1) throw std::invalid_argument("lie_top_homology needs n >= 1");
  SymFunc lie(Basis::p);
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = number_theoretic_mobius(d);
    if (mu == 0) continue;
    lie.add_term(IntPartition(std::vector<int>(static_cast<std::size_t>(n / d), d)), ratio(mu, n));
  }
  return sign_twist(lie);
}

SymFunc whitehouse(int n, int k) {
  if (k < 2 || k > n - 1) {
    throw std::invalid_argument("whitehouse needs 2 <= k <= n-1 (got n = " + std::to_string(n) +
                                ", k = " + std::to_string(k) + ")");
  }
  return multiply(lie_top_homology(k), power_sum(IntPartition::column(n - k))) - lie_top_homology(n);
}

Integer schur_multiplicity(const SymFunc& f, const IntPartition& lambda) {
  const Rational c = inner_product(f, schur(lambda));
  if (!is_integer(c)) throw std::logic_error("multiplicity of s" + lambda.to_string() + " is " + to_string(c));
  return c.get_num();
}

namespace {

Integer integral(const Rational& c, std::string_view what) {
  if (!is_integer(c)) throw std::logic_error(std::string(what) + " is not an integer: " + to_string(c));
  return c.get_num();
}

}  // namespace

Multiplicities multiplicities(int n, const RankSet& s, BetaMethod method) {
  const auto a = alpha(n, s, method == BetaMethod::inclusion_exclusion ? AlphaMethod::chains : AlphaMethod::recurrence);
  const auto b = beta(n, s, method);
  const auto trivial = complete(n);
  const auto restricted = n >= 2 ? complete(IntPartition::from_unsorted({n - 1, 1})) : complete(n);
  return {integral(inner_product(a, trivial), "a_S"), integral(inner_product(a, restricted), "a'_S"),
          integral(inner_product(b, trivial), "b_S"), integral(inner_product(b, restricted), "b'_S")};
}

RankSet even_ranks(int n) { return even_top_ranks(n, n - 1); }

RankSet even_top_ranks(int n, int k) {
  if (n < 2 || k < 1 || k > n - 1) {
    throw std::invalid_argument("even-block ranks need n >= 2 and 1 <= k <= n-1");
  }
  std::vector<int> r;
  for (int s = 2 * n - 2 * k; s <= 2 * n - 2; s += 2) r.push_back(s);
  return RankSet(std::move(r));
}

namespace {

IntPartition twos_and_ones(int twos, int ones) {
  std::vector<int> parts(static_cast<std::size_t>(twos), 2);
  parts.insert(parts.end(), static_cast<std::size_t>(ones), 1);
  return IntPartition(std::move(parts));
}

}  // namespace

SymFunc r_even(int n) {
  if (n < 2) throw std::invalid_argument("r_even needs n >= 2");
  SymFunc r(Basis::h);
  for (int i = 2; i <= n; ++i) r.add_term(twos_and_ones(i, 2 * n - 2 * i), Rational(bi(i, n)));
  if (2 * n <= kMaxRecurrenceN) {
    const auto b = beta(2 * n, even_ranks(n));
    if (!(b == r)) {
      throw std::logic_error("R_" + std::to_string(2 * n) + " from b_i(n) differs from the homology of the even-block poset");
    }
  }
  return r;
}

SymFunc r_even_e2_form(int n) {
  if (n < 2) throw std::invalid_argument("r_even_e2_form needs n >= 2");
  SymFunc r(Basis::p);
  for (int i = 2; i <= n; ++i) {
    const Integer c = even_refinement(i, n);
    if (c == 0) continue;
    r += Rational(c) * multiply(complete(twos_and_ones(i, 0)), elementary(twos_and_ones(n - i, 0)));
  }
  return r;
}

}  // namespace parthom
