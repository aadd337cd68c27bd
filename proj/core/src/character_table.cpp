#include "parthom/character_table.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace parthom {

namespace {

using Memo = std::map<std::pair<std::vector<int>, std::size_t>, long>;

// Beta-set of a partition padded to `len` beads: b_i = lambda_i + (len - 1 - i).
std::vector<int> beta_set(const std::vector<int>& lambda, std::size_t len) {
  std::vector<int> beads(len);
  for (std::size_t i = 0; i < len; ++i) {
    const int part = i < lambda.size() ? lambda[i] : 0;
    beads[i] = part + static_cast<int>(len - 1 - i);
  }
  return beads;
}

std::vector<int> from_beta_set(std::vector<int> beads) {
  std::sort(beads.begin(), beads.end(), std::greater<>());
  std::vector<int> parts;
  const auto len = beads.size();
  for (std::size_t i = 0; i < len; ++i) {
    const int part = beads[i] - static_cast<int>(len - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return parts;
}

long mn_rec(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t pos, Memo& memo) {
  if (pos == mu.size()) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, pos);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int r = mu[pos];
  const auto beads = beta_set(lambda, lambda.size());
  long total = 0;
  for (std::size_t i = 0; i < beads.size(); ++i) {
    const int target = beads[i] - r;
    if (target < 0) continue;
    if (std::find(beads.begin(), beads.end(), target) != beads.end()) continue;
    // Leg length = beads strictly between target and the moved bead.
    int between = 0;
    for (int b : beads) {
      if (b > target && b < beads[i]) ++between;
    }
    auto moved = beads;
    moved[i] = target;
    const long sub = mn_rec(from_beta_set(std::move(moved)), mu, pos + 1, memo);
    total += (between % 2 == 0) ? sub : -sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

long murnaghan_nakayama(const IntPartition& lambda, const IntPartition& mu) {
  if (lambda.weight() != mu.weight()) throw std::invalid_argument("murnaghan_nakayama: weight mismatch");
  Memo memo;
  return mn_rec(lambda.parts(), mu.parts(), 0, memo);
}

DegreeTables::DegreeTables(int n) : n_(n), partitions_(partitions_of(n)) {
  const auto count = partitions_.size();
  for (std::size_t i = 0; i < count; ++i) index_.emplace(partitions_[i], i);

  z_.reserve(count);
  for (const auto& mu : partitions_) z_.push_back(mu.z());

  // One memo per mu: the residual shapes after stripping mu's leading parts.
  chi_.assign(count, std::vector<long>(count, 0));
  for (std::size_t j = 0; j < count; ++j) {
    Memo memo;
    for (std::size_t i = 0; i < count; ++i) {
      chi_[i][j] = mn_rec(partitions_[i].parts(), partitions_[j].parts(), 0, memo);
    }
  }

  // h_k = sum_{mu |- k} p_mu / z_mu; h_lambda is the product over its parts,
  // memoized on the tail partition.
  using Poly = std::map<IntPartition, Rational>;
  std::map<IntPartition, Poly> memo;
  memo[IntPartition()] = Poly{{IntPartition(), Rational(1)}};
  std::vector<Poly> complete(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) {
    for (const auto& mu : partitions_of(k)) complete[static_cast<std::size_t>(k)][mu] = Rational(1) / Rational(mu.z());
  }
  auto expand = [&](auto&& self, const IntPartition& lambda) -> const Poly& {
    if (auto it = memo.find(lambda); it != memo.end()) return it->second;
    std::vector<int> tail(lambda.parts().begin() + 1, lambda.parts().end());
    const Poly& rest = self(self, IntPartition(std::move(tail)));
    Poly out;
    for (const auto& [a, ca] : complete[static_cast<std::size_t>(lambda[0])]) {
      for (const auto& [b, cb] : rest) out[a.merged(b)] += ca * cb;
    }
    return memo.emplace(lambda, std::move(out)).first->second;
  };
  h_in_p_.assign(count, std::vector<Rational>(count));
  for (std::size_t i = 0; i < count; ++i) {
    for (const auto& [mu, c] : expand(expand, partitions_[i])) h_in_p_[i][index_.at(mu)] = c;
  }
}

std::size_t DegreeTables::index(const IntPartition& lambda) const {
  auto it = index_.find(lambda);
  if (it == index_.end()) throw std::out_of_range("partition " + lambda.to_string() + " is not of degree " + std::to_string(n_));
  return it->second;
}

const Rational& DegreeTables::monomial_in_p(std::size_t lambda, std::size_t mu) const {
  std::call_once(monomial_once_, [this] { build_monomials(); });
  return m_in_p_[lambda][mu];
}

void DegreeTables::build_monomials() const {
  // R[mu][nu] = coefficient of m_nu in p_mu = z_mu * [p_mu]h_nu; nonzero only when
  // nu dominates mu, so increasing lexicographic order is a triangular order.
  // Solve sum_mu c_mu R[mu][nu] = [lambda == nu] for each lambda.
  const auto count = partitions_.size();
  std::vector<std::vector<Rational>> r(count, std::vector<Rational>(count));
  for (std::size_t mu = 0; mu < count; ++mu) {
    for (std::size_t nu = 0; nu < count; ++nu) r[mu][nu] = h_in_p_[nu][mu] * z_[mu];
  }
  m_in_p_.assign(count, std::vector<Rational>(count));
  // partitions_ is decreasing lex, so iterate indices from count-1 down to 0.
  for (std::size_t lambda = 0; lambda < count; ++lambda) {
    auto& c = m_in_p_[lambda];
    for (std::size_t step = 0; step < count; ++step) {
      const std::size_t nu = count - 1 - step;
      Rational rhs = (nu == lambda) ? 1 : 0;
      for (std::size_t mu = nu + 1; mu < count; ++mu) {
        if (sgn(c[mu]) != 0 && sgn(r[mu][nu]) != 0) rhs -= c[mu] * r[mu][nu];
      }
      c[nu] = rhs / r[nu][nu];
    }
  }
}

const DegreeTables& degree_tables(int n) {
  if (n < 0) throw std::invalid_argument("degree_tables: negative degree");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<DegreeTables>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<DegreeTables>(n);
  return *slot;
}

}  // namespace parthom
