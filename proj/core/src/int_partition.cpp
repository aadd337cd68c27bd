#include "parthom/int_partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace parthom {

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  Integer n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

IntPartition::IntPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    weight_ += parts_[i];
  }
}

IntPartition::IntPartition(std::initializer_list<int> parts) : IntPartition(std::vector<int>(parts)) {}

IntPartition IntPartition::from_unsorted(std::vector<int> parts) {
  if (std::any_of(parts.begin(), parts.end(), [](int p) { return p < 0; })) {
    throw std::invalid_argument("partition parts must be nonnegative");
  }
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return IntPartition(std::move(parts));
}

IntPartition IntPartition::row(int n) { return n == 0 ? IntPartition() : IntPartition({n}); }

IntPartition IntPartition::column(int n) { return IntPartition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

IntPartition IntPartition::hook(int n, int k) {
  if (k < 0 || k >= n) throw std::invalid_argument("hook (n-k,1^k) needs 0 <= k < n");
  std::vector<int> parts{n - k};
  parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
  return IntPartition(std::move(parts));
}

int IntPartition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

IntPartition IntPartition::conjugate() const {
  std::vector<int> conj;
  if (!parts_.empty()) {
    conj.assign(static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_) {
      for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
    }
  }
  return IntPartition(std::move(conj));
}

IntPartition IntPartition::scaled(int k) const {
  std::vector<int> out(parts_);
  for (int& p : out) p *= k;
  return IntPartition(std::move(out));
}

IntPartition IntPartition::merged(const IntPartition& other) const {
  std::vector<int> out;
  out.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(), std::back_inserter(out),
             std::greater<>());
  return IntPartition(std::move(out));
}

std::optional<IntPartition> IntPartition::without(const IntPartition& sub) const {
  std::vector<int> out;
  auto it = sub.parts_.begin();
  for (int p : parts_) {
    if (it != sub.parts_.end() && *it == p) {
      ++it;
    } else if (it != sub.parts_.end() && *it > p) {
      return std::nullopt;
    } else {
      out.push_back(p);
    }
  }
  if (it != sub.parts_.end()) return std::nullopt;
  return IntPartition(std::move(out));
}

Integer IntPartition::z() const {
  Integer r = 1;
  std::size_t i = 0;
  while (i < parts_.size()) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    const auto m = static_cast<unsigned>(j - i);
    Integer pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(parts_[i]), m);
    r *= pk * factorial(m);
    i = j;
  }
  return r;
}

std::string IntPartition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<IntPartition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<IntPartition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
  std::vector<IntPartition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

std::size_t IntPartitionHash::operator()(const IntPartition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int x : p.parts()) {
    h ^= static_cast<std::size_t>(x);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace parthom
