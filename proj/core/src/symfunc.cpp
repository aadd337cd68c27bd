#include "parthom/symfunc.hpp"

#include <algorithm>
#include <sstream>

#include "parthom/character_table.hpp"

namespace parthom {

std::string_view basis_name(Basis b) {
  switch (b) {
    case Basis::p: return "p";
    case Basis::h: return "h";
    case Basis::e: return "e";
    case Basis::m: return "m";
    case Basis::s: return "s";
  }
  return "?";
}

Basis parse_basis(std::string_view name) {
  if (name == "p") return Basis::p;
  if (name == "h") return Basis::h;
  if (name == "e") return Basis::e;
  if (name == "m") return Basis::m;
  if (name == "s") return Basis::s;
  throw std::invalid_argument("unknown basis '" + std::string(name) + "'");
}

SymFunc::SymFunc(Basis basis, Terms terms) : basis_(basis), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return sgn(kv.second) == 0; });
}

SymFunc SymFunc::term(Basis basis, IntPartition lambda, Rational coeff) {
  SymFunc f(basis);
  f.add_term(lambda, coeff);
  return f;
}

Rational SymFunc::coeff(const IntPartition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymFunc::add_term(const IntPartition& lambda, const Rational& coeff) {
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

std::optional<int> SymFunc::degree() const {
  if (terms_.empty()) return 0;
  const int d = terms_.begin()->first.weight();
  if (terms_.rbegin()->first.weight() != d) return std::nullopt;
  return d;
}

int SymFunc::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.weight(); }
int SymFunc::min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.weight(); }

SymFunc SymFunc::homogeneous_part(int d) const {
  SymFunc out(basis_);
  for (const auto& [lambda, c] : terms_) {
    if (lambda.weight() == d) out.terms_.emplace_hint(out.terms_.end(), lambda, c);
  }
  return out;
}

SymFunc SymFunc::truncated(int max_degree) const {
  SymFunc out(basis_);
  for (const auto& [lambda, c] : terms_) {
    if (lambda.weight() <= max_degree) out.terms_.emplace_hint(out.terms_.end(), lambda, c);
  }
  return out;
}

SymFunc& SymFunc::operator+=(const SymFunc& other) {
  if (other.basis_ != basis_) return *this += convert(other, basis_);
  for (const auto& [lambda, c] : other.terms_) add_term(lambda, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other) {
  if (other.basis_ != basis_) return *this -= convert(other, basis_);
  for (const auto& [lambda, c] : other.terms_) add_term(lambda, -c);
  return *this;
}

SymFunc& SymFunc::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else {
    for (auto& [lambda, v] : terms_) v *= c;
  }
  return *this;
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) { return multiply(a, b); }

bool operator==(const SymFunc& a, const SymFunc& b) {
  if (a.basis_ == b.basis_) return a.terms_ == b.terms_;
  return convert(a, Basis::p).terms_ == convert(b, Basis::p).terms_;
}

std::string SymFunc::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lambda, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || lambda.empty()) {
      os << mag.get_str();
      if (!lambda.empty()) os << "*";
    }
    if (!lambda.empty()) os << basis_name(basis_) << lambda.to_string();
  }
  return os.str();
}

SymFunc power_sum(int k) { return SymFunc::term(Basis::p, IntPartition::row(k)); }
SymFunc power_sum(const IntPartition& lambda) { return SymFunc::term(Basis::p, lambda); }
SymFunc complete(int k) { return SymFunc::term(Basis::h, IntPartition::row(k)); }
SymFunc complete(const IntPartition& lambda) { return SymFunc::term(Basis::h, lambda); }
SymFunc elementary(int k) { return SymFunc::term(Basis::e, IntPartition::row(k)); }
SymFunc elementary(const IntPartition& lambda) { return SymFunc::term(Basis::e, lambda); }
SymFunc monomial(const IntPartition& lambda) { return SymFunc::term(Basis::m, lambda); }
SymFunc schur(const IntPartition& lambda) { return SymFunc::term(Basis::s, lambda); }

namespace {

// Dense coefficient vector of the degree-d part, indexed like degree_tables(d).
using Dense = std::vector<Rational>;

std::map<int, Dense> split_by_degree(const SymFunc& f) {
  std::map<int, Dense> out;
  for (const auto& [lambda, c] : f.terms()) {
    const int d = lambda.weight();
    const auto& tables = degree_tables(d);
    auto& v = out[d];
    if (v.empty()) v.assign(tables.size(), Rational(0));
    v[tables.index(lambda)] = c;
  }
  return out;
}

Dense to_p_dense(const Dense& v, Basis from, const DegreeTables& t) {
  const auto count = t.size();
  if (from == Basis::p) return v;
  Dense out(count, Rational(0));
  for (std::size_t lambda = 0; lambda < count; ++lambda) {
    if (sgn(v[lambda]) == 0) continue;
    for (std::size_t mu = 0; mu < count; ++mu) {
      switch (from) {
        case Basis::h: out[mu] += v[lambda] * t.complete_in_p(lambda, mu); break;
        case Basis::e:
          out[mu] += v[lambda] * t.complete_in_p(lambda, mu) * t.partitions()[mu].sign();
          break;
        case Basis::m: out[mu] += v[lambda] * t.monomial_in_p(lambda, mu); break;
        case Basis::s:
          if (t.chi(lambda, mu) != 0) out[mu] += v[lambda] * Rational(t.chi(lambda, mu)) / Rational(t.z(mu));
          break;
        case Basis::p: break;
      }
    }
  }
  for (auto& x : out) x.canonicalize();
  return out;
}

Dense from_p_dense(const Dense& c, Basis to, const DegreeTables& t) {
  const auto count = t.size();
  if (to == Basis::p) return c;
  Dense out(count, Rational(0));
  // Pairing against the dual basis: <p_mu, x> needs z_mu.
  Dense cz(count);
  for (std::size_t mu = 0; mu < count; ++mu) cz[mu] = c[mu] * t.z(mu);
  for (std::size_t lambda = 0; lambda < count; ++lambda) {
    Rational acc = 0;
    for (std::size_t mu = 0; mu < count; ++mu) {
      if (sgn(c[mu]) == 0) continue;
      switch (to) {
        case Basis::s: acc += c[mu] * t.chi(lambda, mu); break;
        case Basis::m: acc += cz[mu] * t.complete_in_p(lambda, mu); break;
        case Basis::h: acc += cz[mu] * t.monomial_in_p(lambda, mu); break;
        case Basis::e: acc += cz[mu] * t.monomial_in_p(lambda, mu) * t.partitions()[mu].sign(); break;
        case Basis::p: break;
      }
    }
    acc.canonicalize();
    out[lambda] = acc;
  }
  return out;
}

SymFunc from_dense(Basis b, const std::map<int, Dense>& parts) {
  SymFunc::Terms terms;
  for (const auto& [d, v] : parts) {
    const auto& t = degree_tables(d);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (sgn(v[i]) != 0) terms.emplace(t.partitions()[i], v[i]);
    }
  }
  return SymFunc(b, std::move(terms));
}

}  // namespace

SymFunc convert(const SymFunc& f, Basis target) {
  if (f.basis() == target) return f;
  std::map<int, Dense> parts = split_by_degree(f);
  for (auto& [d, v] : parts) {
    const auto& t = degree_tables(d);
    v = from_p_dense(to_p_dense(v, f.basis(), t), target, t);
  }
  return from_dense(target, parts);
}

SymFunc multiply(const SymFunc& f, const SymFunc& g, int max_degree) {
  const SymFunc a = convert(f, Basis::p);
  const SymFunc b = convert(g, Basis::p);
  SymFunc::Terms out;
  for (const auto& [la, ca] : a.terms()) {
    if (la.weight() > max_degree) break;
    for (const auto& [lb, cb] : b.terms()) {
      if (la.weight() + lb.weight() > max_degree) break;
      out[la.merged(lb)] += ca * cb;
    }
  }
  return SymFunc(Basis::p, std::move(out));
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
  return multiply(f, g, f.max_degree() + g.max_degree());
}

SymFunc plethysm(const SymFunc& f, const SymFunc& g, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("plethysm: max_degree must be nonnegative");
  const SymFunc fp = convert(f, Basis::p);
  const SymFunc gp = convert(g, Basis::p);
  if (sgn(gp.coeff(IntPartition())) != 0) {
    throw PlethysmDivergence("plethysm: inner function has a nonzero constant term");
  }
  const int low = gp.is_zero() ? max_degree + 1 : gp.min_degree();

  // p_k[g]: scale every index of g by k.
  std::map<int, SymFunc> pk;
  auto power_of = [&](int k) -> const SymFunc& {
    auto it = pk.find(k);
    if (it != pk.end()) return it->second;
    SymFunc::Terms t;
    for (const auto& [mu, c] : gp.terms()) {
      if (mu.weight() * k > max_degree) break;
      t.emplace(mu.scaled(k), c);
    }
    return pk.emplace(k, SymFunc(Basis::p, std::move(t))).first->second;
  };

  // p_lambda[g] = p_{lambda_1}[g] * p_{tail}[g], memoized on the tail.
  std::map<IntPartition, SymFunc> memo;
  memo.emplace(IntPartition(), SymFunc::one());
  auto expand = [&](auto&& self, const IntPartition& lambda) -> const SymFunc& {
    if (auto it = memo.find(lambda); it != memo.end()) return it->second;
    std::vector<int> tail(lambda.parts().begin() + 1, lambda.parts().end());
    const SymFunc& rest = self(self, IntPartition(std::move(tail)));
    SymFunc prod = multiply(power_of(lambda[0]), rest, max_degree);
    return memo.emplace(lambda, std::move(prod)).first->second;
  };

  SymFunc out(Basis::p);
  for (const auto& [lambda, c] : fp.terms()) {
    // Each p_k[g] has degree >= k*low, so p_lambda[g] starts at |lambda|*low.
    if (lambda.weight() > 0 && static_cast<long>(lambda.weight()) * low > max_degree) continue;
    out += expand(expand, lambda) * c;
  }
  return out;
}

SymFunc plethysm_with_H(const SymFunc& f, int n) {
  SymFunc sum_h(Basis::h);
  for (int i = 1; i <= n; ++i) sum_h.add_term(IntPartition::row(i), 1);
  return plethysm(f, sum_h, n).homogeneous_part(n);
}

Rational inner_product(const SymFunc& f, const SymFunc& g) {
  const SymFunc a = convert(f, Basis::p);
  const SymFunc b = convert(g, Basis::p);
  Rational acc = 0;
  for (const auto& [lambda, c] : a.terms()) {
    auto it = b.terms().find(lambda);
    if (it != b.terms().end()) acc += c * it->second * lambda.z();
  }
  return acc;
}

namespace {

// p_nu^perp p_lambda = [nu in lambda] * z_lambda / z_{lambda - nu} * p_{lambda - nu}.
SymFunc p_perp(const IntPartition& nu, const SymFunc& fp) {
  SymFunc out(Basis::p);
  for (const auto& [lambda, c] : fp.terms()) {
    auto rest = lambda.without(nu);
    if (!rest) continue;
    out.add_term(*rest, c * ratio(lambda.z(), rest->z()));
  }
  return out;
}

}  // namespace

SymFunc skew(const SymFunc& f, const IntPartition& mu) {
  // s_mu^perp = sum_nu chi^mu(nu)/z_nu p_nu^perp.
  const SymFunc fp = convert(f, Basis::p);
  const auto& t = degree_tables(mu.weight());
  const std::size_t row = t.index(mu);
  SymFunc out(Basis::p);
  for (std::size_t j = 0; j < t.size(); ++j) {
    const long chi = t.chi(row, j);
    if (chi == 0) continue;
    out += p_perp(t.partitions()[j], fp) * ratio(Integer(chi), t.z(j));
  }
  return out;
}

SymFunc sign_twist(const SymFunc& f) {
  SymFunc::Terms out;
  switch (f.basis()) {
    case Basis::h:
    case Basis::e:
      return SymFunc(f.basis() == Basis::h ? Basis::e : Basis::h, f.terms());
    case Basis::s:
      for (const auto& [lambda, c] : f.terms()) out.emplace(lambda.conjugate(), c);
      return SymFunc(Basis::s, std::move(out));
    case Basis::p:
      for (const auto& [lambda, c] : f.terms()) out.emplace(lambda, c * lambda.sign());
      return SymFunc(Basis::p, std::move(out));
    case Basis::m:
      break;
  }
  return sign_twist(convert(f, Basis::p));
}

SymFunc d_dp1(const SymFunc& f) {
  const SymFunc fp = convert(f, Basis::p);
  SymFunc out(Basis::p);
  const IntPartition one{1};
  for (const auto& [lambda, c] : fp.terms()) {
    const int m1 = lambda.multiplicity(1);
    if (m1 == 0) continue;
    out.add_term(*lambda.without(one), c * m1);
  }
  return out;
}

PositivityCertificate positivity(const SymFunc& f, Basis basis) {
  if (basis != Basis::h && basis != Basis::s) throw std::invalid_argument("positivity: basis must be h or s");
  PositivityCertificate cert;
  cert.basis = basis;
  cert.coefficients = convert(f, basis);
  for (const auto& [lambda, c] : cert.coefficients.terms()) {
    if (sgn(c) < 0 || !is_integer(c)) cert.violations.push_back(lambda);
  }
  cert.positive = cert.violations.empty();
  return cert;
}

SymFunc hook_schur(int n, int k) {
  if (n < 1 || k < 0 || k > n - 1) throw std::invalid_argument("hook_schur: need 0 <= k <= n-1");
  SymFunc out(Basis::p);
  for (int i = 0; i <= k; ++i) {
    SymFunc term = multiply(complete(n - i), elementary(i));
    out += ((k - i) % 2 == 0) ? term : -term;
  }
  return out;
}

Rational dimension(const SymFunc& f) {
  const SymFunc fp = convert(f, Basis::p);
  Rational acc = 0;
  for (const auto& [lambda, c] : fp.terms()) {
    if (lambda.multiplicity(1) == lambda.length()) acc += c * factorial(static_cast<unsigned>(lambda.weight()));
  }
  return acc;
}

}  // namespace parthom
