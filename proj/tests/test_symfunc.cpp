#include <doctest.h>

#include "parthom/character_table.hpp"
#include "parthom/class_function.hpp"
#include "parthom/json.hpp"
#include "parthom/symfunc.hpp"
#include "support/oracle.hpp"
#include "support/printing.hpp"

using namespace parthom;

namespace {

IntPartition P(std::vector<int> parts) { return IntPartition::from_unsorted(std::move(parts)); }

const Basis kBases[] = {Basis::p, Basis::h, Basis::e, Basis::m, Basis::s};

SymFunc random_symfunc(oracle::Rng& rng, int max_degree) {
  const Basis basis = kBases[rng.uniform(0, 4)];
  SymFunc f(basis);
  const int terms = rng.uniform(1, 4);
  for (int t = 0; t < terms; ++t) {
    const auto parts = partitions_of(rng.uniform(0, max_degree));
    const auto& lambda = parts[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(parts.size()) - 1))];
    f.add_term(lambda, ratio(rng.uniform(-5, 5), rng.uniform(1, 3)));
  }
  return f;
}

// Fixed points of the canonical permutation of each cycle type on the set
// partitions of [n] with block sizes given by `shape`.
Rational fixed_partitions(int n, const std::vector<int>& cycle_type, const std::function<bool(const oracle::Labels&)>& keep) {
  const auto g = oracle::of_cycle_type(cycle_type);
  long count = 0;
  for (const auto& x : oracle::set_partitions(n)) {
    if (keep(x) && oracle::act(g, x) == x) ++count;
  }
  return Rational(count);
}

}  // namespace

TEST_SUITE("symfunc") {
  TEST_CASE("partition enumeration matches the partition counting DP") {
    for (int n = 0; n <= 14; ++n) {
      const auto parts = partitions_of(n);
      CHECK(Integer(static_cast<long>(parts.size())) == oracle::partition_count(n));
      for (std::size_t i = 1; i < parts.size(); ++i) CHECK(CanonicalOrder{}(parts[i - 1], parts[i]));
    }
  }

  TEST_CASE("character table: dimensions and column orthogonality") {
    for (int n = 1; n <= 8; ++n) {
      const auto& t = degree_tables(n);
      for (std::size_t l = 0; l < t.size(); ++l) {
        const auto idx = t.index(IntPartition::column(n));
        CHECK(Integer(t.chi(l, idx)) == oracle::standard_tableaux(t.partitions()[l].parts()));
      }
      for (std::size_t mu = 0; mu < t.size(); ++mu) {
        for (std::size_t nu = 0; nu < t.size(); ++nu) {
          Integer sum = 0;
          for (std::size_t l = 0; l < t.size(); ++l) sum += Integer(t.chi(l, mu)) * t.chi(l, nu);
          CHECK(sum == (mu == nu ? t.z(mu) : Integer(0)));
        }
      }
    }
  }

  TEST_CASE("murnaghan-nakayama small values") {
    CHECK(murnaghan_nakayama(P({2, 1}), P({3})) == -1);
    CHECK(murnaghan_nakayama(P({2, 2}), P({2, 2})) == 2);
    CHECK(murnaghan_nakayama(P({3, 1}), P({2, 1, 1})) == 1);
    CHECK(murnaghan_nakayama(P({1, 1, 1, 1}), P({4})) == -1);
  }

  TEST_CASE("h_2 and e_2 in power sums") {
    const auto h2 = convert(complete(2), Basis::p);
    CHECK(h2.coeff(P({2})) == Rational(1, 2));
    CHECK(h2.coeff(P({1, 1})) == Rational(1, 2));
    const auto e2 = convert(elementary(2), Basis::p);
    CHECK(e2.coeff(P({2})) == Rational(-1, 2));
    CHECK(e2.coeff(P({1, 1})) == Rational(1, 2));
  }

  TEST_CASE("Newton identities n h_n = sum p_i h_{n-i} and n e_n = sum (-1)^{i-1} p_i e_{n-i}") {
    for (int n = 1; n <= 8; ++n) {
      SymFunc h_rhs, e_rhs;
      for (int i = 1; i <= n; ++i) {
        h_rhs += multiply(power_sum(i), complete(n - i));
        e_rhs += Rational(i % 2 == 1 ? 1 : -1) * multiply(power_sum(i), elementary(n - i));
      }
      CHECK(Rational(n) * complete(n) == h_rhs);
      CHECK(Rational(n) * elementary(n) == e_rhs);
    }
  }

  TEST_CASE("Schur functions are orthonormal and dual to nothing else") {
    for (int n = 1; n <= 6; ++n) {
      for (const auto& l : partitions_of(n)) {
        for (const auto& mu : partitions_of(n)) {
          CHECK(inner_product(schur(l), schur(mu)) == Rational(l == mu ? 1 : 0));
          CHECK(inner_product(complete(l), monomial(mu)) == Rational(l == mu ? 1 : 0));
        }
      }
    }
  }

  TEST_CASE("dimension of s_lambda is the hook length count") {
    for (int n = 1; n <= 8; ++n) {
      for (const auto& l : partitions_of(n)) {
        CHECK(dimension(schur(l)) == Rational(oracle::standard_tableaux(l.parts())));
      }
    }
  }

  TEST_CASE("hook_schur agrees with the Schur function of the hook") {
    for (int n = 1; n <= 7; ++n) {
      for (int k = 0; k < n; ++k) CHECK(hook_schur(n, k) == schur(IntPartition::hook(n, k)));
    }
  }

  TEST_CASE("h_2[h_2] = s_4 + s_22") {
    const auto f = convert(plethysm(complete(2), complete(2), 4), Basis::s);
    CHECK(f == schur(P({4})) + schur(P({2, 2})));
    CHECK(f.terms().size() == 2);
  }

  TEST_CASE("h_a[h_b] is the permutation character on set partitions of type (b^a)") {
    for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}}) {
      const int n = a * b;
      const auto chi = ClassFunction::from_symfunc(plethysm(complete(a), complete(b), n), n);
      const std::vector<int> shape(static_cast<std::size_t>(a), b);
      for (const auto& mu : oracle::partitions(n)) {
        const auto expected =
            fixed_partitions(n, mu, [&](const oracle::Labels& x) { return oracle::block_sizes(x) == shape; });
        CHECK_MESSAGE(chi.at(IntPartition(mu)) == expected, "a=", a, " b=", b, " mu=", IntPartition(mu).to_string());
      }
    }
  }

  TEST_CASE("h_k[H] in degree n is the permutation character on set partitions with k blocks") {
    for (int n = 1; n <= 7; ++n) {
      for (int k = 1; k <= std::min(n, 3); ++k) {
        const auto chi = ClassFunction::from_symfunc(plethysm_with_H(complete(k), n), n);
        for (const auto& mu : oracle::partitions(n)) {
          const auto expected = fixed_partitions(n, mu, [&](const oracle::Labels& x) { return oracle::blocks(x) == k; });
          CHECK(chi.at(IntPartition(mu)) == expected);
        }
      }
    }
  }

  TEST_CASE("plethysm by a series with constant term diverges") {
    CHECK_THROWS_AS(plethysm(complete(2), SymFunc::one() + complete(1), 4), PlethysmDivergence);
  }

  TEST_CASE("sign twist conjugates Schur functions") {
    for (int n = 1; n <= 6; ++n) {
      for (const auto& l : partitions_of(n)) CHECK(sign_twist(schur(l)) == schur(l.conjugate()));
      CHECK(sign_twist(complete(n)) == elementary(n));
    }
  }

  TEST_CASE("skewing by s_1 removes one box; d_dp1 agrees") {
    const auto f = schur(P({3, 2, 1}));
    const auto expected = schur(P({2, 2, 1})) + schur(P({3, 1, 1})) + schur(P({3, 2}));
    CHECK(skew(f, P({1})) == expected);
    CHECK(d_dp1(f) == expected);
  }

  TEST_CASE("positivity certificates") {
    const auto f = multiply(complete(2), elementary(2));
    const auto in_s = positivity(f, Basis::s);
    CHECK(in_s.positive);
    CHECK(in_s.coefficients == schur(P({3, 1})) + schur(P({2, 1, 1})));
    const auto in_h = positivity(f, Basis::h);
    CHECK_FALSE(in_h.positive);
    REQUIRE(in_h.violations.size() == 1);
    CHECK(in_h.violations[0] == P({2, 2}));
  }

  TEST_CASE("basis names") {
    for (Basis b : kBases) CHECK(parse_basis(basis_name(b)) == b);
    CHECK_THROWS_AS(parse_basis("q"), std::invalid_argument);
  }

  TEST_CASE("JSON round trip and big integers") {
    const auto f = ratio(-7, 3) * schur(P({3, 1})) + Rational(2) * schur(P({}));
    CHECK(symfunc_from_json(symfunc_to_json(f)) == f);
    CHECK(symfunc_from_json(symfunc_to_json(f)).basis() == Basis::s);
    const Integer big = oracle::factorial(30);
    CHECK(integer_from_json(integer_to_json(big)) == big);
    CHECK(integer_to_json(Integer(42)).is_number());
    CHECK(partition_from_json(partition_to_json(P({4, 2, 2}))) == P({4, 2, 2}));
  }
}

TEST_SUITE("symfunc properties") {
  TEST_CASE("conversion round trips through every basis") {
    oracle::Rng rng(101);
    for (int trial = 0; trial < 60; ++trial) {
      const auto f = random_symfunc(rng, 6);
      for (Basis b : kBases) {
        const auto g = convert(f, b);
        CHECK(g.basis() == b);
        CHECK(convert(g, f.basis()).terms() == f.terms());
      }
    }
  }

  TEST_CASE("product is commutative, bilinear, and respects degree") {
    oracle::Rng rng(202);
    for (int trial = 0; trial < 40; ++trial) {
      const auto f = random_symfunc(rng, 4);
      const auto g = random_symfunc(rng, 4);
      const auto h = random_symfunc(rng, 3);
      CHECK(multiply(f, g) == multiply(g, f));
      CHECK(multiply(f, g + h) == multiply(f, g) + multiply(f, h));
      CHECK(multiply(f, g).max_degree() <= f.max_degree() + g.max_degree());
    }
  }

  TEST_CASE("skewing is adjoint to multiplication by s_mu") {
    oracle::Rng rng(303);
    for (int trial = 0; trial < 40; ++trial) {
      const auto parts = partitions_of(rng.uniform(1, 3));
      const auto mu = parts[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(parts.size()) - 1))];
      const auto g = random_symfunc(rng, 3);
      const auto f = random_symfunc(rng, 6);
      CHECK(inner_product(skew(f, mu), g) == inner_product(f, multiply(schur(mu), g)));
    }
  }

  TEST_CASE("sign twist is an isometric involution") {
    oracle::Rng rng(404);
    for (int trial = 0; trial < 40; ++trial) {
      const auto f = random_symfunc(rng, 6);
      const auto g = random_symfunc(rng, 6);
      CHECK(sign_twist(sign_twist(f)) == f);
      CHECK(inner_product(sign_twist(f), sign_twist(g)) == inner_product(f, g));
    }
  }

  TEST_CASE("class function round trip") {
    oracle::Rng rng(505);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = rng.uniform(1, 6);
      const auto f = random_symfunc(rng, 6).homogeneous_part(n);
      CHECK(ClassFunction::from_symfunc(f, n).frobenius() == f);
    }
  }
}
