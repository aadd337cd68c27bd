#include <doctest.h>

#include "parthom/chains.hpp"
#include "parthom/errors.hpp"
#include "parthom/homology.hpp"
#include "parthom/numbers.hpp"
#include "parthom/reports.hpp"
#include "parthom/reps.hpp"
#include "support/oracle.hpp"
#include "support/printing.hpp"

using namespace parthom;

namespace {

SymFunc h_twos_ones(int twos, int ones) {
  std::vector<int> parts(static_cast<std::size_t>(twos), 2);
  parts.insert(parts.end(), static_cast<std::size_t>(ones), 1);
  return complete(IntPartition(parts));
}

const Assertion* find_assertion(const Report& r, std::string_view prefix) {
  for (const auto& a : r.assertions) {
    if (a.name.rfind(prefix, 0) == 0) return &a;
  }
  return nullptr;
}

}  // namespace

TEST_SUITE("reps") {
  TEST_CASE("rank sets") {
    const auto s = RankSet::parse("5,1-3,2");
    CHECK(s.ranks() == std::vector<int>{1, 2, 3, 5});
    CHECK(s.to_string() == "1,2,3,5");
    CHECK(RankSet::parse("-").empty());
    CHECK(RankSet::parse("").to_string() == "-");
    CHECK(RankSet::interval(2, 4) == RankSet({2, 3, 4}));
    CHECK(RankSet::interval(3, 2).empty());
    CHECK(s.peeled() == RankSet({1, 2, 4}));
    CHECK(s.without_min() == RankSet({2, 3, 5}));
    CHECK(s.shifted(1) == RankSet({2, 3, 4, 6}));
    CHECK(RankSet({2}).with(1) == RankSet({1, 2}));
    CHECK(RankSet({1, 2, 3}).is_initial_interval());
    CHECK(RankSet().is_initial_interval());
    CHECK_FALSE(RankSet({1, 3}).is_initial_interval());
    CHECK(RankSet({1, 3}).subsets().size() == 4);
    CHECK(s.fits(7));
    CHECK_FALSE(s.fits(6));
    CHECK_THROWS_AS(s.validate(6), std::invalid_argument);
    CHECK_THROWS_AS(RankSet({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(RankSet::parse("1,x"), std::invalid_argument);
    CHECK(all_rank_sets(6).size() == 16);
  }

  TEST_CASE("Euler numbers count alternating permutations") {
    for (int n = 0; n <= 9; ++n) CHECK(euler_number(n) == oracle::alternating_count(n));
  }

  TEST_CASE("simsun numbers count simsun permutations by descents") {
    for (int n = 3; n <= 10; ++n) {
      const auto counts = oracle::simsun_by_descents(n - 2);
      Integer total = 0;
      for (int i = 1; 2 * i <= n; ++i) {
        CHECK(simsun(i, n) == counts[static_cast<std::size_t>(i - 1)]);
        total += simsun(i, n);
      }
      CHECK(total == euler_number(n - 1));
      CHECK(simsun(n / 2 + 1, n) == 0);
    }
  }

  TEST_CASE("b_i(n): boundary values, positivity, and the power-of-two refinement") {
    for (int n = 2; n <= 12; ++n) {
      CHECK(bi(2, n) == 1);
      CHECK(bi(1, n) == 0);
      CHECK(bi(n + 1, n) == 0);
      Integer weighted = 0;
      for (int i = 2; i <= n; ++i) {
        CHECK(bi(i, n) > 0);
        weighted += bi(i, n) * (Integer(1) << (n - i));
      }
      CHECK(weighted == euler_number(2 * n - 1) / (Integer(1) << (n - 1)));
      CHECK(weighted == simsun(n, 2 * n));
    }
  }

  TEST_CASE("E_k(n) matches its defining sum and is the trivial multiplicity at k = n") {
    for (int n = 2; n <= 6; ++n) {
      for (int k = 2; k <= n; ++k) {
        Integer sum = 0;
        for (int i = 2; i <= k; ++i) sum += bi(i, n) * oracle::binomial(n - i, k - i);
        CHECK(even_refinement(k, n) == sum);
        CHECK(even_refinement(k, n) >= 0);
      }
      CHECK(even_refinement(n, n) == schur_multiplicity(r_even(n), IntPartition::row(2 * n)));
    }
  }

  TEST_CASE("trivial multiplicities agree with orbit counting on chains") {
    for (int n = 3; n <= 5; ++n) {
      for (const auto& s : all_rank_sets(n)) {
        const auto expected = oracle::multiplicities(n, s.ranks());
        for (BetaMethod method : {BetaMethod::recurrence, BetaMethod::inclusion_exclusion}) {
          const auto m = multiplicities(n, s, method);
          CHECK_MESSAGE(m.a == expected.a, "n=", n, " S=", s.to_string());
          CHECK(m.a_prime == expected.a_prime);
          CHECK(m.b == expected.b);
          CHECK(m.b_prime == expected.b_prime);
        }
      }
    }
    for (const auto& s : {RankSet({2, 3}), RankSet({1, 3}), RankSet({2, 4})}) {
      const auto expected = oracle::multiplicities(6, s.ranks());
      const auto m = multiplicities(6, s);
      CHECK(m.b == expected.b);
      CHECK(m.b_prime == expected.b_prime);
    }
  }

  TEST_CASE("published table entry for S = {2,4,5}, n = 7") {
    const auto m = multiplicities(7, RankSet({2, 4, 5}));
    CHECK(m.b == 5);
    CHECK(m.b_prime == 23);
  }

  TEST_CASE("chains and recurrence agree") {
    for (int n = 2; n <= 6; ++n) {
      for (const auto& s : all_rank_sets(n)) {
        CHECK(alpha(n, s, AlphaMethod::chains) == alpha(n, s, AlphaMethod::recurrence));
        CHECK(beta(n, s, BetaMethod::inclusion_exclusion) == beta(n, s, BetaMethod::recurrence));
        CHECK(ClassFunction::from_symfunc(alpha(n, s), n) == alpha_character(n, s));
      }
    }
  }

  TEST_CASE("top homology of the full lattice") {
    for (int n = 3; n <= 7; ++n) {
      const auto pi = lie_top_homology(n);
      CHECK(dimension(pi) == Rational(oracle::factorial(n - 1)));
      CHECK(beta(n, RankSet::interval(1, n - 2)) == pi);
      // Restriction to S_{n-1} is the regular representation.
      const auto restricted = convert(d_dp1(pi), Basis::s);
      for (const auto& lambda : partitions_of(n - 1)) {
        CHECK(restricted.coeff(lambda) == Rational(oracle::standard_tableaux(lambda.parts())));
      }
    }
    for (int n = 3; n <= 6; ++n) {
      CHECK(concentrated_character(PosetView(n, ViewSpec::full())).character.frobenius() == lie_top_homology(n));
    }
  }

  TEST_CASE("Whitehouse module dimensions") {
    for (int n = 3; n <= 8; ++n) {
      for (int k = 2; k <= n - 1; ++k) {
        const Integer expected = oracle::factorial(n) / k - oracle::factorial(n - 1);
        CHECK(dimension(whitehouse(n, k)) == Rational(expected));
      }
    }
    CHECK_THROWS_AS(whitehouse(5, 5), std::invalid_argument);
  }

  TEST_CASE("maximal chains decompose into h_2^i h_1^(n-2i) orbits") {
    for (int n = 4; n <= 8; ++n) {
      SymFunc expected(Basis::h);
      for (int i = 0; 2 * i <= n; ++i) expected += Rational(simsun(i, n)) * h_twos_ones(i, n - 2 * i);
      CHECK(alpha(n, RankSet::interval(1, n - 2)) == expected);
    }
  }

  TEST_CASE("even-block module") {
    for (int n = 2; n <= 4; ++n) {
      const auto r = r_even(n);
      CHECK(r == beta(2 * n, even_ranks(n)));
      CHECK(ClassFunction::from_symfunc(r, 2 * n).vanishes_off_involutions());
    }
    for (int n = 2; n <= 6; ++n) CHECK(r_even_e2_form(n) == r_even(n));
    CHECK(even_ranks(3) == RankSet({2, 4}));
    CHECK(even_top_ranks(4, 2) == RankSet({4, 6}));
    CHECK_THROWS_AS(even_top_ranks(4, 4), std::invalid_argument);
  }

  TEST_CASE("feasibility bounds and bad input") {
    CHECK_THROWS_AS(beta(kMaxRecurrenceN + 1, RankSet({1})), FeasibilityError);
    CHECK_THROWS_AS(alpha(kMaxChainsN + 1, RankSet({1}), AlphaMethod::chains), FeasibilityError);
    CHECK_THROWS_AS(beta(5, RankSet({4})), std::invalid_argument);
    CHECK_THROWS_AS(parse_beta_method("magic"), std::invalid_argument);
    CHECK(parse_beta_method("ie") == BetaMethod::inclusion_exclusion);
    CHECK(parse_alpha_method(method_name(AlphaMethod::chains)) == AlphaMethod::chains);
  }
}

TEST_SUITE("reps properties") {
  TEST_CASE("random rank sets: positivity, inclusion-exclusion, dimensions") {
    oracle::Rng rng(1111);
    for (int trial = 0; trial < 25; ++trial) {
      const int n = rng.uniform(3, 9);
      std::vector<int> ranks;
      for (int r = 1; r <= n - 2; ++r) {
        if (rng.coin()) ranks.push_back(r);
      }
      const RankSet s(ranks);
      const auto b = positivity(beta(n, s), Basis::s);
      CHECK(b.positive);
      SymFunc sum;
      for (const auto& t : s.subsets()) sum += beta(n, t);
      CHECK(sum == alpha(n, s));
      CHECK(dimension(alpha(n, s)) == Rational(count_maximal_chains(PosetView(n, ViewSpec::rank_selected(s.ranks())))));
      const auto m = multiplicities(n, s);
      CHECK(m.b >= 0);
      CHECK(m.b_prime >= 1);
      CHECK(m.a >= m.b);
    }
  }

  TEST_CASE("random rank sets: homology is concentrated with Betti number dim beta") {
    oracle::Rng rng(1212);
    for (int trial = 0; trial < 12; ++trial) {
      const int n = rng.uniform(3, 6);
      std::vector<int> ranks;
      for (int r = 1; r <= n - 2; ++r) {
        if (rng.coin()) ranks.push_back(r);
      }
      if (ranks.empty()) continue;
      const RankSet s(ranks);
      const auto h = homology(PosetView(n, ViewSpec::rank_selected(ranks)));
      CHECK(h.concentrated_degree() == static_cast<int>(ranks.size()) - 1);
      CHECK(Rational(h.betti_at(static_cast<int>(ranks.size()) - 1)) == dimension(beta(n, s)));
    }
  }
}

TEST_SUITE("reports") {
  TEST_CASE("stability report for S = {2}") {
    const auto r = stability_report(RankSet({2}), 1, 9);
    CHECK(r.passed());
    CHECK(find_assertion(r, "a_{1 u (S+1)}(n+1) = a'_S(n)") != nullptr);
    CHECK(find_assertion(r, "b_{S u 1}(n) + b_S(n)") != nullptr);
    CHECK(r.to_json()["results"]["observed_onsets"]["b_S"].get<int>() <= 4);
  }

  TEST_CASE("stability report needs room") {
    CHECK_THROWS_AS(stability_report(RankSet({3}), 0, 4), std::invalid_argument);
    CHECK_THROWS_AS(stability_report(RankSet(), 0, 8), std::invalid_argument);
  }

  TEST_CASE("hh suite: the k > r/2 family fails exactly at odd r, k = (r+1)/2") {
    const auto r = conjecture_check("hh", 7);
    CHECK_FALSE(r.passed());
    CHECK(r.failures() == 1);
    const auto* literal = find_assertion(r, "b_S(n) = 0 when S = [1,r] minus {k}, k > r/2");
    REQUIRE(literal != nullptr);
    CHECK_FALSE(literal->passed);
    for (const auto& f : literal->witness["failures"]) {
      const auto s = RankSet::parse(f["S"].get<std::string>());
      const int rmax = s.max();
      int missing = 0;
      for (int i = 1; i <= rmax; ++i) {
        if (!s.contains(i)) missing = i;
      }
      CHECK(rmax % 2 == 1);
      CHECK(2 * missing == rmax + 1);
    }
    const auto* sharp = find_assertion(r, "b_S(n) = 0 when S = [1,r] minus {k}, 2k >= r+2");
    REQUIRE(sharp != nullptr);
    CHECK(sharp->passed);
  }

  TEST_CASE("suite names and aliases") {
    CHECK(conjecture_check("simsun-bound", 6).to_json()["assertions"] == conjecture_check("conj-3.9", 6).to_json()["assertions"]);
    CHECK(conjecture_check("euler", 6).passed());
    CHECK(conjecture_check("orbits", 7).passed());
    CHECK(conjecture_check("top-homology", 6).passed());
    CHECK(conjecture_check("even-block", 3).passed());
    CHECK_THROWS_AS(conjecture_check("nope", 5), std::invalid_argument);
  }

  TEST_CASE("subposet reports") {
    CHECK(subposet_homology_report(Family::qnk, 5, 3).passed());
    CHECK(subposet_homology_report(Family::pnk, 6, 4).passed());
    CHECK(subposet_homology_report(Family::le, 6, 3).passed());
    CHECK(subposet_homology_report(Family::ne, 5, 3).passed());
    CHECK(parse_family("even-top") == Family::even_top);
  }
}
