#include <doctest.h>

#include "parthom/chains.hpp"
#include "parthom/poset_view.hpp"
#include "parthom/set_partition.hpp"
#include "support/oracle.hpp"
#include "support/printing.hpp"

using namespace parthom;

namespace {

SetPartition from_labels(const oracle::Labels& x) { return SetPartition::from_labels(x); }

bool is_modular_of_size(const std::vector<int>& sizes, int lo, int hi) {
  int big = 0, size = 0;
  for (int s : sizes) {
    if (s > 1) {
      ++big;
      size = s;
    }
  }
  return big == 1 && size >= lo && size <= hi;
}

// Proper elements of Pi_n kept by each family, straight from the definitions.
bool oracle_keeps(const ViewSpec& spec, int n, const oracle::Labels& x) {
  const int r = oracle::rank(x);
  if (r < 1 || r > n - 2) return false;
  const auto sizes = oracle::block_sizes(x);
  const int k = spec.k;
  switch (spec.family) {
    case Family::full: return true;
    case Family::ranks: return std::find(spec.ranks.begin(), spec.ranks.end(), r) != spec.ranks.end();
    case Family::qnk: return !is_modular_of_size(sizes, k, k);
    case Family::pnk: return !is_modular_of_size(sizes, 2, k);
    case Family::le: return sizes.front() <= k;
    case Family::ne: return std::find(sizes.begin(), sizes.end(), k) == sizes.end();
    case Family::even: return oracle::blocks(x) % 2 == 0;
    case Family::even_top: return oracle::blocks(x) % 2 == 0 && oracle::blocks(x) <= 2 * k;
  }
  return false;
}

std::vector<std::pair<int, std::string>> sample_views() {
  return {{4, "full"},     {5, "full"},      {6, "ranks:1,3"}, {6, "qnk:k=3"},     {6, "pnk:k=4"}, {6, "le:k=3"},
          {7, "le:k=2"},   {6, "ne:k=3"},    {5, "ne:k=2"},    {6, "even"},        {8, "even"},    {6, "even-top:k=1"},
          {8, "even-top:k=2"}, {7, "ranks:2-4"}};
}

}  // namespace

TEST_SUITE("poset") {
  TEST_CASE("set partitions: canonical form, parsing, rank") {
    const auto x = SetPartition::parse("13|2|45");
    CHECK(x.n() == 5);
    CHECK(x.block_count() == 3);
    CHECK(x.rank() == 2);
    CHECK(x.to_string() == "13|2|45");
    CHECK(x == SetPartition::from_blocks(5, {{4, 5}, {2}, {3, 1}}));
    const int relabelled[] = {7, 3, 7, 1, 1};
    CHECK(x == SetPartition::from_labels(relabelled));
    CHECK(type_of(x) == IntPartition({2, 2, 1}));
    CHECK(SetPartition::parse("1,2|3,4,5,6,7,8,9,10").n() == 10);
    CHECK_THROWS_AS(SetPartition::from_blocks(3, {{1, 2}, {2, 3}}), std::invalid_argument);
    const std::uint8_t bad[] = {0, 2, 1};
    CHECK_THROWS_AS(SetPartition::from_rgs(bad), std::invalid_argument);
  }

  TEST_CASE("refinement order agrees with the block-containment oracle") {
    const auto all = oracle::set_partitions(5);
    for (const auto& a : all) {
      for (const auto& b : all) CHECK(leq(from_labels(a), from_labels(b)) == oracle::refines(a, b));
    }
    CHECK_THROWS_AS(leq(SetPartition(3), SetPartition(4)), std::invalid_argument);
  }

  TEST_CASE("Stirling numbers and rank sizes of the full lattice") {
    for (int n = 2; n <= 9; ++n) {
      const PosetView full(n, ViewSpec::full());
      for (int r = 1; r <= n - 2; ++r) {
        CHECK(stirling2(n, n - r) == oracle::stirling2(n, n - r));
        CHECK(Integer(static_cast<long>(full.rank_indices(r).size())) == oracle::stirling2(n, n - r));
      }
    }
  }

  TEST_CASE("views contain exactly the elements their definition keeps") {
    for (const auto& [n, text] : sample_views()) {
      const auto spec = ViewSpec::parse(text);
      const PosetView view(n, spec);
      std::size_t expected = 0;
      for (const auto& x : oracle::set_partitions(n)) {
        const bool keep = oracle_keeps(spec, n, x);
        expected += keep;
        CHECK_MESSAGE(view.contains(from_labels(x)) == keep, text, " n=", n);
        CHECK(view.index_of(from_labels(x)).has_value() == keep);
      }
      CHECK_MESSAGE(view.size() == expected, text);
      for (std::size_t i = 1; i < view.size(); ++i) {
        CHECK(view.element(static_cast<std::uint32_t>(i - 1)).rank() <= view.element(static_cast<std::uint32_t>(i)).rank());
      }
    }
  }

  TEST_CASE("below and cover relations") {
    const PosetView view(5, ViewSpec::parse("ne:k=2"));
    for (std::uint32_t i = 0; i < view.size(); ++i) {
      std::vector<std::uint32_t> expected;
      for (std::uint32_t j = 0; j < view.size(); ++j) {
        if (j != i && leq(view.element(j), view.element(i))) expected.push_back(j);
      }
      const auto below = view.below(i);
      CHECK(std::vector<std::uint32_t>(below.begin(), below.end()) == expected);
      for (auto c : view.lower_covers(i)) {
        for (auto j : expected) CHECK_FALSE((j != c && leq(view.element(c), view.element(j))));
      }
      bool maximal = true;
      for (std::uint32_t j = 0; j < view.size(); ++j) {
        if (j != i && leq(view.element(i), view.element(j))) maximal = false;
      }
      CHECK(view.is_maximal(i) == maximal);
    }
  }

  TEST_CASE("view specs parse and print") {
    CHECK(ViewSpec::parse("ranks:1-3,5").ranks == std::vector<int>{1, 2, 3, 5});
    CHECK(ViewSpec::parse("qnk:k=3") == ViewSpec::with_k(Family::qnk, 3));
    CHECK(ViewSpec::parse(ViewSpec::parse("even-top:k=2").to_string()) == ViewSpec::parse("even-top:k=2"));
    CHECK(PosetView(4, ViewSpec::full()).name() == "full,n=4");
    CHECK_THROWS_AS(ViewSpec::parse("qnk"), InvalidView);
    CHECK_THROWS_AS(ViewSpec::parse("bogus:k=1"), InvalidView);
    CHECK_THROWS_AS(PosetView(5, ViewSpec::parse("ranks:4")), InvalidView);
    CHECK_THROWS_AS(PosetView(5, ViewSpec::parse("even")), InvalidView);
    CHECK_THROWS_AS(PosetView(PosetView::kMaxN + 1, ViewSpec::full()), InvalidView);
  }

  TEST_CASE("every family view is closed under the symmetric group") {
    for (const auto& [n, text] : sample_views()) CHECK(PosetView(n, ViewSpec::parse(text)).is_symmetric());
  }

  TEST_CASE("maximal chains of the full lattice number n!(n-1)!/2^(n-1)") {
    for (int n = 2; n <= 8; ++n) {
      const Integer expected = oracle::factorial(n) * oracle::factorial(n - 1) / (Integer(1) << (n - 1));
      CHECK(count_maximal_chains(PosetView(n, ViewSpec::full())) == expected);
    }
    CHECK(maximal_chains(PosetView(4, ViewSpec::full())).size() == 18);
  }

  TEST_CASE("fixed chain counts agree with a brute-force chain enumeration") {
    for (int n = 3; n <= 6; ++n) {
      for (const std::vector<int>& ranks : std::vector<std::vector<int>>{{1}, {1, 2}, {2}, {1, 3}}) {
        if (ranks.back() > n - 2) continue;
        const PosetView view(n, ViewSpec::rank_selected(ranks));
        const auto chains = oracle::rank_chains(n, ranks);
        CHECK(count_maximal_chains(view) == Integer(static_cast<long>(chains.size())));
        for (const auto& mu : oracle::partitions(n)) {
          const auto g = oracle::of_cycle_type(mu);
          long fixed = 0;
          for (const auto& c : chains) {
            bool all = true;
            for (const auto& x : c) all = all && oracle::act(g, x) == x;
            fixed += all;
          }
          CHECK(fixed_chain_count(view, IntPartition(mu)) == Integer(fixed));
          CHECK(fixed_chain_count(view, Permutation::canonical_of_type(IntPartition(mu))) == Integer(fixed));
        }
      }
    }
  }
}

TEST_SUITE("poset properties") {
  TEST_CASE("refinement is a partial order and the action preserves it") {
    oracle::Rng rng(606);
    const int n = 6;
    const auto all = oracle::set_partitions(n);
    const auto pick = [&] { return from_labels(all[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(all.size()) - 1))]); };
    for (int trial = 0; trial < 300; ++trial) {
      const auto a = pick(), b = pick(), c = pick();
      CHECK(leq(a, a));
      if (leq(a, b) && leq(b, a)) CHECK(a == b);
      if (leq(a, b) && leq(b, c)) CHECK(leq(a, c));
      std::vector<int> images(static_cast<std::size_t>(n));
      std::iota(images.begin(), images.end(), 1);
      std::shuffle(images.begin(), images.end(), std::mt19937(static_cast<unsigned>(trial)));
      const auto g = Permutation::from_one_line(images);
      CHECK(leq(act(g, a), act(g, b)) == leq(a, b));
      CHECK(type_of(act(g, a)) == type_of(a));
    }
  }

  TEST_CASE("random rank-selected views have the expected rank sizes") {
    oracle::Rng rng(707);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = rng.uniform(3, 8);
      std::vector<int> ranks;
      for (int r = 1; r <= n - 2; ++r) {
        if (rng.coin()) ranks.push_back(r);
      }
      if (ranks.empty()) ranks.push_back(1);
      const PosetView view(n, ViewSpec::rank_selected(ranks));
      Integer expected = 0;
      for (int r : ranks) expected += oracle::stirling2(n, n - r);
      CHECK(Integer(static_cast<long>(view.size())) == expected);
      CHECK(view.occupied_ranks() == ranks);
    }
  }
}
