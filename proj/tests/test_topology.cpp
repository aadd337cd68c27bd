#include <doctest.h>

#include <sstream>

#include "parthom/chain_complex.hpp"
#include "parthom/errors.hpp"
#include "parthom/homology.hpp"
#include "parthom/smith.hpp"
#include "support/oracle.hpp"
#include "support/printing.hpp"

using namespace parthom;

namespace {

SparseIntMatrix sparse(const std::vector<std::vector<long>>& dense) {
  SparseIntMatrix m;
  m.rows = dense.size();
  const std::size_t cols = dense.empty() ? 0 : dense[0].size();
  m.columns.resize(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t r = 0; r < dense.size(); ++r) {
      if (dense[r][c] != 0) m.columns[c].push_back({static_cast<std::uint32_t>(r), dense[r][c]});
    }
  }
  return m;
}

std::vector<std::vector<Integer>> big(const std::vector<std::vector<long>>& dense) {
  std::vector<std::vector<Integer>> out;
  for (const auto& row : dense) out.emplace_back(row.begin(), row.end());
  return out;
}

std::vector<std::vector<Rational>> rational(const std::vector<std::vector<long>>& dense) {
  std::vector<std::vector<Rational>> out;
  for (const auto& row : dense) out.emplace_back(row.begin(), row.end());
  return out;
}

}  // namespace

TEST_SUITE("topology") {
  TEST_CASE("Smith normal form of a textbook matrix") {
    const std::vector<std::vector<long>> a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    const auto expected = oracle::smith_by_minors(big(a));
    CHECK(expected == std::vector<Integer>{2, 6, 12});
    CHECK(smith_diagonal(big(a)) == expected);
    const auto inv = smith_invariants(sparse(a));
    CHECK(inv.rank == 3);
    CHECK(inv.torsion == std::vector<Integer>{2, 6, 12});
  }

  TEST_CASE("order complex of Pi_4") {
    const PosetView view(4, ViewSpec::full());
    const auto cc = ChainComplex::order_complex(view);
    CHECK(cc.top_dimension() == 1);
    CHECK(cc.simplex_count(-1) == 1);
    CHECK(cc.simplex_count(0) == 13);
    CHECK(cc.simplex_count(1) == 18);
    CHECK(cc.boundary_squared_zero());
    const auto h = homology(cc, view.name());
    CHECK(h.is_free());
    CHECK(h.concentrated_degree() == 1);
    CHECK(h.betti_at(1) == 6);
    CHECK(mobius_number(view) == -6);
  }

  TEST_CASE("full partition lattice: free, concentrated in degree n-3, rank (n-1)!") {
    for (int n = 3; n <= 6; ++n) {
      const PosetView view(n, ViewSpec::full());
      const auto h = homology(view);
      CHECK(h.is_free());
      CHECK(h.concentrated_degree() == n - 3);
      CHECK(h.betti_at(n - 3) == oracle::factorial(n - 1));
      const Integer sign = (n % 2 == 1) ? 1 : -1;
      CHECK(mobius_number(view) == sign * oracle::factorial(n - 1));
    }
  }

  TEST_CASE("rank-selected homology agrees with a dense rational computation") {
    const std::vector<std::pair<int, std::vector<int>>> cases{
        {4, {1}}, {4, {1, 2}}, {5, {1, 3}}, {5, {2}}, {5, {1, 2, 3}}, {5, {2, 3}}, {6, {1, 4}}, {6, {2, 4}}};
    for (const auto& [n, ranks] : cases) {
      const auto h = homology(PosetView(n, ViewSpec::rank_selected(ranks)));
      const auto expected = oracle::rank_selected_betti(n, ranks);
      for (const auto& [d, b] : expected) CHECK_MESSAGE(h.betti_at(d) == b, "n=", n, " d=", d);
      CHECK(rational_betti(ChainComplex::order_complex(PosetView(n, ViewSpec::rank_selected(ranks)))) == h.betti);
    }
  }

  TEST_CASE("the matching complex view Pi_{7,<=2} has 3-torsion") {
    const PosetView view(7, ViewSpec::parse("le:k=2"));
    const auto h = homology(view);
    CHECK_FALSE(h.is_free());
    REQUIRE(h.torsion.count(1) == 1);
    CHECK(h.torsion.at(1) == std::vector<Integer>{3});
    // Faces of the matching complex: 21 edges, 105 pairs, 105 triples.
    CHECK(h.reduced_euler_characteristic() == Integer(-1 + 21 - 105 + 105));
    CHECK(h.reduced_euler_characteristic() == mobius_number(view));
  }

  TEST_CASE("concentrated character of Pi_4") {
    const auto c = concentrated_character(PosetView(4, ViewSpec::full()));
    CHECK(c.degree == 1);
    CHECK(c.character.dimension() == 6);
    CHECK(c.homology.betti_at(1) == 6);
  }

  TEST_CASE("Lefschetz needs a symmetric view") {
    CHECK_NOTHROW(lefschetz_class_function(PosetView(5, ViewSpec::parse("qnk:k=3"))));
  }

  TEST_CASE("simplex budget") {
    CHECK_THROWS_AS(ChainComplex::order_complex(PosetView(6, ViewSpec::full()), 100), FeasibilityError);
  }

  TEST_CASE("homology JSON round trip") {
    const auto h = homology(PosetView(7, ViewSpec::parse("le:k=2")));
    const auto j = homology_to_json(h);
    CHECK(j["torsion"]["1"] == Json::array({3}));
    CHECK(homology_from_json(j) == h);
  }

  TEST_CASE("boundary triplets") {
    const auto cc = ChainComplex::order_complex(PosetView(4, ViewSpec::full()));
    std::ostringstream os;
    cc.boundary(1).write_triplets(os);
    std::istringstream is(os.str());
    std::size_t rows = 0, cols = 0, nnz = 0;
    is >> rows >> cols >> nnz;
    CHECK(rows == 13);
    CHECK(cols == 18);
    CHECK(nnz == 36);
    long r = 0, c = 0, v = 0, sum = 0;
    while (is >> r >> c >> v) sum += v;
    CHECK(sum == 0);
  }
}

TEST_SUITE("topology properties") {
  TEST_CASE("Smith invariants agree with determinantal divisors") {
    oracle::Rng rng(808);
    for (int trial = 0; trial < 150; ++trial) {
      const auto rows = static_cast<std::size_t>(rng.uniform(1, 4));
      const auto cols = static_cast<std::size_t>(rng.uniform(1, 4));
      std::vector<std::vector<long>> a(rows, std::vector<long>(cols));
      for (auto& row : a) {
        for (auto& x : row) x = rng.coin() ? 0 : rng.uniform(-6, 6);
      }
      const auto expected = oracle::smith_by_minors(big(a));
      CHECK(smith_diagonal(big(a)) == expected);
      const auto inv = smith_invariants(sparse(a));
      CHECK(inv.rank == expected.size());
      CHECK(inv.rank == oracle::rational_rank(rational(a)));
      CHECK(rank_over_rationals(sparse(a)) == inv.rank);
      std::vector<Integer> torsion;
      for (const auto& d : expected) {
        if (d > 1) torsion.push_back(d);
      }
      CHECK(inv.torsion == torsion);
    }
  }

  TEST_CASE("Euler characteristic equals the Mobius number on random views") {
    oracle::Rng rng(909);
    const char* families[] = {"full", "qnk", "pnk", "le", "ne"};
    for (int trial = 0; trial < 25; ++trial) {
      const int n = rng.uniform(4, 6);
      const std::string family = families[rng.uniform(0, 4)];
      std::string text = family;
      if (family == "qnk" || family == "pnk" || family == "ne") text += ":k=" + std::to_string(rng.uniform(2, n - 1));
      if (family == "le") text += ":k=" + std::to_string(rng.uniform(2, n - 1));
      const PosetView view(n, ViewSpec::parse(text));
      const auto cc = ChainComplex::order_complex(view);
      CHECK(cc.boundary_squared_zero());
      CHECK_MESSAGE(homology(cc).reduced_euler_characteristic() == mobius_number(view), text, " n=", n);
    }
  }
}
