#include "parthom/smith.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace parthom {

std::size_t SparseIntMatrix::nonzeros() const {
  std::size_t nnz = 0;
  for (const auto& c : columns) nnz += c.size();
  return nnz;
}

void SparseIntMatrix::write_triplets(std::ostream& os) const {
  os << rows << ' ' << cols() << ' ' << nonzeros() << '\n';
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (const auto& [i, v] : columns[j]) os << i << ' ' << j << ' ' << v << '\n';
  }
}

namespace {

struct Overflow {};

// Scalar policies for the sparse elimination: machine words with overflow
// detection, or GMP integers.
struct WordOps {
  using T = long;
  static T from(long v) { return v; }
  static bool is_unit(T v) { return v == 1 || v == -1; }
  static bool is_zero(T v) { return v == 0; }
  // a - b * c
  static T fms(T a, T b, T c) {
    T prod;
    T out;
    if (__builtin_mul_overflow(b, c, &prod) || __builtin_sub_overflow(a, prod, &out)) throw Overflow{};
    return out;
  }
  static Integer big(T v) { return Integer(v); }
};

struct BigOps {
  using T = Integer;
  static T from(long v) { return Integer(v); }
  static bool is_unit(const T& v) { return v == 1 || v == -1; }
  static bool is_zero(const T& v) { return sgn(v) == 0; }
  static T fms(const T& a, const T& b, const T& c) { return a - b * c; }
  static Integer big(const T& v) { return v; }
};

template <typename Ops>
SmithInvariants eliminate(const SparseIntMatrix& a) {
  using T = typename Ops::T;
  using Vec = std::vector<std::pair<std::uint32_t, T>>;

  std::vector<Vec> vecs(a.cols());
  std::vector<std::vector<std::uint32_t>> row_users(a.rows);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (const auto& [i, v] : a.columns[j]) {
      if (v == 0) continue;
      vecs[j].emplace_back(i, Ops::from(v));
      row_users[i].push_back(static_cast<std::uint32_t>(j));
    }
  }
  std::vector<bool> alive(a.cols(), true);

  auto find_entry = [](const Vec& v, std::uint32_t row) -> const T* {
    auto it = std::lower_bound(v.begin(), v.end(), row, [](const auto& e, std::uint32_t r) { return e.first < r; });
    return (it != v.end() && it->first == row) ? &it->second : nullptr;
  };

  SmithInvariants out;
  Vec scratch;
  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<std::uint32_t> order;
    for (std::uint32_t j = 0; j < vecs.size(); ++j) {
      if (alive[j] && !vecs[j].empty()) order.push_back(j);
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](auto x, auto y) { return vecs[x].size() < vecs[y].size(); });
    for (auto j : order) {
      if (!alive[j] || vecs[j].empty()) continue;
      // Unit entry whose row touches the fewest other vectors.
      std::size_t best = SIZE_MAX;
      std::uint32_t pivot_row = 0;
      T pivot_val{};
      for (const auto& [r, v] : vecs[j]) {
        if (Ops::is_unit(v) && row_users[r].size() < best) {
          best = row_users[r].size();
          pivot_row = r;
          pivot_val = v;
        }
      }
      if (best == SIZE_MAX) continue;
      const Vec pivot = vecs[j];
      for (auto w : row_users[pivot_row]) {
        if (w == j || !alive[w]) continue;
        const T* coeff = find_entry(vecs[w], pivot_row);
        if (!coeff) continue;
        // w -= (coeff / pivot_val) * pivot; pivot_val is a unit so 1/pivot_val = pivot_val.
        const T factor = Ops::fms(Ops::from(0), *coeff, Ops::from(0) - pivot_val);
        scratch.clear();
        auto& target = vecs[w];
        std::size_t p = 0, q = 0;
        while (p < target.size() || q < pivot.size()) {
          if (q == pivot.size() || (p < target.size() && target[p].first < pivot[q].first)) {
            scratch.push_back(target[p++]);
          } else if (p == target.size() || pivot[q].first < target[p].first) {
            T v = Ops::fms(Ops::from(0), factor, pivot[q].second);
            if (!Ops::is_zero(v)) {
              row_users[pivot[q].first].push_back(w);
              scratch.emplace_back(pivot[q].first, std::move(v));
            }
            ++q;
          } else {
            T v = Ops::fms(target[p].second, factor, pivot[q].second);
            if (!Ops::is_zero(v)) scratch.emplace_back(target[p].first, std::move(v));
            ++p;
            ++q;
          }
        }
        target.swap(scratch);
      }
      alive[j] = false;
      row_users[pivot_row].clear();
      ++out.rank;
      progress = true;
    }
  }

  // Dense core of whatever has no unit pivot left.
  std::map<std::uint32_t, std::size_t> row_pos;
  std::vector<std::uint32_t> core_cols;
  for (std::uint32_t j = 0; j < vecs.size(); ++j) {
    if (!alive[j] || vecs[j].empty()) continue;
    core_cols.push_back(j);
    for (const auto& e : vecs[j]) row_pos.emplace(e.first, 0);
  }
  if (core_cols.empty()) return out;
  std::size_t pos = 0;
  for (auto& [r, p] : row_pos) p = pos++;
  std::vector<std::vector<Integer>> dense(row_pos.size(), std::vector<Integer>(core_cols.size(), Integer(0)));
  for (std::size_t c = 0; c < core_cols.size(); ++c) {
    for (const auto& [r, v] : vecs[core_cols[c]]) dense[row_pos[r]][c] = Ops::big(v);
  }
  for (auto& d : smith_diagonal(std::move(dense))) {
    ++out.rank;
    if (d != 1) out.torsion.push_back(std::move(d));
  }
  return out;
}

}  // namespace

SmithInvariants smith_invariants(const SparseIntMatrix& a) {
  try {
    return eliminate<WordOps>(a);
  } catch (const Overflow&) {
    return eliminate<BigOps>(a);
  }
}

std::vector<Integer> smith_diagonal(std::vector<std::vector<Integer>> a) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  std::vector<Integer> diag;
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (auto& row : a) std::swap(row[x], row[y]);
  };
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Global minimal-absolute-value pivot in the trailing block.
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        if (sgn(a[i][j]) != 0 && (pi == m || mpz_cmpabs(a[i][j].get_mpz_t(), a[pi][pj].get_mpz_t()) < 0)) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == m) break;
    std::swap(a[t], a[pi]);
    swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      Integer q;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(a[i][t]) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        if (sgn(q) != 0) {
          for (std::size_t j = t; j < n; ++j) {
            if (sgn(a[t][j]) != 0) a[i][j] -= q * a[t][j];
          }
        }
        if (sgn(a[i][t]) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(a[t][j]) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        if (sgn(q) != 0) {
          for (std::size_t i = t; i < m; ++i) {
            if (sgn(a[i][t]) != 0) a[i][j] -= q * a[i][t];
          }
        }
        if (sgn(a[t][j]) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; move it to the corner.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (sgn(a[i][t]) != 0 && mpz_cmpabs(a[i][t].get_mpz_t(), a[bi][bj].get_mpz_t()) < 0) { bi = i; bj = t; }
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (sgn(a[t][j]) != 0 && mpz_cmpabs(a[t][j].get_mpz_t(), a[bi][bj].get_mpz_t()) < 0) { bi = t; bj = j; }
        }
        std::swap(a[t], a[bi]);
        swap_cols(t, bj);
        continue;
      }
      // Divisibility: the pivot must divide every entry of the trailing block.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (sgn(a[i][j]) != 0 && !mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            bad = i;
            break;
          }
        }
      }
      if (bad == m) break;
      for (std::size_t j = t; j < n; ++j) a[t][j] += a[bad][j];
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

std::size_t rank_over_rationals(const SparseIntMatrix& a) {
  // Incremental row echelon form keyed by leading row index.
  using Vec = std::vector<std::pair<std::uint32_t, Rational>>;
  std::map<std::uint32_t, Vec> basis;
  std::size_t rank = 0;
  for (const auto& col : a.columns) {
    Vec v;
    for (const auto& [i, x] : col) {
      if (x != 0) v.emplace_back(i, Rational(x));
    }
    while (!v.empty()) {
      auto it = basis.find(v.front().first);
      if (it == basis.end()) {
        const Rational lead = v.front().second;
        for (auto& e : v) e.second /= lead;
        basis.emplace(v.front().first, std::move(v));
        ++rank;
        break;
      }
      const Rational f = v.front().second;
      const Vec& b = it->second;
      Vec next;
      std::size_t p = 0, q = 0;
      while (p < v.size() || q < b.size()) {
        if (q == b.size() || (p < v.size() && v[p].first < b[q].first)) {
          next.push_back(v[p++]);
        } else if (p == v.size() || b[q].first < v[p].first) {
          next.emplace_back(b[q].first, -f * b[q].second);
          ++q;
        } else {
          Rational x = v[p].second - f * b[q].second;
          if (sgn(x) != 0) next.emplace_back(v[p].first, std::move(x));
          ++p;
          ++q;
        }
      }
      v.swap(next);
    }
  }
  return rank;
}

}  // namespace parthom
