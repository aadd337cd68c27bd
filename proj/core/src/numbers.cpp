#include "parthom/numbers.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace parthom {

namespace {

// Tables grow under a lock and are only ever extended, so lookups copy out
// under the same lock.
struct EulerTable {
  std::mutex mutex;
  std::vector<Integer> values{Integer(1)};
  std::vector<Integer> row{Integer(1)};  // last boustrophedon row

  Integer get(int n) {
    std::lock_guard lock(mutex);
    while (static_cast<int>(values.size()) <= n) {
      // Seidel-Entringer: each row is the running sum of the previous one read backwards.
      std::vector<Integer> next(row.size() + 1);
      next[0] = 0;
      for (std::size_t j = 0; j < row.size(); ++j) next[j + 1] = next[j] + row[row.size() - 1 - j];
      row = std::move(next);
      values.push_back(row.back());
    }
    return values[static_cast<std::size_t>(n)];
  }
};

struct SimsunTable {
  std::mutex mutex;
  // rows[n][i] for 0 <= i <= n/2; rows[0] unused.
  std::vector<std::vector<Integer>> rows{{}, {Integer(1)}};

  Integer get(int i, int n) {
    std::lock_guard lock(mutex);
    while (static_cast<int>(rows.size()) <= n) {
      const int m = static_cast<int>(rows.size()) - 1;  // build row m+1 from row m
      const auto& prev = rows.back();
      std::vector<Integer> next(static_cast<std::size_t>((m + 1) / 2 + 1), Integer(0));
      for (int j = 1; j < static_cast<int>(next.size()); ++j) {
        Integer v = 0;
        if (j < static_cast<int>(prev.size())) v += j * prev[static_cast<std::size_t>(j)];
        if (j - 1 < static_cast<int>(prev.size())) v += (m - 2 * j + 2) * prev[static_cast<std::size_t>(j - 1)];
        next[static_cast<std::size_t>(j)] = v;
      }
      rows.push_back(std::move(next));
    }
    const auto& row = rows[static_cast<std::size_t>(n)];
    if (i >= static_cast<int>(row.size())) return 0;
    return row[static_cast<std::size_t>(i)];
  }
};

struct EvenTable {
  std::mutex mutex;
  // rows[n][i], 0 <= i <= n; only 2 <= i <= n nonzero.
  std::vector<std::vector<Integer>> rows;

  Integer get(int i, int n) {
    std::lock_guard lock(mutex);
    while (static_cast<int>(rows.size()) <= n) extend();
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
  }

  Integer at(int i, int n) const {
    if (n < 2 || i < 2 || i > n) return 0;
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
  }

  void extend() {
    const int n = static_cast<int>(rows.size());
    std::vector<Integer> row(static_cast<std::size_t>(n + 1), Integer(0));
    if (n >= 2) row[2] = 1;
    for (int i = 3; i <= n; ++i) {
      Integer total = 0;
      for (int k = 0; k <= i - 2; ++k) {
        Integer inner = 0;
        for (int r = 1; 2 * r <= i; ++r) {
          if (i - 2 * r > i - k) continue;
          Integer term = binomial(i - k, i - 2 * r) * at(i - k, n - r);
          if (r % 2 == 1) {
            inner += term;
          } else {
            inner -= term;
          }
        }
        total += binomial(2 * n - 2 * i + k, k) * inner;
      }
      if (total <= 0) {
        throw std::logic_error("b_" + std::to_string(i) + "(" + std::to_string(n) + ") = " + total.get_str() +
                               " is not positive");
      }
      row[static_cast<std::size_t>(i)] = total;
    }
    rows.push_back(std::move(row));
  }
};

EulerTable& euler_table() {
  static EulerTable t;
  return t;
}
SimsunTable& simsun_table() {
  static SimsunTable t;
  return t;
}
EvenTable& even_table() {
  static EvenTable t;
  return t;
}

}  // namespace

Integer euler_number(int n) {
  if (n < 0) throw std::invalid_argument("euler_number: n must be nonnegative");
  return euler_table().get(n);
}

Integer simsun(int i, int n) {
  if (n < 1 || i < 0 || 2 * i > n) return 0;
  return simsun_table().get(i, n);
}

Integer bi(int i, int n) {
  if (n < 2 || i < 2 || i > n) return 0;
  return even_table().get(i, n);
}

Integer even_refinement(int k, int n) {
  Integer total = 0;
  for (int i = 2; i <= std::min(k, n); ++i) total += bi(i, n) * binomial(n - i, k - i);
  return total;
}

}  // namespace parthom
