#include "parthom/chain_complex.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

#include "parthom/errors.hpp"

namespace parthom {

namespace {

struct ChainHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : v) {
      h ^= x;
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

}  // namespace

ChainComplex ChainComplex::order_complex(const PosetView& view, std::size_t simplex_budget) {
  ChainComplex cc;
  std::size_t total = 0;
  if (!view.empty()) {
    std::vector<Chain> layer;
    for (std::uint32_t i = 0; i < view.size(); ++i) layer.push_back(Chain{{i}});
    while (!layer.empty()) {
      total += layer.size();
      if (total > simplex_budget) {
        throw FeasibilityError("order complex of " + view.name() + " exceeds the simplex budget of " +
                               std::to_string(simplex_budget));
      }
      std::vector<Chain> next;
      for (const auto& c : layer) {
        for (auto z : view.below(c.elements.front())) {
          Chain longer;
          longer.elements.reserve(c.elements.size() + 1);
          longer.elements.push_back(z);
          longer.elements.insert(longer.elements.end(), c.elements.begin(), c.elements.end());
          next.push_back(std::move(longer));
        }
      }
      cc.simplices_.push_back(std::move(layer));
      layer = std::move(next);
    }
  }

  const int top = cc.top_dimension();
  cc.boundaries_.resize(static_cast<std::size_t>(top + 1));
  if (top >= 0) {
    auto& aug = cc.boundaries_[0];
    aug.rows = 1;
    aug.columns.assign(cc.simplices_[0].size(), {{0u, 1L}});
  }
  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, ChainHash> face_index;
  for (int d = 1; d <= top; ++d) {
    const auto& faces = cc.simplices_[static_cast<std::size_t>(d - 1)];
    face_index.clear();
    face_index.reserve(faces.size());
    for (std::uint32_t i = 0; i < faces.size(); ++i) face_index.emplace(faces[i].elements, i);
    auto& bd = cc.boundaries_[static_cast<std::size_t>(d)];
    bd.rows = faces.size();
    const auto& cells = cc.simplices_[static_cast<std::size_t>(d)];
    bd.columns.resize(cells.size());
    std::vector<std::uint32_t> face;
    for (std::size_t j = 0; j < cells.size(); ++j) {
      const auto& v = cells[j].elements;
      auto& col = bd.columns[j];
      for (std::size_t omit = 0; omit < v.size(); ++omit) {
        face.clear();
        for (std::size_t t = 0; t < v.size(); ++t) {
          if (t != omit) face.push_back(v[t]);
        }
        col.emplace_back(face_index.at(face), (omit % 2 == 0) ? 1L : -1L);
      }
      std::sort(col.begin(), col.end());
    }
  }
  return cc;
}

std::size_t ChainComplex::simplex_count(int d) const {
  if (d == -1) return 1;
  if (d < -1 || d > top_dimension()) return 0;
  return simplices_[static_cast<std::size_t>(d)].size();
}

bool ChainComplex::boundary_squared_zero() const {
  for (int d = 1; d <= top_dimension(); ++d) {
    const auto& outer = boundaries_[static_cast<std::size_t>(d - 1)];
    const auto& inner = boundaries_[static_cast<std::size_t>(d)];
    for (const auto& col : inner.columns) {
      std::map<std::uint32_t, long> acc;
      for (const auto& [mid, a] : col) {
        for (const auto& [low, b] : outer.columns[mid]) acc[low] += a * b;
      }
      for (const auto& [row, v] : acc) {
        if (v != 0) return false;
      }
    }
  }
  return true;
}

}  // namespace parthom
