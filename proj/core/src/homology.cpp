#include "parthom/homology.hpp"

#include <algorithm>

#include "parthom/chains.hpp"
#include "parthom/rational.hpp"
#include "parthom/smith.hpp"

namespace parthom {

std::vector<int> HomologyResult::nonzero_degrees() const {
  std::vector<int> out;
  for (const auto& [d, b] : betti) {
    if (b != 0 || torsion.count(d) != 0) out.push_back(d);
  }
  for (const auto& [d, t] : torsion) {
    if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> HomologyResult::concentrated_degree() const {
  const auto degrees = nonzero_degrees();
  if (!is_free() || degrees.size() != 1) return std::nullopt;
  return degrees.front();
}

Integer HomologyResult::betti_at(int d) const {
  auto it = betti.find(d);
  return it == betti.end() ? Integer(0) : it->second;
}

Integer HomologyResult::reduced_euler_characteristic() const {
  Integer chi = 0;
  for (const auto& [d, b] : betti) {
    if (d % 2 == 0) {
      chi += b;
    } else {
      chi -= b;
    }
  }
  return chi;
}

Json homology_to_json(const HomologyResult& h) {
  Json j;
  j["view"] = h.view;
  Json betti = Json::object();
  for (const auto& [d, b] : h.betti) betti[std::to_string(d)] = integer_to_json(b);
  j["betti"] = betti;
  Json torsion = Json::object();
  for (const auto& [d, factors] : h.torsion) {
    Json list = Json::array();
    for (const auto& t : factors) list.push_back(integer_to_json(t));
    torsion[std::to_string(d)] = list;
  }
  j["torsion"] = torsion;
  return j;
}

HomologyResult homology_from_json(const Json& j) {
  HomologyResult h;
  h.view = j.at("view").get<std::string>();
  for (const auto& [d, b] : j.at("betti").items()) h.betti[std::stoi(d)] = integer_from_json(b);
  for (const auto& [d, list] : j.at("torsion").items()) {
    auto& factors = h.torsion[std::stoi(d)];
    for (const auto& t : list) factors.push_back(integer_from_json(t));
  }
  return h;
}

HomologyResult homology(const ChainComplex& cc, std::string view_name) {
  HomologyResult h;
  h.view = std::move(view_name);
  const int top = cc.top_dimension();
  std::vector<std::size_t> rank(static_cast<std::size_t>(top + 2), 0);
  for (int d = 0; d <= top; ++d) {
    auto inv = smith_invariants(cc.boundary(d));
    rank[static_cast<std::size_t>(d)] = inv.rank;
    // Torsion of H_{d-1} comes from the image of the boundary out of degree d.
    if (!inv.torsion.empty()) h.torsion[d - 1] = std::move(inv.torsion);
  }
  for (int d = -1; d <= top; ++d) {
    const std::size_t in_rank = d >= 0 ? rank[static_cast<std::size_t>(d)] : 0;
    const std::size_t out_rank = rank[static_cast<std::size_t>(d + 1)];
    h.betti[d] = Integer(static_cast<unsigned long>(cc.simplex_count(d) - in_rank - out_rank));
  }
  return h;
}

HomologyResult homology(const PosetView& view) {
  return homology(ChainComplex::order_complex(view), view.name());
}

std::map<int, Integer> rational_betti(const ChainComplex& cc) {
  const int top = cc.top_dimension();
  std::vector<std::size_t> rank(static_cast<std::size_t>(top + 2), 0);
  for (int d = 0; d <= top; ++d) rank[static_cast<std::size_t>(d)] = rank_over_rationals(cc.boundary(d));
  std::map<int, Integer> betti;
  for (int d = -1; d <= top; ++d) {
    const std::size_t in_rank = d >= 0 ? rank[static_cast<std::size_t>(d)] : 0;
    betti[d] = Integer(static_cast<unsigned long>(cc.simplex_count(d) - in_rank - rank[static_cast<std::size_t>(d + 1)]));
  }
  return betti;
}

namespace {

// mu(0,1) of the subposet of elements marked in `keep`, bounds adjoined.
Integer mobius_of(const PosetView& view, const std::vector<bool>& keep) {
  std::vector<Integer> mu(view.size());
  Integer total = 0;
  for (std::uint32_t i = 0; i < view.size(); ++i) {
    if (!keep[i]) continue;
    Integer m = -1;
    for (auto j : view.below(i)) {
      if (keep[j]) m -= mu[j];
    }
    mu[i] = m;
    total += m;
  }
  return -1 - total;
}

}  // namespace

Integer mobius_number(const PosetView& view) {
  return mobius_of(view, std::vector<bool>(view.size(), true));
}

ClassFunction lefschetz_class_function(const PosetView& view) {
  if (!view.is_symmetric()) throw InvalidView("view " + view.name() + " is not closed under the symmetric group");
  const int n = view.n();
  ClassFunction chi(n);
  for (const auto& lambda : partitions_of(n)) {
    const auto g = Permutation::canonical_of_type(lambda);
    chi.set(lambda, Rational(mobius_of(view, fixed_elements(view, g))));
  }
  return chi;
}

ConcentratedCharacter concentrated_character(const PosetView& view) {
  auto h = homology(view);
  const auto degree = h.concentrated_degree();
  if (!degree) {
    std::string detail = h.is_free() ? "nonzero in " + std::to_string(h.nonzero_degrees().size()) + " degrees"
                                     : "has torsion";
    throw HomologyNotConcentrated("homology of " + view.name() + " " + detail);
  }
  auto chi = lefschetz_class_function(view);
  if (*degree % 2 != 0) chi *= Rational(-1);
  if (chi.dimension() != Rational(h.betti_at(*degree))) {
    throw std::logic_error("Lefschetz character of " + view.name() + " has dimension " +
                           to_string(chi.dimension()) + " but Betti number is " + h.betti_at(*degree).get_str());
  }
  return {*degree, std::move(chi), std::move(h)};
}

}  // namespace parthom
