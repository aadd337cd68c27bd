#pragma once

#include <map>
#include <optional>
#include <string>
#include <stdexcept>
#include <vector>

#include "parthom/chain_complex.hpp"
#include "parthom/class_function.hpp"
#include "parthom/json.hpp"
#include "parthom/poset_view.hpp"

namespace parthom {

/// Reduced integral homology, degrees -1 through the top dimension.
struct HomologyResult {
  std::string view;
  std::map<int, Integer> betti;
  /// Invariant factors > 1 per degree; degrees without torsion are absent.
  std::map<int, std::vector<Integer>> torsion;

  bool is_free() const { return torsion.empty(); }
  /// Degrees with a nonzero Betti number or torsion.
  std::vector<int> nonzero_degrees() const;
  /// The single degree carrying homology, if homology is free and lives in one degree.
  std::optional<int> concentrated_degree() const;
  Integer betti_at(int d) const;
  /// sum_d (-1)^d betti_d.
  Integer reduced_euler_characteristic() const;

  friend bool operator==(const HomologyResult&, const HomologyResult&) = default;
};

Json homology_to_json(const HomologyResult& h);
HomologyResult homology_from_json(const Json& j);

/// Homology by Smith normal form of every boundary map.
HomologyResult homology(const ChainComplex& cc, std::string view_name = {});
HomologyResult homology(const PosetView& view);

/// Reduced Betti numbers over Q from exact rational ranks.
std::map<int, Integer> rational_betti(const ChainComplex& cc);

/// mu(0,1) of the view with both bounds adjoined.
Integer mobius_number(const PosetView& view);

/// Lefschetz character: at each cycle type, the reduced Euler characteristic
/// of the subcomplex fixed by the canonical permutation of that type.
/// Throws InvalidView if the view is not closed under S_n.
ClassFunction lefschetz_class_function(const PosetView& view);

class HomologyNotConcentrated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ConcentratedCharacter {
  int degree = 0;
  ClassFunction character;
  HomologyResult homology;
};

/// Character of the only nonzero homology group. Throws HomologyNotConcentrated
/// if homology is spread over several degrees, vanishes, or has torsion.
ConcentratedCharacter concentrated_character(const PosetView& view);

}  // namespace parthom
