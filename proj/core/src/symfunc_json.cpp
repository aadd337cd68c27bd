#include "parthom/json.hpp"

namespace parthom {

Json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

Json partition_to_json(const IntPartition& lambda) {
  Json arr = Json::array();
  for (int p : lambda.parts()) arr.push_back(p);
  return arr;
}

IntPartition partition_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition must be a JSON array");
  std::vector<int> parts;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw std::invalid_argument("partition parts must be integers");
    parts.push_back(x.get<int>());
  }
  return IntPartition(std::move(parts));
}

Json symfunc_to_json(const SymFunc& f) {
  Json terms = Json::array();
  for (const auto& [lambda, c] : f.terms()) {
    Json t;
    t["partition"] = partition_to_json(lambda);
    t["coeff"] = to_string(c);
    terms.push_back(std::move(t));
  }
  Json out;
  out["basis"] = std::string(basis_name(f.basis()));
  out["terms"] = std::move(terms);
  return out;
}

SymFunc symfunc_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("basis") || !j.contains("terms") || !j["basis"].is_string() ||
      !j["terms"].is_array()) {
    throw std::invalid_argument("SymFunc JSON needs string 'basis' and array 'terms'");
  }
  SymFunc f(parse_basis(j["basis"].get<std::string>()));
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("partition") || !t.contains("coeff") || !t["coeff"].is_string()) {
      throw std::invalid_argument("SymFunc term needs 'partition' and string 'coeff'");
    }
    f.add_term(partition_from_json(t["partition"]), parse_rational(t["coeff"].get<std::string>()));
  }
  return f;
}

}  // namespace parthom
