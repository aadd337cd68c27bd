#pragma once

#include <json.hpp>

#include "parthom/int_partition.hpp"
#include "parthom/symfunc.hpp"

namespace parthom {

using Json = nlohmann::ordered_json;

/// {"basis":"h","terms":[{"partition":[2,1],"coeff":"3"}, ...]}, terms in
/// canonical partition order, coefficients as "a" or "a/b".
Json symfunc_to_json(const SymFunc& f);
/// Inverse of symfunc_to_json; throws std::invalid_argument on malformed input.
SymFunc symfunc_from_json(const Json& j);

/// Machine-sized integers as JSON numbers, larger ones as decimal strings.
Json integer_to_json(const Integer& v);
/// Accepts either form; throws std::invalid_argument otherwise.
Integer integer_from_json(const Json& j);

Json partition_to_json(const IntPartition& lambda);
IntPartition partition_from_json(const Json& j);

}  // namespace parthom
