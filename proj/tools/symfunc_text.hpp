#pragma once

#include <string_view>

#include "parthom/symfunc.hpp"

namespace parthom::cli {

/// Parses "3*h(2,1) - 1/2*p(2) + 1", the format SymFunc::to_string emits, or a
/// JSON object in the serialization format. Terms in different bases are
/// converted into the basis of the first term.
SymFunc parse_symfunc(std::string_view text);

/// "2,1" or "(2,1)"; "" and "()" give the empty partition.
IntPartition parse_partition(std::string_view text);

}  // namespace parthom::cli
