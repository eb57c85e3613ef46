#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gencliff/scalar.hpp"

namespace gencliff::detail {

/// Prints sum_k c_k * symbol_k in a form parse_linear accepts; "0" when empty.
std::string format_linear(const std::vector<std::pair<ScalarField, std::string>>& terms, const Chart& chart);

}  // namespace gencliff::detail
