#pragma once

// The verification input: a chart, an optional flux, a Clifford triple given
// explicitly or by builtin name, and the T-duality index.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gencliff/clifford.hpp"

namespace gencliff::cli {

/// Malformed or invalid input. `where` is "line L, column C" for syntax
/// errors and a JSON pointer (plus the offset inside an expression string)
/// for semantic ones.
class InputError : public std::runtime_error {
 public:
  InputError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

struct Model {
  ChartRef chart;
  /// Absent or zero means the untwisted bracket. May be non-closed.
  std::optional<FluxForm> flux;
  CliffordTriple triple;
  /// Set when the triple came from a builtin.
  std::string builtin;
  std::optional<std::size_t> dual_index;
};

/// Parses the JSON document. A non-empty `builtin_override` replaces any
/// "triple" or "builtin" in the document. Throws InputError.
Model load_model(std::string_view json_text, std::string_view builtin_override = {});

/// A model from a builtin name alone. Throws InputError.
Model builtin_model(std::string_view name);

/// Flux terms "coeff*e1^e2^e3" separated by ';' (1-based, as in sections),
/// for the bracket calculator. Throws InputError.
FluxForm parse_flux_spec(std::string_view spec, const ChartRef& chart);

/// "3" gives x1, x2, x3; otherwise a comma-separated list of names.
ChartRef parse_chart_spec(std::string_view spec);

/// FNV-1a, 64 bit.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace gencliff::cli
