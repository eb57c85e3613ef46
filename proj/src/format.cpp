#include "format.hpp"

namespace gencliff::detail {

namespace {

bool is_negative_single_term(const ScalarField& c) {
  if (!c.is_polynomial() || c.num().size() != 1) return false;
  const GaussianRational& k = c.num().leading().second;
  return k.is_real() ? sgn(k.re()) < 0 : sgn(k.re()) == 0 && sgn(k.im()) < 0;
}

}  // namespace

std::string format_linear(const std::vector<std::pair<ScalarField, std::string>>& terms, const Chart& chart) {
  std::string out;
  for (const auto& [c, symbol] : terms) {
    if (c.is_zero()) continue;
    bool negative = is_negative_single_term(c);
    ScalarField mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag == ScalarField(1)) {
      out += symbol;
    } else if (mag.is_polynomial() && mag.num().size() == 1) {
      out += mag.to_string(chart) + "*" + symbol;
    } else {
      out += "(" + mag.to_string(chart) + ")*" + symbol;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace gencliff::detail
