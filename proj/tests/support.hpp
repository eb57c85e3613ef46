#pragma once

#include <random>
#include <string>
#include <vector>

#include "gencliff/courant.hpp"
#include "gencliff/parse.hpp"
#include "random_data.hpp"

namespace gencliff::testing {

inline ChartRef R(std::size_t n) { return standard_chart(n); }

inline ScalarField P(const std::string& s, const ChartRef& c) { return parse_expr(s, *c); }

/// Section from frame text such as "x1*d2 + e1", d<k> = vector, e<k> = covector.
inline Section S(const std::string& text, const ChartRef& c) { return parse_section(text, c); }

inline Section random_section(std::mt19937_64& rng, const ChartRef& c, unsigned degree = 2, std::size_t terms = 2) {
  std::vector<ScalarField> flat;
  for (std::size_t k = 0; k < 2 * c->dim(); ++k) flat.emplace_back(random_poly(rng, c->dim(), degree, terms));
  return Section(c, flat);
}

}  // namespace gencliff::testing
