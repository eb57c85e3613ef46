#pragma once

// Exact coefficient ring: Gaussian rationals, sparse multivariate polynomials
// over them, and normalized rational functions.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gencliff {

using Rational = mpq_class;

std::string to_string(const Rational& q);

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return sgn(im_) == 0 && re_ == 1; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {Rational(-re_), Rational(-im_)}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector. Ordered graded-lexicographically with x1 > x2 > ... .
class Monomial {
 public:
  Monomial() = default;
  static Monomial var(std::size_t index, unsigned power = 1);

  unsigned operator[](std::size_t index) const { return exps_[index]; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// Quotient this / o; requires o.divides(*this).
  Monomial operator/(const Monomial& o) const;
  Monomial gcd(const Monomial& o) const;
  /// Removes variable `index` entirely.
  Monomial without(std::size_t index) const;
  Monomial remap(std::span<const int> new_index) const;

  std::strong_ordering operator<=>(const Monomial& o) const;
  bool operator==(const Monomial& o) const = default;

 private:
  std::array<std::uint8_t, kMaxVars> exps_{};
  std::uint16_t degree_ = 0;
};

class Chart;

/// Sparse multivariate polynomial with Gaussian-rational coefficients. Terms
/// are kept sorted with the leading (largest) monomial first and no zero
/// coefficients.
class Poly {
 public:
  using Term = std::pair<Monomial, GaussianRational>;

  Poly() = default;
  Poly(GaussianRational c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(GaussianRational(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly variable(std::size_t index);
  static Poly term(Monomial m, GaussianRational c);
  /// Sorts and combines arbitrary terms.
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  GaussianRational constant_value() const;
  const Term& leading() const { return terms_.front(); }

  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;
  bool uses_var(std::size_t var) const;
  /// Componentwise minimum of all exponent vectors.
  Monomial monomial_content() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  Poly scaled(const GaussianRational& c) const;
  Poly shifted(const Monomial& m) const;

  Poly diff(std::size_t var) const;
  Poly conj() const;
  Poly remap(std::span<const int> new_index) const;
  GaussianRational eval(std::span<const GaussianRational> point) const;
  /// Substitutes constants for the listed variables; others are untouched.
  Poly substitute(std::size_t var, const GaussianRational& value) const;

  /// Makes the leading coefficient 1 (zero stays zero).
  Poly monic() const;
  /// Returns q with q * d == *this, or nullopt when d does not divide.
  std::optional<Poly> divide_exact(const Poly& d) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  std::string to_string(const Chart& chart) const;

 private:
  std::vector<Term> terms_;
};

/// Monic greatest common divisor over Q(i)[x1..xn]; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// Exact rational function num/den with gcd(num, den) = 1 and a monic
/// denominator, so structural equality decides mathematical equality.
class ScalarField {
 public:
  ScalarField() : den_(1) {}
  ScalarField(Poly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  ScalarField(GaussianRational c) : num_(std::move(c)), den_(1) {}  // NOLINT(google-explicit-constructor)
  ScalarField(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)

  /// Normalizes num/den; throws std::domain_error when den is zero.
  static ScalarField ratio(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return is_polynomial() && num_.is_constant(); }
  GaussianRational constant_value() const { return num_.constant_value(); }

  ScalarField& operator+=(const ScalarField& o);
  ScalarField& operator-=(const ScalarField& o);
  ScalarField& operator*=(const ScalarField& o);
  ScalarField& operator/=(const ScalarField& o);
  friend ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
  friend ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
  friend ScalarField operator*(ScalarField a, const ScalarField& b) { return a *= b; }
  friend ScalarField operator/(ScalarField a, const ScalarField& b) { return a /= b; }
  ScalarField operator-() const;

  ScalarField diff(std::size_t var) const;
  ScalarField conj() const;
  ScalarField remap(std::span<const int> new_index) const;
  GaussianRational eval(std::span<const GaussianRational> point) const;
  ScalarField substitute(std::size_t var, const GaussianRational& value) const;
  bool uses_var(std::size_t var) const { return num_.uses_var(var) || den_.uses_var(var); }

  friend bool operator==(const ScalarField& a, const ScalarField& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(const Chart& chart) const;

 private:
  Poly num_;
  Poly den_;
};

/// Coordinate chart: n distinct identifiers. "i" is reserved for the
/// imaginary unit and the names "d<k>"/"e<k>" for frame sections.
class Chart {
 public:
  explicit Chart(std::vector<std::string> names);
  static Chart standard(std::size_t dim, std::string_view prefix = "x");

  std::size_t dim() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const Chart& o) const = default;

 private:
  std::vector<std::string> names_;
};

using ChartRef = std::shared_ptr<const Chart>;

ChartRef make_chart(std::vector<std::string> names);
ChartRef standard_chart(std::size_t dim, std::string_view prefix = "x");
bool same_chart(const ChartRef& a, const ChartRef& b);
void require_same_chart(const ChartRef& a, const ChartRef& b, std::string_view where);

/// Normalizes a raw num/den pair. Throws std::domain_error for den == 0.
ScalarField ratfunc_normalize(Poly num, Poly den);
/// Partial derivative in coordinate `coord` of `chart`.
ScalarField poly_diff(const ScalarField& f, std::size_t coord, const Chart& chart);

}  // namespace gencliff
