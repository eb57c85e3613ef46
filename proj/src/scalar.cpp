#include "gencliff/scalar.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "gencliff/errors.hpp"

namespace gencliff {

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// GaussianRational

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (is_real()) return GaussianRational(Rational(1 / re_));
  Rational n = norm();
  return {Rational(re_ / n), Rational(-im_ / n)};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string GaussianRational::to_string() const {
  if (is_real()) return re_.get_str();
  std::string im_part = im_ == 1 ? "i" : im_ == -1 ? "-i" : im_.get_str() + "*i";
  if (sgn(re_) == 0) return im_part;
  std::string out = "(" + re_.get_str();
  if (sgn(im_) > 0) {
    out += " + " + im_part;
  } else {
    Rational a = -im_;
    out += " - " + (a == 1 ? std::string("i") : a.get_str() + "*i");
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::var(std::size_t index, unsigned power) {
  if (index >= kMaxVars) throw std::out_of_range("variable index exceeds kMaxVars");
  if (power > 255) throw std::overflow_error("monomial exponent overflow");
  Monomial m;
  m.exps_[index] = static_cast<std::uint8_t>(power);
  m.degree_ = static_cast<std::uint16_t>(power);
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned e = unsigned(exps_[i]) + o.exps_[i];
    if (e > 255) throw std::overflow_error("monomial exponent overflow");
    r.exps_[i] = static_cast<std::uint8_t>(e);
  }
  r.degree_ = static_cast<std::uint16_t>(degree_ + o.degree_);
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (degree_ > o.degree_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = static_cast<std::uint8_t>(exps_[i] - o.exps_[i]);
  r.degree_ = static_cast<std::uint16_t>(degree_ - o.degree_);
  return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial r;
  unsigned d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exps_[i] = std::min(exps_[i], o.exps_[i]);
    d += r.exps_[i];
  }
  r.degree_ = static_cast<std::uint16_t>(d);
  return r;
}

Monomial Monomial::without(std::size_t index) const {
  Monomial r = *this;
  r.degree_ = static_cast<std::uint16_t>(r.degree_ - r.exps_[index]);
  r.exps_[index] = 0;
  return r;
}

Monomial Monomial::remap(std::span<const int> new_index) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exps_[i] == 0) continue;
    if (i >= new_index.size() || new_index[i] < 0)
      throw std::invalid_argument("remap drops a variable that is in use");
    r.exps_[static_cast<std::size_t>(new_index[i])] = exps_[i];
  }
  r.degree_ = degree_;
  return r;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  if (degree_ != o.degree_) return degree_ <=> o.degree_;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps_[i] != o.exps_[i]) return exps_[i] <=> o.exps_[i];
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Poly

namespace {

bool term_greater(const Poly::Term& a, const Poly::Term& b) { return a.first > b.first; }

}  // namespace

Poly::Poly(GaussianRational c) {
  if (!c.is_zero()) terms_.emplace_back(Monomial{}, std::move(c));
}

Poly Poly::variable(std::size_t index) { return term(Monomial::var(index), GaussianRational(1)); }

Poly Poly::term(Monomial m, GaussianRational c) {
  Poly p;
  if (!c.is_zero()) p.terms_.emplace_back(m, std::move(c));
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  Poly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].first.is_one() && terms_[0].second.is_one();
}

GaussianRational Poly::constant_value() const {
  if (!is_constant()) throw std::logic_error("polynomial is not constant");
  return terms_.empty() ? GaussianRational(0) : terms_[0].second;
}

unsigned Poly::total_degree() const { return terms_.empty() ? 0 : terms_.front().first.degree(); }

unsigned Poly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

bool Poly::uses_var(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.first[var] != 0; });
}

Monomial Poly::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial g = terms_[0].first;
  for (std::size_t k = 1; k < terms_.size() && !g.is_one(); ++k) g = g.gcd(terms_[k].first);
  return g;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() && b != o.terms_.end()) {
    auto cmp = a->first <=> b->first;
    if (cmp > 0) {
      out.push_back(std::move(*a++));
    } else if (cmp < 0) {
      out.push_back(*b++);
    } else {
      a->second += b->second;
      if (!a->second.is_zero()) out.push_back(std::move(*a));
      ++a;
      ++b;
    }
  }
  for (; a != terms_.end(); ++a) out.push_back(std::move(*a));
  for (; b != o.terms_.end(); ++b) out.push_back(*b);
  terms_ = std::move(out);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Poly Poly::scaled(const GaussianRational& c) const {
  if (c.is_zero()) return {};
  if (c.is_one()) return *this;
  Poly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

Poly Poly::shifted(const Monomial& m) const {
  if (m.is_one()) return *this;
  Poly r = *this;
  for (auto& t : r.terms_) t.first = t.first * m;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (a.terms_.size() == 1) return b.shifted(a.terms_[0].first).scaled(a.terms_[0].second);
  if (b.terms_.size() == 1) return a.shifted(b.terms_[0].first).scaled(b.terms_[0].second);
  std::vector<Poly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) prod.emplace_back(ma * mb, ca * cb);
  return Poly::from_terms(std::move(prod));
}

Poly Poly::diff(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& [m, c] : terms_) {
    unsigned e = m[var];
    if (e == 0) continue;
    Monomial lowered = m / Monomial::var(var);
    out.emplace_back(lowered, c * GaussianRational(long(e)));
  }
  // Lowering one exponent keeps the relative order of distinct monomials
  // that all contain `var`, so `out` is already sorted.
  Poly p;
  p.terms_ = std::move(out);
  return p;
}

Poly Poly::conj() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = t.second.conj();
  return r;
}

Poly Poly::remap(std::span<const int> new_index) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.emplace_back(m.remap(new_index), c);
  return from_terms(std::move(out));
}

GaussianRational Poly::eval(std::span<const GaussianRational> point) const {
  GaussianRational acc;
  for (const auto& [m, c] : terms_) {
    GaussianRational v = c;
    for (std::size_t i = 0; i < kMaxVars && i < point.size(); ++i)
      for (unsigned e = 0; e < m[i]; ++e) v *= point[i];
    for (std::size_t i = point.size(); i < kMaxVars; ++i)
      if (m[i] != 0) throw std::out_of_range("evaluation point too short");
    acc += v;
  }
  return acc;
}

Poly Poly::substitute(std::size_t var, const GaussianRational& value) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    GaussianRational v = c;
    for (unsigned e = 0; e < m[var]; ++e) v *= value;
    out.emplace_back(m.without(var), std::move(v));
  }
  return from_terms(std::move(out));
}

Poly Poly::monic() const {
  if (terms_.empty() || terms_[0].second.is_one()) return *this;
  return scaled(terms_[0].second.inverse());
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (terms_.empty()) return Poly{};
  if (d.is_constant()) return scaled(d.constant_value().inverse());
  const auto& [dm, dc] = d.leading();
  GaussianRational dc_inv = dc.inverse();
  if (d.is_monomial()) {
    Poly q;
    q.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      if (!dm.divides(m)) return std::nullopt;
      q.terms_.emplace_back(m / dm, c * dc_inv);
    }
    return q;
  }
  Poly r = *this;
  Poly q;
  while (!r.is_zero()) {
    const auto& [rm, rc] = r.leading();
    if (!dm.divides(rm)) return std::nullopt;
    Term t{rm / dm, rc * dc_inv};
    r -= d.shifted(t.first).scaled(t.second);
    q.terms_.push_back(std::move(t));
  }
  return q;
}

std::string Poly::to_string(const Chart& chart) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += chart.name(i);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    bool negative = (c.is_real() && sgn(c.re()) < 0) || (sgn(c.re()) == 0 && sgn(c.im()) < 0);
    GaussianRational mag = negative ? -c : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      os << mag.to_string();
    } else if (mag.is_one()) {
      os << mono;
    } else {
      os << mag.to_string() << "*" << mono;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Multivariate gcd over Q(i): recursive primitive PRS.

namespace {

/// Coefficients of p as a polynomial in `var` (index = degree), with `var`
/// removed from each coefficient.
std::vector<Poly> coefficients_in(const Poly& p, std::size_t var) {
  std::vector<std::vector<Poly::Term>> buckets(p.degree_in(var) + 1);
  for (const auto& [m, c] : p.terms()) buckets[m[var]].emplace_back(m.without(var), c);
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Poly::from_terms(std::move(b)));
  return out;
}

Poly leading_coefficient_in(const Poly& p, std::size_t var) {
  unsigned d = p.degree_in(var);
  std::vector<Poly::Term> out;
  for (const auto& [m, c] : p.terms())
    if (m[var] == d) out.emplace_back(m.without(var), c);
  return Poly::from_terms(std::move(out));
}

Poly content_in(const Poly& p, std::size_t var) {
  Poly g;
  for (const Poly& c : coefficients_in(p, var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return Poly(1);
  }
  return g;
}

Poly exact(const Poly& a, const Poly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw std::logic_error("internal: inexact division in gcd");
  return *q;
}

Poly primitive_part_in(const Poly& p, std::size_t var) {
  Poly c = content_in(p, var);
  return c.is_constant() ? p : exact(p, c);
}

Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t var) {
  unsigned db = b.degree_in(var);
  Poly lcb = leading_coefficient_in(b, var);
  Poly r = a;
  while (!r.is_zero()) {
    unsigned dr = r.degree_in(var);
    if (dr < db) break;
    Poly lcr = leading_coefficient_in(r, var);
    r = r * lcb - lcr.shifted(Monomial::var(var, dr - db)) * b;
  }
  return r;
}

Poly gcd_primitive_monomial_free(const Poly& a, const Poly& b) {
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a.monic() == b.monic()) return a.monic();

  // A variable present in only one argument cannot occur in the gcd.
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    bool ua = a.uses_var(v);
    bool ub = b.uses_var(v);
    if (ua == ub) continue;
    const Poly& with = ua ? a : b;
    Poly g = ua ? b : a;
    for (const Poly& c : coefficients_in(with, v)) {
      if (c.is_zero()) continue;
      g = gcd(g, c);
      if (g.is_constant()) return Poly(1);
    }
    return g.monic();
  }

  std::size_t var = kMaxVars;
  unsigned best = ~0u;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    if (!a.uses_var(v)) continue;
    unsigned d = std::max(a.degree_in(v), b.degree_in(v));
    if (d < best) {
      best = d;
      var = v;
    }
  }

  Poly ca = content_in(a, var);
  Poly cb = content_in(b, var);
  Poly c = gcd(ca, cb);
  Poly pa = ca.is_constant() ? a : exact(a, ca);
  Poly pb = cb.is_constant() ? b : exact(b, cb);
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);

  while (true) {
    Poly r = pseudo_remainder(pa, pb, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) {
      pb = Poly(1);
      break;
    }
    pa = std::move(pb);
    pb = primitive_part_in(r, var);
  }
  return (c * primitive_part_in(pb, var)).monic();
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  Monomial ma = a.monomial_content();
  Monomial mb = b.monomial_content();
  Monomial mg = ma.gcd(mb);
  Poly a1 = ma.is_one() ? a : exact(a, Poly::term(ma, 1));
  Poly b1 = mb.is_one() ? b : exact(b, Poly::term(mb, 1));
  return gcd_primitive_monomial_free(a1, b1).shifted(mg);
}

// ---------------------------------------------------------------------------
// ScalarField

ScalarField ScalarField::ratio(Poly num, Poly den) {
  if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
  ScalarField f;
  if (num.is_zero()) return f;
  if (den.is_constant()) {
    f.num_ = num.scaled(den.constant_value().inverse());
    return f;
  }
  Poly g = gcd(num, den);
  if (!g.is_constant()) {
    num = exact(num, g);
    den = exact(den, g);
  }
  GaussianRational lc_inv = den.leading().second.inverse();
  f.num_ = num.scaled(lc_inv);
  f.den_ = den.scaled(lc_inv);
  return f;
}

ScalarField& ScalarField::operator+=(const ScalarField& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (is_polynomial() && o.is_polynomial()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    Poly n = num_ + o.num_;
    if (n.is_zero()) return *this = ScalarField();
    Poly g = gcd(n, den_);
    if (g.is_constant()) {
      num_ = std::move(n);
    } else {
      num_ = exact(n, g);
      den_ = exact(den_, g);
    }
    return *this;
  }
  Poly g = gcd(den_, o.den_);
  Poly b1 = exact(den_, g);
  Poly d1 = exact(o.den_, g);
  Poly n = num_ * d1 + o.num_ * b1;
  if (n.is_zero()) return *this = ScalarField();
  Poly d = den_ * d1;
  Poly g2 = gcd(n, g);
  if (!g2.is_constant()) {
    n = exact(n, g2);
    d = exact(d, g2);
  }
  num_ = std::move(n);
  den_ = std::move(d);
  return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& o) { return *this += -o; }

ScalarField ScalarField::operator-() const {
  ScalarField r = *this;
  r.num_ = -r.num_;
  return r;
}

ScalarField& ScalarField::operator*=(const ScalarField& o) {
  if (is_zero() || o.is_zero()) return *this = ScalarField();
  if (is_polynomial() && o.is_polynomial()) {
    num_ = num_ * o.num_;
    return *this;
  }
  if (o.is_constant()) {
    num_ = num_.scaled(o.num_.constant_value());
    return *this;
  }
  if (is_constant()) {
    GaussianRational c = num_.constant_value();
    *this = o;
    num_ = num_.scaled(c);
    return *this;
  }
  Poly a = num_;
  Poly b = den_;
  Poly c = o.num_;
  Poly d = o.den_;
  if (!d.is_one()) {
    Poly g1 = gcd(a, d);
    if (!g1.is_constant()) {
      a = exact(a, g1);
      d = exact(d, g1);
    }
  }
  if (!b.is_one()) {
    Poly g2 = gcd(c, b);
    if (!g2.is_constant()) {
      c = exact(c, g2);
      b = exact(b, g2);
    }
  }
  num_ = a * c;
  den_ = b * d;
  return *this;
}

ScalarField& ScalarField::operator/=(const ScalarField& o) {
  if (o.is_zero()) throw std::domain_error("division by the zero polynomial");
  ScalarField inv;
  GaussianRational lc_inv = o.num_.leading().second.inverse();
  inv.num_ = o.den_.scaled(lc_inv);
  inv.den_ = o.num_.scaled(lc_inv);
  return *this *= inv;
}

ScalarField ScalarField::diff(std::size_t var) const {
  if (is_polynomial()) return ScalarField(num_.diff(var));
  Poly n = num_.diff(var) * den_ - num_ * den_.diff(var);
  return ratio(std::move(n), den_ * den_);
}

ScalarField ScalarField::conj() const {
  ScalarField r;
  r.num_ = num_.conj();
  r.den_ = den_.conj();
  return r;
}

ScalarField ScalarField::remap(std::span<const int> new_index) const {
  ScalarField r;
  r.num_ = num_.remap(new_index);
  r.den_ = den_.remap(new_index);
  // A reordering remap can change which term leads; restore a monic denominator.
  const GaussianRational lead = r.den_.leading().second;
  if (!(lead == GaussianRational(1))) {
    GaussianRational inv = lead.inverse();
    r.num_ = r.num_.scaled(inv);
    r.den_ = r.den_.scaled(inv);
  }
  return r;
}

GaussianRational ScalarField::eval(std::span<const GaussianRational> point) const {
  GaussianRational d = den_.eval(point);
  if (d.is_zero()) throw std::domain_error("rational function has a pole at the evaluation point");
  return num_.eval(point) / d;
}

ScalarField ScalarField::substitute(std::size_t var, const GaussianRational& value) const {
  if (!uses_var(var)) return *this;
  return ratio(num_.substitute(var, value), den_.substitute(var, value));
}

std::string ScalarField::to_string(const Chart& chart) const {
  if (is_polynomial()) return num_.to_string(chart);
  return "(" + num_.to_string(chart) + ")/(" + den_.to_string(chart) + ")";
}

ScalarField ratfunc_normalize(Poly num, Poly den) { return ScalarField::ratio(std::move(num), std::move(den)); }

ScalarField poly_diff(const ScalarField& f, std::size_t coord, const Chart& chart) {
  if (coord >= chart.dim()) throw std::out_of_range("coordinate index out of range");
  return f.diff(coord);
}

// ---------------------------------------------------------------------------
// Chart

namespace {

bool is_reserved(const std::string& name) {
  if (name == "i") return true;
  if (name.size() >= 2 && (name[0] == 'd' || name[0] == 'e'))
    return std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; });
  return false;
}

bool is_identifier(const std::string& name) {
  if (name.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto alnum = [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); };
  return alpha(name[0]) && std::all_of(name.begin() + 1, name.end(), alnum);
}

}  // namespace

Chart::Chart(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("chart dimension must be at least 1");
  if (names_.size() > kMaxVars)
    throw std::invalid_argument("chart dimension exceeds " + std::to_string(kMaxVars));
  for (std::size_t a = 0; a < names_.size(); ++a) {
    if (!is_identifier(names_[a])) throw std::invalid_argument("invalid coordinate name '" + names_[a] + "'");
    if (is_reserved(names_[a])) throw std::invalid_argument("reserved coordinate name '" + names_[a] + "'");
    for (std::size_t b = 0; b < a; ++b)
      if (names_[a] == names_[b]) throw std::invalid_argument("duplicate coordinate name '" + names_[a] + "'");
  }
}

Chart Chart::standard(std::size_t dim, std::string_view prefix) {
  std::vector<std::string> names;
  for (std::size_t k = 1; k <= dim; ++k) names.push_back(std::string(prefix) + std::to_string(k));
  return Chart(std::move(names));
}

std::optional<std::size_t> Chart::index_of(std::string_view name) const {
  for (std::size_t k = 0; k < names_.size(); ++k)
    if (names_[k] == name) return k;
  return std::nullopt;
}

ChartRef make_chart(std::vector<std::string> names) { return std::make_shared<const Chart>(std::move(names)); }

ChartRef standard_chart(std::size_t dim, std::string_view prefix) {
  return std::make_shared<const Chart>(Chart::standard(dim, prefix));
}

bool same_chart(const ChartRef& a, const ChartRef& b) { return a == b || (a && b && *a == *b); }

void require_same_chart(const ChartRef& a, const ChartRef& b, std::string_view where) {
  if (!same_chart(a, b)) throw ChartMismatch(std::string(where) + ": operands live on different charts");
}

}  // namespace gencliff
