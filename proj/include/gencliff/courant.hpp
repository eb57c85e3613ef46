#pragma once

// The standard Courant algebroid TM + T*M on a chart.

#include <string>
#include <string_view>
#include <vector>

#include "gencliff/cartan.hpp"
#include "gencliff/matrix.hpp"

namespace gencliff {

/// X + xi, stored flat as (X^1..X^n, xi_1..xi_n).
class Section {
 public:
  Section(ChartRef chart, std::vector<ScalarField> flat);
  static Section zero(ChartRef chart);
  static Section from_parts(const VectorField& x, const KForm& xi);
  /// Frame section a of 2n: d/dx_a for a < n, dx^{a-n} otherwise.
  static Section frame(ChartRef chart, std::size_t a);

  const ChartRef& chart() const { return chart_; }
  std::size_t dim() const { return chart_->dim(); }
  std::size_t size() const { return flat_.size(); }
  const ScalarField& operator[](std::size_t k) const { return flat_[k]; }
  const std::vector<ScalarField>& flat() const { return flat_; }
  VectorField vec() const;
  KForm cov() const;
  bool is_zero() const;

  Section& operator+=(const Section& o);
  Section& operator-=(const Section& o);
  friend Section operator+(Section a, const Section& b) { return a += b; }
  friend Section operator-(Section a, const Section& b) { return a -= b; }
  Section operator-() const;
  friend Section operator*(const ScalarField& f, const Section& s);
  friend bool operator==(const Section& a, const Section& b);

  /// Linear combination of d<k> (vector) and e<k> (covector) frame names, 1-based.
  std::string to_string() const;

 private:
  ChartRef chart_;
  std::vector<ScalarField> flat_;
};

/// A 3-form together with its verified closedness.
class FluxForm {
 public:
  explicit FluxForm(KForm h);
  static FluxForm zero(ChartRef chart) { return FluxForm(KForm(std::move(chart), 3)); }

  const KForm& h() const { return h_; }
  bool closed() const { return closed_; }
  bool is_zero() const { return h_.is_zero(); }
  friend bool operator==(const FluxForm& a, const FluxForm& b) { return a.h_ == b.h_; }

 private:
  KForm h_;
  bool closed_;
};

/// allow skips both the error and the warning; used to exhibit Jacobi failures.
enum class FluxPolicy { reject, warn, allow };

ScalarField pairing(const Section& a, const Section& b);
/// 1/2 [[0, Id], [Id, 0]].
Matrix pairing_matrix(const Chart& chart);

/// [X+xi, Y+eta] = [X,Y] + L_X eta - i_Y d xi, by the component formula.
Section dorfman(const Section& a, const Section& b);
/// Same bracket assembled from cartan operations; used as a cross-check.
Section dorfman_via_cartan(const Section& a, const Section& b);
/// dorfman(a, b) - i_Y i_X H. A non-closed H throws NonClosedFlux under
/// FluxPolicy::reject and prints a warning under FluxPolicy::warn.
Section dorfman_twisted(const Section& a, const Section& b, const FluxForm& h,
                        FluxPolicy policy = FluxPolicy::reject);
/// Twisted bracket when `h` is non-null and nonzero, plain Dorfman otherwise.
Section bracket(const Section& a, const Section& b, const FluxForm* h);

VectorField anchor(const Section& a);

/// Frame sections times monomials of degree <= bound in `vars`, in the order
/// (monomial degree, monomial, frame index).
std::vector<Section> probe_sections(const ChartRef& chart, unsigned degree_bound,
                                    const std::vector<std::size_t>& vars = {});

struct AxiomFailure {
  std::string axiom;
  std::vector<Section> inputs;
};

struct AxiomReport {
  std::size_t jacobi_checked = 0;
  std::size_t symmetric_checked = 0;
  std::vector<AxiomFailure> failures;
  bool holds() const { return failures.empty(); }
};

/// [a,[b,c]] = [[a,b],c] + [b,[a,c]] over all ordered triples and
/// [a,a] = D<a,a> over all a, for `probes` and the bracket twisted by `h`.
/// Stops after max_failures failures. A non-closed h is handled per `policy`.
AxiomReport check_courant_axioms(const std::vector<Section>& probes, const FluxForm* h,
                                 std::size_t max_failures = 10, FluxPolicy policy = FluxPolicy::reject);
/// Df = 0 + df.
Section algebroid_differential(const ScalarField& f, const ChartRef& chart);

/// Frame text such as "x1*d2 + e1": d<k> is d/dx_k, e<k> is dx^k (1-based).
/// Throws ParseError.
Section parse_section(std::string_view text, const ChartRef& chart);

}  // namespace gencliff
