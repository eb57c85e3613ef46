#pragma once

// Generalized complex and real structures and their Nijenhuis-type tensors.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gencliff/courant.hpp"
#include "gencliff/matrix.hpp"

namespace gencliff {

/// Endomorphism of TM + T*M together with the flux of the bracket its
/// integrability is judged by (absent means the untwisted bracket).
class EndField {
 public:
  EndField(ChartRef chart, Matrix m, std::optional<FluxForm> flux = std::nullopt);
  static EndField identity(ChartRef chart, std::optional<FluxForm> flux = std::nullopt);

  const ChartRef& chart() const { return chart_; }
  const Matrix& matrix() const { return m_; }
  const std::optional<FluxForm>& flux() const { return flux_; }
  /// Null when the bracket is untwisted.
  const FluxForm* flux_ptr() const { return flux_ && !flux_->is_zero() ? &*flux_ : nullptr; }
  std::size_t size() const { return m_.rows(); }

  Section operator()(const Section& s) const;
  EndField with_flux(std::optional<FluxForm> flux) const { return EndField(chart_, m_, std::move(flux)); }
  EndField with_matrix(Matrix m) const { return EndField(chart_, std::move(m), flux_); }

  /// Sums and products require a common chart and flux.
  friend EndField operator*(const EndField& a, const EndField& b);
  friend EndField operator+(const EndField& a, const EndField& b);
  friend EndField operator-(const EndField& a, const EndField& b);
  friend EndField operator*(const ScalarField& f, const EndField& e);
  EndField operator-() const { return with_matrix(-m_); }
  /// Matrix equality; fluxes are compared by same_flux().
  friend bool operator==(const EndField& a, const EndField& b);

 private:
  ChartRef chart_;
  Matrix m_;
  std::optional<FluxForm> flux_;
};

/// Block sum of endomorphism matrices of two factors (sizes 2m and 2k), laid
/// out as (vectors of both factors, covectors of both factors).
Matrix product_block_sum(const Matrix& a, std::size_t m, const Matrix& b, std::size_t k);

/// Absent and zero fluxes are the same bracket.
bool same_flux(const std::optional<FluxForm>& a, const std::optional<FluxForm>& b);
/// Throws FluxMismatch unless same_flux(a, b).
void require_same_flux(const EndField& a, const EndField& b, std::string_view where);

bool is_orthogonal(const EndField& e);
bool is_almost_gcs(const EndField& e);
bool is_almost_real(const EndField& g);

/// N(I,J)(A,B), the symmetrized eight-term concomitant, in the structures' bracket.
Section concomitant(const EndField& i, const EndField& j, const Section& a, const Section& b);
/// [JA,JB] - J[JA,B] - J[A,JB] - [A,B].
Section nijenhuis(const EndField& j, const Section& a, const Section& b);
/// [GA,GB] - G[GA,B] - G[A,GB] + [A,B]; throws PreconditionError unless G is almost real.
Section real_nijenhuis(const EndField& g, const Section& a, const Section& b);

/// A tensor with its structures bound, ready for vanishes().
struct BoundTensor {
  std::string name;
  ChartRef chart;
  std::function<Section(const Section&, const Section&)> eval;
};

BoundTensor bind_nijenhuis(const EndField& j, std::string name = "N_J");
BoundTensor bind_concomitant(const EndField& i, const EndField& j, std::string name = "N(I,J)");
/// Checks is_almost_real once at bind time.
BoundTensor bind_real_nijenhuis(const EndField& g, std::string name = "N_G");

struct Witness {
  Section a;
  Section b;
  Section value;
};

struct TensorReport {
  std::string name;
  std::vector<Witness> witnesses;
  bool vanished = true;
  unsigned degree_bound = 0;
  std::size_t sample_count = 0;
};

struct VanishOptions {
  unsigned degree_bound = 2;
  std::size_t max_witnesses = 10;
  /// Coordinates allowed in the monomial multipliers; empty means all.
  std::vector<std::size_t> vars;
};

/// Evaluates the tensor on all ordered pairs of probe sections; stops after
/// max_witnesses nonzero outputs.
TensorReport vanishes(const BoundTensor& t, const VanishOptions& opts);
TensorReport vanishes(const BoundTensor& t, unsigned degree_bound);

/// [[-g^-1 b, g^-1], [g - b g^-1 b, b g^-1]]; throws PreconditionError when g is
/// singular, not symmetric, or b is not antisymmetric.
EndField generalized_metric(const ChartRef& chart, const Matrix& g, const Matrix& b);
/// e^B = [[Id, 0], [B^, Id]] with B^(X) = i_X B.
Matrix bfield_matrix(const KForm& b);
/// e^B E e^-B; flux becomes E's flux plus dB.
EndField bfield_transform(const EndField& e, const KForm& b);
/// {e_a + sign * G e_a} over the frame, each checked to satisfy G(out) = sign * out.
std::vector<Section> eigen_sections(const EndField& g, int sign);

struct IdentityCheck {
  std::string name;
  Section lhs;
  Section rhs;
  bool equal;
};

/// Both sides of the two product/mixed Nijenhuis expansions for anticommuting
/// almost complex I, J and of the N(I, IJ) expansion. Throws
/// PreconditionError unless I^2 = J^2 = -Id and IJ + JI = 0.
std::vector<IdentityCheck> anticommuting_identities(const EndField& i, const EndField& j, const Section& a, const Section& b);

}  // namespace gencliff
