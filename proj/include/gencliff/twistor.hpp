#pragma once

// The rotation family of a rank-3 Clifford triple over two Riemann spheres,
// its connection form, and the generalized complex structure on the twistor
// space M x S^2 x S^2.
//
// Only the finite stereographic chart of each sphere is covered; the point at
// infinity is never sampled.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gencliff/clifford.hpp"

namespace gencliff {

struct TwistorPoint {
  GaussianRational zeta1;
  GaussianRational zeta2;
};

using RVec3 = std::array<Rational, 3>;
using FVec3 = std::array<ScalarField, 3>;

RVec3 cross(const RVec3& a, const RVec3& b);
FVec3 cross(const FVec3& a, const FVec3& b);

/// Rows tau_1, tau_2, tau_3 of a real 3x3 matrix.
struct RotationMatrix {
  std::array<RVec3, 3> rows;
  const Rational& operator()(std::size_t i, std::size_t j) const { return rows.at(i).at(j); }
  friend bool operator==(const RotationMatrix&, const RotationMatrix&) = default;
};

/// (1 - |z|^2, -i(z - zbar), -(z + zbar)) / (1 + |z|^2).
RVec3 stereo_vec(const GaussianRational& zeta);

/// The rotation whose first row is stereo_vec(zeta), evaluated from the
/// complex formula; throws std::logic_error if an entry has an imaginary part.
RotationMatrix rot_T(const GaussianRational& zeta);
/// The second sphere uses the same matrix function.
inline RotationMatrix rot_S(const GaussianRational& zeta) { return rot_T(zeta); }

/// M^T M = Id, det M = 1 and tau_i = tau_j x tau_k for cyclic (i, j, k).
CheckReport check_rotation(const RotationMatrix& m);

/// Chart of M followed by the sphere coordinates u1, v1, u2, v2, where
/// zeta1 = u1 + i v1 and zeta2 = u2 + i v2. Throws std::invalid_argument when
/// M already uses one of those names.
ChartRef twistor_chart(const ChartRef& m);
/// The sphere coordinates alone.
ChartRef sphere_chart();

/// stereo_vec of zeta = x_u + i x_v as rational functions.
FVec3 stereo_field(std::size_t u, std::size_t v);
/// rot_T of zeta = x_u + i x_v as rational functions.
std::array<FVec3, 3> rot_field(std::size_t u, std::size_t v);

/// K_i = sum_l t_il I_l+ + s_il I_l- with T = rot_T(zeta1), S = rot_S(zeta2).
/// Throws PreconditionError when the triple fails the Clifford relations.
CliffordTriple rotate_family(const CliffordTriple& t, const TwistorPoint& p);
/// c(zeta1) . I+ + d(zeta2) . I-, built from the stereographic vectors.
EndField ihat_at(const CliffordTriple& t, const TwistorPoint& p);

/// Everything over twistor_chart(M): the stereographic vectors, the R^3-valued
/// forms omega = c x dc, the End-valued connection form and its (0,1) part.
struct ConnectionData {
  ChartRef chart;
  /// Index of u1 in chart; v1, u2, v2 follow.
  std::size_t offset = 0;
  FVec3 c;
  FVec3 d;
  std::array<KForm, 3> omega1;
  std::array<KForm, 3> omega2;
  std::array<Matrix, 3> i_plus;
  std::array<Matrix, 3> i_minus;
  Matrix g_plus;
  Matrix g_minus;
  /// c . I+ + d . I-
  Matrix ihat;
  /// Omega along du1, dv1, du2, dv2.
  std::array<Matrix, 4> omega;
  /// V^{0,1} = Omega^{0,1} / 2 along dzeta1-bar and dzeta2-bar.
  std::array<Matrix, 2> v01;
};

/// Throws PreconditionError when the triple fails the Clifford relations.
ConnectionData connection_data(const CliffordTriple& t);

/// c.c = 1, c.dc = 0 and omega x c = dc, for both spheres.
CheckReport check_unit_identity(const ConnectionData& cd);

/// [a.I+, b.I+] = 2 (a x b).I+, the same for I-, and [a.I+, b.I-] = 0.
bool check_cross_commutator(const FVec3& a, const FVec3& b, const Projections& p);

/// d Ihat = 1/2 [Omega, Ihat] along each sphere coordinate, and
/// dbar Ihat = [V^{0,1}, Ihat] along each dzeta-bar.
CheckReport check_dI_commutator(const CliffordTriple& t);
CheckReport check_dI_commutator(const ConnectionData& cd);

/// dbar V - V ^ V = 0, together with the two halves of the argument: each
/// sector's form depends on one sphere and lies in one sector, and the
/// sectors commute.
CheckReport check_flatness(const CliffordTriple& t);
CheckReport check_flatness(const ConnectionData& cd);

enum class SphereOrientation {
  /// diag(J_S, -J_S^T), the diag-type convention with J_S d_u = d_v.
  standard,
  /// diag(-J_S, J_S^T), the conjugate structure.
  anti,
};

/// The structure induced on T(S^2 x S^2) + T*(S^2 x S^2) over sphere_chart().
EndField sphere_gcs(SphereOrientation o = SphereOrientation::standard);

/// Ihat + J on twistor_chart(M). Throws PreconditionError unless the triple
/// satisfies the relations and has constant coefficients.
EndField twistor_structure(const CliffordTriple& t, SphereOrientation o = SphereOrientation::standard);

struct TwistorOptions {
  unsigned degree_bound = 0;
  SphereOrientation orientation = SphereOrientation::standard;
  /// 0 means symbolic over the sphere; otherwise this many sampled points.
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

struct TwistorReport {
  Verdict verdict = Verdict::pass;
  /// "symbolic" or "sampled".
  std::string mode;
  TensorReport nijenhuis;
  std::vector<TwistorPoint> sample_points;
  /// [alpha, v]_D = L_{rho(alpha)} v for sphere frames alpha and the
  /// sphere-dependent sections v = Ihat e_a.
  CheckReport mixed;
};

/// In sampled mode the structure is replaced by its first-order Taylor
/// polynomial in the sphere coordinates at each point, and outputs are
/// evaluated there; the Nijenhuis tensor only sees the 1-jet, so this is exact
/// at the sampled points.
TwistorReport check_twistor_integrability(const CliffordTriple& t, const TwistorOptions& opts);

/// Deterministic Gaussian-rational sphere points from a seed; (0, 0) first.
std::vector<TwistorPoint> sample_twistor_points(std::size_t count, std::uint64_t seed);

}  // namespace gencliff
