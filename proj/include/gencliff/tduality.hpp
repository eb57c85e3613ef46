#pragma once

// Orthogonal Courant isomorphisms and the transport of Clifford triples along
// them. The only concrete isomorphism is the flat-torus factor swap with zero
// flux on both sides, which intertwines the brackets on sections that do not
// depend on the dualized coordinates.

#include <optional>
#include <string>
#include <vector>

#include "gencliff/clifford.hpp"
#include "gencliff/twistor.hpp"

namespace gencliff {

class CourantIso {
 public:
  /// Throws std::invalid_argument on a size mismatch or an out-of-range
  /// coordinate, PreconditionError unless `m` is constant, invertible and
  /// preserves the pairing.
  CourantIso(ChartRef chart, Matrix m, std::optional<FluxForm> source_flux, std::optional<FluxForm> target_flux,
             std::vector<std::size_t> invariant_coords);

  const ChartRef& chart() const { return chart_; }
  const Matrix& matrix() const { return m_; }
  const Matrix& inverse() const { return inv_; }
  const std::optional<FluxForm>& source_flux() const { return source_; }
  const std::optional<FluxForm>& target_flux() const { return target_; }
  const std::vector<std::size_t>& invariant_coords() const { return invariant_; }

  Section operator()(const Section& s) const;
  /// True when f does not depend on any dualized coordinate.
  bool is_invariant(const ScalarField& f) const;
  bool is_invariant(const Section& s) const;
  bool is_invariant(const Matrix& m) const;

 private:
  ChartRef chart_;
  Matrix m_;
  Matrix inv_;
  std::optional<FluxForm> source_;
  std::optional<FluxForm> target_;
  std::vector<std::size_t> invariant_;
};

/// Swaps d/dx_k and dx^k for k = dual_index; identity elsewhere, zero flux.
/// Throws std::out_of_range when dual_index >= n.
CourantIso make_torus_duality(const ChartRef& chart, std::size_t dual_index);

/// Phi^T P Phi = P.
bool check_orthogonality(const CourantIso& phi);

struct IntertwineWitness {
  Section a;
  Section b;
  /// Phi [A, B]_H
  Section lhs;
  /// [Phi A, Phi B]_H~
  Section rhs;
};

struct IntertwineReport {
  std::size_t pairs_checked = 0;
  std::vector<IntertwineWitness> witnesses;
  /// Diagnostics for supplied pairs that depend on a dualized coordinate.
  std::vector<std::string> rejected;
  bool holds() const { return witnesses.empty(); }
};

/// All ordered pairs of frame sections times monomials of degree <= bound in
/// the coordinates that are not dualized.
IntertwineReport check_intertwine(const CourantIso& phi, unsigned degree_bound, std::size_t max_witnesses = 10);
/// The supplied pairs; non-invariant pairs are skipped and listed in `rejected`.
IntertwineReport check_intertwine(const CourantIso& phi, const std::vector<std::pair<Section, Section>>& pairs,
                                  std::size_t max_witnesses = 10);

/// Phi E Phi^-1 judged by the target flux. Throws FluxMismatch unless E's
/// flux is the source flux, PreconditionError when E depends on a dualized
/// coordinate.
EndField conjugate(const CourantIso& phi, const EndField& e);
CliffordTriple conjugate(const CourantIso& phi, const CliffordTriple& t);
InducedStructures conjugate(const CourantIso& phi, const InducedStructures& ind);

/// N(I~, J~)(Phi A, Phi B) = Phi N(I, J)(A, B) on each invariant pair.
CheckReport check_concomitant_transport(const CourantIso& phi, const EndField& i, const EndField& j,
                                        const std::vector<std::pair<Section, Section>>& pairs);

struct NaturalityReport {
  Verdict verdict = Verdict::pass;
  bool orthogonal = true;
  IntertwineReport intertwine;
  /// Relations of the conjugated triple.
  CheckReport relations;
  std::array<TensorReport, 3> integrability;
  /// Concomitants of generator pairs carried along Phi.
  CheckReport transport;
  /// induce and project commute with conjugation.
  CheckReport induced;
  /// rotate_family commutes with conjugation, per point and member.
  CheckReport rotations;
  std::vector<TwistorPoint> points;
};

/// Runs every transport check for `t` along `phi` at the given sphere points.
/// Throws PreconditionError when t fails the relations or depends on a
/// dualized coordinate.
NaturalityReport check_naturality(const CourantIso& phi, const CliffordTriple& t,
                                  const std::vector<TwistorPoint>& points, unsigned degree_bound);

}  // namespace gencliff
