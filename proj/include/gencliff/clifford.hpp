#pragma once

// Rank-3 generalized Clifford triples and the bi-quaternion structures they induce.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gencliff/gcs.hpp"

namespace gencliff {

/// Totally antisymmetric symbol on {0,1,2} with epsilon(0,1,2) = +1.
int levi_civita(std::size_t i, std::size_t j, std::size_t k);

struct CheckEntry {
  std::string name;
  bool holds;
};

struct CheckReport {
  std::vector<CheckEntry> entries;

  bool ok() const;
  void add(std::string name, bool holds) { entries.push_back({std::move(name), holds}); }
  /// Names of the failing entries.
  std::vector<std::string> failures() const;
};

struct TripleStatus {
  std::optional<bool> relations;
  std::array<std::optional<bool>, 3> integrable;
};

/// Three structures sharing a chart and a flux.
class CliffordTriple {
 public:
  CliffordTriple(EndField i1, EndField i2, EndField i3);

  const EndField& operator[](std::size_t k) const { return gens_.at(k); }
  const std::array<EndField, 3>& generators() const { return gens_; }
  const ChartRef& chart() const { return gens_[0].chart(); }
  const std::optional<FluxForm>& flux() const { return gens_[0].flux(); }
  const TripleStatus& status() const { return status_; }
  TripleStatus& status() { return status_; }

 private:
  std::array<EndField, 3> gens_;
  TripleStatus status_;
};

/// I_i I_j + I_j I_i = -2 delta_ij Id for the six unordered pairs; records the
/// result in the triple's status.
CheckReport check_relations(CliffordTriple& t);
CheckReport check_relations(const CliffordTriple& t);

struct InducedStructures {
  std::array<EndField, 3> j;
  EndField g;
};

struct InduceResult {
  InducedStructures induced;
  /// The bi-quaternion multiplication table and G^2 = Id.
  CheckReport table;
};

/// J_i = 1/2 eps_ijk I_j I_k, G = -I1 I2 I3. Throws PreconditionError when
/// the relations fail.
InduceResult induce(const CliffordTriple& t);

struct Projections {
  EndField g_plus;
  EndField g_minus;
  std::array<EndField, 3> i_plus;
  std::array<EndField, 3> i_minus;
};

struct ProjectResult {
  Projections proj;
  /// Idempotence, the two quaternionic sectors, and vanishing mixed products.
  CheckReport identities;
};

/// G+- = 1/2 (Id +- G), I_i+- = 1/2 (J_i +- I_i).
ProjectResult project(const InducedStructures& ind, const CliffordTriple& t);

enum class Verdict { pass, fail, inconclusive };
std::string to_string(Verdict v);

struct FamilyReport {
  Verdict verdict = Verdict::pass;
  CheckReport relations;
  /// The three N(I_i, I_i) families, checked first.
  std::vector<TensorReport> preconditions;
  /// All 21 distinct families, preconditions included, in a fixed order.
  std::vector<TensorReport> tensors;
  std::string note;
};

/// The 21 distinct families N(I_i,I_j), N(J_i,J_j) (i <= j) and N(I_i,J_j).
std::vector<BoundTensor> clifford_tensor_families(const CliffordTriple& t, const InducedStructures& ind);

/// Forward implication only: given N(I_i, I_i) = 0, all 21 families vanish.
/// Failing relations give fail; a failing N(I_i, I_i) gives inconclusive.
FamilyReport check_clifford_families(const CliffordTriple& t, unsigned degree_bound);

/// Integrability of each generator at the given degree; records the result
/// in the triple's status.
std::array<TensorReport, 3> check_integrability(CliffordTriple& t, unsigned degree_bound);

}  // namespace gencliff
