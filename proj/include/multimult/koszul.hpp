#pragma once

#include <optional>
#include <vector>

#include "multimult/graded_module.hpp"
#include "multimult/mixed_multiplicity.hpp"
#include "multimult/sequences.hpp"

namespace multimult {

/// What the Koszul machinery needs from a module and a sequence acting on it:
/// graded pieces as subquotients of spaces with explicit coordinates, and the
/// action of each sequence element between pieces.
class KoszulOperand {
 public:
  virtual ~KoszulOperand() = default;
  virtual std::size_t grading_dimension() const = 0;
  virtual std::size_t length() const = 0;
  virtual MultiDegree element_degree(std::size_t j) const = 0;
  /// Zero piece (ambient 0) for degrees with a negative entry.
  virtual ModulePiece piece(const MultiDegree& n) const = 0;
  virtual SparseVector multiply(std::size_t j, const MultiDegree& n, const SparseVector& v) const = 0;
};

/// A GradedModule together with a sequence of its ring's elements.
class ModuleKoszulOperand : public KoszulOperand {
 public:
  ModuleKoszulOperand(GradedModule m, ElementSequence seq);
  std::size_t grading_dimension() const override { return m_.grading_dimension(); }
  std::size_t length() const override { return seq_.size(); }
  MultiDegree element_degree(std::size_t j) const override { return seq_[j].degree(); }
  ModulePiece piece(const MultiDegree& n) const override;
  SparseVector multiply(std::size_t j, const MultiDegree& n, const SparseVector& v) const override;

 private:
  GradedModule m_;
  ElementSequence seq_;
};

struct KoszulSlice {
  MultiDegree degree;
  /// dim K_i(x,M)_n for i = 0..s.
  std::vector<Integer> chain_dims;
  /// rank of d_i : K_i -> K_{i-1} for i = 1..s (entry i-1).
  std::vector<Integer> differential_ranks;
  /// l[H_i(x,M)_n] for i = 0..s.
  std::vector<Integer> homology_lengths;
  /// sum (-1)^i l[H_i].
  Integer euler = 0;
  /// sum (-1)^i dim K_i.
  Integer chain_euler = 0;
  bool d_squared_zero = true;
};

/// K_i(x,M)_n = sum over |T| = i of M_{n - deg x_T}, with
/// d(e_T (x) m) = sum_{j in T} (-1)^{pos(j,T)} e_{T\j} (x) x_j m.
KoszulSlice koszul_slice(const KoszulOperand& op, const MultiDegree& n);
KoszulSlice koszul_slice(const GradedModule& m, const ElementSequence& seq, const MultiDegree& n);

struct EulerResult {
  Integer value = 0;
  bool certified = true;
  MultiDegree window_origin;
  std::vector<KoszulSlice> slices;
};

/// Euler characteristic constant on the box [origin, origin + 1]; the origin
/// doubles on a non-constant box, up to max_escalations times, then
/// NonConstantWindow is raised.
EulerResult stabilized_euler(const KoszulOperand& op, const MultiDegree& origin, int max_escalations);

/// chi(x,M) for a mixed multiplicity system x. The window starts at the
/// Hilbert threshold plus the type of x. Throws NotASystem.
EulerResult euler_characteristic(const GradedModule& m, const ElementSequence& seq);

/// The recursive mixed multiplicity symbol. Throws NotASystem, BaseNotConstant.
Integer mixed_mult_symbol(const GradedModule& m, const ElementSequence& seq);

/// Checks on a single mixed multiplicity system witness.
struct SystemCheck {
  ElementSequence sequence;
  bool filter_regular = false;
  Integer quotient_length = 0;
  Integer chi = 0;
  Integer symbol = 0;
  TransformationRecord transformation;
  std::vector<KoszulSlice> slices;
};

struct MainTheoremReport {
  MultiDegree k;
  Integer delta = 0;
  Integer filter = 0;
  Integer chi = 0;
  Integer symbol = 0;
  bool positive = false;
  bool certified = true;
  ElementSequence witness;
  std::vector<KoszulSlice> slices;
  /// Variable sequences of type k that are systems but not filter-regular.
  std::vector<SystemCheck> other_systems;
};

struct MainTheoremOptions {
  std::uint64_t seed = 1;
  /// How many non-filter-regular variable systems to examine as well.
  std::size_t extra_systems = 3;
};

/// Computes e(M;k) by DELTA, FILTER, chi and the symbol on a constructed
/// filter-regular witness, plus the inequality / transformation checks on
/// other systems. Throws Mismatch with diagnostics on any disagreement.
MainTheoremReport verify_main_theorem(const GradedModule& m, const MultiDegree& k,
                                      const MainTheoremOptions& options = {});

/// Variable-only sequences of type k (slot order, distinct variables within a
/// slot) that are systems but not filter-regular, at most `limit` of them.
std::vector<ElementSequence> non_regular_variable_systems(const GradedModule& m, const MultiDegree& k,
                                                          std::size_t limit);

}  // namespace multimult
