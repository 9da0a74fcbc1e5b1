#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "multimult/koszul.hpp"
#include "multimult/monomial_ideal.hpp"

namespace multimult {

namespace detail {
struct PowerTable;
struct AssocNode;
}  // namespace detail

/// Monomial data (R, N, J, I_1..I_d) with N = U/V a subquotient of R. The
/// ring's grading is ignored: R is treated as a local ring at the ideal of all
/// variables. Slot 0 stands for J and slot i for I_i, so multidegrees of the
/// associated module live in N^{d+1}.
class IdealSystem {
 public:
  /// N = R/q. Throws InvalidArgument unless J is primary to the maximal ideal
  /// and every I_i is nonzero.
  IdealSystem(MonomialIdeal q, MonomialIdeal j, std::vector<MonomialIdeal> ideals);
  /// Same ideals, N = outer/inner (inner contained in outer).
  IdealSystem with_module(MonomialIdeal outer, MonomialIdeal inner) const;

  const RingPtr& ring() const { return j_.ring(); }
  const MonomialIdeal& outer() const { return outer_; }
  const MonomialIdeal& inner() const { return inner_; }
  const MonomialIdeal& j() const { return j_; }
  const std::vector<MonomialIdeal>& ideals() const { return ideals_; }
  /// d, the number of ideals I_i.
  std::size_t ideal_count() const { return ideals_.size(); }
  /// J for slot 0, I_i for slot i.
  const MonomialIdeal& slot_ideal(std::size_t slot) const;
  /// I = J I_1 ... I_d.
  const MonomialIdeal& product() const { return product_; }
  /// Largest generator degree among U, V, J and the I_i (at least 1).
  int max_generator_degree() const;
  /// "R/(x*y)" or "(x)/(x^2)".
  std::string module_string() const;
  /// J^n0 I_1^n1 ... I_d^nd for n in N^{d+1}; memoized and shared by every
  /// system made from this one with with_module.
  const MonomialIdeal& power_product(const MultiDegree& n) const;

 private:
  IdealSystem(MonomialIdeal outer, MonomialIdeal inner, MonomialIdeal j, std::vector<MonomialIdeal> ideals,
              std::shared_ptr<detail::PowerTable> powers);

  MonomialIdeal outer_, inner_, j_;
  std::vector<MonomialIdeal> ideals_;
  MonomialIdeal product_;
  std::shared_ptr<detail::PowerTable> powers_;
};

/// A monomial of R acting in a given slot.
struct SlotElement {
  Monomial monomial;
  std::size_t slot = 0;
};
using SlotSequence = std::vector<SlotElement>;

/// Type in N^{d+1}: element counts per slot.
MultiDegree slot_type(const SlotSequence& seq, std::size_t slots);
/// "x*y@0, y@1"
std::string to_string(const SlotSequence& seq, const Ring& ring);

/// The associated module N = sum J^n0 II^n N / J^{n0+1} II^n N and its
/// subquotients by images of monomials. Every piece has a basis of monomials
/// and a monomial acts by sending basis elements to basis elements or zero,
/// injectively, so quotients and annihilators stay of this shape.
class AssociatedModule {
 public:
  explicit AssociatedModule(const IdealSystem& system);

  const IdealSystem& system() const;
  std::size_t grading_dimension() const { return system().ideal_count() + 1; }
  /// Basis monomials of the piece at n, sorted; empty for negative degrees.
  std::shared_ptr<const std::vector<Monomial>> basis(const MultiDegree& n) const;
  Integer length(const MultiDegree& n) const;

  /// Throws NotInIdeal unless a lies in the slot's ideal.
  AssociatedModule quotient_by(const SlotElement& a) const;
  AssociatedModule annihilator_of(const SlotElement& a) const;
  AssociatedModule quotient_by_sequence(const SlotSequence& seq) const;

  /// Windowed Hilbert polynomial in d+1 variables, never certified.
  HilbertDatum hilbert() const;
  std::string description() const;

 private:
  explicit AssociatedModule(std::shared_ptr<detail::AssocNode> node) : node_(std::move(node)) {}
  std::shared_ptr<detail::AssocNode> node_;
};

/// Koszul operand for the images x* of a slot sequence acting on an
/// associated module.
class AssociatedKoszulOperand : public KoszulOperand {
 public:
  AssociatedKoszulOperand(AssociatedModule m, SlotSequence seq);
  std::size_t grading_dimension() const override { return m_.grading_dimension(); }
  std::size_t length() const override { return seq_.size(); }
  MultiDegree element_degree(std::size_t j) const override;
  ModulePiece piece(const MultiDegree& n) const override;
  SparseVector multiply(std::size_t j, const MultiDegree& n, const SparseVector& v) const override;

 private:
  AssociatedModule m_;
  SlotSequence seq_;
};

/// l[J^n0 II^n N / J^{n0+1} II^n N], counted from the monomial bases.
Integer assoc_length(const IdealSystem& sys, int n0, const MultiDegree& n);

/// e(J^[k0+1], I^[k]; N) := e(N-assoc; k0, k). Throws NotDefined.
MixedMultiplicityResult ideal_mixed_multiplicity(const IdealSystem& sys, int k0, const MultiDegree& k);

/// aN meets II^n I_i N in a II^n N, checked on the box [w, w+4]^{d+1} with
/// w = 2 * (max generator degree). Throws NotInIdeal.
bool is_rees_superficial(const IdealSystem& sys, const Monomial& a, std::size_t slot);
/// Rees superficial and 0_N : a inside 0_N : I^inf. Throws NotInIdeal.
bool is_weak_fc(const IdealSystem& sys, const Monomial& a, std::size_t slot);
bool is_rees_superficial_sequence(const IdealSystem& sys, const SlotSequence& seq);
bool is_weak_fc_sequence(const IdealSystem& sys, const SlotSequence& seq);

/// The system with N replaced by N / (x_1..x_i) N.
IdealSystem quotient_system(const IdealSystem& sys, const SlotSequence& seq, std::size_t count);
/// Krull dimension of N / (xN : I^inf); -inf when that quotient vanishes.
ExtendedDegree saturation_quotient_dim(const IdealSystem& sys, const SlotSequence& seq);
/// Rees superficial sequence with dim N/(xN : I^inf) <= 1.
bool is_ideal_mult_system(const IdealSystem& sys, const SlotSequence& seq);

/// e(J; N') for N' = outer/inner of dimension <= 1: the eventual value of
/// l[J^n N' / J^{n+1} N'] (0 in dimension <= 0). Throws DimTooLarge.
Integer hilbert_samuel(const MonomialIdeal& j, const MonomialIdeal& outer, const MonomialIdeal& inner);
/// e(J; N / (xN : I^inf)).
Integer saturation_multiplicity(const IdealSystem& sys, const SlotSequence& seq);

/// Weak-(FC) sequence of the type built from generators of the slot ideals,
/// searched depth first in slot order; nullopt when none exists.
std::optional<SlotSequence> find_weak_fc_sequence(const IdealSystem& sys, const MultiDegree& type);

struct IdealCheckSummand {
  std::size_t index = 0;  // 1-based
  MultiDegree type;       // (k0, k) minus the type of x_1..x_i
  bool defined = false;
  Integer value = 0;
  std::string module;
};

struct IdealCheckReport {
  MultiDegree type;  // (k0, k)
  SlotSequence sequence;
  Integer value = 0;
  Integer saturation_value = 0;
  ExtendedDegree saturation_dim = ExtendedDegree::minus_infinity();
  bool weak_fc = false;
  std::vector<IdealCheckSummand> summands;
  Integer transformation_total = 0;
  std::optional<Integer> chi;
  std::optional<Integer> symbol;
  bool certified = false;
};

/// Checks on a mixed multiplicity system x of type (k0, k): the correction
/// formula, e <= e(J; N/(xN:I^inf)) with equality for weak-(FC) x, positivity
/// against dim N/(xN:I^inf) = 1, and chi(x*, N) = symbol(x*, N) = e on the
/// associated module. Throws NotASystem, or Mismatch on any disagreement.
IdealCheckReport verify_ideal_system(const IdealSystem& sys, int k0, const MultiDegree& k, const SlotSequence& seq);

}  // namespace multimult
