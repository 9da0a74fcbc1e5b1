#pragma once

#include <optional>
#include <string>
#include <vector>

#include "multimult/graded_module.hpp"
#include "multimult/sequences.hpp"

namespace multimult {

enum class Method { Delta, Filter, KoszulChi, Symbol };
std::string to_string(Method method);

struct MixedMultiplicityResult {
  MultiDegree k;
  bool defined = false;
  Integer value = 0;
  Method method = Method::Delta;
  bool certified = true;
  std::optional<ElementSequence> witness;
  /// FILTER only: dim Supp_{++}(M/xM) == 0, equivalently value > 0.
  std::optional<bool> positive;
};

/// No binomial-basis term at any h >= k (componentwise) with h != k.
bool is_defined(const NumericalPolynomial& p, const MultiDegree& k);
bool is_defined(const GradedModule& m, const MultiDegree& k);

/// Every defined type k with |k| <= max_total, in lexicographic order.
std::vector<MultiDegree> defined_types(const NumericalPolynomial& p, int max_total);

/// e(M;k) read off the Hilbert polynomial. Throws NotDefined.
MixedMultiplicityResult mixed_multiplicity(const GradedModule& m, const MultiDegree& k);

/// e(M;k) as the eventual length of M/xM for a constructed filter-regular
/// sequence x of type k. Throws NotDefined.
MixedMultiplicityResult mixed_multiplicity_via_filter(const GradedModule& m, const MultiDegree& k,
                                                      std::uint64_t seed);

/// Eventual constant length of a module whose Hilbert polynomial has degree
/// <= 0 (0 for the ZERO polynomial); throws BaseNotConstant otherwise.
Integer eventual_length(const GradedModule& m);

struct ReductionResult {
  Integer original = 0;
  Integer reduced = 0;
  MultiDegree reduced_type;
};

/// Checks e(M;k) = e(M/yM; k - h) for a filter-regular y of type h <= k.
/// Throws SequenceNotFilterRegular, NotDefined, or Mismatch.
ReductionResult reduce(const GradedModule& m, const MultiDegree& k, const ElementSequence& y);

struct TransformationSummand {
  std::size_t index = 0;  // 1-based position i of x_i
  MultiDegree type;       // k - h_i
  bool defined = false;
  Integer value = 0;
  std::string module;
};

struct TransformationRecord {
  Integer quotient_length = 0;
  std::vector<TransformationSummand> summands;
  /// quotient_length minus the summands.
  Integer total = 0;
};

/// e(M;k) = l[(M/xM)_n] - sum_i e(((x_1..x_{i-1})M : x_i)/(x_1..x_{i-1})M; k - h_i)
/// for a mixed multiplicity system x of type k. Throws NotASystem.
TransformationRecord transformation_formula(const GradedModule& m, const ElementSequence& seq);

/// e(M;k) > 0, decided on a constructed filter-regular witness through
/// dim Supp_{++}(M/xM) = 0; also cross-checked against the value.
bool positivity(const GradedModule& m, const MultiDegree& k, std::uint64_t seed);

}  // namespace multimult
