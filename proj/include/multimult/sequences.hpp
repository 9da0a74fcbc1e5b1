#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "multimult/graded_module.hpp"

namespace multimult {

/// Elements of unit degree; the type counts how many live in each slot.
class ElementSequence {
 public:
  ElementSequence() = default;
  explicit ElementSequence(std::vector<HomogeneousElement> elements);

  const std::vector<HomogeneousElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const HomogeneousElement& operator[](std::size_t i) const { return elements_[i]; }

  /// Type in N^d; every element must have unit degree.
  MultiDegree type(std::size_t d) const;
  /// Type of the first i elements.
  MultiDegree prefix_type(std::size_t d, std::size_t i) const;
  ElementSequence suffix(std::size_t from) const;
  ElementSequence prefix(std::size_t count) const;

  /// "x3, y3, z3"
  std::string to_string() const;

 private:
  std::vector<HomogeneousElement> elements_;
};

struct FilterRegularCheck {
  bool regular = false;
  HilbertDatum annihilator;
};

/// a is filter-regular on M when (0_M : a) has ZERO Hilbert polynomial.
FilterRegularCheck is_filter_regular(const GradedModule& m, const HomogeneousElement& a);

enum class SequenceKind { FilterRegular, MixedMultSystem, Both, Neither };
std::string to_string(SequenceKind kind);

struct SequenceCertificate {
  SequenceKind kind = SequenceKind::Neither;
  bool filter_regular = false;
  bool system = false;
  /// Hilbert data of 0_{M_j} : x_{j+1} for each step, M_j = M/(x_1..x_j)M.
  std::vector<HilbertDatum> annihilators;
  /// Hilbert data of M/xM.
  HilbertDatum quotient;
  bool certified = true;
};

GradedModule quotient_by_sequence(const GradedModule& m, const ElementSequence& seq);

SequenceCertificate certify_sequence(const GradedModule& m, const ElementSequence& seq);
bool is_filter_regular_sequence(const GradedModule& m, const ElementSequence& seq);
/// dim Supp_{++}(M/xM) <= 0, i.e. deg P_{M/xM} <= 0.
bool is_mixed_mult_system(const GradedModule& m, const ElementSequence& seq);

/// Builds a filter-regular sequence of type k, slot by slot. Each step tries
/// the slot's variables in declaration order, then seeded random integer
/// combinations of them (coefficient bound 10, then 100, then 1000; 20
/// attempts in total). Throws ConstructionFailed when nothing passes.
ElementSequence build_filter_regular_sequence(const GradedModule& m, const MultiDegree& k,
                                              std::uint64_t seed);

}  // namespace multimult
