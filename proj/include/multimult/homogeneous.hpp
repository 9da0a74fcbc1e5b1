#pragma once

#include <map>
#include <string>

#include "multimult/ring.hpp"
#include "multimult/sparse_linalg.hpp"

namespace multimult {

/// Homogeneous polynomial with rational coefficients. The zero element still
/// carries a degree so it can stand in a sequence of a given type.
class HomogeneousElement {
 public:
  using Terms = std::map<Monomial, Rational>;

  HomogeneousElement(RingPtr ring, const Monomial& m, Rational coeff = 1);
  /// Throws InvalidArgument when the terms have different multidegrees.
  HomogeneousElement(RingPtr ring, Terms terms, MultiDegree degree);
  static HomogeneousElement zero(RingPtr ring, MultiDegree degree);
  static HomogeneousElement variable(RingPtr ring, int v);

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  const MultiDegree& degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// The single monomial of a monomial element (scalar factor ignored).
  const Monomial& monomial() const { return terms_.begin()->first; }
  /// Slot i when the degree is e_i, otherwise -1.
  int unit_slot() const;

  HomogeneousElement operator*(const HomogeneousElement& other) const;
  HomogeneousElement operator*(const Monomial& m) const;

  bool operator==(const HomogeneousElement& other) const {
    return degree_ == other.degree_ && terms_ == other.terms_;
  }

  /// "2*x1 - 3/2*x2"; "0" for zero.
  std::string to_string() const;

 private:
  RingPtr ring_;
  Terms terms_;
  MultiDegree degree_;
};

}  // namespace multimult
