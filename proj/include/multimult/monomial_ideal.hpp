#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "multimult/numerical_polynomial.hpp"
#include "multimult/ring.hpp"

namespace multimult {

/// Monomial ideal kept as its minimal generating antichain, sorted by total
/// degree and then lexicographically decreasing.
class MonomialIdeal {
 public:
  MonomialIdeal(RingPtr ring, std::vector<Monomial> generators);

  static MonomialIdeal zero(RingPtr ring) { return MonomialIdeal(std::move(ring), {}); }
  static MonomialIdeal unit(RingPtr ring);
  /// Ideal generated by the listed variables.
  static MonomialIdeal of_variables(RingPtr ring, const std::vector<int>& vars);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

  bool contains(const Monomial& m) const;
  /// Every generator of `other` lies in this ideal.
  bool contains(const MonomialIdeal& other) const;

  MonomialIdeal operator+(const MonomialIdeal& other) const;
  MonomialIdeal operator*(const MonomialIdeal& other) const;
  MonomialIdeal multiply(const Monomial& m) const;
  MonomialIdeal pow(int e) const;
  MonomialIdeal intersect(const MonomialIdeal& other) const;
  MonomialIdeal colon(const Monomial& m) const;
  MonomialIdeal colon(const MonomialIdeal& other) const;
  /// (this : other^inf), the fixpoint of repeated colon by `other`.
  MonomialIdeal saturate(const MonomialIdeal& other) const;

  bool operator==(const MonomialIdeal& other) const { return gens_ == other.gens_; }

  int max_generator_degree() const;
  /// Krull dimension of R/this: the largest set of variables containing the
  /// support of no generator. -inf for the unit ideal.
  ExtendedDegree krull_dimension() const;

  std::vector<Monomial> standard_monomials(const MultiDegree& n) const;
  /// #{monomials of degree n outside the ideal}, by enumeration.
  Integer count_standard_monomials(const MultiDegree& n) const;

  std::string to_string() const;

 private:
  void minimalize();

  RingPtr ring_;
  std::vector<Monomial> gens_;
};

/// Hilbert polynomial of a module with its validity threshold. `certified`
/// means equality with the Hilbert function at every n >= threshold follows
/// from a closed form; otherwise it was only checked on `window`.
struct HilbertDatum {
  NumericalPolynomial polynomial;
  MultiDegree threshold;
  bool certified = true;
  std::optional<SampleBox> window;
};

/// Numerator of the multigraded Hilbert series of S/a, as monomials (the
/// lcms of generator subsets) with signed multiplicities; cancelling lcms
/// are dropped.
std::vector<std::pair<Monomial, Integer>> hilbert_numerator(const MonomialIdeal& a);

/// Exact dim (S/a)_n at any n, from the numerator.
Integer hilbert_function(const MonomialIdeal& a, const MultiDegree& n);

/// Certified Hilbert polynomial of S/a.
HilbertDatum hilbert_series_polynomial(const MonomialIdeal& a);

/// Certified Hilbert data of U/V for monomial V contained in U.
HilbertDatum hilbert_of_subquotient(const MonomialIdeal& outer, const MonomialIdeal& inner);
Integer hilbert_function(const MonomialIdeal& outer, const MonomialIdeal& inner,
                         const MultiDegree& n);

}  // namespace multimult
