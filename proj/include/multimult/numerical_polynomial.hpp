#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "multimult/multidegree.hpp"

namespace multimult {

using Integer = std::int64_t;

/// Overflow-checked helpers; they throw Error(Overflow).
Integer checked_add(Integer a, Integer b);
Integer checked_mul(Integer a, Integer b);

/// binom(top, k) for any integer top and k >= 0, i.e. top(top-1)...(top-k+1)/k!.
Integer binomial(Integer top, int k);

/// Integer-valued polynomial in d variables written in the binomial basis
///   p(n) = sum_k e_k * prod_i binom(n_i + k_i, k_i).
/// Zero coefficients are never stored, so the zero polynomial has no terms.
class NumericalPolynomial {
 public:
  using Terms = std::map<MultiDegree, Integer>;

  explicit NumericalPolynomial(std::size_t d = 0) : d_(d) {}
  NumericalPolynomial(std::size_t d, const std::vector<std::pair<MultiDegree, Integer>>& terms);

  static NumericalPolynomial zero(std::size_t d) { return NumericalPolynomial(d); }
  static NumericalPolynomial constant(std::size_t d, Integer c);

  std::size_t dimension() const { return d_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True for ZERO as well as for a nonzero constant.
  bool is_constant() const;
  /// Coefficient at the origin term (0 for ZERO).
  Integer constant_term() const { return coefficient(MultiDegree(d_)); }

  Integer coefficient(const MultiDegree& k) const;
  void add_term(const MultiDegree& k, Integer c);

  /// Max |k| over the stored terms; -inf for ZERO.
  ExtendedDegree degree() const;
  /// Per-axis maximum of k_i over the stored terms (all zero for ZERO).
  MultiDegree axis_degrees() const;

  Integer evaluate(const MultiDegree& n) const;

  /// Delta^k with Delta_i f(n) = f(n) - f(n - e_i). In the binomial basis this
  /// shifts every term h to h - k and drops terms with h_i < k_i.
  NumericalPolynomial backward_difference(const MultiDegree& k) const;

  NumericalPolynomial& operator+=(const NumericalPolynomial& other);
  NumericalPolynomial& operator-=(const NumericalPolynomial& other);
  friend NumericalPolynomial operator+(NumericalPolynomial a, const NumericalPolynomial& b) {
    return a += b;
  }
  friend NumericalPolynomial operator-(NumericalPolynomial a, const NumericalPolynomial& b) {
    return a -= b;
  }
  friend bool operator==(const NumericalPolynomial&, const NumericalPolynomial&) = default;

  /// "3*C(1,0) - C(0,0)" where C(k) stands for binom(n+k,k); "0" for ZERO.
  std::string to_string() const;

 private:
  void require_dimension(std::size_t d) const;

  std::size_t d_;
  Terms terms_;
};

/// Integer table over the box [origin, origin + width - 1].
class SampleBox {
 public:
  SampleBox(MultiDegree origin, std::vector<int> width);

  /// Fills the box by calling `f` on every point.
  static SampleBox tabulate(const MultiDegree& origin, const std::vector<int>& width,
                            const std::function<Integer(const MultiDegree&)>& f);

  const MultiDegree& origin() const { return origin_; }
  const std::vector<int>& width() const { return width_; }
  MultiDegree max_corner() const;
  std::size_t dimension() const { return origin_.size(); }
  std::size_t size() const { return values_.size(); }

  bool contains(const MultiDegree& n) const;
  Integer at(const MultiDegree& n) const;
  void set(const MultiDegree& n, Integer value);
  /// Points in lexicographic order, matching the storage order.
  std::vector<MultiDegree> points() const;

 private:
  std::size_t index(const MultiDegree& n) const;

  MultiDegree origin_;
  std::vector<int> width_;
  std::vector<Integer> values_;
};

inline constexpr int kDefaultVerificationMargin = 2;

/// Recovers the numerical polynomial of per-axis degree <= bounds[i] that
/// agrees with the table. Coefficients are read off iterated backward
/// differences at the maximal corner, then every point of the box is checked;
/// any disagreement raises NonPolynomialWindow.
NumericalPolynomial fit_from_samples(const SampleBox& box, const MultiDegree& bounds,
                                     int margin = kDefaultVerificationMargin);
NumericalPolynomial fit_from_samples(const SampleBox& box, int degree_bound,
                                     int margin = kDefaultVerificationMargin);

}  // namespace multimult
