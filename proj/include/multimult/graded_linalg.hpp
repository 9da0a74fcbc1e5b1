#pragma once

#include <functional>
#include <unordered_map>
#include <vector>

#include "multimult/homogeneous.hpp"
#include "multimult/monomial_ideal.hpp"
#include "multimult/sparse_linalg.hpp"

namespace multimult {

/// Ordered monomial basis of a graded piece, with reverse lookup.
class GradedPieceBasis {
 public:
  GradedPieceBasis(MultiDegree degree, std::vector<Monomial> basis);
  /// All monomials of degree n of the ring.
  static GradedPieceBasis ring_piece(const Ring& ring, const MultiDegree& n);
  /// Monomials of degree n lying in `outer` but not in `inner`.
  static GradedPieceBasis subquotient_piece(const MonomialIdeal& outer, const MonomialIdeal& inner,
                                            const MultiDegree& n);

  const MultiDegree& degree() const { return degree_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  int size() const { return static_cast<int>(basis_.size()); }
  /// Position of m, or -1 when m is not a basis element.
  int index_of(const Monomial& m) const;

 private:
  MultiDegree degree_;
  std::vector<Monomial> basis_;
  std::unordered_map<Monomial, int> index_;
};

/// Coordinates of f restricted to the basis; monomials outside the basis are
/// dropped (they lie in the inner ideal of a subquotient piece).
SparseVector coordinates(const HomogeneousElement::Terms& f, const GradedPieceBasis& basis);

/// Rows m*g for every generator g and monomial m of degree n - deg g.
std::vector<SparseVector> ideal_piece_rows(const std::vector<HomogeneousElement>& generators,
                                           const GradedPieceBasis& basis);
/// dim (g_1, ..., g_t)_n.
Integer ideal_piece_dimension(const std::vector<HomogeneousElement>& generators, const MultiDegree& n);

/// Matrix (rows = target basis, columns = source basis) of multiplication by x.
/// Products landing outside the target basis are treated as zero, which is
/// reduction modulo the inner ideal for subquotient pieces.
std::vector<std::vector<Rational>> multiplication_matrix(const HomogeneousElement& x,
                                                         const GradedPieceBasis& source,
                                                         const GradedPieceBasis& target);

/// x times the vector v given in source coordinates, in target coordinates.
SparseVector multiply_vector(const HomogeneousElement& x, const SparseVector& v,
                             const GradedPieceBasis& source, const GradedPieceBasis& target);

struct SamplingPolicy {
  MultiDegree origin;
  /// Per-axis degree bound of the polynomial to be fitted.
  MultiDegree bounds;
  int max_escalations = 3;
  int margin = kDefaultVerificationMargin;
};

/// Fits the Hilbert polynomial from sampled dimensions on the box starting at
/// policy.origin with width 2*bound+2 per axis; on a non-polynomial window
/// the origin is doubled, at most max_escalations times. Never certified.
HilbertDatum sampled_hilbert(const std::function<Integer(const MultiDegree&)>& dimension,
                             const SamplingPolicy& policy);

}  // namespace multimult
