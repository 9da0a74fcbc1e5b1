#include "multimult/graded_linalg.hpp"

#include <algorithm>

#include "multimult/error.hpp"
#include "multimult/parallel.hpp"

namespace multimult {

GradedPieceBasis::GradedPieceBasis(MultiDegree degree, std::vector<Monomial> basis)
    : degree_(std::move(degree)), basis_(std::move(basis)) {
  index_.reserve(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], static_cast<int>(i));
}

GradedPieceBasis GradedPieceBasis::ring_piece(const Ring& ring, const MultiDegree& n) {
  return GradedPieceBasis(n, monomials_of_degree(ring, n));
}

GradedPieceBasis GradedPieceBasis::subquotient_piece(const MonomialIdeal& outer,
                                                     const MonomialIdeal& inner,
                                                     const MultiDegree& n) {
  std::vector<Monomial> basis;
  for (auto& m : monomials_of_degree(*outer.ring(), n)) {
    if (outer.contains(m) && !inner.contains(m)) basis.push_back(std::move(m));
  }
  return GradedPieceBasis(n, std::move(basis));
}

int GradedPieceBasis::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

SparseVector coordinates(const HomogeneousElement::Terms& f, const GradedPieceBasis& basis) {
  SparseVector v;
  for (const auto& [m, c] : f) {
    int i = basis.index_of(m);
    if (i >= 0) v.emplace_back(i, c);
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

std::vector<SparseVector> ideal_piece_rows(const std::vector<HomogeneousElement>& generators,
                                           const GradedPieceBasis& basis) {
  std::vector<SparseVector> rows;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    const Ring& ring = *g.ring();
    for (const auto& m : monomials_of_degree(ring, basis.degree() - g.degree())) {
      SparseVector row = coordinates((g * m).terms(), basis);
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }
  return rows;
}

Integer ideal_piece_dimension(const std::vector<HomogeneousElement>& generators,
                              const MultiDegree& n) {
  if (generators.empty()) return 0;
  auto basis = GradedPieceBasis::ring_piece(*generators.front().ring(), n);
  return rank(ideal_piece_rows(generators, basis), basis.size());
}

std::vector<std::vector<Rational>> multiplication_matrix(const HomogeneousElement& x,
                                                         const GradedPieceBasis& source,
                                                         const GradedPieceBasis& target) {
  if (target.degree() != source.degree() + x.degree()) {
    throw Error(ErrorCode::DimensionMismatch, "target degree " + target.degree().to_string() +
                                                  " is not source degree plus element degree");
  }
  std::vector<std::vector<Rational>> mat(target.size(), std::vector<Rational>(source.size(), 0));
  for (int j = 0; j < source.size(); ++j) {
    for (const auto& [m, c] : x.terms()) {
      int i = target.index_of(source.basis()[j] * m);
      if (i >= 0) mat[i][j] += c;
    }
  }
  return mat;
}

SparseVector multiply_vector(const HomogeneousElement& x, const SparseVector& v,
                             const GradedPieceBasis& source, const GradedPieceBasis& target) {
  std::vector<std::pair<int, Rational>> acc;
  for (const auto& [j, a] : v) {
    for (const auto& [m, c] : x.terms()) {
      int i = target.index_of(source.basis()[j] * m);
      if (i >= 0) acc.emplace_back(i, a * c);
    }
  }
  std::sort(acc.begin(), acc.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  SparseVector out;
  for (auto& [i, val] : acc) {
    if (!out.empty() && out.back().first == i) {
      out.back().second += val;
      if (out.back().second == 0) out.pop_back();
    } else if (val != 0) {
      out.emplace_back(i, std::move(val));
    }
  }
  return out;
}

HilbertDatum sampled_hilbert(const std::function<Integer(const MultiDegree&)>& dimension,
                             const SamplingPolicy& policy) {
  const std::size_t d = policy.origin.size();
  std::vector<int> width(d);
  for (std::size_t i = 0; i < d; ++i) width[i] = 2 * policy.bounds[i] + 2;
  MultiDegree origin = policy.origin;
  for (int attempt = 0;; ++attempt) {
    SampleBox box(origin, width);
    auto points = box.points();
    std::vector<Integer> values(points.size());
    parallel_for(points.size(), [&](std::size_t i) { values[i] = dimension(points[i]); });
    for (std::size_t i = 0; i < points.size(); ++i) box.set(points[i], values[i]);
    try {
      NumericalPolynomial p = fit_from_samples(box, policy.bounds, policy.margin);
      return HilbertDatum{std::move(p), origin, false, std::move(box)};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NonPolynomialWindow || attempt >= policy.max_escalations) throw;
    }
    for (std::size_t i = 0; i < d; ++i) origin[i] = std::max(1, 2 * origin[i]);
  }
}

}  // namespace multimult
