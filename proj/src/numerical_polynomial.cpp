#include "multimult/numerical_polynomial.hpp"

#include <algorithm>
#include <limits>

#include "multimult/error.hpp"

namespace multimult {

Integer checked_add(Integer a, Integer b) {
  Integer out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "integer addition");
  return out;
}

Integer checked_mul(Integer a, Integer b) {
  Integer out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "integer product");
  return out;
}

Integer binomial(Integer top, int k) {
  if (k < 0) return 0;
  // Product of i consecutive integers is divisible by i!, so every partial
  // quotient is exact.
  __int128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * static_cast<__int128>(top - i + 1) / i;
    if (acc > std::numeric_limits<Integer>::max() || acc < std::numeric_limits<Integer>::min()) {
      throw Error(ErrorCode::Overflow, "binomial coefficient");
    }
  }
  return static_cast<Integer>(acc);
}

NumericalPolynomial::NumericalPolynomial(std::size_t d,
                                         const std::vector<std::pair<MultiDegree, Integer>>& terms)
    : d_(d) {
  for (const auto& [k, c] : terms) add_term(k, c);
}

NumericalPolynomial NumericalPolynomial::constant(std::size_t d, Integer c) {
  NumericalPolynomial p(d);
  p.add_term(MultiDegree(d), c);
  return p;
}

void NumericalPolynomial::require_dimension(std::size_t d) const {
  if (d != d_) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected dimension " + std::to_string(d_) + ", got " + std::to_string(d));
  }
}

bool NumericalPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

Integer NumericalPolynomial::coefficient(const MultiDegree& k) const {
  require_dimension(k.size());
  auto it = terms_.find(k);
  return it == terms_.end() ? 0 : it->second;
}

void NumericalPolynomial::add_term(const MultiDegree& k, Integer c) {
  require_dimension(k.size());
  if (!k.is_natural()) throw Error(ErrorCode::InvalidArgument, "term index must be natural");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

ExtendedDegree NumericalPolynomial::degree() const {
  if (terms_.empty()) return ExtendedDegree::minus_infinity();
  int best = 0;
  for (const auto& [k, c] : terms_) best = std::max(best, k.total());
  return ExtendedDegree::finite(best);
}

MultiDegree NumericalPolynomial::axis_degrees() const {
  MultiDegree out(d_);
  for (const auto& [k, c] : terms_) out = componentwise_max(out, k);
  return out;
}

Integer NumericalPolynomial::evaluate(const MultiDegree& n) const {
  require_dimension(n.size());
  Integer total = 0;
  for (const auto& [k, c] : terms_) {
    Integer term = c;
    for (std::size_t i = 0; i < d_; ++i) {
      term = checked_mul(term, binomial(static_cast<Integer>(n[i]) + k[i], k[i]));
      if (term == 0) break;
    }
    total = checked_add(total, term);
  }
  return total;
}

NumericalPolynomial NumericalPolynomial::backward_difference(const MultiDegree& k) const {
  require_dimension(k.size());
  NumericalPolynomial out(d_);
  for (const auto& [h, c] : terms_) {
    if (componentwise_le(k, h)) out.add_term(h - k, c);
  }
  return out;
}

NumericalPolynomial& NumericalPolynomial::operator+=(const NumericalPolynomial& other) {
  require_dimension(other.d_);
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

NumericalPolynomial& NumericalPolynomial::operator-=(const NumericalPolynomial& other) {
  require_dimension(other.d_);
  for (const auto& [k, c] : other.terms_) add_term(k, checked_mul(c, -1));
  return *this;
}

std::string NumericalPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest total degree first, ties lexicographically descending.
  std::vector<std::pair<MultiDegree, Integer>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.first.total() != b.first.total()) return a.first.total() > b.first.total();
    return a.first > b.first;
  });
  bool first = true;
  for (const auto& [k, c] : sorted) {
    Integer mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != 1) out += std::to_string(mag) + "*";
    std::string idx;
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (i) idx += ",";
      idx += std::to_string(k[i]);
    }
    out += "C(" + idx + ")";
  }
  return out;
}

SampleBox::SampleBox(MultiDegree origin, std::vector<int> width)
    : origin_(std::move(origin)), width_(std::move(width)) {
  if (width_.size() != origin_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "sample box width and origin differ in length");
  }
  std::size_t total = 1;
  for (int w : width_) {
    if (w < 1) throw Error(ErrorCode::InvalidArgument, "sample box width must be >= 1");
    total *= static_cast<std::size_t>(w);
  }
  values_.assign(total, 0);
}

SampleBox SampleBox::tabulate(const MultiDegree& origin, const std::vector<int>& width,
                              const std::function<Integer(const MultiDegree&)>& f) {
  SampleBox box(origin, width);
  for_each_in_box(origin, box.max_corner(), [&](const MultiDegree& n) { box.set(n, f(n)); });
  return box;
}

MultiDegree SampleBox::max_corner() const {
  MultiDegree out = origin_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += width_[i] - 1;
  return out;
}

bool SampleBox::contains(const MultiDegree& n) const {
  if (n.size() != origin_.size()) return false;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] < origin_[i] || n[i] >= origin_[i] + width_[i]) return false;
  }
  return true;
}

std::size_t SampleBox::index(const MultiDegree& n) const {
  if (!contains(n)) {
    throw Error(ErrorCode::InvalidArgument, "point " + n.to_string() + " outside sample box");
  }
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    idx = idx * static_cast<std::size_t>(width_[i]) + static_cast<std::size_t>(n[i] - origin_[i]);
  }
  return idx;
}

Integer SampleBox::at(const MultiDegree& n) const { return values_[index(n)]; }

void SampleBox::set(const MultiDegree& n, Integer value) { values_[index(n)] = value; }

std::vector<MultiDegree> SampleBox::points() const {
  std::vector<MultiDegree> out;
  out.reserve(values_.size());
  for_each_in_box(origin_, max_corner(), [&](const MultiDegree& n) { out.push_back(n); });
  return out;
}

NumericalPolynomial fit_from_samples(const SampleBox& box, const MultiDegree& bounds, int margin) {
  const std::size_t d = box.dimension();
  if (bounds.size() != d) throw Error(ErrorCode::DimensionMismatch, "degree bounds length");
  if (!bounds.is_natural()) throw Error(ErrorCode::InvalidArgument, "degree bounds must be natural");
  for (std::size_t i = 0; i < d; ++i) {
    if (box.width()[i] < bounds[i] + margin) {
      throw Error(ErrorCode::InvalidArgument,
                  "sample box too narrow on axis " + std::to_string(i) + " for degree bound " +
                      std::to_string(bounds[i]) + " plus margin " + std::to_string(margin));
    }
  }
  const MultiDegree corner = box.max_corner();

  // Candidate terms in decreasing total degree so that every h > k is solved
  // before k.
  std::vector<MultiDegree> order;
  for_each_in_box(MultiDegree(d), bounds, [&](const MultiDegree& k) { order.push_back(k); });
  std::stable_sort(order.begin(), order.end(),
                   [](const MultiDegree& a, const MultiDegree& b) { return a.total() > b.total(); });

  NumericalPolynomial fitted(d);
  for (const MultiDegree& k : order) {
    // Delta^k f at the corner from the table.
    Integer diff = 0;
    for_each_in_box(MultiDegree(d), k, [&](const MultiDegree& t) {
      Integer weight = (t.total() % 2 == 0) ? 1 : -1;
      for (std::size_t i = 0; i < d; ++i) weight = checked_mul(weight, binomial(k[i], t[i]));
      diff = checked_add(diff, checked_mul(weight, box.at(corner - t)));
    });
    // Delta^k of the already-fitted higher terms at the corner.
    Integer known = fitted.backward_difference(k).evaluate(corner);
    fitted.add_term(k, checked_add(diff, -known));
  }

  for (const MultiDegree& n : box.points()) {
    if (fitted.evaluate(n) != box.at(n)) {
      throw Error(ErrorCode::NonPolynomialWindow,
                  "sample at " + n.to_string() + " disagrees with the fitted polynomial");
    }
  }
  return fitted;
}

NumericalPolynomial fit_from_samples(const SampleBox& box, int degree_bound, int margin) {
  return fit_from_samples(box, MultiDegree(box.dimension(), degree_bound), margin);
}

}  // namespace multimult
