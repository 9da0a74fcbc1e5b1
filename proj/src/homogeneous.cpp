#include "multimult/homogeneous.hpp"

#include "multimult/error.hpp"

namespace multimult {

HomogeneousElement::HomogeneousElement(RingPtr ring, const Monomial& m, Rational coeff)
    : ring_(std::move(ring)), degree_(m.degree(*ring_)) {
  if (coeff != 0) terms_.emplace(m, std::move(coeff));
}

HomogeneousElement::HomogeneousElement(RingPtr ring, Terms terms, MultiDegree degree)
    : ring_(std::move(ring)), degree_(std::move(degree)) {
  if (degree_.size() != ring_->grading_dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "element degree has the wrong length");
  }
  for (auto& [m, c] : terms) {
    if (c == 0) continue;
    if (m.degree(*ring_) != degree_) {
      throw Error(ErrorCode::InvalidArgument,
                  "element is not homogeneous: " + m.to_string(*ring_) + " has degree " +
                      m.degree(*ring_).to_string() + ", expected " + degree_.to_string());
    }
    terms_.emplace(m, c);
  }
}

HomogeneousElement HomogeneousElement::zero(RingPtr ring, MultiDegree degree) {
  return HomogeneousElement(std::move(ring), Terms{}, std::move(degree));
}

HomogeneousElement HomogeneousElement::variable(RingPtr ring, int v) {
  const std::size_t n = ring->variable_count();
  return HomogeneousElement(std::move(ring), Monomial::variable(n, v));
}

int HomogeneousElement::unit_slot() const {
  int slot = -1;
  for (std::size_t i = 0; i < degree_.size(); ++i) {
    if (degree_[i] == 0) continue;
    if (degree_[i] != 1 || slot != -1) return -1;
    slot = static_cast<int>(i);
  }
  return slot;
}

HomogeneousElement HomogeneousElement::operator*(const HomogeneousElement& other) const {
  require_same_ring(ring_, other.ring_);
  Terms out;
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : other.terms_) {
      Rational& slot = out[a * b];
      slot += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return HomogeneousElement(ring_, std::move(out), degree_ + other.degree_);
}

HomogeneousElement HomogeneousElement::operator*(const Monomial& m) const {
  Terms out;
  for (const auto& [a, c] : terms_) out.emplace(a * m, c);
  return HomogeneousElement(ring_, std::move(out), degree_ + m.degree(*ring_));
}

std::string HomogeneousElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // Larger monomials first, matching the basis order of graded pieces.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != 1) {
      out += mag.get_str() + (m.is_one() ? "" : "*");
      if (!m.is_one()) out += m.to_string(*ring_);
    } else {
      out += m.to_string(*ring_);
    }
  }
  return out;
}

}  // namespace multimult
