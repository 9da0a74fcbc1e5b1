#include "multimult/ring.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "multimult/error.hpp"
#include "multimult/numerical_polynomial.hpp"

namespace multimult {

Ring::Ring(std::size_t d, std::vector<std::string> names, std::vector<int> slots)
    : d_(d), names_(std::move(names)), slots_(std::move(slots)), by_slot_(d) {
  if (d == 0) throw Error(ErrorCode::BadSlot, "grading dimension must be at least 1");
  if (names_.size() != slots_.size()) {
    throw Error(ErrorCode::InvalidArgument, "variable names and slots differ in length");
  }
  std::unordered_set<std::string> seen;
  for (std::size_t v = 0; v < names_.size(); ++v) {
    if (!seen.insert(names_[v]).second) {
      throw Error(ErrorCode::InvalidArgument, "duplicate variable " + names_[v]);
    }
    if (slots_[v] < 0 || static_cast<std::size_t>(slots_[v]) >= d_) {
      throw Error(ErrorCode::BadSlot, "variable " + names_[v] + " has slot " +
                                          std::to_string(slots_[v] + 1) + " outside 1.." +
                                          std::to_string(d_));
    }
    by_slot_[slots_[v]].push_back(static_cast<int>(v));
  }
}

int Ring::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

RingPtr make_ring(std::size_t d, std::vector<std::string> names, std::vector<int> slots) {
  return std::make_shared<const Ring>(d, std::move(names), std::move(slots));
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw Error(ErrorCode::RingMismatch, "objects live in different rings");
}

Monomial Monomial::variable(std::size_t nvars, std::size_t v, int power) {
  Monomial m(nvars);
  m.exps_[v] = power;
  return m;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

int Monomial::total_degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

MultiDegree Monomial::degree(const Ring& ring) const {
  MultiDegree out(ring.grading_dimension());
  for (std::size_t v = 0; v < exps_.size(); ++v) out[ring.slot(v)] += exps_[v];
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t v = 0; v < exps_.size(); ++v) {
    if (exps_[v] > other.exps_[v]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t v = 0; v < exps_.size(); ++v) out.exps_[v] += other.exps_[v];
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t v = 0; v < exps_.size(); ++v) out.exps_[v] -= other.exps_[v];
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t v = 0; v < exps_.size(); ++v) out.exps_[v] = std::max(exps_[v], other.exps_[v]);
  return out;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t v = 0; v < exps_.size(); ++v) out.exps_[v] = std::min(exps_[v], other.exps_[v]);
  return out;
}

Monomial Monomial::pow(int e) const {
  Monomial out = *this;
  for (int& x : out.exps_) x *= e;
  return out;
}

std::string Monomial::to_string(const Ring& ring) const {
  std::string out;
  for (std::size_t v = 0; v < exps_.size(); ++v) {
    if (exps_[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.name(v);
    if (exps_[v] > 1) out += "^" + std::to_string(exps_[v]);
  }
  return out.empty() ? "1" : out;
}

namespace {

// Distribute `total` over the listed variables, largest exponent on the
// first variable first.
void compositions(const std::vector<int>& vars, std::size_t pos, int total, Monomial& cur,
                  const std::function<void()>& emit) {
  if (pos + 1 == vars.size()) {
    cur[vars[pos]] = total;
    emit();
    cur[vars[pos]] = 0;
    return;
  }
  for (int e = total; e >= 0; --e) {
    cur[vars[pos]] = e;
    compositions(vars, pos + 1, total - e, cur, emit);
  }
  cur[vars[pos]] = 0;
}

void expand_slots(const Ring& ring, const MultiDegree& n, std::size_t slot, Monomial& cur,
                  std::vector<Monomial>& out) {
  if (slot == ring.grading_dimension()) {
    out.push_back(cur);
    return;
  }
  const auto& vars = ring.slot_variables(slot);
  if (vars.empty()) {
    if (n[slot] == 0) expand_slots(ring, n, slot + 1, cur, out);
    return;
  }
  compositions(vars, 0, n[slot], cur, [&] { expand_slots(ring, n, slot + 1, cur, out); });
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const Ring& ring, const MultiDegree& n) {
  if (n.size() != ring.grading_dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "degree " + n.to_string() + " for ring of dimension " +
                                                  std::to_string(ring.grading_dimension()));
  }
  std::vector<Monomial> out;
  if (!n.is_natural()) return out;
  Monomial cur(ring.variable_count());
  expand_slots(ring, n, 0, cur, out);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::int64_t monomial_count(const Ring& ring, const MultiDegree& n) {
  if (!n.is_natural()) return 0;
  std::int64_t total = 1;
  for (std::size_t i = 0; i < ring.grading_dimension(); ++i) {
    const int c = static_cast<int>(ring.slot_size(i));
    if (c == 0) {
      if (n[i] != 0) return 0;
      continue;
    }
    total = checked_mul(total, binomial(n[i] + c - 1, c - 1));
  }
  return total;
}

}  // namespace multimult
