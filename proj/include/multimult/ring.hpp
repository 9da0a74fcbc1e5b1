#pragma once

#include <memory>
#include <string>
#include <vector>

#include "multimult/multidegree.hpp"

namespace multimult {

/// Standard N^d-graded polynomial ring over Q. Variable v has multidegree
/// e_{slot(v)}; slots are 0-based internally and 1-based in the text format.
class Ring {
 public:
  Ring(std::size_t d, std::vector<std::string> names, std::vector<int> slots);

  std::size_t grading_dimension() const { return d_; }
  std::size_t variable_count() const { return names_.size(); }
  const std::string& name(std::size_t v) const { return names_[v]; }
  int slot(std::size_t v) const { return slots_[v]; }
  /// Index of the named variable or -1.
  int find(const std::string& name) const;
  /// Variables living in slot i, in declaration order.
  const std::vector<int>& slot_variables(std::size_t i) const { return by_slot_[i]; }
  std::size_t slot_size(std::size_t i) const { return by_slot_[i].size(); }

  bool operator==(const Ring& other) const {
    return d_ == other.d_ && names_ == other.names_ && slots_ == other.slots_;
  }

 private:
  std::size_t d_;
  std::vector<std::string> names_;
  std::vector<int> slots_;
  std::vector<std::vector<int>> by_slot_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::size_t d, std::vector<std::string> names, std::vector<int> slots);
/// Throws RingMismatch unless both point to equal rings.
void require_same_ring(const RingPtr& a, const RingPtr& b);

/// Exponent vector indexed by the ring's variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}
  static Monomial variable(std::size_t nvars, std::size_t v, int power = 1);

  std::size_t size() const { return exps_.size(); }
  int operator[](std::size_t v) const { return exps_[v]; }
  int& operator[](std::size_t v) { return exps_[v]; }
  const std::vector<int>& exponents() const { return exps_; }

  bool is_one() const;
  int total_degree() const;
  MultiDegree degree(const Ring& ring) const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divisibility; caller checks.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  Monomial pow(int e) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }

  /// "x1^2*y3", "1" for the unit monomial.
  std::string to_string(const Ring& ring) const;

 private:
  std::vector<int> exps_;
};

/// All monomials of multidegree n (empty if n has a negative entry or a slot
/// with no variables is asked for positive degree). Order is deterministic:
/// lexicographically decreasing in the exponent vector.
std::vector<Monomial> monomials_of_degree(const Ring& ring, const MultiDegree& n);

/// Number of monomials of multidegree n: prod_i binom(n_i + c_i - 1, c_i - 1).
std::int64_t monomial_count(const Ring& ring, const MultiDegree& n);

}  // namespace multimult

template <>
struct std::hash<multimult::Monomial> {
  std::size_t operator()(const multimult::Monomial& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int e : m.exponents()) h = (h ^ static_cast<std::size_t>(e + 0x3b)) * 0x100000001b3ULL;
    return h;
  }
};
