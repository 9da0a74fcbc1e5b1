#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace multimult {

/// A point of Z^d used as a multidegree. Degrees produced by user input are
/// natural; intermediate shifts such as n - e_i may go negative, and pieces
/// of a module at such degrees are zero.
///
/// The defaulted ordering is lexicographic and only exists so multidegrees can
/// key ordered containers. The partial order of the grading is
/// `componentwise_le` / `componentwise_lt`.
class MultiDegree {
 public:
  MultiDegree() = default;
  explicit MultiDegree(std::size_t d, int fill = 0) : entries_(d, fill) {}
  MultiDegree(std::initializer_list<int> entries) : entries_(entries) {}
  explicit MultiDegree(std::vector<int> entries) : entries_(std::move(entries)) {}

  static MultiDegree unit(std::size_t d, std::size_t i);

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  int& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }

  int total() const;
  bool is_natural() const;
  bool is_zero() const;

  MultiDegree& operator+=(const MultiDegree& other);
  MultiDegree& operator-=(const MultiDegree& other);
  friend MultiDegree operator+(MultiDegree a, const MultiDegree& b) { return a += b; }
  friend MultiDegree operator-(MultiDegree a, const MultiDegree& b) { return a -= b; }

  friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
  friend std::strong_ordering operator<=>(const MultiDegree& a, const MultiDegree& b) {
    return a.entries_ <=> b.entries_;
  }

  /// "(1,0,2)"
  std::string to_string() const;

 private:
  std::vector<int> entries_;
};

/// a <= b in every coordinate. Throws on dimension mismatch.
bool componentwise_le(const MultiDegree& a, const MultiDegree& b);
/// a <= b componentwise and a != b.
bool componentwise_lt(const MultiDegree& a, const MultiDegree& b);
MultiDegree componentwise_max(const MultiDegree& a, const MultiDegree& b);

/// Visits every point of the box [lo, hi] (inclusive, componentwise) in
/// lexicographic order.
void for_each_in_box(const MultiDegree& lo, const MultiDegree& hi,
                     const std::function<void(const MultiDegree&)>& visit);

/// Degree of a polynomial or dimension of a support: an integer or -infinity.
class ExtendedDegree {
 public:
  static ExtendedDegree minus_infinity() { return ExtendedDegree(); }
  static ExtendedDegree finite(int value) { return ExtendedDegree(value); }

  bool is_minus_infinity() const { return minus_infinity_; }
  /// Only meaningful when finite.
  int value() const { return value_; }

  friend bool operator==(const ExtendedDegree&, const ExtendedDegree&) = default;
  friend std::strong_ordering operator<=>(const ExtendedDegree& a, const ExtendedDegree& b) {
    if (a.minus_infinity_ || b.minus_infinity_) {
      return b.minus_infinity_ <=> a.minus_infinity_;
    }
    return a.value_ <=> b.value_;
  }
  friend bool operator<=(const ExtendedDegree& a, int b) { return a <= finite(b); }

  /// "-inf" or the decimal value.
  std::string to_string() const;

 private:
  ExtendedDegree() = default;
  explicit ExtendedDegree(int v) : minus_infinity_(false), value_(v) {}

  bool minus_infinity_ = true;
  int value_ = 0;
};

}  // namespace multimult

template <>
struct std::hash<multimult::MultiDegree> {
  std::size_t operator()(const multimult::MultiDegree& m) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int e : m.entries()) h = (h ^ static_cast<std::size_t>(e + 0x51)) * 0x100000001b3ULL;
    return h;
  }
};
