#include "multimult/multidegree.hpp"

#include <algorithm>
#include <numeric>

#include "multimult/error.hpp"

namespace multimult {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::RingMismatch: return "RING_MISMATCH";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::Overflow: return "OVERFLOW";
    case ErrorCode::NonPolynomialWindow: return "NON_POLYNOMIAL_WINDOW";
    case ErrorCode::NonConstantWindow: return "NON_CONSTANT_WINDOW";
    case ErrorCode::NonUnitDegree: return "NON_UNIT_DEGREE";
    case ErrorCode::ConstructionFailed: return "CONSTRUCTION_FAILED";
    case ErrorCode::NotDefined: return "NOT_DEFINED";
    case ErrorCode::SequenceNotFilterRegular: return "SEQUENCE_NOT_FILTER_REGULAR";
    case ErrorCode::NotASystem: return "NOT_A_SYSTEM";
    case ErrorCode::BaseNotConstant: return "BASE_NOT_CONSTANT";
    case ErrorCode::Mismatch: return "MISMATCH";
    case ErrorCode::NotInIdeal: return "NOT_IN_IDEAL";
    case ErrorCode::DimTooLarge: return "DIM_TOO_LARGE";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::UndeclaredName: return "UNDECLARED_NAME";
    case ErrorCode::BadSlot: return "BAD_SLOT";
  }
  return "UNKNOWN";
}

namespace {

void require_same_size(const MultiDegree& a, const MultiDegree& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "multidegrees " + a.to_string() + " and " + b.to_string() + " differ in length");
  }
}

}  // namespace

MultiDegree MultiDegree::unit(std::size_t d, std::size_t i) {
  if (i >= d) throw Error(ErrorCode::BadSlot, "unit vector index out of range");
  MultiDegree e(d);
  e[i] = 1;
  return e;
}

int MultiDegree::total() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

bool MultiDegree::is_natural() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e >= 0; });
}

bool MultiDegree::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e == 0; });
}

MultiDegree& MultiDegree::operator+=(const MultiDegree& other) {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

MultiDegree& MultiDegree::operator-=(const MultiDegree& other) {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

std::string MultiDegree::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(entries_[i]);
  }
  return out + ")";
}

bool componentwise_le(const MultiDegree& a, const MultiDegree& b) {
  require_same_size(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool componentwise_lt(const MultiDegree& a, const MultiDegree& b) {
  return componentwise_le(a, b) && a != b;
}

MultiDegree componentwise_max(const MultiDegree& a, const MultiDegree& b) {
  require_same_size(a, b);
  MultiDegree out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

void for_each_in_box(const MultiDegree& lo, const MultiDegree& hi,
                     const std::function<void(const MultiDegree&)>& visit) {
  require_same_size(lo, hi);
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (lo[i] > hi[i]) return;
  }
  MultiDegree cur = lo;
  while (true) {
    visit(cur);
    std::size_t i = cur.size();
    while (i > 0) {
      --i;
      if (cur[i] < hi[i]) {
        ++cur[i];
        for (std::size_t j = i + 1; j < cur.size(); ++j) cur[j] = lo[j];
        break;
      }
      if (i == 0) return;
    }
    if (cur.size() == 0) return;
  }
}

std::string ExtendedDegree::to_string() const {
  return minus_infinity_ ? std::string("-inf") : std::to_string(value_);
}

}  // namespace multimult
