#include "multimult/mixed_multiplicity.hpp"

#include "multimult/error.hpp"

namespace multimult {

std::string to_string(Method method) {
  switch (method) {
    case Method::Delta: return "DELTA";
    case Method::Filter: return "FILTER";
    case Method::KoszulChi: return "KOSZUL_CHI";
    case Method::Symbol: return "SYMBOL";
  }
  return "DELTA";
}

bool is_defined(const NumericalPolynomial& p, const MultiDegree& k) {
  if (k.size() != p.dimension()) throw Error(ErrorCode::DimensionMismatch, "type has the wrong length");
  for (const auto& [h, c] : p.terms()) {
    if (componentwise_lt(k, h)) return false;
  }
  return true;
}

bool is_defined(const GradedModule& m, const MultiDegree& k) {
  return is_defined(m.hilbert().polynomial, k);
}

std::vector<MultiDegree> defined_types(const NumericalPolynomial& p, int max_total) {
  std::vector<MultiDegree> out;
  const std::size_t d = p.dimension();
  if (max_total < 0) return out;
  for_each_in_box(MultiDegree(d), MultiDegree(d, max_total), [&](const MultiDegree& k) {
    if (k.total() <= max_total && is_defined(p, k)) out.push_back(k);
  });
  return out;
}

namespace {

void require_defined(const GradedModule& m, const MultiDegree& k) {
  if (!is_defined(m, k)) {
    throw Error(ErrorCode::NotDefined, "e(M;" + k.to_string() +
                                           ") is not defined: the Hilbert polynomial has a term "
                                           "above " + k.to_string());
  }
}

}  // namespace

MixedMultiplicityResult mixed_multiplicity(const GradedModule& m, const MultiDegree& k) {
  require_defined(m, k);
  HilbertDatum h = m.hilbert();
  MixedMultiplicityResult r;
  r.k = k;
  r.defined = true;
  r.value = h.polynomial.coefficient(k);
  r.method = Method::Delta;
  r.certified = h.certified;
  return r;
}

Integer eventual_length(const GradedModule& m) {
  HilbertDatum h = m.hilbert();
  if (!h.polynomial.is_constant()) {
    throw Error(ErrorCode::BaseNotConstant, "Hilbert polynomial " + h.polynomial.to_string() +
                                                " of " + m.description() + " is not constant");
  }
  return h.polynomial.constant_term();
}

MixedMultiplicityResult mixed_multiplicity_via_filter(const GradedModule& m, const MultiDegree& k,
                                                      std::uint64_t seed) {
  require_defined(m, k);
  ElementSequence x = build_filter_regular_sequence(m, k, seed);
  GradedModule q = quotient_by_sequence(m, x);
  HilbertDatum h = q.hilbert();
  MixedMultiplicityResult r;
  r.k = k;
  r.defined = true;
  r.value = eventual_length(q);
  r.method = Method::Filter;
  r.certified = h.certified;
  r.positive = h.polynomial.degree() == ExtendedDegree::finite(0);
  r.witness = std::move(x);
  return r;
}

ReductionResult reduce(const GradedModule& m, const MultiDegree& k, const ElementSequence& y) {
  const std::size_t d = m.grading_dimension();
  MultiDegree h = y.type(d);
  if (!componentwise_le(h, k)) {
    throw Error(ErrorCode::InvalidArgument, "sequence type " + h.to_string() + " exceeds " + k.to_string());
  }
  if (!is_filter_regular_sequence(m, y)) {
    throw Error(ErrorCode::SequenceNotFilterRegular, "sequence " + y.to_string() +
                                                         " is not filter-regular");
  }
  ReductionResult r;
  r.original = mixed_multiplicity(m, k).value;
  r.reduced_type = k - h;
  r.reduced = mixed_multiplicity(quotient_by_sequence(m, y), r.reduced_type).value;
  if (r.original != r.reduced) {
    throw Error(ErrorCode::Mismatch, "e(M;" + k.to_string() + ") = " + std::to_string(r.original) +
                                         " but e(M/yM;" + r.reduced_type.to_string() +
                                         ") = " + std::to_string(r.reduced));
  }
  return r;
}

TransformationRecord transformation_formula(const GradedModule& m, const ElementSequence& seq) {
  const std::size_t d = m.grading_dimension();
  const MultiDegree k = seq.type(d);
  GradedModule q = quotient_by_sequence(m, seq);
  if (!(q.hilbert().polynomial.degree() <= 0)) {
    throw Error(ErrorCode::NotASystem, "sequence " + seq.to_string() +
                                           " is not a mixed multiplicity system");
  }
  TransformationRecord rec;
  rec.quotient_length = eventual_length(q);
  rec.total = rec.quotient_length;
  GradedModule cur = m;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    GradedModule colon = cur.annihilator_of(seq[i]);
    TransformationSummand s;
    s.index = i + 1;
    s.type = k - seq.prefix_type(d, i + 1);
    s.module = colon.description();
    s.defined = is_defined(colon, s.type);
    if (!s.defined) {
      throw Error(ErrorCode::NotDefined, "summand e(" + s.module + ";" + s.type.to_string() +
                                             ") is not defined");
    }
    s.value = mixed_multiplicity(colon, s.type).value;
    rec.total -= s.value;
    rec.summands.push_back(std::move(s));
    cur = cur.quotient_by(seq[i]);
  }
  return rec;
}

bool positivity(const GradedModule& m, const MultiDegree& k, std::uint64_t seed) {
  MixedMultiplicityResult r = mixed_multiplicity_via_filter(m, k, seed);
  if (*r.positive != (r.value > 0)) {
    throw Error(ErrorCode::Mismatch, "positivity of e(M;" + k.to_string() +
                                         ") disagrees with dim Supp_{++}(M/xM)");
  }
  return *r.positive;
}

}  // namespace multimult
