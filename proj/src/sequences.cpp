#include "multimult/sequences.hpp"

#include <random>

#include "multimult/error.hpp"

namespace multimult {

ElementSequence::ElementSequence(std::vector<HomogeneousElement> elements)
    : elements_(std::move(elements)) {}

MultiDegree ElementSequence::type(std::size_t d) const { return prefix_type(d, elements_.size()); }

MultiDegree ElementSequence::prefix_type(std::size_t d, std::size_t count) const {
  MultiDegree t(d);
  for (std::size_t i = 0; i < count; ++i) {
    int slot = elements_[i].unit_slot();
    if (slot < 0) {
      throw Error(ErrorCode::NonUnitDegree, "sequence element " + elements_[i].to_string() +
                                                " does not have unit degree");
    }
    t[slot] += 1;
  }
  return t;
}

ElementSequence ElementSequence::suffix(std::size_t from) const {
  return ElementSequence(std::vector<HomogeneousElement>(elements_.begin() + from, elements_.end()));
}

ElementSequence ElementSequence::prefix(std::size_t count) const {
  return ElementSequence(
      std::vector<HomogeneousElement>(elements_.begin(), elements_.begin() + count));
}

std::string ElementSequence::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) out += ", ";
    out += elements_[i].to_string();
  }
  return out;
}

FilterRegularCheck is_filter_regular(const GradedModule& m, const HomogeneousElement& a) {
  HilbertDatum h = m.annihilator_of(a).hilbert();
  bool regular = h.polynomial.is_zero();
  return FilterRegularCheck{regular, std::move(h)};
}

std::string to_string(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::FilterRegular: return "FILTER_REGULAR";
    case SequenceKind::MixedMultSystem: return "MIXED_MULT_SYSTEM";
    case SequenceKind::Both: return "BOTH";
    case SequenceKind::Neither: return "NEITHER";
  }
  return "NEITHER";
}

GradedModule quotient_by_sequence(const GradedModule& m, const ElementSequence& seq) {
  GradedModule cur = m;
  for (const auto& x : seq.elements()) cur = cur.quotient_by(x);
  return cur;
}

SequenceCertificate certify_sequence(const GradedModule& m, const ElementSequence& seq) {
  SequenceCertificate cert;
  cert.filter_regular = true;
  GradedModule cur = m;
  for (const auto& x : seq.elements()) {
    FilterRegularCheck step = is_filter_regular(cur, x);
    cert.certified = cert.certified && step.annihilator.certified;
    cert.filter_regular = cert.filter_regular && step.regular;
    cert.annihilators.push_back(std::move(step.annihilator));
    cur = cur.quotient_by(x);
  }
  cert.quotient = cur.hilbert();
  cert.certified = cert.certified && cert.quotient.certified;
  cert.system = cert.quotient.polynomial.degree() <= 0;
  if (cert.filter_regular && cert.system) {
    cert.kind = SequenceKind::Both;
  } else if (cert.filter_regular) {
    cert.kind = SequenceKind::FilterRegular;
  } else if (cert.system) {
    cert.kind = SequenceKind::MixedMultSystem;
  }
  return cert;
}

bool is_filter_regular_sequence(const GradedModule& m, const ElementSequence& seq) {
  GradedModule cur = m;
  for (const auto& x : seq.elements()) {
    if (!is_filter_regular(cur, x).regular) return false;
    cur = cur.quotient_by(x);
  }
  return true;
}

bool is_mixed_mult_system(const GradedModule& m, const ElementSequence& seq) {
  return quotient_by_sequence(m, seq).hilbert().polynomial.degree() <= 0;
}

namespace {

constexpr int kAttempts = 20;

int coefficient_bound(int attempt) {
  if (attempt < 7) return 10;
  if (attempt < 14) return 100;
  return 1000;
}

}  // namespace

ElementSequence build_filter_regular_sequence(const GradedModule& m, const MultiDegree& k,
                                              std::uint64_t seed) {
  const RingPtr& ring = m.ring();
  const std::size_t d = ring->grading_dimension();
  if (k.size() != d) throw Error(ErrorCode::DimensionMismatch, "type has the wrong length");
  if (!k.is_natural()) throw Error(ErrorCode::InvalidArgument, "type must be natural");
  std::mt19937_64 rng(seed);
  std::vector<HomogeneousElement> chosen;
  GradedModule cur = m;
  for (std::size_t slot = 0; slot < d; ++slot) {
    const auto& vars = ring->slot_variables(slot);
    for (int step = 0; step < k[slot]; ++step) {
      std::optional<HomogeneousElement> found;
      if (vars.empty()) {
        // Only the zero element has this degree.
        auto zero = HomogeneousElement::zero(ring, MultiDegree::unit(d, slot));
        if (is_filter_regular(cur, zero).regular) found = zero;
      }
      for (int v : vars) {
        auto x = HomogeneousElement::variable(ring, v);
        if (is_filter_regular(cur, x).regular) {
          found = x;
          break;
        }
      }
      for (int attempt = 0; !found && !vars.empty() && attempt < kAttempts; ++attempt) {
        const int bound = coefficient_bound(attempt);
        std::uniform_int_distribution<int> coeff(-bound, bound);
        HomogeneousElement::Terms terms;
        for (int v : vars) {
          int c = coeff(rng);
          if (c != 0) terms.emplace(Monomial::variable(ring->variable_count(), v), c);
        }
        if (terms.empty()) continue;
        HomogeneousElement x(ring, std::move(terms), MultiDegree::unit(d, slot));
        if (is_filter_regular(cur, x).regular) found = x;
      }
      if (!found) {
        throw Error(ErrorCode::ConstructionFailed,
                    "no filter-regular element of slot " + std::to_string(slot + 1) + " found on " +
                        cur.description());
      }
      cur = cur.quotient_by(*found);
      chosen.push_back(*found);
    }
  }
  return ElementSequence(std::move(chosen));
}

}  // namespace multimult
