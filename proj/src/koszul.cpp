#include "multimult/koszul.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

#include "multimult/error.hpp"
#include "multimult/parallel.hpp"

namespace multimult {

ModuleKoszulOperand::ModuleKoszulOperand(GradedModule m, ElementSequence seq)
    : m_(std::move(m)), seq_(std::move(seq)) {
  for (const auto& x : seq_.elements()) {
    require_same_ring(m_.ring(), x.ring());
    if (x.unit_slot() < 0) {
      throw Error(ErrorCode::NonUnitDegree, "element " + x.to_string() + " does not have unit degree");
    }
  }
}

ModulePiece ModuleKoszulOperand::piece(const MultiDegree& n) const { return m_.piece(n); }

SparseVector ModuleKoszulOperand::multiply(std::size_t j, const MultiDegree& n,
                                           const SparseVector& v) const {
  return m_.multiply(seq_[j], n, v);
}

namespace {

// Sparse vectors living in disjoint column blocks, merged into one row.
SparseVector concatenate(std::vector<std::pair<int, SparseVector>> parts) {
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector out;
  for (auto& [offset, v] : parts) {
    for (auto& [c, x] : v) out.emplace_back(c + offset, std::move(x));
  }
  return out;
}

// Position of bit j among the set bits of mask.
int position(unsigned mask, std::size_t j) {
  return std::popcount(mask & ((1u << j) - 1u));
}

}  // namespace

KoszulSlice koszul_slice(const KoszulOperand& op, const MultiDegree& n) {
  const std::size_t s = op.length();
  if (s > 16) throw Error(ErrorCode::InvalidArgument, "sequence too long for a Koszul complex");
  const unsigned subsets = 1u << s;

  std::vector<MultiDegree> degree(subsets, n);
  std::vector<ModulePiece> pieces(subsets);
  for (unsigned mask = 0; mask < subsets; ++mask) {
    for (std::size_t j = 0; j < s; ++j) {
      if (mask & (1u << j)) degree[mask] -= op.element_degree(j);
    }
    pieces[mask] = op.piece(degree[mask]);
  }
  // Column offsets of each summand inside its homological level.
  std::vector<int> offset(subsets, 0);
  std::vector<int> level_width(s + 1, 0);
  for (unsigned mask = 0; mask < subsets; ++mask) {
    int lvl = std::popcount(mask);
    offset[mask] = level_width[lvl];
    level_width[lvl] += pieces[mask].ambient();
  }

  KoszulSlice slice;
  slice.degree = n;
  slice.chain_dims.assign(s + 1, 0);
  std::vector<Integer> lower_rank(s + 1, 0);
  for (unsigned mask = 0; mask < subsets; ++mask) {
    int lvl = std::popcount(mask);
    slice.chain_dims[lvl] += pieces[mask].dimension();
    lower_rank[lvl] += pieces[mask].lower->rank();
  }

  for (std::size_t lvl = 1; lvl <= s; ++lvl) {
    std::vector<SparseVector> rows;
    for (unsigned mask = 0; mask < subsets; ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != lvl) continue;
      for (const auto& u : pieces[mask].upper->rows()) {
        std::vector<std::pair<int, SparseVector>> parts;
        for (std::size_t j = 0; j < s; ++j) {
          if (!(mask & (1u << j))) continue;
          const unsigned target = mask & ~(1u << j);
          SparseVector v = op.multiply(j, degree[mask], u);
          if (position(mask, j) % 2 == 1) v = scaled(v, -1);
          parts.emplace_back(offset[target], std::move(v));
        }
        SparseVector row = concatenate(std::move(parts));
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
    for (unsigned mask = 0; mask < subsets; ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != lvl - 1) continue;
      for (const auto& w : pieces[mask].lower->rows()) rows.push_back(shifted(w, offset[mask]));
    }
    slice.differential_ranks.push_back(rank(rows, level_width[lvl - 1]) - lower_rank[lvl - 1]);
  }

  slice.homology_lengths.assign(s + 1, 0);
  for (std::size_t i = 0; i <= s; ++i) {
    Integer out_rank = i >= 1 ? slice.differential_ranks[i - 1] : 0;
    Integer in_rank = i < s ? slice.differential_ranks[i] : 0;
    slice.homology_lengths[i] = slice.chain_dims[i] - out_rank - in_rank;
    Integer sign = i % 2 == 0 ? 1 : -1;
    slice.euler += sign * slice.homology_lengths[i];
    slice.chain_euler += sign * slice.chain_dims[i];
  }

  // d o d must land in the lower part of every summand two levels down.
  for (unsigned mask = 0; mask < subsets && slice.d_squared_zero; ++mask) {
    if (std::popcount(mask) < 2) continue;
    for (const auto& u : pieces[mask].upper->rows()) {
      std::map<unsigned, SparseVector> image;
      for (std::size_t j = 0; j < s; ++j) {
        if (!(mask & (1u << j))) continue;
        const unsigned mid = mask & ~(1u << j);
        SparseVector v = op.multiply(j, degree[mask], u);
        for (std::size_t l = 0; l < s; ++l) {
          if (!(mid & (1u << l))) continue;
          const unsigned low = mid & ~(1u << l);
          int sign = (position(mask, j) + position(mid, l)) % 2 == 0 ? 1 : -1;
          image[low] = axpy(image[low], sign, op.multiply(l, degree[mid], v));
        }
      }
      for (const auto& [low, vec] : image) {
        if (!pieces[low].lower->contains(vec)) slice.d_squared_zero = false;
      }
    }
  }
  return slice;
}

KoszulSlice koszul_slice(const GradedModule& m, const ElementSequence& seq, const MultiDegree& n) {
  return koszul_slice(ModuleKoszulOperand(m, seq), n);
}

EulerResult stabilized_euler(const KoszulOperand& op, const MultiDegree& origin, int max_escalations) {
  MultiDegree lo = origin;
  const std::size_t d = op.grading_dimension();
  for (int attempt = 0;; ++attempt) {
    std::vector<MultiDegree> points;
    for_each_in_box(lo, lo + MultiDegree(d, 1), [&](const MultiDegree& n) { points.push_back(n); });
    std::vector<KoszulSlice> slices(points.size());
    parallel_for(points.size(), [&](std::size_t i) { slices[i] = koszul_slice(op, points[i]); });
    bool constant = std::all_of(slices.begin(), slices.end(), [&](const KoszulSlice& s) {
      return s.euler == slices.front().euler;
    });
    if (constant) return EulerResult{slices.front().euler, true, lo, std::move(slices)};
    if (attempt >= max_escalations) {
      throw Error(ErrorCode::NonConstantWindow,
                  "Euler characteristic not constant on the box at " + lo.to_string());
    }
    for (std::size_t i = 0; i < d; ++i) lo[i] = std::max(1, 2 * lo[i]);
  }
}

EulerResult euler_characteristic(const GradedModule& m, const ElementSequence& seq) {
  const std::size_t d = m.grading_dimension();
  if (!is_mixed_mult_system(m, seq)) {
    throw Error(ErrorCode::NotASystem, "sequence " + seq.to_string() +
                                           " is not a mixed multiplicity system");
  }
  HilbertDatum h = m.hilbert();
  MultiDegree origin = h.threshold + seq.type(d);
  EulerResult r = stabilized_euler(ModuleKoszulOperand(m, seq), origin, h.certified ? 0 : 3);
  r.certified = h.certified;
  return r;
}

namespace {

Integer symbol_rec(const GradedModule& m, const ElementSequence& seq, std::size_t i) {
  HilbertDatum h = m.hilbert();
  // Every subquotient of an eventually zero module is eventually zero.
  if (h.polynomial.is_zero()) return 0;
  if (i == seq.size()) {
    if (!h.polynomial.is_constant()) {
      throw Error(ErrorCode::BaseNotConstant, "Hilbert polynomial " + h.polynomial.to_string() +
                                                  " of " + m.description() + " is not constant");
    }
    return h.polynomial.constant_term();
  }
  return symbol_rec(m.quotient_by(seq[i]), seq, i + 1) -
         symbol_rec(m.annihilator_of(seq[i]), seq, i + 1);
}

void require_system(const GradedModule& m, const ElementSequence& seq) {
  if (!is_mixed_mult_system(m, seq)) {
    throw Error(ErrorCode::NotASystem, "sequence " + seq.to_string() +
                                           " is not a mixed multiplicity system");
  }
}

}  // namespace

Integer mixed_mult_symbol(const GradedModule& m, const ElementSequence& seq) {
  require_system(m, seq);
  return symbol_rec(m, seq, 0);
}

std::vector<ElementSequence> non_regular_variable_systems(const GradedModule& m, const MultiDegree& k,
                                                          std::size_t limit) {
  std::vector<ElementSequence> out;
  const RingPtr& ring = m.ring();
  const std::size_t d = ring->grading_dimension();
  for (std::size_t i = 0; i < d; ++i) {
    if (static_cast<std::size_t>(k[i]) > ring->slot_size(i)) return out;
  }
  constexpr int kMaxCandidates = 200;
  int tried = 0;
  std::vector<HomogeneousElement> cur;
  std::vector<bool> used(ring->variable_count(), false);
  std::function<void(std::size_t, int)> go = [&](std::size_t slot, int left) {
    if (out.size() >= limit || tried >= kMaxCandidates) return;
    if (slot == d) {
      ++tried;
      ElementSequence seq(cur);
      if (is_mixed_mult_system(m, seq) && !is_filter_regular_sequence(m, seq)) out.push_back(seq);
      return;
    }
    if (left == 0) {
      go(slot + 1, slot + 1 < d ? k[slot + 1] : 0);
      return;
    }
    for (int v : ring->slot_variables(slot)) {
      if (used[v]) continue;
      used[v] = true;
      cur.push_back(HomogeneousElement::variable(ring, v));
      go(slot, left - 1);
      cur.pop_back();
      used[v] = false;
    }
  };
  go(0, k[0]);
  return out;
}

MainTheoremReport verify_main_theorem(const GradedModule& m, const MultiDegree& k,
                                      const MainTheoremOptions& options) {
  MainTheoremReport rep;
  rep.k = k;
  MixedMultiplicityResult delta = mixed_multiplicity(m, k);
  MixedMultiplicityResult filter = mixed_multiplicity_via_filter(m, k, options.seed);
  rep.delta = delta.value;
  rep.filter = filter.value;
  rep.witness = *filter.witness;
  EulerResult chi = euler_characteristic(m, rep.witness);
  rep.chi = chi.value;
  rep.slices = std::move(chi.slices);
  rep.symbol = mixed_mult_symbol(m, rep.witness);
  rep.positive = *filter.positive;
  rep.certified = delta.certified && filter.certified && chi.certified;

  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::Mismatch,
                what + " for e(M;" + k.to_string() + ") on " + m.description() + ": DELTA=" +
                    std::to_string(rep.delta) + " FILTER=" + std::to_string(rep.filter) +
                    " CHI=" + std::to_string(rep.chi) + " SYMBOL=" + std::to_string(rep.symbol) +
                    " witness=(" + rep.witness.to_string() + ")");
  };
  if (rep.delta < 0) fail("negative mixed multiplicity");
  if (rep.delta != rep.filter || rep.delta != rep.chi || rep.delta != rep.symbol) {
    fail("routes disagree");
  }
  if (rep.positive != (rep.delta > 0)) fail("positivity disagrees with dim Supp_{++}(M/xM)");

  if (m.kind() == GradedModule::Kind::Monomial && options.extra_systems > 0) {
    for (auto& seq : non_regular_variable_systems(m, k, options.extra_systems)) {
      SystemCheck check;
      check.sequence = seq;
      check.filter_regular = false;
      check.quotient_length = eventual_length(quotient_by_sequence(m, seq));
      EulerResult e = euler_characteristic(m, seq);
      check.chi = e.value;
      check.slices = std::move(e.slices);
      check.symbol = mixed_mult_symbol(m, seq);
      check.transformation = transformation_formula(m, seq);
      if (rep.delta > check.quotient_length) fail("length inequality fails for (" + seq.to_string() + ")");
      if (check.chi != rep.delta || check.symbol != rep.delta) {
        fail("chi/symbol disagree on system (" + seq.to_string() + ")");
      }
      if (check.transformation.total != rep.delta) {
        fail("transformation formula fails on system (" + seq.to_string() + ")");
      }
      rep.other_systems.push_back(std::move(check));
    }
  }
  return rep;
}

}  // namespace multimult
