#include "multimult/monomial_ideal.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "multimult/error.hpp"

namespace multimult {

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> generators)
    : ring_(std::move(ring)), gens_(std::move(generators)) {
  for (const auto& g : gens_) {
    if (g.size() != ring_->variable_count()) {
      throw Error(ErrorCode::RingMismatch, "monomial has the wrong number of exponents");
    }
  }
  minimalize();
}

MonomialIdeal MonomialIdeal::unit(RingPtr ring) {
  const std::size_t n = ring->variable_count();
  return MonomialIdeal(std::move(ring), {Monomial(n)});
}

MonomialIdeal MonomialIdeal::of_variables(RingPtr ring, const std::vector<int>& vars) {
  std::vector<Monomial> gens;
  for (int v : vars) gens.push_back(Monomial::variable(ring->variable_count(), v));
  return MonomialIdeal(std::move(ring), std::move(gens));
}

void MonomialIdeal::minimalize() {
  std::sort(gens_.begin(), gens_.end(), [](const Monomial& a, const Monomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return a > b;
  });
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  // A divisor always has smaller total degree, so checking earlier entries
  // suffices.
  std::vector<Monomial> kept;
  for (const auto& g : gens_) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) kept.push_back(g);
  }
  gens_ = std::move(kept);
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  require_same_ring(ring_, other.ring_);
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

MonomialIdeal MonomialIdeal::operator+(const MonomialIdeal& other) const {
  require_same_ring(ring_, other.ring_);
  std::vector<Monomial> gens = gens_;
  gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
  return MonomialIdeal(ring_, std::move(gens));
}

MonomialIdeal MonomialIdeal::operator*(const MonomialIdeal& other) const {
  require_same_ring(ring_, other.ring_);
  std::vector<Monomial> gens;
  for (const auto& g : gens_) {
    for (const auto& h : other.gens_) gens.push_back(g * h);
  }
  return MonomialIdeal(ring_, std::move(gens));
}

MonomialIdeal MonomialIdeal::multiply(const Monomial& m) const {
  std::vector<Monomial> gens;
  for (const auto& g : gens_) gens.push_back(g * m);
  return MonomialIdeal(ring_, std::move(gens));
}

MonomialIdeal MonomialIdeal::pow(int e) const {
  if (e < 0) throw Error(ErrorCode::InvalidArgument, "negative ideal power");
  MonomialIdeal out = unit(ring_);
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& other) const {
  require_same_ring(ring_, other.ring_);
  std::vector<Monomial> gens;
  for (const auto& g : gens_) {
    for (const auto& h : other.gens_) gens.push_back(g.lcm(h));
  }
  return MonomialIdeal(ring_, std::move(gens));
}

MonomialIdeal MonomialIdeal::colon(const Monomial& m) const {
  std::vector<Monomial> gens;
  for (const auto& g : gens_) gens.push_back(g / g.gcd(m));
  return MonomialIdeal(ring_, std::move(gens));
}

MonomialIdeal MonomialIdeal::colon(const MonomialIdeal& other) const {
  require_same_ring(ring_, other.ring_);
  MonomialIdeal out = unit(ring_);
  for (const auto& g : other.gens_) out = out.intersect(colon(g));
  return out;
}

MonomialIdeal MonomialIdeal::saturate(const MonomialIdeal& other) const {
  MonomialIdeal cur = *this;
  while (true) {
    MonomialIdeal next = cur.colon(other);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

int MonomialIdeal::max_generator_degree() const {
  int best = 0;
  for (const auto& g : gens_) best = std::max(best, g.total_degree());
  return best;
}

ExtendedDegree MonomialIdeal::krull_dimension() const {
  if (is_unit()) return ExtendedDegree::minus_infinity();
  const std::size_t n = ring_->variable_count();
  if (n > 24) throw Error(ErrorCode::InvalidArgument, "too many variables for dimension count");
  std::vector<std::uint32_t> supports;
  for (const auto& g : gens_) {
    std::uint32_t mask = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (g[v] > 0) mask |= 1u << v;
    }
    supports.push_back(mask);
  }
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    int size = std::popcount(s);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [&](std::uint32_t sup) { return (sup & ~s) == 0; });
    if (independent) best = size;
  }
  return ExtendedDegree::finite(best);
}

std::vector<Monomial> MonomialIdeal::standard_monomials(const MultiDegree& n) const {
  std::vector<Monomial> out;
  for (auto& m : monomials_of_degree(*ring_, n)) {
    if (!contains(m)) out.push_back(std::move(m));
  }
  return out;
}

Integer MonomialIdeal::count_standard_monomials(const MultiDegree& n) const {
  Integer count = 0;
  for (const auto& m : monomials_of_degree(*ring_, n)) {
    if (!contains(m)) ++count;
  }
  return count;
}

std::string MonomialIdeal::to_string() const {
  if (gens_.empty()) return "0";
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].to_string(*ring_);
  }
  return out + ")";
}

std::vector<std::pair<Monomial, Integer>> hilbert_numerator(const MonomialIdeal& a) {
  // Multiply out prod_g (1 - t^g) where products of monomials are lcms.
  std::map<Monomial, Integer> acc;
  acc.emplace(Monomial(a.ring()->variable_count()), 1);
  for (const auto& g : a.generators()) {
    std::vector<std::pair<Monomial, Integer>> added;
    added.reserve(acc.size());
    for (const auto& [m, c] : acc) added.emplace_back(m.lcm(g), -c);
    for (const auto& [m, c] : added) {
      Integer& slot = acc[m];
      slot = checked_add(slot, c);
    }
    std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
  }
  return {acc.begin(), acc.end()};
}

namespace {

// dim S_n for a single slot with c variables at degree t.
Integer slot_count(int c, Integer t) {
  if (t < 0) return 0;
  if (c == 0) return t == 0 ? 1 : 0;
  return binomial(t + c - 1, c - 1);
}

}  // namespace

Integer hilbert_function(const MonomialIdeal& a, const MultiDegree& n) {
  const Ring& ring = *a.ring();
  Integer total = 0;
  for (const auto& [m, c] : hilbert_numerator(a)) {
    MultiDegree deg = m.degree(ring);
    Integer term = c;
    for (std::size_t i = 0; i < ring.grading_dimension() && term != 0; ++i) {
      term = checked_mul(term, slot_count(static_cast<int>(ring.slot_size(i)), n[i] - deg[i]));
    }
    total = checked_add(total, term);
  }
  return total;
}

HilbertDatum hilbert_series_polynomial(const MonomialIdeal& a) {
  const Ring& ring = *a.ring();
  const std::size_t d = ring.grading_dimension();
  auto numerator = hilbert_numerator(a);

  NumericalPolynomial poly(d);
  MultiDegree threshold(d);
  for (const auto& [m, c] : numerator) {
    MultiDegree deg = m.degree(ring);
    threshold = componentwise_max(threshold, deg);
    // Per slot, the binomial-basis coefficients of t -> binom(t - a + c - 1, c - 1):
    // e_j = sum_s (-1)^s binom(j, s) g(-1 - s).
    std::vector<std::vector<Integer>> factors(d);
    bool vanishes = false;
    for (std::size_t i = 0; i < d; ++i) {
      const int ci = static_cast<int>(ring.slot_size(i));
      if (ci == 0) {
        vanishes = true;
        break;
      }
      for (int j = 0; j < ci; ++j) {
        Integer e = 0;
        for (int s = 0; s <= j; ++s) {
          Integer g = binomial(-1 - s - deg[i] + ci - 1, ci - 1);
          Integer term = checked_mul(binomial(j, s), g);
          e = checked_add(e, s % 2 == 0 ? term : -term);
        }
        factors[i].push_back(e);
      }
    }
    if (vanishes) continue;
    MultiDegree lo(d), hi(d);
    for (std::size_t i = 0; i < d; ++i) hi[i] = static_cast<int>(factors[i].size()) - 1;
    for_each_in_box(lo, hi, [&](const MultiDegree& k) {
      Integer coeff = c;
      for (std::size_t i = 0; i < d && coeff != 0; ++i) coeff = checked_mul(coeff, factors[i][k[i]]);
      poly.add_term(k, coeff);
    });
  }
  // A slot without variables only contributes at the exact degree of the
  // numerator term, so validity starts one step later.
  if (!numerator.empty()) {
    for (std::size_t i = 0; i < d; ++i) {
      if (ring.slot_size(i) == 0) threshold[i] += 1;
    }
  }
  return HilbertDatum{std::move(poly), std::move(threshold), true, std::nullopt};
}

HilbertDatum hilbert_of_subquotient(const MonomialIdeal& outer, const MonomialIdeal& inner) {
  require_same_ring(outer.ring(), inner.ring());
  HilbertDatum sv = hilbert_series_polynomial(inner);
  HilbertDatum su = hilbert_series_polynomial(outer);
  return HilbertDatum{sv.polynomial - su.polynomial, componentwise_max(sv.threshold, su.threshold),
                      true, std::nullopt};
}

Integer hilbert_function(const MonomialIdeal& outer, const MonomialIdeal& inner,
                         const MultiDegree& n) {
  return checked_add(hilbert_function(inner, n), -hilbert_function(outer, n));
}

}  // namespace multimult
