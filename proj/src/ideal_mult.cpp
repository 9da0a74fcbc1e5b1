#include "multimult/ideal_mult.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "multimult/error.hpp"
#include "multimult/graded_linalg.hpp"
#include "multimult/parallel.hpp"

namespace multimult {

namespace {

bool is_primary_to_maximal(const MonomialIdeal& j) {
  const std::size_t n = j.ring()->variable_count();
  for (std::size_t v = 0; v < n; ++v) {
    bool found = false;
    for (const auto& g : j.generators()) {
      if (g[v] > 0 && g.total_degree() == g[v]) found = true;
    }
    if (!found) return false;
  }
  return true;
}

// Monomials outside an ideal primary to the maximal ideal.
std::vector<Monomial> standard_monomials(const MonomialIdeal& j) {
  const std::size_t n = j.ring()->variable_count();
  std::vector<Monomial> out;
  Monomial cur(n);
  std::function<void(std::size_t)> go = [&](std::size_t v) {
    if (j.contains(cur)) return;
    if (v == n) {
      out.push_back(cur);
      return;
    }
    // Raising the exponent of v only moves deeper into the ideal.
    for (int e = 0;; ++e) {
      cur[v] = e;
      if (j.contains(cur)) break;
      go(v + 1);
    }
    cur[v] = 0;
  };
  go(0);
  std::sort(out.begin(), out.end());
  return out;
}

MonomialIdeal sequence_ideal(const RingPtr& ring, const SlotSequence& seq, std::size_t count) {
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < count; ++i) gens.push_back(seq[i].monomial);
  return MonomialIdeal(ring, std::move(gens));
}

void require_in_slot(const IdealSystem& sys, const SlotElement& a) {
  if (a.slot > sys.ideal_count()) {
    throw Error(ErrorCode::InvalidArgument, "slot " + std::to_string(a.slot) + " out of range");
  }
  if (!sys.slot_ideal(a.slot).contains(a.monomial)) {
    throw Error(ErrorCode::NotInIdeal, a.monomial.to_string(*sys.ring()) + " is not in " +
                                           sys.slot_ideal(a.slot).to_string());
  }
}

}  // namespace

namespace detail {

struct PowerTable {
  OnceCache<MultiDegree, std::shared_ptr<const MonomialIdeal>> powers;
};

}  // namespace detail

IdealSystem::IdealSystem(MonomialIdeal q, MonomialIdeal j, std::vector<MonomialIdeal> ideals)
    : IdealSystem(MonomialIdeal::unit(q.ring()), q, std::move(j), std::move(ideals),
                  std::make_shared<detail::PowerTable>()) {}

IdealSystem::IdealSystem(MonomialIdeal outer, MonomialIdeal inner, MonomialIdeal j,
                         std::vector<MonomialIdeal> ideals, std::shared_ptr<detail::PowerTable> powers)
    : outer_(std::move(outer)), inner_(std::move(inner)), j_(std::move(j)), ideals_(std::move(ideals)),
      product_(j_), powers_(std::move(powers)) {
  require_same_ring(outer_.ring(), j_.ring());
  require_same_ring(inner_.ring(), j_.ring());
  if (!is_primary_to_maximal(j_)) {
    throw Error(ErrorCode::InvalidArgument, "J = " + j_.to_string() + " is not primary to the maximal ideal");
  }
  if (!outer_.contains(inner_)) {
    throw Error(ErrorCode::InvalidArgument, inner_.to_string() + " is not contained in " + outer_.to_string());
  }
  for (const auto& i : ideals_) {
    require_same_ring(i.ring(), j_.ring());
    if (i.is_zero()) throw Error(ErrorCode::InvalidArgument, "the ideals I_i must be nonzero");
    product_ = product_ * i;
  }
}

IdealSystem IdealSystem::with_module(MonomialIdeal outer, MonomialIdeal inner) const {
  return IdealSystem(std::move(outer), std::move(inner), j_, ideals_, powers_);
}

const MonomialIdeal& IdealSystem::power_product(const MultiDegree& n) const {
  if (n.size() != ideals_.size() + 1) {
    throw Error(ErrorCode::DimensionMismatch, "degree " + n.to_string() + " for " +
                                                  std::to_string(ideals_.size() + 1) + " slots");
  }
  auto p = powers_->powers.get(n, [&]() -> std::shared_ptr<const MonomialIdeal> {
    for (std::size_t i = 0; i < n.size(); ++i) {
      if (n[i] > 0) return std::make_shared<const MonomialIdeal>(power_product(n - MultiDegree::unit(n.size(), i)) * slot_ideal(i));
    }
    return std::make_shared<const MonomialIdeal>(MonomialIdeal::unit(ring()));
  });
  return *p;
}

const MonomialIdeal& IdealSystem::slot_ideal(std::size_t slot) const {
  return slot == 0 ? j_ : ideals_.at(slot - 1);
}

int IdealSystem::max_generator_degree() const {
  int best = std::max({1, outer_.max_generator_degree(), inner_.max_generator_degree(),
                       j_.max_generator_degree()});
  for (const auto& i : ideals_) best = std::max(best, i.max_generator_degree());
  return best;
}

std::string IdealSystem::module_string() const {
  const std::string v = inner_.is_zero() ? "(0)" : inner_.to_string();
  if (outer_.is_unit()) return "R/" + v;
  return outer_.to_string() + "/" + v;
}

MultiDegree slot_type(const SlotSequence& seq, std::size_t slots) {
  MultiDegree t(slots);
  for (const auto& a : seq) {
    if (a.slot >= slots) throw Error(ErrorCode::InvalidArgument, "slot out of range");
    ++t[a.slot];
  }
  return t;
}

std::string to_string(const SlotSequence& seq, const Ring& ring) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ", ";
    out += seq[i].monomial.to_string(ring) + "@" + std::to_string(seq[i].slot);
  }
  return out;
}

namespace detail {

using BasisPtr = std::shared_ptr<const std::vector<Monomial>>;

// Shared by a base module and everything derived from it.
struct AssocBase {
  explicit AssocBase(const IdealSystem& s) : system(s), j_standard(standard_monomials(s.j())) {}
  IdealSystem system;
  std::vector<Monomial> j_standard;
  // P(n) U, the numerator ideal without V.
  OnceCache<MultiDegree, std::shared_ptr<const MonomialIdeal>> module_powers;
};

struct AssocNode {
  std::shared_ptr<AssocBase> base;
  std::shared_ptr<AssocNode> parent;
  char op = 0;
  SlotElement element;
  int operations = 0;
  std::string history;

  OnceCache<MultiDegree, BasisPtr> bases;
  std::once_flag hilbert_once;
  std::optional<HilbertDatum> hilbert;
  std::mutex children_mutex;
  std::map<std::pair<char, std::pair<std::vector<int>, std::size_t>>, std::shared_ptr<AssocNode>> children;
};

}  // namespace detail

using detail::AssocBase;
using detail::AssocNode;
using detail::BasisPtr;

namespace {

const MonomialIdeal& module_power(AssocBase& b, const MultiDegree& n) {
  if (b.system.outer().is_unit()) return b.system.power_product(n);
  auto p = b.module_powers.get(n, [&] {
    return std::make_shared<const MonomialIdeal>(b.system.power_product(n) * b.system.outer());
  });
  return *p;
}

BasisPtr compute_basis(AssocNode& node, const MultiDegree& n);

BasisPtr basis_of(AssocNode& node, const MultiDegree& n) {
  if (!n.is_natural()) return std::make_shared<const std::vector<Monomial>>();
  return node.bases.get(n, [&] { return compute_basis(node, n); });
}

BasisPtr compute_basis(AssocNode& node, const MultiDegree& n) {
  auto out = std::make_shared<std::vector<Monomial>>();
  if (!node.parent) {
    // A monomial of A \ B is g*u with g a generator of P(n)U and u outside J,
    // since g*u with u in J already lies in P(n + e_0)U.
    AssocBase& b = *node.base;
    const MonomialIdeal& a = module_power(b, n);
    const MonomialIdeal& next = module_power(b, n + MultiDegree::unit(n.size(), 0));
    const MonomialIdeal& v = b.system.inner();
    for (const auto& g : a.generators()) {
      for (const auto& u : b.j_standard) {
        Monomial m = g * u;
        if (!next.contains(m) && !v.contains(m)) out->push_back(std::move(m));
      }
    }
    std::sort(out->begin(), out->end());
    out->erase(std::unique(out->begin(), out->end()), out->end());
    return out;
  }
  const MultiDegree e = MultiDegree::unit(n.size(), node.element.slot);
  const Monomial& a = node.element.monomial;
  BasisPtr here = basis_of(*node.parent, n);
  if (node.op == '/') {
    // Multiplying by a fixed monomial keeps the lexicographic order.
    BasisPtr below = basis_of(*node.parent, n - e);
    std::vector<Monomial> image;
    image.reserve(below->size());
    for (const auto& m : *below) image.push_back(a * m);
    std::set_difference(here->begin(), here->end(), image.begin(), image.end(), std::back_inserter(*out));
  } else {
    BasisPtr above = basis_of(*node.parent, n + e);
    for (const auto& m : *here) {
      if (!std::binary_search(above->begin(), above->end(), a * m)) out->push_back(m);
    }
  }
  return out;
}

ExtendedDegree module_dimension(const IdealSystem& s) {
  return s.inner().colon(s.outer()).krull_dimension();
}

HilbertDatum windowed_hilbert(const std::function<Integer(const MultiDegree&)>& length, std::size_t d,
                              int origin, int bound) {
  // Two adjacent boxes have to give the same polynomial.
  SamplingPolicy policy;
  policy.bounds = MultiDegree(d, bound);
  policy.max_escalations = 0;
  const int shift = 2 * bound + 2;
  constexpr int kEscalations = 3;
  for (int attempt = 0;; ++attempt) {
    try {
      policy.origin = MultiDegree(d, origin);
      HilbertDatum first = sampled_hilbert(length, policy);
      policy.origin = MultiDegree(d, origin + shift);
      HilbertDatum second = sampled_hilbert(length, policy);
      if (first.polynomial == second.polynomial) return first;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NonPolynomialWindow) throw;
    }
    if (attempt >= kEscalations) {
      throw Error(ErrorCode::NonPolynomialWindow, "length function not polynomial from degree " +
                                                      std::to_string(origin) + " on");
    }
    origin *= 2;
  }
}

}  // namespace

AssociatedModule::AssociatedModule(const IdealSystem& system) : node_(std::make_shared<AssocNode>()) {
  node_->base = std::make_shared<AssocBase>(system);
  node_->history = system.module_string();
}

const IdealSystem& AssociatedModule::system() const { return node_->base->system; }


std::shared_ptr<const std::vector<Monomial>> AssociatedModule::basis(const MultiDegree& n) const {
  if (n.size() != grading_dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "degree " + n.to_string() + " for " +
                                                  std::to_string(grading_dimension()) + " slots");
  }
  return basis_of(*node_, n);
}

Integer AssociatedModule::length(const MultiDegree& n) const {
  return static_cast<Integer>(basis(n)->size());
}

namespace {

AssociatedModule derived(const std::shared_ptr<AssocNode>& parent, char op, const SlotElement& a,
                         const std::function<AssociatedModule(std::shared_ptr<AssocNode>)>& wrap) {
  require_in_slot(parent->base->system, a);
  const auto key = std::make_pair(op, std::make_pair(a.monomial.exponents(), a.slot));
  std::lock_guard<std::mutex> lock(parent->children_mutex);
  auto it = parent->children.find(key);
  if (it == parent->children.end()) {
    auto node = std::make_shared<AssocNode>();
    node->base = parent->base;
    node->parent = parent;
    node->op = op;
    node->element = a;
    node->operations = parent->operations + 1;
    const std::string x = a.monomial.to_string(*parent->base->system.ring()) + "*";
    node->history = op == '/' ? parent->history + " /(" + x + ")" : "(0 :" + x + " in " + parent->history + ")";
    it = parent->children.emplace(key, std::move(node)).first;
  }
  return wrap(it->second);
}

}  // namespace

AssociatedModule AssociatedModule::quotient_by(const SlotElement& a) const {
  return derived(node_, '/', a, [](std::shared_ptr<AssocNode> n) { return AssociatedModule(std::move(n)); });
}

AssociatedModule AssociatedModule::annihilator_of(const SlotElement& a) const {
  return derived(node_, ':', a, [](std::shared_ptr<AssocNode> n) { return AssociatedModule(std::move(n)); });
}

AssociatedModule AssociatedModule::quotient_by_sequence(const SlotSequence& seq) const {
  AssociatedModule cur = *this;
  for (const auto& a : seq) cur = cur.quotient_by(a);
  return cur;
}

HilbertDatum AssociatedModule::hilbert() const {
  std::call_once(node_->hilbert_once, [&] {
    const std::size_t d = grading_dimension();
    if (node_->parent) {
      HilbertDatum up = AssociatedModule(node_->parent).hilbert();
      if (up.polynomial.is_zero()) {
        node_->hilbert = HilbertDatum{NumericalPolynomial::zero(d), up.threshold, false, std::nullopt};
        return;
      }
    }
    const ExtendedDegree dim = module_dimension(system());
    if (dim.is_minus_infinity()) {
      node_->hilbert = HilbertDatum{NumericalPolynomial::zero(d), MultiDegree(d), false, std::nullopt};
      return;
    }
    const int bound = std::max(0, dim.value() - 1);
    const int origin = system().max_generator_degree() + 1 + node_->operations;
    node_->hilbert = windowed_hilbert([&](const MultiDegree& n) { return length(n); }, d, origin, bound);
  });
  return *node_->hilbert;
}

std::string AssociatedModule::description() const { return "assoc(" + node_->history + ")"; }

AssociatedKoszulOperand::AssociatedKoszulOperand(AssociatedModule m, SlotSequence seq)
    : m_(std::move(m)), seq_(std::move(seq)) {
  for (const auto& a : seq_) require_in_slot(m_.system(), a);
}

MultiDegree AssociatedKoszulOperand::element_degree(std::size_t j) const {
  return MultiDegree::unit(grading_dimension(), seq_.at(j).slot);
}

ModulePiece AssociatedKoszulOperand::piece(const MultiDegree& n) const {
  auto b = m_.basis(n);
  const int size = static_cast<int>(b->size());
  return ModulePiece{std::make_shared<const GradedPieceBasis>(n, *b),
                     std::make_shared<const Echelon>(Echelon::identity(size)),
                     std::make_shared<const Echelon>(size)};
}

SparseVector AssociatedKoszulOperand::multiply(std::size_t j, const MultiDegree& n, const SparseVector& v) const {
  const SlotElement& a = seq_.at(j);
  auto source = m_.basis(n);
  auto target = m_.basis(n + element_degree(j));
  SparseVector out;
  for (const auto& [col, val] : v) {
    Monomial m = a.monomial * (*source)[col];
    auto it = std::lower_bound(target->begin(), target->end(), m);
    if (it != target->end() && *it == m) out.emplace_back(static_cast<int>(it - target->begin()), val);
  }
  return out;
}

Integer assoc_length(const IdealSystem& sys, int n0, const MultiDegree& n) {
  if (n.size() != sys.ideal_count()) {
    throw Error(ErrorCode::DimensionMismatch, "type " + n.to_string() + " for " +
                                                  std::to_string(sys.ideal_count()) + " ideals");
  }
  std::vector<int> full{n0};
  full.insert(full.end(), n.entries().begin(), n.entries().end());
  return AssociatedModule(sys).length(MultiDegree(full));
}

namespace {

MultiDegree full_type(const IdealSystem& sys, int k0, const MultiDegree& k) {
  if (k.size() != sys.ideal_count()) {
    throw Error(ErrorCode::DimensionMismatch, "type " + k.to_string() + " for " +
                                                  std::to_string(sys.ideal_count()) + " ideals");
  }
  std::vector<int> full{k0};
  full.insert(full.end(), k.entries().begin(), k.entries().end());
  return MultiDegree(full);
}

MixedMultiplicityResult coefficient(const HilbertDatum& h, const MultiDegree& type, const std::string& what) {
  if (!is_defined(h.polynomial, type)) {
    throw Error(ErrorCode::NotDefined, "e(" + what + ";" + type.to_string() +
                                           ") is not defined: the polynomial " + h.polynomial.to_string() +
                                           " has a term above it");
  }
  MixedMultiplicityResult r;
  r.k = type;
  r.defined = true;
  r.value = h.polynomial.coefficient(type);
  r.method = Method::Delta;
  r.certified = h.certified;
  return r;
}

}  // namespace

MixedMultiplicityResult ideal_mixed_multiplicity(const IdealSystem& sys, int k0, const MultiDegree& k) {
  return coefficient(AssociatedModule(sys).hilbert(), full_type(sys, k0, k), sys.module_string());
}

bool is_rees_superficial(const IdealSystem& sys, const Monomial& a, std::size_t slot) {
  require_in_slot(sys, {a, slot});
  AssocBase b(sys);
  const std::size_t d = sys.ideal_count() + 1;
  const int w = 2 * sys.max_generator_degree();
  const MonomialIdeal& v = sys.inner();
  std::vector<MultiDegree> points;
  for_each_in_box(MultiDegree(d, w), MultiDegree(d, w + 4), [&](const MultiDegree& n) { points.push_back(n); });
  std::vector<char> ok(points.size(), 0);
  parallel_for(points.size(), [&](std::size_t i) {
    // a II^n U + V always lies in the intersection. The intersection is
    // generated by V and the lcms of aU with II^n I_i U, so only those lcms
    // outside V need to be found in a II^n U.
    const MultiDegree& n = points[i];
    const MonomialIdeal& below = module_power(b, n);
    const MonomialIdeal& above = module_power(b, n + MultiDegree::unit(d, slot));
    for (const auto& g : sys.outer().generators()) {
      const Monomial ag = a * g;
      for (const auto& h : above.generators()) {
        Monomial m = ag.lcm(h);
        if (v.contains(m)) continue;
        if (!below.contains(m / a)) return;
      }
    }
    ok[i] = 1;
  });
  return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
}

bool is_weak_fc(const IdealSystem& sys, const Monomial& a, std::size_t slot) {
  require_in_slot(sys, {a, slot});
  const MonomialIdeal& u = sys.outer();
  const MonomialIdeal& v = sys.inner();
  MonomialIdeal killed = v.colon(a).intersect(u);
  MonomialIdeal torsion = v.saturate(sys.product()).intersect(u);
  if (!torsion.contains(killed)) return false;
  return is_rees_superficial(sys, a, slot);
}

IdealSystem quotient_system(const IdealSystem& sys, const SlotSequence& seq, std::size_t count) {
  if (count == 0) return sys;
  MonomialIdeal x = sequence_ideal(sys.ring(), seq, count);
  return sys.with_module(sys.outer(), sys.inner() + x * sys.outer());
}

bool is_rees_superficial_sequence(const IdealSystem& sys, const SlotSequence& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!is_rees_superficial(quotient_system(sys, seq, i), seq[i].monomial, seq[i].slot)) return false;
  }
  return true;
}

bool is_weak_fc_sequence(const IdealSystem& sys, const SlotSequence& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!is_weak_fc(quotient_system(sys, seq, i), seq[i].monomial, seq[i].slot)) return false;
  }
  return true;
}

namespace {

// xN : I^inf, as the ideal between V and U.
MonomialIdeal saturated_submodule(const IdealSystem& sys, const SlotSequence& seq) {
  const IdealSystem q = quotient_system(sys, seq, seq.size());
  return q.inner().saturate(sys.product()).intersect(sys.outer());
}

}  // namespace

ExtendedDegree saturation_quotient_dim(const IdealSystem& sys, const SlotSequence& seq) {
  return saturated_submodule(sys, seq).colon(sys.outer()).krull_dimension();
}

bool is_ideal_mult_system(const IdealSystem& sys, const SlotSequence& seq) {
  return saturation_quotient_dim(sys, seq) <= 1 && is_rees_superficial_sequence(sys, seq);
}

Integer hilbert_samuel(const MonomialIdeal& j, const MonomialIdeal& outer, const MonomialIdeal& inner) {
  const ExtendedDegree dim = inner.colon(outer).krull_dimension();
  if (dim.is_minus_infinity()) return 0;
  if (dim.value() > 1) {
    throw Error(ErrorCode::DimTooLarge, "dim " + outer.to_string() + "/" + inner.to_string() + " = " +
                                            dim.to_string() + " exceeds 1");
  }
  // With no ideals I_i the associated module is gr_J(N'), whose length is
  // eventually e(J; N') in dimension 1 and 0 in dimension 0.
  IdealSystem s = IdealSystem(MonomialIdeal::zero(j.ring()), j, {}).with_module(outer, inner);
  HilbertDatum h = AssociatedModule(s).hilbert();
  if (!h.polynomial.is_constant()) {
    throw Error(ErrorCode::Mismatch, "gr_J of a module of dimension <= 1 has length polynomial " +
                                         h.polynomial.to_string());
  }
  return h.polynomial.constant_term();
}

Integer saturation_multiplicity(const IdealSystem& sys, const SlotSequence& seq) {
  return hilbert_samuel(sys.j(), sys.outer(), saturated_submodule(sys, seq));
}

std::optional<SlotSequence> find_weak_fc_sequence(const IdealSystem& sys, const MultiDegree& type) {
  if (type.size() != sys.ideal_count() + 1) {
    throw Error(ErrorCode::DimensionMismatch, "type " + type.to_string() + " for " +
                                                  std::to_string(sys.ideal_count() + 1) + " slots");
  }
  std::vector<std::size_t> slots;
  for (std::size_t i = 0; i < type.size(); ++i) slots.insert(slots.end(), type[i], i);
  constexpr int kMaxChecks = 400;
  int checks = 0;
  SlotSequence cur;
  std::function<bool()> go = [&]() -> bool {
    if (cur.size() == slots.size()) return true;
    const std::size_t slot = slots[cur.size()];
    const IdealSystem q = quotient_system(sys, cur, cur.size());
    for (const auto& g : sys.slot_ideal(slot).generators()) {
      if (++checks > kMaxChecks) return false;
      if (!is_weak_fc(q, g, slot)) continue;
      cur.push_back({g, slot});
      if (go()) return true;
      cur.pop_back();
    }
    return false;
  };
  if (go()) return cur;
  return std::nullopt;
}

namespace {

Integer assoc_symbol(const AssociatedModule& m, const SlotSequence& seq, std::size_t i) {
  HilbertDatum h = m.hilbert();
  if (h.polynomial.is_zero()) return 0;
  if (i == seq.size()) {
    if (!h.polynomial.is_constant()) {
      throw Error(ErrorCode::BaseNotConstant, "Hilbert polynomial " + h.polynomial.to_string() + " of " +
                                                  m.description() + " is not constant");
    }
    return h.polynomial.constant_term();
  }
  return assoc_symbol(m.quotient_by(seq[i]), seq, i + 1) - assoc_symbol(m.annihilator_of(seq[i]), seq, i + 1);
}

}  // namespace

IdealCheckReport verify_ideal_system(const IdealSystem& sys, int k0, const MultiDegree& k, const SlotSequence& seq) {
  const MultiDegree type = full_type(sys, k0, k);
  const std::size_t slots = type.size();
  if (slot_type(seq, slots) != type) {
    throw Error(ErrorCode::InvalidArgument, "sequence " + to_string(seq, *sys.ring()) + " does not have type " +
                                                type.to_string());
  }
  if (!is_ideal_mult_system(sys, seq)) {
    throw Error(ErrorCode::NotASystem, "sequence " + to_string(seq, *sys.ring()) +
                                           " is not a mixed multiplicity system of " + sys.module_string());
  }
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::Mismatch, what + " for " + sys.module_string() + ", J = " + sys.j().to_string() +
                                         ", type " + type.to_string() + ", x = " + to_string(seq, *sys.ring()));
  };

  IdealCheckReport rep;
  rep.type = type;
  rep.sequence = seq;
  AssociatedModule assoc(sys);
  HilbertDatum h = assoc.hilbert();
  if (!is_defined(h.polynomial, type)) fail("a system exists but e is not defined");
  rep.value = h.polynomial.coefficient(type);
  rep.certified = false;
  rep.saturation_dim = saturation_quotient_dim(sys, seq);
  rep.saturation_value = saturation_multiplicity(sys, seq);
  rep.weak_fc = is_weak_fc_sequence(sys, seq);

  rep.transformation_total = rep.saturation_value;
  const MonomialIdeal& u = sys.outer();
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const MonomialIdeal lower = quotient_system(sys, seq, i).inner();
    const MonomialIdeal colon = lower.colon(seq[i].monomial).intersect(u);
    const IdealSystem ni = sys.with_module(colon, lower);
    IdealCheckSummand s;
    s.index = i + 1;
    SlotSequence prefix(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(i + 1));
    s.type = type - slot_type(prefix, slots);
    s.module = ni.module_string();
    HilbertDatum hi = AssociatedModule(ni).hilbert();
    s.defined = is_defined(hi.polynomial, s.type);
    if (!s.defined) fail("correction term e(" + s.module + ";" + s.type.to_string() + ") is not defined");
    s.value = hi.polynomial.coefficient(s.type);
    rep.transformation_total -= s.value;
    rep.summands.push_back(std::move(s));
  }
  if (rep.transformation_total != rep.value) {
    fail("correction formula gives " + std::to_string(rep.transformation_total) + " but e = " +
         std::to_string(rep.value));
  }
  if (rep.value > rep.saturation_value) {
    fail("e = " + std::to_string(rep.value) + " exceeds e(J; N/(xN:I^inf)) = " +
         std::to_string(rep.saturation_value));
  }
  if (rep.weak_fc && rep.value != rep.saturation_value) {
    fail("weak-(FC) sequence with e = " + std::to_string(rep.value) + " but e(J; N/(xN:I^inf)) = " +
         std::to_string(rep.saturation_value));
  }
  // e > 0 forces dimension 1 for every system; the converse needs weak-(FC).
  const bool dim_one = rep.saturation_dim == ExtendedDegree::finite(1);
  if ((rep.value > 0 && !dim_one) || (rep.weak_fc && (rep.value > 0) != dim_one)) {
    fail("e = " + std::to_string(rep.value) + " while dim N/(xN:I^inf) = " + rep.saturation_dim.to_string());
  }

  // The images x* must form a system of the associated module.
  AssociatedModule quotient = assoc.quotient_by_sequence(seq);
  if (!(quotient.hilbert().polynomial.degree() <= 0)) fail("the images x* are not a system of the associated module");
  AssociatedKoszulOperand op(assoc, seq);
  MultiDegree origin = h.threshold + type;
  EulerResult chi = stabilized_euler(op, origin, 3);
  rep.chi = chi.value;
  rep.symbol = assoc_symbol(assoc, seq, 0);
  if (*rep.chi != rep.value) fail("chi(x*) = " + std::to_string(*rep.chi) + " but e = " + std::to_string(rep.value));
  if (*rep.symbol != rep.value) {
    fail("symbol(x*) = " + std::to_string(*rep.symbol) + " but e = " + std::to_string(rep.value));
  }
  return rep;
}

}  // namespace multimult
