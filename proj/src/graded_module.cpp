#include "multimult/graded_module.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "multimult/error.hpp"
#include "multimult/parallel.hpp"

namespace multimult {
namespace detail {

// The fixed monomial module U0/V0 every GENERAL module sits inside.
struct Ambient {
  Ambient(MonomialIdeal o, MonomialIdeal i) : outer(std::move(o)), inner(std::move(i)) {}

  MonomialIdeal outer;
  MonomialIdeal inner;
  mutable OnceCache<MultiDegree, std::shared_ptr<const GradedPieceBasis>> pieces;
  mutable std::once_flag hilbert_once;
  mutable std::optional<HilbertDatum> hilbert_cache;

  std::shared_ptr<const GradedPieceBasis> piece(const MultiDegree& n) const {
    return pieces.get(n, [&] {
      return std::make_shared<const GradedPieceBasis>(
          GradedPieceBasis::subquotient_piece(outer, inner, n));
    });
  }

  const HilbertDatum& hilbert() const {
    std::call_once(hilbert_once, [&] { hilbert_cache = hilbert_of_subquotient(outer, inner); });
    return *hilbert_cache;
  }

  SparseVector multiply(const HomogeneousElement& x, const MultiDegree& n, const SparseVector& v) const {
    if (v.empty()) return {};
    return multiply_vector(x, v, *piece(n), *piece(n + x.degree()));
  }
};

// A graded subspace of the ambient module, evaluated per degree.
struct Subspace {
  enum class Type { All, None, Generated, Sum, ColonMeet };

  std::shared_ptr<const Ambient> ambient;
  Type type = Type::None;
  std::vector<HomogeneousElement> generators;
  std::optional<HomogeneousElement> element;
  std::shared_ptr<const Subspace> a;  // Sum: A + x C, ColonMeet: {c in C : x c in A}
  std::shared_ptr<const Subspace> c;
  mutable OnceCache<MultiDegree, std::shared_ptr<const Echelon>> memo;
  mutable OnceCache<MultiDegree, int> dims;

  std::shared_ptr<const Echelon> at(const MultiDegree& n) const {
    return memo.get(n, [&] { return std::make_shared<const Echelon>(compute(n)); });
  }

  // Same as at(n)->rank(), avoiding the exact kernel of a ColonMeet piece
  // when x is injective there.
  int dimension(const MultiDegree& n) const {
    if (type != Type::ColonMeet || memo.contains(n)) return at(n)->rank();
    return dims.get(n, [&] { return colon_dimension(n); });
  }

  int colon_dimension(const MultiDegree& n) const {
    auto cs = c->at(n);
    if (cs->rank() == 0) return 0;
    const MultiDegree to = n + element->degree();
    auto target = a->at(to);
    std::vector<SparseVector> images;
    images.reserve(cs->rows().size());
    for (const auto& row : cs->rows()) images.push_back(ambient->multiply(*element, n, row));
    std::vector<SparseVector> rows = target->rows();
    rows.insert(rows.end(), images.begin(), images.end());
    if (full_row_rank_mod_p(rows)) return 0;
    // dim C - dim (x C + A)/A, exactly.
    Echelon e = *target;
    for (const auto& v : images) e.insert(v);
    return cs->rank() - (e.rank() - target->rank());
  }

  Echelon compute(const MultiDegree& n) const {
    const int dim = ambient->piece(n)->size();
    switch (type) {
      case Type::All:
        return Echelon::identity(dim);
      case Type::None:
        return Echelon(dim);
      case Type::Generated: {
        Echelon e(dim);
        for (const auto& row : ideal_piece_rows(generators, *ambient->piece(n))) e.insert(row);
        return e;
      }
      case Type::Sum: {
        Echelon e = *a->at(n);
        const MultiDegree from = n - element->degree();
        if (from.is_natural() && e.rank() < dim) {
          for (const auto& row : c->at(from)->rows()) {
            e.insert(ambient->multiply(*element, from, row));
            if (e.rank() == dim) break;
          }
        }
        return e;
      }
      case Type::ColonMeet: {
        Echelon e(dim);
        auto cs = c->at(n);
        if (cs->rank() == 0) return e;
        const MultiDegree to = n + element->degree();
        auto target = a->at(to);
        const int target_dim = ambient->piece(to)->size();
        std::vector<SparseVector> residues;
        residues.reserve(cs->rows().size());
        for (const auto& row : cs->rows()) {
          residues.push_back(target->reduce(ambient->multiply(*element, n, row)));
        }
        for (const auto& lambda : left_kernel(residues, target_dim)) {
          SparseVector v;
          for (const auto& [j, coef] : lambda) v = axpy(v, coef, cs->rows()[j]);
          e.insert(v);
        }
        return e;
      }
    }
    throw Error(ErrorCode::InvalidArgument, "unknown subspace type");
  }
};

struct ModuleImpl {
  RingPtr ring;
  std::shared_ptr<const Ambient> ambient;
  // Both null for a MONOMIAL module (upper = everything, lower = nothing).
  std::shared_ptr<const Subspace> upper;
  std::shared_ptr<const Subspace> lower;
  int max_element_degree = 0;
  int operations = 0;
  std::string history;

  mutable std::once_flag hilbert_once;
  mutable std::optional<HilbertDatum> hilbert_cache;

  // Children by operation and element, so repeated quotients and
  // annihilators share their pieces and Hilbert data.
  mutable std::mutex children_mutex;
  mutable std::map<std::pair<char, std::string>, std::shared_ptr<const ModuleImpl>> children;

  bool is_monomial() const { return !upper; }
};

}  // namespace detail

using detail::Ambient;
using detail::ModuleImpl;
using detail::Subspace;

namespace {

std::shared_ptr<const Subspace> make_leaf(std::shared_ptr<const Ambient> amb, Subspace::Type type,
                                          std::vector<HomogeneousElement> gens = {}) {
  auto s = std::make_shared<Subspace>();
  s->ambient = std::move(amb);
  s->type = type;
  s->generators = std::move(gens);
  return s;
}

std::shared_ptr<const Subspace> make_node(Subspace::Type type, std::shared_ptr<const Subspace> a,
                                          const HomogeneousElement& x,
                                          std::shared_ptr<const Subspace> c) {
  auto s = std::make_shared<Subspace>();
  s->ambient = a->ambient;
  s->type = type;
  s->element = x;
  s->a = std::move(a);
  s->c = std::move(c);
  return s;
}

int max_degree(const std::vector<HomogeneousElement>& gens) {
  int best = 0;
  for (const auto& g : gens) best = std::max(best, g.degree().total());
  return best;
}

void require_unit_degree(const GradedModule& m, const HomogeneousElement& x) {
  require_same_ring(m.ring(), x.ring());
  if (x.unit_slot() < 0) {
    throw Error(ErrorCode::NonUnitDegree,
                "element " + x.to_string() + " has degree " + x.degree().to_string() +
                    ", expected a unit vector");
  }
}

std::shared_ptr<ModuleImpl> monomial_impl(MonomialIdeal outer, MonomialIdeal inner) {
  auto impl = std::make_shared<ModuleImpl>();
  impl->ring = outer.ring();
  impl->max_element_degree = std::max(outer.max_generator_degree(), inner.max_generator_degree());
  impl->ambient = std::make_shared<const Ambient>(std::move(outer), std::move(inner));
  return impl;
}

}  // namespace

GradedModule GradedModule::monomial(MonomialIdeal outer, MonomialIdeal inner) {
  require_same_ring(outer.ring(), inner.ring());
  if (!outer.contains(inner)) {
    throw Error(ErrorCode::InvalidArgument,
                "inner ideal " + inner.to_string() + " is not contained in " + outer.to_string());
  }
  return GradedModule(monomial_impl(std::move(outer), std::move(inner)));
}

GradedModule GradedModule::from_generators(
    RingPtr ring, const std::optional<std::vector<HomogeneousElement>>& outer,
    const std::vector<HomogeneousElement>& inner) {
  auto all_monomial = [](const std::vector<HomogeneousElement>& gens) {
    return std::all_of(gens.begin(), gens.end(),
                       [](const HomogeneousElement& g) { return g.is_zero() || g.is_monomial(); });
  };
  auto to_ideal = [&](const std::vector<HomogeneousElement>& gens) {
    std::vector<Monomial> ms;
    for (const auto& g : gens) {
      require_same_ring(ring, g.ring());
      if (!g.is_zero()) ms.push_back(g.monomial());
    }
    return MonomialIdeal(ring, std::move(ms));
  };
  const bool outer_monomial = !outer || all_monomial(*outer);
  const bool inner_monomial = all_monomial(inner);
  MonomialIdeal u0 = outer_monomial ? (outer ? to_ideal(*outer) : MonomialIdeal::unit(ring))
                                    : MonomialIdeal::unit(ring);
  if (outer_monomial && inner_monomial) return monomial(u0, to_ideal(inner));

  // V must lie in U; checked one generator at a time in its own degree.
  if (outer) {
    for (const auto& g : inner) {
      if (g.is_zero()) continue;
      auto basis = GradedPieceBasis::ring_piece(*ring, g.degree());
      auto rows = ideal_piece_rows(*outer, basis);
      Echelon e(basis.size());
      for (const auto& r : rows) e.insert(r);
      if (!e.contains(coordinates(g.terms(), basis))) {
        throw Error(ErrorCode::InvalidArgument,
                    "inner generator " + g.to_string() + " is not in the outer ideal");
      }
    }
  }
  MonomialIdeal v0 = inner_monomial ? to_ideal(inner) : MonomialIdeal::zero(ring);
  auto impl = std::make_shared<ModuleImpl>();
  impl->ring = ring;
  impl->ambient = std::make_shared<const Ambient>(u0, v0);
  impl->upper = outer_monomial ? make_leaf(impl->ambient, Subspace::Type::All)
                               : make_leaf(impl->ambient, Subspace::Type::Generated, *outer);
  impl->lower = inner_monomial ? make_leaf(impl->ambient, Subspace::Type::None)
                               : make_leaf(impl->ambient, Subspace::Type::Generated, inner);
  impl->max_element_degree = std::max(outer ? max_degree(*outer) : 0, max_degree(inner));
  impl->max_element_degree = std::max({impl->max_element_degree, u0.max_generator_degree(),
                                       v0.max_generator_degree()});
  auto list = [](const std::vector<HomogeneousElement>& gens) {
    std::string s = "(";
    for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + gens[i].to_string();
    return s + ")";
  };
  if (outer && !outer_monomial) impl->history += " U=" + list(*outer);
  if (!inner_monomial) impl->history += " V=" + list(inner);
  return GradedModule(impl);
}

GradedModule::Kind GradedModule::kind() const {
  return impl_->is_monomial() ? Kind::Monomial : Kind::General;
}

const RingPtr& GradedModule::ring() const { return impl_->ring; }

const MonomialIdeal& GradedModule::outer_ideal() const { return impl_->ambient->outer; }
const MonomialIdeal& GradedModule::inner_ideal() const { return impl_->ambient->inner; }

Integer GradedModule::dimension(const MultiDegree& n) const {
  if (!n.is_natural()) return 0;
  if (impl_->is_monomial()) return hilbert_function(outer_ideal(), inner_ideal(), n);
  return impl_->upper->dimension(n) - impl_->lower->dimension(n);
}

SamplingPolicy GradedModule::sampling_policy() const {
  const HilbertDatum& base = impl_->ambient->hilbert();
  const std::size_t d = grading_dimension();
  SamplingPolicy policy;
  policy.origin = MultiDegree(d);
  for (std::size_t i = 0; i < d; ++i) {
    policy.origin[i] =
        std::max(base.threshold[i], impl_->max_element_degree + 1) + impl_->operations;
  }
  policy.bounds = base.polynomial.axis_degrees();
  return policy;
}

HilbertDatum GradedModule::hilbert() const {
  std::call_once(impl_->hilbert_once, [&] {
    const HilbertDatum& base = impl_->ambient->hilbert();
    if (impl_->is_monomial()) {
      impl_->hilbert_cache = base;
    } else if (base.polynomial.is_zero()) {
      // Every piece of a subquotient of an eventually zero module vanishes
      // from the same threshold on.
      impl_->hilbert_cache = HilbertDatum{NumericalPolynomial::zero(grading_dimension()),
                                          base.threshold, true, std::nullopt};
    } else {
      impl_->hilbert_cache =
          sampled_hilbert([&](const MultiDegree& n) { return dimension(n); }, sampling_policy());
    }
  });
  return *impl_->hilbert_cache;
}

ExtendedDegree GradedModule::dim_supp() const { return hilbert().polynomial.degree(); }

GradedModule GradedModule::quotient_by(const HomogeneousElement& x) const {
  require_unit_degree(*this, x);
  if (x.is_zero()) return *this;
  return child('/', x, [&] { return quotient_impl(x); });
}

std::shared_ptr<const detail::ModuleImpl> GradedModule::quotient_impl(const HomogeneousElement& x) const {
  if (impl_->is_monomial() && x.is_monomial()) {
    const Monomial& m = x.monomial();
    auto out = monomial_impl(outer_ideal(), inner_ideal() + outer_ideal().multiply(m));
    out->history = impl_->history;
    return out;
  }
  auto out = std::make_shared<ModuleImpl>();
  out->ring = impl_->ring;
  out->ambient = impl_->ambient;
  auto upper = impl_->upper ? impl_->upper : make_leaf(impl_->ambient, Subspace::Type::All);
  auto lower = impl_->lower ? impl_->lower : make_leaf(impl_->ambient, Subspace::Type::None);
  out->upper = upper;
  out->lower = make_node(Subspace::Type::Sum, lower, x, upper);
  out->max_element_degree = impl_->max_element_degree;
  out->operations = impl_->operations + 1;
  out->history = impl_->history + " /(" + x.to_string() + ")";
  return out;
}

GradedModule GradedModule::annihilator_of(const HomogeneousElement& x) const {
  require_unit_degree(*this, x);
  if (x.is_zero()) return *this;
  return child(':', x, [&] { return annihilator_impl(x); });
}

GradedModule GradedModule::child(char op, const HomogeneousElement& x,
                                 const std::function<std::shared_ptr<const detail::ModuleImpl>()>& make) const {
  const auto key = std::make_pair(op, x.to_string());
  {
    std::lock_guard<std::mutex> lock(impl_->children_mutex);
    auto it = impl_->children.find(key);
    if (it != impl_->children.end()) return GradedModule(it->second);
  }
  auto made = make();
  std::lock_guard<std::mutex> lock(impl_->children_mutex);
  return GradedModule(impl_->children.emplace(key, std::move(made)).first->second);
}

std::shared_ptr<const detail::ModuleImpl> GradedModule::annihilator_impl(const HomogeneousElement& x) const {
  if (impl_->is_monomial() && x.is_monomial()) {
    const Monomial& m = x.monomial();
    auto out = monomial_impl(inner_ideal().colon(m).intersect(outer_ideal()), inner_ideal());
    out->history = impl_->history;
    return out;
  }
  auto out = std::make_shared<ModuleImpl>();
  out->ring = impl_->ring;
  out->ambient = impl_->ambient;
  auto upper = impl_->upper ? impl_->upper : make_leaf(impl_->ambient, Subspace::Type::All);
  auto lower = impl_->lower ? impl_->lower : make_leaf(impl_->ambient, Subspace::Type::None);
  out->upper = make_node(Subspace::Type::ColonMeet, lower, x, upper);
  out->lower = lower;
  out->max_element_degree = impl_->max_element_degree;
  out->operations = impl_->operations + 1;
  out->history = impl_->history + " 0:(" + x.to_string() + ")";
  return out;
}

ModulePiece GradedModule::piece(const MultiDegree& n) const {
  ModulePiece p;
  p.basis = impl_->ambient->piece(n);
  if (impl_->is_monomial()) {
    p.upper = std::make_shared<const Echelon>(Echelon::identity(p.basis->size()));
    p.lower = std::make_shared<const Echelon>(Echelon(p.basis->size()));
  } else {
    p.upper = impl_->upper->at(n);
    p.lower = impl_->lower->at(n);
  }
  return p;
}

SparseVector GradedModule::multiply(const HomogeneousElement& x, const MultiDegree& n,
                                    const SparseVector& v) const {
  return impl_->ambient->multiply(x, n, v);
}

std::string GradedModule::description() const {
  std::string base = outer_ideal().to_string() + " / " + inner_ideal().to_string();
  if (impl_->is_monomial()) return base;
  return "subquotient of " + base + impl_->history;
}

}  // namespace multimult
