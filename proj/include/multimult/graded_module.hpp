#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "multimult/graded_linalg.hpp"
#include "multimult/homogeneous.hpp"
#include "multimult/monomial_ideal.hpp"

namespace multimult {

/// One graded piece of a module presented as a subquotient upper/lower of an
/// ambient space with a monomial basis.
struct ModulePiece {
  std::shared_ptr<const GradedPieceBasis> basis;
  std::shared_ptr<const Echelon> upper;
  std::shared_ptr<const Echelon> lower;

  int ambient() const { return basis->size(); }
  int dimension() const { return upper->rank() - lower->rank(); }
};

namespace detail {
struct ModuleImpl;
}

/// Graded module U/V with V contained in U, both ideals of the ring.
///
/// MONOMIAL modules keep U and V as monomial ideals and have certified Hilbert
/// data. Once a non-monomial element is applied, or the input ideals are not
/// monomial, the module becomes GENERAL: a subquotient of a fixed monomial
/// module U0/V0 whose upper and lower parts are described lazily and
/// evaluated degree by degree with exact linear algebra.
class GradedModule {
 public:
  enum class Kind { Monomial, General };

  static GradedModule monomial(MonomialIdeal outer, MonomialIdeal inner);
  /// `outer` of nullopt stands for the unit ideal. Falls back to the monomial
  /// representation when every generator is a monomial.
  static GradedModule from_generators(RingPtr ring,
                                      const std::optional<std::vector<HomogeneousElement>>& outer,
                                      const std::vector<HomogeneousElement>& inner);

  Kind kind() const;
  const RingPtr& ring() const;
  std::size_t grading_dimension() const { return ring()->grading_dimension(); }

  /// U and V for MONOMIAL modules; the ambient U0 and V0 for GENERAL ones.
  const MonomialIdeal& outer_ideal() const;
  const MonomialIdeal& inner_ideal() const;

  Integer dimension(const MultiDegree& n) const;
  /// Memoized; certified iff kind() is Monomial (or the module is a
  /// subquotient of an eventually zero monomial module).
  HilbertDatum hilbert() const;
  ExtendedDegree dim_supp() const;

  /// U/(V + xU).
  GradedModule quotient_by(const HomogeneousElement& x) const;
  /// ((V : x) intersected with U)/V.
  GradedModule annihilator_of(const HomogeneousElement& x) const;

  ModulePiece piece(const MultiDegree& n) const;
  /// x times v, from ambient coordinates at n to ambient coordinates at n + deg x.
  SparseVector multiply(const HomogeneousElement& x, const MultiDegree& n,
                        const SparseVector& v) const;

  /// Sampling policy used for the Hilbert polynomial of a GENERAL module.
  SamplingPolicy sampling_policy() const;

  std::string description() const;

 private:
  explicit GradedModule(std::shared_ptr<const detail::ModuleImpl> impl) : impl_(std::move(impl)) {}
  GradedModule child(char op, const HomogeneousElement& x,
                     const std::function<std::shared_ptr<const detail::ModuleImpl>()>& make) const;
  std::shared_ptr<const detail::ModuleImpl> quotient_impl(const HomogeneousElement& x) const;
  std::shared_ptr<const detail::ModuleImpl> annihilator_impl(const HomogeneousElement& x) const;

  std::shared_ptr<const detail::ModuleImpl> impl_;
};

}  // namespace multimult
