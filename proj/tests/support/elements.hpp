#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "multimult/graded_module.hpp"
#include "multimult/sequences.hpp"

namespace multimult::testing {

inline HomogeneousElement var(const RingPtr& r, const std::string& name) {
  return HomogeneousElement::variable(r, r->find(name));
}

/// Sum of c*v over the listed (variable, coefficient) pairs, all in one slot.
inline HomogeneousElement linear(const RingPtr& r, std::initializer_list<std::pair<const char*, int>> terms) {
  HomogeneousElement::Terms t;
  MultiDegree deg;
  for (auto [name, c] : terms) {
    int v = r->find(name);
    t.emplace(Monomial::variable(r->variable_count(), v), c);
    deg = MultiDegree::unit(r->grading_dimension(), r->slot(v));
  }
  return HomogeneousElement(r, std::move(t), deg);
}

inline ElementSequence vars(const RingPtr& r, std::initializer_list<const char*> names) {
  std::vector<HomogeneousElement> out;
  for (const char* n : names) out.push_back(var(r, n));
  return ElementSequence(std::move(out));
}

inline GradedModule ring_mod(const MonomialIdeal& i) {
  return GradedModule::monomial(MonomialIdeal::unit(i.ring()), i);
}

}  // namespace multimult::testing
