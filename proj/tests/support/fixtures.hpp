#pragma once

#include <vector>

#include "multimult/monomial_ideal.hpp"

namespace multimult::testing {

/// Three slots with three variables each: x1..x3, y1..y3, z1..z3.
inline RingPtr three_slot_ring() {
  std::vector<std::string> names;
  std::vector<int> slots;
  const char* letters = "xyz";
  for (int s = 0; s < 3; ++s) {
    for (int i = 1; i <= 3; ++i) {
      names.push_back(std::string(1, letters[s]) + std::to_string(i));
      slots.push_back(s);
    }
  }
  return make_ring(3, names, slots);
}

inline std::vector<MonomialIdeal> three_slot_components(const RingPtr& r) {
  auto v = [&](const char* n) { return r->find(n); };
  return {MonomialIdeal::of_variables(r, {v("x1"), v("y1"), v("z1")}),
          MonomialIdeal::of_variables(r, {v("x1"), v("x2")}),
          MonomialIdeal::of_variables(r, {v("y1"), v("y2")}),
          MonomialIdeal::of_variables(r, {v("z1"), v("z2")})};
}

inline MonomialIdeal three_slot_ideal(const RingPtr& r) {
  auto comps = three_slot_components(r);
  MonomialIdeal out = comps[0];
  for (std::size_t i = 1; i < comps.size(); ++i) out = out.intersect(comps[i]);
  return out;
}

}  // namespace multimult::testing
