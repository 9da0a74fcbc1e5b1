#pragma once

#include <map>
#include <vector>

#include "multimult/homogeneous.hpp"
#include "dense_rank.hpp"

namespace multimult::testing {

/// dim (g_1, ..., g_t)_n by dense elimination on all products m * g_j.
inline Integer dense_ideal_dim(const RingPtr& r, const std::vector<HomogeneousElement>& gens,
                               const MultiDegree& n) {
  if (!n.is_natural()) return 0;
  auto basis = monomials_of_degree(*r, n);
  std::map<Monomial, int> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& g : gens) {
    MultiDegree rest = n - g.degree();
    if (!rest.is_natural()) continue;
    for (const auto& m : monomials_of_degree(*r, rest)) {
      std::vector<mpq_class> row(basis.size());
      HomogeneousElement product = g * m;
      for (const auto& [mono, c] : product.terms()) row[index.at(mono)] = c;
      rows.push_back(std::move(row));
    }
  }
  return dense_rank(std::move(rows));
}

/// dim (S/J)_n for J generated by gens.
inline Integer dense_quotient_dim(const RingPtr& r, const std::vector<HomogeneousElement>& gens,
                                  const MultiDegree& n) {
  if (!n.is_natural()) return 0;
  return static_cast<Integer>(monomials_of_degree(*r, n).size()) - dense_ideal_dim(r, gens, n);
}

/// dim of (0 :_{S/J} x)_n: dim (S/J)_n minus the rank of x : (S/J)_n -> (S/J)_{n+deg x},
/// the latter being dim (J + xS_n)_{n+deg x} - dim J_{n+deg x}.
inline Integer dense_annihilator_dim(const RingPtr& r, std::vector<HomogeneousElement> gens,
                                     const HomogeneousElement& x, const MultiDegree& n) {
  if (!n.is_natural()) return 0;
  MultiDegree up = n + x.degree();
  Integer base = dense_ideal_dim(r, gens, up);
  Integer quotient = dense_quotient_dim(r, gens, n);
  gens.push_back(x);
  Integer with_x = dense_ideal_dim(r, gens, up);
  return quotient - (with_x - base);
}

inline std::vector<HomogeneousElement> as_elements(const MonomialIdeal& i) {
  std::vector<HomogeneousElement> out;
  for (const auto& g : i.generators()) out.emplace_back(i.ring(), g);
  return out;
}

}  // namespace multimult::testing
