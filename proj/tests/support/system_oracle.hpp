#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "multimult/ideal_mult.hpp"

namespace multimult::testing {

/// Every monomial of total degree <= bound.
inline std::vector<Monomial> monomials_up_to(std::size_t nvars, int bound) {
  std::vector<Monomial> out;
  Monomial cur(nvars);
  std::function<void(std::size_t, int)> go = [&](std::size_t v, int left) {
    if (v == nvars) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[v] = e;
      go(v + 1, left - e);
    }
    cur[v] = 0;
  };
  go(0, bound);
  return out;
}

/// #{m : m in J^n0 II^n U + V, m not in J^{n0+1} II^n U + V}, by scanning all
/// monomials up to a degree past which everything lies in the smaller ideal.
inline Integer brute_assoc_length(const IdealSystem& sys, const MultiDegree& full) {
  MonomialIdeal p = sys.j().pow(full[0]);
  int bound = full[0] * sys.j().max_generator_degree() + sys.outer().max_generator_degree();
  for (std::size_t i = 1; i < full.size(); ++i) {
    p = p * sys.ideals()[i - 1].pow(full[i]);
    bound += full[i] * sys.ideals()[i - 1].max_generator_degree();
  }
  // Monomials outside J have degree below the sum of the pure-power exponents.
  for (const auto& g : sys.j().generators()) bound += g.total_degree();
  const MonomialIdeal a = p * sys.outer() + sys.inner();
  const MonomialIdeal b = p * sys.j() * sys.outer() + sys.inner();
  Integer count = 0;
  for (const auto& m : monomials_up_to(sys.ring()->variable_count(), bound)) {
    if (a.contains(m) && !b.contains(m)) ++count;
  }
  return count;
}

/// l[N'/J^{n+1}N'] for N' = outer/inner, by scanning monomials.
inline Integer brute_samuel_length(const MonomialIdeal& j, const MonomialIdeal& outer,
                                   const MonomialIdeal& inner, int n) {
  const MonomialIdeal b = j.pow(n + 1) * outer + inner;
  int bound = (n + 1) * j.max_generator_degree() + outer.max_generator_degree();
  for (const auto& g : j.generators()) bound += g.total_degree();
  Integer count = 0;
  for (const auto& m : monomials_up_to(outer.ring()->variable_count(), bound)) {
    if (outer.contains(m) && !b.contains(m)) ++count;
  }
  return count;
}

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t n, int max_total) {
  Monomial m(n);
  const int total = std::uniform_int_distribution<int>(1, max_total)(rng);
  for (int t = 0; t < total; ++t) m[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)] += 1;
  return m;
}

/// Two or three variables, J primary (pure powers of exponent <= 2 plus a
/// random monomial), one or two ideals I_i with up to two generators of
/// degree <= 2, and N = R/Q with Q zero half of the time.
inline IdealSystem random_system(std::mt19937_64& rng) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 3)(rng);
  std::vector<std::string> names;
  for (std::size_t v = 0; v < n; ++v) names.push_back(std::string(1, "xyz"[v]));
  RingPtr r = make_ring(1, names, std::vector<int>(n, 0));
  std::vector<Monomial> jg;
  for (std::size_t v = 0; v < n; ++v) {
    jg.push_back(Monomial::variable(n, v, std::uniform_int_distribution<int>(1, 2)(rng)));
  }
  jg.push_back(random_monomial(rng, n, 2));
  const int d = std::uniform_int_distribution<int>(1, 2)(rng);
  std::vector<MonomialIdeal> ideals;
  for (int i = 0; i < d; ++i) {
    std::vector<Monomial> g;
    const int count = std::uniform_int_distribution<int>(1, 2)(rng);
    for (int c = 0; c < count; ++c) g.push_back(random_monomial(rng, n, 2));
    ideals.emplace_back(r, g);
  }
  MonomialIdeal q = MonomialIdeal::zero(r);
  if (std::uniform_int_distribution<int>(0, 1)(rng)) q = MonomialIdeal(r, {random_monomial(rng, n, 3)});
  return IdealSystem(q, MonomialIdeal(r, jg), ideals);
}

}  // namespace multimult::testing
