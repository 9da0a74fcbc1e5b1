#include <doctest.h>

#include <random>

#include "multimult/error.hpp"
#include "multimult/koszul.hpp"
#include "elements.hpp"
#include "fixtures.hpp"
#include "random_instances.hpp"

using namespace multimult;
using namespace multimult::testing;

namespace {

// Sum over subsets T of (-1)^|T| dim M_{n - deg x_T}, straight from the
// Hilbert function.
Integer alternating_sum(const GradedModule& m, const ElementSequence& seq, const MultiDegree& n) {
  Integer total = 0;
  const std::size_t s = seq.size();
  for (unsigned mask = 0; mask < (1u << s); ++mask) {
    MultiDegree p = n;
    int bits = 0;
    for (std::size_t j = 0; j < s; ++j) {
      if (mask & (1u << j)) {
        p -= seq[j].degree();
        ++bits;
      }
    }
    Integer dim = p.is_natural() ? m.dimension(p) : 0;
    total += bits % 2 == 0 ? dim : -dim;
  }
  return total;
}

void check_slice_invariants(const GradedModule& m, const ElementSequence& seq, const KoszulSlice& s) {
  CHECK(s.d_squared_zero);
  for (Integer h : s.homology_lengths) CHECK(h >= 0);
  CHECK(s.euler == s.chain_euler);
  CHECK(s.chain_euler == alternating_sum(m, seq, s.degree));
}

}  // namespace

TEST_CASE("regular element on k[x]") {
  auto r = make_ring(1, {"x"}, {0});
  auto m = ring_mod(MonomialIdeal::zero(r));
  auto seq = vars(r, {"x"});
  for (int n = 0; n <= 4; ++n) {
    auto s = koszul_slice(m, seq, {n});
    CHECK(s.homology_lengths[1] == 0);
    CHECK(s.homology_lengths[0] == (n == 0 ? 1 : 0));
  }
  CHECK(mixed_mult_symbol(m, seq) == 0);
}

TEST_CASE("zero elements give zero differentials") {
  auto r = make_ring(2, {"x", "y"}, {0, 1});
  auto m = ring_mod(MonomialIdeal::zero(r));
  ElementSequence zeros({HomogeneousElement::zero(r, {1, 0}), HomogeneousElement::zero(r, {0, 1})});
  auto s = koszul_slice(m, zeros, {3, 3});
  for (Integer rk : s.differential_ranks) CHECK(rk == 0);
  CHECK(s.homology_lengths == s.chain_dims);
  CHECK(s.chain_dims == std::vector<Integer>{1, 2, 1});
  CHECK(s.euler == 0);
}

TEST_CASE("the three-slot example") {
  auto r = three_slot_ring();
  auto m = ring_mod(three_slot_ideal(r));
  auto xyz = vars(r, {"x3", "y3", "z3"});
  auto xxx = vars(r, {"x3", "x2", "x1"});

  auto s = koszul_slice(m, xyz, {5, 5, 5});
  CHECK(s.euler == 1);
  check_slice_invariants(m, xyz, s);

  CHECK(euler_characteristic(m, xyz).value == 1);
  CHECK(euler_characteristic(m, xxx).value == 0);
  CHECK(mixed_mult_symbol(m, xyz) == 1);
  CHECK(mixed_mult_symbol(m, xxx) == 0);
}

TEST_CASE("main theorem on the three-slot example") {
  auto r = three_slot_ring();
  auto m = ring_mod(three_slot_ideal(r));
  std::vector<std::pair<MultiDegree, Integer>> table = {
      {{2, 2, 0}, 1}, {{2, 0, 2}, 1}, {{0, 2, 2}, 1}, {{3, 1, 0}, 0}, {{1, 3, 0}, 0},
      {{3, 0, 1}, 0}, {{1, 0, 3}, 0}, {{0, 3, 1}, 0}, {{0, 1, 3}, 0}, {{4, 0, 0}, 0},
      {{0, 4, 0}, 0}, {{0, 0, 4}, 0}, {{2, 1, 1}, 0}, {{1, 2, 1}, 0}, {{1, 1, 2}, 0},
      {{3, 0, 0}, 0}, {{0, 3, 0}, 0}, {{0, 0, 3}, 0}, {{1, 1, 1}, 1}};
  for (const auto& [k, expected] : table) {
    CAPTURE(k.to_string());
    auto rep = verify_main_theorem(m, k);
    CHECK(rep.delta == expected);
    CHECK(rep.chi == expected);
    CHECK(rep.symbol == expected);
    CHECK(rep.filter == expected);
    CHECK(rep.certified);
    for (const auto& s : rep.slices) check_slice_invariants(m, rep.witness, s);
  }
}

TEST_CASE("free bigraded ring") {
  auto r = make_ring(2, {"x", "y"}, {0, 1});
  auto m = ring_mod(MonomialIdeal::zero(r));
  CHECK(euler_characteristic(m, vars(r, {"x", "y"})).value == 0);
  auto rep = verify_main_theorem(m, {1, 1});
  CHECK(rep.delta == 0);
}

TEST_CASE("zero module") {
  auto r = make_ring(2, {"x", "y"}, {0, 1});
  auto m = ring_mod(MonomialIdeal::unit(r));
  auto rep = verify_main_theorem(m, {1, 0});
  CHECK(rep.delta == 0);
  CHECK(rep.chi == 0);
  CHECK(rep.symbol == 0);
}

TEST_CASE("a non-system is rejected") {
  auto r = three_slot_ring();
  auto m = ring_mod(three_slot_ideal(r));
  CHECK_THROWS_WITH_AS(euler_characteristic(m, vars(r, {"x3"})), doctest::Contains("NOT_A_SYSTEM"), Error);
  CHECK_THROWS_WITH_AS(mixed_mult_symbol(m, vars(r, {"x3"})), doctest::Contains("NOT_A_SYSTEM"), Error);
}

TEST_CASE("general elements on a monomial module") {
  auto r = make_ring(2, {"x1", "x2", "y1", "y2"}, {0, 0, 1, 1});
  auto x1 = Monomial::variable(4, 0), x2 = Monomial::variable(4, 1), y1 = Monomial::variable(4, 2);
  auto m = ring_mod(MonomialIdeal(r, {x1 * y1, x2 * x2}));
  ElementSequence seq({linear(r, {{"x1", 1}, {"x2", 2}}), linear(r, {{"y1", 3}, {"y2", -1}})});
  auto e = euler_characteristic(m, seq);
  for (const auto& s : e.slices) check_slice_invariants(m, seq, s);
  CHECK(e.value == mixed_multiplicity(m, {1, 1}).value);
  CHECK(mixed_mult_symbol(m, seq) == e.value);
}

TEST_CASE("property: routes agree on random monomial modules") {
  std::mt19937_64 rng(21);
  int checked = 0;
  for (int trial = 0; trial < 12; ++trial) {
    auto inst = random_monomial_instance(rng);
    auto m = GradedModule::monomial(inst.outer, inst.inner);
    auto p = m.hilbert().polynomial;
    int top = p.is_zero() ? 1 : p.degree().value();
    for (const auto& k : defined_types(p, top)) {
      CAPTURE(m.description());
      CAPTURE(k.to_string());
      auto rep = verify_main_theorem(m, k, {static_cast<std::uint64_t>(trial), 2});
      CHECK(rep.delta >= 0);
      for (const auto& s : rep.slices) check_slice_invariants(m, rep.witness, s);
      for (const auto& other : rep.other_systems) {
        for (const auto& s : other.slices) check_slice_invariants(m, other.sequence, s);
      }
      ++checked;
    }
  }
  CHECK(checked > 0);
}
