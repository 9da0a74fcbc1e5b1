#include <doctest.h>

#include <random>

#include "multimult/error.hpp"
#include "multimult/monomial_ideal.hpp"
#include "fixtures.hpp"
#include "random_instances.hpp"

using namespace multimult;
using namespace multimult::testing;

namespace {

Monomial mono(const RingPtr& r, std::initializer_list<std::pair<const char*, int>> powers) {
  Monomial m(r->variable_count());
  for (auto [name, e] : powers) m[r->find(name)] += e;
  return m;
}

// Every monomial of total degree <= bound, whatever its multidegree.
std::vector<Monomial> all_monomials_up_to(const Ring& ring, int bound) {
  std::vector<Monomial> out;
  std::function<void(std::size_t, int, Monomial&)> go = [&](std::size_t v, int left, Monomial& m) {
    if (v == ring.variable_count()) {
      out.push_back(m);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m[v] = e;
      go(v + 1, left - e, m);
    }
    m[v] = 0;
  };
  Monomial m(ring.variable_count());
  go(0, bound, m);
  return out;
}

}  // namespace

TEST_CASE("intersect") {
  auto r = three_slot_ring();
  auto a = MonomialIdeal(r, {mono(r, {{"x1", 1}}), mono(r, {{"x2", 1}})});
  auto b = MonomialIdeal(r, {mono(r, {{"y1", 1}}), mono(r, {{"y2", 1}})});
  auto ab = a.intersect(b);
  CHECK(ab == MonomialIdeal(r, {mono(r, {{"x1", 1}, {"y1", 1}}), mono(r, {{"x1", 1}, {"y2", 1}}),
                                mono(r, {{"x2", 1}, {"y1", 1}}), mono(r, {{"x2", 1}, {"y2", 1}})}));
  CHECK(ab.intersect(ab) == ab);
}

TEST_CASE("the fourfold intersection agrees with membership in every component") {
  auto r = three_slot_ring();
  auto comps = three_slot_components(r);
  MonomialIdeal I = three_slot_ideal(r);
  CHECK(I.generators().size() == 7);
  for (const auto& m : all_monomials_up_to(*r, 6)) {
    bool in_all = true;
    for (const auto& c : comps) in_all = in_all && c.contains(m);
    CHECK(I.contains(m) == in_all);
  }
}

TEST_CASE("colon") {
  auto r = make_ring(1, {"x", "y"}, {0, 0});
  Monomial x = Monomial::variable(2, 0), y = Monomial::variable(2, 1);
  MonomialIdeal a(r, {x * x, x * y});
  CHECK(a.colon(x) == MonomialIdeal(r, {x, y}));
  CHECK(MonomialIdeal(r, {x * x * y}).colon(y) == MonomialIdeal(r, {x * x}));
}

TEST_CASE("property: colon against enumeration") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto inst = random_monomial_instance(rng);
    const Ring& ring = *inst.ring;
    Monomial m(ring.variable_count());
    for (std::size_t v = 0; v < ring.variable_count(); ++v) m[v] = std::uniform_int_distribution<int>(0, 2)(rng);
    MonomialIdeal c = inst.ideal.colon(m);
    for (const auto& p : all_monomials_up_to(ring, 5)) {
      CHECK(c.contains(p) == inst.ideal.contains(p * m));
    }
    Monomial m2(ring.variable_count());
    m2[0] = 1;
    CHECK(c.colon(m2) == inst.ideal.colon(m * m2));
  }
}

TEST_CASE("saturate") {
  auto r = make_ring(1, {"x", "y"}, {0, 0});
  Monomial x = Monomial::variable(2, 0), y = Monomial::variable(2, 1);
  MonomialIdeal maximal(r, {x, y});
  MonomialIdeal a(r, {x * x, x * y});
  MonomialIdeal sat = a.saturate(maximal);
  CHECK(sat == MonomialIdeal(r, {x}));
  CHECK(a.contains(sat * maximal.pow(2)));
  MonomialIdeal b(r, {x * x * y});
  CHECK(b.saturate(maximal) == b);
  CHECK(b.colon(maximal) == b);
  CHECK(a.saturate(MonomialIdeal::unit(r)) == a);
}

TEST_CASE("property: ideal operations keep antichains and the usual laws") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    auto r = random_ring(rng);
    auto a = random_ideal(rng, r), b = random_ideal(rng, r), c = random_ideal(rng, r);
    for (const auto& ideal : {a.intersect(b), a.colon(b), a.saturate(b), a + b, a * b}) {
      const auto& g = ideal.generators();
      for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) {
          if (i != j) CHECK_FALSE(g[i].divides(g[j]));
        }
      }
    }
    CHECK(a.intersect(b) == b.intersect(a));
    CHECK(a.intersect(b).intersect(c) == a.intersect(b.intersect(c)));
    CHECK(a.intersect(a) == a);
  }
}

TEST_CASE("count standard monomials") {
  auto r = make_ring(1, {"x1", "x2"}, {0, 0});
  CHECK(MonomialIdeal::zero(r).count_standard_monomials({3}) == 4);
  auto e = three_slot_ring();
  CHECK(MonomialIdeal(e, {mono(e, {{"x1", 1}, {"y1", 1}})}).count_standard_monomials({1, 1, 0}) == 8);
  CHECK(MonomialIdeal::unit(r).count_standard_monomials({4}) == 0);
}

TEST_CASE("certified Hilbert polynomial examples") {
  auto r = make_ring(2, {"x", "y"}, {0, 1});
  auto free = hilbert_series_polynomial(MonomialIdeal::zero(r));
  CHECK(free.polynomial == NumericalPolynomial::constant(2, 1));
  CHECK(free.threshold == MultiDegree{0, 0});
  CHECK(free.certified);

  MonomialIdeal xy(r, {Monomial({1, 1})});
  auto h = hilbert_series_polynomial(xy);
  CHECK(h.polynomial.is_zero());
  for (int a = 0; a <= 5; ++a) {
    for (int b = 0; b <= 5; ++b) {
      CHECK(xy.count_standard_monomials({a, b}) == ((a == 0 || b == 0) ? 1 : 0));
    }
  }

  auto e = three_slot_ring();
  auto s = hilbert_series_polynomial(three_slot_ideal(e));
  CHECK(s.polynomial.degree() == ExtendedDegree::finite(4));
  CHECK(s.polynomial.coefficient({2, 2, 0}) == 1);
  CHECK(s.polynomial.coefficient({2, 0, 2}) == 1);
  CHECK(s.polynomial.coefficient({0, 2, 2}) == 1);
  for (MultiDegree k : std::vector<MultiDegree>{{3, 1, 0}, {1, 3, 0}, {3, 0, 1}, {1, 0, 3}, {0, 3, 1},
                                                {0, 1, 3}, {4, 0, 0}, {0, 4, 0}, {0, 0, 4}, {2, 1, 1},
                                                {1, 2, 1}, {1, 1, 2}}) {
    CHECK(s.polynomial.coefficient(k) == 0);
  }
}

TEST_CASE("slots without variables") {
  auto r = make_ring(2, {"x"}, {0});
  auto h = hilbert_series_polynomial(MonomialIdeal::zero(r));
  CHECK(h.polynomial.is_zero());
  CHECK(h.threshold == MultiDegree{0, 1});
  CHECK(hilbert_function(MonomialIdeal::zero(r), {3, 0}) == 1);
  CHECK(hilbert_function(MonomialIdeal::zero(r), {3, 1}) == 0);
}

TEST_CASE("property: certified polynomial against enumeration on [0,8]^d") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    auto inst = random_monomial_instance(rng);
    const std::size_t d = inst.ring->grading_dimension();
    auto h = hilbert_series_polynomial(inst.ideal);
    int hi = d == 3 ? 6 : 8;
    for_each_in_box(MultiDegree(d), MultiDegree(d, hi), [&](const MultiDegree& n) {
      Integer count = inst.ideal.count_standard_monomials(n);
      CHECK(hilbert_function(inst.ideal, n) == count);
      if (componentwise_le(h.threshold, n)) CHECK(h.polynomial.evaluate(n) == count);
    });
  }
}

TEST_CASE("krull dimension") {
  auto r = make_ring(1, {"x", "y"}, {0, 0});
  CHECK(MonomialIdeal::zero(r).krull_dimension() == ExtendedDegree::finite(2));
  CHECK(MonomialIdeal(r, {Monomial({1, 0})}).krull_dimension() == ExtendedDegree::finite(1));
  CHECK(MonomialIdeal(r, {Monomial({1, 0}), Monomial({0, 3})}).krull_dimension() ==
        ExtendedDegree::finite(0));
  CHECK(MonomialIdeal::unit(r).krull_dimension().is_minus_infinity());
}

TEST_CASE("monomials of a degree come in a fixed order") {
  auto r = make_ring(1, {"x1", "x2"}, {0, 0});
  auto ms = monomials_of_degree(*r, {2});
  REQUIRE(ms.size() == 3);
  CHECK(ms[0] == Monomial({2, 0}));
  CHECK(ms[1] == Monomial({1, 1}));
  CHECK(ms[2] == Monomial({0, 2}));
  CHECK(monomial_count(*three_slot_ring(), {2, 1, 3}) == 6 * 3 * 10);
}

TEST_CASE("ring validation") {
  CHECK_THROWS_AS(make_ring(2, {"x", "x"}, {0, 1}), Error);
  CHECK_THROWS_AS(make_ring(2, {"x"}, {2}), Error);
  CHECK_THROWS_AS(require_same_ring(make_ring(1, {"x"}, {0}), make_ring(1, {"y"}, {0})), Error);
}
