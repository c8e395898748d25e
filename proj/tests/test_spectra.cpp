#include <doctest.h>

#include "mvs/functors.hpp"
#include "mvs/spectra.hpp"

using namespace mvs;

namespace {
FiniteMvAlgebra square() { return product(lukasiewicz(1), lukasiewicz(1)); }
}  // namespace

TEST_CASE("ideals of a chain are trivial") {
  auto l = lukasiewicz(4);
  auto ideals = enumerate_ideals(l);
  REQUIRE(ideals.size() == 2);  // {0} and everything
  CHECK(ideals[0].members == 1);
  CHECK(ideals[1].members == full_mask(5));
}

TEST_CASE("ideal generation closes under sum and downward order") {
  auto l = lukasiewicz(4);
  // 1/4 generates everything: summing climbs the chain
  CHECK(ideal_generated(l, 0b00010).members == full_mask(5));
}

TEST_CASE("ideals and primes of the product") {
  auto p = square();
  auto ideals = enumerate_ideals(p);
  REQUIRE(ideals.size() == 4);
  int primes = 0;
  for (const auto& i : ideals) primes += is_prime(p, i) ? 1 : 0;
  CHECK(primes == 2);
}

TEST_CASE("spec of a chain is a single point") {
  auto s = spec(lukasiewicz(4));
  CHECK(s.order.n == 1);
  CHECK(maximals(s) == std::vector<int>{0});
}

TEST_CASE("spec of the product is a 2-antichain") {
  auto s = spec(square());
  CHECK(s.order.n == 2);
  CHECK_FALSE(s.order.leq[0][1]);
  CHECK_FALSE(s.order.leq[1][0]);
  CHECK(maximal_ideals(square()).size() == 2);
}

TEST_CASE("V and O operators") {
  auto p = square();
  auto s = spec(p);
  // V({0}) is everything; V of a maximal ideal is that point
  CHECK(closed_of_ideal(s, IdealSet{1}) == full_mask(s.order.n));
  CHECK(popcount(closed_of_ideal(s, s.points[0])) == 1);
  // O(0) is empty, O(1) is everything
  CHECK(open_of_element(s, 0) == 0);
  CHECK(open_of_element(s, p.one()) == full_mask(s.order.n));
}

TEST_CASE("radical of finite algebras is zero") {
  CHECK(radical(lukasiewicz(4)).members == 1);
  CHECK(radical(square()).members == 1);
}

TEST_CASE("zariski topology on a 2-chain spectrum") {
  SpecPoset s;
  s.order = Poset::chain(2);
  s.labels = {"p", "m"};
  auto t = zariski_topology(s);
  CHECK(t.valid());
  REQUIRE(t.closed_sets.size() == 3);  // {}, {top}, both
  CHECK(is_sober(t));
  CHECK(is_spectral(t));
}

TEST_CASE("a topology with a doubled generic point is not sober") {
  FiniteTopology t;
  t.points = 2;
  t.closed_sets = {0, 0b11};
  CHECK(t.valid());
  CHECK_FALSE(is_sober(t));
  CHECK_FALSE(is_spectral(t));
}

TEST_CASE("closure in a finite topology") {
  SpecPoset s;
  s.order = Poset::chain(2);
  s.labels = {"p", "m"};
  auto t = zariski_topology(s);
  CHECK(t.closure(0b01) == 0b11);  // closure of the generic point
  CHECK(t.closure(0b10) == 0b10);  // the closed point
}

TEST_CASE("compact opens lattice of small spectra") {
  auto chain_spec = spec(lukasiewicz(4));
  CHECK(compact_opens_lattice(chain_spec).size == 2);
  auto sq = spec(square());
  CHECK(compact_opens_lattice(sq).size == 4);
}

TEST_CASE("homeomorphism via both routes") {
  auto s1 = spec(square());
  SpecPoset anti;
  anti.order = Poset::antichain(2);
  anti.labels = {"a", "b"};
  CHECK(homeomorphic(s1, anti));
  SpecPoset two;
  two.order = Poset::chain(2);
  two.labels = {"a", "b"};
  CHECK_FALSE(homeomorphic(s1, two));
}

TEST_CASE("prime pullback along a projection") {
  auto p = square();
  auto b = lukasiewicz(1);
  MvHom proj{p, b, {0, 0, 1, 1}};
  auto pulled = pullback_prime(proj, IdealSet{1});
  CHECK(is_prime(p, pulled));
  CHECK(pulled.members == 0b0011);
}
