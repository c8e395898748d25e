#include <doctest.h>

#include "mvs/poset.hpp"

using namespace mvs;

TEST_CASE("chains and antichains") {
  auto c = Poset::chain(3);
  CHECK(c.valid());
  CHECK(c.is_chain());
  CHECK(c.leq[0][2]);
  CHECK_FALSE(c.leq[2][0]);

  auto a = Poset::antichain(3);
  CHECK(a.valid());
  CHECK_FALSE(a.is_chain());
  CHECK_FALSE(a.leq[0][1]);
}

TEST_CASE("down-sets of a chain are the initial segments") {
  auto c = Poset::chain(4);
  auto d = c.all_down_sets();
  REQUIRE(d.size() == 5);
  CHECK(d[0] == 0);
  CHECK(d[1] == 0b0001);
  CHECK(d[2] == 0b0011);
  CHECK(d[3] == 0b0111);
  CHECK(d[4] == 0b1111);
}

TEST_CASE("down-sets of an antichain are all subsets") {
  auto a = Poset::antichain(3);
  CHECK(a.all_down_sets().size() == 8);
  CHECK(a.all_up_sets().size() == 8);
}

TEST_CASE("up and down sets of elements") {
  auto c = Poset::chain(3);
  CHECK(c.down_set(1) == 0b011);
  CHECK(c.up_set(1) == 0b110);
  CHECK(c.is_down_set(0b001));
  CHECK_FALSE(c.is_down_set(0b010));
  CHECK(c.is_up_set(0b100));
}

TEST_CASE("root systems: principal up-sets are chains") {
  CHECK(Poset::chain(4).is_root_system());
  CHECK(Poset::antichain(4).is_root_system());

  // the V poset 0 < 1, 0 < 2 is not a root system
  Poset v;
  v.n = 3;
  v.leq = {{true, true, true}, {false, true, false}, {false, false, true}};
  CHECK(v.valid());
  CHECK_FALSE(v.is_root_system());

  // the dual (two minimal points below one top) is a root system
  Poset lam;
  lam.n = 3;
  lam.leq = {{true, false, true}, {false, true, true}, {false, false, true}};
  CHECK(lam.valid());
  CHECK(lam.is_root_system());
}

TEST_CASE("poset isomorphism") {
  CHECK(poset_isomorphic(Poset::chain(3), Poset::chain(3)));
  CHECK_FALSE(poset_isomorphic(Poset::chain(3), Poset::antichain(3)));
  CHECK_FALSE(poset_isomorphic(Poset::chain(2), Poset::chain(3)));

  // relabeled 3-chain
  Poset p;
  p.n = 3;
  p.leq = {{true, false, true}, {true, true, true}, {false, false, true}};
  CHECK(p.valid());
  CHECK(poset_isomorphic(p, Poset::chain(3)));
}

TEST_CASE("maximal and minimal elements") {
  auto c = Poset::chain(3);
  CHECK(c.maximal_elements() == std::vector<int>{2});
  CHECK(c.minimal_elements() == std::vector<int>{0});
  CHECK(Poset::antichain(2).maximal_elements() == std::vector<int>{0, 1});
}
