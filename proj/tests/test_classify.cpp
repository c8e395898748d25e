#include <doctest.h>

#include "mvs/classify.hpp"
#include "mvs/functors.hpp"

using namespace mvs;

namespace {
FiniteMvAlgebra square() { return product(lukasiewicz(2), lukasiewicz(2)); }
}  // namespace

TEST_CASE("perfect algebras") {
  CHECK(is_perfect(chang_algebra()));
  CHECK_FALSE(is_perfect(komori(2)));
  CHECK(is_perfect(lukasiewicz(1)));  // {0,1}: Rad = {0}
  CHECK_FALSE(is_perfect(lukasiewicz(2)));  // ord(1/2) = ord(1 - 1/2) = 2
}

TEST_CASE("perfect ideals through quotients") {
  auto b = lukasiewicz(1);
  CHECK(is_perfect_ideal(b, IdealSet{1}));
  auto p = square();
  // first-factor ideal: quotient is the 3-chain, not perfect
  Mask first = (Mask{1} << 0) | (Mask{1} << 3) | (Mask{1} << 6);
  CHECK_FALSE(is_perfect_ideal(p, IdealSet{first}));
  auto bb = product(b, b);
  // {0,1} x {0}: quotient is {0,1}, perfect
  CHECK(is_perfect_ideal(bb, IdealSet{(Mask{1} << 0) | (Mask{1} << 2)}));
  CHECK_THROWS_AS(is_perfect_ideal(b, IdealSet{0b01 | 0b10}), InputError);
}

TEST_CASE("local algebras") {
  CHECK(is_local(lukasiewicz(4)));
  CHECK(is_local(lukasiewicz(1)));
  CHECK_FALSE(is_local(square()));
  CHECK_FALSE(is_local(trivial_algebra()));
}

TEST_CASE("primary ideals") {
  CHECK(is_primary(lukasiewicz(4), IdealSet{1}));
  CHECK_FALSE(is_primary(square(), IdealSet{1}));
  CHECK_THROWS_AS(is_primary(lukasiewicz(2), IdealSet{full_mask(3)}),
                  InputError);
}

TEST_CASE("finite algebras are semisimple") {
  CHECK(is_semisimple(lukasiewicz(5)));
  CHECK(is_semisimple(square()));
  CHECK(is_semisimple(trivial_algebra()));
}

TEST_CASE("supermaximal ideals have two-element quotients") {
  auto b = lukasiewicz(1);
  CHECK(is_supermaximal(b, IdealSet{1}));
  CHECK_FALSE(is_supermaximal(lukasiewicz(2), IdealSet{1}));
  auto p = square();
  Mask first = (Mask{1} << 0) | (Mask{1} << 3) | (Mask{1} << 6);
  CHECK_FALSE(is_supermaximal(p, IdealSet{first}));
  // not maximal: the zero ideal of the product
  CHECK_THROWS_AS(is_supermaximal(p, IdealSet{1}), InputError);
}

TEST_CASE("rank counts radical classes minus one") {
  CHECK(rank(lukasiewicz(1)) == 1);
  CHECK(rank(lukasiewicz(3)) == 3);
  CHECK(rank(komori(2)) == 2);
  CHECK(rank(chang_algebra()) == 1);
}

TEST_CASE("rank of a prime is the rank of its quotient") {
  auto p = square();
  auto s = spec(p);
  for (int k = 0; k < s.order.n; ++k)
    CHECK(rank_of_prime(p, s.points[k]) == 2);
  CHECK_THROWS_AS(rank_of_prime(p, IdealSet{1}), InputError);
}

TEST_CASE("membership in the variety of the Chang algebra") {
  CHECK(in_VC(product(lukasiewicz(1), lukasiewicz(1))));
  CHECK_FALSE(in_VC(lukasiewicz(2)));
  CHECK(in_VC(chang_algebra()));
  CHECK_FALSE(in_VC(komori(3)));
}

TEST_CASE("membership in Komori varieties") {
  CHECK(in_VKm(lukasiewicz(2), 4));
  CHECK_FALSE(in_VKm(lukasiewicz(3), 4));
  CHECK(in_VKm(lukasiewicz(1), 1));
  CHECK(in_VKm(lukasiewicz(1), 5));
}

TEST_CASE("local spectrum profile") {
  auto p4 = lukasiewicz(4);
  auto r = local_spectrum_profile(p4, IdealSet{1});
  CHECK(r.quotient_local);
  CHECK(r.one_closed_point);
  CHECK(r.intersection_primary);
  CHECK(r.consistent());

  auto sq = square();
  auto r2 = local_spectrum_profile(sq, IdealSet{1});
  CHECK_FALSE(r2.quotient_local);
  CHECK_FALSE(r2.one_closed_point);
  CHECK_FALSE(r2.intersection_primary);
  CHECK(r2.consistent());
}

TEST_CASE("classification report carries witnesses") {
  auto r = classify(lukasiewicz(2), {2, 3, 4});
  CHECK_FALSE(r.perfect);
  CHECK(r.perfect_witness.has_value());
  CHECK(r.local);
  CHECK(r.semisimple);
  CHECK(r.rank_value == 2);
  CHECK_FALSE(r.in_vc);
  CHECK(r.in_vkm.at(2));
  CHECK_FALSE(r.in_vkm.at(3));
  CHECK(r.in_vkm.at(4));
  CHECK(r.maximal_ideals == std::vector<Mask>{1});
  CHECK(r.radical_mask == 1);
}
