#include <doctest.h>

#include "mvs/mcnaughton.hpp"

using namespace mvs;

namespace {

NormalForm single(std::vector<long long> a, long long b) {
  NormalForm nf;
  nf.arity = static_cast<int>(a.size());
  Piece p;
  for (long long c : a) p.a.push_back(Integer(c));
  p.b = Integer(b);
  nf.meets = {{p}};
  return nf;
}

NormalForm witness() {
  // x ^ rho(2x - 1)
  NormalForm nf;
  nf.arity = 1;
  nf.meets = {{Piece{{Integer(1)}, Integer(0)}},
              {Piece{{Integer(2)}, Integer(-1)}}};
  return nf;
}

}  // namespace

TEST_CASE("truncation") {
  CHECK(rho(Rational(-3)) == 0);
  CHECK(rho(Rational(1, 2)) == Rational(1, 2));
  CHECK(rho(Rational(7)) == 1);
  CHECK(rho(Rational(0)) == 0);
}

TEST_CASE("evaluation") {
  auto nf = single({2}, -1);  // rho(2x - 1)
  CHECK(eval_nf(nf, {Rational(3, 4)}) == Rational(1, 2));
  CHECK(eval_nf(nf, {Rational(0)}) == 0);
  CHECK(eval_nf(witness(), {Rational(0)}) == 0);
  CHECK(eval_nf(witness(), {Rational(3, 4)}) == Rational(1, 2));
}

TEST_CASE("empty aggregates and arity mismatches are rejected") {
  NormalForm bad;
  bad.arity = 1;
  CHECK_THROWS_AS(check_normal_form(bad), InputError);
  bad.meets = {{}};
  CHECK_THROWS_AS(check_normal_form(bad), InputError);
  CHECK_THROWS_AS(eval_nf(single({1}, 0), {Rational(1, 2), Rational(0)}),
                  InputError);
  CHECK_THROWS_AS(eval_nf(single({1}, 0), {Rational(2)}), InputError);
}

TEST_CASE("syntactic homogeneity") {
  CHECK(is_syntactically_homogeneous(single({3, -2}, 0)));
  CHECK_FALSE(is_syntactically_homogeneous(witness()));
  CHECK(is_syntactically_homogeneous(single({0}, 0)));
}

TEST_CASE("zero at the origin") {
  CHECK(zero_at_origin_criterion(witness()));
  CHECK_FALSE(zero_at_origin_criterion(single({1}, 1)));
  CHECK(zero_at_origin_criterion(single({1}, 0)));
}

TEST_CASE("local homogeneity at the origin") {
  CHECK(is_locally_homogeneous(witness()));
  CHECK_FALSE(is_locally_homogeneous(single({1}, 1)));
  CHECK(is_locally_homogeneous(single({0}, 0)));
  // steep slope: the sampling neighborhood must adapt
  NormalForm steep;
  steep.arity = 1;
  steep.meets = {{Piece{{Integer(1)}, Integer(0)}},
                 {Piece{{Integer(-1000)}, Integer(1)}}};
  CHECK(is_locally_homogeneous(steep));
}

TEST_CASE("homogenization") {
  auto h = homogenize(single({2}, -1));  // rho(2x - y)
  CHECK(h.arity == 2);
  CHECK(is_syntactically_homogeneous(h));
  CHECK(h.meets[0][0].a == std::vector<Integer>{Integer(2), Integer(-1)});
  for (int k = 0; k <= 24; ++k) {
    Rational x(k, 24);
    CHECK(eval_nf(h, {x, Rational(1)}) == eval_nf(single({2}, -1), {x}));
  }
}

TEST_CASE("exact 1-D zerosets") {
  CHECK(zeroset_1d(single({1}, 0)) ==
        Interval1D::of({{Rational(0), Rational(0)}}));
  CHECK(zeroset_1d(witness()) == Interval1D::of({{Rational(0), Rational(1, 2)}}));
  CHECK(zeroset_1d(single({0}, 1)).pieces.empty());
  // rho(-x) vanishes everywhere
  CHECK(zeroset_1d(single({-1}, 0)) ==
        Interval1D::of({{Rational(0), Rational(1)}}));
  // isolated interior zero: rho(3x-1) v rho(1-3x) vanishes only at 1/3
  NormalForm pinch;
  pinch.arity = 1;
  pinch.meets = {{Piece{{Integer(3)}, Integer(-1)},
                  Piece{{Integer(-3)}, Integer(1)}}};
  CHECK(zeroset_1d(pinch) ==
        Interval1D::of({{Rational(1, 3), Rational(1, 3)}}));
}

TEST_CASE("cone recognition") {
  CHECK(is_cone_1d(Interval1D::of({})));
  CHECK(is_cone_1d(Interval1D::of({{Rational(0), Rational(0)}})));
  CHECK(is_cone_1d(Interval1D::of({{Rational(0), Rational(1)}})));
  CHECK_FALSE(is_cone_1d(Interval1D::of({{Rational(0), Rational(1, 2)}})));
  CHECK_FALSE(
      is_cone_1d(Interval1D::of({{Rational(1, 3), Rational(1, 3)}})));
}

TEST_CASE("homogeneous zerosets are cones") {
  CHECK(homogeneous_zeroset_check(single({1}, 0)));
  CHECK(homogeneous_zeroset_check(single({-1}, 0)));
  NormalForm two;
  two.arity = 1;
  two.meets = {{Piece{{Integer(2)}, Integer(0)}},
               {Piece{{Integer(-1)}, Integer(0)}}};
  CHECK(homogeneous_zeroset_check(two));
  // the implication is vacuous for non-homogeneous forms
  CHECK(homogeneous_zeroset_check(witness()));
}

TEST_CASE("interval normalization") {
  auto z = Interval1D::of({{Rational(1, 2), Rational(1)},
                           {Rational(0), Rational(1, 2)}});
  REQUIRE(z.pieces.size() == 1);
  CHECK(z.pieces[0] == std::pair<Rational, Rational>{Rational(0), Rational(1)});
  CHECK(z.contains(Rational(1, 3)));
  CHECK_FALSE(Interval1D::of({}).contains(Rational(0)));
}

TEST_CASE("term evaluation over the rank-2 symbolic algebra") {
  using E = SymbolicMvAlgebra::Elem;
  auto z = MvTerm::var(0);
  auto sq = MvTerm::odot(z, z);
  // infinitesimals square to zero
  CHECK(eval_delta_term(sq, {E{Rational(0), Rational(5)}}, 1) ==
        E{Rational(0), Rational(0)});
  // coinfinitesimals do not
  CHECK(eval_delta_term(sq, {E{Rational(1), Rational(-2)}}, 1) !=
        E{Rational(0), Rational(0)});
  // excluded middle for oplus holds everywhere
  auto lem = MvTerm::oplus(z, MvTerm::neg(z));
  CHECK(eval_delta_term(lem, {E{Rational(0), Rational(7)}}, 1) ==
        E{Rational(1), Rational(0)});
  // constraint violations are rejected
  CHECK_THROWS_AS(eval_delta_term(sq, {E{Rational(0), Rational(-1)}}, 1),
                  InputError);
}

TEST_CASE("form (1) membership") {
  using E = SymbolicMvAlgebra::Elem;
  ZerosetForm1 z;
  z.arity = 1;
  z.vertices = {{0}};
  z.cones = {{}};  // the whole nonnegative ray
  CHECK(form1_member(z, {E{Rational(0), Rational(5)}}));
  CHECK_FALSE(form1_member(z, {E{Rational(1), Rational(-2)}}));
  ZerosetForm1 empty;
  empty.arity = 1;
  CHECK_FALSE(form1_member(empty, {E{Rational(0), Rational(0)}}));
  // a half-ray cone: x <= 0 picks out only the origin of the sector
  ZerosetForm1 origin;
  origin.arity = 1;
  origin.vertices = {{0}};
  origin.cones = {{{Rational(1)}}};
  CHECK(form1_member(origin, {E{Rational(0), Rational(0)}}));
  CHECK_FALSE(form1_member(origin, {E{Rational(0), Rational(3)}}));
}
