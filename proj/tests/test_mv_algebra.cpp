#include <doctest.h>

#include "mvs/functors.hpp"
#include "mvs/mv_algebra.hpp"

using namespace mvs;

TEST_CASE("two-element algebra satisfies the axioms") {
  auto b = lukasiewicz(1);
  REQUIRE(b.size == 2);
  CHECK(validate_algebra(b).ok());
  CHECK(b.op(1, 1) == 1);
  CHECK(b.nn(0) == 1);
}

TEST_CASE("lukasiewicz chains: derived operations") {
  auto l = lukasiewicz(4);  // 0, 1/4, 2/4, 3/4, 1
  CHECK(validate_algebra(l).ok());
  CHECK(l.op(1, 2) == 3);       // 1/4 + 2/4
  CHECK(l.op(3, 3) == 4);       // truncated at 1
  CHECK(l.nn(1) == 3);          // 1 - 1/4
  CHECK(l.odot(3, 3) == 2);     // max(0, 3/4 + 3/4 - 1)
  CHECK(l.ominus(3, 1) == 2);   // 3/4 - 1/4
  CHECK(l.join(1, 3) == 3);
  CHECK(l.meet(1, 3) == 1);
  CHECK(l.leq(1, 3));
  CHECK_FALSE(l.leq(3, 1));
}

TEST_CASE("a broken table is reported with a witness") {
  auto l = lukasiewicz(2);
  l.oplus[1][1] = 1;  // 1/2 + 1/2 should be 1
  auto rep = validate_algebra(l);
  CHECK(rep.table_well_formed);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.violations.empty());
}

TEST_CASE("malformed shape is distinguished from axiom failure") {
  FiniteMvAlgebra a;
  a.size = 2;
  a.oplus = {{0, 1}};  // missing row
  a.neg = {1, 0};
  auto rep = validate_algebra(a);
  CHECK_FALSE(rep.table_well_formed);
}

TEST_CASE("order of elements") {
  auto l = lukasiewicz(4);
  CHECK(ord(l, 0) == std::nullopt);
  CHECK(ord(l, 1) == 4);   // 4 * 1/4 reaches 1
  CHECK(ord(l, 2) == 2);
  CHECK(ord(l, 3) == 2);
  CHECK(ord(l, 4) == 1);
  // 2/5 needs three summands
  CHECK(ord(lukasiewicz(5), 2) == 3);
}

TEST_CASE("terms evaluate through derived connectives") {
  auto l = lukasiewicz(2);
  auto x = MvTerm::var(0);
  CHECK(eval_term(l, MvTerm::oplus(x, x), {1}) == 2);
  CHECK(eval_term(l, MvTerm::odot(x, x), {1}) == 0);
  CHECK(eval_term(l, MvTerm::oplus(x, MvTerm::neg(x)), {1}) == 2);
  CHECK(eval_term(l, MvTerm::zero(), {}) == 0);
  CHECK(eval_term(l, MvTerm::one(), {}) == 2);
}

TEST_CASE("products and projections") {
  auto b = lukasiewicz(1);
  auto p = product(b, b);
  REQUIRE(p.size == 4);
  CHECK(validate_algebra(p).ok());
  // (1,0) + (0,1) = (1,1)
  CHECK(p.op(2, 1) == 3);
  MvHom proj{p, b, {0, 0, 1, 1}};
  CHECK(validate_hom(proj).ok);
  CHECK(is_surjective(proj));
  CHECK(hom_kernel(proj) == 0b0011);
}

TEST_CASE("hom validation catches non-homs") {
  auto b = lukasiewicz(1);
  auto l = lukasiewicz(2);
  MvHom bad{l, b, {0, 0, 0}};  // sends 1 to 0
  CHECK_FALSE(validate_hom(bad).ok);
}

TEST_CASE("quotient by a product factor") {
  auto two = lukasiewicz(2);
  auto p = product(two, two);
  // first-factor ideal: pairs (x, 0), indices x * 3
  Mask ideal = (Mask{1} << 0) | (Mask{1} << 3) | (Mask{1} << 6);
  auto q = quotient(p, ideal);
  REQUIRE(q.algebra.size == 3);
  CHECK(validate_algebra(q.algebra).ok());
  CHECK(mv_isomorphic(q.algebra, two));
  CHECK(validate_hom(q.canonical).ok);
  CHECK(is_surjective(q.canonical));
  CHECK(hom_kernel(q.canonical) == ideal);
}

TEST_CASE("quotient rejects non-ideals") {
  auto l = lukasiewicz(2);
  CHECK_THROWS_AS(quotient(l, 0b010), InputError);
}

TEST_CASE("isomorphism distinguishes chain from product") {
  auto four = lukasiewicz(3);
  auto square = product(lukasiewicz(1), lukasiewicz(1));
  REQUIRE(four.size == square.size);
  CHECK_FALSE(mv_isomorphic(four, square));
  CHECK(mv_isomorphic(four, four));
  CHECK(mv_isomorphic(square, product(lukasiewicz(1), lukasiewicz(1))));
}

TEST_CASE("derived_op dispatch") {
  auto l = lukasiewicz(2);
  CHECK(std::get<int>(derived_op(l, DerivedOp::Join, 1, 2)) == 2);
  CHECK(std::get<int>(derived_op(l, DerivedOp::Odot, 1, 1)) == 0);
  CHECK(std::get<bool>(derived_op(l, DerivedOp::Leq, 1, 2)));
}
