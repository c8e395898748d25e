#include <doctest.h>

#include "mvs/functors.hpp"
#include "mvs/spectra.hpp"

using namespace mvs;

TEST_CASE("lex group arithmetic and order") {
  auto g = LexGroup::parse("ZxZ");
  CHECK(g.rank == 2);
  LexGroup::Elem a = {Rational(1), Rational(-5)};
  LexGroup::Elem b = {Rational(0), Rational(7)};
  CHECK(g.cmp(a, b) > 0);  // lex: leading coordinate wins
  CHECK(g.add(a, b) == LexGroup::Elem{Rational(1), Rational(2)});
  CHECK(g.contains(a));
  CHECK_FALSE(g.contains({Rational(1, 2), Rational(0)}));
  CHECK(LexGroup::parse("ZxQ").contains({Rational(1), Rational(1, 2)}));
}

TEST_CASE("gamma of the integers is a finite chain") {
  UnitalLGroup gu;
  gu.group = LexGroup::Z();
  gu.unit = {Rational(3)};
  auto r = gamma(gu);
  REQUIRE(std::holds_alternative<FiniteMvAlgebra>(r));
  const auto& a = std::get<FiniteMvAlgebra>(r);
  CHECK(a.size == 4);
  CHECK(mv_isomorphic(a, lukasiewicz(3)));
}

TEST_CASE("gamma rejects non-units") {
  UnitalLGroup gu;
  gu.group = LexGroup::Z();
  gu.unit = {Rational(-1)};
  CHECK_THROWS_AS(gamma(gu), InputError);
}

TEST_CASE("symbolic gamma operations") {
  auto k = komori(2);  // [0, (2,0)] in Z lex Z
  using E = SymbolicMvAlgebra::Elem;
  E a = {Rational(1), Rational(3)};
  E b = {Rational(1), Rational(-1)};
  CHECK(k.oplus(a, b) == E{Rational(2), Rational(0)});  // capped at the unit
  CHECK(k.neg(a) == E{Rational(1), Rational(-3)});
  CHECK(k.join(a, b) == a);
  CHECK(k.meet(a, b) == b);
  CHECK(k.ord(E{Rational(0), Rational(5)}) == std::nullopt);
  CHECK(k.ord(E{Rational(1), Rational(0)}) == 2);
}

TEST_CASE("chang table against the interval presentation") {
  auto c = chang_algebra();
  // (1 - 3c) + 2c = 1 - c
  ChangElem x{true, 3}, y{false, 2};
  auto z = chang_oplus(x, y);
  CHECK(z.upper);
  CHECK(z.n == 1);
  CHECK(chang_encode(z) == c.oplus(chang_encode(x), chang_encode(y)));
  // nc + mc = (n+m)c
  auto s = chang_oplus(ChangElem{false, 2}, ChangElem{false, 5});
  CHECK_FALSE(s.upper);
  CHECK(s.n == 7);
  // (1-nc) + (1-mc) = 1
  auto t = chang_oplus(ChangElem{true, 2}, ChangElem{true, 5});
  CHECK(t.upper);
  CHECK(t.n == 0);
}

TEST_CASE("chang notation printing") {
  auto c = chang_algebra();
  CHECK(c.show(chang_encode({false, 2})) == "2c");
  CHECK(c.show(chang_encode({true, 3})) == "1-3c");
  CHECK(c.show(chang_encode({false, 0})) == "0");
  CHECK(c.show(chang_encode({true, 0})) == "1");
}

TEST_CASE("terms over symbolic algebras") {
  auto c = chang_algebra();
  auto x = MvTerm::var(0);
  auto inf = chang_encode({false, 1});
  // c + c = 2c, and c . c = 0 (infinitesimals square to zero)
  CHECK(c.show(eval_term_symbolic(c, MvTerm::oplus(x, x), {inf})) == "2c");
  CHECK(eval_term_symbolic(c, MvTerm::odot(x, x), {inf}) == c.zero());
}

TEST_CASE("belluce and principal-ideal lattices of a chain") {
  auto l = lukasiewicz(3);
  auto b = belluce(l);
  CHECK(b.size == 2);
  auto i = idc(l);
  CHECK(i.size == 2);
  CHECK(lattice_isomorphic(b, i));
}

TEST_CASE("belluce of a product is the boolean square") {
  auto p = product(lukasiewicz(1), lukasiewicz(1));
  auto b = belluce(p);
  CHECK(b.size == 4);
  CHECK(lattice_isomorphic(b, compact_opens_lattice(spec(p))));
  CHECK(lattice_isomorphic(b, idc(p)));
}

TEST_CASE("symbolic spectra are chains indexed by rank") {
  CHECK(symbolic_spec(komori(3)).order.n == 2);
  CHECK(symbolic_spec(komori(3)).order.is_chain());
  auto d = delta(LexGroup::parse("ZxZ"));
  REQUIRE(std::holds_alternative<SymbolicMvAlgebra>(d));
  auto s = symbolic_spec(std::get<SymbolicMvAlgebra>(d));
  CHECK(s.order.n == 3);
  CHECK(s.order.is_chain());
}

TEST_CASE("lex group prime spectra") {
  CHECK(lgroup_prime_spectrum(LexGroup::trivial()).order.n == 0);
  CHECK(lgroup_prime_spectrum(LexGroup::Z()).order.n == 1);
  CHECK(lgroup_prime_spectrum(LexGroup::parse("ZxZ")).order.n == 2);
}

TEST_CASE("spectrum of delta minus its closed point") {
  CHECK(verify_lspec(LexGroup::trivial()));
  CHECK(verify_lspec(LexGroup::Z()));
  CHECK(verify_lspec(LexGroup::parse("ZxZ")));
}
