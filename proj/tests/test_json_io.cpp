#include <doctest.h>

#include "mvs/functors.hpp"
#include "mvs/json_io.hpp"
#include "mvs/spectra.hpp"

using namespace mvs;

TEST_CASE("algebra round trip") {
  auto a = lukasiewicz(3);
  auto j = algebra_to_json(a);
  auto b = algebra_from_json(j);
  CHECK(b.size == a.size);
  CHECK(b.oplus == a.oplus);
  CHECK(b.neg == a.neg);
  CHECK(validate_algebra(b).ok());
}

TEST_CASE("malformed algebra json") {
  CHECK_THROWS_AS(algebra_from_json(Json::object()), InputError);
  Json j = algebra_to_json(lukasiewicz(2));
  j["neg"] = std::vector<int>{0};
  CHECK_THROWS_AS(algebra_from_json(j), InputError);
  Json k = algebra_to_json(lukasiewicz(2));
  k["oplus"] = std::vector<std::vector<int>>{{0}};
  CHECK_THROWS_AS(algebra_from_json(k), InputError);
}

TEST_CASE("hom round trip") {
  auto p = product(lukasiewicz(1), lukasiewicz(1));
  MvHom h{p, lukasiewicz(1), {0, 0, 1, 1}};
  auto back = mv_hom_from_json(mv_hom_to_json(h));
  CHECK(back.map == h.map);
  CHECK(validate_hom(back).ok);
}

TEST_CASE("lattice round trip recovers the bounds") {
  auto l = FiniteDistLattice::chain(3);
  auto back = lattice_from_json(lattice_to_json(l));
  CHECK(back.size == 3);
  CHECK(back.bottom == l.bottom);
  CHECK(back.top == l.top);
  CHECK(validate_lattice(back).ok);
}

TEST_CASE("normal form round trip") {
  NormalForm nf;
  nf.arity = 1;
  nf.meets = {{Piece{{Integer(1)}, Integer(0)}},
              {Piece{{Integer(2)}, Integer(-1)}}};
  auto back = normal_form_from_json(normal_form_to_json(nf));
  CHECK(back.arity == 1);
  REQUIRE(back.meets.size() == 2);
  CHECK(back.meets[1][0].a == nf.meets[1][0].a);
  CHECK(back.meets[1][0].b == nf.meets[1][0].b);
  // the parser enforces well-formedness
  Json bad;
  bad["arity"] = 1;
  bad["meets"] = Json::array();
  CHECK_THROWS_AS(normal_form_from_json(bad), InputError);
}

TEST_CASE("rationals") {
  CHECK(rational_from_string("3/4") == Rational(3, 4));
  CHECK(rational_from_string("-2") == Rational(-2));
  CHECK(rational_to_string(Rational(1, 3)) == "1/3");
  CHECK(rational_to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(rational_from_string("1/0"), InputError);
  CHECK_THROWS_AS(rational_from_string("x"), InputError);
}

TEST_CASE("interval printing") {
  CHECK(interval_to_string(Interval1D::of({})) == "{}");
  CHECK(interval_to_string(Interval1D::of({{Rational(0), Rational(0)}})) ==
        "{0}");
  CHECK(interval_to_string(Interval1D::of({{Rational(0), Rational(1, 2)}})) ==
        "[0, 1/2]");
  CHECK(interval_to_string(Interval1D::of(
            {{Rational(0), Rational(0)}, {Rational(1, 3), Rational(1)}})) ==
        "{0} u [1/3, 1]");
}

TEST_CASE("dot output for a 2-chain") {
  Poset p = Poset::chain(2);
  CHECK(emit_dot(p, {"a", "b"}) ==
        "digraph hasse {\n"
        "  rankdir=BT;\n"
        "  n0 [label=\"a\"];\n"
        "  n1 [label=\"b\"];\n"
        "  n0 -> n1;\n"
        "}\n");
}

TEST_CASE("dot keeps only covering edges") {
  auto dot = emit_dot(Poset::chain(3), {});
  CHECK(dot.find("n0 -> n1;") != std::string::npos);
  CHECK(dot.find("n1 -> n2;") != std::string::npos);
  CHECK(dot.find("n0 -> n2;") == std::string::npos);
}

TEST_CASE("classification json shape") {
  auto r = classify(lukasiewicz(2), {2, 3});
  auto j = classification_to_json(r);
  CHECK(j["rank"] == 2);
  CHECK(j["local"] == true);
  CHECK(j["inVK"]["2"] == true);
  CHECK(j["inVK"]["3"] == false);
  CHECK(j["witnesses"]["radical"] == std::vector<int>{0});
}

TEST_CASE("missing files are input errors") {
  CHECK_THROWS_AS(read_json_file("/nonexistent/path.json"), InputError);
}
