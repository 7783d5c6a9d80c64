#include "doctest.h"
#include "immw/json_io.hpp"
#include "oracles.hpp"

using namespace immw;

TEST_CASE("rational strings") {
  CHECK(Rational::from_string("3/4") == Rational(3, 4));
  CHECK(Rational::from_string("-3/4") == Rational(-3, 4));
  CHECK(Rational::from_string("7") == Rational(7));
  CHECK(Rational::from_string("+7") == Rational(7));
  CHECK(Rational::from_string("0") == Rational(0));
  CHECK(Rational(6, 8).to_string() == "3/4");
  CHECK(Rational(-6, 8).to_string() == "-3/4");
  CHECK(Rational(14, 7).to_string() == "2");

  CHECK_THROWS_AS(Rational::from_string(""), immw::ParseError);
  CHECK_THROWS_AS(Rational::from_string("a"), immw::ParseError);
  CHECK_THROWS_AS(Rational::from_string("1/0"), immw::ParseError);
  CHECK_THROWS_AS(Rational::from_string("1.5"), immw::ParseError);

  // Round trip random values.
  oracle::RationalStream rng(3);
  for (int t = 0; t < 200; ++t) {
    const Rational r = rng.next_rational(1000, 1000);
    CHECK(Rational::from_string(r.to_string()) == r);
  }
}

TEST_CASE("gaussian rational strings") {
  CHECK(GaussianRational::from_string("1/2+3/4i") == GaussianRational(Rational(1, 2), Rational(3, 4)));
  CHECK(GaussianRational::from_string("1/2-3/4i") == GaussianRational(Rational(1, 2), Rational(-3, 4)));
  CHECK(GaussianRational::from_string("-9/2-1i") == GaussianRational(Rational(-9, 2), Rational(-1)));
  CHECK(GaussianRational::from_string("5") == GaussianRational(Rational(5)));
  CHECK(GaussianRational::from_string("3i") == GaussianRational(Rational(0), Rational(3)));
  CHECK(GaussianRational::from_string("-i") == GaussianRational(Rational(0), Rational(-1)));
  CHECK(GaussianRational::from_string("i") == GaussianRational(Rational(0), Rational(1)));

  oracle::RationalStream rng(17);
  for (int t = 0; t < 200; ++t) {
    const GaussianRational z(rng.next_rational(99, 99), rng.next_rational(99, 99));
    CHECK(GaussianRational::from_string(z.to_string()) == z);
  }
}

TEST_CASE("partition and composition json") {
  const Partition p({2, 1});
  CHECK(to_json(p).dump() == "[2,1]");
  CHECK(partition_from_json(json::parse("[2,1]")) == p);
  CHECK(partition_from_json(json::parse("[]")).empty());
  CHECK_THROWS_AS(partition_from_json(json::parse("{\"x\":1}")), immw::ParseError);

  const WeakComposition mu({1, 0, 2});
  CHECK(to_json(mu).dump() == "[1,0,2]");
  CHECK(composition_from_json(json::parse("[1,0,2]")) == mu);
}

TEST_CASE("matrix json round trips") {
  oracle::RationalStream rng(29);
  DenseMatrix<Rational> a(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = rng.next_rational();
  const json ja = matrix_to_json(a);
  CHECK(detect_matrix_mode(ja) == ScalarMode::rational);
  CHECK(matrix_from_json<Rational>(ja) == a);

  DenseMatrix<GaussianRational> g(2, 2);
  g << GaussianRational(Rational(1), Rational(2)), GaussianRational(Rational(0), Rational(-1)),
      GaussianRational(Rational(3)), GaussianRational(Rational(-1, 2), Rational(5, 7));
  const json jg = matrix_to_json(g);
  CHECK(detect_matrix_mode(jg) == ScalarMode::gaussian);
  CHECK(matrix_from_json<GaussianRational>(jg) == g);

  DenseMatrix<double> f(2, 2);
  f << 0.5, -1.25, 3.0, 0.0;
  const json jf = matrix_to_json(f);
  CHECK(detect_matrix_mode(jf) == ScalarMode::floating);
  CHECK(matrix_from_json<double>(jf) == f);

  CHECK_THROWS_AS(matrix_from_json<Rational>(json::parse("{\"n\":2}")), immw::ParseError);
  CHECK_THROWS_AS(matrix_from_json<Rational>(json::parse("{\"n\":2,\"entries\":[[\"1\"]]}")),
                  immw::ParseError);
}

TEST_CASE("character table json layout") {
  const json j = to_json(CharacterTable::cached(3));
  CHECK(j.at("3").at("1,1,1") == 1);
  CHECK(j.at("2,1").at("1,1,1") == 2);
  CHECK(j.at("2,1").at("3") == -1);
  CHECK(j.at("1,1,1").at("2,1") == -1);
}
