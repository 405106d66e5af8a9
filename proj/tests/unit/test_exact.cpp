#include "doctest.h"

#include <random>

#include "heaporth/error.hpp"
#include "heaporth/json_io.hpp"
#include "heaporth/ratfn.hpp"
#include "heaporth/series.hpp"
#include "heaporth/unipoly.hpp"
#include "support.hpp"

using namespace heaporth;

namespace {

MultiPoly P(const char* text) { return parse_multipoly(text); }
MultiPoly X() { return MultiPoly(Var::x()); }

}  // namespace

TEST_CASE("rational arithmetic and formatting") {
  CHECK(BigRational(1, 2) + BigRational(1, 3) == BigRational(5, 6));
  CHECK(BigRational(6, -4) == BigRational(-3, 2));
  CHECK(BigRational(-3, 2).to_string() == "-3/2");
  CHECK(BigRational(4).to_string() == "4");
  CHECK(BigRational(4).to_fraction_string() == "4/1");
  CHECK(BigRational::parse("-10/4") == BigRational(-5, 2));
  CHECK(BigRational(2, 3).pow(3) == BigRational(8, 27));
  CHECK(BigRational(1, 3) < BigRational(1, 2));
  CHECK_THROWS_AS(BigRational(1) / BigRational(0), Error);
  CHECK_THROWS_AS(BigRational::parse("1/x"), Error);
}

TEST_CASE("binomials and Catalan numbers") {
  CHECK(binomial(8, 4) == BigRational(70));
  CHECK(binomial(3, 5) == BigRational(0));
  const long expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (unsigned m = 0; m <= 8; ++m) CHECK(catalan_number(m) == BigRational(expected[m]));
}

TEST_CASE("variables validate their indices") {
  CHECK(Var::c(0).name() == "c0");
  CHECK(Var::lam(3).name() == "l3");
  CHECK(Var::parse("l12") == Var::lam(12));
  CHECK_THROWS_AS(Var::lam(0), Error);
  CHECK_THROWS_AS(Var::c(-1), Error);
  try {
    Var::lam(0);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kIndex);
  }
}

TEST_CASE("polynomial parser") {
  CHECK(P("(c0 - 1)^2 * x") == P("x*c0^2 - 2*x*c0 + x"));
  CHECK(P("-x + 1/2") == P("1/2 - x"));
  CHECK_THROWS_AS(P("x +"), Error);
  CHECK_THROWS_AS(P("(x"), Error);
  CHECK_THROWS_AS(P("y"), Error);
  CHECK_THROWS_AS(P(""), Error);
}

TEST_CASE("multipoly canonical form and printing") {
  CHECK(P("x^2 - 2*x*c0 + 1").to_string() == "x^2 - 2*x*c0 + 1");
  CHECK(MultiPoly().to_string() == "0");
  CHECK((X() - X()).is_zero());
  CHECK(P("c0 + l1") == P("l1 + c0"));
  CHECK(P("(c0 + l1)^2") == P("c0^2 + 2*c0*l1 + l1^2"));
  CHECK(P("3/2*x").to_string() == "3/2*x");
  CHECK(P("x*c0^2*l1").total_degree() == 4);
  CHECK(P("x^3*c0 + x").degree_in(Var::x()) == 3);
  CHECK(P("x^2*c0 + x^2*l1 + x").coefficient_of(Var::x(), 2) == P("c0 + l1"));
}

TEST_CASE("substitution") {
  CHECK(P("c0^2 + l1").substitute(Var::lam(1), MultiPoly(-1)) == P("c0^2 - 1"));
  CHECK(P("x*c1").substitute(Var::c(1), P("l2 + 1")) == P("x*l2 + x"));
  CHECK(shift_vars(P("c0*l1 + x")) == P("c1*l2 + x"));
}

TEST_CASE("exact division") {
  const MultiPoly a = P("c0^2 + l1*c1 - 3");
  const MultiPoly b = P("l2 - c0 + 2");
  CHECK((a * b).exact_divide(b) == a);
  CHECK_THROWS_AS(P("c0 + 1").exact_divide(P("c0")), Error);
  CHECK_THROWS_AS(P("c0").exact_divide(MultiPoly()), Error);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 60; ++trial) {
    const MultiPoly a = testsupport::random_poly(rng, 5, 4);
    const MultiPoly b = testsupport::random_poly(rng, 5, 4);
    const MultiPoly c = testsupport::random_poly(rng, 5, 4);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == MultiPoly());
    CHECK(a * MultiPoly(1) == a);
    CHECK(shift_vars(a * b + c) == shift_vars(a) * shift_vars(b) + shift_vars(c));
    if (!b.is_zero()) CHECK((a * b).exact_divide(b) == a);
  }
}

TEST_CASE("univariate polynomials") {
  const UniPoly q = UniPoly::from_multi(P("x^2 - c0*x + l1"));
  CHECK(q.degree() == 2);
  CHECK(q.is_monic());
  CHECK(q.coeff(1) == P("-c0"));
  CHECK(UniPoly().degree() == -1);
  CHECK(UniPoly({MultiPoly(1), MultiPoly(), MultiPoly()}).degree() == 0);
  CHECK_THROWS_AS(UniPoly({X()}), Error);
  CHECK((q * UniPoly::x_power(2)).degree() == 4);
  CHECK(q.times_x_power(1) == q * UniPoly::x_power(1));
}

TEST_CASE("reciprocal polynomial") {
  const UniPoly q = UniPoly::from_multi(P("x^2 - c0*x - c1*x + c0*c1 - l1"));
  CHECK(reciprocal_poly(q, 2) == UniPoly::from_multi(P("(c0*c1 - l1)*x^2 - (c0 + c1)*x + 1")));
  CHECK(reciprocal_poly(q, 3) == UniPoly::from_multi(P("(c0*c1 - l1)*x^3 - (c0 + c1)*x^2 + x")));
  CHECK_THROWS_AS(reciprocal_poly(q, 1), Error);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    UniPoly p = UniPoly::from_multi(testsupport::random_poly(rng).substitute(Var::x(), MultiPoly(0)) + X().pow(3));
    CHECK(reciprocal_poly(reciprocal_poly(p, 3), 3) == p);
  }
}

TEST_CASE("truncated series and division") {
  // 1/(1 - x - x^2) = Fibonacci numbers.
  const TruncatedSeries fib = series_div(UniPoly(1), UniPoly::from_multi(P("1 - x - x^2")), 8);
  const long expected[] = {1, 1, 2, 3, 5, 8, 13, 21, 34};
  for (unsigned k = 0; k <= 8; ++k) CHECK(fib[k] == MultiPoly(expected[k]));
  CHECK_THROWS_AS(series_div(UniPoly(1), UniPoly::from_multi(P("x")), 3), Error);
  CHECK_THROWS_AS(series_div(UniPoly(1), UniPoly::from_multi(P("c0 + x")), 3), Error);
  try {
    series_div(UniPoly(1), UniPoly::from_multi(P("x")), 3);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNonExpandable);
  }
}

TEST_CASE("series division inverts multiplication") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const UniPoly a = UniPoly::from_multi(testsupport::random_poly(rng));
    const UniPoly b = UniPoly::from_multi(testsupport::random_poly(rng).substitute(Var::x(), MultiPoly(0)) * X() + MultiPoly(1));
    const TruncatedSeries q = series_div(a * b, b, 6);
    CHECK(q == TruncatedSeries::from_poly(a, 6));
    CHECK(series_div(a, b, 6) * TruncatedSeries::from_poly(b, 6) == TruncatedSeries::from_poly(a, 6));
  }
}

TEST_CASE("rational functions compare by cross-multiplication") {
  const UniPoly den = UniPoly::from_multi(P("1 - x"));
  const RationalFn f(UniPoly(1), den);
  const RationalFn g(UniPoly::from_multi(P("1 + x")), den * UniPoly::from_multi(P("1 + x")));
  CHECK(f.equals(g));
  CHECK(f.series(4) == TruncatedSeries(4, {1, 1, 1, 1, 1}));
  CHECK((f - f).num().is_zero());
  CHECK(RationalFn(UniPoly(3), UniPoly(2)).normalized().num() == UniPoly(MultiPoly(BigRational(3, 2))));
  CHECK_THROWS_AS(RationalFn(UniPoly(1), UniPoly()), Error);
  CHECK_THROWS_AS(RationalFn(UniPoly(1), UniPoly::from_multi(P("x"))), Error);
}

TEST_CASE("json round trip") {
  const MultiPoly p = P("3/2*x^2*c0 - l1 + 7");
  const auto j = to_json(p);
  CHECK(multipoly_from_json(j) == p);
  CHECK(j["terms"][0]["coeff"] == "3/2");
  CHECK(to_compact_json(MultiPoly(-5)) == -5);
  CHECK(to_compact_json(MultiPoly(BigRational(1, 3))) == "1/3");
  CHECK(to_compact_json(P("c0")).is_object());
}
