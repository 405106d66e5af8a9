#include "doctest.h"

#include <random>

#include "heaporth/coeff_spec.hpp"
#include "heaporth/determinant.hpp"
#include "heaporth/error.hpp"
#include "heaporth/numeric.hpp"
#include "heaporth/ortho_basis.hpp"
#include "support.hpp"

using namespace heaporth;

namespace {

MultiPoly P(const char* text) { return parse_multipoly(text); }
UniPoly U(const char* text) { return UniPoly::from_multi(parse_multipoly(text)); }

}  // namespace

TEST_CASE("coefficient specs") {
  const CoeffSpec fib = CoeffSpec::fibonacci();
  CHECK(fib.c(3) == MultiPoly());
  CHECK(fib.lam(2) == MultiPoly(-1));
  CHECK_THROWS_AS(fib.lam(0), Error);
  CHECK(CoeffSpec::symbolic().lam(2) == P("l2"));
  CHECK(CoeffSpec::symbolic().shifted().c(0) == P("c1"));
  CHECK(CoeffSpec::from_name("fib").kind() == CoeffSpec::Kind::kFibonacci);
  CHECK_THROWS_AS(CoeffSpec::from_name("legendre"), Error);

  const CoeffSpec custom = CoeffSpec::from_json(nlohmann::json{{"c", {"1/2", 0}}, {"lambda", {"2"}}});
  CHECK(custom.c(0) == MultiPoly(BigRational(1, 2)));
  CHECK(custom.lam(1) == MultiPoly(2));
  CHECK_THROWS_AS(custom.lam(2), Error);
  CHECK(custom.shifted().c(0) == MultiPoly(0));
  CHECK(CoeffSpec::catalan().specialize(P("c0^2 + l1 + l2*c3")) == MultiPoly(1));
  CHECK(zero_c(P("c0^2 + l1 + c1*l2")) == P("l1"));
}

TEST_CASE("three-term recursion") {
  const OrthoBasis sym = generate_basis(2, CoeffSpec::symbolic());
  CHECK(sym[0] == UniPoly(1));
  CHECK(sym[1] == U("x - c0"));
  CHECK(sym[2] == U("x^2 - c0*x - c1*x + c0*c1 - l1"));

  const OrthoBasis fib = generate_basis(5, CoeffSpec::fibonacci());
  CHECK(fib[3] == U("x^3 + 2*x"));
  CHECK(fib[5] == U("x^5 + 4*x^3 + 3*x"));
  CHECK(fib[3].to_string() == "x^3 + 2*x");
  for (unsigned n = 0; n <= 5; ++n) {
    CHECK(fib[n].degree() == static_cast<int>(n));
    CHECK(fib[n].is_monic());
  }
  // P_n(-x) = (-1)^n P_n(x) when c = 0.
  for (unsigned n = 0; n <= 5; ++n)
    for (unsigned k = 0; k <= n; ++k)
      if ((n - k) % 2 == 1) CHECK(fib[n].coeff(k).is_zero());
}

TEST_CASE("Stieltjes moments") {
  const MomentSeq mu = stieltjes_moments(6, CoeffSpec::symbolic());
  CHECK(mu[0] == MultiPoly(1));
  CHECK(mu[1] == P("c0"));
  CHECK(mu[2] == P("c0^2 + l1"));
  CHECK(mu[4] == P("c0^4 + 3*c0^2*l1 + 2*c0*c1*l1 + c1^2*l1 + l1^2 + l1*l2"));
  CHECK(zero_c(mu[6]) == P("l1^3 + 2*l1^2*l2 + l1*l2^2 + l1*l2*l3"));
  CHECK(zero_c(mu.h_at(3, 1)) == P("l1^2 + l1*l2"));

  const MomentSeq cat = stieltjes_moments(16, CoeffSpec::catalan());
  for (unsigned n = 0; n <= 16; ++n)
    CHECK(cat[n] == (n % 2 == 0 ? MultiPoly(catalan_number(n / 2)) : MultiPoly()));
}

TEST_CASE("moment sequences and scalar products") {
  const MomentSeq mu = stieltjes_moments(4, CoeffSpec::symbolic());
  const OrthoBasis q = generate_basis(2, CoeffSpec::symbolic());
  CHECK(scalar_product(q[1], q[2], mu).is_zero());
  CHECK(scalar_product(q[1], q[1], mu) == P("l1"));
  CHECK(scalar_product(q[2], q[2], mu) == P("l1*l2"));
  CHECK_THROWS_AS(scalar_product(UniPoly::x_power(3), UniPoly::x_power(2), mu), Error);
  try {
    scalar_product(UniPoly::x_power(3), UniPoly::x_power(2), mu);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kRange);
  }
}

TEST_CASE("recursion coefficients round trip") {
  for (const CoeffSpec& spec : {CoeffSpec::fibonacci(), CoeffSpec::catalan(), CoeffSpec::symbolic()}) {
    const unsigned n = spec.is_symbolic() ? 3 : 6;
    const OrthoBasis basis = generate_basis(n, spec);
    const MomentSeq mu = stieltjes_moments(2 * n + 1, spec);
    const RecursionCoeffs rc = recursion_coeffs(basis, mu);
    for (unsigned k = 0; k < n; ++k) CHECK(rc.c[k] == spec.c(k));
    for (unsigned k = 1; k < n; ++k) CHECK(rc.lambda[k] == spec.lam(k));
  }
  const CoeffSpec degenerate = CoeffSpec::custom({0, 0, 0, 0, 0, 0, 0}, {1, 0, 1, 1, 1, 1, 1});
  const OrthoBasis basis = generate_basis(3, degenerate);
  CHECK(testsupport::error_kind([&] { recursion_coeffs(basis, stieltjes_moments(7, degenerate)); }) ==
        ErrorKind::kDegenerateSpec);
}

TEST_CASE("Bareiss agrees with cofactor expansion") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 1 + trial % 4;
    PolyMatrix m(n, std::vector<MultiPoly>(n));
    for (auto& row : m)
      for (auto& e : row) e = testsupport::random_poly(rng, 2, 1);
    CHECK(bareiss_determinant(m) == laplace_determinant(m));
  }
  CHECK(bareiss_determinant({}) == MultiPoly(1));
  // Needs a row swap.
  CHECK(bareiss_determinant({{0, 1}, {1, 0}}) == MultiPoly(-1));
}

TEST_CASE("Hankel determinants") {
  const MomentSeq sym = stieltjes_moments(9, CoeffSpec::symbolic());
  CHECK(hankel_dets(0, sym).d == MultiPoly(1));
  CHECK(hankel_dets(0, sym).chi == P("c0"));
  CHECK(hankel_dets(1, sym).d == P("l1"));
  CHECK(hankel_dets(2, sym).d == P("l1^2*l2"));
  CHECK(hankel_dets(1, sym).chi == P("l1*c0 + l1*c1"));

  const MomentSeq fib = stieltjes_moments(13, CoeffSpec::fibonacci());
  const long d_expected[] = {1, -1, -1, 1, 1, -1, -1};
  for (unsigned n = 0; n <= 6; ++n) {
    CHECK(hankel_dets(n, fib).d == MultiPoly(d_expected[n]));
    CHECK(hankel_dets(n, fib).chi.is_zero());
  }
  const MomentSeq cat = stieltjes_moments(13, CoeffSpec::catalan());
  for (unsigned n = 0; n <= 6; ++n) CHECK(hankel_dets(n, cat).d == MultiPoly(1));

  const HankelMatrix a = HankelMatrix::plain(2, fib);
  CHECK(a.dim() == 3);
  CHECK(a.is_symmetric());
  CHECK(a.entries[2][2] == MultiPoly(2));
  CHECK(HankelMatrix::shifted(1, fib).entries[1][1] == MultiPoly(0));
}

TEST_CASE("determinant form of Q_n") {
  const MomentSeq sym = stieltjes_moments(5, CoeffSpec::symbolic());
  const OrthoBasis q = generate_basis(2, CoeffSpec::symbolic());
  CHECK(qn_via_determinant(1, sym) == q[1]);
  CHECK(qn_via_determinant(2, sym) == q[2]);
  const MomentSeq fib = stieltjes_moments(13, CoeffSpec::fibonacci());
  const OrthoBasis p = generate_basis(6, CoeffSpec::fibonacci());
  for (unsigned n = 1; n <= 6; ++n) CHECK(qn_via_determinant(n, fib) == p[n]);

  // mu = (1, 0, 0, ...) makes d_1 vanish.
  const MomentSeq flat = moments_from_values({1, 0, 0, 0, 0});
  CHECK_THROWS_AS(qn_via_determinant(2, flat), Error);
  try {
    qn_via_determinant(2, flat);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kSingularHankel);
  }
}

TEST_CASE("bordered determinant expands along the monomial row") {
  // det [[1, 0, -1], [0, -1, 0], [1, x, x^2]] for the Fibonacci moments.
  const PolyMatrix top{{1, 0, -1}, {0, -1, 0}};
  CHECK(bordered_determinant(top) == U("-x^2 - 1"));
}

TEST_CASE("lambda products and the inverse identity") {
  CHECK(lambda_product(CoeffSpec::symbolic(), 3) == P("l1*l2*l3"));
  CHECK(lambda_product(CoeffSpec::fibonacci(), 3) == MultiPoly(-1));
  CHECK(lambda_product(CoeffSpec::catalan(), 0) == MultiPoly(1));
  const CoeffSpec sym = CoeffSpec::symbolic();
  const OrthoBasis q = generate_basis(4, sym);
  const MomentSeq mu = stieltjes_moments(4, sym);
  for (unsigned n = 0; n <= 4; ++n) CHECK(basis_inverse_check(n, q, mu));
  const CoeffSpec degenerate = CoeffSpec::custom({0, 0, 0, 0, 0, 0, 0}, {1, 0, 1, 1, 1, 1, 1});
  CHECK(testsupport::error_kind([&] {
          basis_inverse_check(2, generate_basis(2, degenerate), stieltjes_moments(2, degenerate));
        }) == ErrorKind::kDegenerateSpec);
}

TEST_CASE("expansion in the basis") {
  const CoeffSpec fib = CoeffSpec::fibonacci();
  const OrthoBasis p = generate_basis(8, fib);
  const MomentSeq mu = stieltjes_moments(16, fib);
  const auto x7 = expand_in_basis(UniPoly::x_power(7), p, mu);
  const long e7[] = {0, -14, 0, 14, 0, -6, 0, 1};
  for (unsigned k = 0; k <= 7; ++k) CHECK(x7[k] == MultiPoly(e7[k]));
  const auto x8 = expand_in_basis(UniPoly::x_power(8), p, mu);
  const long e8[] = {14, 0, -28, 0, 20, 0, -7, 0, 1};
  for (unsigned k = 0; k <= 8; ++k) CHECK(x8[k] == MultiPoly(e8[k]));
  const auto x2 = expand_in_basis(UniPoly::x_power(2), p, mu);
  CHECK(x2[0] == MultiPoly(-1));
  CHECK(x2[2] == MultiPoly(1));
  CHECK_THROWS_AS(expand_in_basis(UniPoly::x_power(9), p, mu), Error);
}

TEST_CASE("Hankel positivity verdicts") {
  const MomentSeq cat = stieltjes_moments(12, CoeffSpec::catalan());
  for (unsigned n = 0; n <= 6; ++n) {
    const HankelVerdict v = hankel_positivity(HankelMatrix::plain(n, cat));
    CHECK(v.positive_definite);
    CHECK(v.determinant == BigRational(1));
    CHECK(v.leading_minors.size() == n + 1);
  }
  const MomentSeq fib = stieltjes_moments(4, CoeffSpec::fibonacci());
  const HankelMatrix a2 = HankelMatrix::plain(2, fib);
  const HankelVerdict v = hankel_positivity(a2);
  CHECK(v.nonsingular);
  CHECK_FALSE(v.positive_definite);
  CHECK_FALSE(jacobi_eigen_positivity(a2));
  CHECK_THROWS_AS(hankel_positivity(HankelMatrix::plain(1, stieltjes_moments(2, CoeffSpec::symbolic()))), Error);
}

TEST_CASE("orthogonality in every specialization") {
  for (const CoeffSpec& spec : {CoeffSpec::symbolic(), CoeffSpec::catalan(), CoeffSpec::fibonacci()}) {
    const unsigned n_max = spec.is_symbolic() ? 4 : 8;
    const OrthoBasis q = generate_basis(n_max, spec);
    const MomentSeq mu = stieltjes_moments(2 * n_max, spec);
    for (unsigned n = 0; n <= n_max; ++n) {
      for (unsigned m = 0; m <= n_max; ++m) {
        CAPTURE(n);
        CAPTURE(m);
        const MultiPoly ip = scalar_product(q[n], q[m], mu);
        CHECK(ip == (n == m ? lambda_product(spec, n) : MultiPoly()));
      }
    }
  }
}

TEST_CASE("determinant form matches the recursion") {
  for (const CoeffSpec& spec : {CoeffSpec::symbolic(), CoeffSpec::catalan(), CoeffSpec::fibonacci()}) {
    const unsigned n_max = spec.is_symbolic() ? 4 : 8;
    const OrthoBasis q = generate_basis(n_max, spec);
    const MomentSeq mu = stieltjes_moments(2 * n_max, spec);
    for (unsigned n = 0; n <= n_max; ++n) CHECK(qn_via_determinant(n, mu) == q[n]);
  }
}

TEST_CASE("triangle entries are scalar products") {
  const CoeffSpec sym = CoeffSpec::symbolic();
  const OrthoBasis q = generate_basis(5, sym);
  const MomentSeq mu = stieltjes_moments(10, sym);
  for (unsigned n = 0; n <= 5; ++n)
    for (unsigned k = 0; k <= 5; ++k) CHECK(scalar_product(UniPoly::x_power(n), q[k], mu) == mu.h_at(n, k));
}

TEST_CASE("Hankel ratios under random rational specs") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<BigRational> c, lambda;
    for (int i = 0; i < 16; ++i) c.emplace_back(num(rng), den(rng));
    for (int i = 0; i < 16; ++i) {
      int v = num(rng);
      lambda.emplace_back(v == 0 ? 1 : v, den(rng));
    }
    const CoeffSpec spec = CoeffSpec::custom(c, lambda);
    const MomentSeq mu = stieltjes_moments(13, spec);
    MultiPoly d_prev(1), chi_prev;
    for (unsigned n = 0; n <= 6; ++n) {
      const HankelDets hd = hankel_dets(n, mu);
      CHECK(hd.d == d_prev * lambda_product(spec, n));
      CHECK(hd.chi * d_prev - chi_prev * hd.d == spec.c(n) * hd.d * d_prev);
      d_prev = hd.d;
      chi_prev = hd.chi;
    }
  }
}
