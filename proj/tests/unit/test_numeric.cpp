#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "heaporth/numeric.hpp"
#include "heaporth/ortho_basis.hpp"
#include "support.hpp"

using namespace heaporth;

TEST_CASE("Binet form of the Fibonacci polynomials") {
  CHECK(fibonacci_exact_eval(3, 2.0) == doctest::Approx(12.0));
  CHECK(fibonacci_exact_eval(0, 7.5) == 1.0);
  CHECK(fibonacci_exact_eval(1, 0.5) == 0.5);
  CHECK(binet_eval(3, 2.0) == doctest::Approx(12.0));
  const double grid[] = {-2.0, -1.0, -0.5, 0.5, 1.0, 3.0};
  for (unsigned n = 0; n <= 20; ++n) {
    for (double x : grid) {
      const double exact = fibonacci_exact_eval(n, x);
      CHECK(std::abs(binet_eval(n, x) - exact) <= 1e-9 * std::max(1.0, std::abs(exact)));
    }
  }
}

TEST_CASE("adaptive Simpson") {
  const auto r = adaptive_simpson([](double t) { return std::exp(t); }, 0.0, 1.0, 1e-12);
  CHECK(std::abs(r.value - (std::exp(1.0) - 1.0)) < 1e-11);
  CHECK(r.evaluations > 0);
  // Unbounded slope at 0 with an impossible tolerance.
  CHECK(testsupport::error_kind([] {
          adaptive_simpson([](double t) { return std::sqrt(t); }, 0.0, 1.0, 1e-30, 12);
        }) == ErrorKind::kAccuracy);
}

TEST_CASE("integral representation of the Catalan numbers") {
  CHECK(std::abs(catalan_integral(0).value - 1.0) < 1e-8);
  CHECK(std::abs(catalan_integral(2).value - 2.0) < 1e-8);
  CHECK(std::abs(catalan_integral(4).value - 14.0) < 1e-8);
  for (unsigned m = 0; m <= 6; ++m)
    CHECK(std::abs(catalan_integral(m).value - catalan_number(m).to_double()) < 1e-8);
}

TEST_CASE("generating function") {
  CHECK(gf_coeff_check(10));
  CHECK(gf_coeff_check(0));
}

TEST_CASE("Jacobi eigenvalues") {
  auto eig = jacobi_eigenvalues({{2, 1}, {1, 2}});
  std::sort(eig.begin(), eig.end());
  CHECK(eig[0] == doctest::Approx(1.0));
  CHECK(eig[1] == doctest::Approx(3.0));
  // Fibonacci A_2 = [[1,0,-1],[0,-1,0],[-1,0,2]]: eigenvalues 3/2 +- sqrt(5)/2 and -1.
  eig = jacobi_eigenvalues({{1, 0, -1}, {0, -1, 0}, {-1, 0, 2}});
  std::sort(eig.begin(), eig.end());
  CHECK(eig[0] == doctest::Approx(-1.0));
  CHECK(eig[1] == doctest::Approx(1.5 - std::sqrt(5.0) / 2));
  CHECK(eig[2] == doctest::Approx(1.5 + std::sqrt(5.0) / 2));

  const MomentSeq cat = stieltjes_moments(12, CoeffSpec::catalan());
  for (unsigned n = 0; n <= 6; ++n) CHECK(jacobi_eigen_positivity(HankelMatrix::plain(n, cat)));
  const MomentSeq fib = stieltjes_moments(12, CoeffSpec::fibonacci());
  CHECK_FALSE(jacobi_eigen_positivity(HankelMatrix::plain(2, fib)));
  const MomentSeq sym = stieltjes_moments(2, CoeffSpec::symbolic());
  CHECK(testsupport::error_kind([&] { jacobi_eigen_positivity(HankelMatrix::plain(1, sym)); }) ==
        ErrorKind::kUnsupported);
}

TEST_CASE("Jacobi agrees with Sylvester minors") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> num(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<BigRational> c, lambda;
    for (int i = 0; i < 10; ++i) c.emplace_back(num(rng), 2);
    for (int i = 0; i < 10; ++i) {
      const int v = num(rng);
      lambda.emplace_back(v == 0 ? 1 : v, 1);
    }
    const MomentSeq mu = stieltjes_moments(8, CoeffSpec::custom(c, lambda));
    for (unsigned n = 0; n <= 4; ++n) {
      const HankelMatrix a = HankelMatrix::plain(n, mu);
      const HankelVerdict v = hankel_positivity(a);
      if (!v.nonsingular) continue;
      CHECK(jacobi_eigen_positivity(a) == v.positive_definite);
    }
  }
}
