#include "heaporth/numeric.hpp"

#include <cmath>
#include <numbers>

#include "heaporth/error.hpp"
#include "heaporth/series.hpp"

namespace heaporth {

double binet_eval(unsigned n, double x) {
  const double root = std::sqrt(x * x + 4.0);
  const double a = (x + root) / 2.0;
  const double b = (x - root) / 2.0;
  return (std::pow(a, n + 1) - std::pow(b, n + 1)) / (a - b);
}

double fibonacci_exact_eval(unsigned n, double x) {
  const OrthoBasis basis = generate_basis(n, CoeffSpec::fibonacci());
  const BigRational xr{mpq_class(x)};
  BigRational acc;
  const auto& coeffs = basis[n].coeffs();
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * xr + coeffs[k].constant_term();
  return acc.to_double();
}

namespace {

constexpr unsigned kMinDepth = 4;

struct SimpsonState {
  const std::function<double(double)>& f;
  unsigned max_depth;
  unsigned evaluations = 0;
  double error = 0.0;

  double eval(double t) {
    ++evaluations;
    return f(t);
  }

  double refine(double a, double b, double fa, double fm, double fb, double whole, double tol, unsigned depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = eval(lm);
    const double frm = eval(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    // A few forced levels keep symmetric integrands from agreeing by accident.
    if (depth >= kMinDepth && std::abs(delta) <= 15.0 * tol) {
      error += std::abs(delta) / 15.0;
      return left + right + delta / 15.0;
    }
    if (depth >= max_depth) {
      throw Error(ErrorKind::kAccuracy, "adaptive Simpson hit depth " + std::to_string(max_depth) +
                                            " near t=" + std::to_string(m));
    }
    return refine(a, m, fa, flm, fm, left, tol / 2.0, depth + 1) +
           refine(m, b, fm, frm, fb, right, tol / 2.0, depth + 1);
  }
};

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                                  unsigned max_depth) {
  SimpsonState st{f, max_depth};
  const double fa = st.eval(a);
  const double fb = st.eval(b);
  const double fm = st.eval(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  QuadratureResult r;
  r.value = st.refine(a, b, fa, fm, fb, whole, tol, 0);
  r.abs_error_estimate = st.error;
  r.evaluations = st.evaluations;
  if (!std::isfinite(r.value)) throw Error(ErrorKind::kNumeric, "non-finite quadrature value");
  return r;
}

QuadratureResult catalan_integral(unsigned m) {
  // x = t^2 gives 2 t^{2m} sqrt(1-t^2) dt, still singular in slope at t = 1;
  // t = sin(u) then gives 2 sin^{2m}(u) cos^2(u) du on [0, pi/2], which is smooth.
  const auto integrand = [m](double u) {
    const double s = std::sin(u);
    const double c = std::cos(u);
    return 2.0 * std::pow(s, 2.0 * m) * c * c;
  };
  const double scale = std::pow(4.0, m + 1) / (2.0 * std::numbers::pi);
  QuadratureResult r = adaptive_simpson(integrand, 0.0, std::numbers::pi / 2.0, 1e-12 / scale);
  r.value *= scale;
  r.abs_error_estimate *= scale;
  return r;
}

bool gf_coeff_check(unsigned n_max) {
  const MultiPoly x(Var::x());
  const std::vector<MultiPoly> num{MultiPoly(1)};
  const std::vector<MultiPoly> den{MultiPoly(1), -x, MultiPoly(-1)};
  const TruncatedSeries in_t = series_div(num, den, n_max);
  const OrthoBasis basis = generate_basis(n_max, CoeffSpec::fibonacci());
  for (unsigned n = 0; n <= n_max; ++n) {
    if (!(UniPoly::from_multi(in_t[n]) == basis[n])) return false;
  }
  return true;
}

std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += a[i][j] * a[i][j];
    return std::sqrt(s);
  };
  unsigned sweep = 0;
  while (off_norm() > 1e-12) {
    if (++sweep > 100) throw Error(ErrorKind::kNumeric, "Jacobi iteration did not converge in 100 sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a[i][i];
  return eig;
}

bool jacobi_eigen_positivity(const HankelMatrix& a) {
  if (a.dim() > 12) throw Error(ErrorKind::kUnsupported, "Jacobi check is limited to size 12");
  std::vector<std::vector<double>> m(a.dim(), std::vector<double>(a.dim()));
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const auto v = a.entries[i][j].constant_value();
      if (!v) throw Error(ErrorKind::kUnsupported, "Jacobi check needs rational entries");
      m[i][j] = v->to_double();
    }
  }
  const auto eig = jacobi_eigenvalues(std::move(m));
  for (double e : eig)
    if (!(e > 1e-9)) return false;
  return true;
}

}  // namespace heaporth
