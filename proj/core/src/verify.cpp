#include "heaporth/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "heaporth/contfrac.hpp"
#include "heaporth/error.hpp"
#include "heaporth/heap.hpp"
#include "heaporth/motzkin.hpp"
#include "heaporth/numeric.hpp"
#include "heaporth/ortho_basis.hpp"

namespace heaporth {

namespace {

class Checker {
 public:
  explicit Checker(std::string id) { report_.id = std::move(id); }

  void check(bool ok, const std::string& what) {
    report_.lines.push_back((ok ? "ok   " : "FAIL ") + what);
    if (!ok && report_.ok) {
      report_.ok = false;
      report_.first_failure = what;
    }
  }

  // Runs body; a library error counts as a failed check.
  template <typename F>
  void guarded(const std::string& what, F&& body) {
    try {
      check(body(), what);
    } catch (const Error& e) {
      check(false, what + " (" + e.what() + ")");
    }
  }

  VerifyReport done() { return std::move(report_); }

 private:
  VerifyReport report_;
};

std::string n_str(const char* label, std::size_t n) { return std::string(label) + "=" + std::to_string(n); }

const std::vector<CoeffSpec>& specialized() {
  static const std::vector<CoeffSpec> specs{CoeffSpec::catalan(), CoeffSpec::fibonacci()};
  return specs;
}

MultiPoly signed_catalan_moment(std::size_t n, int sign_base) {
  if (n % 2 != 0) return {};
  const unsigned m = static_cast<unsigned>(n / 2);
  BigRational v = catalan_number(m);
  if (sign_base < 0 && m % 2 == 1) v = -v;
  return MultiPoly(v);
}

// (-1)^{ceil(k/2)}
int ceil_half_sign(long k) {
  const long e = (k + 1) / 2;
  return e % 2 == 0 ? 1 : -1;
}

VerifyReport verify_t21(unsigned nmax) {
  Checker ck("T2.1");
  std::set<std::string> images;
  std::size_t count = 0;
  for (unsigned n = 1; n <= nmax; ++n) {
    for (const MotzkinPath& p : enumerate_paths(0, 0, n)) {
      ++count;
      const std::string tag = p.to_string();
      const Heap h = settle(motzkin_to_heap(path_word(p)));
      const auto summit = is_pyramid(h);
      const bool summit_ok = summit && (*summit == Piece::monomer(0) || *summit == Piece::dimer(1));
      const bool projection_ok = h.projection().second <= p.max_height();
      const bool dyck_ok = !p.is_dyck() || (h.monomers() == 0 && summit && *summit == Piece::dimer(1));
      const bool steps_ok = 2 * h.dimers() + h.monomers() == p.length();
      const bool fresh = images.insert(canonical_word(h).to_string()).second;
      bool inverse_ok = false;
      try {
        inverse_ok = heap_to_motzkin(h) == p;
      } catch (const Error&) {
        inverse_ok = false;
      }
      if (!(summit_ok && projection_ok && dyck_ok && steps_ok && fresh && inverse_ok)) {
        ck.check(false, "path " + tag + " (summit " + std::to_string(summit_ok) + ", projection " +
                            std::to_string(projection_ok) + ", dyck " + std::to_string(dyck_ok) + ", 2d+m " +
                            std::to_string(steps_ok) + ", injective " + std::to_string(fresh) + ", inverse " +
                            std::to_string(inverse_ok) + ")");
      }
    }
  }
  ck.check(true, "pyramid/summit, projection, Dyck->dimers, 2d+m, injectivity and inverse over " +
                     std::to_string(count) + " closed paths of length 1.." + std::to_string(nmax));
  return ck.done();
}

VerifyReport verify_t31(unsigned nmax) {
  Checker ck("T3.1");
  const CoeffSpec sym = CoeffSpec::symbolic();
  const MomentSeq mu = stieltjes_moments(2 * nmax, sym);
  const OrthoBasis basis = generate_basis(nmax, sym);
  for (unsigned n = 0; n <= nmax; ++n) {
    for (unsigned k = 0; k <= nmax; ++k) {
      ck.guarded("h~=h=<x^n,Q_k> " + n_str("n", n) + " " + n_str("k", k), [&] {
        const MultiPoly paths = h_tilde(n, k, sym);
        return paths == mu.h_at(n, k) && paths == scalar_product(UniPoly::x_power(n), basis[k], mu);
      });
    }
  }
  const unsigned m = std::min(nmax, 6U);
  const TruncatedSeries j = j_series(2 * m, sym);
  for (unsigned k = 0; k <= m; ++k) {
    const TruncatedSeries prod = j * TruncatedSeries::from_poly(reciprocal_poly(basis[k], k), 2 * m);
    for (unsigned n = 0; n <= m; ++n) {
      ck.guarded("h_{n,k} = [x^{n+k}] J Q_k^* " + n_str("n", n) + " " + n_str("k", k),
                 [&] { return prod[n + k] == mu.h_at(n, k); });
    }
  }
  return ck.done();
}

VerifyReport verify_t32(unsigned nmax) {
  Checker ck("T3.2");
  auto run = [&](const CoeffSpec& spec, unsigned top) {
    const MomentSeq mu = stieltjes_moments(2 * top + 1, spec);
    MultiPoly d_prev(1);
    MultiPoly chi_prev;
    for (unsigned n = 0; n <= top; ++n) {
      const HankelDets hd = hankel_dets(n, mu);
      ck.check(hd.d == d_prev * lambda_product(spec, n), spec.name() + " d_n = d_{n-1} lambda_1..lambda_n " + n_str("n", n));
      // c_n = chi_n/d_n - chi_{n-1}/d_{n-1}, cross-multiplied.
      ck.check(hd.chi * d_prev - chi_prev * hd.d == spec.c(n) * hd.d * d_prev,
               spec.name() + " c_n = chi_n/d_n - chi_{n-1}/d_{n-1} " + n_str("n", n));
      d_prev = hd.d;
      chi_prev = hd.chi;
    }
  };
  run(CoeffSpec::symbolic(), std::min(nmax, 4U));
  for (const auto& spec : specialized()) run(spec, nmax);
  const CoeffSpec sym = CoeffSpec::symbolic();
  const MomentSeq mu = stieltjes_moments(std::min(nmax, 4U) + 1, sym);
  for (unsigned n = 0; n <= std::min(nmax, 4U); ++n) {
    MultiPoly csum;
    for (unsigned i = 0; i <= n; ++i) csum += sym.c(i);
    ck.check(mu.h_at(n + 1, n) == csum * lambda_product(sym, n), "h_{n+1,n} = (c_0+..+c_n) lambda_1..lambda_n " + n_str("n", n));
  }
  return ck.done();
}

VerifyReport verify_t33(unsigned nmax) {
  Checker ck("T3.3");
  auto run = [&](const CoeffSpec& spec, unsigned top) {
    const OrthoBasis basis = generate_basis(top, spec);
    const MomentSeq mu = stieltjes_moments(top, spec);
    for (unsigned n = 0; n <= top; ++n)
      ck.guarded(spec.name() + " ||h/lambda|| ||a|| = I " + n_str("n", n), [&] { return basis_inverse_check(n, basis, mu); });
  };
  run(CoeffSpec::symbolic(), std::min(nmax, 4U));
  for (const auto& spec : specialized()) run(spec, nmax);
  return ck.done();
}

VerifyReport verify_t34(unsigned nmax) {
  Checker ck("T3.4");
  for (unsigned n = 0; n <= std::min(nmax, 3U); ++n)
    ck.check(convergent_qstar_identity(n, CoeffSpec::symbolic()), "symbolic J^(n) = S Q_n^*/Q_{n+1}^* " + n_str("n", n));
  for (const auto& spec : specialized())
    for (unsigned n = 0; n <= nmax; ++n)
      ck.check(convergent_qstar_identity(n, spec), spec.name() + " J^(n) = S Q_n^*/Q_{n+1}^* " + n_str("n", n));
  return ck.done();
}

VerifyReport verify_t35(unsigned nmax) {
  Checker ck("T3.5");
  for (unsigned n = 1; n <= std::min(nmax, 3U); ++n)
    ck.check(convergent_difference(n, CoeffSpec::symbolic()), "symbolic J^(n) - J^(n-1) " + n_str("n", n));
  for (const auto& spec : specialized())
    for (unsigned n = 1; n <= nmax; ++n)
      ck.check(convergent_difference(n, spec), spec.name() + " J^(n) - J^(n-1) " + n_str("n", n));
  return ck.done();
}

VerifyReport verify_p51(unsigned nmax) {
  Checker ck("P5.1");
  const CoeffSpec fib = CoeffSpec::fibonacci();
  const OrthoBasis basis = generate_basis(nmax, fib);
  const MomentSeq mu = stieltjes_moments(2 * nmax, fib);
  for (unsigned k = 0; k <= nmax; ++k)
    ck.check(scalar_product(basis[k], basis[k], mu) == MultiPoly(k % 2 == 0 ? 1 : -1), "<P_k,P_k> = (-1)^k " + n_str("k", k));
  for (unsigned n = 0; n <= nmax; ++n) {
    ck.guarded("x^n = sum (-1)^k <x^n,P_k> P_k " + n_str("n", n), [&] {
      const UniPoly xn = UniPoly::x_power(n);
      const auto coeffs = expand_in_basis(xn, basis, mu);
      for (unsigned k = 0; k <= n; ++k) {
        const MultiPoly direct = scalar_product(xn, basis[k], mu);
        if (!(coeffs[k] == (k % 2 == 0 ? direct : -direct))) return false;
      }
      return true;
    });
    ck.check(hankel_positivity(HankelMatrix::plain(n, mu)).nonsingular, "det A_n != 0 " + n_str("n", n));
  }
  return ck.done();
}

VerifyReport verify_p52(unsigned nmax) {
  Checker ck("P5.2");
  const MomentSeq cat = stieltjes_moments(2 * nmax, CoeffSpec::catalan());
  const MomentSeq fib = stieltjes_moments(2 * nmax, CoeffSpec::fibonacci());
  for (unsigned n = 0; n <= nmax; ++n) {
    const HankelMatrix a = HankelMatrix::plain(n, cat);
    const HankelVerdict v = hankel_positivity(a);
    const bool all_one = std::all_of(v.leading_minors.begin(), v.leading_minors.end(),
                                     [](const BigRational& q) { return q == BigRational(1); });
    ck.check(all_one && v.positive_definite, "catalan A_n leading minors all 1 " + n_str("n", n));
    ck.check(jacobi_eigen_positivity(a) == v.positive_definite, "catalan A_n Jacobi agrees with minors " + n_str("n", n));
    const HankelMatrix f = HankelMatrix::plain(n, fib);
    const HankelVerdict fv = hankel_positivity(f);
    ck.check(fv.nonsingular && jacobi_eigen_positivity(f) == fv.positive_definite,
             "fibonacci A_n non-degenerate, Jacobi agrees with minors " + n_str("n", n));
  }
  return ck.done();
}

VerifyReport verify_i4(unsigned nmax) {
  Checker ck("I4");
  const CoeffSpec fib = CoeffSpec::fibonacci();
  const MomentSeq mu = stieltjes_moments(nmax, fib);
  for (unsigned n = 0; n <= nmax; ++n) {
    const MultiPoly expected = signed_catalan_moment(n, -1);
    ck.check(mu[n] == expected, "nu_n = (-1)^m C_m (Stieltjes) " + n_str("n", n));
    if (n <= kMaxEnumerationLength) ck.check(moments_by_paths(n, fib) == expected, "nu_n = (-1)^m C_m (paths) " + n_str("n", n));
  }
  for (unsigned m = 0; m <= std::min(nmax / 2, 6U); ++m) {
    ck.guarded("nu_2m = (-1)^m 4^{m+1}/(2pi) int_0^1 x^m sqrt((1-x)/x) dx " + n_str("m", m), [&] {
      const double signed_value = (m % 2 == 0 ? 1.0 : -1.0) * catalan_integral(m).value;
      return std::abs(signed_value - mu[2 * m].constant_term().to_double()) <= 1e-8;
    });
  }
  return ck.done();
}

VerifyReport verify_i5(unsigned nmax) {
  Checker ck("I5");
  const CoeffSpec fib = CoeffSpec::fibonacci();
  const MomentSeq mu = stieltjes_moments(2 * nmax + 1, fib);
  const OrthoBasis basis = generate_basis(nmax, fib);
  for (unsigned n = 0; n <= nmax; ++n) {
    ck.check(hankel_dets(n, mu).d == MultiPoly(ceil_half_sign(n)), "d_n = (-1)^ceil(n/2) " + n_str("n", n));
    if (n == 0) continue;
    PolyMatrix top(n, std::vector<MultiPoly>(n + 1));
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j <= n; ++j) top[i][j] = mu[i + j];
    const UniPoly by_sign = bordered_determinant(top).scaled(MultiPoly(ceil_half_sign(static_cast<long>(n) - 1)));
    ck.check(by_sign == basis[n] && qn_via_determinant(n, mu) == basis[n],
             "P_n = (-1)^ceil((n-1)/2) det(bordered nu) " + n_str("n", n));
  }
  return ck.done();
}

VerifyReport verify_i6(unsigned nmax) {
  Checker ck("I6");
  const TruncatedSeries fib = j_series(nmax, CoeffSpec::fibonacci());
  const TruncatedSeries cat = j_series(nmax, CoeffSpec::catalan());
  for (unsigned n = 0; n <= nmax; ++n) {
    ck.check(fib[n] == signed_catalan_moment(n, -1), "J(x,0,-1) coefficient of x^n " + n_str("n", n));
    ck.check(cat[n] == signed_catalan_moment(n, 1), "J(x,0,1) coefficient of x^n " + n_str("n", n));
    const MultiPoly transferred = (n % 4 == 2) ? -cat[n] : cat[n];
    ck.check(fib[n] == transferred, "fibonacci series = catalan series at x^2 -> -x^2 " + n_str("n", n));
  }
  return ck.done();
}

VerifyReport verify_e517(unsigned nmax) {
  Checker ck("E5.17");
  const MomentSeq mu = stieltjes_moments(2 * nmax + 1, CoeffSpec::fibonacci());
  const MomentSeq cat = stieltjes_moments(2 * nmax + 1, CoeffSpec::catalan());
  for (unsigned n = 0; n <= nmax; ++n) {
    ck.check(hankel_dets(n, mu).chi.is_zero(), "fibonacci chi_n = 0 " + n_str("n", n));
    ck.check(hankel_dets(n, cat).chi.is_zero(), "catalan chi_n = 0 " + n_str("n", n));
  }
  return ck.done();
}

VerifyReport verify_e520(unsigned /*nmax*/) {
  Checker ck("E5.20");
  const CoeffSpec fib = CoeffSpec::fibonacci();
  const OrthoBasis basis = generate_basis(8, fib);
  const MomentSeq mu = stieltjes_moments(16, fib);
  auto as_list = [](const std::vector<MultiPoly>& c) {
    std::vector<BigRational> out;
    for (const auto& p : c) out.push_back(p.constant_term());
    return out;
  };
  const std::vector<BigRational> x7{0, -14, 0, 14, 0, -6, 0, 1};
  const std::vector<BigRational> x8{14, 0, -28, 0, 20, 0, -7, 0, 1};
  ck.check(as_list(expand_in_basis(UniPoly::x_power(7), basis, mu)) == x7, "x^7 = -14 P_1 + 14 P_3 - 6 P_5 + P_7");
  ck.check(as_list(expand_in_basis(UniPoly::x_power(8), basis, mu)) == x8, "x^8 = 14 P_0 - 28 P_2 + 20 P_4 - 7 P_6 + P_8");
  return ck.done();
}

VerifyReport verify_i3(unsigned nmax) {
  Checker ck("I3");
  ck.check(gf_coeff_check(nmax), "[t^n] 1/(1 - x t - t^2) = P_n for n <= " + std::to_string(nmax));
  return ck.done();
}

VerifyReport verify_e523(unsigned nmax) {
  Checker ck("E5.23");
  const double xs[] = {-2.0, -1.0, -0.5, 0.5, 1.0, 3.0};
  for (unsigned n = 0; n <= nmax; ++n) {
    double worst = 0.0;
    for (double x : xs) {
      const double exact = fibonacci_exact_eval(n, x);
      const double rel = std::abs(binet_eval(n, x) - exact) / std::max(1.0, std::abs(exact));
      worst = std::max(worst, rel);
    }
    std::ostringstream os;
    os << "Binet vs exact P_n, worst relative error " << worst << " <= 1e-9 " << n_str("n", n);
    ck.check(worst <= 1e-9, os.str());
  }
  return ck.done();
}

VerifyReport verify_e527(unsigned nmax) {
  Checker ck("E5.27");
  for (unsigned m = 0; m <= nmax; ++m) {
    ck.guarded("4^{m+1}/(2pi) int_0^1 x^m sqrt((1-x)/x) dx = C_m within 1e-8 " + n_str("m", m),
               [&] { return std::abs(catalan_integral(m).value - catalan_number(m).to_double()) <= 1e-8; });
  }
  return ck.done();
}

}  // namespace

const std::vector<Verifier>& verifiers() {
  static const std::vector<Verifier> all{
      {"T2.1", "closed Motzkin paths <-> pyramids with summit m0 or d1", 8, verify_t21},
      {"T3.1", "path sums = Stieltjes triangle = <x^n,Q_k>; coefficient extraction from J Q_k^*", 8, verify_t31},
      {"T3.2", "Hankel ratios d_n/d_{n-1} and chi_n/d_n; h_{n+1,n}", 6, verify_t32},
      {"T3.3", "scaled h matrix inverts the coefficient matrix", 8, verify_t33},
      {"T3.4", "convergents equal S Q_n^*/Q_{n+1}^*", 5, verify_t34},
      {"T3.5", "difference of consecutive convergents", 5, verify_t35},
      {"P5.1", "expansion of x^n in Fibonacci polynomials; non-degeneracy", 10, verify_p51},
      {"P5.2", "positivity of Catalan Hankel matrices (minors and Jacobi)", 6, verify_p52},
      {"I3", "generating function of the Fibonacci polynomials", 10, verify_i3},
      {"I4", "signed Catalan moments of the Fibonacci basis", 16, verify_i4},
      {"I5", "Fibonacci Hankel determinants and determinant formula", 6, verify_i5},
      {"I6", "J-fraction series for lambda = +-1", 16, verify_i6},
      {"E5.17", "shifted Hankel determinant vanishes", 5, verify_e517},
      {"E5.20", "printed expansions of x^7 and x^8", 8, verify_e520},
      {"E5.23", "Binet form against exact evaluation", 20, verify_e523},
      {"E5.27", "integral representation of the Catalan numbers", 6, verify_e527},
  };
  return all;
}

const Verifier& find_verifier(const std::string& id) {
  for (const auto& v : verifiers())
    if (v.id == id) return v;
  throw Error(ErrorKind::kParse, "unknown identity '" + id + "'");
}

VerifyReport run_verifier(const std::string& id, std::optional<unsigned> nmax) {
  const Verifier& v = find_verifier(id);
  try {
    return v.run(nmax.value_or(v.default_nmax));
  } catch (const Error& e) {
    VerifyReport r;
    r.id = id;
    r.ok = false;
    r.first_failure = e.what();
    r.lines.push_back(std::string("FAIL ") + e.what());
    return r;
  }
}

}  // namespace heaporth
