#include "heaporth/contfrac.hpp"

#include "heaporth/error.hpp"
#include "heaporth/format.hpp"
#include "heaporth/ortho_basis.hpp"

namespace heaporth {

namespace {

UniPoly one_minus_cx(const CoeffSpec& spec, unsigned k) {
  return UniPoly(std::vector<MultiPoly>{MultiPoly(1), -spec.c(k)});
}

}  // namespace

Convergent convergent(unsigned n, const CoeffSpec& spec) {
  // R = num / den, built from the innermost level outwards.
  UniPoly num = one_minus_cx(spec, n);
  UniPoly den(1);
  for (unsigned k = n; k-- > 0;) {
    UniPoly next_num = one_minus_cx(spec, k) * num - UniPoly::x_power(2).scaled(spec.lam(k + 1)) * den;
    den = std::move(num);
    num = std::move(next_num);
  }
  return {n, spec, RationalFn(den, num).normalized()};
}

bool convergent_qstar_identity(unsigned n, const CoeffSpec& spec) {
  const OrthoBasis basis = generate_basis(n + 1, spec);
  const OrthoBasis shifted = generate_basis(n, spec.shifted());
  // S applied to Q_n is the Q_n of the shifted spec.
  const UniPoly s_qn_star = reciprocal_poly(shifted[n], n);
  const UniPoly qn1_star = reciprocal_poly(basis[n + 1], n + 1);
  return convergent(n, spec).value.equals(RationalFn(s_qn_star, qn1_star));
}

bool convergent_difference(unsigned n, const CoeffSpec& spec) {
  if (n < 1) throw Error(ErrorKind::kDomain, "convergent_difference needs n >= 1");
  const OrthoBasis basis = generate_basis(n + 1, spec);
  const RationalFn diff = convergent(n, spec).value - convergent(n - 1, spec).value;
  const RationalFn expected(UniPoly::x_power(2 * n).scaled(lambda_product(spec, n)),
                            reciprocal_poly(basis[n], n) * reciprocal_poly(basis[n + 1], n + 1));
  return diff.equals(expected);
}

unsigned convergent_depth_for_order(unsigned order) {
  // J^(m) agrees with J through x^{2m+1}.
  return order <= 1 ? 0 : order / 2;
}

TruncatedSeries j_series(unsigned order, const CoeffSpec& spec) {
  return convergent(convergent_depth_for_order(order), spec).value.series(order);
}

std::string cfrac_latex(unsigned depth, const CoeffSpec& spec) {
  // "1 - a" written as "1 + |a|" when a is a negative rational multiple.
  auto minus_term = [](const MultiPoly& coeff, const std::string& tail) -> std::string {
    if (coeff.is_zero()) return "";
    if (auto v = coeff.constant_value()) {
      const BigRational mag = v->sign() < 0 ? -*v : *v;
      const std::string k = mag == BigRational(1) ? "" : latex_of(MultiPoly(mag)) + " ";
      return (v->sign() < 0 ? " + " : " - ") + k + tail;
    }
    const std::string body = latex_of(coeff);
    return " - " + (coeff.terms().size() > 1 ? "\\left(" + body + "\\right)" : body) + " " + tail;
  };
  auto level = [&](unsigned k) { return "1" + minus_term(spec.c(k), "x"); };
  std::string inner = level(depth);
  for (unsigned k = depth; k-- > 0;) {
    const MultiPoly& lam = spec.lam(k + 1);
    const bool negative = lam.constant_value() && lam.constant_value()->sign() < 0;
    const MultiPoly num = (negative ? -lam : lam) * MultiPoly(Monomial::of(Var::x(), 2));
    inner = level(k) + (negative ? " + " : " - ") + "\\cfrac{" + latex_of(num) + "}{" + inner + "}";
  }
  return "J^{(" + std::to_string(depth) + ")}(x) = \\cfrac{1}{" + inner + "}";
}

}  // namespace heaporth
