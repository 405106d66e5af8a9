#include "heaporth/series.hpp"

#include <algorithm>
#include <sstream>

#include "heaporth/error.hpp"

namespace heaporth {

TruncatedSeries::TruncatedSeries(unsigned order, std::vector<MultiPoly> coeffs)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::from_poly(const UniPoly& p, unsigned order) {
  TruncatedSeries s(order);
  for (unsigned k = 0; k <= order; ++k) s.coeffs_[k] = p.coeff(k);
  return s;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order(), b.order()));
  for (unsigned k = 0; k <= r.order(); ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order(), b.order()));
  for (unsigned k = 0; k <= r.order(); ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order(), b.order()));
  for (unsigned i = 0; i <= r.order(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= r.order(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

TruncatedSeries TruncatedSeries::times_power(unsigned k) const {
  TruncatedSeries r(order());
  for (unsigned i = 0; i + k <= order(); ++i) r.coeffs_[i + k] = coeffs_[i];
  return r;
}

TruncatedSeries TruncatedSeries::map_coeffs(const std::function<MultiPoly(const MultiPoly&)>& f) const {
  TruncatedSeries r(order());
  for (unsigned i = 0; i <= order(); ++i) r.coeffs_[i] = f(coeffs_[i]);
  return r;
}

std::string TruncatedSeries::to_string(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (unsigned k = 0; k <= order(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << coeffs_[k] << ')';
    if (k > 0) os << '*' << var << (k > 1 ? "^" + std::to_string(k) : "");
  }
  if (first) os << '0';
  os << " + O(" << var << '^' << order() + 1 << ')';
  return os.str();
}

TruncatedSeries series_div(std::span<const MultiPoly> num, std::span<const MultiPoly> den,
                           unsigned order) {
  if (den.empty() || den[0].is_zero())
    throw Error(ErrorKind::kNonExpandable, "denominator vanishes at 0");
  const auto d0 = den[0].constant_value();
  if (!d0) {
    throw Error(ErrorKind::kNonExpandable,
                "denominator constant term is not a rational unit: " + den[0].to_string());
  }
  const BigRational inv = BigRational(1) / *d0;
  std::vector<MultiPoly> s(order + 1);
  for (unsigned k = 0; k <= order; ++k) {
    MultiPoly acc = k < num.size() ? num[k] : MultiPoly();
    for (unsigned j = 1; j <= k && j < den.size(); ++j) {
      if (!den[j].is_zero()) acc -= den[j] * s[k - j];
    }
    s[k] = acc.scaled(inv);
  }
  return TruncatedSeries(order, std::move(s));
}

TruncatedSeries series_div(const UniPoly& num, const UniPoly& den, unsigned order) {
  return series_div(std::span<const MultiPoly>(num.coeffs()), std::span<const MultiPoly>(den.coeffs()),
                    order);
}

TruncatedSeries shift_vars(const TruncatedSeries& s) {
  return s.map_coeffs([](const MultiPoly& c) { return shift_vars(c); });
}

}  // namespace heaporth
