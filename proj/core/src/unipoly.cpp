#include "heaporth/unipoly.hpp"

#include <algorithm>

#include "heaporth/error.hpp"

namespace heaporth {

UniPoly::UniPoly(std::vector<MultiPoly> coeffs) : coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c.contains(Var::x()))
      throw Error(ErrorKind::kDomain, "UniPoly coefficient contains x: " + c.to_string());
  }
  trim();
}

UniPoly::UniPoly(MultiPoly constant) : UniPoly(std::vector<MultiPoly>{std::move(constant)}) {}

UniPoly UniPoly::x_power(unsigned k) {
  std::vector<MultiPoly> c(k + 1);
  c[k] = MultiPoly(1);
  UniPoly r;
  r.coeffs_ = std::move(c);
  return r;
}

UniPoly UniPoly::from_multi(const MultiPoly& p) {
  const auto deg = p.degree_in(Var::x());
  UniPoly r;
  r.coeffs_.resize(p.is_zero() ? 0 : deg + 1);
  for (std::uint32_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] = p.coefficient_of(Var::x(), k);
  r.trim();
  return r;
}

MultiPoly UniPoly::to_multi() const {
  MultiPoly r;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    r += coeffs_[k] * MultiPoly(Monomial::of(Var::x(), static_cast<std::uint32_t>(k)));
  return r;
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  UniPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.resize(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.trim();
  return r;
}

UniPoly UniPoly::scaled(const MultiPoly& k) const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = c * k;
  r.trim();
  return r;
}

UniPoly UniPoly::times_x_power(unsigned k) const {
  if (is_zero()) return {};
  UniPoly r;
  r.coeffs_.assign(k, MultiPoly());
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

UniPoly UniPoly::map_coeffs(const std::function<MultiPoly(const MultiPoly&)>& f) const {
  std::vector<MultiPoly> c;
  c.reserve(coeffs_.size());
  for (const auto& k : coeffs_) c.push_back(f(k));
  return UniPoly(std::move(c));
}

UniPoly reciprocal_poly(const UniPoly& q, unsigned n) {
  if (q.degree() > static_cast<int>(n)) {
    throw Error(ErrorKind::kDegree, "reciprocal of degree " + std::to_string(q.degree()) +
                                        " polynomial at n=" + std::to_string(n));
  }
  std::vector<MultiPoly> c(n + 1);
  for (std::size_t k = 0; k < q.coeffs().size(); ++k) c[n - k] = q.coeffs()[k];
  return UniPoly(std::move(c));
}

UniPoly shift_vars(const UniPoly& p) {
  return p.map_coeffs([](const MultiPoly& c) { return shift_vars(c); });
}

}  // namespace heaporth
