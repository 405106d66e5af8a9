#pragma once

#include <span>
#include <string>
#include <vector>

#include "heaporth/multipoly.hpp"

namespace heaporth {

// Polynomial in x whose coefficients are MultiPoly values free of x.
// coeffs()[k] is the coefficient of x^k; trailing zeros are trimmed.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<MultiPoly> coeffs);
  UniPoly(MultiPoly constant);  // NOLINT(google-explicit-constructor)
  UniPoly(std::int64_t constant) : UniPoly(MultiPoly(constant)) {}  // NOLINT

  static UniPoly x_power(unsigned k);
  // Splits p by powers of x.
  static UniPoly from_multi(const MultiPoly& p);

  const std::vector<MultiPoly>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  MultiPoly coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : MultiPoly(); }
  MultiPoly leading() const { return coeffs_.empty() ? MultiPoly() : coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == MultiPoly(1); }

  MultiPoly to_multi() const;
  std::string to_string() const { return to_multi().to_string(); }

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  UniPoly scaled(const MultiPoly& k) const;
  UniPoly times_x_power(unsigned k) const;
  UniPoly map_coeffs(const std::function<MultiPoly(const MultiPoly&)>& f) const;

 private:
  void trim();

  std::vector<MultiPoly> coeffs_;
};

// x^n * q(1/x). Throws kDegree when deg q > n.
UniPoly reciprocal_poly(const UniPoly& q, unsigned n);

UniPoly shift_vars(const UniPoly& p);

}  // namespace heaporth
