#pragma once

#include <span>
#include <string>
#include <vector>

#include "heaporth/unipoly.hpp"

namespace heaporth {

// Formal power series known exactly through the coefficient of z^order.
// The series variable is implicit (x by default; gf checks use t with
// coefficients that themselves contain x).
class TruncatedSeries {
 public:
  explicit TruncatedSeries(unsigned order) : coeffs_(order + 1) {}
  TruncatedSeries(unsigned order, std::vector<MultiPoly> coeffs);
  static TruncatedSeries from_poly(const UniPoly& p, unsigned order);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const std::vector<MultiPoly>& coeffs() const { return coeffs_; }
  const MultiPoly& operator[](std::size_t k) const { return coeffs_.at(k); }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  TruncatedSeries times_power(unsigned k) const;
  TruncatedSeries map_coeffs(const std::function<MultiPoly(const MultiPoly&)>& f) const;
  std::string to_string(const std::string& var = "x") const;

 private:
  std::vector<MultiPoly> coeffs_;
};

// num/den expanded at 0 through z^order. den[0] must be a nonzero constant.
TruncatedSeries series_div(std::span<const MultiPoly> num, std::span<const MultiPoly> den,
                           unsigned order);
TruncatedSeries series_div(const UniPoly& num, const UniPoly& den, unsigned order);

TruncatedSeries shift_vars(const TruncatedSeries& s);

}  // namespace heaporth
