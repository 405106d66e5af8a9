#pragma once

#include <string>

#include "heaporth/series.hpp"
#include "heaporth/unipoly.hpp"

namespace heaporth {

// num/den in x with den(0) != 0, so the value has a power series at 0.
// No GCD cancellation is attempted; equality is by cross-multiplication.
class RationalFn {
 public:
  RationalFn(UniPoly num, UniPoly den);
  RationalFn(UniPoly poly) : RationalFn(std::move(poly), UniPoly(1)) {}  // NOLINT

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }

  // Divides through by den(0) when it is a rational constant.
  RationalFn normalized() const;
  TruncatedSeries series(unsigned order) const { return series_div(num_, den_, order); }

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  // Requires b.num()(0) != 0.
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b);

  // a.num * b.den == b.num * a.den.
  bool equals(const RationalFn& o) const;

  std::string to_string() const;

 private:
  UniPoly num_;
  UniPoly den_;
};

}  // namespace heaporth
