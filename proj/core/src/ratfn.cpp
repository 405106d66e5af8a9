#include "heaporth/ratfn.hpp"

#include "heaporth/error.hpp"

namespace heaporth {

RationalFn::RationalFn(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::kDomain, "rational function with zero denominator");
  if (den_.coeff(0).is_zero())
    throw Error(ErrorKind::kNonExpandable, "denominator vanishes at 0: " + den_.to_string());
}

RationalFn RationalFn::normalized() const {
  const auto d0 = den_.coeff(0).constant_value();
  if (!d0 || *d0 == BigRational(1)) return *this;
  const MultiPoly inv(BigRational(1) / *d0);
  return RationalFn(num_.scaled(inv), den_.scaled(inv));
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
}

bool RationalFn::equals(const RationalFn& o) const { return num_ * o.den_ == o.num_ * den_; }

std::string RationalFn::to_string() const {
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace heaporth
