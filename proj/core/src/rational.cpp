#include "heaporth/rational.hpp"

#include "heaporth/error.hpp"

namespace heaporth {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIndex: return "index error";
    case ErrorKind::kDegree: return "degree error";
    case ErrorKind::kNonExpandable: return "non-expandable";
    case ErrorKind::kRange: return "range error";
    case ErrorKind::kDegenerateSpec: return "degenerate spec";
    case ErrorKind::kSingularHankel: return "singular Hankel";
    case ErrorKind::kUnsupported: return "unsupported";
    case ErrorKind::kDomain: return "domain error";
    case ErrorKind::kNotInImage: return "not in image";
    case ErrorKind::kBijectionViolation: return "bijection violation";
    case ErrorKind::kAccuracy: return "accuracy error";
    case ErrorKind::kNumeric: return "numeric error";
    case ErrorKind::kParse: return "parse error";
    case ErrorKind::kEnumerationLimit: return "enumeration limit";
  }
  return "error";
}

BigRational::BigRational(std::int64_t value) : value_(static_cast<long>(value)) {}

BigRational::BigRational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::kDomain, "zero denominator");
  value_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
  value_.canonicalize();
}

BigRational::BigRational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorKind::kParse, "empty rational");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return BigRational(mpq_class(mpz_class(s, 10)));
    mpz_class num(s.substr(0, slash), 10);
    mpz_class den(s.substr(slash + 1), 10);
    if (den == 0) throw Error(ErrorKind::kDomain, "zero denominator in '" + s + "'");
    return BigRational(mpq_class(num, den));
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::kParse, "bad rational '" + s + "'");
  }
}

std::string BigRational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_str();
}

std::string BigRational::to_fraction_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigRational& BigRational::operator+=(const BigRational& o) {
  value_ += o.value_;
  return *this;
}
BigRational& BigRational::operator-=(const BigRational& o) {
  value_ -= o.value_;
  return *this;
}
BigRational& BigRational::operator*=(const BigRational& o) {
  value_ *= o.value_;
  return *this;
}
BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw Error(ErrorKind::kDomain, "division by zero");
  value_ /= o.value_;
  return *this;
}

BigRational BigRational::pow(unsigned exponent) const {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  return BigRational(mpq_class(num, den));
}

std::ostream& operator<<(std::ostream& os, const BigRational& q) {
  return os << q.to_string();
}

BigRational binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return BigRational(mpq_class(r));
}

BigRational catalan_number(unsigned m) {
  return binomial(2 * m, m) / BigRational(m + 1);
}

}  // namespace heaporth
