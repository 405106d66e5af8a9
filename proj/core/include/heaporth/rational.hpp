#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace heaporth {

// Exact rational in lowest terms with a positive denominator. Zero is 0/1.
class BigRational {
 public:
  BigRational() = default;
  BigRational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  BigRational(std::int64_t num, std::int64_t den);
  explicit BigRational(mpq_class value);

  // Accepts "p", "-p", "p/q".
  static BigRational parse(std::string_view text);

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  std::string numerator() const { return value_.get_num().get_str(); }
  std::string denominator() const { return value_.get_den().get_str(); }
  // "p" for integers, "p/q" otherwise.
  std::string to_string() const;
  // Always "p/q", the form used in polynomial JSON.
  std::string to_fraction_string() const;
  double to_double() const { return value_.get_d(); }

  const mpq_class& raw() const { return value_; }

  BigRational operator-() const { return BigRational(mpq_class(-value_)); }
  BigRational& operator+=(const BigRational& o);
  BigRational& operator-=(const BigRational& o);
  BigRational& operator*=(const BigRational& o);
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  BigRational pow(unsigned exponent) const;

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const BigRational& q);

// binom(n, k) as an exact integer.
BigRational binomial(unsigned n, unsigned k);
// C_m = binom(2m, m) / (m + 1).
BigRational catalan_number(unsigned m);

}  // namespace heaporth
