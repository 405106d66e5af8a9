#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "heaporth/rational.hpp"

namespace heaporth {

// An indeterminate of the coefficient ring. Total order:
// x < t < c0 < c1 < ... < l1 < l2 < ...
class Var {
 public:
  enum class Kind : std::uint8_t { kX, kT, kC, kLam };

  static Var x() { return Var(Kind::kX, 0); }
  static Var t() { return Var(Kind::kT, 0); }
  static Var c(long index);
  static Var lam(long index);
  // "x", "t", "c<i>", "l<i>".
  static Var parse(std::string_view name);

  Kind kind() const { return kind_; }
  std::uint32_t index() const { return index_; }
  std::string name() const;

  friend auto operator<=>(const Var&, const Var&) = default;
  friend bool operator==(const Var&, const Var&) = default;

 private:
  Var(Kind kind, std::uint32_t index) : kind_(kind), index_(index) {}

  Kind kind_;
  std::uint32_t index_;
};

// Power product with a sparse, Var-sorted exponent list. No zero exponents.
class Monomial {
 public:
  using Factor = std::pair<Var, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);
  static Monomial of(Var v, std::uint32_t exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t degree() const;
  std::uint32_t exponent(Var v) const;

  Monomial operator*(const Monomial& o) const;
  // Quotient when o divides *this.
  std::optional<Monomial> divide(const Monomial& o) const;
  Monomial without(Var v) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

// Graded lexicographic order over the Var order: higher total degree is larger;
// ties broken by the first Var (in Var order) whose exponents differ.
int compare_monomials(const Monomial& a, const Monomial& b);

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare_monomials(a, b) < 0;
  }
};

// Sparse polynomial over the rationals in the indeterminates x, t, c_i, l_i.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, BigRational, MonomialLess>;

  MultiPoly() = default;
  MultiPoly(BigRational constant);  // NOLINT(google-explicit-constructor)
  MultiPoly(std::int64_t constant) : MultiPoly(BigRational(constant)) {}  // NOLINT
  explicit MultiPoly(Var v) : MultiPoly(Monomial::of(v)) {}
  explicit MultiPoly(Monomial m, BigRational coeff = BigRational(1));

  // Ascending term order; use rbegin() for the leading term.
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Value of a constant polynomial; nullopt otherwise.
  std::optional<BigRational> constant_value() const;
  BigRational constant_term() const;
  std::uint32_t total_degree() const;
  std::uint32_t degree_in(Var v) const;
  bool contains(Var v) const { return degree_in(v) > 0; }
  // Coefficient of v^e viewed as a polynomial in v; the result is free of v.
  MultiPoly coefficient_of(Var v, std::uint32_t e) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  MultiPoly scaled(const BigRational& k) const;
  MultiPoly pow(unsigned exponent) const;

  // Replace every occurrence of v by value.
  MultiPoly substitute(Var v, const MultiPoly& value) const;
  // Replace each Var by image(var) when it returns a value; others stay.
  MultiPoly substitute(const std::function<std::optional<MultiPoly>(Var)>& image) const;

  // Exact quotient *this / d; throws kDomain when d does not divide.
  MultiPoly exact_divide(const MultiPoly& d) const;

  // Terms in descending order with explicit signs, e.g. "x^2 - 2*x*c0 + 1".
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const BigRational& coeff);

  TermMap terms_;
};

// The shift S: c_i -> c_{i+1}, l_i -> l_{i+1}; x and t untouched.
MultiPoly shift_vars(const MultiPoly& p);

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

// Parse the plain text form emitted by to_string (e.g. "x^2 - 3/2*c0*l1 + 1").
MultiPoly parse_multipoly(std::string_view text);

}  // namespace heaporth
