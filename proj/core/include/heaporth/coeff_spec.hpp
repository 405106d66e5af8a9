#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "heaporth/multipoly.hpp"

namespace heaporth {

// The recursion parameters c_i (i >= 0) and lambda_i (i >= 1).
class CoeffSpec {
 public:
  enum class Kind { kSymbolic, kCatalan, kFibonacci, kCustom };

  static CoeffSpec symbolic() { return CoeffSpec(Kind::kSymbolic); }
  // c_i = 0, lambda_i = 1.
  static CoeffSpec catalan() { return CoeffSpec(Kind::kCatalan); }
  // c_i = 0, lambda_i = -1.
  static CoeffSpec fibonacci() { return CoeffSpec(Kind::kFibonacci); }
  // c[i] is c_i; lambda[j] is lambda_{j+1}.
  static CoeffSpec custom(std::vector<BigRational> c, std::vector<BigRational> lambda);
  // {"c":["0","1/2",...],"lambda":["1",...]}
  static CoeffSpec from_json(const nlohmann::json& j);
  // "symbolic", "catalan", "fib"/"fibonacci".
  static CoeffSpec from_name(const std::string& name);

  Kind kind() const { return kind_; }
  std::string name() const;
  bool is_symbolic() const { return kind_ == Kind::kSymbolic; }

  MultiPoly c(std::size_t i) const;
  MultiPoly lam(std::size_t i) const;

  // The spec seen through the shift S (c_i -> c_{i+1}, lambda_i -> lambda_{i+1}).
  CoeffSpec shifted() const;

  // Image of a polynomial in the symbolic c_i, lambda_i under this spec.
  MultiPoly specialize(const MultiPoly& symbolic_poly) const;

 private:
  explicit CoeffSpec(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::size_t offset_ = 0;
  std::vector<BigRational> custom_c_;
  std::vector<BigRational> custom_lambda_;
};

// Sends every c_i to zero (the c = 0 substitute with symbolic lambdas).
MultiPoly zero_c(const MultiPoly& p);

}  // namespace heaporth
