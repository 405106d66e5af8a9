#pragma once

#include <random>

#include <optional>

#include "heaporth/error.hpp"
#include "heaporth/multipoly.hpp"

namespace testsupport {

// Small random polynomial in x, c0, c1, l1, l2 with coefficients in [-3, 3].
inline heaporth::MultiPoly random_poly(std::mt19937& rng, int terms = 4, int max_exp = 2) {
  using namespace heaporth;
  const Var vars[] = {Var::x(), Var::c(0), Var::c(1), Var::lam(1), Var::lam(2)};
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> expo(0, max_exp);
  std::uniform_int_distribution<int> pick(0, 2);
  MultiPoly p;
  for (int i = 0; i < terms; ++i) {
    MultiPoly term(coeff(rng));
    for (const Var& v : vars)
      if (pick(rng) == 0) term *= MultiPoly(v).pow(static_cast<unsigned>(expo(rng)));
    p += term;
  }
  return p;
}

// Kind of the heaporth::Error thrown by f, if any.
template <typename F>
std::optional<heaporth::ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const heaporth::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace testsupport
