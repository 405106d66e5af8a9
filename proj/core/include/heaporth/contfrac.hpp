#pragma once

#include <string>

#include "heaporth/coeff_spec.hpp"
#include "heaporth/ratfn.hpp"
#include "heaporth/series.hpp"

namespace heaporth {

// Depth-n truncation of the J-fraction
//   1 / (1 - c_0 x - lambda_1 x^2 / (1 - c_1 x - ... lambda_n x^2 / (1 - c_n x)))
// with den(0) = 1.
struct Convergent {
  unsigned n;
  CoeffSpec spec;
  RationalFn value;
};

Convergent convergent(unsigned n, const CoeffSpec& spec);

// J^(n) == S Q_n^* / Q_{n+1}^* by cross-multiplication.
bool convergent_qstar_identity(unsigned n, const CoeffSpec& spec);

// J^(n) - J^(n-1) == lambda_1...lambda_n x^{2n} / (Q_n^* Q_{n+1}^*), n >= 1.
bool convergent_difference(unsigned n, const CoeffSpec& spec);

// Series of the J-fraction through x^order, read off a deep enough convergent.
TruncatedSeries j_series(unsigned order, const CoeffSpec& spec);

// Depth of the convergent j_series uses for a given order.
unsigned convergent_depth_for_order(unsigned order);

// Nested \cfrac display of the depth-n convergent.
std::string cfrac_latex(unsigned depth, const CoeffSpec& spec);

}  // namespace heaporth
