#pragma once

#include <string>

#include "heaporth/determinant.hpp"
#include "heaporth/multipoly.hpp"
#include "heaporth/unipoly.hpp"

namespace heaporth {

// Variables render as x, t, c_{i}, \lambda_{i}; rationals as \frac{p}{q}.
std::string latex_of(const MultiPoly& p);
std::string latex_of(const UniPoly& p);
std::string latex_pmatrix(const PolyMatrix& m);
// "Q_{n+1}(x) &= (x - c_n) Q_n(x) - \lambda_n Q_{n-1}(x)" style aligned block
// for n = 0..n_max-1 with the given parameter values.
std::string latex_recursion(const std::string& name, const std::vector<MultiPoly>& c,
                            const std::vector<MultiPoly>& lambda);

}  // namespace heaporth
