#include "heaporth/determinant.hpp"

#include <utility>

#include "heaporth/error.hpp"

namespace heaporth {

MultiPoly bareiss_determinant(PolyMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw Error(ErrorKind::kDomain, "determinant of a non-square matrix");
  }
  if (n == 0) return MultiPoly(1);
  bool negate = false;
  MultiPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k].is_zero()) ++pivot;
    if (pivot == n) return {};
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = v.exact_divide(prev);
      }
      m[i][k] = MultiPoly();
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

UniPoly bordered_determinant(const PolyMatrix& top) {
  const std::size_t n = top.size();
  for (const auto& row : top) {
    if (row.size() != n + 1) throw Error(ErrorKind::kDomain, "bordered determinant needs n x (n+1) rows");
  }
  std::vector<MultiPoly> coeffs(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    PolyMatrix minor(n);
    for (std::size_t i = 0; i < n; ++i) {
      minor[i].reserve(n);
      for (std::size_t col = 0; col <= n; ++col) {
        if (col != j) minor[i].push_back(top[i][col]);
      }
    }
    MultiPoly d = bareiss_determinant(std::move(minor));
    coeffs[j] = ((n + j) % 2 == 0) ? d : -d;
  }
  return UniPoly(std::move(coeffs));
}

namespace {

MultiPoly laplace(const PolyMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  if (row == m.size()) return MultiPoly(1);
  MultiPoly acc;
  for (std::size_t idx = 0; idx < cols.size(); ++idx) {
    const std::size_t c = cols[idx];
    if (m[row][c].is_zero()) continue;
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(idx));
    MultiPoly term = m[row][c] * laplace(m, cols, row + 1);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(idx), c);
    if (idx % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

}  // namespace

MultiPoly laplace_determinant(const PolyMatrix& m) {
  std::vector<std::size_t> cols(m.size());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return laplace(m, cols, 0);
}

}  // namespace heaporth
