#include "heaporth/format.hpp"

#include <sstream>

namespace heaporth {

namespace {

std::string latex_var(Var v) {
  switch (v.kind()) {
    case Var::Kind::kX: return "x";
    case Var::Kind::kT: return "t";
    case Var::Kind::kC: return "c_{" + std::to_string(v.index()) + "}";
    case Var::Kind::kLam: return "\\lambda_{" + std::to_string(v.index()) + "}";
  }
  return "?";
}

std::string latex_rational(const BigRational& q) {
  if (q.is_integer()) return q.to_string();
  return "\\frac{" + q.numerator() + "}{" + q.denominator() + "}";
}

}  // namespace

std::string latex_of(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, k] = *it;
    const bool negative = k.sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const BigRational mag = negative ? -k : k;
    if (m.is_one()) {
      os << latex_rational(mag);
      continue;
    }
    if (mag != BigRational(1)) os << latex_rational(mag) << ' ';
    bool first_factor = true;
    for (const auto& [v, e] : m.factors()) {
      if (!first_factor) os << ' ';
      first_factor = false;
      os << latex_var(v);
      if (e > 1) os << "^{" << e << '}';
    }
  }
  return os.str();
}

std::string latex_of(const UniPoly& p) { return latex_of(p.to_multi()); }

std::string latex_pmatrix(const PolyMatrix& m) {
  std::ostringstream os;
  os << "\\begin{pmatrix}\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (j > 0) os << " & ";
      os << latex_of(m[i][j]);
    }
    os << (i + 1 < m.size() ? " \\\\\n" : "\n");
  }
  os << "\\end{pmatrix}";
  return os.str();
}

std::string latex_recursion(const std::string& name, const std::vector<MultiPoly>& c,
                            const std::vector<MultiPoly>& lambda) {
  std::ostringstream os;
  os << "\\begin{aligned}\n";
  os << name << "_{-1}(x) &= 0, \\quad " << name << "_{0}(x) = 1 \\\\\n";
  for (std::size_t n = 0; n < c.size(); ++n) {
    os << name << "_{" << n + 1 << "}(x) &= (x - (" << latex_of(c[n]) << ")) " << name << "_{" << n << "}(x)";
    if (n >= 1 && n < lambda.size()) os << " - (" << latex_of(lambda[n]) << ") " << name << "_{" << n - 1 << "}(x)";
    os << (n + 1 < c.size() ? " \\\\\n" : "\n");
  }
  os << "\\end{aligned}";
  return os.str();
}

}  // namespace heaporth
