#include "heaporth/ortho_basis.hpp"

#include "heaporth/error.hpp"

namespace heaporth {

OrthoBasis generate_basis(std::size_t n_max, const CoeffSpec& spec) {
  OrthoBasis basis{spec, {}};
  basis.polys.reserve(n_max + 1);
  basis.polys.emplace_back(1);
  const UniPoly x = UniPoly::x_power(1);
  for (std::size_t n = 0; n < n_max; ++n) {
    UniPoly next = (x - UniPoly(spec.c(n))) * basis.polys[n];
    if (n >= 1) next -= basis.polys[n - 1].scaled(spec.lam(n));
    basis.polys.push_back(std::move(next));
  }
  return basis;
}

MultiPoly MomentSeq::h_at(std::size_t n, std::size_t k) const {
  if (n >= h.size()) throw Error(ErrorKind::kRange, "h table has no row " + std::to_string(n));
  return k <= n ? h[n][k] : MultiPoly();
}

MomentSeq stieltjes_moments(std::size_t n_max, const CoeffSpec& spec) {
  MomentSeq seq{spec, {}, {}};
  seq.h.reserve(n_max + 1);
  seq.h.push_back({MultiPoly(1)});
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto& prev = seq.h[n - 1];
    std::vector<MultiPoly> row(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      MultiPoly v;
      if (k >= 1) v += spec.lam(k) * prev[k - 1];
      if (k <= n - 1 && !prev[k].is_zero()) v += spec.c(k) * prev[k];
      if (k + 1 <= n - 1) v += prev[k + 1];
      row[k] = std::move(v);
    }
    seq.h.push_back(std::move(row));
  }
  seq.mu.reserve(n_max + 1);
  for (const auto& row : seq.h) seq.mu.push_back(row[0]);
  return seq;
}

MomentSeq moments_from_values(std::vector<MultiPoly> mu, const CoeffSpec& spec) {
  return MomentSeq{spec, std::move(mu), {}};
}

MultiPoly scalar_product(const UniPoly& a, const UniPoly& b, const MomentSeq& mu) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto need = static_cast<std::size_t>(a.degree() + b.degree());
  if (need >= mu.size()) {
    throw Error(ErrorKind::kRange, "scalar product needs mu_" + std::to_string(need) + " but only " +
                                       std::to_string(mu.size()) + " moments are available");
  }
  MultiPoly acc;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      if (b.coeffs()[j].is_zero() || mu[i + j].is_zero()) continue;
      acc += a.coeffs()[i] * b.coeffs()[j] * mu[i + j];
    }
  }
  return acc;
}

namespace {

MultiPoly checked_quotient(const MultiPoly& num, const MultiPoly& den, const std::string& what) {
  if (den.is_zero()) throw Error(ErrorKind::kDegenerateSpec, "vanishing " + what);
  return num.exact_divide(den);
}

}  // namespace

RecursionCoeffs recursion_coeffs(const OrthoBasis& basis, const MomentSeq& mu) {
  RecursionCoeffs out;
  const UniPoly x = UniPoly::x_power(1);
  for (std::size_t n = 0; n < basis.size(); ++n) {
    const UniPoly xq = x * basis[n];
    out.c.push_back(checked_quotient(scalar_product(basis[n], xq, mu),
                                     scalar_product(basis[n], basis[n], mu),
                                     "<Q_" + std::to_string(n) + ",Q_" + std::to_string(n) + ">"));
    if (n == 0) {
      out.lambda.emplace_back();
    } else {
      out.lambda.push_back(checked_quotient(
          scalar_product(basis[n - 1], xq, mu), scalar_product(basis[n - 1], basis[n - 1], mu),
          "<Q_" + std::to_string(n - 1) + ",Q_" + std::to_string(n - 1) + ">"));
    }
  }
  return out;
}

namespace {

void require_moments(const MomentSeq& mu, std::size_t index) {
  if (index >= mu.size()) {
    throw Error(ErrorKind::kRange, "needs mu_" + std::to_string(index) + " but only " +
                                       std::to_string(mu.size()) + " moments are available");
  }
}

}  // namespace

HankelMatrix HankelMatrix::plain(std::size_t n, const MomentSeq& mu) {
  require_moments(mu, 2 * n);
  HankelMatrix h;
  h.variant = Variant::kPlain;
  h.entries.assign(n + 1, std::vector<MultiPoly>(n + 1));
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) h.entries[i][j] = mu[i + j];
  return h;
}

HankelMatrix HankelMatrix::shifted(std::size_t n, const MomentSeq& mu) {
  require_moments(mu, 2 * n + 1);
  HankelMatrix h;
  h.variant = Variant::kShifted;
  h.entries.assign(n + 1, std::vector<MultiPoly>(n + 1));
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) h.entries[i][j] = mu[i + j + (i == n ? 1 : 0)];
  return h;
}

bool HankelMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!(entries[i][j] == entries[j][i])) return false;
  return true;
}

HankelDets hankel_dets(std::size_t n, const MomentSeq& mu) {
  return {bareiss_determinant(HankelMatrix::plain(n, mu).entries),
          bareiss_determinant(HankelMatrix::shifted(n, mu).entries)};
}

UniPoly qn_via_determinant(std::size_t n, const MomentSeq& mu) {
  if (n == 0) return UniPoly(1);
  require_moments(mu, 2 * n - 1);
  PolyMatrix top(n, std::vector<MultiPoly>(n + 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= n; ++j) top[i][j] = mu[i + j];
  const MultiPoly d_prev = bareiss_determinant(HankelMatrix::plain(n - 1, mu).entries);
  if (d_prev.is_zero())
    throw Error(ErrorKind::kSingularHankel, "d_" + std::to_string(n - 1) + " vanishes");
  return bordered_determinant(top).map_coeffs([&](const MultiPoly& c) { return c.exact_divide(d_prev); });
}

MultiPoly lambda_product(const CoeffSpec& spec, std::size_t k) {
  MultiPoly p(1);
  for (std::size_t i = 1; i <= k; ++i) p = p * spec.lam(i);
  return p;
}

bool basis_inverse_check(std::size_t n, const OrthoBasis& basis, const MomentSeq& mu) {
  if (n >= basis.size() || n >= mu.h.size())
    throw Error(ErrorKind::kRange, "basis_inverse_check needs basis and h table through " + std::to_string(n));
  PolyMatrix scaled_h(n + 1, std::vector<MultiPoly>(n + 1));
  for (std::size_t k = 0; k <= n; ++k) {
    const MultiPoly lp = lambda_product(basis.spec, k);
    if (lp.is_zero())
      throw Error(ErrorKind::kDegenerateSpec, "lambda_1...lambda_" + std::to_string(k) + " vanishes");
    for (std::size_t i = k; i <= n; ++i) scaled_h[i][k] = mu.h_at(i, k).exact_divide(lp);
  }
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t s = 0; s <= n; ++s) {
      MultiPoly acc;
      for (std::size_t k = s; k <= i; ++k) acc += scaled_h[i][k] * basis.a(k, s);
      if (!(acc == MultiPoly(i == s ? 1 : 0))) return false;
    }
  }
  return true;
}

std::vector<MultiPoly> expand_in_basis(const UniPoly& p, const OrthoBasis& basis, const MomentSeq& mu) {
  if (p.is_zero()) return {};
  const auto d = static_cast<std::size_t>(p.degree());
  if (d >= basis.size())
    throw Error(ErrorKind::kRange, "basis too short for degree " + std::to_string(d));
  std::vector<MultiPoly> coeffs;
  UniPoly rebuilt;
  for (std::size_t k = 0; k <= d; ++k) {
    const MultiPoly self = scalar_product(basis[k], basis[k], mu);
    if (self.is_zero())
      throw Error(ErrorKind::kDegenerateSpec, "<Q_" + std::to_string(k) + ",Q_" + std::to_string(k) + "> vanishes");
    coeffs.push_back(scalar_product(p, basis[k], mu).exact_divide(self));
    rebuilt += basis[k].scaled(coeffs.back());
  }
  if (!(rebuilt == p))
    throw Error(ErrorKind::kDomain, "basis expansion does not reconstruct " + p.to_string());
  return coeffs;
}

HankelVerdict hankel_positivity(const HankelMatrix& a) {
  HankelVerdict v;
  for (const auto& row : a.entries)
    for (const auto& e : row)
      if (!e.is_constant()) throw Error(ErrorKind::kUnsupported, "positivity test needs rational entries");
  v.positive_definite = true;
  for (std::size_t k = 1; k <= a.dim(); ++k) {
    PolyMatrix lead(k, std::vector<MultiPoly>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead[i][j] = a.entries[i][j];
    const BigRational minor = *bareiss_determinant(std::move(lead)).constant_value();
    if (minor.sign() <= 0) v.positive_definite = false;
    v.leading_minors.push_back(minor);
  }
  v.determinant = v.leading_minors.empty() ? BigRational(1) : v.leading_minors.back();
  v.nonsingular = !v.determinant.is_zero();
  return v;
}

}  // namespace heaporth
