#pragma once

#include <vector>

#include "heaporth/coeff_spec.hpp"
#include "heaporth/determinant.hpp"
#include "heaporth/unipoly.hpp"

namespace heaporth {

// Monic Q_0..Q_N from Q_{n+1} = (x - c_n) Q_n - lambda_n Q_{n-1},
// Q_{-1} = 0, Q_0 = 1.
struct OrthoBasis {
  CoeffSpec spec;
  std::vector<UniPoly> polys;

  std::size_t size() const { return polys.size(); }
  const UniPoly& operator[](std::size_t n) const { return polys.at(n); }
  // a_{n,k}: coefficient of x^k in Q_n (zero for k > n).
  MultiPoly a(std::size_t n, std::size_t k) const { return polys.at(n).coeff(k); }
};

OrthoBasis generate_basis(std::size_t n_max, const CoeffSpec& spec);

// mu_0..mu_M together with the Stieltjes triangle h[n][k] (0 <= k <= n <= M).
struct MomentSeq {
  CoeffSpec spec;
  std::vector<MultiPoly> mu;
  std::vector<std::vector<MultiPoly>> h;

  std::size_t size() const { return mu.size(); }
  const MultiPoly& operator[](std::size_t n) const { return mu.at(n); }
  // h_{n,k}, zero when k > n.
  MultiPoly h_at(std::size_t n, std::size_t k) const;
};

// h_{n,k} = lambda_k h_{n-1,k-1} + c_k h_{n-1,k} + h_{n-1,k+1}, h_{0,0} = 1,
// and mu_n = h_{n,0}.
MomentSeq stieltjes_moments(std::size_t n_max, const CoeffSpec& spec);

// Wraps an explicit moment list (e.g. a numeric measure) as a MomentSeq
// without a triangle.
MomentSeq moments_from_values(std::vector<MultiPoly> mu, const CoeffSpec& spec = CoeffSpec::symbolic());

// <A, B> = sum_ij a_i b_j mu_{i+j}.
MultiPoly scalar_product(const UniPoly& a, const UniPoly& b, const MomentSeq& mu);

// Recovered recursion parameters for n = 0..N.
struct RecursionCoeffs {
  std::vector<MultiPoly> c;       // c[n] = c_n
  std::vector<MultiPoly> lambda;  // lambda[n] = lambda_n; lambda[0] is unused and zero
};

// lambda_n = <Q_{n-1}, x Q_n> / <Q_{n-1}, Q_{n-1}>, c_n = <Q_n, x Q_n> / <Q_n, Q_n>
// for every n < basis.size().
RecursionCoeffs recursion_coeffs(const OrthoBasis& basis, const MomentSeq& mu);

struct HankelMatrix {
  enum class Variant { kPlain, kShifted };

  // d_n: entries mu_{i+j}, 0 <= i, j <= n.
  static HankelMatrix plain(std::size_t n, const MomentSeq& mu);
  // chi_n: as plain but the last row is mu_{n+1} ... mu_{2n+1}.
  static HankelMatrix shifted(std::size_t n, const MomentSeq& mu);

  std::size_t dim() const { return entries.size(); }
  bool is_symmetric() const;

  Variant variant = Variant::kPlain;
  PolyMatrix entries;
};

struct HankelDets {
  MultiPoly d;
  MultiPoly chi;
};

HankelDets hankel_dets(std::size_t n, const MomentSeq& mu);

// (1 / d_{n-1}) times the moment matrix bordered by (1, x, ..., x^n).
UniPoly qn_via_determinant(std::size_t n, const MomentSeq& mu);

// lambda_1 * ... * lambda_k under the basis spec (1 for k = 0).
MultiPoly lambda_product(const CoeffSpec& spec, std::size_t k);

// || h_{n,k} / (lambda_1...lambda_k) || times || a_{n,k} || is the identity
// through index n.
bool basis_inverse_check(std::size_t n, const OrthoBasis& basis, const MomentSeq& mu);

// Coefficients <P,Q_k>/<Q_k,Q_k> for k = 0..deg P. Throws kDomain if the
// coefficients fail to reconstruct P.
std::vector<MultiPoly> expand_in_basis(const UniPoly& p, const OrthoBasis& basis, const MomentSeq& mu);

struct HankelVerdict {
  std::vector<BigRational> leading_minors;  // sizes 1..dim
  bool positive_definite = false;
  bool nonsingular = false;
  BigRational determinant;
};

// Sylvester's criterion on a Hankel matrix with rational entries.
HankelVerdict hankel_positivity(const HankelMatrix& a);

}  // namespace heaporth
