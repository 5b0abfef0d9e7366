#pragma once

// Jack polynomials P_mu in the monomial basis and shifted Jack polynomials
// P#_mu, evaluated through the reverse-tableau formula
//
//   P#_mu(x) = sum_T psi_T(alpha) prod_{s=(i,j)} (x_{T(s)} - (j-1) + (i-1)/alpha).
//
// The tableau sums are evaluated by a transfer recursion over the shape chain
// (entry k, shape of entries >= k), which visits every tableau exactly once
// without materializing it.

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "sjack/algebra.hpp"
#include "sjack/partitions.hpp"

namespace sjack {

/// Coefficients on monomial symmetric functions m_lambda; absent keys are 0.
using SymmetricExpansion = std::map<Partition, AlphaRational>;

/// P_mu in n variables on the m_lambda basis.  Throws std::invalid_argument
/// when n < length(mu).
SymmetricExpansion jack_P_monomial(const Partition& mu, int n);

/// P#_mu(lam) with n = max(length(mu), length(lam)); memoized.
AlphaRational shifted_P_eval(const Partition& mu, const Partition& lam);

/// P#_mu(x_1..x_n) at a numeric alpha.  Throws std::invalid_argument when
/// alpha = 0 or x has fewer than length(mu) coordinates.
BigRat shifted_P_eval_point(const Partition& mu, std::span<const BigRat> x, const BigRat& alpha);

/// H(mu, nu) = P#_mu(nu) / P#_nu(nu), computed as the standard-tableau sum
/// of psi' over nu / mu divided by (|nu| - |mu|)!.  Throws
/// std::invalid_argument unless mu is contained in nu.
AlphaRational h_ratio(const Partition& mu, const Partition& nu);
/// H'(mu, nu) = (-1)^(|nu| - |mu|) H(mu, nu).
AlphaRational h_ratio_signed(const Partition& mu, const Partition& nu);

/// Polynomial in x_1..x_n with coefficients in Q(alpha).
class MultivariatePoly {
 public:
  using Exponents = std::vector<int>;

  explicit MultivariatePoly(int n = 0) : n_(n) {}

  int num_vars() const { return n_; }
  const std::map<Exponents, AlphaRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * x^e.  Throws std::invalid_argument on an exponent vector of
  /// the wrong length.
  void add_term(const Exponents& e, const AlphaRational& c);
  AlphaRational coeff(const Exponents& e) const;

  MultivariatePoly& operator+=(const MultivariatePoly& o);
  MultivariatePoly& operator*=(const AlphaRational& c);
  friend bool operator==(const MultivariatePoly&, const MultivariatePoly&) = default;

  /// Homogeneous component of total degree d.
  MultivariatePoly homogeneous_part(int d) const;
  int total_degree() const;

  /// Value at x = lam (missing parts are 0).
  AlphaRational eval_at_partition(const Partition& lam) const;
  /// Value at a numeric point and numeric alpha.
  BigRat eval_at_point(std::span<const BigRat> x, const BigRat& alpha) const;

 private:
  int n_;
  std::map<Exponents, AlphaRational> terms_;
};

/// Expands sum_lambda c_lambda m_lambda into monomials in n variables.
MultivariatePoly monomial_expansion(const SymmetricExpansion& f, int n);

/// P#_mu(x_1..x_n) fully expanded.  Throws std::invalid_argument when
/// n < length(mu).
MultivariatePoly shifted_P_polynomial(const Partition& mu, int n);

/// Coefficients on the basis alpha^c (x_1-x_2)_{b_1} ... (x_{n-1}-x_n)_{b_{n-1}} (x_n)_{b_n}.
struct FallingExpansion {
  struct Key {
    int alpha_power = 0;
    std::vector<int> falling;
    friend auto operator<=>(const Key&, const Key&) = default;
  };
  int num_vars = 0;
  std::map<Key, BigRat> terms;

  bool all_nonnegative() const;
};

/// Expansion of p on the falling-power basis.  Every coefficient of p must be
/// a Laurent polynomial in alpha; otherwise std::domain_error is thrown.
FallingExpansion falling_expand(const MultivariatePoly& p);

/// alpha^(length(mu)-1) H_mu P#_mu(x_1..x_n) on the falling-power basis.
FallingExpansion falling_expansion_of_shifted_jack(const Partition& mu, int n);

/// True iff every coefficient of falling_expansion_of_shifted_jack is
/// nonnegative and every alpha exponent is nonnegative.
bool check_falling_conjecture(const Partition& mu, int n);

}  // namespace sjack
