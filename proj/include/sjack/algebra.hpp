#pragma once

// Exact arithmetic in the parameter alpha: big rationals, univariate
// polynomials, the rational-function field Q(alpha) and Laurent extraction.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sjack {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Raised when a rational function is evaluated at a root of its denominator.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Parses "7", "-3/4" or "0.25" into a canonical rational.
BigRat parse_rational(std::string_view text);
std::string to_string(const BigRat& q);

/// Dense polynomial with integer coefficients, ascending powers, no trailing
/// zeros.  The zero polynomial is the empty vector.
using IntPoly = std::vector<BigInt>;

/// Dense polynomial in alpha with rational coefficients.
class AlphaPoly {
 public:
  AlphaPoly() = default;
  AlphaPoly(long c);  // NOLINT(google-explicit-constructor)
  AlphaPoly(const BigRat& c);  // NOLINT(google-explicit-constructor)
  explicit AlphaPoly(std::vector<BigRat> coeffs);
  explicit AlphaPoly(const IntPoly& coeffs);

  static AlphaPoly alpha() { return monomial(1, 1); }
  static AlphaPoly monomial(const BigRat& c, int power);
  /// c0 + c1 * alpha
  static AlphaPoly linear(const BigRat& c0, const BigRat& c1);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Index of the lowest nonzero coefficient; 0 for the zero polynomial.
  int valuation() const;
  const std::vector<BigRat>& coeffs() const { return coeffs_; }
  BigRat coeff(int power) const;
  const BigRat& leading() const;

  BigRat eval(const BigRat& q) const;

  AlphaPoly& operator+=(const AlphaPoly& o);
  AlphaPoly& operator-=(const AlphaPoly& o);
  AlphaPoly& operator*=(const AlphaPoly& o);

  friend AlphaPoly operator+(AlphaPoly a, const AlphaPoly& b) { return a += b; }
  friend AlphaPoly operator-(AlphaPoly a, const AlphaPoly& b) { return a -= b; }
  friend AlphaPoly operator*(AlphaPoly a, const AlphaPoly& b) { return a *= b; }
  AlphaPoly operator-() const;
  friend bool operator==(const AlphaPoly& a, const AlphaPoly& b) = default;

  /// Euclidean division over Q: a = q*b + r with deg r < deg b.
  static std::pair<AlphaPoly, AlphaPoly> divmod(const AlphaPoly& a, const AlphaPoly& b);

  /// True when every coefficient is an integer.
  bool has_integer_coeffs() const;
  /// Integer coefficients; requires has_integer_coeffs().
  IntPoly to_int_poly() const;

  std::string to_string(std::string_view var = "alpha") const;

 private:
  void trim();
  std::vector<BigRat> coeffs_;
};

/// Monic gcd over Q[alpha]; gcd(0, 0) = 0.
AlphaPoly gcd(const AlphaPoly& a, const AlphaPoly& b);

/// Element of Q(alpha), always stored in canonical form: numerator and
/// denominator have integer coefficients, are coprime in Q[alpha], have joint
/// integer content 1, and the denominator's leading coefficient is positive.
/// Zero is 0/1.  Canonical form is unique, so equality is structural.
class AlphaRational {
 public:
  AlphaRational() : den_{BigInt(1)} {}
  AlphaRational(long c);  // NOLINT(google-explicit-constructor)
  AlphaRational(const BigRat& c);  // NOLINT(google-explicit-constructor)
  AlphaRational(const AlphaPoly& p);  // NOLINT(google-explicit-constructor)
  /// Throws std::invalid_argument if den is zero.
  AlphaRational(const AlphaPoly& num, const AlphaPoly& den);

  /// Canonicalizes an integer pair; den must be nonzero.
  static AlphaRational from_int_polys(IntPoly num, IntPoly den);

  static AlphaRational alpha() { return AlphaRational(AlphaPoly::alpha()); }
  /// alpha^k for any integer k.
  static AlphaRational alpha_power(int k);

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  AlphaPoly numerator() const { return AlphaPoly(num_); }
  AlphaPoly denominator() const { return AlphaPoly(den_); }

  bool is_zero() const { return num_.empty(); }
  bool is_polynomial() const { return den_.size() == 1; }

  /// Exact value at alpha = q.  Throws PoleError at a root of the denominator.
  BigRat eval_at(const BigRat& q) const;

  /// The function alpha -> r(1/alpha).
  AlphaRational substitute_reciprocal() const;

  AlphaRational& operator+=(const AlphaRational& o);
  AlphaRational& operator-=(const AlphaRational& o);
  AlphaRational& operator*=(const AlphaRational& o);
  /// Throws std::invalid_argument on division by zero.
  AlphaRational& operator/=(const AlphaRational& o);

  friend AlphaRational operator+(AlphaRational a, const AlphaRational& b) { return a += b; }
  friend AlphaRational operator-(AlphaRational a, const AlphaRational& b) { return a -= b; }
  friend AlphaRational operator*(AlphaRational a, const AlphaRational& b) { return a *= b; }
  friend AlphaRational operator/(AlphaRational a, const AlphaRational& b) { return a /= b; }
  AlphaRational operator-() const;
  AlphaRational inverse() const;
  friend bool operator==(const AlphaRational& a, const AlphaRational& b) = default;

  /// Expanded form, e.g. "2*alpha/(1 + alpha)".
  std::string to_string(std::string_view var = "alpha") const;

 private:
  IntPoly num_;
  IntPoly den_;
};

enum class RfOp { add, sub, mul, div };
AlphaRational rf_arith(const AlphaRational& a, const AlphaRational& b, RfOp op);

/// sum_k coeffs[k] * alpha^(min_exp + k).  Zero is min_exp 0 with no coeffs.
struct AlphaLaurent {
  int min_exp = 0;
  std::vector<BigRat> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  int max_exp() const { return min_exp + static_cast<int>(coeffs.size()) - 1; }
  AlphaRational to_rational() const;
  std::string to_string(std::string_view var = "alpha") const;
  friend bool operator==(const AlphaLaurent&, const AlphaLaurent&) = default;
};

/// Succeeds iff the canonical denominator is c * alpha^k.
std::optional<AlphaLaurent> to_laurent(const AlphaRational& r);

bool is_nonneg_integer_coeffs(const AlphaLaurent& l);

BigRat eval_at(const AlphaRational& r, const BigRat& q);

}  // namespace sjack
