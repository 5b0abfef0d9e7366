#pragma once

// Structure constants c^lam_{mu,nu} of the shifted Jack basis,
//   P#_mu P#_nu = sum_lam c^lam_{mu,nu} P#_lam,
// their hook-normalized versions g = H_mu H_nu H'_lam c, and the sweep that
// checks g for Laurent positivity.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sjack/algebra.hpp"
#include "sjack/memo.hpp"
#include "sjack/partitions.hpp"

namespace sjack {

struct TripleKey {
  Partition mu;
  Partition nu;
  Partition lam;
  friend bool operator==(const TripleKey&, const TripleKey&) = default;
  friend auto operator<=>(const TripleKey&, const TripleKey&) = default;
};

struct TripleKeyHash {
  std::size_t operator()(const TripleKey& k) const noexcept;
};

/// Sweep order: (|mu|, |nu|, |lam|), then mu, nu, lam in enumeration order.
bool sweep_less(const TripleKey& a, const TripleKey& b);

struct ConstantRecord {
  TripleKey key;
  AlphaRational c;
  AlphaRational g;
  std::optional<AlphaLaurent> g_laurent;
  /// Set iff g_laurent is.
  std::optional<bool> nonneg_integer;
};

/// c^lam_{mu,lam} = P#_mu(lam).
AlphaRational c_base(const Partition& mu, const Partition& lam);

/// Memoized engine for the one-box recursion
///   c^lam_{mu,nu} = ( sum_{nu+} psi'_{nu+/nu} c^lam_{mu,nu+}
///                   - sum_{lam-} psi'_{lam/lam-} c^{lam-}_{mu,nu} ) / (|lam| - |nu|),
/// which grows nu towards lam.  Safe to share between threads.
class RecursiveEngine {
 public:
  explicit RecursiveEngine(std::size_t memo_capacity = memo_capacity_from_env()) : memo_(memo_capacity) {}

  AlphaRational operator()(const TripleKey& key);
  std::size_t memo_size() const { return memo_.size(); }

 private:
  AlphaRational compute(const TripleKey& key);
  ConcurrentMemo<TripleKey, AlphaRational, TripleKeyHash> memo_;
};

/// Process-wide engine.
RecursiveEngine& default_engine();

AlphaRational c_recursive(const TripleKey& key);

/// c^lam_{mu,nu} = sum_{nu <= rho <= lam} P#_mu(rho) H(nu, rho) H'(rho, lam).
AlphaRational c_triple_sum(const TripleKey& key);

/// All nonzero c^lam_{mu,nu} at once, by evaluating P#_mu P#_nu at every
/// partition rho with |rho| <= |mu| + |nu| and back-substituting through the
/// triangular matrix [P#_lam(rho)].
std::map<Partition, AlphaRational> c_linear_solve(const Partition& mu, const Partition& nu);

/// sum_{rho <= sigma <= lam} H'(rho, sigma) H(sigma, lam): 1 when rho = lam,
/// 0 otherwise.  Throws std::invalid_argument unless rho <= lam.
AlphaRational hproduct_zero(const Partition& rho, const Partition& lam);

ConstantRecord g_coeff(const TripleKey& key);

/// |mu| + |nu| - |lam| - 2.
int alpha_shift_exponent(const TripleKey& key);

/// True iff alpha^(|mu|+|nu|-|lam|-2) g is a polynomial.  Triples with an
/// empty mu or nu are outside the statement and always pass.
bool alpha_shift_poly_check(const ConstantRecord& rec);

enum class FailureReason { not_laurent, negative_coefficient, non_integer_coefficient, shift_poly_fail, numeric_negative };

std::string to_string(FailureReason r);
std::optional<FailureReason> parse_failure_reason(std::string_view text);

struct Failure {
  TripleKey key;
  FailureReason reason;
  friend bool operator==(const Failure&, const Failure&) = default;
};

struct VerifyResult {
  std::vector<ConstantRecord> records;
  std::vector<Failure> failures;
};

/// All (mu, nu, lam) with |mu| <= max_mu, |nu| <= max_nu, lam containing
/// both, |lam| <= |mu| + |nu|, in sweep order.
std::vector<TripleKey> sweep_triples(int max_mu, int max_nu);

/// Computes a record per sweep triple and flags: non-Laurent g, negative or
/// non-integer coefficients, alpha-shift polynomiality failures, and negative
/// values at the sampled alpha > 0 when |lam| - |nu| <= 1.  `jobs` worker
/// threads share the engine; output order does not depend on it.
VerifyResult verify_conjecture(int max_mu, int max_nu, std::span<const BigRat> alpha_samples, int jobs = 1);

}  // namespace sjack
