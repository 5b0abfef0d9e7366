#include "sjack/constants.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "sjack/jack.hpp"
#include "sjack/tableaux.hpp"

namespace sjack {

std::size_t TripleKeyHash::operator()(const TripleKey& k) const noexcept {
  PartitionHash h;
  std::size_t v = h(k.mu);
  v = v * 1000003u ^ h(k.nu);
  v = v * 1000003u ^ h(k.lam);
  return v;
}

bool sweep_less(const TripleKey& a, const TripleKey& b) {
  auto sizes = [](const TripleKey& k) { return std::tuple(k.mu.size(), k.nu.size(), k.lam.size()); };
  if (sizes(a) != sizes(b)) return sizes(a) < sizes(b);
  if (a.mu != b.mu) return enumeration_less(a.mu, b.mu);
  if (a.nu != b.nu) return enumeration_less(a.nu, b.nu);
  return enumeration_less(a.lam, b.lam);
}

AlphaRational c_base(const Partition& mu, const Partition& lam) { return shifted_P_eval(mu, lam); }

// ---------------------------------------------------------------------------
// Recursive engine

AlphaRational RecursiveEngine::operator()(const TripleKey& key) {
  if (!contains(key.lam, key.mu) || !contains(key.lam, key.nu)) return AlphaRational(0);
  if (auto hit = memo_.find(key)) return *hit;
  AlphaRational value = compute(key);
  memo_.insert(key, value);
  return value;
}

AlphaRational RecursiveEngine::compute(const TripleKey& key) {
  const auto& [mu, nu, lam] = key;
  if (nu == lam) return c_base(mu, lam);
  AlphaRational total;
  for (const auto& bigger : grow_by_one_box(nu)) {
    if (!contains(lam, bigger)) continue;
    AlphaRational c = (*this)({mu, bigger, lam});
    if (!c.is_zero()) total += psi_prime_strip(bigger, nu) * c;
  }
  for (const auto& smaller : shrink_by_one_box(lam)) {
    if (!contains(smaller, mu) || !contains(smaller, nu)) continue;
    AlphaRational c = (*this)({mu, nu, smaller});
    if (!c.is_zero()) total -= psi_prime_strip(lam, smaller) * c;
  }
  return total / AlphaRational(lam.size() - nu.size());
}

RecursiveEngine& default_engine() {
  static RecursiveEngine engine;
  return engine;
}

AlphaRational c_recursive(const TripleKey& key) { return default_engine()(key); }

// ---------------------------------------------------------------------------
// Closed-form triple sum and linear-solve oracle

AlphaRational c_triple_sum(const TripleKey& key) {
  const auto& [mu, nu, lam] = key;
  if (!contains(lam, nu)) return AlphaRational(0);
  AlphaRational total;
  for (const auto& rho : interval(nu, lam)) {
    AlphaRational p = shifted_P_eval(mu, rho);
    if (p.is_zero()) continue;
    total += p * h_ratio(nu, rho) * h_ratio_signed(rho, lam);
  }
  return total;
}

std::map<Partition, AlphaRational> c_linear_solve(const Partition& mu, const Partition& nu) {
  const auto rows = partitions_up_to(mu.size() + nu.size());
  std::vector<std::pair<Partition, AlphaRational>> solved;
  for (const auto& rho : rows) {
    AlphaRational rhs = shifted_P_eval(mu, rho) * shifted_P_eval(nu, rho);
    for (const auto& [lam, c] : solved) {
      if (lam.size() >= rho.size()) continue;
      rhs -= c * shifted_P_eval(lam, rho);
    }
    if (rhs.is_zero()) continue;
    solved.emplace_back(rho, rhs / shifted_P_eval(rho, rho));
  }
  return {solved.begin(), solved.end()};
}

AlphaRational hproduct_zero(const Partition& rho, const Partition& lam) {
  if (!contains(lam, rho)) throw std::invalid_argument("hproduct_zero: rho is not contained in lam");
  AlphaRational total;
  for (const auto& sigma : interval(rho, lam)) total += h_ratio_signed(rho, sigma) * h_ratio(sigma, lam);
  return total;
}

// ---------------------------------------------------------------------------
// g coefficients and checks

ConstantRecord g_coeff(const TripleKey& key) {
  ConstantRecord rec{key, c_recursive(key), {}, {}, {}};
  if (!rec.c.is_zero()) {
    rec.g = rec.c * AlphaRational(hook_H(key.mu) * hook_H(key.nu) * hook_Hprime(key.lam));
  }
  rec.g_laurent = to_laurent(rec.g);
  if (rec.g_laurent) rec.nonneg_integer = is_nonneg_integer_coeffs(*rec.g_laurent);
  return rec;
}

int alpha_shift_exponent(const TripleKey& key) { return key.mu.size() + key.nu.size() - key.lam.size() - 2; }

bool alpha_shift_poly_check(const ConstantRecord& rec) {
  if (rec.key.mu.empty() || rec.key.nu.empty()) return true;
  if (rec.g.is_zero()) return true;
  auto laurent = to_laurent(rec.g);
  if (!laurent) return false;
  return laurent->min_exp + alpha_shift_exponent(rec.key) >= 0;
}

std::string to_string(FailureReason r) {
  switch (r) {
    case FailureReason::not_laurent: return "not-laurent";
    case FailureReason::negative_coefficient: return "negative-coefficient";
    case FailureReason::non_integer_coefficient: return "non-integer-coefficient";
    case FailureReason::shift_poly_fail: return "shift-poly-fail";
    case FailureReason::numeric_negative: return "numeric-negative";
  }
  return "unknown";
}

std::optional<FailureReason> parse_failure_reason(std::string_view text) {
  for (auto r : {FailureReason::not_laurent, FailureReason::negative_coefficient,
                 FailureReason::non_integer_coefficient, FailureReason::shift_poly_fail,
                 FailureReason::numeric_negative})
    if (to_string(r) == text) return r;
  return std::nullopt;
}

std::vector<TripleKey> sweep_triples(int max_mu, int max_nu) {
  std::vector<TripleKey> out;
  const auto mus = partitions_up_to(std::max(max_mu, 0));
  const auto nus = partitions_up_to(std::max(max_nu, 0));
  const auto lams = partitions_up_to(std::max(max_mu, 0) + std::max(max_nu, 0));
  for (const auto& mu : mus)
    for (const auto& nu : nus)
      for (const auto& lam : lams)
        if (lam.size() <= mu.size() + nu.size() && contains(lam, mu) && contains(lam, nu))
          out.push_back({mu, nu, lam});
  std::sort(out.begin(), out.end(), sweep_less);
  return out;
}

namespace {

std::vector<FailureReason> check_record(const ConstantRecord& rec, std::span<const BigRat> alpha_samples) {
  std::vector<FailureReason> reasons;
  if (!rec.g_laurent) {
    reasons.push_back(FailureReason::not_laurent);
  } else {
    const auto& cs = rec.g_laurent->coeffs;
    if (std::any_of(cs.begin(), cs.end(), [](const BigRat& c) { return sgn(c) < 0; }))
      reasons.push_back(FailureReason::negative_coefficient);
    if (std::any_of(cs.begin(), cs.end(), [](const BigRat& c) { return c.get_den() != 1; }))
      reasons.push_back(FailureReason::non_integer_coefficient);
  }
  if (!alpha_shift_poly_check(rec)) reasons.push_back(FailureReason::shift_poly_fail);
  if (rec.key.lam.size() - rec.key.nu.size() <= 1) {
    for (const auto& a : alpha_samples) {
      if (sgn(a) <= 0) continue;
      try {
        if (sgn(rec.c.eval_at(a)) < 0) {
          reasons.push_back(FailureReason::numeric_negative);
          break;
        }
      } catch (const PoleError&) {
      }
    }
  }
  return reasons;
}

}  // namespace

VerifyResult verify_conjecture(int max_mu, int max_nu, std::span<const BigRat> alpha_samples, int jobs) {
  const auto triples = sweep_triples(max_mu, max_nu);
  VerifyResult result;
  result.records.resize(triples.size());
  std::vector<std::vector<FailureReason>> reasons(triples.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < triples.size(); i = next++) {
        result.records[i] = g_coeff(triples[i]);
        reasons[i] = check_record(result.records[i], alpha_samples);
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = triples.size();
    }
  };
  const int workers = std::max(1, jobs);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  for (std::size_t i = 0; i < triples.size(); ++i)
    for (auto r : reasons[i]) result.failures.push_back({triples[i], r});
  return result;
}

}  // namespace sjack
