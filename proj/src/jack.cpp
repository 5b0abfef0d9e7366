#include "sjack/jack.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "sjack/memo.hpp"
#include "sjack/tableaux.hpp"

namespace sjack {

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<Partition, Partition>& k) const noexcept {
    return PartitionHash{}(k.first) * 1000003u ^ PartitionHash{}(k.second);
  }
};

using PairMemo = ConcurrentMemo<std::pair<Partition, Partition>, AlphaRational, PairHash>;

PairMemo& eval_memo() {
  static PairMemo memo(memo_capacity_from_env());
  return memo;
}

PairMemo& chain_sum_memo() {
  static PairMemo memo(memo_capacity_from_env());
  return memo;
}

/// Cells of the strip outer / inner as (row, col), row by row.
std::vector<Cell> strip_cells(const Partition& outer, const Partition& inner) {
  std::vector<Cell> cells;
  for (int i = 1; i <= outer.length(); ++i)
    for (int j = inner.part(i) + 1; j <= outer.part(i); ++j) cells.push_back({i, j});
  return cells;
}

/// Memo key for the transfer recursion: (entry k, shape of entries >= k).
using StateKey = std::pair<int, Partition>;

/// Generic transfer recursion over reverse tableaux with entries in 1..n:
///   W(n+1, {}) = one, W(k, S) = sum_{S'} step(k, S, S') * W(k+1, S').
/// `step` returns std::nullopt for a zero weight.
template <class Value, class Step>
class ChainTransfer {
 public:
  ChainTransfer(int n, Value one, Value zero, Step step)
      : n_(n), one_(std::move(one)), zero_(std::move(zero)), step_(std::move(step)) {}

  Value run(const Partition& shape) { return weight(1, shape); }

 private:
  Value weight(int k, const Partition& s) {
    if (k == n_ + 1) return s.empty() ? one_ : zero_;
    if (s.length() > n_ - k + 1) return zero_;
    StateKey key{k, s};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Value total = zero_;
    for (const auto& inner : horizontal_strip_inners(s)) {
      if (inner.length() > n_ - k) continue;
      Value rest = weight(k + 1, inner);
      if (is_zero(rest)) continue;
      if (auto w = step_(k, s, inner, rest)) total += *w;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

  static bool is_zero(const AlphaRational& v) { return v.is_zero(); }
  static bool is_zero(const BigRat& v) { return sgn(v) == 0; }
  static bool is_zero(const MultivariatePoly& v) { return v.is_zero(); }

  int n_;
  Value one_;
  Value zero_;
  Step step_;
  std::map<StateKey, Value> memo_;
};

template <class Value, class Step>
ChainTransfer<Value, Step> make_transfer(int n, Value one, Value zero, Step step) {
  return ChainTransfer<Value, Step>(n, std::move(one), std::move(zero), std::move(step));
}

AlphaRational compute_shifted_eval(const Partition& mu, const Partition& lam) {
  const int n = std::max(mu.length(), lam.length());
  auto transfer = make_transfer<AlphaRational>(
      n, AlphaRational(1), AlphaRational(0),
      [&](int k, const Partition& outer, const Partition& inner,
          const AlphaRational& rest) -> std::optional<AlphaRational> {
        // Each factor is (x_k - (j-1) + (i-1)/alpha), kept scaled by alpha.
        AlphaPoly factor(1);
        for (const Cell& s : strip_cells(outer, inner)) {
          const int lead = lam.part(k) - (s.col - 1);
          if (lead == 0 && s.row == 1) return std::nullopt;
          factor *= AlphaPoly::linear(s.row - 1, lead);
        }
        return psi_strip(outer, inner) * AlphaRational(factor) * rest;
      });
  return transfer.run(mu) * AlphaRational::alpha_power(-mu.size());
}

BigRat factorial(int k) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return BigRat(f);
}

/// Sum over saturated chains mu -> nu of the product of psi' steps.
AlphaRational chain_sum(const Partition& mu, const Partition& nu) {
  if (mu == nu) return AlphaRational(1);
  if (auto hit = chain_sum_memo().find({mu, nu})) return *hit;
  AlphaRational total;
  for (const auto& smaller : shrink_by_one_box(nu)) {
    if (!contains(smaller, mu)) continue;
    total += chain_sum(mu, smaller) * psi_prime_strip(nu, smaller);
  }
  chain_sum_memo().insert({mu, nu}, total);
  return total;
}

/// Stirling numbers of the second kind S(e, b), b = 0..e.
std::vector<BigInt> stirling2_row(int e) {
  std::vector<BigInt> row{BigInt(1)};
  for (int m = 1; m <= e; ++m) {
    std::vector<BigInt> next(static_cast<std::size_t>(m) + 1, BigInt(0));
    for (std::size_t b = 1; b <= static_cast<std::size_t>(m); ++b) {
      next[b] = row[b - 1];
      if (b < row.size()) next[b] += BigInt(static_cast<unsigned long>(b)) * row[b];
    }
    row = std::move(next);
  }
  return row;
}

}  // namespace

// ---------------------------------------------------------------------------

SymmetricExpansion jack_P_monomial(const Partition& mu, int n) {
  if (n < mu.length()) throw std::invalid_argument("jack_P_monomial: fewer variables than parts");
  SymmetricExpansion out;
  for (const auto& content : partitions_of(mu.size())) {
    if (content.length() > n) continue;
    auto transfer = make_transfer<AlphaRational>(
        n, AlphaRational(1), AlphaRational(0),
        [&](int k, const Partition& outer, const Partition& inner,
            const AlphaRational& rest) -> std::optional<AlphaRational> {
          if (outer.size() - inner.size() != content.part(k)) return std::nullopt;
          return psi_strip(outer, inner) * rest;
        });
    AlphaRational c = transfer.run(mu);
    if (!c.is_zero()) out.emplace(content, std::move(c));
  }
  return out;
}

AlphaRational shifted_P_eval(const Partition& mu, const Partition& lam) {
  return eval_memo().get_or_compute({mu, lam}, [&] { return compute_shifted_eval(mu, lam); });
}

BigRat shifted_P_eval_point(const Partition& mu, std::span<const BigRat> x, const BigRat& alpha) {
  if (sgn(alpha) == 0) throw std::invalid_argument("shifted_P_eval_point: alpha must be nonzero");
  const int n = static_cast<int>(x.size());
  if (n < mu.length()) throw std::invalid_argument("shifted_P_eval_point: fewer coordinates than parts");
  const BigRat inv_alpha = 1 / alpha;
  auto transfer = make_transfer<BigRat>(
      n, BigRat(1), BigRat(0),
      [&](int k, const Partition& outer, const Partition& inner, const BigRat& rest) -> std::optional<BigRat> {
        BigRat w = psi_strip(outer, inner).eval_at(alpha) * rest;
        for (const Cell& s : strip_cells(outer, inner))
          w *= x[static_cast<std::size_t>(k - 1)] - (s.col - 1) + (s.row - 1) * inv_alpha;
        return w;
      });
  return transfer.run(mu);
}

AlphaRational h_ratio(const Partition& mu, const Partition& nu) {
  if (!contains(nu, mu)) throw std::invalid_argument("h_ratio: mu is not contained in nu");
  return chain_sum(mu, nu) / AlphaRational(factorial(nu.size() - mu.size()));
}

AlphaRational h_ratio_signed(const Partition& mu, const Partition& nu) {
  AlphaRational h = h_ratio(mu, nu);
  return (nu.size() - mu.size()) % 2 == 0 ? h : -h;
}

// ---------------------------------------------------------------------------
// MultivariatePoly

void MultivariatePoly::add_term(const Exponents& e, const AlphaRational& c) {
  if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("exponent vector has the wrong length");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlphaRational MultivariatePoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? AlphaRational(0) : it->second;
}

MultivariatePoly& MultivariatePoly::operator+=(const MultivariatePoly& o) {
  if (o.n_ != n_) throw std::invalid_argument("adding polynomials in different variable counts");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultivariatePoly& MultivariatePoly::operator*=(const AlphaRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultivariatePoly MultivariatePoly::homogeneous_part(int d) const {
  MultivariatePoly out(n_);
  for (const auto& [e, c] : terms_) {
    int deg = 0;
    for (int v : e) deg += v;
    if (deg == d) out.terms_.emplace(e, c);
  }
  return out;
}

int MultivariatePoly::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int deg = 0;
    for (int v : e) deg += v;
    best = std::max(best, deg);
  }
  return best;
}

AlphaRational MultivariatePoly::eval_at_partition(const Partition& lam) const {
  if (lam.length() > n_) throw std::invalid_argument("partition has more parts than variables");
  AlphaRational total;
  for (const auto& [e, c] : terms_) {
    BigInt mono = 1;
    for (int i = 0; i < n_; ++i) {
      BigInt p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(lam.part(i + 1)),
                    static_cast<unsigned long>(e[static_cast<std::size_t>(i)]));
      mono *= p;
    }
    if (mono != 0) total += c * AlphaRational(BigRat(mono));
  }
  return total;
}

BigRat MultivariatePoly::eval_at_point(std::span<const BigRat> x, const BigRat& alpha) const {
  if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("point has the wrong dimension");
  BigRat total = 0;
  for (const auto& [e, c] : terms_) {
    BigRat mono = c.eval_at(alpha);
    for (int i = 0; i < n_; ++i)
      for (int t = 0; t < e[static_cast<std::size_t>(i)]; ++t) mono *= x[static_cast<std::size_t>(i)];
    total += mono;
  }
  return total;
}

MultivariatePoly monomial_expansion(const SymmetricExpansion& f, int n) {
  MultivariatePoly out(n);
  for (const auto& [lam, c] : f) {
    if (lam.length() > n) throw std::invalid_argument("monomial index has more parts than variables");
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < lam.length(); ++i) e[static_cast<std::size_t>(i)] = lam.part(i + 1);
    std::sort(e.begin(), e.end());
    do {
      out.add_term(e, c);
    } while (std::next_permutation(e.begin(), e.end()));
  }
  return out;
}

MultivariatePoly shifted_P_polynomial(const Partition& mu, int n) {
  if (n < mu.length()) throw std::invalid_argument("shifted_P_polynomial: fewer variables than parts");
  MultivariatePoly one(n);
  one.add_term(std::vector<int>(static_cast<std::size_t>(n), 0), AlphaRational(1));
  auto transfer = make_transfer<MultivariatePoly>(
      n, one, MultivariatePoly(n),
      [&](int k, const Partition& outer, const Partition& inner,
          const MultivariatePoly& rest) -> std::optional<MultivariatePoly> {
        // prod over strip cells of (x_k + c_s), c_s = -(j-1) + (i-1)/alpha,
        // as a polynomial in x_k.
        std::vector<AlphaRational> factor{AlphaRational(1)};
        for (const Cell& s : strip_cells(outer, inner)) {
          const AlphaRational shift =
              AlphaRational(-(s.col - 1)) + AlphaRational(s.row - 1) * AlphaRational::alpha_power(-1);
          std::vector<AlphaRational> next(factor.size() + 1);
          for (std::size_t p = 0; p < factor.size(); ++p) {
            next[p + 1] += factor[p];
            next[p] += factor[p] * shift;
          }
          factor = std::move(next);
        }
        const AlphaRational psi = psi_strip(outer, inner);
        MultivariatePoly out(n);
        for (const auto& [e, c] : rest.terms()) {
          for (std::size_t p = 0; p < factor.size(); ++p) {
            if (factor[p].is_zero()) continue;
            auto e2 = e;
            e2[static_cast<std::size_t>(k - 1)] += static_cast<int>(p);
            out.add_term(e2, psi * factor[p] * c);
          }
        }
        return out;
      });
  return transfer.run(mu);
}

// ---------------------------------------------------------------------------
// Falling-power expansion

bool FallingExpansion::all_nonnegative() const {
  return std::all_of(terms.begin(), terms.end(),
                     [](const auto& kv) { return kv.first.alpha_power >= 0 && sgn(kv.second) >= 0; });
}

FallingExpansion falling_expand(const MultivariatePoly& p) {
  const int n = p.num_vars();
  using Exps = std::vector<int>;
  using YPoly = std::map<Exps, AlphaRational>;

  // x_i = y_i + y_{i+1} + ... + y_n with y_i = x_i - x_{i+1}, y_n = x_n.
  auto times_tail_sum = [n](const YPoly& f, int i) {
    YPoly out;
    for (const auto& [e, c] : f) {
      for (int j = i; j < n; ++j) {
        auto e2 = e;
        ++e2[static_cast<std::size_t>(j)];
        auto [it, inserted] = out.try_emplace(e2, c);
        if (!inserted) it->second += c;
      }
    }
    return out;
  };

  YPoly in_y;
  for (const auto& [e, c] : p.terms()) {
    YPoly f{{Exps(static_cast<std::size_t>(n), 0), c}};
    for (int i = 0; i < n; ++i)
      for (int t = 0; t < e[static_cast<std::size_t>(i)]; ++t) f = times_tail_sum(f, i);
    for (const auto& [e2, c2] : f) {
      auto [it, inserted] = in_y.try_emplace(e2, c2);
      if (!inserted) it->second += c2;
    }
  }

  // y^e = prod_i sum_b S(e_i, b) (y_i)_b
  std::map<Exps, AlphaRational> in_falling;
  for (const auto& [e, c] : in_y) {
    if (c.is_zero()) continue;
    std::vector<std::vector<BigInt>> rows;
    for (int v : e) rows.push_back(stirling2_row(v));
    Exps b(static_cast<std::size_t>(n), 0);
    // odometer over 0 <= b_i <= e_i
    while (true) {
      BigInt weight = 1;
      for (int i = 0; i < n; ++i) weight *= rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(b[static_cast<std::size_t>(i)])];
      if (weight != 0) {
        AlphaRational term = c * AlphaRational(BigRat(weight));
        auto [it, inserted] = in_falling.try_emplace(b, term);
        if (!inserted) it->second += term;
      }
      int i = 0;
      while (i < n && b[static_cast<std::size_t>(i)] == e[static_cast<std::size_t>(i)]) b[static_cast<std::size_t>(i++)] = 0;
      if (i == n) break;
      ++b[static_cast<std::size_t>(i)];
    }
  }

  FallingExpansion out;
  out.num_vars = n;
  for (const auto& [b, c] : in_falling) {
    if (c.is_zero()) continue;
    auto laurent = to_laurent(c);
    if (!laurent) throw std::domain_error("falling_expand: coefficient " + c.to_string() + " is not a Laurent polynomial");
    for (std::size_t k = 0; k < laurent->coeffs.size(); ++k) {
      if (sgn(laurent->coeffs[k]) == 0) continue;
      out.terms.emplace(FallingExpansion::Key{laurent->min_exp + static_cast<int>(k), b}, laurent->coeffs[k]);
    }
  }
  return out;
}

FallingExpansion falling_expansion_of_shifted_jack(const Partition& mu, int n) {
  MultivariatePoly p = shifted_P_polynomial(mu, n);
  // P#_{empty} = 1 carries no normalizing power of alpha.
  const int shift = mu.empty() ? 0 : mu.length() - 1;
  p *= AlphaRational(hook_H(mu)) * AlphaRational::alpha_power(shift);
  return falling_expand(p);
}

bool check_falling_conjecture(const Partition& mu, int n) {
  try {
    return falling_expansion_of_shifted_jack(mu, n).all_nonnegative();
  } catch (const std::domain_error&) {
    return false;
  }
}

}  // namespace sjack
