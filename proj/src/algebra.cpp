#include "sjack/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <utility>

namespace sjack {

// ---------------------------------------------------------------------------
// Integer polynomial kernels (ascending coefficients, trimmed).

namespace {

void trim(IntPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

bool is_one(const IntPoly& p) { return p.size() == 1 && p[0] == 1; }

BigInt content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void divexact_scalar(IntPoly& p, const BigInt& c) {
  if (c == 1) return;
  for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

void negate(IntPoly& p) {
  for (auto& x : p) x = -x;
}

/// Primitive part with positive leading coefficient.
void make_primitive(IntPoly& p) {
  if (p.empty()) return;
  BigInt c = content(p);
  if (sgn(p.back()) < 0) c = -c;
  divexact_scalar(p, c);
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  if (is_one(a)) return b;
  if (is_one(b)) return a;
  IntPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return r;
}

IntPoly add(const IntPoly& a, const IntPoly& b) {
  IntPoly r = a.size() >= b.size() ? a : b;
  const IntPoly& s = a.size() >= b.size() ? b : a;
  for (std::size_t i = 0; i < s.size(); ++i) r[i] += s[i];
  trim(r);
  return r;
}

/// Pseudo-remainder of a by b, scaled to keep coefficients small.
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const BigInt& lb = b.back();
  BigInt g, fa, fb;
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    mpz_gcd(g.get_mpz_t(), a.back().get_mpz_t(), lb.get_mpz_t());
    mpz_divexact(fa.get_mpz_t(), lb.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(fb.get_mpz_t(), a.back().get_mpz_t(), g.get_mpz_t());
    if (fa != 1)
      for (auto& x : a) x *= fa;
    for (std::size_t j = 0; j <= db; ++j)
      mpz_submul(a[shift + j].get_mpz_t(), fb.get_mpz_t(), b[j].get_mpz_t());
    assert(sgn(a.back()) == 0);
    a.pop_back();
    trim(a);
  }
  return a;
}

/// Primitive gcd with positive leading coefficient (content ignored).
IntPoly gcd_primitive(IntPoly a, IntPoly b) {
  if (a.empty()) {
    make_primitive(b);
    return b;
  }
  if (b.empty()) {
    make_primitive(a);
    return a;
  }
  if (a.size() == 1 || b.size() == 1) return {BigInt(1)};
  make_primitive(a);
  make_primitive(b);
  if (a == b) return a;
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) return {BigInt(1)};
    IntPoly r = pseudo_rem(std::move(a), b);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// a / b where b divides a and the quotient has integer coefficients.
IntPoly divexact(const IntPoly& a, const IntPoly& b) {
  if (is_one(b)) return a;
  if (a.empty()) return {};
  assert(a.size() >= b.size());
  IntPoly r = a;
  const std::size_t db = b.size() - 1;
  IntPoly q(a.size() - db);
  for (std::size_t k = q.size(); k-- > 0;) {
    BigInt& lead = r[k + db];
    if (sgn(lead) == 0) continue;
    mpz_divexact(q[k].get_mpz_t(), lead.get_mpz_t(), b.back().get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j)
      mpz_submul(r[k + j].get_mpz_t(), q[k].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(q);
  return q;
}

/// Removes the joint content and fixes the denominator's sign.
void normalize_content(IntPoly& num, IntPoly& den) {
  if (num.empty()) {
    den = {BigInt(1)};
    return;
  }
  BigInt c = content(den);
  if (c != 1) {
    for (const auto& x : num) {
      mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
      if (c == 1) break;
    }
  }
  if (sgn(den.back()) < 0) c = -c;
  divexact_scalar(num, c);
  divexact_scalar(den, c);
}

void canonicalize(IntPoly& num, IntPoly& den) {
  trim(num);
  trim(den);
  if (den.empty()) throw std::invalid_argument("rational function with zero denominator");
  if (num.empty()) {
    den = {BigInt(1)};
    return;
  }
  if (den.size() > 1) {
    IntPoly g = gcd_primitive(num, den);
    if (!is_one(g)) {
      num = divexact(num, g);
      den = divexact(den, g);
    }
  }
  normalize_content(num, den);
}

BigRat eval_int_poly(const IntPoly& p, const BigRat& q) {
  // Horner on numerator/denominator separately to stay in integers.
  const BigInt& qn = q.get_num();
  const BigInt& qd = q.get_den();
  BigInt acc = 0;
  BigInt dpow = 1;
  for (std::size_t k = p.size(); k-- > 0;) {
    acc = acc * qn + p[k] * dpow;
    dpow *= qd;
  }
  // acc = sum p_k qn^k qd^(deg-k); value = acc / qd^deg
  BigInt scale = 1;
  if (!p.empty()) mpz_pow_ui(scale.get_mpz_t(), qd.get_mpz_t(), p.size() - 1);
  BigRat r(acc, scale);
  r.canonicalize();
  return r;
}

IntPoly reversed(const IntPoly& p, std::size_t length) {
  IntPoly r(length);
  for (std::size_t k = 0; k < p.size(); ++k) r[length - 1 - k] = p[k];
  trim(r);
  return r;
}

std::string term_string(const BigRat& c, int power, std::string_view var, bool first) {
  std::ostringstream os;
  BigRat mag = abs(c);
  if (first) {
    if (sgn(c) < 0) os << "-";
  } else {
    os << (sgn(c) < 0 ? " - " : " + ");
  }
  const bool unit = mag == 1;
  if (power == 0) {
    os << mag.get_str();
    return os.str();
  }
  if (!unit) os << mag.get_str() << "*";
  os << var;
  if (power != 1) os << "^" << power;
  return os.str();
}

std::string poly_string(const std::vector<BigRat>& coeffs, int min_exp, std::string_view var) {
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (sgn(coeffs[k]) == 0) continue;
    out += term_string(coeffs[k], min_exp + static_cast<int>(k), var, first);
    first = false;
  }
  return first ? "0" : out;
}

std::size_t nonzero_terms(const IntPoly& p) {
  return static_cast<std::size_t>(
      std::count_if(p.begin(), p.end(), [](const BigInt& c) { return sgn(c) != 0; }));
}

}  // namespace

// ---------------------------------------------------------------------------
// BigRat helpers

BigRat parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return std::invalid_argument("not a rational number: '" + s + "'"); };
  if (s.empty()) throw bad();
  auto valid_int = [](std::string_view t, bool allow_sign) {
    if (!t.empty() && allow_sign && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
    return !t.empty() && std::all_of(t.begin(), t.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
  };
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string ip = s.substr(0, dot);
    std::string fp = s.substr(dot + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) ip.erase(0, 1);
    if (ip.empty()) ip = "0";
    if (!valid_int(ip, false) || !valid_int(fp, false)) throw bad();
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    BigRat r(BigInt(ip + fp, 10), scale);
    r.canonicalize();
    return neg ? BigRat(-r) : r;
  }
  auto slash = s.find('/');
  std::string ns = s.substr(0, slash);
  std::string ds = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(ns, true) || !valid_int(ds, false)) throw bad();
  if (ns[0] == '+') ns.erase(0, 1);
  BigInt d(ds, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  BigRat r(BigInt(ns, 10), d);
  r.canonicalize();
  return r;
}

std::string to_string(const BigRat& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// AlphaPoly

AlphaPoly::AlphaPoly(long c) : AlphaPoly(BigRat(c)) {}

AlphaPoly::AlphaPoly(const BigRat& c) {
  if (sgn(c) != 0) coeffs_.push_back(c);
}

AlphaPoly::AlphaPoly(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

AlphaPoly::AlphaPoly(const IntPoly& coeffs) {
  coeffs_.reserve(coeffs.size());
  for (const auto& c : coeffs) coeffs_.emplace_back(c);
  trim();
}

AlphaPoly AlphaPoly::monomial(const BigRat& c, int power) {
  if (power < 0) throw std::invalid_argument("negative power in AlphaPoly::monomial");
  std::vector<BigRat> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return AlphaPoly(std::move(v));
}

AlphaPoly AlphaPoly::linear(const BigRat& c0, const BigRat& c1) { return AlphaPoly(std::vector<BigRat>{c0, c1}); }

void AlphaPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

int AlphaPoly::valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (sgn(coeffs_[k]) != 0) return static_cast<int>(k);
  return 0;
}

BigRat AlphaPoly::coeff(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

const BigRat& AlphaPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

BigRat AlphaPoly::eval(const BigRat& q) const {
  BigRat acc = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * q + coeffs_[k];
  return acc;
}

AlphaPoly& AlphaPoly::operator+=(const AlphaPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

AlphaPoly& AlphaPoly::operator-=(const AlphaPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

AlphaPoly& AlphaPoly::operator*=(const AlphaPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigRat> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(r);
  trim();
  return *this;
}

AlphaPoly AlphaPoly::operator-() const {
  AlphaPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::pair<AlphaPoly, AlphaPoly> AlphaPoly::divmod(const AlphaPoly& a, const AlphaPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<BigRat> r = a.coeffs_;
  const int db = b.degree();
  if (a.degree() < db) return {AlphaPoly(), a};
  std::vector<BigRat> q(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int k = a.degree() - db; k >= 0; --k) {
    BigRat f = r[static_cast<std::size_t>(k + db)] / b.leading();
    q[static_cast<std::size_t>(k)] = f;
    if (sgn(f) == 0) continue;
    for (int j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(k + j)] -= f * b.coeffs_[static_cast<std::size_t>(j)];
  }
  return {AlphaPoly(std::move(q)), AlphaPoly(std::move(r))};
}

bool AlphaPoly::has_integer_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRat& c) { return c.get_den() == 1; });
}

IntPoly AlphaPoly::to_int_poly() const {
  IntPoly r;
  r.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    if (c.get_den() != 1) throw std::domain_error("non-integer coefficient");
    r.push_back(c.get_num());
  }
  return r;
}

std::string AlphaPoly::to_string(std::string_view var) const { return poly_string(coeffs_, 0, var); }

AlphaPoly gcd(const AlphaPoly& a, const AlphaPoly& b) {
  AlphaPoly x = a, y = b;
  while (!y.is_zero()) {
    auto r = AlphaPoly::divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  std::vector<BigRat> monic = x.coeffs();
  const BigRat lc = monic.back();
  for (auto& c : monic) c /= lc;
  return AlphaPoly(std::move(monic));
}

// ---------------------------------------------------------------------------
// AlphaRational

namespace {

/// Scales a rational-coefficient polynomial to integers: returns (P, d) with
/// p = P / d.
std::pair<IntPoly, BigInt> clear_denominators(const AlphaPoly& p) {
  BigInt l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IntPoly r;
  r.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) r.push_back(c.get_num() * (l / c.get_den()));
  return {std::move(r), l};
}

}  // namespace

AlphaRational::AlphaRational(long c) : AlphaRational(BigRat(c)) {}

AlphaRational::AlphaRational(const BigRat& c) {
  if (sgn(c) != 0) {
    num_.push_back(c.get_num());
    den_.push_back(c.get_den());
  } else {
    den_.push_back(1);
  }
}

AlphaRational::AlphaRational(const AlphaPoly& p) {
  auto [n, d] = clear_denominators(p);
  num_ = std::move(n);
  den_ = {d};
  normalize_content(num_, den_);
}

AlphaRational::AlphaRational(const AlphaPoly& num, const AlphaPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("rational function with zero denominator");
  auto [n, dn] = clear_denominators(num);
  auto [d, dd] = clear_denominators(den);
  // num/den = (n/dn) / (d/dd) = (n*dd) / (d*dn)
  for (auto& x : n) x *= dd;
  for (auto& x : d) x *= dn;
  num_ = std::move(n);
  den_ = std::move(d);
  canonicalize(num_, den_);
}

AlphaRational AlphaRational::from_int_polys(IntPoly num, IntPoly den) {
  AlphaRational r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  canonicalize(r.num_, r.den_);
  return r;
}

AlphaRational AlphaRational::alpha_power(int k) {
  IntPoly mono(static_cast<std::size_t>(std::abs(k)) + 1);
  mono.back() = 1;
  AlphaRational r;
  if (k >= 0) {
    r.num_ = std::move(mono);
  } else {
    r.num_ = {BigInt(1)};
    r.den_ = std::move(mono);
  }
  return r;
}

BigRat AlphaRational::eval_at(const BigRat& q) const {
  BigRat d = eval_int_poly(den_, q);
  if (sgn(d) == 0) throw PoleError("pole at alpha = " + q.get_str());
  return eval_int_poly(num_, q) / d;
}

AlphaRational AlphaRational::substitute_reciprocal() const {
  if (is_zero()) return *this;
  // p(1/a) = rev(p)(a) / a^deg p
  const std::size_t dn = num_.size() - 1;
  const std::size_t dd = den_.size() - 1;
  IntPoly n = reversed(num_, num_.size());
  IntPoly d = reversed(den_, den_.size());
  if (dd > dn) n.insert(n.begin(), dd - dn, BigInt(0));
  if (dn > dd) d.insert(d.begin(), dn - dd, BigInt(0));
  return from_int_polys(std::move(n), std::move(d));
}

AlphaRational& AlphaRational::operator+=(const AlphaRational& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ = add(num_, o.num_);
    if (num_.empty()) {
      den_ = {BigInt(1)};
      return *this;
    }
    canonicalize(num_, den_);
    return *this;
  }
  if (den_.size() == 1 && o.den_.size() == 1) {
    // scalar denominators
    IntPoly n = add(mul(num_, o.den_), mul(o.num_, den_));
    IntPoly d = mul(den_, o.den_);
    num_ = std::move(n);
    den_ = std::move(d);
    normalize_content(num_, den_);
    if (num_.empty()) den_ = {BigInt(1)};
    return *this;
  }
  IntPoly g = gcd_primitive(den_, o.den_);
  IntPoly b1 = divexact(den_, g);
  IntPoly d1 = divexact(o.den_, g);
  IntPoly n = add(mul(num_, d1), mul(o.num_, b1));
  IntPoly d = mul(b1, o.den_);
  if (n.empty()) {
    num_.clear();
    den_ = {BigInt(1)};
    return *this;
  }
  if (g.size() > 1) {
    IntPoly h = gcd_primitive(n, g);
    if (!is_one(h)) {
      n = divexact(n, h);
      d = divexact(d, h);
    }
  }
  num_ = std::move(n);
  den_ = std::move(d);
  normalize_content(num_, den_);
  return *this;
}

AlphaRational& AlphaRational::operator-=(const AlphaRational& o) { return *this += -o; }

AlphaRational& AlphaRational::operator*=(const AlphaRational& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = o;
  IntPoly g1 = gcd_primitive(num_, o.den_);
  IntPoly g2 = gcd_primitive(o.num_, den_);
  IntPoly n = mul(divexact(num_, g1), divexact(o.num_, g2));
  IntPoly d = mul(divexact(den_, g2), divexact(o.den_, g1));
  num_ = std::move(n);
  den_ = std::move(d);
  normalize_content(num_, den_);
  return *this;
}

AlphaRational& AlphaRational::operator/=(const AlphaRational& o) { return *this *= o.inverse(); }

AlphaRational AlphaRational::inverse() const {
  if (is_zero()) throw std::invalid_argument("division by the zero rational function");
  AlphaRational r;
  r.num_ = den_;
  r.den_ = num_;
  if (sgn(r.den_.back()) < 0) {
    negate(r.num_);
    negate(r.den_);
  }
  return r;
}

AlphaRational AlphaRational::operator-() const {
  AlphaRational r = *this;
  negate(r.num_);
  return r;
}

std::string AlphaRational::to_string(std::string_view var) const {
  std::string n = numerator().to_string(var);
  if (is_one(den_)) return n;
  std::string d = denominator().to_string(var);
  if (nonzero_terms(num_) > 1) n = "(" + n + ")";
  if (nonzero_terms(den_) > 1 || (den_.size() > 1 && den_.back() != 1)) d = "(" + d + ")";
  return n + "/" + d;
}

AlphaRational rf_arith(const AlphaRational& a, const AlphaRational& b, RfOp op) {
  switch (op) {
    case RfOp::add: return a + b;
    case RfOp::sub: return a - b;
    case RfOp::mul: return a * b;
    case RfOp::div: return a / b;
  }
  throw std::invalid_argument("unknown operation");
}

BigRat eval_at(const AlphaRational& r, const BigRat& q) { return r.eval_at(q); }

// ---------------------------------------------------------------------------
// Laurent polynomials

AlphaRational AlphaLaurent::to_rational() const {
  AlphaRational r{AlphaPoly(coeffs)};
  return r * AlphaRational::alpha_power(min_exp);
}

std::string AlphaLaurent::to_string(std::string_view var) const { return poly_string(coeffs, min_exp, var); }

std::optional<AlphaLaurent> to_laurent(const AlphaRational& r) {
  if (r.is_zero()) return AlphaLaurent{};
  const IntPoly& den = r.den();
  for (std::size_t k = 0; k + 1 < den.size(); ++k)
    if (sgn(den[k]) != 0) return std::nullopt;
  const BigInt& scale = den.back();
  const IntPoly& num = r.num();
  std::size_t low = 0;
  while (sgn(num[low]) == 0) ++low;
  AlphaLaurent l;
  l.min_exp = static_cast<int>(low) - static_cast<int>(den.size() - 1);
  for (std::size_t k = low; k < num.size(); ++k) {
    BigRat c(num[k], scale);
    c.canonicalize();
    l.coeffs.push_back(std::move(c));
  }
  return l;
}

bool is_nonneg_integer_coeffs(const AlphaLaurent& l) {
  return std::all_of(l.coeffs.begin(), l.coeffs.end(),
                     [](const BigRat& c) { return sgn(c) >= 0 && c.get_den() == 1; });
}

}  // namespace sjack
