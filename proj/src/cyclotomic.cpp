#include "drg/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

#include "drg/error.hpp"
#include "drg/numtheory.hpp"

namespace drg {

std::vector<std::int64_t> cyclotomic_polynomial(int m) {
  if (m < 1) throw Error(ErrorCode::precondition, "cyclotomic polynomial needs m >= 1");
  // x^m - 1 divided by Phi_d for every proper divisor d
  std::vector<std::int64_t> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d) continue;
    std::vector<std::int64_t> den = cyclotomic_polynomial(d);
    const int dn = static_cast<int>(num.size()) - 1;
    const int dd = static_cast<int>(den.size()) - 1;
    std::vector<std::int64_t> q(dn - dd + 1, 0);
    for (int i = dn; i >= dd; --i) {
      std::int64_t t = num[i];  // den is monic
      q[i - dd] = t;
      if (t == 0) continue;
      for (int j = 0; j <= dd; ++j) num[i - dd + j] = checked_add(num[i - dd + j], -checked_mul(t, den[j]));
    }
    for (int i = 0; i < dd; ++i)
      if (num[i] != 0) bug_trap("cyclotomic division left a remainder");
    num = std::move(q);
  }
  return num;
}

int euler_phi(int m) {
  int r = m;
  for (long long p : prime_factors(m)) r = r / static_cast<int>(p) * (static_cast<int>(p) - 1);
  return r;
}

struct CycInt::Field {
  int m = 1;
  int phi = 1;
  // table[k] = power-basis coordinates of zeta^k, 0 <= k < m
  std::vector<std::vector<std::int64_t>> table;
  std::vector<std::complex<long double>> powers;
};

std::shared_ptr<const CycInt::Field> CycInt::field(int m) {
  if (m < 1) throw Error(ErrorCode::conductor_mismatch, "conductor must be positive");
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<Field>();
  f->m = m;
  std::vector<std::int64_t> poly = cyclotomic_polynomial(m);
  f->phi = static_cast<int>(poly.size()) - 1;
  f->table.assign(m, std::vector<std::int64_t>(f->phi, 0));
  std::vector<std::int64_t> cur(f->phi, 0);
  cur[0] = 1;
  for (int k = 0; k < m; ++k) {
    f->table[k] = cur;
    // multiply by zeta and fold x^phi back with the monic relation
    std::int64_t top = cur[f->phi - 1];
    for (int i = f->phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (int i = 0; i < f->phi; ++i) cur[i] -= top * poly[i];
  }
  const long double two_pi = 2 * std::numbers::pi_v<long double>;
  for (int k = 0; k < m; ++k)
    f->powers.emplace_back(std::cos(two_pi * k / m), std::sin(two_pi * k / m));
  cache.emplace(m, f);
  return f;
}

CycInt::CycInt(std::shared_ptr<const Field> f) : f_(std::move(f)), c_(f_->phi, 0) {}

CycInt::CycInt() : CycInt(field(1)) {}

CycInt::CycInt(int m, std::int64_t v) : CycInt(field(m)) { c_[0] = v; }

CycInt CycInt::root(int m, long long e) {
  CycInt r(field(m));
  r.c_ = r.f_->table[mod(e, m)];
  return r;
}

CycInt CycInt::from_exponent_counts(int m, std::span<const std::int64_t> counts) {
  CycInt r(field(m));
  if (static_cast<int>(counts.size()) != m) throw Error(ErrorCode::conductor_mismatch, "count vector length != m");
  const int phi = r.f_->phi;
  for (int e = 0; e < m; ++e) {
    std::int64_t n = counts[e];
    if (n == 0) continue;
    const auto& row = r.f_->table[e];
    for (int i = 0; i < phi; ++i)
      if (row[i]) r.c_[i] = checked_add(r.c_[i], checked_mul(n, row[i]));
  }
  return r;
}

int CycInt::conductor() const { return f_->m; }

bool CycInt::is_zero() const {
  for (auto v : c_)
    if (v) return false;
  return true;
}

bool CycInt::is_rational_integer() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i]) return false;
  return true;
}

std::int64_t CycInt::rational_value() const { return c_[0]; }

CycInt CycInt::lift(int M) const {
  const int m = conductor();
  if (M == m) return *this;
  if (M < 1 || M % m != 0)
    throw Error(ErrorCode::conductor_mismatch,
                "cannot lift conductor " + std::to_string(m) + " to " + std::to_string(M));
  std::vector<std::int64_t> counts(M, 0);
  const int step = M / m;
  for (size_t i = 0; i < c_.size(); ++i) counts[i * step] = c_[i];
  return from_exponent_counts(M, counts);
}

CycInt CycInt::galois(long long u) const {
  const int m = conductor();
  if (std::gcd(mod(u, m), static_cast<long long>(m)) != 1 && m > 1)
    throw Error(ErrorCode::precondition, "galois multiplier must be a unit");
  std::vector<std::int64_t> counts(m, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    auto& slot = counts[mod(u * static_cast<long long>(i), m)];
    slot = checked_add(slot, c_[i]);
  }
  return from_exponent_counts(m, counts);
}

std::complex<long double> CycInt::numeric() const {
  std::complex<long double> s = 0;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i]) s += static_cast<long double>(c_[i]) * f_->powers[i];
  return s;
}

bool CycInt::divisible_by(std::int64_t d) const {
  if (d == 0) return is_zero();
  for (auto v : c_)
    if (v % d) return false;
  return true;
}

CycInt CycInt::exact_div(std::int64_t d) const {
  if (d == 0 || !divisible_by(d)) throw Error(ErrorCode::precondition, "inexact cyclotomic division");
  CycInt r(*this);
  for (auto& v : r.c_) v /= d;
  return r;
}

CycInt CycInt::operator-() const {
  CycInt r(*this);
  for (auto& v : r.c_) v = checked_mul(v, -1);
  return r;
}

CycInt& CycInt::operator+=(const CycInt& o) {
  if (conductor() != o.conductor()) {
    auto [a, b] = common_conductor(*this, o);
    *this = a;
    return *this += b;
  }
  for (size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) { return *this += -o; }

CycInt& CycInt::operator*=(std::int64_t s) {
  for (auto& v : c_) v = checked_mul(v, s);
  return *this;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  if (a.conductor() != b.conductor()) {
    auto [x, y] = common_conductor(a, b);
    return x * y;
  }
  const int m = a.conductor();
  const int phi = a.f_->phi;
  std::vector<std::int64_t> counts(m, 0);
  for (int i = 0; i < phi; ++i) {
    if (!a.c_[i]) continue;
    for (int j = 0; j < phi; ++j) {
      if (!b.c_[j]) continue;
      auto& slot = counts[(i + j) % m];
      slot = checked_add(slot, checked_mul(a.c_[i], b.c_[j]));
    }
  }
  return CycInt::from_exponent_counts(m, counts);
}

CycInt CycInt::pow(int e) const {
  if (e < 0) throw Error(ErrorCode::precondition, "negative power of a cyclotomic integer");
  CycInt r(conductor(), 1);
  CycInt base = *this;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

bool operator==(const CycInt& a, const CycInt& b) {
  if (a.conductor() == b.conductor()) return a.c_ == b.c_;
  auto [x, y] = common_conductor(a, b);
  return x.c_ == y.c_;
}

bool operator<(const CycInt& a, const CycInt& b) {
  if (a.conductor() != b.conductor()) return a.conductor() < b.conductor();
  return a.c_ < b.c_;
}

std::string CycInt::to_string() const {
  if (is_rational_integer()) return std::to_string(c_[0]);
  std::string out;
  for (size_t i = 0; i < c_.size(); ++i) {
    std::int64_t v = c_[i];
    if (!v) continue;
    std::int64_t a = v < 0 ? -v : v;
    if (out.empty())
      out += v < 0 ? "-" : "";
    else
      out += v < 0 ? " - " : " + ";
    if (i == 0) {
      out += std::to_string(a);
      continue;
    }
    if (a != 1) out += std::to_string(a) + "*";
    out += i == 1 ? std::string("z") : "z^" + std::to_string(i);
  }
  return out + " [m=" + std::to_string(conductor()) + "]";
}

std::pair<CycInt, CycInt> common_conductor(const CycInt& a, const CycInt& b) {
  int M = std::lcm(a.conductor(), b.conductor());
  return {a.lift(M), b.lift(M)};
}

}  // namespace drg
