#pragma once

// Exact elements of Z[zeta_m], zeta_m = exp(2 pi i / m), stored in the power
// basis 1, zeta, ..., zeta^(phi(m)-1) modulo the m-th cyclotomic polynomial.

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace drg {

/// Coefficients of Phi_m, constant term first.
std::vector<std::int64_t> cyclotomic_polynomial(int m);
int euler_phi(int m);

class CycInt {
 public:
  struct Field;

  /// Zero of Z[zeta_1] = Z.
  CycInt();
  /// The rational integer v inside Z[zeta_m].
  CycInt(int m, std::int64_t v);

  static CycInt root(int m, long long e);
  /// sum_e counts[e] * zeta_m^e, counts.size() == m.
  static CycInt from_exponent_counts(int m, std::span<const std::int64_t> counts);

  int conductor() const;
  const std::vector<std::int64_t>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational_integer() const;
  /// Constant coefficient; meaningful when is_rational_integer().
  std::int64_t rational_value() const;

  /// Re-expresses the value in Z[zeta_M]; M must be a multiple of conductor().
  CycInt lift(int M) const;
  /// The Galois automorphism zeta -> zeta^u, gcd(u, m) = 1.
  CycInt galois(long long u) const;
  /// Complex conjugate (galois(-1)).
  CycInt conj() const { return galois(-1); }

  std::complex<long double> numeric() const;

  /// True when every coordinate is divisible by d.
  bool divisible_by(std::int64_t d) const;
  CycInt exact_div(std::int64_t d) const;

  CycInt operator-() const;
  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt& operator*=(std::int64_t s);
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(CycInt a, std::int64_t s) { return a *= s; }
  friend CycInt operator*(std::int64_t s, CycInt a) { return a *= s; }
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  CycInt pow(int e) const;

  /// Exact equality; values of different conductors are compared after lifting.
  friend bool operator==(const CycInt& a, const CycInt& b);
  /// Arbitrary total order for containers (conductor, then coefficients).
  friend bool operator<(const CycInt& a, const CycInt& b);

  /// e.g. "-1 - z^2 - z^3 [m=5]", or just "4" for rational integers.
  std::string to_string() const;

 private:
  std::shared_ptr<const Field> f_;
  std::vector<std::int64_t> c_;
  explicit CycInt(std::shared_ptr<const Field> f);
  static std::shared_ptr<const Field> field(int m);
};

/// Brings two values to the lcm of their conductors.
std::pair<CycInt, CycInt> common_conductor(const CycInt& a, const CycInt& b);

}  // namespace drg
