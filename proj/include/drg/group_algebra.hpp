#pragma once

// The integer group algebra Z G of a finite abelian group.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "drg/abelian.hpp"
#include "drg/cyclotomic.hpp"

namespace drg {

class AlgebraElement {
 public:
  explicit AlgebraElement(AbelianGroup g);
  AlgebraElement(AbelianGroup g, std::vector<std::int64_t> coeffs);

  static AlgebraElement from_subset(const AbelianGroup& g, std::span<const Elem> s);
  /// The unit e of the algebra.
  static AlgebraElement identity(const AbelianGroup& g);

  const AbelianGroup& group() const { return g_; }
  const std::vector<std::int64_t>& coeffs() const { return c_; }
  std::int64_t operator[](Elem x) const { return c_[x]; }
  std::int64_t& operator[](Elem x) { return c_[x]; }

  /// Elements with nonzero coefficient, ascending.
  ElementSet support() const;
  bool is_zero() const;
  /// c when this equals c * (sum of all group elements).
  std::optional<std::int64_t> multiple_of_group() const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(std::int64_t s);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(std::int64_t s, AlgebraElement a) { return a *= s; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  bool operator==(const AlgebraElement& o) const { return g_ == o.g_ && c_ == o.c_; }

  /// Sparse "coeff*element" terms, e.g. "2*(0,0) + 1*(1,0)".
  std::string to_string() const;

 private:
  AbelianGroup g_;
  std::vector<std::int64_t> c_;
};

AlgebraElement convolve(const AlgebraElement& a, const AlgebraElement& b);
/// Same product computed pointwise in the character domain and inverted.
AlgebraElement convolve_via_characters(const AlgebraElement& a, const AlgebraElement& b);
/// Transports each coefficient from g to m*g.
AlgebraElement involute(const AlgebraElement& k, long long m);

/// chi_g(x) as an element of Z[zeta_m], m = exponent of the group.
CycInt character_value(const AbelianGroup& g, Elem chi, Elem x);
CycInt apply_character(Elem chi, const AlgebraElement& k);
/// chi_g(k) for every g, indexed by g.
std::vector<CycInt> character_transform(const AlgebraElement& k);
/// Inverse of character_transform; throws not_a_group_algebra_element if the
/// values do not come from an integral element.
AlgebraElement fourier_inverse(const AbelianGroup& g, std::span<const CycInt> values);

/// f(D) by Horner's rule; f lists coefficients from the highest degree down.
AlgebraElement polynomial_eval(std::span<const std::int64_t> f, const AlgebraElement& d);

}  // namespace drg
