#include "drg/group_algebra.hpp"

#include "drg/numtheory.hpp"

namespace drg {

namespace {

void same_group(const AlgebraElement& a, const AlgebraElement& b) {
  if (!(a.group() == b.group())) throw Error(ErrorCode::group_mismatch, "algebra elements over different groups");
}

}  // namespace

AlgebraElement::AlgebraElement(AbelianGroup g) : g_(std::move(g)), c_(g_.order(), 0) {}

AlgebraElement::AlgebraElement(AbelianGroup g, std::vector<std::int64_t> coeffs)
    : g_(std::move(g)), c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) != g_.order())
    throw Error(ErrorCode::group_mismatch, "coefficient vector length differs from group order");
}

AlgebraElement AlgebraElement::from_subset(const AbelianGroup& g, std::span<const Elem> s) {
  AlgebraElement r(g);
  for (Elem x : s) {
    if (x < 0 || x >= g.order()) throw Error(ErrorCode::invalid_element, "subset element outside the group");
    r.c_[x] = 1;
  }
  return r;
}

AlgebraElement AlgebraElement::identity(const AbelianGroup& g) {
  AlgebraElement r(g);
  r.c_[0] = 1;
  return r;
}

ElementSet AlgebraElement::support() const {
  ElementSet out;
  for (Elem x = 0; x < static_cast<Elem>(c_.size()); ++x)
    if (c_[x]) out.push_back(x);
  return out;
}

bool AlgebraElement::is_zero() const {
  for (auto v : c_)
    if (v) return false;
  return true;
}

std::optional<std::int64_t> AlgebraElement::multiple_of_group() const {
  for (auto v : c_)
    if (v != c_[0]) return std::nullopt;
  return c_[0];
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  same_group(*this, o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  same_group(*this, o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], checked_mul(-1, o.c_[i]));
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(std::int64_t s) {
  for (auto& v : c_) v = checked_mul(v, s);
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return convolve(a, b); }

std::string AlgebraElement::to_string() const {
  std::string out;
  for (Elem x = 0; x < static_cast<Elem>(c_.size()); ++x) {
    if (!c_[x]) continue;
    if (!out.empty()) out += " + ";
    out += std::to_string(c_[x]) + "*(" + g_.format_element(x) + ")";
  }
  return out.empty() ? "0" : out;
}

AlgebraElement convolve(const AlgebraElement& a, const AlgebraElement& b) {
  same_group(a, b);
  const AbelianGroup& g = a.group();
  AlgebraElement r(g);
  ElementSet sa = a.support(), sb = b.support();
  for (Elem x : sa)
    for (Elem y : sb) {
      Elem z = g.add(x, y);
      r[z] = checked_add(r[z], checked_mul(a[x], b[y]));
    }
  return r;
}

AlgebraElement convolve_via_characters(const AlgebraElement& a, const AlgebraElement& b) {
  same_group(a, b);
  std::vector<CycInt> ta = character_transform(a), tb = character_transform(b);
  for (size_t i = 0; i < ta.size(); ++i) ta[i] = ta[i] * tb[i];
  return fourier_inverse(a.group(), ta);
}

AlgebraElement involute(const AlgebraElement& k, long long m) {
  const AbelianGroup& g = k.group();
  AlgebraElement r(g);
  for (Elem x : k.support()) {
    Elem y = g.mul(m, x);
    r[y] = checked_add(r[y], k[x]);
  }
  return r;
}

CycInt character_value(const AbelianGroup& g, Elem chi, Elem x) {
  return CycInt::root(g.exponent(), g.character_exponent(chi, x));
}

CycInt apply_character(Elem chi, const AlgebraElement& k) {
  const AbelianGroup& g = k.group();
  if (chi < 0 || chi >= g.order()) throw Error(ErrorCode::invalid_element, "character index outside the group");
  std::vector<std::int64_t> counts(g.exponent(), 0);
  for (Elem x : k.support()) {
    auto& slot = counts[g.character_exponent(chi, x)];
    slot = checked_add(slot, k[x]);
  }
  return CycInt::from_exponent_counts(g.exponent(), counts);
}

std::vector<CycInt> character_transform(const AlgebraElement& k) {
  std::vector<CycInt> out;
  out.reserve(k.group().order());
  for (Elem chi = 0; chi < k.group().order(); ++chi) out.push_back(apply_character(chi, k));
  return out;
}

AlgebraElement fourier_inverse(const AbelianGroup& g, std::span<const CycInt> values) {
  if (static_cast<int>(values.size()) != g.order())
    throw Error(ErrorCode::group_mismatch, "need one character value per group element");
  const int m = g.exponent();
  std::vector<CycInt> lifted;
  lifted.reserve(values.size());
  for (const CycInt& v : values) lifted.push_back(v.lift(m));
  AlgebraElement r(g);
  std::vector<std::int64_t> counts(m);
  for (Elem x = 0; x < g.order(); ++x) {
    std::fill(counts.begin(), counts.end(), 0);
    // sum_h value(h) * chi_h(-x)
    for (Elem h = 0; h < g.order(); ++h) {
      const auto& c = lifted[h].coeffs();
      int e = g.character_exponent(h, x);
      for (size_t i = 0; i < c.size(); ++i) {
        if (!c[i]) continue;
        auto& slot = counts[mod(static_cast<long long>(i) - e, m)];
        slot = checked_add(slot, c[i]);
      }
    }
    CycInt s = CycInt::from_exponent_counts(m, counts);
    if (!s.is_rational_integer() || s.rational_value() % g.order() != 0)
      throw Error(ErrorCode::not_a_group_algebra_element,
                  "character values do not invert to an integral element at " + g.format_element(x));
    r[x] = s.rational_value() / g.order();
  }
  return r;
}

AlgebraElement polynomial_eval(std::span<const std::int64_t> f, const AlgebraElement& d) {
  if (f.size() < 2) throw Error(ErrorCode::precondition, "polynomial must have degree at least 1");
  const AbelianGroup& g = d.group();
  AlgebraElement e = AlgebraElement::identity(g);
  AlgebraElement r = f[0] * e;
  for (size_t i = 1; i < f.size(); ++i) r = convolve(r, d) + f[i] * e;
  return r;
}

}  // namespace drg
