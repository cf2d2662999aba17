#pragma once

// Finite abelian groups Z_{n_1} + ... + Z_{n_r}, their subgroups, quotients
// and atoms.
//
// Elements are addressed by their index in the lexicographic order of the
// coordinate tuples (first coordinate most significant), so element 0 is the
// identity. Most of the library works on these indices; GroupElement is the
// coordinate view used at the API boundary.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "drg/error.hpp"

namespace drg {

using Elem = std::int32_t;
/// Sorted, duplicate-free list of element indices.
using ElementSet = std::vector<Elem>;

struct GroupElement {
  std::vector<int> coords;
  bool operator==(const GroupElement&) const = default;
};

class AbelianGroup {
 public:
  /// The trivial group.
  AbelianGroup();
  explicit AbelianGroup(std::vector<int> moduli);

  /// Parses a modulus list such as "6,3". An empty string is the trivial group.
  static AbelianGroup parse(std::string_view spec);

  const std::vector<int>& moduli() const;
  int rank() const;
  int order() const;
  int exponent() const;
  std::string to_string() const;

  Elem index_of(const GroupElement& g) const;
  GroupElement element(Elem x) const;
  int coord(Elem x, int i) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(long long k, Elem a) const;
  int order_of(Elem a) const;

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  int order_of(const GroupElement& a) const;

  /// e with chi_g(x) = zeta_m^e, m = exponent().
  int character_exponent(Elem g, Elem x) const;

  Elem parse_element(std::string_view text) const;
  std::string format_element(Elem x) const;
  /// Parses "1,0;2,0" into a sorted element set.
  ElementSet parse_set(std::string_view text) const;
  std::string format_set(std::span<const Elem> s) const;

  bool operator==(const AbelianGroup& o) const { return moduli() == o.moduli(); }

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
  void check(const GroupElement& g) const;
};

ElementSet normalized(ElementSet s);
bool contains(std::span<const Elem> sorted, Elem x);

struct Subgroup {
  AbelianGroup parent;
  ElementSet elements;
  std::vector<Elem> generators;

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(Elem x) const;
  bool operator==(const Subgroup& o) const { return elements == o.elements; }
};

Subgroup generated_subgroup(const AbelianGroup& g, std::span<const Elem> gens);
/// Every subgroup, ordered by (order, element list).
std::vector<Subgroup> all_subgroups(const AbelianGroup& g);
std::vector<Subgroup> subgroups_of_order(const AbelianGroup& g, int k);
bool is_subgroup(const AbelianGroup& g, std::span<const Elem> s);
/// Wraps a set that must be a subgroup; throws invalid_subgroup otherwise.
Subgroup as_subgroup(const AbelianGroup& g, ElementSet s);

/// A group isomorphic to some set of elements, with the isomorphism spelled
/// out: embedding[i] is the parent-side element of realized element i.
struct Realization {
  AbelianGroup group;
  std::vector<Elem> embedding;
};

Realization realize_subgroup(const Subgroup& h);

struct Quotient {
  AbelianGroup group;
  /// parent element -> quotient element
  std::vector<Elem> projection;
  /// quotient element -> smallest coset member in the parent
  std::vector<Elem> lift;
};

Quotient quotient_group(const AbelianGroup& g, const Subgroup& h);

/// Classes [g] = {x : <x> = <g>}, ordered by smallest member.
std::vector<ElementSet> atoms(const AbelianGroup& g);

}  // namespace drg
