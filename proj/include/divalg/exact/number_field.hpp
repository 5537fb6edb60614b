#pragma once

// Exact arithmetic in small towers of number fields  Q -> k -> L.
//
// A field is stored as a monic integer polynomial over its base.  Elements
// carry rational coordinates over the flattened power basis: for a tower
// Q -> k = Q(a) -> L = k(t) the coordinate of a^i t^j sits at index
// j * [k:Q] + i.  Coordinates over any ancestor field are therefore
// contiguous blocks of the flat vector.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "divalg/rational.hpp"

namespace divalg::exact {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr field, std::vector<Rational> coords);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  bool is_zero() const;
  bool is_one() const;
  /// True when the element lies in Q (all non-constant coordinates vanish).
  bool is_rational() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& other);
  FieldElement& operator-=(const FieldElement& other);
  FieldElement& operator*=(const FieldElement& other);
  FieldElement& operator/=(const FieldElement& other);
  FieldElement& operator*=(const Rational& scalar);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend FieldElement operator*(FieldElement a, const Rational& s) { return a *= s; }
  friend FieldElement operator*(const Rational& s, FieldElement a) { return a *= s; }

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  FieldElement inverse() const;
  /// Exponentiation by squaring; negative exponents invert first.
  FieldElement pow(long long exponent) const;

  std::string to_string() const;

 private:
  FieldPtr field_;
  std::vector<Rational> coords_;
};

/// Raw description of an extension, as read from a catalog.
struct FieldSpec {
  std::string label;
  FieldPtr base;  // nullptr means an extension of Q
  std::vector<Integer> defining_polynomial;  // constant term first, monic
  std::vector<std::vector<Rational>> automorphisms;  // images of the generator, flat coordinates
  int torsion_order = 2;
  std::optional<std::vector<Rational>> torsion_generator;
};

class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  /// The shared field of rational numbers, label "Q".
  static FieldPtr rationals();

  /// Builds and validates an extension; throws CatalogError on invalid data.
  static FieldPtr create(const FieldSpec& spec);

  const std::string& label() const { return label_; }
  const FieldPtr& base() const { return base_; }
  bool is_rationals() const { return base_ == nullptr; }
  int degree() const { return degree_; }
  int absolute_degree() const { return absolute_degree_; }
  const std::vector<Integer>& defining_polynomial() const { return defining_; }

  std::size_t automorphism_count() const { return automorphism_images_.size(); }
  FieldElement automorphism_image(std::size_t index) const;
  /// Applies a base-fixing automorphism from the catalog list.
  FieldElement apply_automorphism(std::size_t index, const FieldElement& x) const;

  int torsion_order() const { return torsion_order_; }
  /// A fixed primitive root of unity of order torsion_order().
  FieldElement torsion_generator() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_rational(const Rational& q) const;
  FieldElement from_coords(std::vector<Rational> coords) const;
  /// The flat basis element with index `index`.
  FieldElement basis_element(std::size_t index) const;
  /// The generator of this field over its base (0 for Q).
  FieldElement generator() const;

  /// True if `other` is this field or one of the fields below it in the tower.
  bool has_ancestor(const NumberField& other) const;
  /// Ancestor chain from this field down to Q (inclusive).
  std::vector<FieldPtr> tower() const;

  // Internal: multiplication via integer structure constants of the flat basis.
  void multiply(const std::vector<Rational>& x, const std::vector<Rational>& y,
                std::vector<Rational>& out) const;

 private:
  struct Term {
    int index;
    Integer coefficient;
  };

  NumberField() = default;
  void build_structure_constants();
  void build_automorphisms(const std::vector<std::vector<Rational>>& images);

  std::string label_;
  FieldPtr base_;
  std::vector<Integer> defining_;
  int degree_ = 1;
  int absolute_degree_ = 1;
  std::vector<std::vector<Term>> structure_;  // (a * D + b) -> product terms
  std::vector<std::vector<Rational>> automorphism_images_;
  std::vector<std::vector<Rational>> automorphism_matrices_;  // row-major D x D
  int torsion_order_ = 2;
  std::vector<Rational> torsion_coords_;

  friend void validate_field(NumberField& field, const FieldSpec& spec);
};

// Tower helpers ------------------------------------------------------------

/// Coordinates of x over an ancestor field, as elements of that ancestor.
std::vector<FieldElement> coords_over(const FieldElement& x, const FieldPtr& ancestor);
FieldElement from_coords_over(const FieldPtr& field, const std::vector<FieldElement>& blocks);
/// Canonical inclusion of an ancestor element into `field`.
FieldElement embed(const FieldElement& x, const FieldPtr& field);
bool lies_in(const FieldElement& x, const NumberField& ancestor);
/// Restriction of an element known to lie in `ancestor`; throws FieldMismatch otherwise.
FieldElement restrict_to(const FieldElement& x, const FieldPtr& ancestor);
/// Degree [field : ancestor].
int relative_degree(const NumberField& field, const NumberField& ancestor);

void require_same_field(const FieldElement& a, const FieldElement& b);

}  // namespace divalg::exact
