#pragma once

// Cyclic algebras (K/k, sigma, a) of degree n: elements sum c_i z^i with c_i in K,
// z c = sigma(c) z and z^n = a.

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "divalg/exact/number_field.hpp"

namespace divalg::csa {

using exact::FieldElement;
using exact::FieldPtr;

struct DivisionCertificate {
  bool certified = false;
  std::string citation;
};

struct AlgebraSpec {
  std::string label;
  FieldPtr base;
  FieldPtr splitting;
  std::size_t sigma_index = 1;
  FieldElement a;
  int degree = 0;
  DivisionCertificate division;
};

class CyclicAlgebra;
using AlgebraPtr = std::shared_ptr<const CyclicAlgebra>;

class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(AlgebraPtr algebra, std::vector<FieldElement> coords);

  const AlgebraPtr& algebra() const { return algebra_; }
  /// Coefficient of z^i, an element of K.
  const std::vector<FieldElement>& coords() const { return coords_; }
  const FieldElement& operator[](std::size_t i) const { return coords_[i]; }

  bool is_zero() const;
  bool is_one() const;
  /// Flat rational coordinates, z-power major.
  std::vector<Rational> flat() const;

  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  friend AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) { return x += y; }
  friend AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y) { return x -= y; }
  friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);
  /// Multiplication by a scalar of the base field k.
  friend AlgebraElement operator*(const FieldElement& c, const AlgebraElement& x);
  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y);
  friend bool operator!=(const AlgebraElement& x, const AlgebraElement& y) { return !(x == y); }

  AlgebraElement pow(long long e) const;
  std::string to_string() const;

 private:
  AlgebraPtr algebra_;
  std::vector<FieldElement> coords_;
};

class CyclicAlgebra : public std::enable_shared_from_this<CyclicAlgebra> {
 public:
  /// Validates degree, the order of sigma and a != 0.  Throws CatalogError.
  static AlgebraPtr create(const AlgebraSpec& spec);

  const std::string& label() const { return spec_.label; }
  const FieldPtr& base() const { return spec_.base; }
  const FieldPtr& splitting() const { return spec_.splitting; }
  int degree() const { return spec_.degree; }
  const FieldElement& a() const { return spec_.a; }
  std::size_t sigma_index() const { return spec_.sigma_index; }
  const DivisionCertificate& division() const { return spec_.division; }
  /// Dimension over Q.
  int flat_dimension() const { return spec_.degree * spec_.splitting->absolute_degree(); }

  /// sigma^r applied to an element of K.
  FieldElement sigma_power(int r, const FieldElement& c) const;

  AlgebraElement zero() const;
  AlgebraElement one() const;
  AlgebraElement scalar(const FieldElement& c) const;  // c in k
  AlgebraElement from_K(const FieldElement& c) const;  // c in K, z^0 term
  AlgebraElement z() const;
  AlgebraElement from_coords(std::vector<FieldElement> coords) const;
  AlgebraElement from_flat(const std::vector<Rational>& flat) const;
  /// Uniform integer coordinates in [-9, 9], never zero.
  AlgebraElement random_element(std::mt19937_64& rng) const;

 private:
  explicit CyclicAlgebra(AlgebraSpec spec) : spec_(std::move(spec)) {}
  AlgebraSpec spec_;
  std::vector<std::size_t> sigma_powers_;  // index of sigma^r in K's automorphism list
  FieldElement a_in_K_;

  friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);
};

using Matrix = std::vector<std::vector<FieldElement>>;

/// The standard splitting representation over K.
Matrix embed_matrix(const AlgebraElement& x);
/// Determinant of embed_matrix(x), as an element of k.
FieldElement reduced_norm(const AlgebraElement& x);
AlgebraElement inverse(const AlgebraElement& x);

/// Determinant over K (cofactor expansion for n <= 3, elimination above).
FieldElement determinant(Matrix m);

void require_same_algebra(const AlgebraElement& x, const AlgebraElement& y);

}  // namespace divalg::csa
