#include "divalg/csa/cyclic_algebra.hpp"

#include <sstream>

#include "divalg/error.hpp"
#include "divalg/exact/linear_algebra.hpp"

namespace divalg::csa {

using exact::NumberField;

// AlgebraElement -------------------------------------------------------------

AlgebraElement::AlgebraElement(AlgebraPtr algebra, std::vector<FieldElement> coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  if (!algebra_) fail(ErrorCode::AlgebraMismatch, "element without an algebra");
  if (static_cast<int>(coords_.size()) != algebra_->degree()) {
    fail(ErrorCode::AlgebraMismatch, "expected " + std::to_string(algebra_->degree()) + " coordinates");
  }
  for (const auto& c : coords_) {
    if (c.field() != algebra_->splitting()) fail(ErrorCode::FieldMismatch, "coordinate outside " + algebra_->splitting()->label());
  }
}

void require_same_algebra(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.algebra() != y.algebra()) fail(ErrorCode::AlgebraMismatch, "elements of different algebras");
}

bool AlgebraElement::is_zero() const {
  for (const auto& c : coords_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool AlgebraElement::is_one() const {
  if (!coords_[0].is_one()) return false;
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (!coords_[i].is_zero()) return false;
  }
  return true;
}

std::vector<Rational> AlgebraElement::flat() const {
  std::vector<Rational> out;
  out.reserve(algebra_->flat_dimension());
  for (const auto& c : coords_) out.insert(out.end(), c.coords().begin(), c.coords().end());
  return out;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  require_same_algebra(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  require_same_algebra(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_algebra(x, y);
  const CyclicAlgebra& alg = *x.algebra_;
  const int n = alg.degree();
  std::vector<FieldElement> out(n, alg.splitting()->zero());
  for (int i = 0; i < n; ++i) {
    if (x.coords_[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (y.coords_[j].is_zero()) continue;
      FieldElement term = x.coords_[i] * alg.sigma_power(i, y.coords_[j]);
      if (i + j >= n) {
        out[i + j - n] += term * alg.a_in_K_;
      } else {
        out[i + j] += term;
      }
    }
  }
  return AlgebraElement(x.algebra_, std::move(out));
}

AlgebraElement operator*(const FieldElement& c, const AlgebraElement& x) {
  FieldElement ck = exact::embed(c, x.algebra_->splitting());
  AlgebraElement out = x;
  for (auto& v : out.coords_) v = ck * v;
  return out;
}

bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
  return x.algebra_ == y.algebra_ && x.coords_ == y.coords_;
}

AlgebraElement AlgebraElement::pow(long long e) const {
  AlgebraElement base = e < 0 ? inverse(*this) : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  AlgebraElement result = algebra_->one();
  while (k != 0) {
    if (k & 1ULL) result = result * base;
    k >>= 1;
    if (k != 0) base = base * base;
  }
  return result;
}

std::string AlgebraElement::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out << "; ";
    out << coords_[i].to_string();
  }
  out << ")";
  return out.str();
}

// CyclicAlgebra --------------------------------------------------------------

AlgebraPtr CyclicAlgebra::create(const AlgebraSpec& spec) {
  auto bad = [&](const std::string& msg) { fail(ErrorCode::CatalogError, spec.label + ": " + msg); };
  if (!spec.base || !spec.splitting) bad("missing fields");
  if (spec.splitting->base() != spec.base) bad("splitting field must be a direct extension of the base field");
  if (spec.degree != spec.splitting->degree()) bad("degree does not match [K:k]");
  if (spec.degree < 2) bad("degree must be at least 2");
  if (spec.a.field() != spec.base || spec.a.is_zero()) bad("parameter a must be a nonzero element of the base field");
  if (spec.sigma_index >= spec.splitting->automorphism_count()) bad("sigma_index out of range");

  auto alg = std::shared_ptr<CyclicAlgebra>(new CyclicAlgebra(spec));
  const auto& K = spec.splitting;
  const FieldElement theta = K->generator();
  // Locate sigma^r in the automorphism list by the image of the generator.
  FieldElement image = theta;
  for (int r = 0; r < spec.degree; ++r) {
    if (r > 0 && image == theta) bad("sigma has order smaller than the degree");
    std::size_t found = K->automorphism_count();
    for (std::size_t idx = 0; idx < K->automorphism_count(); ++idx) {
      if (K->automorphism_image(idx) == image) found = idx;
    }
    if (found == K->automorphism_count()) bad("powers of sigma are missing from the automorphism list");
    alg->sigma_powers_.push_back(found);
    image = K->apply_automorphism(spec.sigma_index, image);
  }
  if (image != theta) bad("sigma^n is not the identity");
  alg->a_in_K_ = exact::embed(spec.a, K);
  return alg;
}

FieldElement CyclicAlgebra::sigma_power(int r, const FieldElement& c) const {
  const int n = degree();
  r %= n;
  if (r < 0) r += n;
  if (r == 0) return c;
  return spec_.splitting->apply_automorphism(sigma_powers_[r], c);
}

AlgebraElement CyclicAlgebra::zero() const {
  return AlgebraElement(shared_from_this(), std::vector<FieldElement>(degree(), splitting()->zero()));
}

AlgebraElement CyclicAlgebra::one() const { return from_K(splitting()->one()); }

AlgebraElement CyclicAlgebra::scalar(const FieldElement& c) const { return from_K(exact::embed(c, splitting())); }

AlgebraElement CyclicAlgebra::from_K(const FieldElement& c) const {
  std::vector<FieldElement> coords(degree(), splitting()->zero());
  coords[0] = c;
  return AlgebraElement(shared_from_this(), std::move(coords));
}

AlgebraElement CyclicAlgebra::z() const {
  std::vector<FieldElement> coords(degree(), splitting()->zero());
  coords[1] = splitting()->one();
  return AlgebraElement(shared_from_this(), std::move(coords));
}

AlgebraElement CyclicAlgebra::from_coords(std::vector<FieldElement> coords) const {
  return AlgebraElement(shared_from_this(), std::move(coords));
}

AlgebraElement CyclicAlgebra::from_flat(const std::vector<Rational>& flat) const {
  const int d = splitting()->absolute_degree();
  if (static_cast<int>(flat.size()) != flat_dimension()) {
    fail(ErrorCode::ParseError, label() + " expects " + std::to_string(flat_dimension()) + " coordinates, got " +
                                    std::to_string(flat.size()));
  }
  std::vector<FieldElement> coords;
  for (int i = 0; i < degree(); ++i) {
    coords.push_back(splitting()->from_coords(std::vector<Rational>(flat.begin() + i * d, flat.begin() + (i + 1) * d)));
  }
  return AlgebraElement(shared_from_this(), std::move(coords));
}

AlgebraElement CyclicAlgebra::random_element(std::mt19937_64& rng) const {
  std::uniform_int_distribution<int> dist(-9, 9);
  while (true) {
    std::vector<Rational> flat(flat_dimension());
    for (auto& v : flat) v = dist(rng);
    auto x = from_flat(flat);
    if (!x.is_zero()) return x;
  }
}

// Matrices, norm, inverse ------------------------------------------------------

Matrix embed_matrix(const AlgebraElement& x) {
  const CyclicAlgebra& alg = *x.algebra();
  const int n = alg.degree();
  const auto& K = alg.splitting();
  const FieldElement a = exact::embed(alg.a(), K);
  Matrix m(n, std::vector<FieldElement>(n, K->zero()));
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i < n; ++i) {
      FieldElement v = alg.sigma_power(r, x[i]);
      if (r + i >= n) v *= a;
      m[r][(r + i) % n] = std::move(v);
    }
  }
  return m;
}

FieldElement determinant(Matrix m) {
  const int n = static_cast<int>(m.size());
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (n == 3) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }
  FieldElement det = m[0][0].field()->one();
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return m[0][0].field()->zero();
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const FieldElement inv = m[col][col].inverse();
    for (int r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const FieldElement f = m[r][col] * inv;
      for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

FieldElement reduced_norm(const AlgebraElement& x) {
  FieldElement det = determinant(embed_matrix(x));
  const auto& k = x.algebra()->base();
  if (!exact::lies_in(det, *k)) {
    fail(ErrorCode::ResultNotInBaseField, "reduced norm " + det.to_string() + " is not in " + k->label());
  }
  return exact::restrict_to(det, k);
}

AlgebraElement inverse(const AlgebraElement& x) {
  const CyclicAlgebra& alg = *x.algebra();
  if (x.is_zero()) fail(ErrorCode::NotInvertible, "zero is not invertible");
  const int dim = alg.flat_dimension();
  exact::RationalMatrix m(dim, dim);
  std::vector<Rational> basis(dim, Rational(0));
  for (int b = 0; b < dim; ++b) {
    basis[b] = 1;
    auto col = (x * alg.from_flat(basis)).flat();
    basis[b] = 0;
    for (int r = 0; r < dim; ++r) m(r, b) = col[r];
  }
  std::vector<Rational> rhs = alg.one().flat();
  // In a central simple algebra a right inverse is two-sided.
  auto sol = exact::solve(std::move(m), std::move(rhs));
  if (!sol) fail(ErrorCode::NotInvertible, "element " + x.to_string() + " has reduced norm 0");
  return alg.from_flat(*sol);
}

}  // namespace divalg::csa
