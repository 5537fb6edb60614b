#include "divalg/exact/number_field.hpp"

#include <sstream>

#include "divalg/error.hpp"
#include "divalg/exact/linear_algebra.hpp"

namespace divalg::exact {

void validate_field(NumberField& field, const FieldSpec& spec);

// FieldElement ---------------------------------------------------------------

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (!field_) fail(ErrorCode::FieldMismatch, "element without a field");
  if (static_cast<int>(coords_.size()) != field_->absolute_degree()) {
    fail(ErrorCode::FieldMismatch, "coordinate count " + std::to_string(coords_.size()) +
                                       " does not match degree of " + field_->label());
  }
}

bool FieldElement::is_zero() const {
  for (const auto& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

bool FieldElement::is_one() const {
  if (coords_.empty() || coords_[0] != 1) return false;
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (coords_[i] != 0) return false;
  }
  return true;
}

bool FieldElement::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (coords_[i] != 0) return false;
  }
  return true;
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field()) {
    fail(ErrorCode::FieldMismatch, "operands live in " + (a.field() ? a.field()->label() : "<none>") +
                                       " and " + (b.field() ? b.field()->label() : "<none>"));
  }
}

FieldElement FieldElement::operator-() const {
  FieldElement out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& other) {
  require_same_field(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& other) {
  require_same_field(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  std::vector<Rational> out;
  a.field_->multiply(a.coords_, b.coords_, out);
  return FieldElement(a.field_, std::move(out));
}

FieldElement& FieldElement::operator*=(const FieldElement& other) {
  *this = *this * other;
  return *this;
}

FieldElement& FieldElement::operator*=(const Rational& scalar) {
  for (auto& c : coords_) c *= scalar;
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero in " + field_->label());
  const int d = field_->absolute_degree();
  if (d == 1) return FieldElement(field_, {Rational(1) / coords_[0]});
  // Columns of the multiplication matrix are x * e_b.
  RationalMatrix m(d, d);
  for (int b = 0; b < d; ++b) {
    auto col = (*this * field_->basis_element(b)).coords();
    for (int a = 0; a < d; ++a) m(a, b) = col[a];
  }
  std::vector<Rational> rhs(d, Rational(0));
  rhs[0] = 1;
  auto sol = solve(m, rhs);
  if (!sol) fail(ErrorCode::DivisionByZero, "singular multiplication matrix in " + field_->label());
  return FieldElement(field_, std::move(*sol));
}

FieldElement& FieldElement::operator/=(const FieldElement& other) {
  require_same_field(*this, other);
  if (other.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero in " + field_->label());
  *this = *this * other.inverse();
  return *this;
}

FieldElement FieldElement::pow(long long exponent) const {
  FieldElement base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-exponent)
                                      : static_cast<unsigned long long>(exponent);
  FieldElement result = field_->one();
  while (e != 0) {
    if (e & 1ULL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_ == b.field_ && a.coords_ == b.coords_;
}

std::string FieldElement::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out << ",";
    out << coords_[i].get_str();
  }
  out << "]";
  return out.str();
}

// NumberField ----------------------------------------------------------------

FieldPtr NumberField::rationals() {
  static const FieldPtr q = [] {
    auto f = std::shared_ptr<NumberField>(new NumberField());
    f->label_ = "Q";
    f->defining_ = {Integer(0), Integer(1)};
    f->degree_ = 1;
    f->absolute_degree_ = 1;
    f->structure_ = {{Term{0, Integer(1)}}};
    f->automorphism_images_ = {{Rational(0)}};
    f->automorphism_matrices_ = {{Rational(1)}};
    f->torsion_order_ = 2;
    f->torsion_coords_ = {Rational(-1)};
    return FieldPtr(f);
  }();
  return q;
}

FieldPtr NumberField::create(const FieldSpec& spec) {
  if (spec.label.empty()) fail(ErrorCode::CatalogError, "field without a label");
  if (spec.label == "Q") fail(ErrorCode::CatalogError, "label 'Q' is reserved for the rationals");
  const auto& poly = spec.defining_polynomial;
  if (poly.size() < 3) {
    fail(ErrorCode::CatalogError, spec.label + ": defining polynomial must have degree >= 2");
  }
  if (poly.back() != 1) fail(ErrorCode::CatalogError, spec.label + ": defining polynomial is not monic");

  auto f = std::shared_ptr<NumberField>(new NumberField());
  f->label_ = spec.label;
  f->base_ = spec.base ? spec.base : rationals();
  f->defining_ = poly;
  f->degree_ = static_cast<int>(poly.size()) - 1;
  f->absolute_degree_ = f->degree_ * f->base_->absolute_degree();
  f->torsion_order_ = spec.torsion_order;
  f->build_structure_constants();
  for (const auto& image : spec.automorphisms) {
    if (static_cast<int>(image.size()) != f->absolute_degree_) {
      fail(ErrorCode::CatalogError, spec.label + ": automorphism image has wrong coordinate count");
    }
  }
  f->build_automorphisms(spec.automorphisms);
  validate_field(*f, spec);
  return f;
}

void NumberField::build_structure_constants() {
  const int m = degree_;
  const int b = base_->absolute_degree();
  const int d = absolute_degree_;

  // Integer reductions of t^s, s < 2m - 1, over the power basis of t.
  std::vector<std::vector<Integer>> red(2 * m - 1, std::vector<Integer>(m, Integer(0)));
  for (int s = 0; s < m; ++s) red[s][s] = 1;
  for (int s = m; s < 2 * m - 1; ++s) {
    std::vector<Integer> shifted(m + 1, Integer(0));
    for (int j = 0; j < m; ++j) shifted[j + 1] = red[s - 1][j];
    const Integer top = shifted[m];
    for (int j = 0; j < m; ++j) red[s][j] = shifted[j] - top * defining_[j];
  }

  structure_.assign(static_cast<std::size_t>(d) * d, {});
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < b; ++i) {
      for (int j2 = 0; j2 < m; ++j2) {
        for (int i2 = 0; i2 < b; ++i2) {
          auto& terms = structure_[static_cast<std::size_t>(j * b + i) * d + (j2 * b + i2)];
          const auto& base_terms = base_->structure_[static_cast<std::size_t>(i) * b + i2];
          for (int l = 0; l < m; ++l) {
            const Integer& r = red[j + j2][l];
            if (r == 0) continue;
            for (const auto& bt : base_terms) terms.push_back(Term{l * b + bt.index, r * bt.coefficient});
          }
        }
      }
    }
  }
}

void NumberField::multiply(const std::vector<Rational>& x, const std::vector<Rational>& y,
                           std::vector<Rational>& out) const {
  const int d = absolute_degree_;
  out.assign(d, Rational(0));
  Rational prod;
  Rational scaled;
  for (int a = 0; a < d; ++a) {
    if (x[a] == 0) continue;
    for (int b = 0; b < d; ++b) {
      if (y[b] == 0) continue;
      prod = x[a] * y[b];
      for (const auto& t : structure_[static_cast<std::size_t>(a) * d + b]) {
        if (t.coefficient == 1) {
          out[t.index] += prod;
        } else {
          scaled = prod * t.coefficient;
          out[t.index] += scaled;
        }
      }
    }
  }
}

void NumberField::build_automorphisms(const std::vector<std::vector<Rational>>& images) {
  automorphism_images_ = images;
  automorphism_matrices_.clear();
  const int d = absolute_degree_;
  const int b = base_->absolute_degree();
  FieldPtr self = shared_from_this();
  for (const auto& image : images) {
    FieldElement theta(self, image);
    std::vector<Rational> mat(static_cast<std::size_t>(d) * d, Rational(0));
    FieldElement power = one();
    for (int j = 0; j < degree_; ++j) {
      for (int i = 0; i < b; ++i) {
        auto col = (basis_element(i) * power).coords();
        for (int r = 0; r < d; ++r) mat[static_cast<std::size_t>(r) * d + (j * b + i)] = col[r];
      }
      power *= theta;
    }
    automorphism_matrices_.push_back(std::move(mat));
  }
}

FieldElement NumberField::automorphism_image(std::size_t index) const {
  if (index >= automorphism_images_.size()) {
    fail(ErrorCode::InvalidArgument, label_ + ": automorphism index out of range");
  }
  return FieldElement(shared_from_this(), automorphism_images_[index]);
}

FieldElement NumberField::apply_automorphism(std::size_t index, const FieldElement& x) const {
  if (x.field().get() != this) fail(ErrorCode::FieldMismatch, "automorphism of " + label_ + " applied to foreign element");
  if (index >= automorphism_matrices_.size()) {
    fail(ErrorCode::InvalidArgument, label_ + ": automorphism index out of range");
  }
  const int d = absolute_degree_;
  const auto& mat = automorphism_matrices_[index];
  std::vector<Rational> out(d, Rational(0));
  for (int c = 0; c < d; ++c) {
    if (x[c] == 0) continue;
    for (int r = 0; r < d; ++r) {
      const auto& e = mat[static_cast<std::size_t>(r) * d + c];
      if (e != 0) out[r] += e * x[c];
    }
  }
  return FieldElement(shared_from_this(), std::move(out));
}

FieldElement NumberField::torsion_generator() const {
  return FieldElement(shared_from_this(), torsion_coords_);
}

FieldElement NumberField::zero() const {
  return FieldElement(shared_from_this(), std::vector<Rational>(absolute_degree_, Rational(0)));
}

FieldElement NumberField::one() const { return from_rational(Rational(1)); }

FieldElement NumberField::from_rational(const Rational& q) const {
  std::vector<Rational> c(absolute_degree_, Rational(0));
  c[0] = q;
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement NumberField::from_coords(std::vector<Rational> coords) const {
  return FieldElement(shared_from_this(), std::move(coords));
}

FieldElement NumberField::basis_element(std::size_t index) const {
  std::vector<Rational> c(absolute_degree_, Rational(0));
  c.at(index) = 1;
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement NumberField::generator() const {
  if (is_rationals()) return zero();
  return basis_element(static_cast<std::size_t>(base_->absolute_degree()));
}

bool NumberField::has_ancestor(const NumberField& other) const {
  for (const NumberField* f = this; f != nullptr; f = f->base_.get()) {
    if (f == &other) return true;
  }
  return false;
}

std::vector<FieldPtr> NumberField::tower() const {
  std::vector<FieldPtr> out;
  for (FieldPtr f = shared_from_this(); f; f = f->base_) out.push_back(f);
  return out;
}

// Tower helpers ----------------------------------------------------------------

int relative_degree(const NumberField& field, const NumberField& ancestor) {
  if (!field.has_ancestor(ancestor)) {
    fail(ErrorCode::FieldMismatch, ancestor.label() + " is not below " + field.label());
  }
  return field.absolute_degree() / ancestor.absolute_degree();
}

std::vector<FieldElement> coords_over(const FieldElement& x, const FieldPtr& ancestor) {
  const int blocks = relative_degree(*x.field(), *ancestor);
  const int size = ancestor->absolute_degree();
  std::vector<FieldElement> out;
  out.reserve(blocks);
  for (int blk = 0; blk < blocks; ++blk) {
    std::vector<Rational> c(x.coords().begin() + blk * size, x.coords().begin() + (blk + 1) * size);
    out.emplace_back(ancestor, std::move(c));
  }
  return out;
}

FieldElement from_coords_over(const FieldPtr& field, const std::vector<FieldElement>& blocks) {
  if (blocks.empty()) fail(ErrorCode::FieldMismatch, "empty block list");
  const FieldPtr& ancestor = blocks.front().field();
  const int n = relative_degree(*field, *ancestor);
  if (static_cast<int>(blocks.size()) != n) fail(ErrorCode::FieldMismatch, "wrong block count for " + field->label());
  std::vector<Rational> c;
  c.reserve(field->absolute_degree());
  for (const auto& blk : blocks) {
    if (blk.field() != ancestor) fail(ErrorCode::FieldMismatch, "mixed block fields");
    c.insert(c.end(), blk.coords().begin(), blk.coords().end());
  }
  return FieldElement(field, std::move(c));
}

FieldElement embed(const FieldElement& x, const FieldPtr& field) {
  relative_degree(*field, *x.field());
  std::vector<Rational> c(field->absolute_degree(), Rational(0));
  std::copy(x.coords().begin(), x.coords().end(), c.begin());
  return FieldElement(field, std::move(c));
}

bool lies_in(const FieldElement& x, const NumberField& ancestor) {
  relative_degree(*x.field(), ancestor);
  for (std::size_t i = ancestor.absolute_degree(); i < x.coords().size(); ++i) {
    if (x[i] != 0) return false;
  }
  return true;
}

FieldElement restrict_to(const FieldElement& x, const FieldPtr& ancestor) {
  if (!lies_in(x, *ancestor)) {
    fail(ErrorCode::FieldMismatch, "element " + x.to_string() + " does not lie in " + ancestor->label());
  }
  std::vector<Rational> c(x.coords().begin(), x.coords().begin() + ancestor->absolute_degree());
  return FieldElement(ancestor, std::move(c));
}

}  // namespace divalg::exact
