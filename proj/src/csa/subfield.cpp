#include "divalg/csa/subfield.hpp"

#include <deque>

#include "divalg/error.hpp"
#include "divalg/exact/linear_algebra.hpp"

namespace divalg::csa {

namespace {

// Q-span of {e_i * b}: e_i over the Q-basis of k, b over the k-basis.
class SpanTracker {
 public:
  explicit SpanTracker(const AlgebraPtr& alg) : alg_(alg) {}

  bool contains(const AlgebraElement& x) const {
    if (columns_.empty()) return x.is_zero();
    const int dim = alg_->flat_dimension();
    exact::RationalMatrix m(dim, static_cast<int>(columns_.size()));
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      for (int r = 0; r < dim; ++r) m(r, static_cast<int>(c)) = columns_[c][r];
    }
    return exact::solve(std::move(m), x.flat()).has_value();
  }

  void add(const AlgebraElement& b) {
    const auto& k = alg_->base();
    for (int i = 0; i < k->absolute_degree(); ++i) columns_.push_back((k->basis_element(i) * b).flat());
  }

 private:
  AlgebraPtr alg_;
  std::vector<std::vector<Rational>> columns_;
};

}  // namespace

Subfield generated_subfield(const std::vector<AlgebraElement>& gens, const AlgebraPtr& algebra) {
  for (const auto& g : gens) {
    if (g.algebra() != algebra) fail(ErrorCode::AlgebraMismatch, "generator from another algebra");
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i] * gens[j] != gens[j] * gens[i]) fail(ErrorCode::NonCommutative, "generators do not commute");
    }
  }
  const int n = algebra->degree();
  Subfield out;
  SpanTracker span(algebra);
  std::deque<AlgebraElement> pending{algebra->one()};
  while (!pending.empty()) {
    AlgebraElement x = std::move(pending.front());
    pending.pop_front();
    if (span.contains(x)) continue;
    span.add(x);
    out.basis.push_back(x);
    if (static_cast<int>(out.basis.size()) > n) {
      fail(ErrorCode::DegreeOverflow, "generated subalgebra exceeds degree " + std::to_string(n));
    }
    for (const auto& g : gens) pending.push_back(x * g);
  }
  for (std::size_t i = 0; i < out.basis.size(); ++i) {
    for (std::size_t j = i + 1; j < out.basis.size(); ++j) {
      if (out.basis[i] * out.basis[j] != out.basis[j] * out.basis[i]) {
        fail(ErrorCode::NonCommutative, "generated subalgebra is not commutative");
      }
    }
  }
  out.degree = static_cast<int>(out.basis.size());
  if (n % out.degree != 0) {
    fail(ErrorCode::DegreeOverflow, "subfield degree " + std::to_string(out.degree) + " does not divide " + std::to_string(n));
  }
  return out;
}

bool contains(const Subfield& field, const AlgebraElement& x) {
  SpanTracker span(x.algebra());
  for (const auto& b : field.basis) span.add(b);
  return span.contains(x);
}

}  // namespace divalg::csa
