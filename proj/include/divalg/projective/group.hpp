#pragma once

// Finite subgroups of A*/k*: normalized representatives, closure, scalar
// powers and finite-order lifts.

#include <optional>
#include <vector>

#include "divalg/csa/cyclic_algebra.hpp"
#include "divalg/groups/table.hpp"

namespace divalg::projective {

using csa::AlgebraElement;
using csa::AlgebraPtr;
using exact::FieldElement;
using groups::Elem;
using groups::FiniteGroupTable;
using groups::Subgroup;

inline constexpr std::size_t kDefaultClosureBound = 10000;

/// A unit modulo k*, stored by its normalized representative: viewing the
/// element as a k-vector (z-power major, then the k-basis of K), the first
/// nonzero entry is 1.
class ProjectiveUnit {
 public:
  const AlgebraElement& rep() const { return rep_; }
  friend bool operator==(const ProjectiveUnit& a, const ProjectiveUnit& b) { return a.rep_ == b.rep_; }
  friend ProjectiveUnit operator*(const ProjectiveUnit& a, const ProjectiveUnit& b);
  ProjectiveUnit inverse() const;
  bool is_identity() const { return rep_.is_one(); }

 private:
  explicit ProjectiveUnit(AlgebraElement rep) : rep_(std::move(rep)) {}
  AlgebraElement rep_;
  friend ProjectiveUnit project(const AlgebraElement& x);
};

/// Throws NotAUnit for zero or non-invertible x.
ProjectiveUnit project(const AlgebraElement& x);

/// x as an element of k when x is central (a k-multiple of 1).
std::optional<FieldElement> as_scalar(const AlgebraElement& x);

struct ProjectiveGroup {
  AlgebraPtr algebra;
  std::vector<ProjectiveUnit> elements;  // elements[0] is the identity
  FiniteGroupTable table;

  std::size_t order() const { return elements.size(); }
  std::optional<Elem> index_of(const ProjectiveUnit& x) const;
};

/// Breadth-first closure; throws BoundExceeded past `bound` elements.
ProjectiveGroup closure(const std::vector<ProjectiveUnit>& gens, const AlgebraPtr& algebra,
                        std::size_t bound = kDefaultClosureBound);

/// Least alpha with rep^alpha = a * 1, and that scalar a in k.  Throws BoundExceeded.
std::pair<int, FieldElement> scalar_power(const ProjectiveUnit& x, std::size_t bound = kDefaultClosureBound);
int order_in_quotient(const ProjectiveUnit& x, std::size_t bound = kDefaultClosureBound);

struct FiniteLift {
  AlgebraElement lift;  // projects to x
  int alpha = 1;        // order of x modulo k*
  FieldElement scalar;  // rep^alpha
  long order = 1;       // multiplicative order of lift, verified by exponentiation
};

/// Both criteria for a finite-order lift: the scalar route (rep^alpha in
/// mu(k) (k*)^alpha) and the reduced-norm route (Nrd(rep) in mu(k) (k*)^n).
struct LiftDecision {
  bool scalar_route = false;
  bool norm_route = false;
  std::optional<FiniteLift> lift;
};
LiftDecision decide_finite_lift(const ProjectiveUnit& x, std::size_t bound = kDefaultClosureBound);

/// Throws CrossCheckFailed when the two routes disagree.
std::optional<FiniteLift> finite_order_lift(const ProjectiveUnit& x, std::size_t bound = kDefaultClosureBound);

/// Multiplicative order of x, verified; throws BoundExceeded past `bound`.
long multiplicative_order(const AlgebraElement& x, long bound);

}  // namespace divalg::projective
