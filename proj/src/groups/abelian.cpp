#include "divalg/groups/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "divalg/error.hpp"
#include "divalg/groups/morphism.hpp"

namespace divalg::groups {

namespace {

using IntMatrix = std::vector<std::vector<Integer>>;

Rational frac(Rational q) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  q -= fl;
  return q;
}

std::int64_t to_i64(const Integer& z) { return z.get_si(); }

std::int64_t modp(const Integer& z, std::int64_t m) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(m));
  return r.get_si();
}

// Basis of {w : w M = 0} by unimodular row reduction of [M | I].
IntMatrix left_kernel(const IntMatrix& m, std::size_t cols) {
  const std::size_t rows = m.size();
  IntMatrix a(rows, std::vector<Integer>(cols + rows));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];
    a[i][cols + i] = 1;
  }
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    // Euclid on column c among rows >= pivot_row.
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = pivot_row; i < rows; ++i) {
        if (a[i][c] != 0 && (best == rows || abs(a[i][c]) < abs(a[best][c]))) best = i;
      }
      if (best == rows) break;
      std::swap(a[pivot_row], a[best]);
      bool done = true;
      for (std::size_t i = pivot_row + 1; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[pivot_row][c].get_mpz_t());
        for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= q * a[pivot_row][j];
        if (a[i][c] != 0) done = false;
      }
      if (done) {
        ++pivot_row;
        break;
      }
    }
  }
  IntMatrix out;
  for (std::size_t i = pivot_row; i < rows; ++i) {
    out.emplace_back(a[i].begin() + static_cast<long>(cols), a[i].end());
  }
  return out;
}

struct SmithResult {
  std::vector<Integer> diagonal;  // length = cols
  IntMatrix v_inverse;            // cols x cols
};

// Diagonalizes r (rows x cols) by unimodular row and column operations; only
// the column transform matters for bases, so its inverse is tracked.
SmithResult smith(IntMatrix r, std::size_t cols) {
  const std::size_t rows = r.size();
  IntMatrix vinv(cols, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < cols; ++i) vinv[i][i] = 1;
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (auto& row : r) std::swap(row[a], row[b]);
    std::swap(vinv[a], vinv[b]);
  };
  // col_b -= q col_a
  auto sub_col = [&](std::size_t b, std::size_t a, const Integer& q) {
    for (auto& row : r) row[b] -= q * row[a];
    for (std::size_t j = 0; j < cols; ++j) vinv[a][j] += q * vinv[b][j];
  };
  const std::size_t limit = std::min(rows, cols);
  for (std::size_t t = 0; t < limit; ++t) {
    for (;;) {
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (r[i][j] != 0 && (bi == rows || abs(r[i][j]) < abs(r[bi][bj]))) bi = i, bj = j;
        }
      }
      if (bi == rows) break;
      std::swap(r[t], r[bi]);
      if (bj != t) swap_cols(t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), r[i][t].get_mpz_t(), r[t][t].get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) r[i][j] -= q * r[t][j];
        if (r[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), r[t][j].get_mpz_t(), r[t][t].get_mpz_t());
        if (q != 0) sub_col(j, t, q);
        if (r[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold an offending row into the pivot row.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (r[i][j] % r[t][t] != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) r[t][j] += r[bad][j];
    }
  }
  SmithResult out;
  out.diagonal.assign(cols, 0);
  for (std::size_t t = 0; t < limit; ++t) out.diagonal[t] = abs(r[t][t]);
  out.v_inverse = std::move(vinv);
  return out;
}

Coords reduce_mod(const std::vector<std::int64_t>& factors, Coords v) {
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = ((v[i] % factors[i]) + factors[i]) % factors[i];
  return v;
}

Coords combine(const std::vector<std::int64_t>& factors, const std::vector<Integer>& coeffs,
               const std::vector<Coords>& gens) {
  std::vector<Integer> acc(factors.size(), 0);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (std::size_t i = 0; i < factors.size(); ++i) acc[i] += coeffs[k] * gens[k][i];
  }
  Coords out(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) out[i] = modp(acc[i], factors[i]);
  return out;
}

std::int64_t order_in(const std::vector<std::int64_t>& factors, const Coords& v) {
  std::int64_t ord = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    ord = std::lcm(ord, factors[i] / std::gcd(factors[i], v[i]));
  }
  return ord;
}

}  // namespace

void AbelianPairedGroup::validate() const {
  const std::size_t r = invariant_factors.size();
  for (std::size_t i = 0; i < r; ++i) {
    if (invariant_factors[i] < 1) fail(ErrorCode::InvalidArgument, "invariant factors must be positive");
    if (i > 0 && invariant_factors[i] % invariant_factors[i - 1] != 0) {
      fail(ErrorCode::InvalidArgument, "invariant factors must form a divisibility chain");
    }
  }
  if (pairing.size() != r) fail(ErrorCode::InvalidArgument, "pairing must be r x r");
  for (std::size_t i = 0; i < r; ++i) {
    if (pairing[i].size() != r) fail(ErrorCode::InvalidArgument, "pairing must be r x r");
    for (std::size_t j = 0; j < r; ++j) {
      const Rational& q = pairing[i][j];
      if (q < 0 || q >= 1) fail(ErrorCode::InvalidArgument, "pairing values must lie in [0, 1)");
      if (frac(q + pairing[j][i]) != 0) fail(ErrorCode::InvalidArgument, "pairing is not alternating");
      if (!is_integer(q * invariant_factors[i])) fail(ErrorCode::InvalidArgument, "pairing does not kill torsion");
    }
    if (pairing[i][i] != 0) fail(ErrorCode::InvalidArgument, "pairing is not alternating");
  }
}

std::int64_t AbelianPairedGroup::order() const {
  std::int64_t n = 1;
  for (auto d : invariant_factors) n *= d;
  return n;
}

Coords AbelianPairedGroup::reduce(Coords v) const { return reduce_mod(invariant_factors, std::move(v)); }

Rational AbelianPairedGroup::pair(const Coords& v, const Coords& w) const {
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (v[i] != 0 && w[j] != 0) s += pairing[i][j] * static_cast<long>(v[i] * w[j]);
    }
  }
  return frac(s);
}

std::int64_t AbelianPairedGroup::element_order(const Coords& v) const { return order_in(invariant_factors, v); }

std::int64_t AbelianPairedGroup::exponent() const {
  return invariant_factors.empty() ? 1 : invariant_factors.back();
}

std::vector<Coords> AbelianPairedGroup::elements() const {
  std::vector<Coords> out;
  Coords v(invariant_factors.size(), 0);
  for (;;) {
    out.push_back(v);
    std::size_t i = v.size();
    while (i > 0) {
      --i;
      if (++v[i] < invariant_factors[i]) break;
      v[i] = 0;
      if (i == 0) return out;
    }
    if (v.empty()) return out;
  }
}

DirectDecomposition subgroup_decomposition(const std::vector<std::int64_t>& factors, const std::vector<Coords>& gens) {
  const std::size_t r = factors.size(), s = gens.size();
  DirectDecomposition out;
  if (s == 0) return out;
  IntMatrix m;
  for (const auto& g : gens) {
    std::vector<Integer> row;
    for (auto c : g) row.emplace_back(static_cast<long>(c));
    m.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Integer> row(r, 0);
    row[i] = static_cast<long>(factors[i]);
    m.push_back(std::move(row));
  }
  // Relations among the generators are the first s entries of the left kernel.
  IntMatrix relations;
  for (auto& w : left_kernel(m, r)) relations.emplace_back(w.begin(), w.begin() + static_cast<long>(s));
  const SmithResult snf = smith(relations, s);
  for (std::size_t i = 0; i < s; ++i) {
    if (snf.diagonal[i] == 1) continue;
    if (snf.diagonal[i] == 0) fail(ErrorCode::InvalidArgument, "subgroup is not finite");
    out.factors.push_back(to_i64(snf.diagonal[i]));
    out.basis.push_back(combine(factors, snf.v_inverse[i], gens));
  }
  return out;
}

DirectDecomposition complement_of_cyclic(const std::vector<std::int64_t>& factors, const Coords& x) {
  const Coords xr = reduce_mod(factors, x);
  const std::int64_t exponent = factors.empty() ? 1 : factors.back();
  const std::int64_t m = order_in(factors, xr);
  if (m != exponent) fail(ErrorCode::NotMaximalOrder, "element order " + std::to_string(m) + " below exponent " + std::to_string(exponent));
  const std::size_t r = factors.size();
  // Quotient A/<x>: relations diag(d) plus x, in Smith form.
  IntMatrix rel;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Integer> row(r, 0);
    row[i] = static_cast<long>(factors[i]);
    rel.push_back(std::move(row));
  }
  std::vector<Integer> xrow;
  for (auto c : xr) xrow.emplace_back(static_cast<long>(c));
  rel.push_back(xrow);
  const SmithResult snf = smith(rel, r);
  std::vector<Coords> unit(r, Coords(r, 0));
  for (std::size_t i = 0; i < r; ++i) unit[i][i] = 1;

  DirectDecomposition out;
  for (std::size_t i = 0; i < r; ++i) {
    if (snf.diagonal[i] == 1) continue;
    const std::int64_t s = to_i64(snf.diagonal[i]);
    Coords y = combine(factors, snf.v_inverse[i], unit);
    // s y lies in <x>; subtract (t / s) x where s y = t x.
    Coords sy = y;
    for (auto& c : sy) c *= s;
    sy = reduce_mod(factors, sy);
    Coords tx(r, 0);
    std::int64_t t = 0;
    while (tx != sy) {
      ++t;
      for (std::size_t k = 0; k < r; ++k) tx[k] = (tx[k] + xr[k]) % factors[k];
      if (t > m) fail(ErrorCode::InvalidArgument, "complement construction failed");
    }
    for (std::size_t k = 0; k < r; ++k) y[k] -= (t / s) * xr[k];
    out.factors.push_back(s);
    out.basis.push_back(reduce_mod(factors, y));
  }
  return out;
}

std::vector<Coords> gamma_subgroup(const AbelianPairedGroup& a) {
  a.validate();
  const std::size_t r = a.invariant_factors.size();
  // Current subgroup: independent basis (in A coordinates) with orders.
  std::vector<std::int64_t> factors;
  std::vector<Coords> basis;
  for (std::size_t i = 0; i < r; ++i) {
    if (a.invariant_factors[i] == 1) continue;
    factors.push_back(a.invariant_factors[i]);
    Coords e(r, 0);
    e[i] = 1;
    basis.push_back(e);
  }
  auto to_a = [&](const Coords& local) {
    Coords v(r, 0);
    for (std::size_t k = 0; k < local.size(); ++k) {
      for (std::size_t i = 0; i < r; ++i) v[i] += local[k] * basis[k][i];
    }
    return a.reduce(v);
  };

  std::vector<Coords> gamma;
  while (!factors.empty()) {
    // Least element of maximal order in local coordinates is the last unit vector.
    const std::size_t k = factors.size();
    Coords x(k, 0);
    x[k - 1] = 1;
    const std::int64_t m = factors.back();
    const Coords xa = to_a(x);
    gamma.push_back(xa);

    const DirectDecomposition comp = complement_of_cyclic(factors, x);
    // Kernel of y -> m * beta(x, y) mod m on the complement.
    std::vector<Integer> coeff;
    std::vector<Coords> comp_a;
    for (const auto& y : comp.basis) {
      comp_a.push_back(to_a(y));
      const Rational scaled = a.pair(xa, comp_a.back()) * static_cast<long>(m);
      coeff.push_back(scaled.get_num());
    }
    IntMatrix column;
    for (auto& c : coeff) column.push_back({c});
    column.push_back({Integer(static_cast<long>(m))});
    std::vector<Coords> kernel_gens;
    for (auto& w : left_kernel(column, 1)) {
      Coords g(comp.factors.size());
      for (std::size_t i = 0; i < g.size(); ++i) g[i] = modp(w[i], comp.factors[i]);
      kernel_gens.push_back(g);
    }
    const DirectDecomposition ker = subgroup_decomposition(comp.factors, kernel_gens);

    std::vector<Coords> next_basis;
    for (const auto& v : ker.basis) {
      Coords in_a(r, 0);
      for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < r; ++j) in_a[j] += v[i] * comp_a[i][j];
      }
      next_basis.push_back(a.reduce(in_a));
    }
    factors = ker.factors;
    basis = std::move(next_basis);
  }
  return gamma;
}

std::vector<Coords> span(const std::vector<std::int64_t>& factors, const std::vector<Coords>& gens) {
  std::set<Coords> seen{Coords(factors.size(), 0)};
  std::vector<Coords> queue(seen.begin(), seen.end());
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (const auto& g : gens) {
      Coords v = queue[qi];
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += g[i];
      v = reduce_mod(factors, v);
      if (seen.insert(v).second) queue.push_back(v);
    }
  }
  return {seen.begin(), seen.end()};
}

TableDecomposition abelian_decomposition(const FiniteGroupTable& g) {
  if (!g.is_abelian()) fail(ErrorCode::InvalidArgument, "group is not abelian");
  const std::vector<Elem> gens = greedy_generators(g);
  const std::size_t s = gens.size();
  // Relative orders: g_i^k_i lands in <g_1..g_{i-1}>, which gives a triangular
  // relation matrix for the presentation on the greedy generators.
  std::map<Elem, Coords> word{{g.identity(), Coords(s, 0)}};
  IntMatrix relations;
  for (std::size_t i = 0; i < s; ++i) {
    std::int64_t k = 1;
    Elem power = gens[i];
    while (!word.count(power)) {
      power = g.mul(power, gens[i]);
      ++k;
    }
    std::vector<Integer> rel(s, 0);
    rel[i] = static_cast<long>(k);
    for (std::size_t j = 0; j < s; ++j) rel[j] -= static_cast<long>(word.at(power)[j]);
    relations.push_back(std::move(rel));
    std::vector<std::pair<Elem, Coords>> layer(word.begin(), word.end());
    Elem gj = g.identity();
    for (std::int64_t j = 1; j < k; ++j) {
      gj = g.mul(gj, gens[i]);
      for (const auto& [h, c] : layer) {
        Coords cc = c;
        cc[i] = j;
        word.emplace(g.mul(gj, h), cc);
      }
    }
  }
  const SmithResult snf = smith(relations, s);
  TableDecomposition out;
  for (std::size_t i = 0; i < s; ++i) {
    if (snf.diagonal[i] == 1) continue;
    out.factors.push_back(to_i64(snf.diagonal[i]));
    Elem b = g.identity();
    for (std::size_t j = 0; j < s; ++j) {
      b = g.mul(b, g.power(gens[j], modp(snf.v_inverse[i][j], g.element_order(gens[j]))));
    }
    out.basis.push_back(b);
  }
  AbelianPairedGroup shell{out.factors, {}};
  out.coords.assign(g.order(), Coords{});
  for (const auto& c : shell.elements()) {
    Elem x = g.identity();
    for (std::size_t i = 0; i < c.size(); ++i) x = g.mul(x, g.power(out.basis[i], c[i]));
    if (!out.coords[x].empty() || out.element_of.count(c)) fail(ErrorCode::InvalidArgument, "decomposition is not a bijection");
    out.coords[x] = c;
    out.element_of[c] = x;
  }
  if (out.element_of.size() != g.order()) fail(ErrorCode::InvalidArgument, "decomposition does not cover the group");
  return out;
}

}  // namespace divalg::groups
