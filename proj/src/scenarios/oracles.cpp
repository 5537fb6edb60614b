#include "divalg/scenarios/oracles.hpp"

#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "divalg/error.hpp"
#include "divalg/exact/field_ops.hpp"
#include "divalg/exact/linear_algebra.hpp"

namespace divalg::scenarios {

using csa::AlgebraElement;

const std::vector<std::string>& oracle_names() {
  static const std::vector<std::string> names{"brute_force_closure", "norm_route_membership", "max_isotropic_scan",
                                              "span_rank", "monomorphism_search", "multiplier_scan"};
  return names;
}

namespace {

// x and y differ by a factor in k*: compare at the first nonzero k-entry.
bool same_class(const AlgebraElement& x, const AlgebraElement& y) {
  const auto& k = x.algebra()->base();
  std::vector<exact::FieldElement> xs, ys;
  for (std::size_t i = 0; i < x.coords().size(); ++i) {
    for (auto& b : exact::coords_over(x[i], k)) xs.push_back(std::move(b));
    for (auto& b : exact::coords_over(y[i], k)) ys.push_back(std::move(b));
  }
  std::size_t p = 0;
  while (p < xs.size() && xs[p].is_zero()) ++p;
  if (p == xs.size() || ys[p].is_zero()) return false;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] * ys[p] != ys[i] * xs[p]) return false;
  }
  return true;
}

}  // namespace

std::size_t brute_force_closure(const std::vector<AlgebraElement>& gens, bool projective, std::size_t bound) {
  if (gens.empty()) return 1;
  std::vector<AlgebraElement> known{gens[0].algebra()->one()};
  auto seen = [&](const AlgebraElement& x) {
    for (const auto& y : known) {
      if (projective ? same_class(x, y) : x == y) return true;
    }
    return false;
  };
  for (const auto& g : gens) {
    if (!seen(g)) known.push_back(g);
  }
  for (std::size_t done = 0; done < known.size();) {
    const std::size_t end = known.size();
    for (std::size_t a = 0; a < end; ++a) {
      for (std::size_t b = (a < done ? done : 0); b < end; ++b) {
        AlgebraElement p = known[a] * known[b];
        if (!seen(p)) {
          known.push_back(std::move(p));
          if (known.size() > bound) fail(ErrorCode::BoundExceeded, "oracle closure exceeds bound");
        }
      }
    }
    done = end;
  }
  return known.size();
}

std::size_t norm_route_membership(const projective::ProjectiveGroup& g) {
  std::size_t count = 0;
  for (const auto& u : g.elements) {
    count += exact::power_test(csa::reduced_norm(u.rep()), g.algebra->degree()).has_value();
  }
  return count;
}

std::size_t max_isotropic_scan(const projective::ProjectiveGroup& g) {
  const std::size_t n = g.order();
  if (n > 64) fail(ErrorCode::InvalidArgument, "isotropic scan limited to order 64");
  std::vector<std::uint64_t> commute(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto& x = g.elements[a].rep();
      const auto& y = g.elements[b].rep();
      if (x * y == y * x) commute[a] |= std::uint64_t{1} << b;
    }
  }
  std::set<std::uint64_t> subgroups;
  std::vector<std::uint64_t> cyclic;
  auto closure_mask = [&](std::uint64_t m) {
    std::vector<groups::Elem> gens;
    for (std::size_t a = 0; a < n; ++a) {
      if ((m >> a) & 1) gens.push_back(static_cast<groups::Elem>(a));
    }
    std::uint64_t out = 0;
    for (auto e : g.table.generated(gens)) out |= std::uint64_t{1} << e;
    return out;
  };
  for (std::size_t a = 0; a < n; ++a) cyclic.push_back(closure_mask(std::uint64_t{1} << a));
  std::vector<std::uint64_t> queue;
  for (auto c : cyclic) {
    if (subgroups.insert(c).second) queue.push_back(c);
  }
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (auto c : cyclic) {
      auto j = closure_mask(queue[qi] | c);
      if (subgroups.insert(j).second) queue.push_back(j);
    }
  }
  std::size_t best = 1;
  for (auto h : subgroups) {
    bool iso = true;
    for (std::size_t a = 0; a < n && iso; ++a) {
      if ((h >> a) & 1) iso = (h & ~commute[a]) == 0;
    }
    if (iso) best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(h)));
  }
  return best;
}

int span_rank(const std::vector<AlgebraElement>& elems, const csa::AlgebraPtr& algebra) {
  const auto& k = algebra->base();
  const int n = algebra->degree();
  // Monomials of total degree < n in each element suffice for a commutative span.
  std::vector<AlgebraElement> mono{algebra->one()};
  for (const auto& e : elems) {
    std::vector<AlgebraElement> next;
    for (const auto& m : mono) {
      AlgebraElement p = m;
      for (int d = 0; d < n; ++d) {
        next.push_back(p);
        p = p * e;
      }
    }
    mono = std::move(next);
  }
  const int dim = algebra->flat_dimension();
  exact::RationalMatrix m(dim, static_cast<int>(mono.size()) * k->absolute_degree());
  int col = 0;
  for (const auto& x : mono) {
    for (int i = 0; i < k->absolute_degree(); ++i, ++col) {
      const auto flat = (k->basis_element(i) * x).flat();
      for (int r = 0; r < dim; ++r) m(r, col) = flat[r];
    }
  }
  return exact::rank(std::move(m)) / k->absolute_degree();
}

SubgroupLattice all_subgroups(const std::vector<std::int64_t>& factors) {
  SubgroupLattice lat;
  lat.elems = groups::AbelianPairedGroup{factors, {}}.elements();
  const std::size_t n = lat.elems.size();
  if (n > 64) fail(ErrorCode::InvalidArgument, "subgroup lattice limited to order 64");
  std::map<groups::Coords, std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) idx[lat.elems[i]] = i;
  std::vector<std::vector<std::size_t>> add(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      groups::Coords c(factors.size());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = (lat.elems[a][i] + lat.elems[b][i]) % factors[i];
      add[a][b] = idx.at(c);
    }
  }
  auto sum = [&](std::uint64_t h, std::uint64_t k) {
    std::uint64_t out = 0;
    for (std::size_t a = 0; a < n; ++a) {
      if (!((h >> a) & 1)) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if ((k >> b) & 1) out |= std::uint64_t{1} << add[a][b];
      }
    }
    return out;
  };
  std::vector<std::uint64_t> cyclic;
  for (std::size_t a = 0; a < n; ++a) {
    std::uint64_t m = 1;  // index 0 is the zero element
    for (std::size_t x = a; x != 0; x = add[x][a]) m |= std::uint64_t{1} << x;
    cyclic.push_back(m);
  }
  std::set<std::uint64_t> seen(cyclic.begin(), cyclic.end());
  std::vector<std::uint64_t> queue(seen.begin(), seen.end());
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (auto c : cyclic) {
      auto j = sum(queue[qi], c);
      if (seen.insert(j).second) queue.push_back(j);
    }
  }
  lat.subgroups.assign(seen.begin(), seen.end());
  return lat;
}

std::size_t max_isotropic_order(const groups::AbelianPairedGroup& a, const SubgroupLattice& lat) {
  const std::size_t n = lat.elems.size();
  const std::size_t r = a.invariant_factors.size();
  // Pairing values lie in (1/e)Z/Z for the exponent e; work with integers mod e.
  const std::int64_t e = r == 0 ? 1 : a.invariant_factors.back();
  std::vector<std::vector<std::int64_t>> scaled(r, std::vector<std::int64_t>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const Rational x = a.pairing[i][j] * e;
      if (!is_integer(x)) fail(ErrorCode::InvalidArgument, "pairing value outside (1/e)Z");
      const Integer num = x.get_num() % e;
      scaled[i][j] = (num.get_si() + e) % e;
    }
  }
  auto pair = [&](const groups::Coords& v, const groups::Coords& w) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) s = (s + scaled[i][j] * v[i] % e * w[j]) % e;
    }
    return s == 0;
  };
  std::vector<std::uint64_t> orth(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w = 0; w < n; ++w) {
      if (pair(lat.elems[v], lat.elems[w])) orth[v] |= std::uint64_t{1} << w;
    }
  }
  std::size_t best = 1;
  for (auto h : lat.subgroups) {
    bool iso = true;
    for (std::size_t v = 0; v < n && iso; ++v) {
      if ((h >> v) & 1) iso = (h & ~orth[v]) == 0;
    }
    if (iso) best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(h)));
  }
  return best;
}

std::vector<std::uint64_t> multiplier_scan(std::uint64_t n, std::uint64_t p) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 1; r < n; ++r) {
    if (std::gcd(r, n) != 1) continue;
    std::vector<std::uint64_t> rpow(p + 1, 1);
    for (std::uint64_t k = 1; k <= p; ++k) rpow[k] = rpow[k - 1] * r % n;
    if (rpow[p] != 1) continue;
    auto mul = [&](std::uint64_t i, std::uint64_t j, std::uint64_t i2, std::uint64_t j2) {
      return std::pair{(i + rpow[j] * i2) % n, (j + j2) % p};
    };
    std::size_t central = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
      for (std::uint64_t j = 0; j < p; ++j) {
        central += mul(i, j, 1, 0) == mul(1, 0, i, j) && mul(i, j, 0, 1) == mul(0, 1, i, j);
      }
    }
    if (central == 1) out.push_back(r);
  }
  return out;
}

std::size_t multiplier_orbit_count(const std::vector<std::uint64_t>& multipliers, std::uint64_t n, std::uint64_t p) {
  std::set<std::uint64_t> seen;
  std::size_t orbits = 0;
  for (auto r : multipliers) {
    if (seen.count(r)) continue;
    ++orbits;
    std::uint64_t x = r;
    for (std::uint64_t j = 1; j < p; ++j, x = x * r % n) seen.insert(x);
  }
  return orbits;
}

namespace {

void chains(std::int64_t limit, std::vector<std::int64_t>& cur, std::vector<std::vector<std::int64_t>>& out) {
  if (!cur.empty()) out.push_back(cur);
  std::int64_t prod = 1;
  for (auto d : cur) prod *= d;
  const std::int64_t step = cur.empty() ? 1 : cur.back();
  for (std::int64_t d = cur.empty() ? 2 : step; prod * d <= limit; d += step) {
    cur.push_back(d);
    chains(limit, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::int64_t>> invariant_factor_chains(std::int64_t limit) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  chains(limit, cur, out);
  return out;
}

std::vector<groups::AbelianPairedGroup> enumerate_pairings(const std::vector<std::int64_t>& f, std::size_t cap,
                                                           std::uint64_t seed) {
  const std::size_t r = f.size();
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  std::vector<std::int64_t> range;  // pairing(e_i, e_j) is a multiple of 1/gcd(d_i, d_j)
  double total = 1;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      slots.emplace_back(i, j);
      range.push_back(std::gcd(f[i], f[j]));
      total *= static_cast<double>(range.back());
    }
  }
  auto build = [&](const std::vector<std::int64_t>& vals) {
    groups::AbelianPairedGroup a{f, std::vector<std::vector<Rational>>(r, std::vector<Rational>(r, 0))};
    for (std::size_t s = 0; s < slots.size(); ++s) {
      auto [i, j] = slots[s];
      Rational q(vals[s], range[s]);
      q.canonicalize();
      a.pairing[i][j] = q;
      a.pairing[j][i] = q == 0 ? Rational(0) : Rational(1 - q);
    }
    return a;
  };
  std::vector<groups::AbelianPairedGroup> out;
  std::vector<std::int64_t> vals(slots.size(), 0);
  if (total <= static_cast<double>(cap)) {
    const auto count = static_cast<std::uint64_t>(total);
    for (std::uint64_t code = 0; code < count; ++code) {
      std::uint64_t c = code;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        vals[s] = static_cast<std::int64_t>(c % static_cast<std::uint64_t>(range[s]));
        c /= static_cast<std::uint64_t>(range[s]);
      }
      out.push_back(build(vals));
    }
  } else {
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < cap; ++t) {
      for (std::size_t s = 0; s < slots.size(); ++s) {
        vals[s] = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(range[s]));
      }
      out.push_back(build(vals));
    }
  }
  return out;
}

}  // namespace divalg::scenarios
