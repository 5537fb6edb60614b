#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"

#include "catalogs.hpp"
#include "divalg/error.hpp"
#include "divalg/groups/abelian.hpp"
#include "divalg/groups/balanced.hpp"
#include "divalg/groups/icosahedral.hpp"
#include "divalg/groups/morphism.hpp"
#include "divalg/groups/table.hpp"

using namespace divalg;
using namespace divalg::groups;

namespace {

// Table of a permutation group listed by closure from generators.
FiniteGroupTable permutation_group(const std::vector<std::vector<int>>& gens) {
  const std::size_t deg = gens[0].size();
  std::vector<int> id(deg);
  std::iota(id.begin(), id.end(), 0);
  std::map<std::vector<int>, Elem> index{{id, 0}};
  std::vector<std::vector<int>> elems{id};
  auto compose = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(deg);
    for (std::size_t i = 0; i < deg; ++i) c[i] = a[b[i]];
    return c;
  };
  for (std::size_t qi = 0; qi < elems.size(); ++qi) {
    for (const auto& g : gens) {
      auto c = compose(elems[qi], g);
      if (index.emplace(c, static_cast<Elem>(elems.size())).second) elems.push_back(c);
    }
  }
  const std::size_t n = elems.size();
  std::vector<Elem> t(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = index.at(compose(elems[a], elems[b]));
  }
  return FiniteGroupTable(n, t);
}

FiniteGroupTable a5_table() { return permutation_group({{1, 2, 0, 3, 4}, {0, 1, 3, 4, 2}, {1, 2, 3, 4, 0}}); }

std::size_t brute_center_size(const FiniteGroupTable& g) {
  std::size_t count = 0;
  for (Elem a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Elem b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    count += central;
  }
  return count;
}

// Invariant factor chains with product <= limit.
void chains(std::int64_t limit, std::vector<std::int64_t>& cur, std::vector<std::vector<std::int64_t>>& out) {
  if (!cur.empty()) out.push_back(cur);
  std::int64_t prod = 1;
  for (auto d : cur) prod *= d;
  const std::int64_t step = cur.empty() ? 2 : cur.back();
  for (std::int64_t d = step; prod * d <= limit; d += (cur.empty() ? 1 : cur.back())) {
    if (d < 2) continue;
    cur.push_back(d);
    chains(limit, cur, out);
    cur.pop_back();
  }
}

// Independent evaluation of the bilinear pairing mod 1.
Rational pair_oracle(const AbelianPairedGroup& a, const Coords& v, const Coords& w) {
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) s += a.pairing[i][j] * static_cast<long>(v[i]) * static_cast<long>(w[j]);
  }
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
  return s - fl;
}

struct SubgroupLattice {
  std::vector<Coords> elems;
  std::vector<std::uint64_t> subgroups;  // bitmasks over elems
};

// All subgroups of a group of order <= 64, as joins of cyclic subgroups.
SubgroupLattice all_subgroups(const std::vector<std::int64_t>& factors) {
  SubgroupLattice lat;
  AbelianPairedGroup shell{factors, {}};
  lat.elems = shell.elements();
  const std::size_t n = lat.elems.size();
  std::map<Coords, std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) idx[lat.elems[i]] = i;
  std::vector<std::vector<std::size_t>> add(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Coords c(factors.size());
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
    std::size_t x = a;
    while (x != 0) {
      m |= std::uint64_t{1} << x;
      x = add[x][a];
    }
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

std::size_t max_isotropic_order(const AbelianPairedGroup& a, const SubgroupLattice& lat) {
  const std::size_t n = lat.elems.size();
  std::vector<std::uint64_t> orth(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w = 0; w < n; ++w) {
      if (pair_oracle(a, lat.elems[v], lat.elems[w]) == 0) orth[v] |= std::uint64_t{1} << w;
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

void check_gamma(const AbelianPairedGroup& a, const SubgroupLattice& lat) {
  const auto gens = gamma_subgroup(a);
  const auto g = span(a.invariant_factors, gens);
  for (const auto& x : g) {
    for (const auto& y : g) REQUIRE(pair_oracle(a, x, y) == 0);
  }
  const auto order = static_cast<std::int64_t>(g.size());
  CHECK((order * order) % a.order() == 0);
  CHECK(static_cast<std::size_t>(order) <= max_isotropic_order(a, lat));
}

// All alternating pairings on the given factors.
std::vector<AbelianPairedGroup> pairings(const std::vector<std::int64_t>& f, std::size_t cap, std::mt19937_64& rng) {
  const std::size_t r = f.size();
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  std::vector<std::int64_t> range;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      slots.emplace_back(i, j);
      range.push_back(std::gcd(f[i], f[j]));
      total *= static_cast<std::uint64_t>(range.back());
    }
  }
  auto build = [&](const std::vector<std::int64_t>& vals) {
    AbelianPairedGroup a{f, std::vector<std::vector<Rational>>(r, std::vector<Rational>(r, 0))};
    for (std::size_t s = 0; s < slots.size(); ++s) {
      auto [i, j] = slots[s];
      Rational q(vals[s], range[s]);
      q.canonicalize();
      a.pairing[i][j] = q;
      a.pairing[j][i] = q == 0 ? Rational(0) : Rational(1 - q);
    }
    return a;
  };
  std::vector<AbelianPairedGroup> out;
  std::vector<std::int64_t> vals(slots.size(), 0);
  if (total <= cap) {
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t c = code;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        vals[s] = static_cast<std::int64_t>(c % static_cast<std::uint64_t>(range[s]));
        c /= static_cast<std::uint64_t>(range[s]);
      }
      out.push_back(build(vals));
    }
  } else {
    for (std::size_t t = 0; t < cap; ++t) {
      for (std::size_t s = 0; s < slots.size(); ++s) vals[s] = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(range[s]));
      out.push_back(build(vals));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("group tables are validated") {
  CHECK_THROWS_AS(FiniteGroupTable::from_rows({{0, 1}, {0, 1}}), Error);
  // Latin square without associativity: the order-5 loop x*y = 2x - y mod 5 has no identity.
  std::vector<std::vector<Elem>> rows(5, std::vector<Elem>(5));
  for (Elem x = 0; x < 5; ++x) {
    for (Elem y = 0; y < 5; ++y) rows[x][y] = (2 * x + 5 - y) % 5;
  }
  CHECK_THROWS_AS(FiniteGroupTable::from_rows(rows), Error);
  // A Latin square with identity that is not associative (order 5 loop).
  const std::vector<std::vector<Elem>> loop{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(FiniteGroupTable::from_rows(loop), Error);
  const auto z4 = cyclic_group(4);
  CHECK(group_from_json(group_to_json(z4)).data() == z4.data());
}

TEST_CASE("quaternion group of order 8 from unit quaternions") {
  const auto h = testing::algebras().get("hamilton-q");
  std::vector<csa::AlgebraElement> units;
  for (int pos = 0; pos < 4; ++pos) {
    for (int s : {1, -1}) {
      std::vector<Rational> flat(4, 0);
      flat[pos] = s;
      units.push_back(h->from_flat(flat));
    }
  }
  const std::size_t n = units.size();
  std::vector<Elem> t(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto prod = units[a] * units[b];
      t[a * n + b] = static_cast<Elem>(std::find(units.begin(), units.end(), prod) - units.begin());
    }
  }
  const FiniteGroupTable q8(n, t);
  CHECK(recognize(q8).to_string() == "generalized_quaternion(8)");
  CHECK(center(q8).size() == 2);
  CHECK(are_isomorphic(q8, generalized_quaternion_group(8)));
}

TEST_CASE("quaternion modulo center is dihedral of half the order") {
  for (std::size_t order : {8, 16, 32, 64}) {
    const auto q = generalized_quaternion_group(order);
    CHECK(recognize(q).kind == StructureTag::Kind::GeneralizedQuaternion);
    const auto z = center(q);
    CHECK(z.size() == 2);
    const auto quot = quotient_by(q, z).table;
    const auto tag = recognize(quot);
    CHECK(tag.kind == StructureTag::Kind::Dihedral);
    CHECK(tag.order == static_cast<int>(order / 2));
    CHECK(order_histogram(quot) == order_histogram(dihedral_group(order / 2)));
    CHECK(are_isomorphic(quot, dihedral_group(order / 2)));
  }
  CHECK(recognize(quotient_by(generalized_quaternion_group(16), center(generalized_quaternion_group(16))).table).to_string() == "dihedral(8)");
}

TEST_CASE("recognizer and quotients") {
  const auto z3z3 = direct_product(cyclic_group(3), cyclic_group(3));
  CHECK(recognize(z3z3).to_string() == "elementary_abelian(3,2)");
  CHECK(recognize(cyclic_group(6)).to_string() == "cyclic(6)");
  CHECK(recognize(dihedral_group(6)).to_string() == "dihedral(6)");
  CHECK(recognize(a5_table()).kind == StructureTag::Kind::Other);
  const auto q = quotient_by(cyclic_group(4), cyclic_group(4).generated({2}));
  CHECK(q.table.order() == 2);
  CHECK(recognize(q.table).to_string() == "cyclic(2)");
  const auto s3 = dihedral_group(6);
  CHECK_THROWS_AS(quotient_by(s3, s3.generated({static_cast<Elem>(s3.order() - 1)})), Error);
}

TEST_CASE("balanced existence") {
  CHECK(balanced_exists(7, 3));
  CHECK_FALSE(balanced_exists(5, 3));
  CHECK(balanced_exists(91, 3));
  CHECK_FALSE(balanced_exists(77, 3));  // 11 = 2 mod 3
  CHECK(balanced_exists(1, 3));
  CHECK_THROWS_AS(balanced_exists(7, 2), Error);
  CHECK_THROWS_AS(balanced_build(5, 3), Error);
}

TEST_CASE("balanced products have trivial center") {
  auto [d7, g7] = balanced_build(7, 3);
  CHECK(d7.r == 2);
  CHECK(g7.order() == 21);
  CHECK(brute_center_size(g7) == 1);
  CHECK(are_isomorphic(g7, semidirect_table(7, 3, 4)));
  auto [d13, g13] = balanced_build(13, 3);
  CHECK(d13.r == 3);
  CHECK(g13.order() == 39);
  CHECK(brute_center_size(g13) == 1);
}

TEST_CASE("balanced existence matches a multiplier scan") {
  // Oracle: every r with r^p = 1 mod n defines Z/n x| Z/p; scan the center
  // directly from the multiplication rule (i, j)(i', j') = (i + r^j i', j + j').
  for (std::uint64_t p : {3, 5, 7}) {
    for (std::uint64_t n = 2; n <= 200; ++n) {
      bool found = false;
      std::vector<std::uint64_t> trivial_center_rs;
      for (std::uint64_t r = 1; r < n; ++r) {
        if (std::gcd(r, n) != 1) continue;
        std::uint64_t rp = 1;
        for (std::uint64_t k = 0; k < p; ++k) rp = rp * r % n;
        if (rp != 1) continue;
        std::vector<std::uint64_t> rpow(p, 1);
        for (std::uint64_t k = 1; k < p; ++k) rpow[k] = rpow[k - 1] * r % n;
        auto mul = [&](std::uint64_t i, std::uint64_t j, std::uint64_t i2, std::uint64_t j2) {
          return std::pair{(i + rpow[j] * i2) % n, (j + j2) % p};
        };
        std::size_t central = 0;
        for (std::uint64_t i = 0; i < n; ++i) {
          for (std::uint64_t j = 0; j < p; ++j) {
            bool c = mul(i, j, 1, 0) == mul(1, 0, i, j) && mul(i, j, 0, 1) == mul(0, 1, i, j);
            central += c;
          }
        }
        if (central == 1) {
          found = true;
          trivial_center_rs.push_back(r);
        }
      }
      INFO("n = " << n << ", p = " << p);
      CHECK(balanced_exists(n, p) == found);
      if (found) {
        auto [d, g] = balanced_build(n, p);
        CHECK(d.r == trivial_center_rs.front());
        if (n * p <= 100) {
          for (auto r : trivial_center_rs) CHECK(are_isomorphic(g, semidirect_table(n, p, r)));
        }
      }
    }
  }
}

TEST_CASE("normal cyclic subgroups") {
  CHECK(has_normal_cyclic(cyclic_group(6)).has_value());
  auto [d, g21] = balanced_build(7, 3);
  auto n = has_normal_cyclic(g21);
  REQUIRE(n.has_value());
  CHECK(n->size() == 7);
  CHECK(is_normal(g21, *n));
  const auto a5 = a5_table();
  CHECK(a5.order() == 60);
  CHECK_FALSE(has_normal_cyclic(a5).has_value());
  CHECK(is_simple(a5));
}

TEST_CASE("embedding into the balanced shape") {
  const auto z21 = cyclic_group(21);
  auto e = embeds_in_balanced_shape(z21, 3);
  REQUIRE(e.has_value());
  CHECK(e->n == 7);
  CHECK(verify_monomorphism(z21, ShapeGroup(e->n, 3, e->r), e->images));

  const auto z3z3 = direct_product(cyclic_group(3), cyclic_group(3));
  auto e1 = embeds_in_balanced_shape(z3z3, 3);
  REQUIRE(e1.has_value());
  CHECK(e1->n == 1);
  CHECK(verify_monomorphism(z3z3, ShapeGroup(1, 3, 1), e1->images));

  auto [d, g21] = balanced_build(7, 3);
  auto e2 = embeds_in_balanced_shape(g21, 3);
  REQUIRE(e2.has_value());
  CHECK(e2->n == 7);

  CHECK_FALSE(embeds_in_balanced_shape(cyclic_group(9), 3).has_value());
  // Order statistics agree with the obstruction: no element of order 9 in small shapes.
  for (std::uint64_t n : {1, 7, 13}) {
    ShapeGroup s(n, 3, n == 1 ? 1 : balanced_build(n, 3).first.r);
    for (std::uint64_t x = 0; x < s.order(); ++x) CHECK(s.element_order(x) % 9 != 0);
    CHECK_FALSE(find_monomorphism(cyclic_group(9), s).has_value());
  }
  CHECK_THROWS_AS(embeds_in_balanced_shape(cyclic_group(21), 3, 5), Error);
}

TEST_CASE("complement of a cyclic subgroup of maximal order") {
  const std::vector<std::int64_t> f{2, 4};  // Z/2 x Z/4 in chain order
  auto c = complement_of_cyclic(f, {0, 1});
  REQUIRE(c.basis.size() == 1);
  CHECK(c.factors == std::vector<std::int64_t>{2});
  for (const Coords& x : {Coords{0, 1}, Coords{1, 1}, Coords{1, 3}}) {
    auto comp = complement_of_cyclic(f, x);
    const auto cx = span(f, {x});
    const auto ca = span(f, comp.basis);
    std::vector<Coords> inter;
    std::set_intersection(cx.begin(), cx.end(), ca.begin(), ca.end(), std::back_inserter(inter));
    CHECK(inter.size() == 1);
    auto all = comp.basis;
    all.push_back(x);
    CHECK(span(f, all).size() == 8);
  }
  CHECK_THROWS_AS(complement_of_cyclic(f, {1, 2}), Error);
  CHECK(complement_of_cyclic({5}, {1}).basis.empty());
}

TEST_CASE("complement exhaustively valid on small groups") {
  std::vector<std::vector<std::int64_t>> all;
  std::vector<std::int64_t> cur;
  chains(48, cur, all);
  for (const auto& f : all) {
    AbelianPairedGroup shell{f, {}};
    for (const auto& x : shell.elements()) {
      if (shell.element_order(x) != shell.exponent()) continue;
      auto comp = complement_of_cyclic(f, x);
      const auto cx = span(f, {x});
      const auto ca = span(f, comp.basis);
      std::vector<Coords> inter;
      std::set_intersection(cx.begin(), cx.end(), ca.begin(), ca.end(), std::back_inserter(inter));
      CHECK(inter.size() == 1);
      CHECK(static_cast<std::int64_t>(cx.size() * ca.size()) == shell.order());
    }
  }
}

TEST_CASE("gamma examples") {
  AbelianPairedGroup z6{{6}, {{0}}};
  CHECK(span(z6.invariant_factors, gamma_subgroup(z6)).size() == 6);

  AbelianPairedGroup plane{{3, 3}, {{0, Rational(1, 3)}, {Rational(2, 3), 0}}};
  CHECK(span(plane.invariant_factors, gamma_subgroup(plane)).size() == 3);

  const Rational h(1, 2);
  AbelianPairedGroup mixed{{2, 2, 4}, {{0, h, 0}, {h, 0, 0}, {0, 0, 0}}};
  const auto g = span(mixed.invariant_factors, gamma_subgroup(mixed));
  CHECK(g.size() == 8);
  CHECK(max_isotropic_order(mixed, all_subgroups(mixed.invariant_factors)) == 8);

  AbelianPairedGroup bad{{2, 2}, {{h, 0}, {0, 0}}};
  CHECK_THROWS_AS(bad.validate(), Error);
  AbelianPairedGroup skew{{3, 3}, {{0, Rational(1, 3)}, {Rational(1, 3), 0}}};
  CHECK_THROWS_AS(skew.validate(), Error);
}

TEST_CASE("gamma is isotropic with |A| dividing |Gamma|^2 up to order 64") {
  std::vector<std::vector<std::int64_t>> all;
  std::vector<std::int64_t> cur;
  chains(64, cur, all);
  std::mt19937_64 rng(0x5EED);
  std::size_t tested = 0;
  for (const auto& f : all) {
    std::int64_t order = 1;
    for (auto d : f) order *= d;
    const auto lat = all_subgroups(f);
    const std::size_t cap = order <= 16 ? 1u << 20 : 12;
    for (const auto& a : pairings(f, cap, rng)) {
      a.validate();
      check_gamma(a, lat);
      ++tested;
    }
  }
  CHECK(tested <= 10000);
  MESSAGE("paired groups tested: " << tested);
}

TEST_CASE("binary icosahedral group") {
  const auto bi = binary_icosahedral(testing::algebras().get("hamilton-sqrt5"));
  CHECK(bi.elements.size() == 120);
  const auto z = center(bi.table);
  CHECK(z.size() == 2);
  CHECK(brute_center_size(bi.table) == 2);
  const auto h = testing::algebras().get("hamilton-sqrt5");
  for (auto e : z) CHECK((bi.elements[e] == h->one() || bi.elements[e] == -h->one()));
  const auto quot = quotient_by(bi.table, z).table;
  CHECK(quot.order() == 60);
  CHECK(is_simple(quot));
  CHECK(order_histogram(quot) == a5_histogram());
  CHECK(order_histogram(quot) == order_histogram(a5_table()));
  CHECK(are_isomorphic(quot, a5_table()));
}
