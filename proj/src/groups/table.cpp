#include "divalg/groups/table.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include "divalg/error.hpp"

namespace divalg::groups {

FiniteGroupTable::FiniteGroupTable(std::size_t order, std::vector<Elem> table, std::uint64_t seed)
    : order_(order), table_(std::move(table)) {
  auto bad = [](const std::string& msg) { fail(ErrorCode::InvalidArgument, "group table: " + msg); };
  if (order_ == 0) bad("order must be positive");
  if (table_.size() != order_ * order_) bad("table is not order x order");
  std::vector<char> seen(order_);
  for (std::size_t r = 0; r < order_; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < order_; ++c) {
      Elem v = table_[r * order_ + c];
      if (v >= order_ || seen[v]) bad("row " + std::to_string(r) + " is not a permutation");
      seen[v] = 1;
    }
  }
  for (std::size_t c = 0; c < order_; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < order_; ++r) {
      Elem v = table_[r * order_ + c];
      if (seen[v]) bad("column " + std::to_string(c) + " is not a permutation");
      seen[v] = 1;
    }
  }
  bool found = false;
  for (Elem e = 0; e < order_ && !found; ++e) {
    bool ok = true;
    for (Elem x = 0; x < order_ && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) bad("no identity element");
  if (order_ <= 256) {
    for (Elem a = 0; a < order_; ++a) {
      for (Elem b = 0; b < order_; ++b) {
        const Elem ab = mul(a, b);
        for (Elem c = 0; c < order_; ++c) {
          if (mul(ab, c) != mul(a, mul(b, c))) bad("not associative");
        }
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Elem> dist(0, static_cast<Elem>(order_ - 1));
    for (int t = 0; t < 10000; ++t) {
      Elem a = dist(rng), b = dist(rng), c = dist(rng);
      if (mul(mul(a, b), c) != mul(a, mul(b, c))) bad("not associative");
    }
  }
  inverse_.assign(order_, 0);
  for (Elem a = 0; a < order_; ++a) {
    for (Elem b = 0; b < order_; ++b) {
      if (mul(a, b) == identity_) {
        inverse_[a] = b;
        break;
      }
    }
  }
  orders_.assign(order_, 0);
  for (Elem a = 0; a < order_; ++a) {
    int k = 1;
    for (Elem x = a; x != identity_; x = mul(x, a)) ++k;
    orders_[a] = k;
  }
}

FiniteGroupTable FiniteGroupTable::from_rows(const std::vector<std::vector<Elem>>& rows) {
  std::vector<Elem> flat;
  for (const auto& r : rows) {
    if (r.size() != rows.size()) fail(ErrorCode::InvalidArgument, "group table: ragged rows");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return FiniteGroupTable(rows.size(), std::move(flat));
}

Elem FiniteGroupTable::power(Elem a, long long e) const {
  const long long ord = orders_[a];
  e %= ord;
  if (e < 0) e += ord;
  Elem out = identity_;
  for (long long i = 0; i < e; ++i) out = mul(out, a);
  return out;
}

bool FiniteGroupTable::is_abelian() const {
  for (Elem a = 0; a < order_; ++a) {
    for (Elem b = a + 1; b < order_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

Subgroup FiniteGroupTable::generated(const std::vector<Elem>& gens) const {
  std::vector<char> in(order_, 0);
  std::deque<Elem> queue{identity_};
  in[identity_] = 1;
  while (!queue.empty()) {
    Elem x = queue.front();
    queue.pop_front();
    for (Elem g : gens) {
      Elem y = mul(x, g);
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
    }
  }
  Subgroup out;
  for (Elem x = 0; x < order_; ++x) {
    if (in[x]) out.push_back(x);
  }
  return out;
}

Subgroup center(const FiniteGroupTable& g) {
  Subgroup out;
  for (Elem z = 0; z < g.order(); ++z) {
    bool central = true;
    for (Elem x = 0; x < g.order() && central; ++x) central = g.mul(z, x) == g.mul(x, z);
    if (central) out.push_back(z);
  }
  return out;
}

bool is_subgroup(const FiniteGroupTable& g, const Subgroup& h) {
  if (h.empty()) return false;
  std::vector<char> in(g.order(), 0);
  for (Elem x : h) {
    if (x >= g.order()) return false;
    in[x] = 1;
  }
  for (Elem a : h) {
    for (Elem b : h) {
      if (!in[g.mul(a, b)]) return false;
    }
  }
  return in[g.identity()] != 0;
}

bool is_normal(const FiniteGroupTable& g, const Subgroup& h) {
  if (!is_subgroup(g, h)) return false;
  std::vector<char> in(g.order(), 0);
  for (Elem x : h) in[x] = 1;
  for (Elem x = 0; x < g.order(); ++x) {
    for (Elem y : h) {
      if (!in[g.mul(g.mul(x, y), g.inverse(x))]) return false;
    }
  }
  return true;
}

Quotient quotient_by(const FiniteGroupTable& g, const Subgroup& n) {
  if (!is_normal(g, n)) fail(ErrorCode::NotNormal, "subgroup is not normal");
  const std::size_t order = g.order() / n.size();
  std::vector<Elem> coset_of(g.order(), static_cast<Elem>(order));
  std::vector<Elem> reps;
  for (Elem x = 0; x < g.order(); ++x) {
    if (coset_of[x] != order) continue;
    const Elem idx = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem y : n) coset_of[g.mul(x, y)] = idx;
  }
  std::vector<Elem> table(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) table[a * order + b] = coset_of[g.mul(reps[a], reps[b])];
  }
  return Quotient{FiniteGroupTable(order, std::move(table)), std::move(coset_of)};
}

std::map<int, int> order_histogram(const FiniteGroupTable& g) {
  std::map<int, int> out;
  for (Elem x = 0; x < g.order(); ++x) out[g.element_order(x)] += 1;
  return out;
}

std::string StructureTag::to_string() const {
  switch (kind) {
    case Kind::Cyclic: return "cyclic(" + std::to_string(order) + ")";
    case Kind::Dihedral: return "dihedral(" + std::to_string(order) + ")";
    case Kind::GeneralizedQuaternion: return "generalized_quaternion(" + std::to_string(order) + ")";
    case Kind::ElementaryAbelian: return "elementary_abelian(" + std::to_string(prime) + "," + std::to_string(rank) + ")";
    case Kind::Other: return "other(" + std::to_string(order) + ")";
  }
  return "other";
}

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Search x of order m = |G|/2 and y outside <x> with y^2 = x^k (k = 0 or m/2)
// and y x y^-1 = x^-1.
bool matches_index_two_presentation(const FiniteGroupTable& g, bool quaternion) {
  if (g.order() % 2 != 0) return false;
  const int m = static_cast<int>(g.order() / 2);
  for (Elem x = 0; x < g.order(); ++x) {
    if (g.element_order(x) != m) continue;
    const Subgroup cyc = g.generated({x});
    const Elem square = quaternion ? g.power(x, m / 2) : g.identity();
    const Elem x_inv = g.inverse(x);
    for (Elem y = 0; y < g.order(); ++y) {
      if (std::binary_search(cyc.begin(), cyc.end(), y)) continue;
      if (g.mul(y, y) != square) continue;
      if (g.mul(g.mul(y, x), g.inverse(y)) == x_inv) return true;
    }
  }
  return false;
}

}  // namespace

StructureTag recognize(const FiniteGroupTable& g) {
  using Kind = StructureTag::Kind;
  const int n = static_cast<int>(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    if (g.element_order(x) == n) return {Kind::Cyclic, n, 0, 0};
  }
  if (n >= 4 && matches_index_two_presentation(g, false)) return {Kind::Dihedral, n, 0, 0};
  if (n >= 8 && is_power_of_two(g.order()) && matches_index_two_presentation(g, true)) {
    return {Kind::GeneralizedQuaternion, n, 0, 0};
  }
  if (g.is_abelian()) {
    int p = 0;
    for (Elem x = 0; x < g.order(); ++x) {
      if (x != g.identity()) {
        p = g.element_order(x);
        break;
      }
    }
    bool ok = p > 1;
    for (int d = 2; d * d <= p && ok; ++d) ok = p % d != 0;
    for (Elem x = 0; x < g.order() && ok; ++x) ok = x == g.identity() || g.element_order(x) == p;
    if (ok) {
      int rank = 0;
      for (int m = n; m > 1; m /= p) ++rank;
      return {Kind::ElementaryAbelian, n, p, rank};
    }
  }
  return {Kind::Other, n, 0, 0};
}

std::optional<Subgroup> has_normal_cyclic(const FiniteGroupTable& g) {
  for (Elem x = 0; x < g.order(); ++x) {
    if (x == g.identity()) continue;
    Subgroup h = g.generated({x});
    if (is_normal(g, h)) return h;
  }
  return std::nullopt;
}

bool is_simple(const FiniteGroupTable& g) {
  if (g.order() == 1) return false;
  for (Elem x = 0; x < g.order(); ++x) {
    if (x == g.identity()) continue;
    std::vector<Elem> conjugates;
    for (Elem y = 0; y < g.order(); ++y) conjugates.push_back(g.mul(g.mul(y, x), g.inverse(y)));
    if (g.generated(conjugates).size() != g.order()) return false;
  }
  return true;
}

FiniteGroupTable subgroup_table(const FiniteGroupTable& g, const Subgroup& h) {
  if (!is_subgroup(g, h)) fail(ErrorCode::InvalidArgument, "not a subgroup");
  std::vector<Elem> index(g.order(), 0);
  for (std::size_t i = 0; i < h.size(); ++i) index[h[i]] = static_cast<Elem>(i);
  std::vector<Elem> table(h.size() * h.size());
  for (std::size_t a = 0; a < h.size(); ++a) {
    for (std::size_t b = 0; b < h.size(); ++b) table[a * h.size() + b] = index[g.mul(h[a], h[b])];
  }
  return FiniteGroupTable(h.size(), std::move(table));
}

FiniteGroupTable cyclic_group(std::size_t n) {
  std::vector<Elem> t(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Elem>((a + b) % n);
  }
  return FiniteGroupTable(n, std::move(t));
}

FiniteGroupTable dihedral_group(std::size_t order) {
  // x^i y^j at index i + m j; y x = x^-1 y.
  const std::size_t m = order / 2;
  std::vector<Elem> t(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      std::size_t i = a % m, j = a / m, i2 = b % m, j2 = b / m;
      std::size_t ni = j == 0 ? (i + i2) % m : (i + m - i2) % m;
      t[a * order + b] = static_cast<Elem>(ni + m * ((j + j2) % 2));
    }
  }
  return FiniteGroupTable(order, std::move(t));
}

FiniteGroupTable generalized_quaternion_group(std::size_t order) {
  // x^i y^j, y x = x^-1 y, y^2 = x^(m/2).
  const std::size_t m = order / 2;
  std::vector<Elem> t(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      std::size_t i = a % m, j = a / m, i2 = b % m, j2 = b / m;
      std::size_t ni = j == 0 ? (i + i2) % m : (i + m - i2) % m;
      if (j == 1 && j2 == 1) ni = (ni + m / 2) % m;
      t[a * order + b] = static_cast<Elem>(ni + m * ((j + j2) % 2));
    }
  }
  return FiniteGroupTable(order, std::move(t));
}

FiniteGroupTable direct_product(const FiniteGroupTable& a, const FiniteGroupTable& b) {
  const std::size_t n = a.order() * b.order();
  std::vector<Elem> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      Elem first = a.mul(static_cast<Elem>(x % a.order()), static_cast<Elem>(y % a.order()));
      Elem second = b.mul(static_cast<Elem>(x / a.order()), static_cast<Elem>(y / a.order()));
      t[x * n + y] = static_cast<Elem>(first + a.order() * second);
    }
  }
  return FiniteGroupTable(n, std::move(t));
}

Json group_to_json(const FiniteGroupTable& g) {
  Json rows = Json::array();
  for (Elem a = 0; a < g.order(); ++a) {
    Json row = Json::array();
    for (Elem b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    rows.push_back(std::move(row));
  }
  return Json{{"order", g.order()}, {"table", std::move(rows)}};
}

FiniteGroupTable group_from_json(const Json& doc) {
  try {
    const auto order = doc.at("order").get<std::size_t>();
    auto rows = doc.at("table").get<std::vector<std::vector<Elem>>>();
    if (rows.size() != order) fail(ErrorCode::ParseError, "table row count does not match order");
    return FiniteGroupTable::from_rows(rows);
  } catch (const Json::exception& e) {
    fail(ErrorCode::ParseError, std::string("malformed group table: ") + e.what());
  }
}

}  // namespace divalg::groups
