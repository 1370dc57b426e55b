#include "order.hpp"

#include <algorithm>

namespace gencomm {

int rep_mod(int v, int n) {
  int m = ((v % n) + n) % n;
  return m > (n - 1) / 2 ? m - n : m;
}

std::strong_ordering vertex_cmp(int v1, int v2, int n) {
  int r1 = rep_mod(v1, n), r2 = rep_mod(v2, n);
  int a1 = r1 < 0 ? -r1 : r1, a2 = r2 < 0 ? -r2 : r2;
  if (a1 != a2) return a1 < a2 ? std::strong_ordering::greater : std::strong_ordering::less;
  if (r1 == r2) return std::strong_ordering::equal;
  // equal magnitude, distinct: the negative representative is heavier
  return r1 < 0 ? std::strong_ordering::greater : std::strong_ordering::less;
}

bool vertex_greater(int v1, int v2, int n) { return vertex_cmp(v1, v2, n) == std::strong_ordering::greater; }

EdgeKey edge_key(int label, int source, int displacement, int n) {
  int t = ((source + displacement) % n + n) % n;
  EdgeKey k{source, t, label};
  if (vertex_cmp(k.hi, k.lo, n) == std::strong_ordering::less) std::swap(k.hi, k.lo);
  return k;
}

std::strong_ordering edge_key_cmp(const EdgeKey& a, const EdgeKey& b, int n) {
  if (auto c = vertex_cmp(a.hi, b.hi, n); c != std::strong_ordering::equal) return c;
  if (auto c = vertex_cmp(a.lo, b.lo, n); c != std::strong_ordering::equal) return c;
  if (a.label != b.label)
    return a.label < b.label ? std::strong_ordering::greater : std::strong_ordering::less;
  return std::strong_ordering::equal;
}

namespace {

std::vector<EdgeKey> sorted_keys(const LabeledDigraph& g) {
  std::vector<EdgeKey> keys;
  for (int l : g.present_labels()) keys.push_back(edge_key(l, g.source(l), g.displacement(l), g.n()));
  std::sort(keys.begin(), keys.end(), [&](const EdgeKey& a, const EdgeKey& b) {
    return edge_key_cmp(a, b, g.n()) == std::strong_ordering::greater;
  });
  return keys;
}

}  // namespace

std::strong_ordering graph_cmp(const LabeledDigraph& g1, const LabeledDigraph& g2) {
  if (g1.n() != g2.n()) throw std::invalid_argument("graph_cmp: different vertex counts");
  if (g1.present_labels() != g2.present_labels())
    throw std::invalid_argument("graph_cmp: graphs carry different label sets");
  std::vector<EdgeKey> k1 = sorted_keys(g1), k2 = sorted_keys(g2);
  for (size_t i = 0; i < k1.size(); ++i)
    if (auto c = edge_key_cmp(k1[i], k2[i], g1.n()); c != std::strong_ordering::equal) return c;
  return std::strong_ordering::equal;
}

std::strong_ordering monomial_cmp(const Monomial& m1, const Monomial& m2, const Exponents& e, int n) {
  return graph_cmp(graph_of_monomial(m1, e, n, 0), graph_of_monomial(m2, e, n, 0));
}

Matrix<Int> initial_coeff_matrix(const BlockOperator& blk) {
  const int n = blk.n;
  Matrix<Int> ic(n, n, Int(0));
  for (int a = 0; a < n; ++a) {
    const Monomial* best = nullptr;
    for (int b = 0; b < n; ++b)
      for (const auto& [m, c] : blk.body(a, b).terms()) {
        if (!best || monomial_cmp(m, *best, blk.expo, n) == std::strong_ordering::greater) best = &m;
      }
    if (!best) continue;  // empty row stays zero
    for (int b = 0; b < n; ++b) {
      Rational c = blk.body(a, b).coeff(*best);
      if (!c.is_integer()) throw std::logic_error("initial_coeff_matrix: non-integer coefficient");
      ic(a, b) = c.num();
    }
  }
  return ic;
}

bool universe_member(const LabeledDigraph& g, int a) {
  if (g.has_repeated_edge()) return false;
  for (int b = 0; b < g.n(); ++b)
    if (g.with_extra_edge(b).has_eulerian_path_from(a)) return true;
  return false;
}

bool nonzero_universe_member(const LabeledDigraph& g, int a) {
  if (g.has_repeated_edge()) return false;
  for (int b = 0; b < g.n(); ++b)
    if (g.with_extra_edge(b).signed_sum(a) != 0) return true;
  return false;
}

std::vector<LabeledDigraph> enumerate_universe(const UniverseFilter& f, int n, const Exponents& e) {
  for (size_t i = 0; i < f.labels.size(); ++i) {
    int l = f.labels[i];
    if (l < 1 || l > e.k() || (i > 0 && f.labels[i - 1] >= l))
      throw std::invalid_argument("enumerate_universe: label subset must be ascending within 1..k");
  }
  std::vector<int> disp(static_cast<size_t>(e.k() + 1));
  for (int l = 1; l <= e.k(); ++l) disp[static_cast<size_t>(l - 1)] = e.of_label(l);
  disp[static_cast<size_t>(e.k())] = f.j;
  LabeledDigraph base(n, disp);

  std::vector<LabeledDigraph> out;
  const size_t m = f.labels.size();
  std::vector<int> srcs(m, 0);
  for (;;) {
    LabeledDigraph g = base;
    for (size_t i = 0; i < m; ++i) g.set_edge(f.labels[i], srcs[i]);
    if (universe_member(g, f.a)) out.push_back(g);
    size_t pos = 0;
    while (pos < m && ++srcs[pos] == n) srcs[pos++] = 0;
    if (pos == m) break;
  }
  return out;
}

LabeledDigraph top_flower(int t, int n, const Exponents& e, int extra_displacement) {
  if (t < 0 || t > e.r) throw std::invalid_argument("top_flower: t out of range");
  if (n <= e.r) throw std::invalid_argument("top_flower: need n > r");
  std::vector<int> disp(static_cast<size_t>(e.k() + 1));
  for (int l = 1; l <= e.k(); ++l) disp[static_cast<size_t>(l - 1)] = e.of_label(l);
  disp[static_cast<size_t>(e.k())] = extra_displacement;
  LabeledDigraph g(n, disp);
  for (int l = 1; l <= t; ++l) {
    int petal = (l % 2 == 1) ? -(l + 1) / 2 : l / 2;  // -1, 1, -2, 2, ...
    if (l % 2 == 1) {
      g.set_edge(l, ((petal % n) + n) % n);                       // petal -> hub
      g.set_edge(Exponents::label_of_signed(-l, e.r), 0);         // hub -> petal
    } else {
      g.set_edge(l, 0);                                           // hub -> petal
      g.set_edge(Exponents::label_of_signed(-l, e.r), petal % n); // petal -> hub
    }
  }
  return g;
}

std::vector<int> top_flower_support(int t) {
  std::vector<int> supp;
  if (t == 0) return supp;
  for (int v = -(t + 1) / 2; v <= t / 2; ++v) supp.push_back(v);
  return supp;
}

std::set<int> reachable_set(int a, int t, int j, const Exponents& e, int n) {
  std::vector<int> steps;
  for (int i = t + 1; i <= e.r; ++i) {
    steps.push_back(e.of_signed(i));
    steps.push_back(e.of_signed(-i));
  }
  steps.push_back(j);
  std::set<int> sums{((a % n) + n) % n};
  for (int st : steps) {
    std::set<int> next = sums;
    for (int v : sums) next.insert(((v + st) % n + n) % n);
    sums = std::move(next);
  }
  return sums;
}

int max_top_flower(int a, int j, int n, const Exponents& e) {
  if (n <= e.r) throw std::invalid_argument("max_top_flower: need n > r");
  for (int t = e.r; t >= 1; --t) {
    std::set<int> reach = reachable_set(a, t, j, e, n);
    bool hit = false;
    for (int v : top_flower_support(t))
      if (reach.count(((v % n) + n) % n)) {
        hit = true;
        break;
      }
    if (hit) return t;
  }
  return 0;
}

LabeledDigraph maximal_graph(int a, int j, int n, const Exponents& e) {
  if (n <= e.r) throw std::invalid_argument("maximal_graph: need n > r");
  const int t = max_top_flower(a, j, n, e);
  LabeledDigraph g = top_flower(t, n, e, j);
  int aj = ((a + j) % n + n) % n;
  int a0 = ((a % n) + n) % n;
  int anchor = vertex_greater(aj, a0, n) ? aj : a0;
  bool descending_side = rep_mod(anchor, n) <= 0;
  int u = anchor;
  for (int i = e.r; i > t; --i) {
    int s = e.of_signed(i);
    if (descending_side) {
      g.set_edge(Exponents::label_of_signed(i, e.r), u);
      g.set_edge(Exponents::label_of_signed(-i, e.r), ((u + s) % n + n) % n);
      u = ((u + s) % n + n) % n;
    } else {
      g.set_edge(Exponents::label_of_signed(-i, e.r), u);
      g.set_edge(Exponents::label_of_signed(i, e.r), ((u - s) % n + n) % n);
      u = ((u - s) % n + n) % n;
    }
  }
  return g;
}

IcRow ic_row_via_maximal(int a, int j, int n, const Exponents& e) {
  IcRow row;
  row.coeffs.assign(static_cast<size_t>(n), 0);

  auto fill_from = [&](const LabeledDigraph& g) -> bool {
    bool nonzero = false;
    for (int b = 0; b < n; ++b) {
      long long s = g.with_extra_edge(b).signed_sum(a);
      row.coeffs[static_cast<size_t>(b)] = s;
      if (s != 0) nonzero = true;
    }
    return nonzero;
  };

  LabeledDigraph top = maximal_graph(a, j, n, e);
  if (fill_from(top)) {
    row.witness = top;
    return row;
  }

  // The greatest graph contributes nothing; walk the order downward.
  UniverseFilter f{a, j, {}};
  for (int l = 1; l <= e.k(); ++l) f.labels.push_back(l);
  std::vector<LabeledDigraph> universe = enumerate_universe(f, n, e);
  std::stable_sort(universe.begin(), universe.end(), [](const LabeledDigraph& x, const LabeledDigraph& y) {
    return graph_cmp(x, y) == std::strong_ordering::greater;
  });
  for (const LabeledDigraph& g : universe) {
    if (g == top) continue;  // already tried
    ++row.descents;
    if (fill_from(g)) {
      row.witness = g;
      return row;
    }
  }
  row.coeffs.assign(static_cast<size_t>(n), 0);
  row.zero_row = true;
  return row;
}

Matrix<Int> ic_via_maximal(int j, int n, const Exponents& e) {
  Matrix<Int> ic(n, n, Int(0));
  for (int a = 0; a < n; ++a) {
    IcRow row = ic_row_via_maximal(a, j, n, e);
    for (int b = 0; b < n; ++b) ic(a, b) = Int(static_cast<long>(row.coeffs[static_cast<size_t>(b)]));
  }
  return ic;
}

Matrix<Int> center_block_matrix(int r) {
  if (r < 1) throw std::invalid_argument("center_block_matrix: need r >= 1");
  std::vector<int> supp = top_flower_support(r);
  const int m = static_cast<int>(supp.size());  // r + 1
  Int base = factorial(r - 1);
  Matrix<Int> nm(m, m, Int(0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int a = supp[static_cast<size_t>(i)], b = supp[static_cast<size_t>(j)];
      Int cell;
      if (a == 0 && b == 0)
        cell = Int(r) * (r + 1);
      else if (a == 0 || b == 0)
        cell = r;
      else if (a == b)
        cell = 2;
      else
        cell = 1;
      nm(i, j) = base * cell;
    }
  return nm;
}

int delta_budget(int j, int n, int r) {
  auto in_support = [&](int v) {
    int rep = rep_mod(v, n);
    return rep >= -(r + 1) / 2 && rep <= r / 2;
  };
  int d = 0;
  if (in_support(j)) ++d;
  if (in_support(-j)) ++d;
  return d;
}

namespace {

bool magnitude_is_double_factorial(const Int& v, int r) {
  for (int al = 0; al <= r; ++al)
    if (abs(v) == 2 * factorial(al)) return true;
  return false;
}

int field_nullity(const Matrix<Int>& m, const FieldConfig& f) {
  if (f.kind == FieldKind::kPrime) {
    GfScope scope(f.p);
    return nullity(reduce_mod(m));
  }
  return nullity(m);
}

}  // namespace

StructureReport structure_report(int n, int r, FieldConfig field, std::uint64_t seed) {
  if (n <= r) throw std::invalid_argument("structure_report: need n > r");
  if (field.kind == FieldKind::kPrime && !admissible_characteristic(field.p, r))
    throw std::invalid_argument("structure_report: characteristic divides 2(2r+1)r!");

  Exponents e = Exponents::canonical(r);
  const int k = e.k();
  StructureReport rep;
  rep.n = n;
  rep.r = r;
  rep.field = field;

  std::vector<Matrix<Int>> ic;
  ic.reserve(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) ic.push_back(ic_via_maximal(j, n, e));
  for (int j = 0; j < n; ++j) rep.ic_nullities.push_back(field_nullity(ic[static_cast<size_t>(j)], field));
  rep.deltas.assign(static_cast<size_t>(n), 0);
  for (int j = 1; j < n; ++j) rep.deltas[static_cast<size_t>(j)] = delta_budget(j, n, r);

  auto check = [&](const std::string& name, bool ok, const std::string& witness) {
    rep.checks.push_back({name, ok, ok ? "" : witness});
  };

  // Per-shift nullity budgets.
  {
    bool ok = true;
    std::string w;
    for (int j = 1; j < n; ++j)
      if (rep.ic_nullities[static_cast<size_t>(j)] > rep.deltas[static_cast<size_t>(j)]) {
        ok = false;
        w += "j=" + std::to_string(j) + " nullity " + std::to_string(rep.ic_nullities[static_cast<size_t>(j)]) +
             " > budget " + std::to_string(rep.deltas[static_cast<size_t>(j)]) + "; ";
      }
    check("nonzero_shift_nullity_budgets", ok, w);
  }

  check("zero_shift_nonsingular", rep.ic_nullities[0] == 0,
        "nullity " + std::to_string(rep.ic_nullities[0]));

  for (int v : rep.ic_nullities) rep.nullity_sum += v;
  check("nullity_sum_equals_k", rep.nullity_sum == k,
        "sum " + std::to_string(rep.nullity_sum) + " != k = " + std::to_string(k));

  // Reindexed zero-shift block shape. Row/column index i stands for the
  // representative i - ceil((n-1)/2).
  {
    const int shift = n / 2;  // ceil((n-1)/2)
    auto orig = [&](int i) { return ((i - shift) % n + n) % n; };
    Matrix<Int> icp(n, n, Int(0));
    for (int i = 0; i < n; ++i)
      for (int j2 = 0; j2 < n; ++j2) icp(i, j2) = ic[0](orig(i), orig(j2));

    const int upper = shift - (r + 1) / 2;  // rows above the flower support
    const int mid = r + 1;
    bool ok = true;
    std::string w;
    auto flag = [&](const std::string& msg) {
      ok = false;
      w += msg + "; ";
    };

    for (int i = 0; i < upper; ++i) {
      for (int j2 = 0; j2 < i; ++j2)
        if (icp(i, j2) != 0) flag("upper block not triangular at (" + std::to_string(i) + "," + std::to_string(j2) + ")");
      for (int j2 = upper + mid; j2 < n; ++j2)
        if (icp(i, j2) != 0) flag("upper-right block not zero at (" + std::to_string(i) + "," + std::to_string(j2) + ")");
      if (!magnitude_is_double_factorial(icp(i, i), r))
        flag("upper diagonal " + icp(i, i).get_str() + " at " + std::to_string(i) + " is not +-2*alpha!");
    }
    for (int i = upper + mid; i < n; ++i) {
      for (int j2 = i + 1; j2 < n; ++j2)
        if (icp(i, j2) != 0) flag("lower block not triangular at (" + std::to_string(i) + "," + std::to_string(j2) + ")");
      for (int j2 = 0; j2 < upper; ++j2)
        if (icp(i, j2) != 0) flag("lower-left block not zero at (" + std::to_string(i) + "," + std::to_string(j2) + ")");
      if (!magnitude_is_double_factorial(icp(i, i), r))
        flag("lower diagonal " + icp(i, i).get_str() + " at " + std::to_string(i) + " is not +-2*alpha!");
    }

    Matrix<Int> nm = center_block_matrix(r);
    for (int i = upper; i < upper + mid; ++i)
      for (int j2 = 0; j2 < n; ++j2) {
        bool inside = j2 >= upper && j2 < upper + mid;
        if (!inside && icp(i, j2) != 0)
          flag("center rows leak outside the support columns at (" + std::to_string(i) + "," + std::to_string(j2) + ")");
      }
    // Column signs are free; normalize on the hub row, which is nonzero
    // across the whole center block.
    const int hub = upper + (r + 1) / 2;
    for (int j2 = 0; j2 < mid && ok; ++j2) {
      Int hubval = icp(hub, upper + j2);
      if (hubval == 0) {
        flag("hub row vanishes in center column " + std::to_string(j2));
        break;
      }
      int sign = sgn(hubval) >= 0 ? 1 : -1;
      for (int i = 0; i < mid; ++i)
        if (icp(upper + i, upper + j2) * sign != nm(i, j2))
          flag("center block mismatch at (" + std::to_string(i) + "," + std::to_string(j2) + ")");
    }
    check("zero_shift_block_shape", ok, w);
  }

  // Randomized spot check of nullity(L_j) <= nullity(Ic(L_j)) at desk scale.
  if (n <= 5 && r <= 2) {
    GfScope scope(field.kind == FieldKind::kPrime ? field.p : GfElem::kDefaultModulus);
    rep.randomized_block_check = true;
    bool ok = true;
    std::string w;
    for (int j = 0; j < n; ++j) {
      BlockOperator blk = block_direct(n, r, j);
      PolyRank pr = rank_poly_randomized(blk.body, 3, seed + static_cast<std::uint64_t>(j));
      int block_nullity = n - pr.value;
      if (block_nullity > rep.ic_nullities[static_cast<size_t>(j)]) {
        ok = false;
        w += "j=" + std::to_string(j) + " block nullity " + std::to_string(block_nullity) + " > initial-matrix nullity " +
             std::to_string(rep.ic_nullities[static_cast<size_t>(j)]) + "; ";
      }
    }
    check("block_nullity_bounded_by_initial", ok, w);
  }

  rep.ok = true;
  for (const auto& c : rep.checks) rep.ok = rep.ok && c.ok;
  return rep;
}

nlohmann::json structure_report_to_json(const StructureReport& rep) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : rep.checks) {
    nlohmann::json jc{{"name", c.name}, {"ok", c.ok}};
    if (!c.ok) jc["witness"] = c.witness;
    checks.push_back(jc);
  }
  nlohmann::json nul = nlohmann::json::object(), del = nlohmann::json::object();
  for (int j = 0; j < rep.n; ++j) nul[std::to_string(j)] = rep.ic_nullities[static_cast<size_t>(j)];
  for (int j = 1; j < rep.n; ++j) del[std::to_string(j)] = rep.deltas[static_cast<size_t>(j)];
  return nlohmann::json{{"n", rep.n},
                        {"r", rep.r},
                        {"k", 2 * rep.r},
                        {"initial_nullities", nul},
                        {"nullity_budgets", del},
                        {"nullity_sum", rep.nullity_sum},
                        {"randomized_block_check", rep.randomized_block_check},
                        {"checks", checks},
                        {"ok", rep.ok}};
}

}  // namespace gencomm
