#include "specialize.hpp"

namespace gencomm {

Exponents Exponents::canonical(int r) {
  if (r < 1) throw std::invalid_argument("Exponents: need r >= 1");
  Exponents e;
  e.r = r;
  e.s.resize(static_cast<size_t>(2 * r));
  for (int i = 1; i <= r; ++i) {
    e.s[static_cast<size_t>(i - 1)] = (i + 1) / 2;
    e.s[static_cast<size_t>(r + i - 1)] = -(i + 1) / 2;
  }
  return e;
}

int Exponents::of_label(int label) const {
  if (label < 1 || label > k()) throw std::invalid_argument("Exponents: label out of range");
  return s[static_cast<size_t>(label - 1)];
}

int Exponents::of_signed(int i) const { return of_label(label_of_signed(i, r)); }

int Exponents::label_of_signed(int i, int r) {
  if (i == 0 || i > r || i < -r) throw std::invalid_argument("Exponents: signed index out of range");
  return i > 0 ? i : r - i;
}

int Exponents::sum() const {
  int t = 0;
  for (int v : s) t += v;
  return t;
}

Matrix<PolyQ> shifted_diagonal_matrix(int label, int n, int k, int s) {
  if (label < 1 || label > k) throw std::invalid_argument("shifted_diagonal_matrix: label out of range");
  Matrix<PolyQ> m(n, n, PolyQ::zero(k, n));
  int sh = ((s % n) + n) % n;
  for (int a = 0; a < n; ++a) m(a, (a + sh) % n) = PolyQ::variable(k, n, label, a);
  return m;
}

std::vector<Matrix<PolyQ>> specialized_tuple(const Exponents& e, int n) {
  std::vector<Matrix<PolyQ>> out;
  out.reserve(static_cast<size_t>(e.k()));
  for (int l = 1; l <= e.k(); ++l) out.push_back(shifted_diagonal_matrix(l, n, e.k(), e.of_label(l)));
  return out;
}

LabeledDigraph graph_of_monomial(const Monomial& m, const Exponents& e, int n, int j) {
  if (!m.full(e.k())) throw std::invalid_argument("graph_of_monomial: monomial must carry every slot");
  std::vector<int> disp(static_cast<size_t>(e.k() + 1));
  for (int l = 1; l <= e.k(); ++l) disp[static_cast<size_t>(l - 1)] = e.of_label(l);
  disp[static_cast<size_t>(e.k())] = j;
  LabeledDigraph g(n, disp);
  for (const auto& [l, a] : m.factors()) g.set_edge(l, a);
  return g;
}

Monomial monomial_of_graph(const LabeledDigraph& g) {
  std::vector<int> labels = g.present_labels();
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] != static_cast<int>(i) + 1)
      throw std::invalid_argument("monomial_of_graph: edges must be labeled 1..k without gaps");
  Monomial m;
  for (int l : labels) m = m * Monomial::var(l, g.source(l));
  return m;
}

namespace {

// Start vertices that can carry an Eulerian path of g, read off the degree
// profile: one out-in surplus vertex, or any touched vertex of a balanced
// graph. Connectivity is left to the enumerator.
std::vector<int> candidate_starts(const LabeledDigraph& g) {
  std::vector<int> out(static_cast<size_t>(g.n()), 0), in(static_cast<size_t>(g.n()), 0);
  for (int l = 1; l <= g.label_count(); ++l) {
    if (!g.has_edge(l)) continue;
    ++out[static_cast<size_t>(g.source(l))];
    ++in[static_cast<size_t>(g.target(l))];
  }
  int plus = -1, minus = -1;
  for (int v = 0; v < g.n(); ++v) {
    int d = out[static_cast<size_t>(v)] - in[static_cast<size_t>(v)];
    if (d == 0) continue;
    if (d == 1 && plus < 0)
      plus = v;
    else if (d == -1 && minus < 0)
      minus = v;
    else
      return {};
  }
  if (plus >= 0 || minus >= 0) {
    if (plus < 0 || minus < 0) return {};
    return {plus};
  }
  std::vector<int> starts;
  for (int v = 0; v < g.n(); ++v)
    if (out[static_cast<size_t>(v)] > 0) starts.push_back(v);
  return starts;
}

}  // namespace

BlockOperator block_direct(int n, int r, int j) {
  Exponents e = Exponents::canonical(r);
  const int k = e.k();
  BlockOperator blk{n, ((j % n) + n) % n, e, Matrix<PolyQ>(n, n, PolyQ::zero(k, n))};

  std::vector<int> srcs(static_cast<size_t>(k), 0);
  for (;;) {
    Monomial m;
    for (int l = 1; l <= k; ++l) m = m * Monomial::var(l, srcs[static_cast<size_t>(l - 1)]);
    LabeledDigraph g = graph_of_monomial(m, e, n, blk.j);
    if (!g.has_repeated_edge()) {
      for (int b = 0; b < n; ++b) {
        LabeledDigraph gb = g.with_extra_edge(b);
        for (int a : candidate_starts(gb)) {
          long long c = gb.signed_sum(a);
          if (c != 0) blk.body(a, b).add_term(m, Rational(c));
        }
      }
    }
    int pos = 0;
    while (pos < k && ++srcs[static_cast<size_t>(pos)] == n) srcs[static_cast<size_t>(pos++)] = 0;
    if (pos == k) break;
  }
  return blk;
}

OperatorMatrix<PolyQ> full_specialized_operator(int n, int r) {
  Exponents e = Exponents::canonical(r);
  std::vector<Matrix<PolyQ>> tuple = specialized_tuple(e, n);
  return operator_matrix(std::span<const Matrix<PolyQ>>(tuple));
}

BlockOperator block_via_operator(int n, int r, int j) {
  Exponents e = Exponents::canonical(r);
  j = ((j % n) + n) % n;
  const int s = ((e.sum() % n) + n) % n;
  OperatorMatrix<PolyQ> full = full_specialized_operator(n, r);

  BlockOperator blk{n, j, e, Matrix<PolyQ>(n, n, PolyQ::zero(e.k(), n))};
  for (int b = 0; b < n; ++b) {
    int col = b * n + (b + j) % n;
    for (int row = 0; row < n * n; ++row) {
      const PolyQ& entry = full.body(row, col);
      if (entry.is_zero()) continue;
      int c = row / n, d = row % n;
      if (d != (c + j + s) % n)
        throw std::logic_error("block_via_operator: image escapes the predicted shifted diagonal");
      blk.body(c, b) = entry;
    }
  }
  return blk;
}

nlohmann::json block_to_json(const BlockOperator& b) {
  return nlohmann::json{{"n", b.n}, {"r", b.expo.r}, {"j", b.j}, {"body", poly_matrix_to_json(b.body)}};
}

}  // namespace gencomm
