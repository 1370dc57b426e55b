#pragma once

#include <vector>

#include "commutator.hpp"
#include "digraph.hpp"
#include "matrix.hpp"
#include "poly.hpp"

namespace gencomm {

// The canonical displacement exponents for k = 2r factor slots:
//   s_i = ceil(i/2) for i = 1..r, and s_{r+i} = -ceil(i/2),
// i.e. (1, 1, 2, 2, ..., ceil(r/2), -1, -1, ..., -ceil(r/2)). Signed index
// i in +-1..+-r addresses the pair structure: the label of -i is r+i.
struct Exponents {
  int r = 0;
  std::vector<int> s;  // by label, index label-1, size 2r; exact integers

  static Exponents canonical(int r);

  int k() const { return 2 * r; }
  int of_label(int label) const;       // label in 1..k
  int of_signed(int i) const;          // i in +-1..+-r
  static int label_of_signed(int i, int r);
  int sum() const;                     // always 0 for the canonical vector
};

// Cyclic shift matrix: ones on the superdiagonal wrapping around, so
// C^n = I and E_ii * C^j = E_{i,i+j}.
template <class T>
Matrix<T> cyclic_matrix(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_matrix: need n >= 1");
  Matrix<T> c(n, n, T(0));
  for (int i = 0; i < n; ++i) c(i, (i + 1) % n) = T(1);
  return c;
}

// The specialized factor for one slot: a generic diagonal times a cyclic
// shift, i.e. entries x_{label, a} at positions (a, a + s) mod n.
Matrix<PolyQ> shifted_diagonal_matrix(int label, int n, int k, int s);

// The full specialized tuple A_1..A_k for the canonical exponents.
std::vector<Matrix<PolyQ>> specialized_tuple(const Exponents& e, int n);

// Monomial <-> graph dictionary: the graph of a full monomial places edge
// l at source alpha_l with the slot displacement; the extra slot k+1 gets
// displacement j. The two maps are mutually inverse.
LabeledDigraph graph_of_monomial(const Monomial& m, const Exponents& e, int n, int j);
Monomial monomial_of_graph(const LabeledDigraph& g);

// One shifted-diagonal block of the operator: the restriction mapping the
// j-th shifted diagonal into the (j+s)-th, as an n x n polynomial matrix
// in the bases E_{b,b+j} (domain) and E_{a,a+j+s} (range).
struct BlockOperator {
  int n = 0;
  int j = 0;
  Exponents expo;
  Matrix<PolyQ> body;
};

// Entrywise build: walks all source tuples, and for every admissible
// start the signed Eulerian sum of the extended graph lands in the
// corresponding row. Source tuples whose extended graphs never satisfy
// the degree conditions are discarded early.
BlockOperator block_direct(int n, int r, int j);

// Same block sliced out of the assembled full operator on symbolic
// factors; entries outside the predicted block pattern must vanish.
BlockOperator block_via_operator(int n, int r, int j);

OperatorMatrix<PolyQ> full_specialized_operator(int n, int r);

nlohmann::json block_to_json(const BlockOperator& b);

}  // namespace gencomm
