#pragma once

#include <compare>
#include <set>
#include <vector>

#include "specialize.hpp"

namespace gencomm {

// Representative of v mod n in [-ceil((n-1)/2), floor((n-1)/2)].
int rep_mod(int v, int n);

// Vertex weight order: P_0 > P_{-1} > P_1 > P_{-2} > P_2 > ... (smaller
// |representative| wins, negative representative breaks the tie).
std::strong_ordering vertex_cmp(int v1, int v2, int n);
bool vertex_greater(int v1, int v2, int n);

// Key of an edge instance: its unordered endpoint pair ordered by vertex
// weight, with the original label as tiebreaker (smaller label ranks
// higher among edges on the same pair).
struct EdgeKey {
  int hi = 0, lo = 0;  // endpoints, hi weakly greater than lo in vertex order
  int label = 0;
};

EdgeKey edge_key(int label, int source, int displacement, int n);
std::strong_ordering edge_key_cmp(const EdgeKey& a, const EdgeKey& b, int n);

// Graph order: both graphs must carry the same label set; their edge keys
// are sorted descending and compared lexicographically. Monomials inherit
// the order through their graphs.
std::strong_ordering graph_cmp(const LabeledDigraph& g1, const LabeledDigraph& g2);
std::strong_ordering monomial_cmp(const Monomial& m1, const Monomial& m2, const Exponents& e, int n);

// Initial coefficient matrix: per row, the coefficient of that row's
// largest monomial in every entry (zero rows stay zero).
Matrix<Int> initial_coeff_matrix(const BlockOperator& blk);

// Admissible graphs for a row/column pair: edges exactly the given label
// subset with the slot displacements, no repeated edges, and some
// placement of the extra edge admits an Eulerian path from the row vertex.
struct UniverseFilter {
  int a = 0;
  int j = 0;
  std::vector<int> labels;  // subset of 1..k, ascending
};

std::vector<LabeledDigraph> enumerate_universe(const UniverseFilter& f, int n, const Exponents& e);
bool universe_member(const LabeledDigraph& g, int a);

// Whether some placement of the extra edge gives a *nonzero* signed sum
// from the row vertex.
bool nonzero_universe_member(const LabeledDigraph& g, int a);

// The canonical flower of greatest-weight edges: t out-and-back pairs
// between the hub and the 2t heaviest remaining vertices, using labels
// +-1..+-t. t = 0 is the empty graph.
LabeledDigraph top_flower(int t, int n, const Exponents& e, int extra_displacement = 0);
std::vector<int> top_flower_support(int t);  // representatives, ascending; empty for t = 0

// Vertices reachable from `a` using only the extra edge and edge pairs
// above t: all partial sums of {s_i : |i| > t} and j, mod n.
std::set<int> reachable_set(int a, int t, int j, const Exponents& e, int n);

// Largest t in 0..r such that some admissible graph contains the
// t-flower; equivalently the largest t whose reachable set meets the
// flower support (t = 0 always qualifies).
int max_top_flower(int a, int j, int n, const Exponents& e);

// The greatest admissible graph: the t-flower for the largest feasible t,
// joined to a two-way chain of the remaining edge pairs descending from
// the heavier of the row vertex and its displaced image.
LabeledDigraph maximal_graph(int a, int j, int n, const Exponents& e);

// One row of the initial coefficient matrix read from maximal graphs: the
// signed sums of the greatest admissible graph, descending the graph
// order past graphs whose rows vanish entirely.
struct IcRow {
  std::vector<long long> coeffs;
  bool zero_row = false;       // no admissible graph had a nonzero sum
  int descents = 0;            // graphs skipped before the realizing one
  LabeledDigraph witness{1, {}};
};

IcRow ic_row_via_maximal(int a, int j, int n, const Exponents& e);
Matrix<Int> ic_via_maximal(int j, int n, const Exponents& e);

// The center block of the reindexed zero-shift initial matrix: rows and
// columns indexed by the r-flower support, entries (r-1)! * (2 on the
// diagonal, r in the hub row and column, r(r+1) at the hub, 1 elsewhere).
Matrix<Int> center_block_matrix(int r);

// Per-shift nullity budget: how many of +-j fall in the r-flower support.
int delta_budget(int j, int n, int r);

struct StructureCheck {
  std::string name;
  bool ok = false;
  std::string witness;  // empty when ok
};

struct StructureReport {
  int n = 0, r = 0;
  FieldConfig field;
  std::vector<int> ic_nullities;   // by shift j
  std::vector<int> deltas;         // by shift j (delta_budget; deltas[0] unused)
  int nullity_sum = 0;
  std::vector<StructureCheck> checks;
  bool randomized_block_check = false;  // whether the block-vs-initial spot check ran
  bool ok = false;
};

// Runs the whole initial-coefficient verification for one (n, r): per-
// shift nullity budgets, nonsingularity of the zero-shift matrix, the
// budget sum equaling k, the triangular/center block shape of the
// reindexed zero-shift matrix, and (at desk scale) the randomized
// nullity(L_j) <= nullity(Ic(L_j)) spot check.
StructureReport structure_report(int n, int r, FieldConfig field, std::uint64_t seed = 12345);

nlohmann::json structure_report_to_json(const StructureReport& rep);

}  // namespace gencomm
