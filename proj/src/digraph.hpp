#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace gencomm {

// An Eulerian traversal: the labels in visiting order, and the signature
// of that order as a permutation relative to ascending labels.
struct SignedPath {
  std::vector<int> labels;
  int sign = 1;
};

// Directed graph on vertices 0..n-1 (read modulo n) with labeled edges
// 1..L, each label used at most once. Label l has a fixed displacement:
// an edge with label l and source v points at (v + disp[l]) mod n. General
// graphs pick displacements freely; the specialized families fix them.
class LabeledDigraph {
 public:
  LabeledDigraph(int n, std::vector<int> displacements);

  int n() const { return n_; }
  int label_count() const { return static_cast<int>(disp_.size()); }
  int displacement(int label) const { return disp_[check_label(label)]; }

  bool has_edge(int label) const { return src_[check_label(label)].has_value(); }
  int source(int label) const;
  int target(int label) const { return (source(label) + displacement(label)) % n_; }
  void set_edge(int label, int source);
  void remove_edge(int label);
  int edge_count() const { return edges_; }
  std::vector<int> present_labels() const;

  // Two distinct labels sharing both source and target.
  bool has_repeated_edge() const;

  // Copy with the final label added at the given source; the final label
  // must be absent.
  LabeledDigraph with_extra_edge(int source) const;

  // Disjoint union of edge sets; any label collision is an error.
  LabeledDigraph disjoint_union(const LabeledDigraph& other) const;

  // Eulerian path existence from a to b: the edge-induced subgraph must be
  // connected (isolated vertices ignored) and the in/out degree conditions
  // for the endpoint pair must hold. Loops raise both degrees of their
  // vertex. The empty graph admits exactly the trivial path a -> a.
  bool has_eulerian_path(int a, int b) const;
  bool has_eulerian_path_from(int a) const;

  // All Eulerian paths starting at `a`, each with its signature under the
  // ascending-label reference order. Every complete path must stop at the
  // same terminal vertex; a violation is a logic error.
  std::vector<SignedPath> eulerian_paths(int a) const;

  // Sum of signatures over eulerian_paths(a).
  long long signed_sum(int a) const;

  friend bool operator==(const LabeledDigraph&, const LabeledDigraph&) = default;

  nlohmann::json to_json() const;
  static LabeledDigraph from_json(const nlohmann::json& j);
  std::string str() const;

 private:
  int check_label(int label) const;
  void degree_profile(std::vector<int>& out, std::vector<int>& in) const;
  bool connected_ignoring_isolated() const;

  int n_;
  std::vector<int> disp_;                 // displacement per label, index label-1, values in [0, n)
  std::vector<std::optional<int>> src_;   // source per label when present
  int edges_ = 0;
};

// Closed forms for the signed Eulerian sums of the recurring shapes (all
// magnitudes; the sign depends on the labeling convention).

// Petal fan: hub 0 with out-and-back pairs to alpha petals. alpha! from
// the hub, (alpha-1)! from a petal.
long long flower_sum_magnitude(int alpha, int start);

// Petal fan plus a chord from petal 1 to petal 2, walked from petal 1.
long long flower_chord_sum_magnitude(int alpha);

// Petal fan plus a loop at vertex b (0 = hub), walked from vertex a.
long long flower_loop_sum_magnitude(int alpha, int a, int b);

// Petal fan plus a length-beta out-and-back tail ending in a loop, walked
// from the tail end.
long long flower_tail_sum_magnitude(int alpha, int beta);

// Explicit graphs of those shapes, for enumeration cross-checks. Petal
// pairs use labels (2i-1, 2i); the extra edge takes the next label.
LabeledDigraph flower_graph(int alpha);
LabeledDigraph flower_chord_graph(int alpha);
LabeledDigraph flower_loop_graph(int alpha, int b);
LabeledDigraph flower_tail_graph(int alpha, int beta);

}  // namespace gencomm
