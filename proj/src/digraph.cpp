#include "digraph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "gf.hpp"

namespace gencomm {

LabeledDigraph::LabeledDigraph(int n, std::vector<int> displacements)
    : n_(n), disp_(std::move(displacements)), src_(disp_.size()) {
  if (n < 1) throw std::invalid_argument("LabeledDigraph: need at least one vertex");
  for (int& d : disp_) d = ((d % n_) + n_) % n_;
}

int LabeledDigraph::check_label(int label) const {
  if (label < 1 || label > label_count())
    throw std::invalid_argument("LabeledDigraph: label " + std::to_string(label) + " out of range");
  return label - 1;
}

int LabeledDigraph::source(int label) const {
  const auto& s = src_[check_label(label)];
  if (!s) throw std::invalid_argument("LabeledDigraph: label " + std::to_string(label) + " absent");
  return *s;
}

void LabeledDigraph::set_edge(int label, int source) {
  auto& slot = src_[check_label(label)];
  if (slot) throw std::invalid_argument("LabeledDigraph: label " + std::to_string(label) + " already present");
  if (source < 0 || source >= n_) throw std::invalid_argument("LabeledDigraph: source vertex out of range");
  slot = source;
  ++edges_;
}

void LabeledDigraph::remove_edge(int label) {
  auto& slot = src_[check_label(label)];
  if (!slot) throw std::invalid_argument("LabeledDigraph: label " + std::to_string(label) + " absent");
  slot.reset();
  --edges_;
}

std::vector<int> LabeledDigraph::present_labels() const {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(edges_));
  for (int l = 1; l <= label_count(); ++l)
    if (src_[static_cast<size_t>(l - 1)]) out.push_back(l);
  return out;
}

bool LabeledDigraph::has_repeated_edge() const {
  for (int l1 = 1; l1 <= label_count(); ++l1) {
    if (!has_edge(l1)) continue;
    for (int l2 = l1 + 1; l2 <= label_count(); ++l2) {
      if (!has_edge(l2)) continue;
      if (source(l1) == source(l2) && target(l1) == target(l2)) return true;
    }
  }
  return false;
}

LabeledDigraph LabeledDigraph::with_extra_edge(int source) const {
  LabeledDigraph out = *this;
  out.set_edge(label_count(), source);
  return out;
}

LabeledDigraph LabeledDigraph::disjoint_union(const LabeledDigraph& other) const {
  if (n_ != other.n_ || disp_.size() != other.disp_.size() || disp_ != other.disp_)
    throw std::invalid_argument("LabeledDigraph: union requires identical vertex set and label table");
  LabeledDigraph out = *this;
  for (int l = 1; l <= other.label_count(); ++l)
    if (other.has_edge(l)) out.set_edge(l, other.source(l));
  return out;
}

void LabeledDigraph::degree_profile(std::vector<int>& out, std::vector<int>& in) const {
  out.assign(static_cast<size_t>(n_), 0);
  in.assign(static_cast<size_t>(n_), 0);
  for (int l = 1; l <= label_count(); ++l) {
    if (!has_edge(l)) continue;
    ++out[static_cast<size_t>(source(l))];
    ++in[static_cast<size_t>(target(l))];
  }
}

bool LabeledDigraph::connected_ignoring_isolated() const {
  if (edges_ == 0) return true;
  std::vector<std::vector<int>> adj(static_cast<size_t>(n_));
  int start = -1;
  for (int l = 1; l <= label_count(); ++l) {
    if (!has_edge(l)) continue;
    int s = source(l), t = target(l);
    adj[static_cast<size_t>(s)].push_back(t);
    adj[static_cast<size_t>(t)].push_back(s);
    start = s;
  }
  std::vector<bool> seen(static_cast<size_t>(n_), false);
  std::vector<int> stack{start};
  seen[static_cast<size_t>(start)] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<size_t>(v)])
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = true;
        stack.push_back(w);
      }
  }
  for (int v = 0; v < n_; ++v)
    if (!adj[static_cast<size_t>(v)].empty() && !seen[static_cast<size_t>(v)]) return false;
  return true;
}

bool LabeledDigraph::has_eulerian_path(int a, int b) const {
  if (a < 0 || a >= n_ || b < 0 || b >= n_) throw std::invalid_argument("has_eulerian_path: vertex out of range");
  if (edges_ == 0) return a == b;
  std::vector<int> out, in;
  degree_profile(out, in);
  if (a == b) {
    for (int v = 0; v < n_; ++v)
      if (out[static_cast<size_t>(v)] != in[static_cast<size_t>(v)]) return false;
    if (out[static_cast<size_t>(a)] == 0) return false;  // circuit must leave its start
  } else {
    for (int v = 0; v < n_; ++v) {
      int d = out[static_cast<size_t>(v)] - in[static_cast<size_t>(v)];
      if (v == a ? d != 1 : v == b ? d != -1 : d != 0) return false;
    }
  }
  return connected_ignoring_isolated();
}

bool LabeledDigraph::has_eulerian_path_from(int a) const {
  if (edges_ == 0) return true;
  std::vector<int> out, in;
  degree_profile(out, in);
  int terminal = a;
  for (int v = 0; v < n_; ++v) {
    int d = out[static_cast<size_t>(v)] - in[static_cast<size_t>(v)];
    if (d == -1 && v != a) terminal = v;
  }
  return has_eulerian_path(a, terminal);
}

std::vector<SignedPath> LabeledDigraph::eulerian_paths(int a) const {
  if (a < 0 || a >= n_) throw std::invalid_argument("eulerian_paths: vertex out of range");
  std::vector<SignedPath> result;
  if (edges_ == 0) {
    result.push_back({{}, 1});
    return result;
  }
  if (!has_eulerian_path_from(a)) return result;

  // Edges grouped by source vertex for the backtracking walk.
  std::vector<std::vector<int>> by_src(static_cast<size_t>(n_));
  for (int l = 1; l <= label_count(); ++l)
    if (has_edge(l)) by_src[static_cast<size_t>(source(l))].push_back(l);

  std::vector<bool> used(static_cast<size_t>(label_count() + 1), false);
  std::vector<int> path;
  path.reserve(static_cast<size_t>(edges_));
  int parity = 0;  // inversion count of the label sequence, mod 2
  int terminal = -1;

  std::function<void(int)> walk = [&](int v) {
    if (static_cast<int>(path.size()) == edges_) {
      if (terminal < 0)
        terminal = v;
      else if (terminal != v)
        throw std::logic_error("eulerian_paths: paths from one start reached different terminals");
      result.push_back({path, parity % 2 == 0 ? 1 : -1});
      return;
    }
    for (int l : by_src[static_cast<size_t>(v)]) {
      if (used[static_cast<size_t>(l)]) continue;
      int inv = 0;  // appending l adds one inversion per already-placed larger label
      for (int u : path)
        if (u > l) ++inv;
      used[static_cast<size_t>(l)] = true;
      path.push_back(l);
      parity += inv;
      walk(target(l));
      parity -= inv;
      path.pop_back();
      used[static_cast<size_t>(l)] = false;
    }
  };
  walk(a);
  return result;
}

long long LabeledDigraph::signed_sum(int a) const {
  long long acc = 0;
  for (const SignedPath& p : eulerian_paths(a)) acc += p.sign;
  return acc;
}

nlohmann::json LabeledDigraph::to_json() const {
  nlohmann::json disp = nlohmann::json::object();
  nlohmann::json edges = nlohmann::json::object();
  for (int l = 1; l <= label_count(); ++l) {
    disp[std::to_string(l)] = displacement(l);
    if (has_edge(l)) edges[std::to_string(l)] = source(l);
  }
  return nlohmann::json{{"n", n_}, {"displacements", disp}, {"edges", edges}};
}

LabeledDigraph LabeledDigraph::from_json(const nlohmann::json& j) {
  int n = j.at("n").get<int>();
  const auto& dj = j.at("displacements");
  int labels = 0;
  for (auto it = dj.begin(); it != dj.end(); ++it) labels = std::max(labels, std::stoi(it.key()));
  std::vector<int> disp(static_cast<size_t>(labels), 0);
  std::vector<bool> have(static_cast<size_t>(labels), false);
  for (auto it = dj.begin(); it != dj.end(); ++it) {
    int l = std::stoi(it.key());
    if (l < 1) throw std::invalid_argument("graph json: labels start at 1");
    disp[static_cast<size_t>(l - 1)] = it.value().get<int>();
    have[static_cast<size_t>(l - 1)] = true;
  }
  for (bool h : have)
    if (!h) throw std::invalid_argument("graph json: displacement table has gaps");
  LabeledDigraph g(n, disp);
  const auto& ej = j.at("edges");
  for (auto it = ej.begin(); it != ej.end(); ++it) g.set_edge(std::stoi(it.key()), it.value().get<int>());
  return g;
}

std::string LabeledDigraph::str() const {
  std::string s = "{";
  for (int l = 1; l <= label_count(); ++l) {
    if (!has_edge(l)) continue;
    if (s.size() > 1) s += ", ";
    s += "e" + std::to_string(l) + ":" + std::to_string(source(l)) + "->" + std::to_string(target(l));
  }
  return s + "}";
}

long long flower_sum_magnitude(int alpha, int start) {
  if (alpha < 0 || start < 0 || start > alpha) throw std::invalid_argument("flower_sum: start out of range");
  if (alpha == 0) {
    if (start != 0) throw std::invalid_argument("flower_sum: empty fan has only the hub");
    return 1;
  }
  return start == 0 ? factorial_ll(alpha) : factorial_ll(alpha - 1);
}

long long flower_chord_sum_magnitude(int alpha) {
  if (alpha < 2) throw std::invalid_argument("flower_chord_sum: need at least two petals");
  return factorial_ll(alpha - 1);
}

long long flower_loop_sum_magnitude(int alpha, int a, int b) {
  if (alpha < 1 || a < 0 || a > alpha || b < 0 || b > alpha)
    throw std::invalid_argument("flower_loop_sum: index out of range");
  if (a == 0 && b == 0) return factorial_ll(alpha + 1);
  if (a == b) return 2 * factorial_ll(alpha - 1);
  if (a == 0 || b == 0) return factorial_ll(alpha);
  return factorial_ll(alpha - 1);
}

long long flower_tail_sum_magnitude(int alpha, int beta) {
  if (alpha < 0) throw std::invalid_argument("flower_tail_sum: negative petal count");
  if (beta < 1) throw std::invalid_argument("flower_tail_sum: tail must be nonempty");
  return 2 * factorial_ll(alpha);
}

namespace {

// Hub-and-petals core: petal i uses labels 2i-1 (hub -> petal) and 2i
// (petal -> hub) on vertices 1..alpha around hub 0.
LabeledDigraph petal_fan(int alpha, int n, int total_labels) {
  std::vector<int> disp(static_cast<size_t>(total_labels), 0);
  for (int i = 1; i <= alpha; ++i) {
    disp[static_cast<size_t>(2 * i - 2)] = i % n;        // 0 -> i
    disp[static_cast<size_t>(2 * i - 1)] = (n - i) % n;  // i -> 0
  }
  LabeledDigraph g(n, disp);
  for (int i = 1; i <= alpha; ++i) {
    g.set_edge(2 * i - 1, 0);
    g.set_edge(2 * i, i);
  }
  return g;
}

}  // namespace

LabeledDigraph flower_graph(int alpha) {
  if (alpha < 1) throw std::invalid_argument("flower_graph: need at least one petal");
  return petal_fan(alpha, alpha + 1, 2 * alpha);
}

LabeledDigraph flower_chord_graph(int alpha) {
  if (alpha < 2) throw std::invalid_argument("flower_chord_graph: need at least two petals");
  int n = alpha + 1;
  std::vector<int> disp(static_cast<size_t>(2 * alpha + 1), 0);
  for (int i = 1; i <= alpha; ++i) {
    disp[static_cast<size_t>(2 * i - 2)] = i % n;
    disp[static_cast<size_t>(2 * i - 1)] = (n - i) % n;
  }
  disp[static_cast<size_t>(2 * alpha)] = 1;  // chord 1 -> 2
  LabeledDigraph g(n, disp);
  for (int i = 1; i <= alpha; ++i) {
    g.set_edge(2 * i - 1, 0);
    g.set_edge(2 * i, i);
  }
  g.set_edge(2 * alpha + 1, 1);
  return g;
}

LabeledDigraph flower_loop_graph(int alpha, int b) {
  if (alpha < 1 || b < 0 || b > alpha) throw std::invalid_argument("flower_loop_graph: index out of range");
  int n = alpha + 1;
  std::vector<int> disp(static_cast<size_t>(2 * alpha + 1), 0);
  for (int i = 1; i <= alpha; ++i) {
    disp[static_cast<size_t>(2 * i - 2)] = i % n;
    disp[static_cast<size_t>(2 * i - 1)] = (n - i) % n;
  }
  disp[static_cast<size_t>(2 * alpha)] = 0;  // loop
  LabeledDigraph g(n, disp);
  for (int i = 1; i <= alpha; ++i) {
    g.set_edge(2 * i - 1, 0);
    g.set_edge(2 * i, i);
  }
  g.set_edge(2 * alpha + 1, b);
  return g;
}

LabeledDigraph flower_tail_graph(int alpha, int beta) {
  if (alpha < 0 || beta < 1) throw std::invalid_argument("flower_tail_graph: bad shape");
  int n = alpha + beta + 1;
  int total = 2 * (alpha + beta) + 1;
  std::vector<int> disp(static_cast<size_t>(total), 0);
  for (int i = 1; i <= alpha; ++i) {
    disp[static_cast<size_t>(2 * i - 2)] = i % n;
    disp[static_cast<size_t>(2 * i - 1)] = (n - i) % n;
  }
  // Tail segment i runs between chain vertices v_{i-1} and v_i.
  for (int i = 1; i <= beta; ++i) {
    int from = i == 1 ? 0 : alpha + i - 1;
    int to = alpha + i;
    disp[static_cast<size_t>(2 * (alpha + i) - 2)] = ((to - from) % n + n) % n;
    disp[static_cast<size_t>(2 * (alpha + i) - 1)] = ((from - to) % n + n) % n;
  }
  disp[static_cast<size_t>(total - 1)] = 0;  // loop at the tail end
  LabeledDigraph g(n, disp);
  for (int i = 1; i <= alpha; ++i) {
    g.set_edge(2 * i - 1, 0);
    g.set_edge(2 * i, i);
  }
  for (int i = 1; i <= beta; ++i) {
    int from = i == 1 ? 0 : alpha + i - 1;
    g.set_edge(2 * (alpha + i) - 1, from);
    g.set_edge(2 * (alpha + i), alpha + i);
  }
  g.set_edge(total, alpha + beta);
  return g;
}

}  // namespace gencomm
