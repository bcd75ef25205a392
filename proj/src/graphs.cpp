#include "shiish/graphs.hpp"

#include <algorithm>
#include <sstream>

#include "shiish/error.hpp"

namespace shiish {

namespace {

void check_nk(int n, int k) {
  if (n < 2 || k < 2 || k > n)
    throw DomainError("need n >= 2 and 2 <= k <= n, got n=" + std::to_string(n) +
                      " k=" + std::to_string(k));
}

}  // namespace

MultiDiGraph::MultiDiGraph(int n) : n_(n) {
  require(n >= 1, "graph needs at least one vertex");
  mult_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

void MultiDiGraph::add_arc(int u, int v, int multiplicity) {
  require(u >= 1 && u <= n_ && v >= 1 && v <= n_, "arc endpoint out of range");
  require(u != v, "loops are not allowed");
  require(multiplicity >= 0, "negative multiplicity");
  mult_[index(u, v)] += multiplicity;
}

int MultiDiGraph::out_degree(int u) const {
  int d = 0;
  for (int v = 1; v <= n_; ++v) d += multiplicity(u, v);
  return d;
}

int MultiDiGraph::arc_count() const {
  int c = 0;
  for (int m : mult_) c += m;
  return c;
}

bool MultiDiGraph::weakly_connected() const {
  std::vector<bool> seen(static_cast<std::size_t>(n_ + 1), false);
  std::vector<int> stack{1};
  seen[1] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v = 1; v <= n_; ++v) {
      if (!seen[static_cast<std::size_t>(v)] && (multiplicity(u, v) > 0 || multiplicity(v, u) > 0)) {
        seen[static_cast<std::size_t>(v)] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n_;
}

MultiDiGraph build_gkn(int n, int k) {
  check_nk(n, k);
  MultiDiGraph g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) g.add_arc(i, j);  // x_i = x_j
  for (int j = 2; j <= n; ++j) g.add_arc(j, 1, std::min(j, k) - 1);  // x_1 = x_j + i, i < k
  for (int i = k; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) g.add_arc(j, i);  // x_i = x_j + 1, i >= k
  require(g.weakly_connected(), "G^k_n must be connected");
  return g;
}

RootedGraph::RootedGraph(int n, int k, std::vector<std::vector<int>> neighbours)
    : n_(n), k_(k), nbrs_(std::move(neighbours)) {
  require(static_cast<int>(nbrs_.size()) == n + 1, "need one neighbour list per vertex 0..n");
}

bool RootedGraph::has_arc(int tail, int encoded_head) const {
  if (tail < 0 || tail > n_) return false;
  const auto& l = neighbours(tail);
  return std::find(l.begin(), l.end(), encoded_head) != l.end();
}

RootedGraph build_rooted(int n, int k) {
  check_nk(n, k);
  std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(n + 1));
  for (int v = n; v >= 1; --v) nbrs[0].push_back(v);
  for (int i = n; i >= 2; --i)
    for (int m = std::min(i, k) - 2; m >= 0; --m) nbrs[1].push_back(i + m * n);
  for (int i = 2; i <= n; ++i) {
    auto& l = nbrs[static_cast<std::size_t>(i)];
    if (i >= k)
      for (int v = n; v > i; --v) l.push_back(v);
    for (int v = i - 1; v >= 1; --v) l.push_back(v);
  }
  return RootedGraph(n, k, std::move(nbrs));
}

// Iterative form of the recursive dfs_from; each frame remembers where it is
// in its neighbour list, so arcs are visited in exactly the recursive order.
BurnReport dfs_burn(const RootedGraph& g, const Word& a) {
  require(a.n() == g.n(), "word and graph dimensions differ");
  const int n = g.n();
  std::vector<int> val(a.values().begin(), a.values().end());
  std::vector<bool> burnt(static_cast<std::size_t>(n + 1), false);

  BurnReport rep;
  rep.burnt.push_back(0);
  burnt[0] = true;

  struct Frame {
    int vertex;
    std::size_t next;
  };
  std::vector<Frame> stack{{0, 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& l = g.neighbours(f.vertex);
    if (f.next == l.size()) {
      stack.pop_back();
      continue;
    }
    const int i = f.vertex;
    const int j = l[f.next++];
    const int jn = g.decode(j);
    if (burnt[static_cast<std::size_t>(jn)]) continue;
    int& aj = val[static_cast<std::size_t>(jn - 1)];
    if (aj == 1) {
      rep.tree.emplace_back(i, j);
      rep.burnt.push_back(jn);
      burnt[static_cast<std::size_t>(jn)] = true;
      stack.push_back({jn, 0});  // invalidates f
    } else {
      rep.damp.emplace_back(i, j);
      --aj;
    }
  }
  rep.success = static_cast<int>(rep.burnt.size()) == n + 1;
  return rep;
}

Word tree_to_word(const RootedGraph& g, const std::vector<EncodedArc>& tree) {
  const int n = g.n();
  if (static_cast<int>(tree.size()) != n)
    throw DomainError("spanning tree on {0..n} needs exactly n arcs");
  std::vector<int> parent(static_cast<std::size_t>(n + 1), -1);
  for (const auto& [i, j] : tree) {
    if (!g.has_arc(i, j))
      throw DomainError("arc (" + std::to_string(i) + "," + std::to_string(j) + ") is not in the graph");
    const int jn = g.decode(j);
    if (parent[static_cast<std::size_t>(jn)] != -1)
      throw DomainError("vertex " + std::to_string(jn) + " has two parents");
    parent[static_cast<std::size_t>(jn)] = i;
  }
  // Every vertex must reach the root through parents.
  for (int v = 1; v <= n; ++v) {
    int u = v;
    for (int steps = 0; u != 0; ++steps) {
      if (steps > n) throw DomainError("tree contains a cycle");
      u = parent[static_cast<std::size_t>(u)];
    }
  }

  auto is_tree_arc = [&](int i, int j) {
    return std::find(tree.begin(), tree.end(), EncodedArc{i, j}) != tree.end();
  };

  std::vector<int> val(static_cast<std::size_t>(n), 1);
  std::vector<bool> burnt(static_cast<std::size_t>(n + 1), false);
  burnt[0] = true;
  struct Frame {
    int vertex;
    std::size_t next;
  };
  std::vector<Frame> stack{{0, 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& l = g.neighbours(f.vertex);
    if (f.next == l.size()) {
      stack.pop_back();
      continue;
    }
    const int i = f.vertex;
    const int j = l[f.next++];
    const int jn = g.decode(j);
    if (burnt[static_cast<std::size_t>(jn)]) continue;
    if (is_tree_arc(i, j)) {
      burnt[static_cast<std::size_t>(jn)] = true;
      stack.push_back({jn, 0});
    } else {
      ++val[static_cast<std::size_t>(jn - 1)];
    }
  }
  return Word(std::move(val));
}

bool is_g_parking_bruteforce(const MultiDiGraph& g, const Word& a) {
  require(a.n() == g.n(), "word and graph dimensions differ");
  const int n = g.n();
  if (n > kSubsetOracleMaxN)
    throw BudgetError("subset oracle limited to n <= " + std::to_string(kSubsetOracleMaxN));
  const unsigned full = (1u << n) - 1;
  for (unsigned subset = 1; subset <= full; ++subset) {
    bool escapes = false;
    for (int i = 1; i <= n && !escapes; ++i) {
      if (!(subset >> (i - 1) & 1u)) continue;
      int out = 0;
      for (int j = 1; j <= n; ++j)
        if (!(subset >> (j - 1) & 1u)) out += g.multiplicity(i, j);
      escapes = out > a[i] - 2;
    }
    if (!escapes) return false;
  }
  return true;
}

bool is_g_parking(const RootedGraph& g, const Word& a) { return dfs_burn(g, a).success; }

std::string to_dot(const MultiDiGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (int v = 1; v <= g.n(); ++v) os << "  " << v << ";\n";
  for (int u = 1; u <= g.n(); ++u)
    for (int v = 1; v <= g.n(); ++v) {
      const int m = g.multiplicity(u, v);
      for (int c = 0; c < m; ++c) {
        os << "  " << u << " -> " << v;
        if (m > 1) os << " [label=\"" << c + 1 << "/" << m << "\"]";
        os << ";\n";
      }
    }
  os << "}\n";
  return os.str();
}

std::string to_dot(const RootedGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (int v = 0; v <= g.n(); ++v) os << "  " << v << ";\n";
  for (int i = 0; i <= g.n(); ++i) {
    for (int j : g.neighbours(i))
      os << "  " << i << " -> " << g.decode(j) << " [label=\"" << j << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace shiish
