#pragma once

// The multidigraph G^k_n, its rooted extension with ordered neighbour lists,
// the depth-first burning algorithm and its spanning-tree inverse.
//
// Parallel arcs into the same vertex v are told apart by the encoding
// j = v + m*n (m = 0, 1, ...); decode(j) recovers v in [1, n].

#include <string>
#include <utility>
#include <vector>

#include "shiish/core.hpp"

namespace shiish {

class MultiDiGraph {
 public:
  explicit MultiDiGraph(int n);

  int n() const { return n_; }
  void add_arc(int u, int v, int multiplicity = 1);
  int multiplicity(int u, int v) const { return mult_[index(u, v)]; }
  int out_degree(int u) const;
  int arc_count() const;
  bool weakly_connected() const;

 private:
  std::size_t index(int u, int v) const {
    return static_cast<std::size_t>((u - 1) * n_ + (v - 1));
  }

  int n_;
  std::vector<int> mult_;
};

/// Arc (tail, encoded head) of the rooted graph.
using EncodedArc = std::pair<int, int>;

class RootedGraph {
 public:
  RootedGraph(int n, int k, std::vector<std::vector<int>> neighbours);

  int n() const { return n_; }
  int k() const { return k_; }
  /// Ordered neighbour list N(i), i in {0} u [n], as encoded heads.
  const std::vector<int>& neighbours(int i) const { return nbrs_[static_cast<std::size_t>(i)]; }
  int decode(int j) const { return (j - 1) % n_ + 1; }
  bool has_arc(int tail, int encoded_head) const;

 private:
  int n_;
  int k_;
  std::vector<std::vector<int>> nbrs_;
};

MultiDiGraph build_gkn(int n, int k);
RootedGraph build_rooted(int n, int k);

struct BurnReport {
  std::vector<int> burnt;          // starts with 0
  std::vector<EncodedArc> tree;    // arcs that burnt a vertex, in order
  std::vector<EncodedArc> damp;    // arcs that only decremented a value
  bool success = false;            // every vertex of {0} u [n] burnt
};

BurnReport dfs_burn(const RootedGraph& g, const Word& a);

/// Rebuilds the word from a spanning tree rooted at 0 whose arcs are arcs of g.
Word tree_to_word(const RootedGraph& g, const std::vector<EncodedArc>& tree);

inline constexpr int kSubsetOracleMaxN = 16;

/// Checks the subset definition directly over all 2^n - 1 non-empty subsets.
bool is_g_parking_bruteforce(const MultiDiGraph& g, const Word& a);

/// dfs_burn(g, a).success
bool is_g_parking(const RootedGraph& g, const Word& a);

std::string to_dot(const MultiDiGraph& g, const std::string& name = "G");
std::string to_dot(const RootedGraph& g, const std::string& name = "Gbar");

}  // namespace shiish
