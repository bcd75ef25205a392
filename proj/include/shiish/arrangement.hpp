#pragma once

// The arrangements A^k_n (Shi at k = 2, Ish at k = n): hyperplanes, regions as
// feasible sign vectors, and the Pak-Stanley labelling computed three ways.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shiish/core.hpp"

namespace shiish {

/// x_p - x_q = c with p < q.
struct Hyperplane {
  int p = 0;
  int q = 0;
  int c = 0;

  bool is_coxeter() const { return c == 0; }
  /// Crossing away from the base region adds e_{increment_index()}.
  int increment_index() const { return c == 0 ? p : q; }
  std::string str() const;

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
  friend auto operator<=>(const Hyperplane&, const Hyperplane&) = default;
};

class Arrangement {
 public:
  Arrangement(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  int size() const { return static_cast<int>(hyperplanes_.size()); }

  /// Largest offset c with x_p - x_q = c in the arrangement (0 if none).
  int max_offset(int p, int q) const { return max_offset_[pair_index(p, q)]; }
  /// Position of (p, q, c) in the canonical order, or -1.
  int index_of(int p, int q, int c) const;

 private:
  std::size_t pair_index(int p, int q) const {
    return static_cast<std::size_t>((p - 1) * n_ + (q - 1));
  }

  int n_;
  int k_;
  std::vector<Hyperplane> hyperplanes_;
  std::vector<int> max_offset_;
  std::vector<int> first_index_;
};

inline Arrangement build_arrangement(int n, int k) { return Arrangement(n, k); }

/// One character per hyperplane in canonical order: '0' means x_p - x_q < c,
/// '1' means x_p - x_q > c, '?' leaves the hyperplane unconstrained.
using SignVector = std::string;

inline constexpr char kBelow = '0';
inline constexpr char kAbove = '1';
inline constexpr char kUnset = '?';

/// Rational point x_i = numerators[i-1] / denominator.
struct Witness {
  std::vector<std::int64_t> numerators;
  std::int64_t denominator = 1;

  double coordinate(int i) const {
    return static_cast<double>(numerators[static_cast<std::size_t>(i - 1)]) /
           static_cast<double>(denominator);
  }
};

/// Solves the strict difference system; nullopt when the open cell is empty.
std::optional<Witness> solve_signs(const Arrangement& arr, std::string_view signs);
bool is_feasible(const Arrangement& arr, std::string_view signs);
/// Exact check that the point lies strictly on the prescribed side of every
/// constrained hyperplane.
bool witness_satisfies(const Arrangement& arr, std::string_view signs, const Witness& x);
/// Above at offset c implies above at every smaller offset of the same pair.
bool signs_monotone(const Arrangement& arr, std::string_view signs);

struct Region {
  SignVector signs;
  Witness witness;
};

/// The chamber x_n + 1 > x_1 > ... > x_n, witnessed by x_i = (n - i) / n.
Region base_region(const Arrangement& arr);

struct LabelledRegion {
  Region region;
  Label label;
};

inline constexpr int kDefaultRegionCap = 6;

/// Breadth-first walk over chambers from the base region, one hyperplane flip
/// at a time, labelling as it goes. Sorted by sign vector.
std::vector<LabelledRegion> enumerate_regions(const Arrangement& arr,
                                              int max_n = kDefaultRegionCap);

/// (1, ..., 1) plus the increment of every hyperplane separating r from the
/// base region.
Label label_direct(const Arrangement& arr, const Region& r);

struct ArcTriple {
  int i = 0;
  int j = 0;
  int a = 0;

  friend bool operator==(const ArcTriple&, const ArcTriple&) = default;
  friend auto operator<=>(const ArcTriple&, const ArcTriple&) = default;
};

struct IndexPair {
  int i = 0;
  int j = 0;

  friend bool operator==(const IndexPair&, const IndexPair&) = default;
  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

/// x_{w_1} > ... > x_{w_n}; H holds pairs trapped strictly between two
/// consecutive offsets, I the ordered pairs beyond every offset.
struct RegionDescription {
  Permutation w;
  std::vector<ArcTriple> H;
  std::vector<IndexPair> I;
};

RegionDescription describe(const Arrangement& arr, const Region& r);

/// t(w) + sum (a_ij - 1) e_j over H + sum m_ij e_j over I.
Label label_from_description(const Arrangement& arr, const RegionDescription& d);

struct Diagram {
  Permutation w;
  std::vector<ArcTriple> arcs;
};

/// Drops every H-arc nested (by position in w) under another H-arc carrying
/// the same label.
Diagram draw_diagram(const RegionDescription& d);

/// t(w): t_{w_i} = |{j <= i : w_j >= w_i}|.
Label coxeter_label(const Permutation& w);

}  // namespace shiish
