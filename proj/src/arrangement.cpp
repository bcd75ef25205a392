#include "shiish/arrangement.hpp"

#include <algorithm>
#include <unordered_set>

#include "shiish/error.hpp"

namespace shiish {

std::string Hyperplane::str() const {
  std::string s = "x" + std::to_string(p) + "-x" + std::to_string(q) + "=" + std::to_string(c);
  return s;
}

Arrangement::Arrangement(int n, int k) : n_(n), k_(k) {
  if (n < 2 || k < 2 || k > n)
    throw DomainError("arrangement needs n >= 2 and 2 <= k <= n, got n=" + std::to_string(n) +
                      " k=" + std::to_string(k));
  const auto nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  max_offset_.assign(nn, 0);
  first_index_.assign(nn, -1);
  for (int p = 1; p <= n; ++p) {
    for (int q = p + 1; q <= n; ++q) {
      int top = 0;
      if (p == 1) top = std::min(q, k) - 1;  // x_1 = x_q + i, i < min(q, k)
      else if (p >= k) top = 1;              // x_p = x_q + 1
      first_index_[pair_index(p, q)] = size();
      max_offset_[pair_index(p, q)] = top;
      for (int c = 0; c <= top; ++c) hyperplanes_.push_back({p, q, c});
    }
  }
}

int Arrangement::index_of(int p, int q, int c) const {
  if (p < 1 || q > n_ || p >= q || c < 0 || c > max_offset(p, q)) return -1;
  return first_index_[pair_index(p, q)] + c;
}

namespace {

void check_signs(const Arrangement& arr, std::string_view signs) {
  if (static_cast<int>(signs.size()) != arr.size())
    throw DomainError("sign vector has length " + std::to_string(signs.size()) + ", expected " +
                      std::to_string(arr.size()));
  for (char s : signs)
    if (s != kBelow && s != kAbove && s != kUnset)
      throw DomainError(std::string("bad sign character '") + s + "'");
}

}  // namespace

// Each strict constraint x_u - x_v < b becomes x'_u - x'_v <= b*M - 1 with
// x' = M x and M = #constraints + 1. A cycle of L constraints with integer
// offset sum S has scaled weight S*M - L, which is negative iff S <= 0, so
// integer feasibility of the scaled system matches real feasibility of the
// strict one.
std::optional<Witness> solve_signs(const Arrangement& arr, std::string_view signs) {
  check_signs(arr, signs);
  struct Edge {
    int from, to;
    std::int64_t w;
  };
  std::vector<Edge> edges;
  const auto& hs = arr.hyperplanes();
  std::int64_t constraints = 0;
  for (std::size_t h = 0; h < hs.size(); ++h)
    if (signs[h] != kUnset) ++constraints;
  const std::int64_t scale = constraints + 1;
  for (std::size_t h = 0; h < hs.size(); ++h) {
    const auto& hp = hs[h];
    if (signs[h] == kBelow) {
      edges.push_back({hp.q, hp.p, hp.c * scale - 1});  // x_p - x_q < c
    } else if (signs[h] == kAbove) {
      edges.push_back({hp.p, hp.q, -hp.c * scale - 1});  // x_q - x_p < -c
    }
  }

  const int n = arr.n();
  std::vector<std::int64_t> dist(static_cast<std::size_t>(n + 1), 0);
  bool changed = true;
  for (int round = 0; round <= n && changed; ++round) {
    changed = false;
    for (const auto& e : edges) {
      const auto cand = dist[static_cast<std::size_t>(e.from)] + e.w;
      if (cand < dist[static_cast<std::size_t>(e.to)]) {
        dist[static_cast<std::size_t>(e.to)] = cand;
        changed = true;
      }
    }
  }
  if (changed) return std::nullopt;

  Witness x;
  x.denominator = scale;
  x.numerators.assign(dist.begin() + 1, dist.end());
  return x;
}

bool is_feasible(const Arrangement& arr, std::string_view signs) {
  return solve_signs(arr, signs).has_value();
}

bool witness_satisfies(const Arrangement& arr, std::string_view signs, const Witness& x) {
  check_signs(arr, signs);
  const auto& hs = arr.hyperplanes();
  for (std::size_t h = 0; h < hs.size(); ++h) {
    if (signs[h] == kUnset) continue;
    const auto& hp = hs[h];
    const std::int64_t diff = x.numerators[static_cast<std::size_t>(hp.p - 1)] -
                              x.numerators[static_cast<std::size_t>(hp.q - 1)];
    const std::int64_t bound = hp.c * x.denominator;
    if (signs[h] == kBelow ? !(diff < bound) : !(diff > bound)) return false;
  }
  return true;
}

bool signs_monotone(const Arrangement& arr, std::string_view signs) {
  check_signs(arr, signs);
  for (int p = 1; p <= arr.n(); ++p)
    for (int q = p + 1; q <= arr.n(); ++q)
      for (int c = 1; c <= arr.max_offset(p, q); ++c) {
        const char hi = signs[static_cast<std::size_t>(arr.index_of(p, q, c))];
        const char lo = signs[static_cast<std::size_t>(arr.index_of(p, q, c - 1))];
        if (hi == kAbove && lo != kAbove) return false;
      }
  return true;
}

Region base_region(const Arrangement& arr) {
  const int n = arr.n();
  Region r;
  r.witness.denominator = n;
  for (int i = 1; i <= n; ++i) r.witness.numerators.push_back(n - i);
  for (const auto& h : arr.hyperplanes()) {
    // x_p - x_q = (q - p) / n, never equal to an integer offset.
    r.signs += (h.q - h.p > h.c * n) ? kAbove : kBelow;
  }
  return r;
}

std::vector<LabelledRegion> enumerate_regions(const Arrangement& arr, int max_n) {
  if (arr.n() > max_n)
    throw BudgetError("region enumeration: n=" + std::to_string(arr.n()) + " exceeds cap " +
                      std::to_string(max_n));
  const Region base = base_region(arr);
  const auto& hs = arr.hyperplanes();

  std::unordered_set<SignVector> seen;
  std::vector<LabelledRegion> found;
  found.push_back({base, Label::ones(arr.n())});
  seen.insert(base.signs);

  for (std::size_t head = 0; head < found.size(); ++head) {
    for (std::size_t h = 0; h < hs.size(); ++h) {
      SignVector next = found[head].region.signs;
      next[h] = next[h] == kAbove ? kBelow : kAbove;
      if (seen.contains(next)) continue;
      auto witness = solve_signs(arr, next);
      if (!witness) continue;
      Label label = found[head].label;
      const bool leaving_base_side = found[head].region.signs[h] == base.signs[h];
      label.bump(hs[h].increment_index(), leaving_base_side ? 1 : -1);
      seen.insert(next);
      found.push_back({Region{std::move(next), std::move(*witness)}, std::move(label)});
    }
  }
  std::sort(found.begin(), found.end(), [](const LabelledRegion& x, const LabelledRegion& y) {
    return x.region.signs < y.region.signs;
  });
  return found;
}

Label label_direct(const Arrangement& arr, const Region& r) {
  check_signs(arr, r.signs);
  const SignVector base = base_region(arr).signs;
  Label label = Label::ones(arr.n());
  const auto& hs = arr.hyperplanes();
  for (std::size_t h = 0; h < hs.size(); ++h)
    if (r.signs[h] != base[h]) label.bump(hs[h].increment_index());
  return label;
}

RegionDescription describe(const Arrangement& arr, const Region& r) {
  check_signs(arr, r.signs);
  const int n = arr.n();
  auto above = [&](int p, int q, int c) {
    return r.signs[static_cast<std::size_t>(arr.index_of(p, q, c))] == kAbove;
  };
  auto greater = [&](int i, int j) { return i < j ? above(i, j, 0) : !above(j, i, 0); };

  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
  std::sort(order.begin(), order.end(), greater);

  RegionDescription d{Permutation(std::move(order)), {}, {}};
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (!above(i, j, 0)) continue;
      int a = 1;
      while (a <= arr.max_offset(i, j) && above(i, j, a)) ++a;
      if (a <= arr.max_offset(i, j)) d.H.push_back({i, j, a});
      else d.I.push_back({i, j});
    }
  }
  return d;
}

Label coxeter_label(const Permutation& w) {
  const int n = w.n();
  std::vector<int> t(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    int count = 0;
    for (int j = 1; j <= i; ++j)
      if (w(j) >= w(i)) ++count;
    t[static_cast<std::size_t>(w(i) - 1)] = count;
  }
  return Label(std::move(t));
}

Label label_from_description(const Arrangement& arr, const RegionDescription& d) {
  require(d.w.n() == arr.n(), "description dimension mismatch");
  Label label = coxeter_label(d.w);
  for (const auto& [i, j, a] : d.H)
    if (a > 1) label.bump(j, a - 1);
  for (const auto& [i, j] : d.I)
    if (arr.max_offset(i, j) > 0) label.bump(j, arr.max_offset(i, j));
  return label;
}

Diagram draw_diagram(const RegionDescription& d) {
  const Permutation pos = d.w.inverse();
  auto nested_in = [&](const ArcTriple& inner, const ArcTriple& outer) {
    return inner != outer && inner.a == outer.a && pos(outer.i) <= pos(inner.i) &&
           pos(inner.j) <= pos(outer.j);
  };
  Diagram dia{d.w, {}};
  for (const auto& arc : d.H) {
    const bool omitted =
        std::any_of(d.H.begin(), d.H.end(), [&](const ArcTriple& o) { return nested_in(arc, o); });
    if (!omitted) dia.arcs.push_back(arc);
  }
  return dia;
}

}  // namespace shiish
