#include "shiish/parking.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

#include "shiish/error.hpp"

namespace shiish {

namespace {

void check_k(const Word& a, int k) {
  if (k < 2 || k > a.n())
    throw DomainError("k=" + std::to_string(k) + " outside [2," + std::to_string(a.n()) + "]");
}

}  // namespace

ParkingOutcome run_parking(const Word& a) {
  const int n = a.n();
  ParkingOutcome out;
  out.slots.assign(static_cast<std::size_t>(2 * n), 0);
  out.spot_of.assign(static_cast<std::size_t>(n), 0);
  for (int i = n; i >= 1; --i) {
    int p = a[i];
    while (out.slots[static_cast<std::size_t>(p - 1)] != 0) ++p;
    // At most n drivers and a_i <= n, so slot 2n is never exceeded.
    assert(p <= 2 * n);
    out.spot_of[static_cast<std::size_t>(i - 1)] = p;
    out.slots[static_cast<std::size_t>(p - 1)] = i;
  }
  out.first_free = n + 1;
  for (int p = 1; p <= n; ++p) {
    if (out.slots[static_cast<std::size_t>(p - 1)] == 0) {
      out.first_free = p;
      break;
    }
  }
  for (int i = 1; i <= n; ++i)
    if (out.spot_of[static_cast<std::size_t>(i - 1)] <= n) out.parked.push_back(i);
  for (int p = 1; p <= 2 * n; ++p)
    if (out.slots[static_cast<std::size_t>(p - 1)] != 0) out.occupied.push_back(p);
  return out;
}

bool is_parking_function(const Word& a) {
  const int n = a.n();
  std::vector<int> freq(static_cast<std::size_t>(n + 1), 0);
  for (int v : a.values()) ++freq[static_cast<std::size_t>(v)];
  int below = 0;
  for (int i = 1; i <= n; ++i) {
    below += freq[static_cast<std::size_t>(i)];
    if (below < i) return false;
  }
  return true;
}

bool parks_all_tail(const Word& a, int k) {
  check_k(a, k);
  const int n = a.n();
  std::vector<int> freq(static_cast<std::size_t>(n + 1), 0);
  for (int j = k; j <= n; ++j) ++freq[static_cast<std::size_t>(a[j])];
  int below = 0;
  for (int i = 1; i <= n; ++i) {
    below += freq[static_cast<std::size_t>(i)];
    if (i >= k && below + k - 1 < i) return false;
  }
  return true;
}

bool CentreResult::contains(int i) const {
  return std::find(members.begin(), members.end(), i) != members.end();
}

// Greedy: any admissible descending set has, at every prefix, no more
// elements than the greedy set, so greedy includes each of its members.
CentreResult centre(const Word& a) {
  CentreResult z;
  for (int i = a.n(); i >= 1; --i) {
    if (a[i] <= z.size() + 1) z.members.push_back(i);
  }
  return z;
}

bool is_ish_parking(const Word& a) { return centre(a).contains(1); }

SortedTail sort_tail(const Word& a, int k, TieBreak ties) {
  check_k(a, k);
  const int n = a.n();
  std::vector<int> pi(static_cast<std::size_t>(n));
  std::iota(pi.begin(), pi.end(), 1);
  auto tail = pi.begin() + (k - 1);
  if (ties == TieBreak::kDescendingIndex) std::reverse(tail, pi.end());
  std::stable_sort(tail, pi.end(), [&](int x, int y) { return a[x] > a[y]; });
  Permutation perm(std::move(pi));
  return {compose(a, perm), std::move(perm)};
}

bool is_k_partial(const Word& a, int k) {
  return parks_all_tail(a, k) && is_ish_parking(sort_tail(a, k).word);
}

std::optional<Permutation> sigma_characterization(const Word& a, int k) {
  if (!is_k_partial(a, k)) return std::nullopt;
  const int n = a.n();
  auto [sorted, pi] = sort_tail(a, k);
  const CentreResult z = centre(sorted);

  std::vector<bool> in_z(static_cast<std::size_t>(n + 1), false);
  for (int v : z.members) in_z[static_cast<std::size_t>(v)] = true;
  std::vector<int> rest_head, rest_tail;  // B ascending, C ascending
  for (int i = 1; i <= n; ++i) {
    if (in_z[static_cast<std::size_t>(i)]) continue;
    (i < k ? rest_head : rest_tail).push_back(i);
  }

  // tau = (alpha_1, ..., alpha_z, beta_1, ..., beta_m, gamma_l, ..., gamma_1)
  std::vector<int> tau = z.members;
  tau.insert(tau.end(), rest_head.begin(), rest_head.end());
  tau.insert(tau.end(), rest_tail.rbegin(), rest_tail.rend());
  return pi * Permutation(std::move(tau));
}

namespace {

bool sigma_conditions(const Word& a, int k, const Permutation& sigma, bool tail_positions_only) {
  check_k(a, k);
  require(sigma.n() == a.n(), "sigma has wrong size");
  const int n = a.n();
  const int a1 = a[1];
  for (int i = 1; i <= n; ++i) {
    const bool bounded_tail = sigma(i) >= k && (!tail_positions_only || i >= k);
    if ((i <= a1 || bounded_tail) && a[sigma(i)] > i) return false;
  }
  for (int i = 1; i < a1; ++i) {
    if (sigma(i) < k && !(sigma(i + 1) < sigma(i))) return false;
  }
  return true;
}

}  // namespace

bool sigma_conditions_hold(const Word& a, int k, const Permutation& sigma) {
  return sigma_conditions(a, k, sigma, false);
}

bool sigma_conditions_literal(const Word& a, int k, const Permutation& sigma) {
  return sigma_conditions(a, k, sigma, true);
}

Count128 count_tail_parkers(int n, int k) {
  require(n >= 2 && k >= 2 && k <= n, "count_tail_parkers: need 2 <= k <= n");
  if (n > kTailCountMaxN)
    throw BudgetError("count_tail_parkers: n=" + std::to_string(n) + " exceeds cap " +
                      std::to_string(kTailCountMaxN));
  Count128 t = static_cast<unsigned>(k);
  for (int i = 0; i < k - 1; ++i) t *= static_cast<unsigned>(n);
  for (int i = 0; i < n - k; ++i) t *= static_cast<unsigned>(n + 1);
  return t;
}

}  // namespace shiish
