#pragma once

// Parking process, centre, tail sorting and the parking-function predicates
// (classical, Ish, k-partial).

#include <cstdint>
#include <optional>
#include <vector>

#include "shiish/core.hpp"

namespace shiish {

struct ParkingOutcome {
  std::vector<int> slots;    // 2n entries; 0 = empty, otherwise the driver parked there
  std::vector<int> spot_of;  // spot_of[i-1] = slot taken by driver i, in [1, 2n]
  int first_free = 0;        // min{p in [n+1] : slot p empty}
  std::vector<int> parked;   // drivers with spot <= n, ascending
  std::vector<int> occupied; // slots in [1, 2n] holding a driver, ascending

  bool parks(int driver) const { return spot_of[static_cast<std::size_t>(driver - 1)] <= n(); }
  bool parks_all() const { return static_cast<int>(parked.size()) == n(); }
  int n() const { return static_cast<int>(spot_of.size()); }
};

/// Drivers n, n-1, ..., 1 each take the first free slot at or after a_i.
ParkingOutcome run_parking(const Word& a);

/// |{j : a_j <= i}| >= i for every i in [n].
bool is_parking_function(const Word& a);

/// Counting criterion for "a parks every element of [k, n]".
bool parks_all_tail(const Word& a, int k);

/// Centre Z(a), listed in descending order. May be empty.
struct CentreResult {
  std::vector<int> members;

  bool contains(int i) const;
  int size() const { return static_cast<int>(members.size()); }
};

CentreResult centre(const Word& a);

/// 1 in Z(a).
bool is_ish_parking(const Word& a);

enum class TieBreak { kAscendingIndex, kDescendingIndex };

struct SortedTail {
  Word word;       // a o pi
  Permutation pi;  // fixes [k-1]; tail values of a o pi are non-increasing
};

SortedTail sort_tail(const Word& a, int k, TieBreak ties = TieBreak::kAscendingIndex);

/// Parks [k, n] and 1 is in the centre of the tail-sorted word.
bool is_k_partial(const Word& a, int k);

/// The constructive witness sigma = pi o tau, or nullopt when a is not
/// k-partial.
std::optional<Permutation> sigma_characterization(const Word& a, int k);

/// Witness test used for sigma-existence:
///   a_{sigma(i)} <= i for i in [a_1] and for every i with sigma(i) >= k;
///   sigma(i+1) < sigma(i) for i in [a_1 - 1] with sigma(i) < k.
bool sigma_conditions_hold(const Word& a, int k, const Permutation& sigma);

/// Same as sigma_conditions_hold, except the bound for sigma(i) >= k is only
/// imposed at positions i in [k, n]. Weaker: it accepts some words that are
/// not k-partial (a = 1444, k = 3).
bool sigma_conditions_literal(const Word& a, int k, const Permutation& sigma);

__extension__ typedef unsigned __int128 Count128;

inline constexpr int kTailCountMaxN = 25;

/// k n^{k-1} (n+1)^{n-k}: the number of words in [n]^n that park all of [k, n].
Count128 count_tail_parkers(int n, int k);

}  // namespace shiish
