#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"
#include "shiish/error.hpp"
#include "shiish/parking.hpp"

#include <numeric>
#include <random>

using namespace shiish;

namespace {

std::vector<int> iota_desc(int n) {
  std::vector<int> v;
  for (int i = n; i >= 1; --i) v.push_back(i);
  return v;
}

}  // namespace

TEST_CASE("run_parking follows drivers n..1") {
  const auto out = run_parking(Word({4, 2, 1, 3}));
  CHECK(out.spot_of == std::vector<int>{4, 2, 1, 3});
  CHECK(out.parked == std::vector<int>{1, 2, 3, 4});
  CHECK(out.first_free == 5);
  CHECK(out.slots == std::vector<int>{3, 2, 4, 1, 0, 0, 0, 0});

  for (int n = 1; n <= 6; ++n) {
    const auto ones = run_parking(Word::constant(n, 1));
    for (int i = 1; i <= n; ++i) CHECK(ones.spot_of[static_cast<std::size_t>(i - 1)] == n - i + 1);
    CHECK(ones.parks_all());

    const auto top = run_parking(Word::constant(n, n));
    CHECK(top.parked == std::vector<int>{n});
    std::vector<int> tail(static_cast<std::size_t>(n));
    std::iota(tail.begin(), tail.end(), n);
    CHECK(top.occupied == tail);
    CHECK(top.first_free == (n == 1 ? 2 : 1));
  }
}

TEST_CASE("ParkingOutcome invariants") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& a : all_words(n)) {
      const auto out = run_parking(a);
      REQUIRE(out.slots.size() == static_cast<std::size_t>(2 * n));
      for (int i = 1; i <= n; ++i) {
        const int p = out.spot_of[static_cast<std::size_t>(i - 1)];
        CHECK(p >= a[i]);
        CHECK(out.slots[static_cast<std::size_t>(p - 1)] == i);
      }
      int ff = n + 1;
      for (int p = 1; p <= n; ++p)
        if (out.slots[static_cast<std::size_t>(p - 1)] == 0) { ff = p; break; }
      CHECK(out.first_free == ff);
    }
  }
}

TEST_CASE("parking criterion equivalence") {
  CHECK(is_parking_function(Word::constant(5, 1)));
  CHECK(is_parking_function(Word({4, 2, 1, 3})));
  CHECK_FALSE(is_parking_function(Word({2, 2})));
  for (int n = 1; n <= 6; ++n) {
    for (const auto& a : all_words(n)) {
      const auto out = run_parking(a);
      const bool pf = is_parking_function(a);
      CHECK(pf == out.parks_all());
      CHECK(pf == (out.first_free == n + 1));
      CHECK(pf == oracle::everybody_parks(a));
    }
  }
}

TEST_CASE("occupied slots are invariant under permuting the word") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& a : all_words(n))
      for (int i = 1; i < n; ++i) {
        const Word b = compose(a, oracle::adjacent_transposition(n, i));
        CHECK(run_parking(a).occupied == run_parking(b).occupied);
        CHECK(is_parking_function(a) == is_parking_function(b));
      }
  // The drivers that park do move with the word: 133 parks {1,3}, 313 parks {2,3}.
  CHECK(run_parking(Word({1, 3, 3})).parked == std::vector<int>{1, 3});
  CHECK(run_parking(Word({3, 1, 3})).parked == std::vector<int>{2, 3});
  CHECK(run_parking(Word({1, 3, 3})).occupied == run_parking(Word({3, 1, 3})).occupied);
  std::mt19937 rng(11);
  for (int n = 6; n <= 7; ++n)
    for (int trial = 0; trial < 3000; ++trial) {
      const Word a = oracle::random_word(n, rng);
      const Word b = compose(a, oracle::random_permutation(n, rng));
      CHECK(run_parking(a).occupied == run_parking(b).occupied);
    }
}

TEST_CASE("parks_all_tail") {
  CHECK(parks_all_tail(Word({4, 2, 1, 3}), 2));
  CHECK_FALSE(parks_all_tail(Word({1, 4, 4, 4}), 3));
  CHECK_THROWS_AS(parks_all_tail(Word({1, 1, 1}), 1), DomainError);
  CHECK_THROWS_AS(parks_all_tail(Word({1, 1, 1}), 4), DomainError);
  for (int n = 2; n <= 6; ++n)
    for (const auto& a : all_words(n)) {
      CHECK(parks_all_tail(a, n));
      const auto out = run_parking(a);
      for (int k = 2; k <= n; ++k) {
        bool sim = true;
        for (int i = k; i <= n; ++i) sim = sim && out.parks(i);
        CHECK(parks_all_tail(a, k) == sim);
      }
    }
}

TEST_CASE("count_tail_parkers matches brute force") {
  CHECK(count_tail_parkers(4, 4) == 256);
  CHECK(count_tail_parkers(4, 2) == 200);
  CHECK(count_tail_parkers(5, 3) == 2700);
  for (int n = 2; n <= 6; ++n)
    for (int k = 2; k <= n; ++k) {
      Count128 brute = 0;
      for (const auto& a : all_words(n)) brute += parks_all_tail(a, k);
      CHECK(brute == count_tail_parkers(n, k));
    }
  CHECK_NOTHROW(count_tail_parkers(kTailCountMaxN, kTailCountMaxN));
  CHECK_THROWS_AS(count_tail_parkers(kTailCountMaxN + 1, 2), BudgetError);
  CHECK_THROWS_AS(count_tail_parkers(4, 5), DomainError);
}

TEST_CASE("centre worked examples") {
  CHECK(centre(Word({4, 3, 2, 1})).members == std::vector<int>{4, 3, 2, 1});
  CHECK(centre(Word({4, 2, 3, 1})).members == std::vector<int>{4, 2});
  CHECK(centre(Word({4, 2, 1, 3})).members == std::vector<int>{3, 2});
  for (int n = 1; n <= 6; ++n) CHECK(centre(Word::constant(n, 1)).members == iota_desc(n));
  CHECK(centre(Word({2, 2})).members.empty());
}

TEST_CASE("greedy centre equals the brute-force maximal set") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : all_words(n)) {
      const auto brute = oracle::centre_bruteforce(a);
      CHECK(brute.union_admissible);
      CHECK(centre(a).members == brute.members);
    }
}

TEST_CASE("every word parks its centre") {
  std::mt19937 rng(3);
  for (int n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 2000; ++trial) {
      const Word a = oracle::random_word(n, rng);
      const auto z = centre(a);
      const auto out = run_parking(a);
      for (int i : z.members) CHECK(out.parks(i));
      std::vector<int> bv(a.values().begin(), a.values().end());
      std::uniform_int_distribution<int> d(1, n);
      for (int i = 1; i <= n; ++i)
        if (!z.contains(i)) bv[static_cast<std::size_t>(i - 1)] = d(rng);
      const auto outb = run_parking(Word(bv));
      for (int i : z.members) CHECK(outb.parks(i));
    }
}

TEST_CASE("Ish-parking") {
  CHECK_FALSE(is_ish_parking(Word({4, 2, 1, 3})));
  CHECK(is_ish_parking(Word({1, 3, 3})));
  CHECK(is_ish_parking(Word::constant(4, 1)));
}

TEST_CASE("sort_tail") {
  const auto st = sort_tail(Word({2, 6, 6, 3, 1, 4, 6, 1}), 5);
  CHECK(st.word == Word({2, 6, 6, 3, 6, 4, 1, 1}));
  CHECK(st.pi == Permutation({1, 2, 3, 4, 7, 6, 5, 8}));
  CHECK(sort_tail(Word({4, 2, 1, 3}), 2).word == Word({4, 3, 2, 1}));
  CHECK(sort_tail(Word({4, 2, 1, 3}), 3).word == Word({4, 2, 3, 1}));
  const auto last = sort_tail(Word({4, 2, 1, 3}), 4);
  CHECK(last.word == Word({4, 2, 1, 3}));
  CHECK(last.pi == Permutation::identity(4));
  CHECK(sort_tail(Word({1, 2, 2, 1}), 2, TieBreak::kDescendingIndex).pi == Permutation({1, 3, 2, 4}));
  CHECK(sort_tail(Word({1, 2, 2, 1}), 2).pi == Permutation({1, 2, 3, 4}));
  CHECK_THROWS_AS(sort_tail(Word({1, 1}), 3), DomainError);
}

TEST_CASE("centre of the sorted tail ignores tie-breaking") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& a : all_words(n))
      for (int k = 2; k <= n; ++k) {
        auto asc = centre(sort_tail(a, k, TieBreak::kAscendingIndex).word).members;
        auto desc = centre(sort_tail(a, k, TieBreak::kDescendingIndex).word).members;
        CHECK(asc == desc);
      }
}

TEST_CASE("k-partial") {
  const Word a({4, 2, 1, 3});
  CHECK(is_k_partial(a, 2));
  CHECK_FALSE(is_k_partial(a, 3));
  CHECK_FALSE(is_k_partial(a, 4));
  for (int k = 2; k <= 4; ++k) {
    CHECK(is_k_partial(Word({2, 3, 1, 1}), k));
    CHECK(is_k_partial(Word::constant(4, 1), k));
  }
}

TEST_CASE("k = 2 gives parking functions, k = n gives Ish-parking functions") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& a : all_words(n)) {
      CHECK(is_k_partial(a, 2) == is_parking_function(a));
      CHECK(is_k_partial(a, n) == is_ish_parking(a));
    }
}

TEST_CASE("constructive sigma") {
  const Word a({2, 6, 6, 3, 1, 4, 6, 1});
  const auto sigma = sigma_characterization(a, 5);
  REQUIRE(sigma);
  CHECK(*sigma == Permutation({8, 5, 4, 1, 2, 3, 6, 7}));
  CHECK(sort_tail(a, 5).pi.inverse() * *sigma == Permutation({8, 7, 4, 1, 2, 3, 6, 5}));
  CHECK(compose(a, *sigma) == Word({1, 1, 3, 2, 6, 6, 4, 6}));
  CHECK(sigma_conditions_hold(a, 5, *sigma));

  for (int n = 2; n <= 6; ++n)
    for (int k = 2; k <= n; ++k) {
      const auto s = sigma_characterization(Word::constant(n, 1), k);
      REQUIRE(s);
      CHECK(*s == Permutation::reversal(n));
      CHECK(sigma_conditions_hold(Word::constant(n, 1), k, *s));
    }
  CHECK_FALSE(sigma_characterization(Word({4, 2, 1, 3}), 4));
}

TEST_CASE("sigma existence matches k-partial") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& a : all_words(n))
      for (int k = 2; k <= n; ++k) {
        const bool partial = is_k_partial(a, k);
        const auto s = sigma_characterization(a, k);
        CHECK(partial == s.has_value());
        if (s) {
          CHECK(sigma_conditions_hold(a, k, *s));
          std::vector<int> av(a.values().begin(), a.values().end());
          std::vector<int> sv(s->images().begin(), s->images().end());
          CHECK(oracle::sigma_ok(av, k, sv));
        }
        CHECK(oracle::sigma_exists(a, k) == partial);
      }
}

TEST_CASE("the position-restricted sigma conditions admit a non-partial word") {
  const Word a({1, 4, 4, 4});
  CHECK_FALSE(is_k_partial(a, 3));
  const Permutation witness({1, 3, 2, 4});
  CHECK(sigma_conditions_literal(a, 3, witness));
  CHECK_FALSE(sigma_conditions_hold(a, 3, witness));
}
