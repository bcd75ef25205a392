// Acceptance suite. Prints one PASS/FAIL line per criterion and exits non-zero
// if any of them fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "shiish/arrangement.hpp"
#include "shiish/core.hpp"
#include "shiish/graphs.hpp"
#include "shiish/parking.hpp"

using namespace shiish;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail = why;
  o.pass = false;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::set<std::string> label_strings(const Arrangement& arr) {
  std::set<std::string> out;
  for (const auto& lr : enumerate_regions(arr)) out.insert(lr.label.str());
  return out;
}

Outcome region_counts() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::string summary;
  for (int n = 3; n <= 5; ++n)
    for (int k = 2; k <= n; ++k) {
      const auto got = enumerate_regions(Arrangement(n, k)).size();
      const auto want = ipow(static_cast<std::uint64_t>(n + 1), n - 1);
      if (got != want)
        fail(o, "n=" + std::to_string(n) + " k=" + std::to_string(k) + " gave " + std::to_string(got));
    }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > 120.0) fail(o, "took " + std::to_string(secs) + " s");
  if (o.pass) o.detail = "16/125/1296 regions in " + std::to_string(secs).substr(0, 5) + " s";
  return o;
}

Outcome ish3_labels() {
  Outcome o;
  const std::set<std::string> want{"133", "132", "131", "123", "231", "122", "113", "112",
                                   "111", "121", "221", "213", "212", "211", "311", "321"};
  const auto got = label_strings(Arrangement(3, 3));
  if (got != want) fail(o, "label set differs (" + std::to_string(got.size()) + " labels)");
  if (o.pass) o.detail = "16 labels, exact set equality";
  return o;
}

Outcome dimension4_families() {
  Outcome o;
  const auto shi = label_strings(Arrangement(4, 2));
  const auto a43 = label_strings(Arrangement(4, 3));
  const auto ish = label_strings(Arrangement(4, 4));
  for (const char* l : {"2311", "2312", "2411", "2412", "2413"}) {
    if (!shi.count(l)) fail(o, std::string("Shi_4 lacks ") + l);
    if (!a43.count(l)) fail(o, std::string("A^3_4 lacks ") + l);
  }
  for (const char* l : {"2311", "2411", "2412", "2413", "2414"})
    if (!ish.count(l)) fail(o, std::string("Ish_4 lacks ") + l);
  if (!a43.count("2313")) fail(o, "A^3_4 lacks 2313");
  if (o.pass) o.detail = "all 11 memberships hold";
  return o;
}

Outcome equivalence() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (int n = 2; n <= 5; ++n)
    for (int k = 2; k <= n; ++k) {
      const Arrangement arr(n, k);
      std::set<Word> labels;
      for (const auto& lr : enumerate_regions(arr)) labels.insert(lr.label.to_word());
      const auto g = build_gkn(n, k);
      const auto r = build_rooted(n, k);
      std::set<Word> burning, subsets, partial, sigma;
      for (const auto& a : all_words(n)) {
        if (is_g_parking(r, a)) burning.insert(a);
        if (is_g_parking_bruteforce(g, a)) subsets.insert(a);
        if (is_k_partial(a, k)) partial.insert(a);
        if (oracle::sigma_exists(a, k)) sigma.insert(a);
      }
      const std::string cell = "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": ";
      if (labels.size() != ipow(static_cast<std::uint64_t>(n + 1), n - 1)) fail(o, cell + "label count");
      if (burning != labels) fail(o, cell + "burning differs from labels");
      if (subsets != labels) fail(o, cell + "subset G-parking differs from labels");
      if (partial != labels) fail(o, cell + "k-partial differs from labels");
      if (sigma != labels) fail(o, cell + "sigma existence differs from labels");
    }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > 300.0) fail(o, "took " + std::to_string(secs) + " s");
  if (o.pass) o.detail = "five sets equal for all n<=5, " + std::to_string(secs).substr(0, 5) + " s";
  return o;
}

Outcome burning_example() {
  Outcome o;
  const Word a({4, 2, 1, 3});
  const auto b2 = dfs_burn(build_rooted(4, 2), a);
  if (b2.burnt != std::vector<int>{0, 3, 2, 4, 1}) fail(o, "burnt order on k=2");
  if (b2.tree != std::vector<EncodedArc>{{0, 3}, {0, 2}, {2, 4}, {0, 1}}) fail(o, "tree on k=2");
  if (!b2.success) fail(o, "k=2 should succeed");
  if (dfs_burn(build_rooted(4, 3), a).success) fail(o, "k=3 should fail");
  if (dfs_burn(build_rooted(4, 4), a).success) fail(o, "k=4 should fail");
  if (build_rooted(4, 3).neighbours(1) != std::vector<int>{8, 4, 7, 3, 2}) fail(o, "N(1) on k=3");
  if (centre(Word({4, 3, 2, 1})).members != std::vector<int>{4, 3, 2, 1}) fail(o, "Z(4321)");
  if (centre(Word({4, 2, 3, 1})).members != std::vector<int>{4, 2}) fail(o, "Z(4231)");
  if (centre(Word({4, 2, 1, 3})).members != std::vector<int>{3, 2}) fail(o, "Z(4213)");
  if (o.pass) o.detail = "burn traces, N(1) and three centres match";
  return o;
}

Outcome sigma_example() {
  Outcome o;
  const Word a = parse_word("26631461");
  const auto st = sort_tail(a, 5);
  const auto sigma = sigma_characterization(a, 5);
  if (st.word.str() != "26636411") fail(o, "a sorted tail gave " + st.word.str());
  if (!sigma) {
    fail(o, "no sigma constructed");
    return o;
  }
  const Permutation tau = st.pi.inverse() * *sigma;
  if (tau.str() != "87412365") fail(o, "tau gave " + tau.str());
  if (sigma->str() != "85412367") fail(o, "sigma gave " + sigma->str());
  if (compose(a, *sigma).str() != "11326646") fail(o, "a o sigma gave " + compose(a, *sigma).str());
  if (o.pass) o.detail = "a sorted 26636411, tau 87412365, sigma 85412367, a o sigma 11326646";
  return o;
}

Outcome tail_counts() {
  Outcome o;
  for (int n = 4; n <= 6; ++n)
    for (int k = 2; k <= n; ++k) {
      std::uint64_t brute = 0;
      for (const auto& a : all_words(n)) {
        const auto out = run_parking(a);
        bool all = true;
        for (int i = k; i <= n; ++i) all = all && out.parks(i);
        brute += all;
      }
      const std::uint64_t formula = static_cast<std::uint64_t>(k) * ipow(static_cast<std::uint64_t>(n), k - 1) *
                                    ipow(static_cast<std::uint64_t>(n + 1), n - k);
      if (brute != formula)
        fail(o, "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + std::to_string(brute) +
                    " vs " + std::to_string(formula));
      if (count_tail_parkers(n, k) != formula) fail(o, "closed form disagrees at n=" + std::to_string(n));
    }
  if (o.pass) o.detail = "k n^(k-1) (n+1)^(n-k) for n = 4, 5, 6";
  return o;
}

struct Suite {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
};

Suite shift_suite() {
  Suite s{"occupied slots fixed by adjacent transpositions, n<=5"};
  for (int n = 2; n <= 5; ++n)
    for (const auto& a : all_words(n))
      for (int i = 1; i < n; ++i)
        s.record(run_parking(a).occupied == run_parking(compose(a, oracle::adjacent_transposition(n, i))).occupied,
                 a.str());
  return s;
}

Suite centre_suite() {
  Suite s{"greedy centre = brute-force maximal set, n<=7"};
  for (int n = 1; n <= 7; ++n)
    for (const auto& a : all_words(n)) {
      const auto brute = oracle::centre_bruteforce(a);
      s.record(brute.union_admissible && centre(a).members == brute.members, a.str());
    }
  return s;
}

Suite parks_centre_suite() {
  Suite s{"centre parked under off-centre changes, 10000 pairs per n<=6"};
  std::mt19937 rng(20261019);
  for (int n = 1; n <= 6; ++n) {
    std::uniform_int_distribution<int> d(1, n);
    for (int trial = 0; trial < 10000; ++trial) {
      const Word a = oracle::random_word(n, rng);
      const auto z = centre(a);
      std::vector<int> bv(a.values().begin(), a.values().end());
      for (int i = 1; i <= n; ++i)
        if (!z.contains(i)) bv[static_cast<std::size_t>(i - 1)] = d(rng);
      const auto out_a = run_parking(a);
      const auto out_b = run_parking(Word(bv));
      bool ok = true;
      for (int i : z.members) ok = ok && out_a.parks(i) && out_b.parks(i);
      s.record(ok, a.str());
    }
  }
  return s;
}

Suite round_trip_suite() {
  Suite s{"tree_to_word inverts dfs_burn, n<=4"};
  for (int n = 2; n <= 4; ++n)
    for (int k = 2; k <= n; ++k) {
      const auto g = build_rooted(n, k);
      for (const auto& a : all_words(n)) {
        const auto br = dfs_burn(g, a);
        if (br.success) s.record(tree_to_word(g, br.tree) == a, a.str() + " k=" + std::to_string(k));
      }
    }
  return s;
}

Suite label_suite() {
  Suite s{"three label routes agree, n<=5"};
  for (int n = 2; n <= 5; ++n)
    for (int k = 2; k <= n; ++k) {
      const Arrangement arr(n, k);
      for (const auto& lr : enumerate_regions(arr))
        s.record(label_direct(arr, lr.region) == lr.label &&
                     label_from_description(arr, describe(arr, lr.region)) == lr.label,
                 lr.region.signs);
    }
  return s;
}

// Z(a sorted) = {pi(i_1), ..., pi(i_p)} where i_p is the smallest burnt vertex,
// taken over every word whose smallest burnt vertex is below k.
Suite centro_suite() {
  Suite s{"centre of a sorted = pi(burnt prefix), n<=5"};
  for (int n = 2; n <= 5; ++n)
    for (int k = 2; k <= n; ++k) {
      const auto g = build_rooted(n, k);
      for (const auto& a : all_words(n)) {
        const auto br = dfs_burn(g, a);
        const int m = static_cast<int>(br.burnt.size()) - 1;
        if (m == 0) continue;
        int p = 1;
        for (int j = 2; j <= m; ++j)
          if (br.burnt[static_cast<std::size_t>(j)] < br.burnt[static_cast<std::size_t>(p)]) p = j;
        if (br.burnt[static_cast<std::size_t>(p)] >= k) continue;
        const auto st = sort_tail(a, k);
        const auto inv = st.pi.inverse();
        std::set<int> forward, backward;
        for (int j = 1; j <= p; ++j) {
          forward.insert(st.pi(br.burnt[static_cast<std::size_t>(j)]));
          backward.insert(inv(br.burnt[static_cast<std::size_t>(j)]));
        }
        const auto z = centre(st.word).members;
        const std::set<int> zs(z.begin(), z.end());
        s.record(zs == forward || zs == backward, a.str() + " k=" + std::to_string(k));
      }
    }
  return s;
}

Outcome properties() {
  Outcome o;
  const std::vector<Suite> suites{shift_suite(),      centre_suite(), parks_centre_suite(),
                                  round_trip_suite(), label_suite(),  centro_suite()};
  std::string report;
  for (const auto& s : suites) {
    std::printf("    %-62s %8llu cases %6llu failures%s\n", s.name.c_str(),
                static_cast<unsigned long long>(s.cases), static_cast<unsigned long long>(s.failures),
                s.failures ? (" (first: " + s.first_failure + ")").c_str() : "");
    if (s.failures) fail(o, s.name + " has " + std::to_string(s.failures) + " failures");
  }
  if (o.pass) o.detail = "6 suites, zero failures";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 region counts (n+1)^(n-1) for n=3..5", region_counts},
      {"2 Ish_3 label set", ish3_labels},
      {"3 dimension-4 label families and 2313", dimension4_families},
      {"4 five characterizations agree for n<=5", equivalence},
      {"5 burning on 4213, N(1), centres", burning_example},
      {"6 sorted tail and sigma for 26631461, k=5", sigma_example},
      {"7 tail-parking counts for n=4..6", tail_counts},
      {"8 property suites", properties},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
