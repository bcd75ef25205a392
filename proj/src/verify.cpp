#include "shiish/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "shiish/arrangement.hpp"
#include "shiish/error.hpp"
#include "shiish/graphs.hpp"
#include "shiish/parking.hpp"

namespace shiish {

std::uint64_t cayley_count(int n) {
  std::uint64_t c = 1;
  for (int i = 0; i < n - 1; ++i) c *= static_cast<std::uint64_t>(n + 1);
  return c;
}

std::uint64_t word_rank(const Word& a) {
  std::uint64_t r = 0;
  for (int v : a.values()) r = r * static_cast<std::uint64_t>(a.n()) + static_cast<std::uint64_t>(v - 1);
  return r;
}

Word word_unrank(int n, std::uint64_t rank) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    v[static_cast<std::size_t>(i)] = static_cast<int>(rank % static_cast<std::uint64_t>(n)) + 1;
    rank /= static_cast<std::uint64_t>(n);
  }
  return Word(std::move(v));
}

namespace {

using Membership = std::vector<std::uint8_t>;

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::uint64_t popcount(const Membership& m) {
  return static_cast<std::uint64_t>(std::count(m.begin(), m.end(), std::uint8_t{1}));
}

Mismatch diff(int n, const std::string& left, const Membership& l, const std::string& right,
              const Membership& r) {
  Mismatch mm{left, right, {}, {}};
  for (std::uint64_t i = 0; i < l.size(); ++i) {
    if (l[i] && !r[i] && mm.only_left.size() < 10) mm.only_left.push_back(word_unrank(n, i));
    if (r[i] && !l[i] && mm.only_right.size() < 10) mm.only_right.push_back(word_unrank(n, i));
  }
  return mm;
}

}  // namespace

EquivalenceReport cross_validate(int n, int k, const VerifyOptions& opts) {
  if (n > kCrossValidateMaxN)
    throw BudgetError("cross_validate: n=" + std::to_string(n) + " exceeds cap " +
                      std::to_string(kCrossValidateMaxN));
  const Arrangement arr(n, k);
  const MultiDiGraph graph = build_gkn(n, k);
  const RootedGraph rooted = build_rooted(n, k);
  const bool use_subsets = opts.subset_oracle && n <= 5;
  const bool sigma_brute = n <= 5;
  const std::vector<Permutation> perms = sigma_brute ? all_permutations(n) : std::vector<Permutation>{};

  EquivalenceReport rep;
  rep.n = n;
  rep.k = k;
  rep.expected = cayley_count(n);
  rep.sigma_method = sigma_brute ? "bruteforce" : "constructive";

  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(n);

  std::map<std::string, Membership> sets;
  Membership& labels = sets[kLabelSet];
  labels.assign(total, 0);
  for (const auto& lr : enumerate_regions(arr, kCrossValidateMaxN)) {
    if (!lr.label.in_cube()) {
      rep.labels_in_cube = false;
      continue;
    }
    auto& slot = labels[word_rank(lr.label.to_word())];
    if (slot) rep.labels_injective = false;
    slot = 1;
  }

  std::vector<std::string> names{kBurnSet, kPartialSet, kSigmaSet, kTailRootSet};
  if (use_subsets) names.push_back(kSubsetSet);
  for (const auto& name : names) sets[name].assign(total, 0);
  Membership& burn = sets[kBurnSet];
  Membership& partial = sets[kPartialSet];
  Membership& sigma = sets[kSigmaSet];
  Membership& tail_root = sets[kTailRootSet];
  Membership* subsets = use_subsets ? &sets[kSubsetSet] : nullptr;

  for_each_word_parallel(n, opts.workers, [&](const Word& a) {
    const auto r = word_rank(a);
    const BurnReport br = dfs_burn(rooted, a);
    burn[r] = br.success;
    partial[r] = is_k_partial(a, k);
    const bool one_burnt = std::find(br.burnt.begin(), br.burnt.end(), 1) != br.burnt.end();
    tail_root[r] = parks_all_tail(a, k) && one_burnt;
    if (sigma_brute) {
      sigma[r] = std::any_of(perms.begin(), perms.end(),
                             [&](const Permutation& s) { return sigma_conditions_hold(a, k, s); });
    } else {
      const auto s = sigma_characterization(a, k);
      sigma[r] = s && sigma_conditions_hold(a, k, *s);
    }
    if (subsets) (*subsets)[r] = is_g_parking_bruteforce(graph, a);
  });

  rep.pass = rep.labels_injective && rep.labels_in_cube;
  for (const auto& [name, m] : sets) {
    rep.counts[name] = popcount(m);
    if (rep.counts[name] != rep.expected) rep.pass = false;
    if (name != kLabelSet && m != labels) {
      rep.mismatches.push_back(diff(n, kLabelSet, labels, name, m));
      rep.pass = false;
    }
  }
  return rep;
}

namespace {

std::string join_labels(const std::set<std::string>& s) {
  std::string out;
  for (const auto& x : s) out += (out.empty() ? "" : " ") + x;
  return out;
}

std::set<std::string> label_strings(const Arrangement& arr) {
  std::set<std::string> out;
  for (const auto& lr : enumerate_regions(arr)) out.insert(lr.label.str());
  return out;
}

std::set<std::string> labels_in_chamber(const Arrangement& arr, const Permutation& w) {
  std::set<std::string> out;
  for (const auto& lr : enumerate_regions(arr))
    if (describe(arr, lr.region).w == w) out.insert(lr.label.str());
  return out;
}

std::string arcs_str(const std::vector<EncodedArc>& arcs) {
  std::string out;
  for (const auto& [i, j] : arcs)
    out += (out.empty() ? "" : " ") + ("(" + std::to_string(i) + "," + std::to_string(j) + ")");
  return out;
}

std::string ints_str(const std::vector<int>& xs) {
  std::string out;
  for (int x : xs) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

ArtifactCheck check(std::string name, std::string expected, std::string computed) {
  const bool ok = expected == computed;
  return {std::move(name), std::move(expected), std::move(computed), ok};
}

ArtifactCheck contains_all(std::string name, const std::set<std::string>& wanted,
                           const std::set<std::string>& have) {
  std::set<std::string> found;
  for (const auto& w : wanted)
    if (have.contains(w)) found.insert(w);
  return check(std::move(name), join_labels(wanted), join_labels(found));
}

}  // namespace

std::vector<ArtifactCheck> reproduce_tables() {
  std::vector<ArtifactCheck> out;

  const std::set<std::string> ish3{"133", "132", "131", "123", "231", "122", "113", "112",
                                   "111", "121", "221", "213", "212", "211", "311", "321"};
  out.push_back(check("ish3.labels", join_labels(ish3), join_labels(label_strings(Arrangement(3, 3)))));

  const std::set<std::string> left{"2311", "2312", "2411", "2412", "2413"};
  const std::set<std::string> right{"2311", "2411", "2412", "2413", "2414"};
  const Permutation w3142({3, 1, 4, 2});
  out.push_back(contains_all("dim4.shi4_labels", left, label_strings(Arrangement(4, 2))));
  out.push_back(contains_all("dim4.a34_labels", left, label_strings(Arrangement(4, 3))));
  out.push_back(contains_all("dim4.ish4_labels", right, label_strings(Arrangement(4, 4))));
  out.push_back(check("dim4.shi4_chamber_3142", join_labels(left),
                      join_labels(labels_in_chamber(Arrangement(4, 2), w3142))));
  {
    // A^3_4 also carries x_1 - x_4 = 2, which splits off a sixth region (2414).
    const auto a34 = labels_in_chamber(Arrangement(4, 3), w3142);
    out.push_back(contains_all("dim4.a34_chamber_3142", left, a34));
    std::set<std::string> all = left;
    all.insert("2414");
    out.push_back(check("dim4.a34_chamber_3142_all", join_labels(all), join_labels(a34)));
  }
  out.push_back(check("dim4.ish4_chamber_3142", join_labels(right),
                      join_labels(labels_in_chamber(Arrangement(4, 4), w3142))));

  {
    const Arrangement a34(4, 3);
    std::string computed = "absent";
    for (const auto& lr : enumerate_regions(a34)) {
      const auto d = describe(a34, lr.region);
      if (d.w == Permutation({3, 1, 2, 4}) && draw_diagram(d).arcs == std::vector<ArcTriple>{{1, 4, 2}})
        computed = lr.label.str();
    }
    out.push_back(check("dim4.a34_label_w3124", "2313", computed));
  }

  const Word a4213({4, 2, 1, 3});
  {
    const auto br = dfs_burn(build_rooted(4, 2), a4213);
    out.push_back(check("burn.4213.k2.burnt", "0 3 2 4 1", ints_str(br.burnt)));
    out.push_back(check("burn.4213.k2.tree", "(0,3) (0,2) (2,4) (0,1)", arcs_str(br.tree)));
    out.push_back(check("burn.4213.k2.damp", "(0,4) (3,4) (3,2) (3,1) (4,1) (2,1)", arcs_str(br.damp)));
  }
  {
    const auto br = dfs_burn(build_rooted(4, 3), a4213);
    out.push_back(check("burn.4213.k3.burnt", "0 3 2", ints_str(br.burnt)));
    out.push_back(check("burn.4213.k3.damp", "(0,4) (3,4) (3,2) (3,1) (2,1) (0,1)", arcs_str(br.damp)));
  }
  {
    const auto br = dfs_burn(build_rooted(4, 4), a4213);
    out.push_back(check("burn.4213.k4.burnt", "0 3 2", ints_str(br.burnt)));
    out.push_back(check("burn.4213.k4.damp", "(0,4) (3,2) (3,1) (2,1) (0,1)", arcs_str(br.damp)));
  }
  out.push_back(check("neighbours.a34.N1", "8 4 7 3 2", ints_str(build_rooted(4, 3).neighbours(1))));
  out.push_back(check("neighbours.ish4.N1", "12 8 4 7 3 2", ints_str(build_rooted(4, 4).neighbours(1))));
  out.push_back(check("centre.4321", "4 3 2 1", ints_str(centre(Word({4, 3, 2, 1})).members)));
  out.push_back(check("centre.4231", "4 2", ints_str(centre(Word({4, 2, 3, 1})).members)));
  out.push_back(check("centre.4213", "3 2", ints_str(centre(Word({4, 2, 1, 3})).members)));
  out.push_back(check("sort_tail.4213.k2", "4321", sort_tail(a4213, 2).word.str()));
  out.push_back(check("sort_tail.4213.k3", "4231", sort_tail(a4213, 3).word.str()));

  {
    const Word a({2, 6, 6, 3, 1, 4, 6, 1});
    const auto st = sort_tail(a, 5);
    const auto sigma = sigma_characterization(a, 5);
    const std::string sigma_str = sigma ? sigma->str() : "none";
    // tau = pi^{-1} o sigma
    const std::string tau_str = sigma ? (st.pi.inverse() * *sigma).str() : "none";
    out.push_back(check("sigma_example.a_up_5", "26636411", st.word.str()));
    out.push_back(check("sigma_example.tau", "87412365", tau_str));
    out.push_back(check("sigma_example.sigma", "85412367", sigma_str));
    out.push_back(check("sigma_example.a_o_sigma", "11326646", sigma ? compose(a, *sigma).str() : "none"));
  }

  {
    const auto g3 = build_gkn(4, 3);
    const auto g4 = build_gkn(4, 4);
    std::ostringstream os;
    os << "K4=" << (build_gkn(4, 2).arc_count() == 12) << " m31(k3)=" << g3.multiplicity(3, 1)
       << " m43(k3)=" << g3.multiplicity(4, 3) << " m34(k3)=" << g3.multiplicity(3, 4)
       << " m41(k4)=" << g4.multiplicity(4, 1);
    out.push_back(check("gkn.multiplicities", "K4=1 m31(k3)=2 m43(k3)=1 m34(k3)=1 m41(k4)=3", os.str()));
  }
  return out;
}

std::vector<CountRow> count_sweep(int n_max, const VerifyOptions& opts) {
  if (n_max > kDefaultRegionCap)
    throw BudgetError("count_sweep: n_max=" + std::to_string(n_max) + " exceeds cap " +
                      std::to_string(kDefaultRegionCap));
  std::vector<CountRow> rows;
  for (int n = 2; n <= n_max; ++n) {
    for (int k = 2; k <= n; ++k) {
      CountRow row{n, k, 0, cayley_count(n), 0, 0, false};
      row.regions = enumerate_regions(Arrangement(n, k)).size();
      std::vector<std::uint8_t> hit(static_cast<std::size_t>(word_rank(Word::constant(n, n)) + 1), 0);
      for_each_word_parallel(n, opts.workers, [&](const Word& a) {
        hit[word_rank(a)] = parks_all_tail(a, k);
      });
      row.tail_parkers = static_cast<std::uint64_t>(std::count(hit.begin(), hit.end(), std::uint8_t{1}));
      row.tail_formula = static_cast<std::uint64_t>(count_tail_parkers(n, k));
      row.pass = row.regions == row.expected_regions && row.tail_parkers == row.tail_formula;
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace shiish
