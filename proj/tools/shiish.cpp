// Command-line front end: region dumps, word classification, burning traces,
// graph export and the verification harness.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "shiish/arrangement.hpp"
#include "shiish/error.hpp"
#include "shiish/graphs.hpp"
#include "shiish/json_io.hpp"
#include "shiish/parking.hpp"
#include "shiish/verify.hpp"

namespace {

using namespace shiish;

enum ExitCode : int { kOk = 0, kUsage = 1, kBudget = 2, kVerifyFailed = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int budget_cap() {
  if (const char* env = std::getenv("SHIISH_MAX_N")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("SHIISH_MAX_N is not an integer: ") + env);
    }
  }
  return kDefaultRegionCap;
}

std::vector<int> parse_ks(const std::string& spec, int n) {
  std::vector<int> ks;
  if (spec == "all") {
    for (int k = 2; k <= n; ++k) ks.push_back(k);
    return ks;
  }
  int k = 0;
  try {
    std::size_t used = 0;
    k = std::stoi(spec, &used);
    if (used != spec.size()) throw std::invalid_argument(spec);
  } catch (const std::exception&) {
    throw UsageError("--k must be an integer or 'all', got '" + spec + "'");
  }
  if (k < 2 || k > n)
    throw UsageError("--k " + std::to_string(k) + " outside [2," + std::to_string(n) + "]");
  return {k};
}

void check_n(int n) {
  if (n < 2) throw UsageError("--n must be at least 2");
}

void check_budget(int n, const std::string& what) {
  const int cap = budget_cap();
  if (n > cap)
    throw BudgetError(what + ": n=" + std::to_string(n) + " exceeds budget cap " +
                      std::to_string(cap) + " (set SHIISH_MAX_N to raise it)");
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string label_csv(const Label& l) {
  std::string s;
  for (int e : l.entries()) s += (s.empty() ? "" : ",") + std::to_string(e);
  return s;
}

std::string diagram_text(const Diagram& d) {
  std::string s = d.w.str();
  for (const auto& a : d.arcs)
    s += " (" + std::to_string(a.i) + "," + std::to_string(a.j) + "," + std::to_string(a.a) + ")";
  return s;
}

int cmd_regions(int n, const std::string& kspec, const std::string& format, const std::string& out) {
  check_n(n);
  const auto ks = parse_ks(kspec, n);
  check_budget(n, "regions");
  const int cap = budget_cap();
  Output o(out);
  Json all = Json::array();
  for (int k : ks) {
    const Arrangement arr(n, k);
    const auto regions = enumerate_regions(arr, cap);
    if (format == "csv") {
      for (const auto& lr : regions)
        o.stream() << (ks.size() > 1 ? std::to_string(k) + "," : "") << label_csv(lr.label) << '\n';
    } else if (format == "text") {
      o.stream() << "# n=" << n << " k=" << k << " regions=" << regions.size() << '\n';
      for (const auto& lr : regions)
        o.stream() << lr.region.signs << ' ' << lr.label << ' '
                   << diagram_text(draw_diagram(describe(arr, lr.region))) << '\n';
    } else {
      Json doc{{"n", n}, {"k", k}};
      Json hs = Json::array();
      for (const auto& h : arr.hyperplanes()) hs.push_back({h.p, h.q, h.c});
      doc["hyperplanes"] = std::move(hs);
      Json recs = Json::array();
      for (const auto& lr : regions) recs.push_back(region_json(arr, lr));
      doc["regions"] = std::move(recs);
      all.push_back(std::move(doc));
    }
  }
  if (format == "json") o.stream() << (ks.size() == 1 ? all[0] : all).dump(1) << '\n';
  return kOk;
}

int cmd_check(const std::string& word_text, const std::string& kspec, bool trace, const std::string& out) {
  const Word a = parse_word(word_text);
  if (a.n() < 2) throw UsageError("words need n >= 2");
  const auto ks = parse_ks(kspec, a.n());
  Json j = classification_json(a, ks);
  if (trace) {
    Json burns = Json::object();
    for (int k : ks) burns[std::to_string(k)] = to_json(dfs_burn(build_rooted(a.n(), k), a));
    j["burn"] = std::move(burns);
  }
  Output o(out);
  o.stream() << j.dump(1) << '\n';
  return kOk;
}

int cmd_burn(const std::string& word_text, const std::string& kspec, const std::string& out) {
  const Word a = parse_word(word_text);
  if (a.n() < 2) throw UsageError("words need n >= 2");
  const auto ks = parse_ks(kspec, a.n());
  Json j;
  if (ks.size() == 1) {
    j = to_json(dfs_burn(build_rooted(a.n(), ks[0]), a));
  } else {
    j = Json::object();
    for (int k : ks) j[std::to_string(k)] = to_json(dfs_burn(build_rooted(a.n(), k), a));
  }
  Output o(out);
  o.stream() << j.dump(1) << '\n';
  return kOk;
}

int cmd_graph(int n, const std::string& kspec, bool rooted, const std::string& format, const std::string& out) {
  check_n(n);
  const auto ks = parse_ks(kspec, n);
  Output o(out);
  for (int k : ks) {
    const std::string name = (rooted ? "Gbar_" : "G_") + std::to_string(n) + "_" + std::to_string(k);
    if (format == "json") {
      Json j{{"n", n}, {"k", k}};
      if (rooted) {
        const auto g = build_rooted(n, k);
        Json nb = Json::object();
        for (int i = 0; i <= n; ++i) nb[std::to_string(i)] = g.neighbours(i);
        j["neighbours"] = std::move(nb);
      } else {
        const auto g = build_gkn(n, k);
        Json arcs = Json::array();
        for (int u = 1; u <= n; ++u)
          for (int v = 1; v <= n; ++v)
            if (g.multiplicity(u, v) > 0) arcs.push_back({u, v, g.multiplicity(u, v)});
        j["arcs"] = std::move(arcs);
      }
      o.stream() << j.dump(1) << '\n';
    } else {
      o.stream() << (rooted ? to_dot(build_rooted(n, k), name) : to_dot(build_gkn(n, k), name));
    }
  }
  return kOk;
}

int cmd_count(int n_max, const std::string& format, int workers, const std::string& out) {
  if (n_max < 2) throw UsageError("--n-max must be at least 2");
  check_budget(n_max, "count");
  const auto rows = count_sweep(n_max, {workers, true});
  Output o(out);
  bool ok = true;
  if (format == "json") {
    Json j = Json::array();
    for (const auto& r : rows) j.push_back(to_json(r));
    o.stream() << j.dump(1) << '\n';
  } else {
    o.stream() << "n k regions expected tail_brute tail_formula pass\n";
    for (const auto& r : rows)
      o.stream() << r.n << ' ' << r.k << ' ' << r.regions << ' ' << r.expected_regions << ' '
                 << r.tail_parkers << ' ' << r.tail_formula << ' ' << (r.pass ? "yes" : "NO") << '\n';
  }
  for (const auto& r : rows) ok = ok && r.pass;
  return ok ? kOk : kVerifyFailed;
}

int cmd_verify(int n_max, int workers, const std::string& json_out) {
  if (n_max < 3) throw UsageError("--n-max must be at least 3");
  check_budget(n_max, "verify");
  if (n_max > kCrossValidateMaxN)
    throw BudgetError("verify: n-max above " + std::to_string(kCrossValidateMaxN) + " is not supported");
  bool ok = true;
  Json cells = Json::array();
  std::cout << "cross-validation\n";
  for (int n = 3; n <= n_max; ++n) {
    for (int k = 2; k <= n; ++k) {
      const auto rep = cross_validate(n, k, {workers, true});
      ok = ok && rep.pass;
      std::cout << "  n=" << n << " k=" << k << " expected=" << rep.expected;
      for (const auto& [name, c] : rep.counts) std::cout << ' ' << name << '=' << c;
      std::cout << (rep.pass ? "  PASS" : "  FAIL") << '\n';
      cells.push_back(to_json(rep));
    }
  }
  std::cout << "worked examples\n";
  Json artifacts = Json::array();
  for (const auto& c : reproduce_tables()) {
    ok = ok && c.pass;
    std::cout << "  " << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.computed << '\n';
    artifacts.push_back(to_json(c));
  }
  std::cout << "counts\n";
  Json counts = Json::array();
  for (const auto& r : count_sweep(n_max, {workers, true})) {
    ok = ok && r.pass;
    std::cout << "  n=" << r.n << " k=" << r.k << " regions=" << r.regions << " T_k=" << r.tail_parkers
              << " formula=" << r.tail_formula << (r.pass ? "  PASS" : "  FAIL") << '\n';
    counts.push_back(to_json(r));
  }
  std::cout << (ok ? "verify: PASS" : "verify: FAIL") << '\n';
  if (!json_out.empty()) {
    Output o(json_out);
    o.stream() << Json{{"cells", cells}, {"artifacts", artifacts}, {"counts", counts}, {"pass", ok}}.dump(1)
               << '\n';
  }
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regions, labels and parking functions of the arrangements between Shi and Ish"};
  app.require_subcommand(1);

  int n = 0;
  int n_max = 0;
  int workers = 1;
  std::string kspec = "all";
  std::string format = "json";
  std::string out;
  std::string word;
  bool trace = false;
  bool rooted = false;
  std::string graph_format = "dot";
  std::string count_format = "text";

  auto* regions = app.add_subcommand("regions", "enumerate regions with their labels");
  regions->add_option("--n", n, "dimension")->required();
  regions->add_option("--k", kspec, "interpolation parameter or 'all'")->required();
  regions->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));
  regions->add_option("--out", out, "output file (default stdout)");
  regions->add_option("--workers", workers);

  auto* check = app.add_subcommand("check", "classify a word");
  check->add_option("word", word, "e.g. 4213, [4,2,1,3] or 4,2,1,3")->required();
  check->add_option("--k", kspec, "k or 'all'");
  check->add_flag("--trace", trace, "include burning traces");
  check->add_option("--out", out);

  auto* burn = app.add_subcommand("burn", "run the depth-first burning algorithm");
  burn->add_option("word", word)->required();
  burn->add_option("--k", kspec, "k or 'all'");
  burn->add_option("--out", out);

  auto* graph = app.add_subcommand("graph", "export G^k_n (or the rooted graph with --rooted)");
  graph->add_option("--n", n)->required();
  graph->add_option("--k", kspec)->required();
  graph->add_flag("--rooted", rooted);
  graph->add_option("--format", graph_format)->check(CLI::IsMember({"dot", "json"}));
  graph->add_option("--out", out);

  auto* verify = app.add_subcommand("verify", "cross-validate every characterization");
  verify->add_option("--n-max", n_max)->required();
  verify->add_option("--workers", workers);
  verify->add_option("--json,--out", out, "write the merged JSON report here");

  auto* count = app.add_subcommand("count", "region counts and tail-parking counts");
  count->add_option("--n-max", n_max)->required();
  count->add_option("--format", count_format)->check(CLI::IsMember({"json", "text"}));
  count->add_option("--workers", workers);
  count->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (regions->parsed()) return cmd_regions(n, kspec, format, out);
    if (check->parsed()) return cmd_check(word, kspec, trace, out);
    if (burn->parsed()) return cmd_burn(word, kspec, out);
    if (graph->parsed()) return cmd_graph(n, kspec, rooted, graph_format, out);
    if (count->parsed()) return cmd_count(n_max, count_format, workers, out);
    if (verify->parsed()) return cmd_verify(n_max, workers, out);
  } catch (const BudgetError& e) {
    std::cerr << "budget: " << e.what() << '\n';
    return kBudget;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
