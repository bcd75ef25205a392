#pragma once

// Cross-validation of the label / parking characterizations and reproduction
// of the published worked examples.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "shiish/core.hpp"

namespace shiish {

/// Names of the compared sets, in report order.
inline constexpr const char* kLabelSet = "pak_stanley_labels";
inline constexpr const char* kBurnSet = "g_parking_burning";
inline constexpr const char* kSubsetSet = "g_parking_subsets";
inline constexpr const char* kPartialSet = "k_partial";
inline constexpr const char* kSigmaSet = "sigma_exists";
inline constexpr const char* kTailRootSet = "parks_tail_and_burns_1";

struct Mismatch {
  std::string left;
  std::string right;
  std::vector<Word> only_left;   // at most 10 samples
  std::vector<Word> only_right;  // at most 10 samples
};

struct EquivalenceReport {
  int n = 0;
  int k = 0;
  std::uint64_t expected = 0;  // (n+1)^{n-1}
  std::map<std::string, std::uint64_t> counts;
  std::vector<Mismatch> mismatches;
  bool labels_injective = true;
  bool labels_in_cube = true;
  std::string sigma_method;  // "bruteforce" (n <= 5) or "constructive"
  bool pass = false;
};

struct VerifyOptions {
  int workers = 1;
  bool subset_oracle = true;  // forced off above n = 5
};

inline constexpr int kCrossValidateMaxN = 6;

EquivalenceReport cross_validate(int n, int k, const VerifyOptions& opts = {});

struct ArtifactCheck {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

/// Worked-example values (labels, burn traces, centres, sigma) recomputed from scratch.
std::vector<ArtifactCheck> reproduce_tables();

struct CountRow {
  int n = 0;
  int k = 0;
  std::uint64_t regions = 0;
  std::uint64_t expected_regions = 0;
  std::uint64_t tail_parkers = 0;
  std::uint64_t tail_formula = 0;
  bool pass = false;
};

std::vector<CountRow> count_sweep(int n_max, const VerifyOptions& opts = {});

/// (n+1)^{n-1}
std::uint64_t cayley_count(int n);

/// Index of a word in lexicographic order over [n]^n and its inverse.
std::uint64_t word_rank(const Word& a);
Word word_unrank(int n, std::uint64_t rank);

/// Runs body(word) over all of [n]^n, split into contiguous blocks across
/// workers. body must be safe to call concurrently.
template <class Body>
void for_each_word_parallel(int n, int workers, Body&& body);

}  // namespace shiish

#include "shiish/detail/parallel.hpp"
