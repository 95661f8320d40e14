// Named verification suites shared by the CLI, the C API, and the
// acceptance runner: every check returns an id, a pass flag, and a
// diagnostic detail line when it fails.
#pragma once

#include <string>
#include <vector>

namespace crosswalks {

struct CheckResult {
  std::string id;
  bool pass = false;
  std::string detail;  // empty when passing
};

// Constant-term identity catalog at the given series order, each identity
// re-run with the window widened by stability_margin to confirm the zeros
// are not truncation artifacts.
std::vector<CheckResult> verify_identities(int series_order = 24,
                                           int stability_margin = 8);

// Catalog recurrences against freshly computed walk rows: annihilation on
// every available shift, initial terms, and exact reproduction of the row
// when extended from the initials.
std::vector<CheckResult> verify_recurrences(int dp_terms = 64);

// Catalog differential equations: zero residual against walk rows through
// t^{series_order-1}, plus recurrence/equation consistency on sequences
// extended far past the DP window.
std::vector<CheckResult> verify_odes(int series_order = 24,
                                     long extension = 120);

// Word-set characterizations, both palindromic step encodings, the
// mirror-symmetric noncrossing partition count, the balanced-word
// restriction, and the fixed worked example.
std::vector<CheckResult> verify_bijections(int word_max = 12,
                                           int partition_max = 12,
                                           int balanced_max = 8);

// Relations tying different rows together: the even axis row doubles the
// even diagonal row, odd axis terms halve the following even term, odd
// diagonal terms count 1234-avoiding permutations, and the hesitating axis
// row shifts the Baxter numbers.
std::vector<CheckResult> verify_cross_sequences(int deep_terms = 101,
                                                int avoider_max = 8,
                                                int baxter_max = 12);

// Constant-term evaluations against walk DP rows for every cataloged
// endpoint set of both flavors, including the odd-row reductions.
std::vector<CheckResult> verify_series_vs_walks(int series_order = 32,
                                                int match_terms = 16);

// The four CLI-visible suites (identities, recurrences, odes, bijections)
// concatenated.
std::vector<CheckResult> verify_all();

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace crosswalks
