#include "crosswalks/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace crosswalks {

Int bell(unsigned n) {
  // Bell triangle: row r starts with the last entry of row r-1,
  // each next entry adds the neighbour above-left.
  std::vector<Int> row{1};
  for (unsigned r = 1; r <= n; ++r) {
    std::vector<Int> next;
    next.reserve(r + 1);
    next.push_back(row.back());
    for (unsigned i = 0; i < r; ++i) next.push_back(next.back() + row[i]);
    row = std::move(next);
  }
  return row.front();
}

Int catalan(unsigned n) { return divexact(binomial(2 * n, n), Int(n + 1)); }

Int central_binomial(unsigned n) { return binomial(n, n / 2); }

Int baxter(unsigned n) {
  if (n < 1) throw std::domain_error("baxter: n must be >= 1");
  Int sum = 0;
  for (unsigned k = 0; k + 1 <= n; ++k)
    sum += binomial(n + 1, k) * binomial(n + 1, k + 1) * binomial(n + 1, k + 2);
  Int den = Int(n) * Int(n + 1) * Int(n + 1);
  return divexact(2 * sum, den);
}

namespace {

// Longest strictly increasing subsequence length (patience sorting).
int lis_length(const std::vector<int>& v) {
  std::vector<int> tails;
  for (int x : v) {
    auto it = std::lower_bound(tails.begin(), tails.end(), x);
    if (it == tails.end())
      tails.push_back(x);
    else
      *it = x;
  }
  return static_cast<int>(tails.size());
}

bool contains_pattern(const std::vector<int>& perm, const std::vector<int>& pattern,
                      size_t pi, size_t start, std::vector<int>& chosen) {
  if (pi == pattern.size()) return true;
  for (size_t i = start; i + (pattern.size() - pi) <= perm.size(); ++i) {
    bool ok = true;
    for (size_t j = 0; j < pi && ok; ++j) {
      // chosen[j] vs perm[i] must compare like pattern[j] vs pattern[pi]
      if ((chosen[j] < perm[i]) != (pattern[j] < pattern[pi])) ok = false;
    }
    if (!ok) continue;
    chosen.push_back(perm[i]);
    if (contains_pattern(perm, pattern, pi + 1, i + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool pattern_avoids(const std::vector<int>& perm, const std::vector<int>& pattern) {
  if (pattern.size() > 4) throw std::domain_error("pattern_avoids: pattern length > 4");
  if (pattern.size() > perm.size()) return true;
  std::vector<int> chosen;
  chosen.reserve(pattern.size());
  return !contains_pattern(perm, pattern, 0, 0, chosen);
}

Int count_1234_avoiders(unsigned n, unsigned guard) {
  if (n > guard) throw std::length_error("count_1234_avoiders: n exceeds guard");
  if (n == 0) return 1;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  Int count = 0;
  do {
    if (lis_length(perm) < 4) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace crosswalks
