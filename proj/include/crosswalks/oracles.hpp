// Reference sequences computed from first principles, independent of the
// walk and series engines: Bell, Catalan, central binomials, Baxter numbers,
// and brute-force pattern-avoiding permutation counts.
#pragma once

#include <cstdint>
#include <vector>

#include "crosswalks/rational.hpp"

namespace crosswalks {

Int bell(unsigned n);              // Bell triangle
Int catalan(unsigned n);           // binom(2n,n)/(n+1), exact division
Int central_binomial(unsigned n);  // binom(n, floor(n/2))

// Triple-binomial sum 2/(n(n+1)^2) * sum_k C(n+1,k) C(n+1,k+1) C(n+1,k+2);
// the division must be exact, enforced. n >= 1.
Int baxter(unsigned n);

// True iff no subsequence of perm is order-isomorphic to pattern.
// Pattern length <= 4. Entries of perm are distinct.
bool pattern_avoids(const std::vector<int>& perm, const std::vector<int>& pattern);

// Count permutations of [n] with no increasing subsequence of length 4,
// tested via longest-increasing-subsequence < 4. Guarded: n <= guard.
inline constexpr unsigned kAvoiderGuard = 9;
Int count_1234_avoiders(unsigned n, unsigned guard = kAvoiderGuard);

}  // namespace crosswalks
