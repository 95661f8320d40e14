// Exact DP counts of vacillating and hesitating lattice walks on the
// quadrant Q_k and the chamber W_k = {a1 > a2 > ... > ak >= 0}, with
// reflection-principle evaluation and endpoint-set aggregation.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "crosswalks/rational.hpp"

namespace crosswalks {

enum class Flavor { vacillating, hesitating };
enum class Lattice { Q, W };

using Point = std::vector<int>;

struct WalkSpec {
  Flavor flavor = Flavor::vacillating;
  Lattice lattice = Lattice::W;
  int k = 2;
  Point start;   // must lie on the lattice
  int length = 0;  // single steps; hesitating walks advance in step pairs, length must be even
};

struct WalkTable {
  WalkSpec spec;
  std::map<Point, Int> counts;  // endpoint -> walk count, zero entries omitted
};

inline constexpr int kWalkCeiling = 400;

bool in_lattice(const Point& p, Lattice lat);

// Lattice-legal successor points for a single vacillating step. Odd steps
// (1-based) stay or subtract a unit vector, even steps stay or add one.
std::vector<Point> step_targets(const Point& p, const WalkSpec& spec, int step_index);

WalkTable count_walks(const WalkSpec& spec, int ceiling = kWalkCeiling);

// Signed sum over the symmetric group: sum_pi sign(pi) q_k(pi(a), b, n),
// which must reproduce the W_k count when a, b lie in W_k.
Int reflection_count(const Point& a, const Point& b, int n,
                     Flavor flavor = Flavor::vacillating, int ceiling = kWalkCeiling);

// Endpoint sets over W_2 and integer-weighted combinations of them.
enum class EndSetKind { A1, A2, A2p, A2pp, A3, A4 };

struct EndSet {
  std::vector<std::pair<EndSetKind, long>> terms;  // weighted union
  static EndSet single(EndSetKind k) { return EndSet{{{k, 1}}}; }
  long weight(const Point& p) const;  // summed weight of p over all terms
};

bool endset_contains(EndSetKind kind, const Point& p);

Int count_to_endset(const WalkSpec& spec, const EndSet& a, int ceiling = kWalkCeiling);

// Checks the three odd-to-even length reductions on W_2: total mass at
// length 2n+1 against the 1/2/3-weighted even table, and the x-axis and
// diagonal rows against their shifted endpoint unions.
bool odd_reduction_check(const Point& a, int n, int ceiling = kWalkCeiling);

enum class Parity { all, even, odd };

// count_to_endset batched over walk lengths 0..n_max (or the even/odd slice).
IntSeq endset_sequence(Flavor flavor, const EndSet& a, int n_max, Parity parity,
                       int ceiling = kWalkCeiling);

// Canonical named rows used by tables, verification, and the CLI.
//   vac-a1, vac-a2-even, vac-odd, vac-a3, vac-a4, vac-a4-odd,
//   hes-a1, hes-a2-even, hes-odd, hes-a3, hes-a4
// Each row is indexed by n: entry n is the count at walk length 2n
// (vac-odd and vac-a4-odd: length 2n+1; hes-odd: weighted 2*A2-A4 at
// length 2n).
IntSeq named_row(const std::string& name, int n_terms, int ceiling = kWalkCeiling);
std::vector<std::string> table_row_names(const std::string& table);  // "paper2" or "paper3"

}  // namespace crosswalks
