// Ground-truth oracle over set partitions: exhaustive generation via
// restricted growth strings, arc diagrams, (enhanced) k-crossing detection,
// bilateral symmetry, exact filtered counts.
#pragma once

#include <optional>
#include <vector>

#include "crosswalks/rational.hpp"

namespace crosswalks {

struct SetPartition {
  int n = 0;
  std::vector<std::vector<int>> blocks;  // each sorted ascending, blocks sorted by minimum
};

struct Arc {
  int i = 0, j = 0;  // i <= j; i == j is a loop
  friend bool operator==(const Arc&, const Arc&) = default;
};

struct ArcDiagram {
  int n = 0;
  bool enhanced = false;
  std::vector<Arc> arcs;  // sorted by left endpoint; left endpoints distinct, right endpoints distinct
};

bool operator==(const SetPartition& a, const SetPartition& b);

inline constexpr int kPartitionGuard = 14;

// Streams every set partition of [n] exactly once, in lexicographic
// restricted-growth-string order.
class PartitionEnumerator {
 public:
  explicit PartitionEnumerator(int n, int guard = kPartitionGuard);
  bool next(SetPartition& out);  // false once exhausted

 private:
  int n_;
  bool done_ = false;
  bool first_ = true;
  std::vector<int> rgs_;  // rgs_[v-1] = block index of v
};

// Arcs join numerically consecutive elements within each block; enhanced
// mode adds a loop on every singleton.
ArcDiagram arcs_of(const SetPartition& p, bool enhanced);

// True iff some k arcs (i1,j1)..(ik,jk) satisfy i1<...<ik<j1<...<jk, the
// middle < relaxed to <= when the diagram is enhanced. Default detector is
// the chain search; the combination scan is its independent oracle.
bool has_k_crossing(const ArcDiagram& d, int k);
bool has_k_crossing_scan(const ArcDiagram& d, int k);

// Mirror i -> n+1-i.
SetPartition reflect(const SetPartition& p);
bool is_bisymmetric(const SetPartition& p);

struct PartitionFilter {
  std::optional<int> noncross_k;  // keep partitions with NO k-crossing
  bool enhanced = false;
  bool bisymmetric = false;
};

Int count_partitions(int n, const PartitionFilter& f, int guard = kPartitionGuard);

}  // namespace crosswalks
