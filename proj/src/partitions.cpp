#include "crosswalks/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace crosswalks {

bool operator==(const SetPartition& a, const SetPartition& b) {
  return a.n == b.n && a.blocks == b.blocks;
}

PartitionEnumerator::PartitionEnumerator(int n, int guard) : n_(n) {
  if (n < 1) throw std::domain_error("PartitionEnumerator: n must be >= 1");
  if (n > guard) throw std::length_error("PartitionEnumerator: n exceeds guard");
  rgs_.assign(n, 0);
}

namespace {

SetPartition from_rgs(const std::vector<int>& rgs) {
  SetPartition p;
  p.n = static_cast<int>(rgs.size());
  int nblocks = 0;
  for (int b : rgs) nblocks = std::max(nblocks, b + 1);
  p.blocks.resize(nblocks);
  for (int v = 1; v <= p.n; ++v) p.blocks[rgs[v - 1]].push_back(v);
  return p;  // blocks already sorted by minimum: rgs is restricted-growth
}

}  // namespace

bool PartitionEnumerator::next(SetPartition& out) {
  if (done_) return false;
  if (first_) {
    first_ = false;
    out = from_rgs(rgs_);
    return true;
  }
  // Lexicographic successor: rightmost i whose digit may grow, i.e.
  // rgs[i] <= max(rgs[0..i-1]); bump it, zero the tail.
  int n = n_;
  std::vector<int> prefix_max(n, 0);
  for (int i = 1; i < n; ++i) prefix_max[i] = std::max(prefix_max[i - 1], rgs_[i - 1]);
  int i = n - 1;
  while (i > 0 && rgs_[i] > prefix_max[i]) --i;
  if (i == 0) {
    done_ = true;
    return false;
  }
  ++rgs_[i];
  std::fill(rgs_.begin() + i + 1, rgs_.end(), 0);
  out = from_rgs(rgs_);
  return true;
}

ArcDiagram arcs_of(const SetPartition& p, bool enhanced) {
  ArcDiagram d;
  d.n = p.n;
  d.enhanced = enhanced;
  for (const auto& blk : p.blocks) {
    if (blk.size() == 1 && enhanced) d.arcs.push_back({blk[0], blk[0]});
    for (size_t t = 0; t + 1 < blk.size(); ++t) d.arcs.push_back({blk[t], blk[t + 1]});
  }
  std::sort(d.arcs.begin(), d.arcs.end(),
            [](const Arc& a, const Arc& b) { return a.i < b.i; });
  return d;
}

namespace {

// Longest subsequence with strictly increasing .j over arcs already sorted
// by strictly increasing .i.
int lis_over_j(const std::vector<Arc>& arcs) {
  std::vector<int> tails;
  for (const Arc& a : arcs) {
    auto it = std::lower_bound(tails.begin(), tails.end(), a.j);
    if (it == tails.end())
      tails.push_back(a.j);
    else
      *it = a.j;
  }
  return static_cast<int>(tails.size());
}

bool scan_rec(const std::vector<Arc>& arcs, int k, bool enhanced, size_t start,
              std::vector<const Arc*>& chosen) {
  if (static_cast<int>(chosen.size()) == k) {
    // arcs chosen in increasing i order; check j's increase and the middle
    // inequality max i vs min j
    for (size_t t = 0; t + 1 < chosen.size(); ++t)
      if (chosen[t]->j >= chosen[t + 1]->j) return false;
    int max_i = chosen.back()->i;
    int min_j = chosen.front()->j;
    return enhanced ? (max_i <= min_j) : (max_i < min_j);
  }
  for (size_t s = start; s + (k - chosen.size()) <= arcs.size(); ++s) {
    chosen.push_back(&arcs[s]);
    if (scan_rec(arcs, k, enhanced, s + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool has_k_crossing_scan(const ArcDiagram& d, int k) {
  if (k < 2) throw std::domain_error("has_k_crossing: k must be >= 2");
  if (static_cast<int>(d.arcs.size()) < k) return false;
  std::vector<const Arc*> chosen;
  chosen.reserve(k);
  return scan_rec(d.arcs, k, d.enhanced, 0, chosen);
}

bool has_k_crossing(const ArcDiagram& d, int k) {
  if (k < 2) throw std::domain_error("has_k_crossing: k must be >= 2");
  if (static_cast<int>(d.arcs.size()) < k) return false;
  // A k-crossing is a k-chain increasing in both endpoints whose largest
  // left endpoint sits left of (or on, when enhanced) the smallest right
  // endpoint. Fix the first arc a; every other member then has
  // a.i < i <(=) a.j and j > a.j, and the chain condition reduces to a
  // longest increasing subsequence in j.
  for (size_t s = 0; s < d.arcs.size(); ++s) {
    const Arc& a = d.arcs[s];
    std::vector<Arc> cand;
    for (size_t t = s + 1; t < d.arcs.size(); ++t) {
      const Arc& b = d.arcs[t];
      bool mid_ok = d.enhanced ? (b.i <= a.j) : (b.i < a.j);
      if (b.i > a.i && mid_ok && b.j > a.j) cand.push_back(b);
    }
    if (1 + lis_over_j(cand) >= k) return true;
  }
  return false;
}

SetPartition reflect(const SetPartition& p) {
  SetPartition r;
  r.n = p.n;
  for (const auto& blk : p.blocks) {
    std::vector<int> m;
    m.reserve(blk.size());
    for (int v : blk) m.push_back(p.n + 1 - v);
    std::sort(m.begin(), m.end());
    r.blocks.push_back(std::move(m));
  }
  std::sort(r.blocks.begin(), r.blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return r;
}

bool is_bisymmetric(const SetPartition& p) { return reflect(p) == p; }

Int count_partitions(int n, const PartitionFilter& f, int guard) {
  PartitionEnumerator en(n, guard);
  SetPartition p;
  Int count = 0;
  while (en.next(p)) {
    if (f.bisymmetric && !is_bisymmetric(p)) continue;
    if (f.noncross_k) {
      ArcDiagram d = arcs_of(p, f.enhanced);
      if (has_k_crossing(d, *f.noncross_k)) continue;
    }
    ++count;
  }
  return count;
}

}  // namespace crosswalks
