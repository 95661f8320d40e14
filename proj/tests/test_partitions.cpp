#include "crosswalks/partitions.hpp"

#include <set>

#include "crosswalks/oracles.hpp"
#include "doctest.h"

using namespace crosswalks;

namespace {

std::vector<SetPartition> all_partitions(int n) {
  PartitionEnumerator en(n);
  std::vector<SetPartition> out;
  SetPartition p;
  while (en.next(p)) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("enumeration yields each partition exactly once, Bell many") {
  CHECK(all_partitions(1).size() == 1);
  CHECK(all_partitions(3).size() == 5);
  CHECK(all_partitions(5).size() == 52);
  for (int n = 1; n <= 8; ++n) {
    auto ps = all_partitions(n);
    CHECK(Int(ps.size()) == bell(n));
    std::set<std::vector<std::vector<int>>> seen;
    for (const auto& p : ps) {
      CHECK(p.n == n);
      std::set<int> cover;
      for (const auto& blk : p.blocks) {
        CHECK(!blk.empty());
        for (int v : blk) CHECK(cover.insert(v).second);  // disjointness
      }
      CHECK(cover.size() == static_cast<size_t>(n));  // union is [n]
      CHECK(seen.insert(p.blocks).second);            // no duplicates
    }
  }
}

TEST_CASE("enumeration guard") {
  CHECK_THROWS_AS(PartitionEnumerator(15), std::length_error);
  CHECK_NOTHROW(PartitionEnumerator(15, 15));
}

TEST_CASE("arcs join consecutive block elements") {
  SetPartition p{3, {{1, 3}, {2}}};
  auto d = arcs_of(p, false);
  CHECK(d.arcs == std::vector<Arc>{{1, 3}});

  SetPartition q{3, {{1, 2, 3}}};
  auto dq = arcs_of(q, false);
  CHECK(dq.arcs == std::vector<Arc>{{1, 2}, {2, 3}});

  SetPartition r{2, {{1}, {2}}};
  auto dr = arcs_of(r, true);
  CHECK(dr.arcs == std::vector<Arc>{{1, 1}, {2, 2}});
  CHECK(arcs_of(r, false).arcs.empty());
}

TEST_CASE("crossing pattern basics") {
  ArcDiagram d{4, false, {{1, 3}, {2, 4}}};
  CHECK(has_k_crossing(d, 2));
  ArcDiagram e{3, false, {{1, 2}, {2, 3}}};
  CHECK_FALSE(has_k_crossing(e, 2));
  // shared endpoint counts once relaxed to enhanced
  ArcDiagram ee{3, true, {{1, 2}, {2, 3}}};
  CHECK(has_k_crossing(ee, 2));

  SetPartition m{6, {{1, 4}, {2, 5}, {3, 6}}};
  CHECK(has_k_crossing(arcs_of(m, false), 3));
  CHECK_FALSE(has_k_crossing(arcs_of(m, false), 4));
}

TEST_CASE("chain search agrees with combination scan") {
  for (int n = 1; n <= 9; ++n) {
    PartitionEnumerator en(n);
    SetPartition p;
    while (en.next(p)) {
      for (bool enh : {false, true}) {
        ArcDiagram d = arcs_of(p, enh);
        for (int k = 2; k <= 4; ++k)
          CHECK(has_k_crossing(d, k) == has_k_crossing_scan(d, k));
      }
    }
  }
}

TEST_CASE("reflection") {
  SetPartition p{3, {{1, 2}, {3}}};
  SetPartition expect{3, {{1}, {2, 3}}};
  CHECK(reflect(p) == expect);

  SetPartition fixed{3, {{1, 3}, {2}}};
  CHECK(reflect(fixed) == fixed);

  for (const auto& q : all_partitions(6)) {
    CHECK(reflect(reflect(q)) == q);
    // mirror sends k-crossings to k-crossings
    for (bool enh : {false, true})
      for (int k = 2; k <= 3; ++k)
        CHECK(has_k_crossing(arcs_of(q, enh), k) ==
              has_k_crossing(arcs_of(reflect(q), enh), k));
  }
}

TEST_CASE("filtered counts: bisymmetric 3-noncrossing and enhanced variants") {
  PartitionFilter bisym3;
  bisym3.noncross_k = 3;
  bisym3.bisymmetric = true;
  CHECK(count_partitions(3, bisym3) == 3);
  CHECK(count_partitions(4, bisym3) == 7);

  PartitionFilter enh3 = bisym3;
  enh3.enhanced = true;
  CHECK(count_partitions(5, enh3) == 11);

  PartitionFilter plain;
  for (int n = 1; n <= 8; ++n) CHECK(count_partitions(n, plain) == bell(n));
}

TEST_CASE("noncrossing partitions are Catalan-many") {
  PartitionFilter nc;
  nc.noncross_k = 2;
  for (int n = 1; n <= 9; ++n) CHECK(count_partitions(n, nc) == catalan(n));
}

TEST_CASE("enhanced 2-noncrossing counts are Motzkin") {
  // 1, 2, 4, 9, 21, 51, 127 for n = 1..7
  IntSeq motzkin{1, 2, 4, 9, 21, 51, 127};
  PartitionFilter f;
  f.noncross_k = 2;
  f.enhanced = true;
  for (int n = 1; n <= 7; ++n) CHECK(count_partitions(n, f) == motzkin[n - 1]);
}

TEST_CASE("bisymmetric 2-noncrossing counts are central binomials") {
  PartitionFilter f;
  f.noncross_k = 2;
  f.bisymmetric = true;
  for (int n = 1; n <= 10; ++n) CHECK(count_partitions(n, f) == central_binomial(n));
}
