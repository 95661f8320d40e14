#include "crosswalks/walks.hpp"

#include "crosswalks/oracles.hpp"
#include "crosswalks/partitions.hpp"
#include "doctest.h"

using namespace crosswalks;

namespace {

Int table_count(const WalkTable& t, const Point& p) {
  auto it = t.counts.find(p);
  return it == t.counts.end() ? Int(0) : it->second;
}

}  // namespace

TEST_CASE("lattice membership") {
  CHECK(in_lattice({1, 0}, Lattice::W));
  CHECK_FALSE(in_lattice({1, 1}, Lattice::W));
  CHECK_FALSE(in_lattice({0, 0}, Lattice::W));
  CHECK(in_lattice({0, 0}, Lattice::Q));
  CHECK(in_lattice({3, 1, 0}, Lattice::W));
  CHECK_FALSE(in_lattice({3, 1, 1}, Lattice::W));
  CHECK_FALSE(in_lattice({1, -1}, Lattice::Q));
}

TEST_CASE("vacillating step targets on W_2") {
  WalkSpec spec{Flavor::vacillating, Lattice::W, 2, {1, 0}, 2};
  auto odd = step_targets({1, 0}, spec, 1);
  CHECK(odd == std::vector<Point>{{1, 0}});  // both removals leave W_2
  auto even = step_targets({1, 0}, spec, 2);
  CHECK(even == std::vector<Point>{{1, 0}, {2, 0}});  // (1,1) violates strictness
}

TEST_CASE("hesitating pair targets on W_2") {
  WalkSpec spec{Flavor::hesitating, Lattice::W, 2, {1, 0}, 2};
  auto ends = step_targets({1, 0}, spec, 1);
  // (stay,+e1)->(2,0); (+e1,-e1)->(1,0); everything else leaves W_2 or
  // passes through an invalid intermediate
  CHECK(ends == std::vector<Point>{{1, 0}, {2, 0}});
}

TEST_CASE("tiny vacillating counts") {
  WalkSpec w2{Flavor::vacillating, Lattice::W, 2, {1, 0}, 2};
  auto t = count_walks(w2);
  CHECK(table_count(t, {1, 0}) == 1);  // only stay-stay returns

  WalkSpec q2{Flavor::vacillating, Lattice::Q, 2, {1, 0}, 2};
  auto tq = count_walks(q2);
  CHECK(table_count(tq, {1, 0}) == 2);  // stay-stay and down-up through (0,0)
  CHECK(table_count(tq, {0, 1}) == 1);

  WalkSpec w12 = w2;
  w12.length = 12;
  CHECK(table_count(count_walks(w12), {1, 0}) == 202);
}

TEST_CASE("guard errors") {
  WalkSpec spec{Flavor::vacillating, Lattice::W, 2, {1, 0}, 500};
  CHECK_THROWS_AS(count_walks(spec), std::length_error);
  WalkSpec hes{Flavor::hesitating, Lattice::W, 2, {1, 0}, 3};
  CHECK_THROWS_AS(count_walks(hes), std::invalid_argument);
  WalkSpec bad{Flavor::vacillating, Lattice::W, 2, {1, 1}, 2};
  CHECK_THROWS_AS(count_walks(bad), std::invalid_argument);
}

TEST_CASE("endpoint set membership and the A2 partition") {
  CHECK(endset_contains(EndSetKind::A1, {1, 0}));
  CHECK(endset_contains(EndSetKind::A4, {1, 0}));
  CHECK(endset_contains(EndSetKind::A3, {5, 0}));
  CHECK(endset_contains(EndSetKind::A2p, {2, 0}));
  CHECK(endset_contains(EndSetKind::A2p, {3, 2}));
  CHECK(endset_contains(EndSetKind::A2pp, {3, 1}));
  // A2 = A1 + A2' + A2'' on every chamber point with coordinates <= 50
  for (int i = 1; i <= 50; ++i)
    for (int j = 0; j < i; ++j) {
      Point p{i, j};
      int pieces = (endset_contains(EndSetKind::A1, p) ? 1 : 0) +
                   (endset_contains(EndSetKind::A2p, p) ? 1 : 0) +
                   (endset_contains(EndSetKind::A2pp, p) ? 1 : 0);
      CHECK(pieces == 1);
      CHECK(endset_contains(EndSetKind::A2, p));
    }
}

TEST_CASE("reference tables, vacillating") {
  CHECK(named_row("vac-a1", 7) == IntSeq{1, 1, 2, 5, 15, 52, 202});
  CHECK(named_row("vac-a2-even", 7) == IntSeq{1, 2, 7, 30, 148, 806, 4716});
  CHECK(named_row("vac-odd", 7) == IntSeq{1, 3, 12, 57, 303, 1743, 10629});
  CHECK(named_row("vac-a3", 7) == IntSeq{1, 2, 6, 22, 94, 450, 2346});
  CHECK(named_row("vac-a4", 7) == IntSeq{1, 1, 3, 11, 47, 225, 1173});
}

TEST_CASE("reference tables, hesitating") {
  CHECK(named_row("hes-a1", 7) == IntSeq{1, 1, 2, 5, 15, 51, 191});
  CHECK(named_row("hes-a2-even", 7) == IntSeq{1, 2, 7, 29, 136, 692, 3739});
  CHECK(named_row("hes-odd", 7) == IntSeq{1, 3, 11, 48, 232, 1207, 6631});
  CHECK(named_row("hes-a3", 7) == IntSeq{1, 2, 6, 22, 92, 422, 2074});
}

TEST_CASE("single endset counts quoted from the tables") {
  EndSet a2 = EndSet::single(EndSetKind::A2);
  WalkSpec s8{Flavor::vacillating, Lattice::W, 2, {1, 0}, 8};
  CHECK(count_to_endset(s8, a2) == 148);
  WalkSpec s7 = s8;
  s7.length = 7;
  CHECK(count_to_endset(s7, a2) == 57);
  EndSet hodd{{{EndSetKind::A2, 2}, {EndSetKind::A4, -1}}};
  WalkSpec h6{Flavor::hesitating, Lattice::W, 2, {1, 0}, 6};
  CHECK(count_to_endset(h6, hodd) == 48);
}

TEST_CASE("reflection principle equals direct chamber counts") {
  // k = 2: start (1,0), quadrant difference by hand
  CHECK(reflection_count({1, 0}, {1, 0}, 2) == 1);
  CHECK(reflection_count({1, 0}, {1, 0}, 0) == 1);

  for (int n = 0; n <= 20; ++n) {
    WalkSpec ws{Flavor::vacillating, Lattice::W, 2, {1, 0}, n};
    auto direct = count_walks(ws);
    for (const auto& [b, c] : direct.counts) CHECK(reflection_count({1, 0}, b, n) == c);
  }

  // k = 3 from the chamber origin delta = (2,1,0)
  for (int n = 0; n <= 8; ++n) {
    WalkSpec ws{Flavor::vacillating, Lattice::W, 3, {2, 1, 0}, n};
    auto direct = count_walks(ws);
    for (const auto& [b, c] : direct.counts)
      CHECK(reflection_count({2, 1, 0}, b, n) == c);
    CHECK(reflection_count({2, 1, 0}, {2, 1, 0}, n) == table_count(direct, {2, 1, 0}));
  }
}

TEST_CASE("walk reversal symmetry at even lengths") {
  for (int n = 1; n <= 8; ++n) {
    std::vector<Point> pts;
    for (int i = 1; i <= 5; ++i)
      for (int j = 0; j < i; ++j) pts.push_back({i, j});
    for (const auto& a : pts) {
      WalkSpec ws{Flavor::vacillating, Lattice::W, 2, a, 2 * n};
      auto t = count_walks(ws);
      for (const auto& b : pts) {
        WalkSpec back{Flavor::vacillating, Lattice::W, 2, b, 2 * n};
        CHECK(table_count(t, b) == table_count(count_walks(back), a));
      }
    }
  }
}

TEST_CASE("odd length reduction to even tables") {
  CHECK(odd_reduction_check({1, 0}, 3));
  CHECK(odd_reduction_check({1, 0}, 0));
  CHECK(odd_reduction_check({2, 0}, 2));
  for (int n = 0; n <= 10; ++n) {
    CHECK(odd_reduction_check({1, 0}, n));
    CHECK(odd_reduction_check({3, 1}, n));
    CHECK(odd_reduction_check({4, 2}, n));
  }
}

TEST_CASE("walk counts match the partition oracle") {
  // chamber round trips count 3-noncrossing partitions
  for (int n = 1; n <= 9; ++n) {
    PartitionFilter f;
    f.noncross_k = 3;
    WalkSpec ws{Flavor::vacillating, Lattice::W, 2, {1, 0}, 2 * n};
    CHECK(table_count(count_walks(ws), {1, 0}) == count_partitions(n, f));
  }
  // full-chamber sums count the bisymmetric ones
  for (int n = 1; n <= 9; ++n) {
    PartitionFilter f;
    f.noncross_k = 3;
    f.bisymmetric = true;
    WalkSpec ws{Flavor::vacillating, Lattice::W, 2, {1, 0}, n};
    CHECK(count_to_endset(ws, EndSet::single(EndSetKind::A2)) == count_partitions(n, f));
  }
  // hesitating: enhanced bisymmetric counts, even lengths directly, odd via
  // the 2 A2 - A4 weighting
  for (int n = 1; n <= 9; ++n) {
    PartitionFilter f;
    f.noncross_k = 3;
    f.enhanced = true;
    f.bisymmetric = true;
    Int oracle = count_partitions(n, f);
    if (n % 2 == 0) {
      WalkSpec hs{Flavor::hesitating, Lattice::W, 2, {1, 0}, n};
      CHECK(count_to_endset(hs, EndSet::single(EndSetKind::A2)) == oracle);
    } else {
      WalkSpec hs{Flavor::hesitating, Lattice::W, 2, {1, 0}, n - 1};
      EndSet w{{{EndSetKind::A2, 2}, {EndSetKind::A4, -1}}};
      CHECK(count_to_endset(hs, w) == oracle);
    }
  }
}

TEST_CASE("hesitating x-axis row meets Baxter numbers") {
  IntSeq row = named_row("hes-a3", 13);
  for (int n = 0; n <= 12; ++n) CHECK(row[n] == baxter(n + 1));
}

TEST_CASE("vacillating diagonal odd row meets 1234-avoider counts") {
  EndSet a4 = EndSet::single(EndSetKind::A4);
  IntSeq odd = endset_sequence(Flavor::vacillating, a4, 17, Parity::odd);
  for (int n = 0; n <= 8; ++n) CHECK(odd[n] == count_1234_avoiders(n + 1));
}

TEST_CASE("even cross-identities between the two axis rows") {
  IntSeq e = named_row("vac-a3", 40);
  IntSeq h = named_row("vac-a4", 40);
  for (int n = 1; n < 40; ++n) CHECK(e[n] == 2 * h[n]);
  IntSeq eodd = endset_sequence(Flavor::vacillating, EndSet::single(EndSetKind::A3), 2 * 40 + 1, Parity::odd);
  for (int n = 0; n + 1 < 40; ++n) CHECK(2 * eodd[n] == e[n + 1]);
}
