#include "crosswalks/walks.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace crosswalks {

bool in_lattice(const Point& p, Lattice lat) {
  if (lat == Lattice::Q) {
    for (int c : p)
      if (c < 0) return false;
    return true;
  }
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] <= p[i + 1]) return false;
  return p.back() >= 0;
}

namespace {

void check_spec(const WalkSpec& spec, int ceiling) {
  if (spec.k < 1 || static_cast<int>(spec.start.size()) != spec.k)
    throw std::invalid_argument("walk spec: start point does not match dimension");
  if (!in_lattice(spec.start, spec.lattice))
    throw std::invalid_argument("walk spec: start point not on the lattice");
  if (spec.length < 0) throw std::invalid_argument("walk spec: negative length");
  if (spec.length > ceiling) throw std::length_error("walk spec: length exceeds ceiling");
  if (spec.flavor == Flavor::hesitating && spec.length % 2 != 0)
    throw std::invalid_argument("hesitating walks advance in step pairs; length must be even");
}

// Single vacillating step: odd steps stay or subtract a unit vector, even
// steps stay or add one. Emits each legal move once.
template <typename F>
void vacillating_moves(const Point& p, Lattice lat, int step_index, F&& emit) {
  emit(p);
  Point q = p;
  for (int d = 0; d < static_cast<int>(p.size()); ++d) {
    q[d] += (step_index % 2 == 1) ? -1 : 1;
    if (in_lattice(q, lat)) emit(q);
    q[d] = p[d];
  }
}

// Hesitating pair from p: (stay, +e_i), (-e_i, stay), (+e_i, -e_j); the
// intermediate point must also lie on the lattice. Emits one call per move,
// so coinciding endpoints accumulate multiplicity.
template <typename F>
void hesitating_pair_moves(const Point& p, Lattice lat, F&& emit) {
  int k = static_cast<int>(p.size());
  Point q = p;
  for (int i = 0; i < k; ++i) {  // stay then add
    q[i] += 1;
    if (in_lattice(q, lat)) emit(q);
    q[i] = p[i];
  }
  for (int i = 0; i < k; ++i) {  // remove then stay
    q[i] -= 1;
    if (in_lattice(q, lat)) emit(q);
    q[i] = p[i];
  }
  for (int i = 0; i < k; ++i) {  // add then remove, through a valid intermediate
    q[i] += 1;
    if (in_lattice(q, lat)) {
      for (int j = 0; j < k; ++j) {
        q[j] -= 1;
        if (in_lattice(q, lat)) emit(q);
        q[j] += 1;
      }
    }
    q[i] = p[i];
  }
}

using Layer = std::map<Point, Int>;

// Runs the DP and hands every layer (walk length, endpoint table) to the
// sink, layer 0 included. Hesitating layers advance by two.
void run_dp(const WalkSpec& spec, int ceiling,
            const std::function<void(int, const Layer&)>& sink) {
  check_spec(spec, ceiling);
  Layer cur;
  cur[spec.start] = 1;
  sink(0, cur);
  if (spec.flavor == Flavor::vacillating) {
    for (int s = 1; s <= spec.length; ++s) {
      Layer next;
      for (const auto& [p, c] : cur)
        vacillating_moves(p, spec.lattice, s, [&](const Point& q) { next[q] += c; });
      cur = std::move(next);
      sink(s, cur);
    }
  } else {
    for (int s = 2; s <= spec.length; s += 2) {
      Layer next;
      for (const auto& [p, c] : cur)
        hesitating_pair_moves(p, spec.lattice, [&](const Point& q) { next[q] += c; });
      cur = std::move(next);
      sink(s, cur);
    }
  }
}

}  // namespace

std::vector<Point> step_targets(const Point& p, const WalkSpec& spec, int step_index) {
  if (!in_lattice(p, spec.lattice)) throw std::invalid_argument("step_targets: point off lattice");
  std::vector<Point> out;
  auto emit = [&](const Point& q) {
    if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
  };
  if (spec.flavor == Flavor::vacillating)
    vacillating_moves(p, spec.lattice, step_index, emit);
  else
    hesitating_pair_moves(p, spec.lattice, emit);
  std::sort(out.begin(), out.end());
  return out;
}

WalkTable count_walks(const WalkSpec& spec, int ceiling) {
  WalkTable table;
  table.spec = spec;
  run_dp(spec, ceiling, [&](int len, const Layer& layer) {
    if (len == spec.length) table.counts = layer;
  });
  return table;
}

Int reflection_count(const Point& a, const Point& b, int n, Flavor flavor, int ceiling) {
  if (!in_lattice(a, Lattice::W) || !in_lattice(b, Lattice::W))
    throw std::invalid_argument("reflection_count: endpoints must lie in the chamber");
  int k = static_cast<int>(a.size());
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  Int total = 0;
  // enumerate permutations with their sign via inversion count
  std::sort(idx.begin(), idx.end());
  do {
    int inv = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (idx[i] > idx[j]) ++inv;
    Point pa(k);
    for (int i = 0; i < k; ++i) pa[i] = a[idx[i]];
    WalkSpec qs{flavor, Lattice::Q, k, pa, n};
    WalkTable t = count_walks(qs, ceiling);
    auto it = t.counts.find(b);
    Int c = (it == t.counts.end()) ? Int(0) : it->second;
    total += (inv % 2 == 0) ? c : -c;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return total;
}

bool endset_contains(EndSetKind kind, const Point& p) {
  if (p.size() != 2 || !in_lattice(p, Lattice::W))
    throw std::invalid_argument("endset membership is defined on W_2 points");
  int i = p[0], j = p[1];
  switch (kind) {
    case EndSetKind::A1: return i == 1 && j == 0;
    case EndSetKind::A2: return true;
    case EndSetKind::A2p: return (j == 0 && i >= 2) || (j >= 1 && i == j + 1);
    case EndSetKind::A2pp: return j >= 1 && i - j >= 2;
    case EndSetKind::A3: return j == 0;
    case EndSetKind::A4: return i == j + 1;
  }
  return false;
}

long EndSet::weight(const Point& p) const {
  long w = 0;
  for (const auto& [kind, wt] : terms)
    if (endset_contains(kind, p)) w += wt;
  return w;
}

namespace {

Int weigh_layer(const Layer& layer, const EndSet& a) {
  Int sum = 0;
  for (const auto& [p, c] : layer) {
    long w = a.weight(p);
    if (w != 0) sum += Int(w) * c;
  }
  return sum;
}

}  // namespace

Int count_to_endset(const WalkSpec& spec, const EndSet& a, int ceiling) {
  if (spec.lattice != Lattice::W || spec.k != 2)
    throw std::invalid_argument("endpoint sets live on W_2");
  return weigh_layer(count_walks(spec, ceiling).counts, a);
}

bool odd_reduction_check(const Point& a, int n, int ceiling) {
  WalkSpec odd{Flavor::vacillating, Lattice::W, 2, a, 2 * n + 1};
  WalkSpec even = odd;
  even.length = 2 * n;
  Layer lo = count_walks(odd, ceiling).counts;
  Layer le = count_walks(even, ceiling).counts;
  auto sum_if = [](const Layer& l, auto&& pred) {
    Int s = 0;
    for (const auto& [p, c] : l)
      if (pred(p[0], p[1])) s += c;
    return s;
  };
  auto all = [](int, int) { return true; };

  // whole chamber: 1 on the start cell of A1, 2 on A2', 3 on the interior
  Int lhs_a2 = sum_if(lo, all);
  Int rhs_a2 = sum_if(le, [](int i, int j) { return i == 1 && j == 0; }) +
               2 * sum_if(le, [](int i, int j) { return (j == 0 && i >= 2) || (j >= 1 && i == j + 1); }) +
               3 * sum_if(le, [](int i, int j) { return j >= 1 && i - j >= 2; });

  // x-axis row: A3 at odd length reduces to A3 + {(k,0): k>=2} + {(k+1,1): k>=1}
  Int lhs_a3 = sum_if(lo, [](int, int j) { return j == 0; });
  Int rhs_a3 = sum_if(le, [](int, int j) { return j == 0; }) +
               sum_if(le, [](int i, int j) { return j == 0 && i >= 2; }) +
               sum_if(le, [](int i, int j) { return j == 1 && i >= 2; });

  // diagonal row: A4 at odd length reduces to A4 + {(k+2,k): k>=0}
  Int lhs_a4 = sum_if(lo, [](int i, int j) { return i == j + 1; });
  Int rhs_a4 = sum_if(le, [](int i, int j) { return i == j + 1; }) +
               sum_if(le, [](int i, int j) { return i == j + 2; });

  return lhs_a2 == rhs_a2 && lhs_a3 == rhs_a3 && lhs_a4 == rhs_a4;
}

IntSeq endset_sequence(Flavor flavor, const EndSet& a, int n_max, Parity parity, int ceiling) {
  if (flavor == Flavor::hesitating && parity != Parity::even)
    throw std::invalid_argument("hesitating sequences exist at even lengths only");
  WalkSpec spec{flavor, Lattice::W, 2, {1, 0}, n_max};
  if (flavor == Flavor::hesitating && spec.length % 2 != 0) spec.length -= 1;
  IntSeq out;
  run_dp(spec, ceiling, [&](int len, const Layer& layer) {
    bool want = parity == Parity::all || (parity == Parity::even && len % 2 == 0) ||
                (parity == Parity::odd && len % 2 == 1);
    if (want) out.push_back(weigh_layer(layer, a));
  });
  return out;
}

IntSeq named_row(const std::string& name, int n_terms, int ceiling) {
  if (n_terms < 1) throw std::invalid_argument("named_row: need at least one term");
  auto single = [&](Flavor fl, EndSetKind kind, Parity par) {
    int len = (par == Parity::odd) ? 2 * (n_terms - 1) + 1 : 2 * (n_terms - 1);
    return endset_sequence(fl, EndSet::single(kind), len, par, ceiling);
  };
  if (name == "vac-a1") return single(Flavor::vacillating, EndSetKind::A1, Parity::even);
  if (name == "vac-a2-even") return single(Flavor::vacillating, EndSetKind::A2, Parity::even);
  if (name == "vac-odd") return single(Flavor::vacillating, EndSetKind::A2, Parity::odd);
  if (name == "vac-a3") return single(Flavor::vacillating, EndSetKind::A3, Parity::even);
  if (name == "vac-a4") return single(Flavor::vacillating, EndSetKind::A4, Parity::even);
  if (name == "vac-a4-odd") return single(Flavor::vacillating, EndSetKind::A4, Parity::odd);
  if (name == "hes-a1") return single(Flavor::hesitating, EndSetKind::A1, Parity::even);
  if (name == "hes-a2-even") return single(Flavor::hesitating, EndSetKind::A2, Parity::even);
  if (name == "hes-a3") return single(Flavor::hesitating, EndSetKind::A3, Parity::even);
  if (name == "hes-a4") return single(Flavor::hesitating, EndSetKind::A4, Parity::even);
  if (name == "hes-odd") {
    EndSet w{{{EndSetKind::A2, 2}, {EndSetKind::A4, -1}}};
    return endset_sequence(Flavor::hesitating, w, 2 * (n_terms - 1), Parity::even, ceiling);
  }
  throw std::invalid_argument("unknown sequence row: " + name);
}

std::vector<std::string> table_row_names(const std::string& table) {
  if (table == "paper2") return {"vac-a1", "vac-a2-even", "vac-odd", "vac-a3", "vac-a4"};
  if (table == "paper3") return {"hes-a1", "hes-a2-even", "hes-odd", "hes-a3"};
  throw std::invalid_argument("unknown table: " + table);
}

}  // namespace crosswalks
