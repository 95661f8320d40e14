#include "crosswalks/bijections.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace crosswalks {

bool in_word_set(const Word& w) {
  int balance = 0;
  for (int letter : w) {
    balance += letter == 1 ? 1 : -1;
    if (balance < 0) return false;
  }
  return true;
}

int odd_count(const Word& w, int s) {
  int c = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i % 2 == 0 && w[i] == s) ++c;  // position i+1 is odd
  }
  return c;
}

int even_count(const Word& w, int s) {
  int c = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i % 2 == 1 && w[i] == s) ++c;
  }
  return c;
}

bool parity_prefix_condition(const Word& w) {
  int even1 = 0, odd0 = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i % 2 == 1 && w[i] == 1) ++even1;
    if (i % 2 == 0 && w[i] == 0) ++odd0;
    if (even1 < odd0) return false;
  }
  return true;
}

std::vector<Word> all_words(int n) {
  std::vector<Word> out;
  out.reserve(static_cast<size_t>(1) << n);
  for (long mask = 0; mask < (1L << n); ++mask) {
    Word w(n);
    for (int i = 0; i < n; ++i) w[i] = (mask >> (n - 1 - i)) & 1;
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<Word> word_set(int n) {
  std::vector<Word> out;
  for (Word& w : all_words(n)) {
    if (in_word_set(w)) out.push_back(std::move(w));
  }
  return out;
}

bool is_oscillating(const Tableau& t) {
  if (t.empty() || t.front() != 0) return false;
  for (size_t i = 1; i < t.size(); ++i) {
    if (t[i] < 0 || std::abs(t[i] - t[i - 1]) != 1) return false;
  }
  return true;
}

bool is_vacillating(const Tableau& t) {
  if (t.empty() || t.front() != 0 || t.size() % 2 == 0) return false;
  for (size_t i = 1; i < t.size(); ++i) {
    const int d = t[i] - t[i - 1];
    if (t[i] < 0) return false;
    if (i % 2 == 1) {  // odd step: stay or delete
      if (d != 0 && d != -1) return false;
    } else {  // even step: stay or add
      if (d != 0 && d != 1) return false;
    }
  }
  return true;
}

bool is_palindromic(const Tableau& t) {
  for (size_t i = 0, j = t.size(); i < j--; ++i) {
    if (t[i] != t[j]) return false;
  }
  return true;
}

namespace {

int half_length(const Tableau& t, const char* what) {
  if (t.empty() || t.size() % 2 == 0) {
    throw std::invalid_argument(std::string(what) +
                                ": length must be even (2n+1 entries)");
  }
  return static_cast<int>(t.size() / 2);
}

Tableau mirrored(Tableau half_and_center) {
  // half_and_center holds entries 0..n; reflect to entries 0..2n.
  const int n = static_cast<int>(half_and_center.size()) - 1;
  Tableau full = std::move(half_and_center);
  full.resize(2 * n + 1);
  for (int i = n + 1; i <= 2 * n; ++i) full[i] = full[2 * n - i];
  return full;
}

}  // namespace

Word theta(const Tableau& o) {
  const int n = half_length(o, "theta");
  if (!is_oscillating(o) || !is_palindromic(o)) {
    throw std::invalid_argument("theta: not a palindromic oscillating tableau");
  }
  Word w(n);
  for (int i = 1; i <= n; ++i) w[i - 1] = o[i] > o[i - 1] ? 1 : 0;
  return w;
}

Tableau theta_inv(const Word& w) {
  if (!in_word_set(w)) {
    throw std::invalid_argument("theta_inv: word fails the prefix condition");
  }
  const int n = static_cast<int>(w.size());
  Tableau half(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    half[i] = half[i - 1] + (w[i - 1] == 1 ? 1 : -1);
  }
  return mirrored(std::move(half));
}

Word eta(const Tableau& v) {
  const int n = half_length(v, "eta");
  if (!is_vacillating(v) || !is_palindromic(v)) {
    throw std::invalid_argument("eta: not a palindromic vacillating tableau");
  }
  Word w(n);
  for (int i = 1; i <= n; ++i) {
    const bool stay = v[i] == v[i - 1];
    if (i % 2 == 1) {
      w[i - 1] = stay ? 1 : 0;  // odd: stay -> 1, delete -> 0
    } else {
      w[i - 1] = stay ? 0 : 1;  // even: add -> 1, stay -> 0
    }
  }
  return w;
}

Tableau eta_inv(const Word& w) {
  if (!in_word_set(w)) {
    throw std::invalid_argument("eta_inv: word fails the prefix condition");
  }
  const int n = static_cast<int>(w.size());
  Tableau half(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    int d = 0;
    if (i % 2 == 1) {
      d = w[i - 1] == 1 ? 0 : -1;
    } else {
      d = w[i - 1] == 1 ? 1 : 0;
    }
    half[i] = half[i - 1] + d;
    if (half[i] < 0) {
      throw std::invalid_argument("eta_inv: word leaves the lattice");
    }
  }
  return mirrored(std::move(half));
}

namespace {

template <typename StepFn>
void grow_halves(Tableau& half, int n, const StepFn& steps,
                 std::vector<Tableau>& out) {
  const int i = static_cast<int>(half.size());
  if (i == n + 1) {
    out.push_back(mirrored(half));
    return;
  }
  for (int d : steps(i)) {
    const int v = half.back() + d;
    if (v < 0) continue;
    half.push_back(v);
    grow_halves(half, n, steps, out);
    half.pop_back();
  }
}

}  // namespace

std::vector<Tableau> palindromic_oscillating(int n) {
  std::vector<Tableau> out;
  Tableau half{0};
  grow_halves(half, n,
              [](int) { return std::vector<int>{1, -1}; }, out);
  return out;
}

std::vector<Tableau> palindromic_vacillating(int n) {
  std::vector<Tableau> out;
  Tableau half{0};
  grow_halves(half, n,
              [](int i) {
                return i % 2 == 1 ? std::vector<int>{0, -1}
                                  : std::vector<int>{0, 1};
              },
              out);
  return out;
}

bool is_dyck(const Word& w) {
  if (w.size() % 2 != 0 || !in_word_set(w)) return false;
  const long ones = std::count(w.begin(), w.end(), 1);
  return 2 * ones == static_cast<long>(w.size());
}

namespace {

// Pair the smallest free point with every larger free point; arcs (a<b),
// (c<d) cross when a < c < b < d.
void match_rec(std::vector<int>& free_pts, std::vector<std::pair<int, int>>& arcs,
               Int& count) {
  if (free_pts.empty()) {
    count += 1;
    return;
  }
  const int a = free_pts.front();
  for (size_t j = 1; j < free_pts.size(); ++j) {
    const int b = free_pts[j];
    bool crossed = false;
    for (const auto& [c, d] : arcs) {
      if ((c < a && a < d && d < b) || (a < c && c < b && b < d)) {
        crossed = true;
        break;
      }
    }
    if (crossed) continue;
    std::vector<int> rest;
    rest.reserve(free_pts.size() - 2);
    for (size_t t = 1; t < free_pts.size(); ++t) {
      if (t != j) rest.push_back(free_pts[t]);
    }
    arcs.emplace_back(a, b);
    match_rec(rest, arcs, count);
    arcs.pop_back();
  }
}

}  // namespace

Int count_noncrossing_matchings(int n) {
  std::vector<int> pts(2 * n);
  for (int i = 0; i < 2 * n; ++i) pts[i] = i + 1;
  std::vector<std::pair<int, int>> arcs;
  Int count = 0;
  match_rec(pts, arcs, count);
  return count;
}

std::string bijection_demo() {
  const Tableau osc = {0, 1, 2, 1, 2, 1, 0, 1, 0, 1, 2, 1, 2, 1, 0};
  const Word w = theta(osc);
  const Tableau vac = eta_inv(w);
  const auto join = [](const Tableau& t) {
    std::ostringstream s;
    for (size_t i = 0; i < t.size(); ++i) s << (i ? " " : "") << t[i];
    return s.str();
  };
  std::ostringstream out;
  out << "oscillating palindrome:  " << join(osc) << "\n";
  out << "step word:               ";
  for (int letter : w) out << letter;
  out << "\n";
  out << "vacillating palindrome:  " << join(vac) << "\n";
  out << "round trip:              "
      << (theta_inv(w) == osc && eta(vac) == w ? "consistent" : "BROKEN")
      << "\n";
  return out.str();
}

}  // namespace crosswalks
