#pragma once

#include "crosswalks/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace crosswalks {

// Exponent window for Laurent polynomials in x. Coefficients are only ever
// stored for exponents in [lo, hi]; lo <= 0 <= hi so x^0 is always visible.
struct Window {
  int lo = 0;
  int hi = 0;
  bool contains(int e) const { return lo <= e && e <= hi; }
  Window widened(int extra) const { return Window{lo - extra, hi + extra}; }
  bool operator==(const Window& o) const { return lo == o.lo && hi == o.hi; }
};

// Laurent polynomial in x with exact rational coefficients, clipped to a
// window. Two modes:
//  - exact (default): the stored coefficients are the whole truth; any
//    operation whose result would fall outside the window throws.
//  - truncated: the object stands for an infinite (or merely wide) series
//    whose coefficients outside the window have been dropped; operations
//    clip silently. Anything derived from a truncated operand is truncated.
class LaurentPoly {
 public:
  LaurentPoly() : win_{0, 0} {}
  explicit LaurentPoly(Window w);

  static LaurentPoly zero(Window w) { return LaurentPoly(w); }
  static LaurentPoly one(Window w) { return monomial(w, 0, 1); }
  static LaurentPoly monomial(Window w, int exponent, Rat coefficient);
  // terms: (exponent, coefficient) pairs; duplicates accumulate.
  static LaurentPoly from_terms(Window w,
                                const std::vector<std::pair<int, Rat>>& terms);

  Window window() const { return win_; }
  bool is_truncated() const { return truncated_; }
  LaurentPoly with_truncated() const;

  bool is_zero() const { return coeffs_.empty(); }
  // Lowest / highest exponent carrying a nonzero coefficient. Undefined
  // (throws) on the zero polynomial.
  int lo() const;
  int hi() const;
  Rat coeff(int exponent) const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly scaled(const Rat& s) const;
  // Multiply by x^d.
  LaurentPoly shifted(int d) const;
  LaurentPoly dx() const;   // d/dx
  LaurentPoly xdx() const;  // x * d/dx  (never changes the support)
  // x -> 1/x. Only meaningful for exact polynomials.
  LaurentPoly subst_xinv() const;
  bool is_palindromic() const;

  // Multiplicative inverse anchored at the lowest term: for p with lowest
  // term c*x^a, returns the expansion of 1/p in the ring of Laurent series
  // bounded below, i.e. x^{-a}/c * (1 + q)^{-1}. Exact when p is a monomial,
  // truncated otherwise.
  LaurentPoly inverse_lowest() const;

  // Value equality of stored coefficients (windows and modes not compared).
  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  Window win_;
  bool truncated_ = false;
  int base_ = 0;            // exponent of coeffs_[0]
  std::vector<Rat> coeffs_; // tight: empty, or first and last nonzero

  void normalize();
  static LaurentPoly build(Window w, bool truncated, int base,
                           std::vector<Rat> raw);
  friend class LaurentAccum;
};

}  // namespace crosswalks
