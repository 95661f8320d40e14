#pragma once

#include "crosswalks/laurent.hpp"
#include "crosswalks/rational.hpp"

#include <string>
#include <vector>

namespace crosswalks {

// Power series in t with exact rational coefficients and a tracked
// valuation offset: value = sum_i c[i] * t^{val + i}, known modulo
// t^{val + c.size()}.
struct RatSeries {
  int val = 0;
  std::vector<Rat> c;

  static RatSeries of(std::vector<Rat> coeffs, int val = 0);

  int known() const { return val + static_cast<int>(c.size()); }
  // Coefficient of t^m; zero below the valuation, error at/above known().
  Rat at(int m) const;

  RatSeries operator+(const RatSeries& o) const;
  RatSeries operator-(const RatSeries& o) const;
  RatSeries scaled(const Rat& s) const;

  bool is_zero_through(int bound) const;  // all of t^val .. t^{bound-1}
  bool equals_through(const RatSeries& o, int bound) const;

  // Leading coefficients as exact integers: t^0 .. t^{count-1}. Throws if a
  // coefficient is not an integer or not known.
  IntSeq to_ints(int count) const;

  // One line per known coefficient: "<exponent>\t<numerator>\t<denominator>".
  std::string to_triples_text() const;
};

// Truncated power series in t whose coefficients are Laurent polynomials in
// x over the rationals, all sharing one window. Tracks a t-adic valuation
// offset: value = sum_i coeffs[i] * t^{val + i}, known modulo t^{known()}.
class TruncSeries {
 public:
  TruncSeries() = default;

  // Known through t^{val+len-1}, all coefficients zero.
  static TruncSeries zero(Window w, int len, int val = 0);
  // p * t^0, with t^1 .. t^{len-1} known to vanish.
  static TruncSeries from_poly(Window w, const LaurentPoly& p, int len);
  static TruncSeries from_rat(Window w, const Rat& r, int len);
  static TruncSeries one(Window w, int len) { return from_rat(w, 1, len); }
  // terms: (t-exponent, x-exponent, coefficient) triples, t-exponents >= 0.
  static TruncSeries from_txc(
      Window w, int len,
      const std::vector<std::tuple<int, int, Rat>>& terms);
  // coeffs[i] becomes the coefficient of t^{val+i}; all coefficient windows
  // must equal w.
  static TruncSeries from_coeffs(Window w, std::vector<LaurentPoly> coeffs,
                                 int val = 0);

  Window window() const { return win_; }
  int val() const { return val_; }
  int len() const { return static_cast<int>(coeffs_.size()); }
  int known() const { return val_ + len(); }  // exclusive bound
  // Coefficient of t^m; zero below the valuation, error at/above known().
  LaurentPoly coeff_t(int m) const;

  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator-() const;
  TruncSeries operator*(const TruncSeries& o) const;
  TruncSeries scaled(const Rat& s) const;
  TruncSeries mul_poly(const LaurentPoly& p) const;
  TruncSeries mul_tpow(int j) const;  // * t^j
  TruncSeries truncated_to_known(int bound) const;
  // Power by repeated multiplication; e >= 0.
  TruncSeries pow(int e) const;

  TruncSeries dt() const;
  TruncSeries dx() const;
  TruncSeries xdx() const;
  TruncSeries mapped_xinv() const;

  // True t-adic valuation of the stored data (index of first nonzero
  // coefficient); known() if identically zero as stored.
  int effective_val() const;

  // Multiplicative inverse. The leading coefficient is inverted with
  // inverse_lowest(); higher orders by Newton iteration with precision
  // doubling. Result knows as many t-orders as *this.
  TruncSeries inverse() const;

  // Square root of a series with constant coefficient exactly 1 (val 0),
  // via the inverse-square-root Newton iteration; verifies the square.
  TruncSeries sqrt_lead_one() const;

  RatSeries ct() const;  // x^0 coefficient per t-order

  bool equals_through(const TruncSeries& o, int bound) const;
  bool is_zero_through(int bound) const;

  std::string to_string() const;

 private:
  Window win_{0, 0};
  int val_ = 0;
  std::vector<LaurentPoly> coeffs_;

  TruncSeries(Window w, int val, std::vector<LaurentPoly> coeffs)
      : win_(w), val_(val), coeffs_(std::move(coeffs)) {}
  void require_same_window(const TruncSeries& o) const;
};

}  // namespace crosswalks
