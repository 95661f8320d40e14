#include "crosswalks/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace crosswalks {

// ---------------------------------------------------------------- RatSeries

RatSeries RatSeries::of(std::vector<Rat> coeffs, int val) {
  RatSeries s;
  s.val = val;
  s.c = std::move(coeffs);
  return s;
}

Rat RatSeries::at(int m) const {
  if (m < val) return 0;
  if (m >= known()) throw std::logic_error("RatSeries coefficient not known");
  return c[m - val];
}

RatSeries RatSeries::operator+(const RatSeries& o) const {
  int v = std::min(val, o.val);
  int k = std::min(known(), o.known());
  if (k <= v) throw std::logic_error("RatSeries precision exhausted in +");
  RatSeries r;
  r.val = v;
  r.c.assign(k - v, Rat(0));
  for (int m = v; m < k; ++m) {
    r.c[m - v] = (m < val ? Rat(0) : at(m)) + (m < o.val ? Rat(0) : o.at(m));
  }
  return r;
}

RatSeries RatSeries::operator-(const RatSeries& o) const {
  return *this + o.scaled(-1);
}

RatSeries RatSeries::scaled(const Rat& s) const {
  RatSeries r = *this;
  for (auto& x : r.c) x *= s;
  return r;
}

bool RatSeries::is_zero_through(int bound) const {
  if (bound > known()) return false;
  for (int m = val; m < bound; ++m) {
    if (at(m) != 0) return false;
  }
  return true;
}

bool RatSeries::equals_through(const RatSeries& o, int bound) const {
  if (bound > known() || bound > o.known()) return false;
  for (int m = std::min(val, o.val); m < bound; ++m) {
    if (at(m) != o.at(m)) return false;
  }
  return true;
}

IntSeq RatSeries::to_ints(int count) const {
  if (count > known()) throw std::logic_error("RatSeries too short for to_ints");
  IntSeq out;
  out.reserve(count);
  for (int m = 0; m < count; ++m) {
    Rat r = at(m);
    if (!is_integer(r)) {
      throw std::runtime_error("series coefficient of t^" + std::to_string(m) +
                               " is not an integer: " + rat_to_string(r));
    }
    out.push_back(r.get_num());
  }
  return out;
}

std::string RatSeries::to_triples_text() const {
  std::ostringstream out;
  for (int m = val; m < known(); ++m) {
    Rat r = at(m);
    out << m << "\t" << r.get_num().get_str() << "\t" << r.get_den().get_str()
        << "\n";
  }
  return out.str();
}

// -------------------------------------------------------------- TruncSeries

TruncSeries TruncSeries::zero(Window w, int len, int val) {
  if (len < 1) throw std::invalid_argument("series length must be positive");
  return TruncSeries(w, val,
                     std::vector<LaurentPoly>(len, LaurentPoly::zero(w)));
}

TruncSeries TruncSeries::from_poly(Window w, const LaurentPoly& p, int len) {
  TruncSeries s = zero(w, len);
  s.coeffs_[0] = p;
  return s;
}

TruncSeries TruncSeries::from_rat(Window w, const Rat& r, int len) {
  return from_poly(w, LaurentPoly::monomial(w, 0, r), len);
}

TruncSeries TruncSeries::from_txc(
    Window w, int len, const std::vector<std::tuple<int, int, Rat>>& terms) {
  TruncSeries s = zero(w, len);
  for (const auto& [td, xd, c] : terms) {
    if (td < 0 || td >= len) {
      throw std::invalid_argument("t-exponent outside series range");
    }
    s.coeffs_[td] = s.coeffs_[td] + LaurentPoly::monomial(w, xd, c);
  }
  return s;
}

TruncSeries TruncSeries::from_coeffs(Window w,
                                     std::vector<LaurentPoly> coeffs,
                                     int val) {
  if (coeffs.empty()) throw std::invalid_argument("empty coefficient vector");
  for (const auto& c : coeffs) {
    if (!(c.window() == w)) {
      throw std::logic_error("coefficient window mismatch");
    }
  }
  return TruncSeries(w, val, std::move(coeffs));
}

LaurentPoly TruncSeries::coeff_t(int m) const {
  if (m < val_) return LaurentPoly::zero(win_);
  if (m >= known()) throw std::logic_error("series coefficient not known");
  return coeffs_[m - val_];
}

void TruncSeries::require_same_window(const TruncSeries& o) const {
  if (!(win_ == o.win_)) {
    throw std::logic_error("window mismatch between series");
  }
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  require_same_window(o);
  int v = std::min(val_, o.val_);
  int k = std::min(known(), o.known());
  if (k <= v) throw std::logic_error("series precision exhausted in +");
  std::vector<LaurentPoly> out;
  out.reserve(k - v);
  for (int m = v; m < k; ++m) out.push_back(coeff_t(m) + o.coeff_t(m));
  return TruncSeries(win_, v, std::move(out));
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r = *this;
  for (auto& p : r.coeffs_) p = -p;
  return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
  return *this + (-o);
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  require_same_window(o);
  int v = val_ + o.val_;
  int k = std::min(val_ + o.known(), o.val_ + known());
  if (k <= v) throw std::logic_error("series precision exhausted in *");
  std::vector<LaurentPoly> out(k - v, LaurentPoly::zero(win_));
  int alen = len(), blen = o.len();
  for (int i = 0; i < alen; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (int j = 0; j < blen; ++j) {
      int m = val_ + i + o.val_ + j;
      if (m >= k) break;
      if (o.coeffs_[j].is_zero()) continue;
      out[m - v] = out[m - v] + coeffs_[i] * o.coeffs_[j];
    }
  }
  return TruncSeries(win_, v, std::move(out));
}

TruncSeries TruncSeries::scaled(const Rat& s) const {
  TruncSeries r = *this;
  for (auto& p : r.coeffs_) p = p.scaled(s);
  return r;
}

TruncSeries TruncSeries::mul_poly(const LaurentPoly& p) const {
  TruncSeries r = *this;
  for (auto& q : r.coeffs_) q = q * p;
  return r;
}

TruncSeries TruncSeries::mul_tpow(int j) const {
  TruncSeries r = *this;
  r.val_ += j;
  return r;
}

TruncSeries TruncSeries::truncated_to_known(int bound) const {
  if (bound <= val_) throw std::logic_error("truncation drops whole series");
  if (bound >= known()) return *this;
  TruncSeries r = *this;
  r.coeffs_.resize(bound - val_);
  return r;
}

TruncSeries TruncSeries::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power");
  if (e == 0) return from_rat(win_, 1, std::max(1, len()));
  TruncSeries r = *this;
  for (int i = 1; i < e; ++i) r = r * *this;
  return r;
}

TruncSeries TruncSeries::dt() const {
  std::vector<LaurentPoly> out;
  out.reserve(coeffs_.size());
  for (int i = 0; i < len(); ++i) {
    out.push_back(coeffs_[i].scaled(Rat(val_ + i)));
  }
  return TruncSeries(win_, val_ - 1, std::move(out));
}

TruncSeries TruncSeries::dx() const {
  TruncSeries r = *this;
  for (auto& p : r.coeffs_) p = p.dx();
  return r;
}

TruncSeries TruncSeries::xdx() const {
  TruncSeries r = *this;
  for (auto& p : r.coeffs_) p = p.xdx();
  return r;
}

TruncSeries TruncSeries::mapped_xinv() const {
  TruncSeries r = *this;
  for (auto& p : r.coeffs_) p = p.subst_xinv();
  return r;
}

int TruncSeries::effective_val() const {
  for (int i = 0; i < len(); ++i) {
    if (!coeffs_[i].is_zero()) return val_ + i;
  }
  return known();
}

namespace {

// Product of two coefficient vectors (t-valuation 0), keeping only the
// first `bound` t-orders.
std::vector<LaurentPoly> mul_mod(Window win, const std::vector<LaurentPoly>& a,
                                 const std::vector<LaurentPoly>& b,
                                 int bound) {
  std::vector<LaurentPoly> out(bound, LaurentPoly::zero(win));
  for (int i = 0; i < static_cast<int>(a.size()) && i < bound; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j + i < bound && j < static_cast<int>(b.size()); ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] = out[i + j] + a[i] * b[j];
    }
  }
  return out;
}

}  // namespace

TruncSeries TruncSeries::inverse() const {
  int v = effective_val();
  if (v >= known()) throw std::logic_error("inverse of (stored) zero series");
  int rel = known() - v;  // usable t-orders once normalized to valuation 0
  // Normalized copy: n[i] is the coefficient of t^{v+i}.
  std::vector<LaurentPoly> n(coeffs_.begin() + (v - val_), coeffs_.end());

  // The seed is always marked truncated: even when the lead inverts exactly,
  // the higher t-orders of an inverse generally have unbounded x-support, so
  // window clipping (not an overflow error) is the correct behavior.
  std::vector<LaurentPoly> z{n[0].inverse_lowest().with_truncated()};
  int p = 1;
  while (p < rel) {
    p = std::min(2 * p, rel);
    std::vector<LaurentPoly> head(n.begin(), n.begin() + p);
    std::vector<LaurentPoly> dz = mul_mod(win_, head, z, p);
    // 2 - D z
    for (auto& q : dz) q = -q;
    dz[0] = dz[0] + LaurentPoly::monomial(win_, 0, 2);
    z = mul_mod(win_, z, dz, p);
  }
  z.resize(rel, LaurentPoly::zero(win_));
  return TruncSeries(win_, -v, std::move(z));
}

TruncSeries TruncSeries::sqrt_lead_one() const {
  if (effective_val() != 0 || coeff_t(0) != LaurentPoly::one(win_)) {
    throw std::logic_error("sqrt requires constant coefficient 1");
  }
  int k = known();
  if (k < 1) throw std::logic_error("sqrt of empty series");
  std::vector<LaurentPoly> s;
  s.reserve(k);
  for (int m = 0; m < k; ++m) s.push_back(coeff_t(m));

  // Newton iteration for s^{-1/2}: w <- w (3 - s w^2) / 2.
  std::vector<LaurentPoly> w{LaurentPoly::one(win_)};
  int p = 1;
  while (p < k) {
    p = std::min(2 * p, k);
    std::vector<LaurentPoly> shead(s.begin(), s.begin() + p);
    std::vector<LaurentPoly> sw2 =
        mul_mod(win_, shead, mul_mod(win_, w, w, p), p);
    for (auto& q : sw2) q = -q;
    sw2[0] = sw2[0] + LaurentPoly::monomial(win_, 0, 3);
    w = mul_mod(win_, w, sw2, p);
    for (auto& q : w) q = q.scaled(Rat(1, 2));
  }

  TruncSeries normalized(win_, 0, std::move(s));
  TruncSeries invroot(win_, 0, std::move(w));
  TruncSeries root = normalized * invroot;
  if (!(root * root).equals_through(normalized, k)) {
    throw std::runtime_error("sqrt verification failed");
  }
  return root;
}

RatSeries TruncSeries::ct() const {
  RatSeries out;
  out.val = val_;
  out.c.reserve(coeffs_.size());
  for (const auto& p : coeffs_) out.c.push_back(p.coeff(0));
  return out;
}

bool TruncSeries::equals_through(const TruncSeries& o, int bound) const {
  if (bound > known() || bound > o.known()) return false;
  for (int m = std::min(val_, o.val_); m < bound; ++m) {
    if (coeff_t(m) != o.coeff_t(m)) return false;
  }
  return true;
}

bool TruncSeries::is_zero_through(int bound) const {
  if (bound > known()) return false;
  for (int m = val_; m < bound; ++m) {
    if (!coeff_t(m).is_zero()) return false;
  }
  return true;
}

std::string TruncSeries::to_string() const {
  std::ostringstream out;
  for (int m = val_; m < known(); ++m) {
    LaurentPoly p = coeff_t(m);
    if (p.is_zero()) continue;
    out << "t^" << m << ": " << p.to_string() << "\n";
  }
  std::string s = out.str();
  return s.empty() ? "0" : s;
}

}  // namespace crosswalks
