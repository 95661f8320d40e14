#include "crosswalks/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace crosswalks {

namespace {

void check_window(Window w) {
  if (!(w.lo <= 0 && 0 <= w.hi)) {
    throw std::invalid_argument("window must satisfy lo <= 0 <= hi");
  }
}

}  // namespace

LaurentPoly::LaurentPoly(Window w) : win_(w) { check_window(w); }

LaurentPoly LaurentPoly::build(Window w, bool truncated, int base,
                               std::vector<Rat> raw) {
  check_window(w);
  LaurentPoly p(w);
  p.truncated_ = truncated;

  int first = -1, last = -1;
  for (int i = 0; i < static_cast<int>(raw.size()); ++i) {
    if (raw[i] != 0) {
      if (first < 0) first = i;
      last = i;
    }
  }
  if (first < 0) return p;  // zero

  int span_lo = base + first, span_hi = base + last;
  if (span_lo < w.lo || span_hi > w.hi) {
    if (!truncated) {
      std::ostringstream msg;
      msg << "laurent window overflow: support [" << span_lo << ", " << span_hi
          << "] exceeds window [" << w.lo << ", " << w.hi << "]";
      throw std::runtime_error(msg.str());
    }
    // Clip, then re-trim.
    int keep_lo = std::max(span_lo, w.lo), keep_hi = std::min(span_hi, w.hi);
    if (keep_lo > keep_hi) return p;
    first = keep_lo - base;
    last = keep_hi - base;
    while (first <= last && raw[first] == 0) ++first;
    while (last >= first && raw[last] == 0) --last;
    if (first > last) return p;
    span_lo = base + first;
  }

  p.base_ = span_lo;
  p.coeffs_.assign(raw.begin() + first, raw.begin() + last + 1);
  return p;
}

LaurentPoly LaurentPoly::monomial(Window w, int exponent, Rat coefficient) {
  return build(w, false, exponent, {std::move(coefficient)});
}

LaurentPoly LaurentPoly::from_terms(
    Window w, const std::vector<std::pair<int, Rat>>& terms) {
  check_window(w);
  if (terms.empty()) return zero(w);
  int lo = terms[0].first, hi = terms[0].first;
  for (const auto& [e, c] : terms) {
    (void)c;
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  std::vector<Rat> raw(hi - lo + 1, Rat(0));
  for (const auto& [e, c] : terms) raw[e - lo] += c;
  return build(w, false, lo, std::move(raw));
}

LaurentPoly LaurentPoly::with_truncated() const {
  LaurentPoly p = *this;
  p.truncated_ = true;
  return p;
}

int LaurentPoly::lo() const {
  if (is_zero()) throw std::logic_error("lo() of zero polynomial");
  return base_;
}

int LaurentPoly::hi() const {
  if (is_zero()) throw std::logic_error("hi() of zero polynomial");
  return base_ + static_cast<int>(coeffs_.size()) - 1;
}

Rat LaurentPoly::coeff(int exponent) const {
  int i = exponent - base_;
  if (is_zero() || i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (!(win_ == o.win_)) {
    throw std::logic_error("window mismatch in Laurent addition");
  }
  if (is_zero()) {
    LaurentPoly r = o;
    r.truncated_ = truncated_ || o.truncated_;
    return r;
  }
  if (o.is_zero()) {
    LaurentPoly r = *this;
    r.truncated_ = truncated_ || o.truncated_;
    return r;
  }
  int lo = std::min(base_, o.base_);
  int hi = std::max(this->hi(), o.hi());
  std::vector<Rat> raw(hi - lo + 1, Rat(0));
  for (int i = 0; i < static_cast<int>(coeffs_.size()); ++i) {
    raw[base_ + i - lo] += coeffs_[i];
  }
  for (int i = 0; i < static_cast<int>(o.coeffs_.size()); ++i) {
    raw[o.base_ + i - lo] += o.coeffs_[i];
  }
  return build(win_, truncated_ || o.truncated_, lo, std::move(raw));
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  return *this + (-o);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (!(win_ == o.win_)) {
    throw std::logic_error("window mismatch in Laurent multiplication");
  }
  bool trunc = truncated_ || o.truncated_;
  if (is_zero() || o.is_zero()) {
    LaurentPoly r(win_);
    r.truncated_ = trunc;
    return r;
  }
  int lo = base_ + o.base_;
  std::vector<Rat> raw(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j] == 0) continue;
      raw[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return build(win_, trunc, lo, std::move(raw));
}

LaurentPoly LaurentPoly::scaled(const Rat& s) const {
  if (s == 0) {
    LaurentPoly r(win_);
    r.truncated_ = truncated_;
    return r;
  }
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

LaurentPoly LaurentPoly::shifted(int d) const {
  if (is_zero()) return *this;
  return build(win_, truncated_, base_ + d, coeffs_);
}

LaurentPoly LaurentPoly::dx() const {
  if (is_zero()) return *this;
  std::vector<Rat> raw(coeffs_.size(), Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    raw[i] = coeffs_[i] * Rat(base_ + static_cast<int>(i));
  }
  return build(win_, truncated_, base_ - 1, std::move(raw));
}

LaurentPoly LaurentPoly::xdx() const {
  if (is_zero()) return *this;
  std::vector<Rat> raw(coeffs_.size(), Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    raw[i] = coeffs_[i] * Rat(base_ + static_cast<int>(i));
  }
  return build(win_, truncated_, base_, std::move(raw));
}

LaurentPoly LaurentPoly::subst_xinv() const {
  if (truncated_) {
    throw std::logic_error("x -> 1/x is only defined for exact polynomials");
  }
  if (is_zero()) return *this;
  std::vector<Rat> raw(coeffs_.rbegin(), coeffs_.rend());
  return build(win_, false, -hi(), std::move(raw));
}

bool LaurentPoly::is_palindromic() const { return *this == subst_xinv(); }

LaurentPoly LaurentPoly::inverse_lowest() const {
  if (is_zero()) throw std::logic_error("inverse of zero polynomial");
  int a = base_;
  const Rat& c0 = coeffs_[0];
  // Result exponents run from -a up to the window top.
  int out_len = win_.hi - (-a) + 1;
  if (out_len < 1 || -a < win_.lo) {
    throw std::runtime_error("laurent inverse does not fit the window");
  }
  std::vector<Rat> b(out_len, Rat(0));
  b[0] = Rat(1) / c0;
  int in_len = static_cast<int>(coeffs_.size());
  for (int e = 1; e < out_len; ++e) {
    Rat acc = 0;
    for (int d = 1; d <= std::min(e, in_len - 1); ++d) {
      if (coeffs_[d] == 0) continue;
      acc += coeffs_[d] * b[e - d];
    }
    if (acc != 0) b[e] = -acc / c0;
  }
  bool trunc = truncated_ || in_len > 1;
  return build(win_, trunc, -a, std::move(b));
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  return base_ == o.base_ && coeffs_ == o.coeffs_;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    int e = base_ + static_cast<int>(i);
    Rat c = coeffs_[i];
    if (!first) {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (e == 0 || c != 1) out << rat_to_string(c);
    if (e != 0) {
      if (c != 1) out << "*";
      out << "x";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

}  // namespace crosswalks
