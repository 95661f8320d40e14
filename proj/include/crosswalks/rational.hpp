// Exact arithmetic aliases and small helpers shared by every module.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace crosswalks {

using Int = mpz_class;
using Rat = mpq_class;

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Int parse_int(const std::string& s) {
  Int v;
  if (v.set_str(s, 10) != 0) throw std::invalid_argument("not a decimal integer: " + s);
  return v;
}

// Exact quotient; throws if the division leaves a remainder.
inline Int divexact(const Int& a, const Int& b) {
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) throw std::domain_error("inexact integer division");
  return q;
}

// Rational as "num" or "num/den", canonical form.
inline std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

using IntSeq = std::vector<Int>;

}  // namespace crosswalks
