#pragma once

#include "crosswalks/series.hpp"
#include "crosswalks/walks.hpp"

#include <memory>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace crosswalks {

// Default exponent window for working truncation order N: every object the
// constant-term formulas touch has t^n coefficients supported within
// [-(n-1), n], and the fixed Laurent multipliers reach at most 4 further.
Window default_window(int N);

// The unique power series roots of the two quadratic functional equations,
// known modulo t^N:
//   Y = t (1 + x + Y)(1 + (1 + 1/x) Y)            (vacillating)
//   Ytilde = t (1 + 1/x)(1 + Ytilde)(x + Ytilde)  (hesitating)
TruncSeries solve_Y(int N, Window w);
TruncSeries solve_Ytilde(int N, Window w);

// sqrt of the flavor's radicand, a power series with constant term 1:
//   vacillating: (1 - (u-1) t)^2 - 4 t,   hesitating: (1 - u t)^2 - 4 u t^2
// where u = 1/x + 2 + x.
TruncSeries radicand(Flavor f, int N, Window w);
TruncSeries solve_Delta(Flavor f, int N, Window w);

// The fixed denominators D1, D2, D3 of the reduction theory, as exact
// polynomial series (which = 1, 2, 3).
TruncSeries denominator_poly(Flavor f, int which, int N, Window w);

LaurentPoly u_poly(Window w);

// One endpoint-set generating function A(x, y) in the closed form
//   A = sum c * X^i * Yv^j  /  ((1 - X)^d1 (1 - X Yv)^d2).
struct ADescriptor {
  std::string name;
  // (exponent of X, exponent of Yv, coefficient)
  std::vector<std::tuple<int, int, Rat>> numerator;
  int d1 = 0;
  int d2 = 0;
};

// Weighted formal combination of descriptors; the constant-term evaluation
// is linear in A.
using ACombo = std::vector<std::pair<Rat, ADescriptor>>;

// Catalog names: "A1", "A2", "A2p", "A2pp", "A3", "A4", plus the synthetic
// off-catalog probe example "x/(1-x)^2".
ADescriptor a_descriptor(const std::string& name);

// Parses "A1 + 2*A2p + 3*A2pp" style combinations (case-insensitive names,
// integer or rational weights).
ACombo parse_a_combo(const std::string& text);
std::string combo_name(const ACombo& combo);

struct EvalResult {
  std::string a_name;
  RatSeries series;  // t^0 .. t^{N-1}
  IntSeq counts;     // the same coefficients, checked to be integers
};

struct ProbeReport {
  std::string a_name;
  bool fit_found = false;
  bool confirmed = false;  // fit re-checked on 10 held-out coefficients
  int valuation = 0;       // t-valuation of the Delta-free constant term
  std::vector<Rat> num, den;  // fit: t^valuation * num(t)/den(t), den(0)=1
  std::string text;
};

// Evaluates the closed constant-term formulas for walk-counting generating
// functions: vacillating uses the Y root, hesitating the Ytilde root. One
// engine instance fixes the truncation order and window and may be reused
// across descriptors.
class CtEngine {
 public:
  CtEngine(Flavor f, int N, int window_extra = 0);

  Flavor flavor() const { return flavor_; }
  int order() const { return n_; }

  EvalResult eval(const ACombo& combo) const;
  EvalResult eval(const ADescriptor& a) const;

  // Delta-free-part rationality probe: splits the integrand into its even
  // and odd parts in Delta by averaging over the two roots of the quadratic,
  // then attempts a small rational fit to the constant term of the even
  // part. Reports; never throws on a failed fit. Vacillating only.
  ProbeReport t0_probe(const ACombo& combo) const;

 private:
  struct Basis;
  Flavor flavor_;
  int n_;       // requested order
  int k_;       // internal working order
  Window win_;
  std::shared_ptr<Basis> main_;

  TruncSeries integrand(const Basis& b, const ADescriptor& a) const;
  TruncSeries integrand(const Basis& b, const ACombo& combo) const;
  TruncSeries eval_a(const Basis& b, const ADescriptor& a, int pair) const;
};

struct IdentityResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

// All identity ids known to verify_identity.
std::vector<std::string> identity_catalog();

// Checks one catalog identity with all series truncated modulo t^N (N >= 8)
// and the window widened by window_extra beyond the default.
IdentityResult verify_identity(const std::string& id, int N,
                               int window_extra = 0);

}  // namespace crosswalks
