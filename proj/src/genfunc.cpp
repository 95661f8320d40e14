#include "crosswalks/genfunc.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>

namespace crosswalks {

namespace {

LaurentPoly lp(Window w, const std::vector<std::pair<int, Rat>>& terms) {
  return LaurentPoly::from_terms(w, terms);
}

// Power series in t alone (every coefficient a rational constant).
TruncSeries t_series(Window w, int len, const std::vector<Rat>& c) {
  std::vector<std::tuple<int, int, Rat>> terms;
  for (int i = 0; i < static_cast<int>(c.size()); ++i) {
    if (c[i] != 0) terms.emplace_back(i, 0, c[i]);
  }
  return TruncSeries::from_txc(w, len, terms);
}

// x^0 coefficient of a * b, computed without forming the product.
Rat ct_pair(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  Rat s = 0;
  int lo = std::max(a.lo(), -b.hi());
  int hi = std::min(a.hi(), -b.lo());
  for (int e = lo; e <= hi; ++e) s += a.coeff(e) * b.coeff(-e);
  return s;
}

}  // namespace

Window default_window(int N) { return Window{-(N + 4), N + 4}; }

LaurentPoly u_poly(Window w) {
  return lp(w, {{-1, 1}, {0, 2}, {1, 1}});  // 1/x + 2 + x
}

TruncSeries solve_Y(int N, Window w) {
  if (N < 1) throw std::invalid_argument("series order must be >= 1");
  // Y = t ((1+x) + (u+1) Y + (1+1/x) Y^2), coefficient by coefficient.
  const LaurentPoly one_x = lp(w, {{0, 1}, {1, 1}});
  const LaurentPoly u1 = lp(w, {{-1, 1}, {0, 3}, {1, 1}});
  const LaurentPoly one_xinv = lp(w, {{-1, 1}, {0, 1}});
  std::vector<LaurentPoly> y(N, LaurentPoly::zero(w));
  if (N >= 2) y[1] = one_x;
  for (int m = 1; m + 1 < N; ++m) {
    LaurentPoly quad = LaurentPoly::zero(w);
    for (int a = 1; a + 1 <= m; ++a) quad = quad + y[a] * y[m - a];
    y[m + 1] = u1 * y[m] + one_xinv * quad;
  }
  return TruncSeries::from_coeffs(w, std::move(y), 0);
}

TruncSeries solve_Ytilde(int N, Window w) {
  if (N < 1) throw std::invalid_argument("series order must be >= 1");
  // Ytilde = t ((1+x) + u Ytilde + (1+1/x) Ytilde^2).
  const LaurentPoly one_x = lp(w, {{0, 1}, {1, 1}});
  const LaurentPoly u = u_poly(w);
  const LaurentPoly one_xinv = lp(w, {{-1, 1}, {0, 1}});
  std::vector<LaurentPoly> y(N, LaurentPoly::zero(w));
  if (N >= 2) y[1] = one_x;
  for (int m = 1; m + 1 < N; ++m) {
    LaurentPoly quad = LaurentPoly::zero(w);
    for (int a = 1; a + 1 <= m; ++a) quad = quad + y[a] * y[m - a];
    y[m + 1] = u * y[m] + one_xinv * quad;
  }
  return TruncSeries::from_coeffs(w, std::move(y), 0);
}

TruncSeries radicand(Flavor f, int N, Window w) {
  if (f == Flavor::vacillating) {
    // (1 - (u-1) t)^2 - 4 t
    const LaurentPoly um1 = lp(w, {{-1, 1}, {0, 1}, {1, 1}});
    TruncSeries a = TruncSeries::one(w, N) -
                    TruncSeries::from_poly(w, um1, N).mul_tpow(1);
    return a * a - TruncSeries::from_rat(w, 4, N).mul_tpow(1);
  }
  // (1 - u t)^2 - 4 u t^2
  const LaurentPoly u = u_poly(w);
  TruncSeries b =
      TruncSeries::one(w, N) - TruncSeries::from_poly(w, u, N).mul_tpow(1);
  return b * b - TruncSeries::from_poly(w, u.scaled(4), N).mul_tpow(2);
}

TruncSeries solve_Delta(Flavor f, int N, Window w) {
  return radicand(f, N, w).sqrt_lead_one();
}

TruncSeries denominator_poly(Flavor f, int which, int N, Window w) {
  using T = std::vector<std::tuple<int, int, Rat>>;
  const bool vac = f == Flavor::vacillating;
  T terms;
  switch (which) {
    case 1:
      // -2t + (1 - ct) x - 2t x^2, c = 5 resp. 4
      terms = vac ? T{{1, 0, -2}, {0, 1, 1}, {1, 1, -5}, {1, 2, -2}}
                  : T{{1, 0, -2}, {0, 1, 1}, {1, 1, -4}, {1, 2, -2}};
      break;
    case 2:
      // -t - 2tx + (1 - ct) x^2 - 2t x^3 - t x^4, c = 3 resp. 2
      terms = vac ? T{{1, 0, -1}, {1, 1, -2}, {0, 2, 1},
                      {1, 2, -3}, {1, 3, -2}, {1, 4, -1}}
                  : T{{1, 0, -1}, {1, 1, -2}, {0, 2, 1},
                      {1, 2, -2}, {1, 3, -2}, {1, 4, -1}};
      break;
    case 3:
      // x^2 * (square of the flavor's sqrt): an exact polynomial.
      terms = vac ? T{{2, 0, 1}, {1, 1, -2}, {2, 1, 2},
                      {0, 2, 1}, {1, 2, -6}, {2, 2, 3},
                      {1, 3, -2}, {2, 3, 2}, {2, 4, 1}}
                  : T{{2, 0, 1}, {1, 1, -2}, {0, 2, 1},  {1, 2, -4},
                      {2, 2, -2}, {1, 3, -2}, {2, 4, 1}};
      break;
    default:
      throw std::invalid_argument("denominator index must be 1, 2 or 3");
  }
  return TruncSeries::from_txc(w, N, terms);
}

// ---------------------------------------------------------------------------
// Endpoint-set descriptors
// ---------------------------------------------------------------------------

ADescriptor a_descriptor(const std::string& name) {
  // Closed forms, X = first argument, Yv = second argument:
  //   A1   = X                                    (single point (1,0))
  //   A2   = X / ((1-X)(1-X Yv))                  (whole chamber)
  //   A2p  = (X^2 + X^2 Yv - 2 X^3 Yv) / ((1-X)(1-X Yv))
  //   A2pp = X^3 Yv / ((1-X)(1-X Yv))
  //   A3   = X / (1-X)                            (x-axis)
  //   A4   = X / (1-X Yv)                         (adjacent diagonal)
  if (name == "A1") return ADescriptor{"A1", {{1, 0, 1}}, 0, 0};
  if (name == "A2") return ADescriptor{"A2", {{1, 0, 1}}, 1, 1};
  if (name == "A2p") {
    return ADescriptor{"A2p", {{2, 0, 1}, {2, 1, 1}, {3, 1, -2}}, 1, 1};
  }
  if (name == "A2pp") return ADescriptor{"A2pp", {{3, 1, 1}}, 1, 1};
  if (name == "A3") return ADescriptor{"A3", {{1, 0, 1}}, 1, 0};
  if (name == "A4") return ADescriptor{"A4", {{1, 0, 1}}, 0, 1};
  if (name == "x/(1-x)^2") {
    // Off-catalog probe example: X / (1-X)^2.
    return ADescriptor{"x/(1-x)^2", {{1, 0, 1}}, 2, 0};
  }
  throw std::invalid_argument("unknown endpoint-set descriptor: " + name);
}

namespace {

std::string canonical_a_name(const std::string& raw) {
  std::string t;
  for (char ch : raw) {
    if (!std::isspace(static_cast<unsigned char>(ch))) {
      t.push_back(static_cast<char>(
          std::tolower(static_cast<unsigned char>(ch))));
    }
  }
  if (t == "a1") return "A1";
  if (t == "a2") return "A2";
  if (t == "a2p" || t == "a2'") return "A2p";
  if (t == "a2pp" || t == "a2''") return "A2pp";
  if (t == "a3") return "A3";
  if (t == "a4") return "A4";
  if (t == "x/(1-x)^2" || t == "synthetic") return "x/(1-x)^2";
  throw std::invalid_argument("unknown endpoint-set name: " + raw);
}

}  // namespace

ACombo parse_a_combo(const std::string& text) {
  ACombo combo;
  const int n = static_cast<int>(text.size());
  int i = 0;
  auto skip_ws = [&]() {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  bool first = true;
  while (i < n) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw std::invalid_argument("expected '+' or '-' in combination: " +
                                  text);
    }
    Rat coef = 1;
    if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      int start = i;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      std::string numpart = text.substr(start, i - start);
      std::string denpart = "1";
      skip_ws();
      if (i < n && text[i] == '/') {
        ++i;
        skip_ws();
        start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) {
          throw std::invalid_argument("bad coefficient in: " + text);
        }
        denpart = text.substr(start, i - start);
      }
      coef = Rat(Int(numpart), Int(denpart));
      coef.canonicalize();
      skip_ws();
      if (i < n && text[i] == '*') {
        ++i;
        skip_ws();
      }
    }
    // Name runs to the next top-level '+' or '-'.
    int depth = 0;
    int start = i;
    while (i < n) {
      char ch = text[i];
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (depth == 0 && (ch == '+' || ch == '-') && i > start) break;
      ++i;
    }
    std::string name = text.substr(start, i - start);
    while (!name.empty() &&
           std::isspace(static_cast<unsigned char>(name.back()))) {
      name.pop_back();
    }
    if (name.empty()) {
      throw std::invalid_argument("missing endpoint-set name in: " + text);
    }
    combo.emplace_back(sign < 0 ? Rat(-coef) : coef,
                       a_descriptor(canonical_a_name(name)));
    first = false;
    skip_ws();
  }
  if (combo.empty()) {
    throw std::invalid_argument("empty endpoint-set combination");
  }
  return combo;
}

std::string combo_name(const ACombo& combo) {
  std::string s;
  for (const auto& [wt, d] : combo) {
    if (wt == 0) continue;
    Rat a = wt;
    if (s.empty()) {
      if (a == -1) {
        s += "-";
      } else if (a != 1) {
        s += rat_to_string(a) + "*";
      }
    } else {
      if (a < 0) {
        s += " - ";
        a = -a;
      } else {
        s += " + ";
      }
      if (a != 1) s += rat_to_string(a) + "*";
    }
    s += d.name;
  }
  return s.empty() ? std::string("0") : s;
}

// ---------------------------------------------------------------------------
// Constant-term engine
// ---------------------------------------------------------------------------

struct CtEngine::Basis {
  Window w{0, 0};
  int k = 0;  // t-orders carried by this basis
  LaurentPoly xp, xq;
  LaurentPoly inv_one_minus_x;
  TruncSeries root, x_s, xinv_s, xinv_root, one_s, inv1mx_s;
  mutable std::optional<TruncSeries> ia, ib, ic, idn;

  explicit Basis(TruncSeries r) : root(std::move(r)) {
    w = root.window();
    k = root.known();
    xp = LaurentPoly::monomial(w, 1, 1);
    xq = LaurentPoly::monomial(w, -1, 1);
    const LaurentPoly one_p = LaurentPoly::one(w);
    inv_one_minus_x = (one_p - xp).inverse_lowest();
    x_s = TruncSeries::from_poly(w, xp, k);
    xinv_s = TruncSeries::from_poly(w, xq, k);
    xinv_root = root.mul_poly(xq);
    one_s = TruncSeries::one(w, k);
    inv1mx_s = TruncSeries::from_poly(w, inv_one_minus_x, k);
  }

  // (1 - X Yv)^{-1} at the three substitution pairs, plus (1 - X)^{-1} for
  // pairs 2 and 3; all built on first use.
  const TruncSeries& invA() const {  // (1 - x R)^{-1}
    if (!ia) ia = (one_s - root.mul_poly(xp)).inverse();
    return *ia;
  }
  const TruncSeries& invB() const {  // (1 - R/x)^{-1}
    if (!ib) ib = (one_s - xinv_root).inverse();
    return *ib;
  }
  const TruncSeries& invC() const {  // (1 - R^2/x)^{-1}
    if (!ic) ic = (one_s - xinv_root * root).inverse();
    return *ic;
  }
  const TruncSeries& invD() const {  // (1 - R/x^2)^{-1}
    if (!idn) idn = (one_s - xinv_root.mul_poly(xq)).inverse();
    return *idn;
  }
};

namespace {

// The vacillating integrand only ever pairs exponents within a few steps of
// the working order, so a symmetric window with a small margin suffices.
// The hesitating extraction divides by (1+x), which pairs the constant term
// against the integrand's whole lower tail; the pair-3 substitution chains
// genuinely reach x^{-2m} at order t^m, so the window must be twice as deep
// on the bottom.
Window engine_window(Flavor f, int N, int window_extra) {
  const int k = N + 2;
  Window w = f == Flavor::vacillating ? Window{-(k + 6), k + 6}
                                      : Window{-(2 * k + 6), k + 6};
  return w.widened(window_extra);
}

}  // namespace

CtEngine::CtEngine(Flavor f, int N, int window_extra)
    : flavor_(f), n_(N), k_(N + 2),
      win_(engine_window(f, N, window_extra)) {
  if (N < 1) throw std::invalid_argument("engine order must be >= 1");
  TruncSeries root = f == Flavor::vacillating ? solve_Y(k_, win_)
                                              : solve_Ytilde(k_, win_);
  main_ = std::make_shared<Basis>(std::move(root));
}

TruncSeries CtEngine::eval_a(const Basis& b, const ADescriptor& a,
                             int pair) const {
  const TruncSeries& X = pair == 1 ? b.x_s : b.xinv_root;
  const TruncSeries& Yv = pair == 3 ? b.xinv_s : b.root;
  int mi = 0, mj = 0;
  for (const auto& [i, j, c] : a.numerator) {
    mi = std::max(mi, i);
    mj = std::max(mj, j);
  }
  std::vector<TruncSeries> xpow{b.one_s}, ypow{b.one_s};
  for (int i = 1; i <= mi; ++i) xpow.push_back(xpow.back() * X);
  for (int j = 1; j <= mj; ++j) ypow.push_back(ypow.back() * Yv);
  std::optional<TruncSeries> num;
  for (const auto& [i, j, c] : a.numerator) {
    TruncSeries term = (xpow[i] * ypow[j]).scaled(c);
    num = num ? *num + term : term;
  }
  TruncSeries res = *num;
  if (a.d1 > 0) {
    const TruncSeries& f1 = pair == 1 ? b.inv1mx_s : b.invB();
    res = res * (a.d1 == 1 ? f1 : f1.pow(a.d1));
  }
  if (a.d2 > 0) {
    const TruncSeries& f2 =
        pair == 1 ? b.invA() : (pair == 2 ? b.invC() : b.invD());
    res = res * (a.d2 == 1 ? f2 : f2.pow(a.d2));
  }
  return res;
}

TruncSeries CtEngine::integrand(const Basis& b, const ADescriptor& a) const {
  TruncSeries a1 = eval_a(b, a, 1);
  TruncSeries a2 = eval_a(b, a, 2);
  TruncSeries a3 = eval_a(b, a, 3);
  if (flavor_ == Flavor::vacillating) {
    TruncSeries pre1 = b.x_s + b.root + b.root.mul_poly(b.xp);
    TruncSeries pre2 = b.xinv_root + b.root + b.xinv_root * b.root;
    TruncSeries pre3 = b.xinv_root + b.xinv_s + b.xinv_root.mul_poly(b.xq);
    LaurentPoly mult = lp(b.w, {{-2, 1}, {2, -1}});
    return (pre1 * a1 - pre2 * a2 + pre3 * a3).mul_poly(mult);
  }
  TruncSeries br = b.root.mul_poly(b.xp) * a1 -
                   (b.root * b.root).mul_poly(b.xq) * a2 +
                   b.xinv_root.mul_poly(b.xq) * a3;
  if (br.effective_val() < 1) {
    throw std::logic_error("bracket lost its t factor");
  }
  // The remaining 1/(t(1+x)) factor is applied at extraction time: dividing
  // by (1+x) as a series would need as much room above the window as the
  // integrand has below it, while the constant term of F/(1+x) is just the
  // alternating sum of F's coefficients at nonpositive exponents.
  LaurentPoly mult = lp(b.w, {{-2, 1}, {3, -1}});
  return br.mul_poly(mult);
}

TruncSeries CtEngine::integrand(const Basis& b, const ACombo& combo) const {
  std::optional<TruncSeries> acc;
  for (const auto& [wt, d] : combo) {
    if (wt == 0) continue;
    TruncSeries part = integrand(b, d).scaled(wt);
    acc = acc ? *acc + part : part;
  }
  if (!acc) throw std::invalid_argument("empty endpoint-set combination");
  return *acc;
}

namespace {

// x^0 coefficient of f / (1+x) per t-order: since 1/(1+x) = sum (-x)^d, the
// constant term pairs f's coefficient at x^{-d} with sign (-1)^d.
RatSeries ct_over_one_plus_x(const TruncSeries& f) {
  const Window w = f.window();
  std::vector<Rat> out;
  out.reserve(std::max(0, f.known() - f.val()));
  for (int m = f.val(); m < f.known(); ++m) {
    const LaurentPoly p = f.coeff_t(m);
    Rat s = 0;
    for (int d = 0; d <= -w.lo; ++d) {
      const Rat c = p.coeff(-d);
      s += (d % 2 == 0) ? c : -c;
    }
    out.push_back(std::move(s));
  }
  return RatSeries::of(std::move(out), f.val());
}

}  // namespace

EvalResult CtEngine::eval(const ACombo& combo) const {
  TruncSeries f = integrand(*main_, combo);
  RatSeries raw = flavor_ == Flavor::vacillating ? f.ct()
                                                 : ct_over_one_plus_x(f);
  if (flavor_ == Flavor::hesitating) raw.val -= 1;  // the deferred 1/t
  if (raw.known() < n_) {
    throw std::logic_error("internal: too few t-orders survive");
  }
  for (int m = raw.val; m < 0; ++m) {
    if (raw.at(m) != 0) {
      throw std::logic_error("internal: negative t-order in a count series");
    }
  }
  std::vector<Rat> c(n_);
  for (int m = 0; m < n_; ++m) c[m] = raw.at(m);
  RatSeries out = RatSeries::of(std::move(c), 0);
  IntSeq counts = out.to_ints(n_);
  return EvalResult{combo_name(combo), std::move(out), std::move(counts)};
}

EvalResult CtEngine::eval(const ADescriptor& a) const {
  return eval(ACombo{{Rat(1), a}});
}

// ---------------------------------------------------------------------------
// Rationality probe for the even part in the square root
// ---------------------------------------------------------------------------

namespace {

// Exact Gauss-Jordan elimination; returns a particular solution (free
// variables set to zero) or nullopt when the system is inconsistent.
std::optional<std::vector<Rat>> solve_exact(std::vector<std::vector<Rat>> m,
                                            std::vector<Rat> rhs) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  std::vector<std::pair<int, int>> pivots;  // (row, col)
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int sel = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[r][col] != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(m[sel], m[rank]);
    std::swap(rhs[sel], rhs[rank]);
    Rat inv = Rat(1) / m[rank][col];
    for (int c2 = col; c2 < cols; ++c2) m[rank][c2] *= inv;
    rhs[rank] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rat factor = m[r][col];
      for (int c2 = col; c2 < cols; ++c2) m[r][c2] -= factor * m[rank][c2];
      rhs[r] -= factor * rhs[rank];
    }
    pivots.emplace_back(rank, col);
    ++rank;
  }
  for (int r = rank; r < rows; ++r) {
    if (rhs[r] != 0) return std::nullopt;
  }
  std::vector<Rat> x(cols, 0);
  for (const auto& [r, c] : pivots) x[c] = rhs[r];
  return x;
}

std::string t_poly_string(const std::vector<Rat>& c) {
  std::string s;
  for (int i = 0; i < static_cast<int>(c.size()); ++i) {
    if (c[i] == 0) continue;
    Rat a = c[i];
    if (s.empty()) {
      if (a < 0) {
        s += "-";
        a = -a;
      }
    } else {
      s += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    if (i == 0) {
      s += rat_to_string(a);
    } else {
      if (a != 1) s += rat_to_string(a) + "*";
      s += i == 1 ? "t" : "t^" + std::to_string(i);
    }
  }
  return s.empty() ? std::string("0") : s;
}

}  // namespace

ProbeReport CtEngine::t0_probe(const ACombo& combo) const {
  if (flavor_ != Flavor::vacillating) {
    throw std::logic_error("the even-part probe uses the vacillating root");
  }
  constexpr int kDeg = 6;       // max numerator/denominator degree
  constexpr int kFitRows = 20;  // equations used for the fit
  constexpr int kConfirm = 10;  // held-out equations

  const int kp = std::max(k_, 46);
  const Window w = default_window(kp + 4);
  TruncSeries y = solve_Y(kp, w);
  // The defining quadratic has a second root, x / Y; averaging the
  // integrand over both roots isolates the part free of the square root.
  TruncSeries ybar = y.inverse().mul_poly(LaurentPoly::monomial(w, 1, 1));
  Basis base_y(std::move(y)), base_conj(std::move(ybar));
  RatSeries even_ct =
      (integrand(base_y, combo).ct() + integrand(base_conj, combo).ct())
          .scaled(Rat(1, 2));

  ProbeReport rep;
  rep.a_name = combo_name(combo);
  const int usable = even_ct.known() - 2;
  int v = even_ct.val;
  while (v < usable && even_ct.at(v) == 0) ++v;
  if (v >= usable) {
    rep.fit_found = true;
    rep.confirmed = true;
    rep.valuation = 0;
    rep.num = {Rat(0)};
    rep.den = {Rat(1)};
    rep.text = "even part: constant term identically zero";
    return rep;
  }
  rep.valuation = v;
  const int avail = std::min(usable - v, kFitRows + kConfirm);
  std::vector<Rat> d(avail);
  for (int i = 0; i < avail; ++i) d[i] = even_ct.at(v + i);
  if (avail < kFitRows + 5) {
    rep.text = "insufficient precision for a trustworthy fit";
    return rep;
  }

  // Ansatz sum_i d_i t^i = p(t)/q(t) with q(0) = 1: linear equations
  //   sum_{b=1..kDeg} q_b d_{m-b} - p_m [m <= kDeg] = -d_m.
  auto d_at = [&](int idx) { return idx < 0 ? Rat(0) : d[idx]; };
  std::vector<std::vector<Rat>> mat;
  std::vector<Rat> rhs;
  for (int m = 0; m < kFitRows; ++m) {
    std::vector<Rat> row(2 * kDeg + 1, 0);
    for (int b = 1; b <= kDeg; ++b) row[b - 1] = d_at(m - b);
    if (m <= kDeg) row[kDeg + m] = -1;
    mat.push_back(std::move(row));
    rhs.push_back(-d[m]);
  }
  auto sol = solve_exact(std::move(mat), std::move(rhs));
  if (!sol) {
    rep.text = "no rational fit with numerator and denominator degree <= " +
               std::to_string(kDeg);
    return rep;
  }
  rep.fit_found = true;
  std::vector<Rat> q{Rat(1)}, p(kDeg + 1);
  for (int b = 1; b <= kDeg; ++b) q.push_back((*sol)[b - 1]);
  for (int m = 0; m <= kDeg; ++m) p[m] = (*sol)[kDeg + m];
  // Confirm the fit on every available coefficient, held-out ones included.
  bool ok = true;
  for (int m = 0; m < avail && ok; ++m) {
    Rat conv = 0;
    for (int b = 0; b <= kDeg && b <= m; ++b) conv += q[b] * d[m - b];
    Rat want = m <= kDeg ? p[m] : Rat(0);
    if (conv != want) ok = false;
  }
  rep.confirmed = ok;
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  while (q.size() > 1 && q.back() == 0) q.pop_back();
  rep.num = p;
  rep.den = q;
  if (ok) {
    std::string shift =
        v == 0 ? "" : "t^" + std::to_string(v) + " * ";
    rep.text = "even part: ct = " + shift + "(" + t_poly_string(p) + ") / (" +
               t_poly_string(q) + "), confirmed on " +
               std::to_string(avail - kFitRows) + " held-out coefficients";
  } else {
    rep.text = "fit matched " + std::to_string(kFitRows) +
               " coefficients but failed on held-out ones";
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Identity catalog
// ---------------------------------------------------------------------------

namespace {

struct FlavorPack {
  TruncSeries root, delta, d1, d2, d3, inv_d1, inv_d2, obj1, obj2;
};

std::shared_ptr<const FlavorPack> flavor_pack(Flavor f, int K, Window w) {
  static std::map<std::string, std::shared_ptr<const FlavorPack>> cache;
  static std::mutex mu;
  std::string key = std::string(f == Flavor::vacillating ? "v" : "h") + ":" +
                    std::to_string(K) + ":" + std::to_string(w.lo) + ":" +
                    std::to_string(w.hi);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto p = std::make_shared<FlavorPack>();
  p->root = f == Flavor::vacillating ? solve_Y(K, w) : solve_Ytilde(K, w);
  p->delta = solve_Delta(f, K, w);
  p->d1 = denominator_poly(f, 1, K, w);
  p->d2 = denominator_poly(f, 2, K, w);
  p->d3 = denominator_poly(f, 3, K, w);
  p->inv_d1 = p->d1.inverse();
  p->inv_d2 = p->d2.inverse();
  const LaurentPoly x1 = LaurentPoly::monomial(w, 1, 1);
  const LaurentPoly x2 = LaurentPoly::monomial(w, 2, 1);
  p->obj1 = p->delta.mul_poly(x1) * p->inv_d1;  // x Delta / D1
  p->obj2 = p->delta.mul_poly(x2) * p->inv_d2;  // x^2 Delta / D2
  std::lock_guard<std::mutex> lock(mu);
  if (cache.size() > 12) cache.clear();
  cache.emplace(key, p);
  return cache[key];
}

const std::vector<std::string>& flavor_tails() {
  static const std::vector<std::string> tails = {
      "antisym-delta",        "antisym-delta-over-d1",
      "antisym-delta-over-d2", "weight-delta",
      "weight-delta-over-d1",  "weight-delta-over-d2",
      "linear-weight-delta",   "delta-square",
      "delta-dx",              "delta-dt",
      "root-linearization",    "d2-elimination"};
  return tails;
}

}  // namespace

std::vector<std::string> identity_catalog() {
  std::vector<std::string> ids;
  for (const char* f : {"vac", "hes"}) {
    for (const auto& t : flavor_tails()) ids.push_back(std::string(f) + "-" + t);
  }
  ids.insert(ids.end(), {"jacobi-residue", "log-derivative-d1",
                         "x-inversion-symmetry", "ct-derivative-vanishes",
                         "a1-integrand-reduction"});
  return ids;
}

IdentityResult verify_identity(const std::string& id, int N,
                               int window_extra) {
  if (N < 8) throw std::invalid_argument("identity order must be >= 8");
  const int K = N + 2;
  // The inverted denominators have genuine coefficients out to exponent
  // +-(2m + 2) at t-order m, and multiplying by the fixed Laurent factors
  // adds a few more.  A symmetric window of +-(2K + 12) therefore contains
  // the entire true support of every object through the working order, so
  // all arithmetic below is exact and the widened re-run in the stability
  // check can only confirm, never repair, the values.
  const Window w = Window{-(2 * K + 12), 2 * K + 12}.widened(window_extra);

  auto fail = [&](std::string detail) {
    return IdentityResult{id, false, std::move(detail)};
  };
  auto pass = [&]() { return IdentityResult{id, true, ""}; };

  // First t-order where ct differs from the padded target, if any.
  auto ct_mismatch =
      [&](const TruncSeries& f,
          const std::vector<Rat>& target) -> std::optional<std::string> {
    RatSeries got = f.ct();
    if (got.known() < N) return "insufficient working precision";
    for (int m = std::min(got.val, 0); m < N; ++m) {
      Rat want =
          m >= 0 && m < static_cast<int>(target.size()) ? target[m] : Rat(0);
      if (got.at(m) != want) {
        return "t^" + std::to_string(m) + ": got " + rat_to_string(got.at(m)) +
               ", want " + rat_to_string(want);
      }
    }
    return std::nullopt;
  };

  auto series_mismatch =
      [&](const TruncSeries& a,
          const TruncSeries& b) -> std::optional<std::string> {
    if (a.known() < N || b.known() < N) return "insufficient working precision";
    for (int m = std::min({a.val(), b.val(), 0}); m < N; ++m) {
      if (!(a.coeff_t(m) == b.coeff_t(m))) {
        return "t^" + std::to_string(m) + " coefficient differs";
      }
    }
    return std::nullopt;
  };

  const LaurentPoly one_p = LaurentPoly::one(w);
  const LaurentPoly xp = LaurentPoly::monomial(w, 1, 1);
  const LaurentPoly xq = LaurentPoly::monomial(w, -1, 1);
  const LaurentPoly weight = (one_p - xp) * (one_p + xp).inverse_lowest();

  const bool is_vac = id.rfind("vac-", 0) == 0;
  const bool is_hes = id.rfind("hes-", 0) == 0;
  if (is_vac || is_hes) {
    const Flavor f = is_vac ? Flavor::vacillating : Flavor::hesitating;
    const std::string tail = id.substr(4);
    auto pk = flavor_pack(f, K, w);

    if (tail == "antisym-delta" || tail == "antisym-delta-over-d1" ||
        tail == "antisym-delta-over-d2") {
      const TruncSeries& obj = tail == "antisym-delta"
                                   ? pk->delta
                                   : (tail == "antisym-delta-over-d1"
                                          ? pk->obj1
                                          : pk->obj2);
      for (int k = 1; k <= 5; ++k) {
        LaurentPoly m = lp(w, {{k, 1}, {-k, -1}});
        if (auto d = ct_mismatch(obj.mul_poly(m), {})) {
          return fail("k=" + std::to_string(k) + ", " + *d);
        }
      }
      return pass();
    }
    if (tail == "weight-delta" || tail == "weight-delta-over-d1" ||
        tail == "weight-delta-over-d2") {
      const TruncSeries& obj =
          tail == "weight-delta"
              ? pk->delta
              : (tail == "weight-delta-over-d1" ? pk->obj1 : pk->obj2);
      std::vector<Rat> target = {Rat(1)};
      if (tail == "weight-delta" && f == Flavor::vacillating) {
        target = {Rat(1), Rat(-1)};  // 1 - t
      }
      if (auto d = ct_mismatch(obj.mul_poly(weight), target)) return fail(*d);
      return pass();
    }
    if (tail == "linear-weight-delta") {
      TruncSeries mult =
          f == Flavor::vacillating
              ? TruncSeries::from_txc(
                    w, K, {{0, 0, 1}, {0, 1, -1}, {1, 1, -3}, {1, 2, 3}})
              : TruncSeries::from_txc(w, K,
                                      {{0, 0, 1},
                                       {1, 0, 1},
                                       {0, 1, -1},
                                       {1, 1, -4},
                                       {1, 2, 3}});
      std::vector<Rat> target = f == Flavor::vacillating
                                    ? std::vector<Rat>{1, -2, 1}  // (1-t)^2
                                    : std::vector<Rat>{1};
      if (auto d = ct_mismatch(pk->delta * mult, target)) return fail(*d);
      return pass();
    }
    if (tail == "delta-square") {
      TruncSeries lhs = (pk->delta * pk->delta)
                            .mul_poly(LaurentPoly::monomial(w, 2, 1));
      if (auto d = series_mismatch(lhs, pk->d3)) return fail(*d);
      return pass();
    }
    if (tail == "delta-dx") {
      TruncSeries lhs = (pk->d3 * pk->delta.dx()).mul_poly(xp);
      TruncSeries rhsf =
          f == Flavor::vacillating
              ? TruncSeries::from_txc(w, K,
                                      {{2, 4, 1},
                                       {2, 3, 1},
                                       {1, 3, -1},
                                       {1, 1, 1},
                                       {2, 1, -1},
                                       {2, 0, -1}})
              : TruncSeries::from_txc(
                    w, K, {{2, 4, 1}, {1, 3, -1}, {1, 1, 1}, {2, 0, -1}});
      if (auto d = series_mismatch(lhs, pk->delta * rhsf)) return fail(*d);
      return pass();
    }
    if (tail == "delta-dt") {
      TruncSeries lhs = pk->d3 * pk->delta.dt();
      TruncSeries rhsf =
          f == Flavor::vacillating
              ? TruncSeries::from_txc(w, K,
                                      {{1, 4, 1},
                                       {1, 3, 2},
                                       {0, 3, -1},
                                       {1, 2, 3},
                                       {0, 2, -3},
                                       {1, 1, 2},
                                       {0, 1, -1},
                                       {1, 0, 1}})
              : TruncSeries::from_txc(w, K,
                                      {{1, 4, 1},
                                       {0, 3, -1},
                                       {1, 2, -2},
                                       {0, 2, -2},
                                       {0, 1, -1},
                                       {1, 0, 1}});
      if (auto d = series_mismatch(lhs, pk->delta * rhsf)) return fail(*d);
      return pass();
    }
    if (tail == "root-linearization") {
      TruncSeries lhs, rhs;
      if (f == Flavor::vacillating) {
        // 2 t (1+x) Y + x Delta = x - (1 + 3x + x^2) t
        lhs = pk->root.mul_poly(lp(w, {{0, 2}, {1, 2}})).mul_tpow(1) +
              pk->delta.mul_poly(xp);
        rhs = TruncSeries::from_txc(
            w, K + 1, {{0, 1, 1}, {1, 0, -1}, {1, 1, -3}, {1, 2, -1}});
      } else {
        // 2 t (1+1/x) Ytilde + Delta = 1 - u t
        lhs = pk->root.mul_poly(lp(w, {{-1, 2}, {0, 2}})).mul_tpow(1) +
              pk->delta;
        rhs = TruncSeries::from_txc(
            w, K + 1, {{0, 0, 1}, {1, -1, -1}, {1, 0, -2}, {1, 1, -1}});
      }
      if (auto d = series_mismatch(lhs, rhs)) return fail(*d);
      return pass();
    }
    if (tail == "d2-elimination") {
      auto ts = [&](const std::vector<Rat>& c) { return t_series(w, K, c); };
      TruncSeries total;
      if (f == Flavor::vacillating) {
        total =
            ts({-1, 8, 55, -440, 861, -528, 45}).scaled(Rat(9, 32)) +
            pk->delta * (ts({1, -5, -74, 210, -87, -45}).scaled(Rat(9, 32)) +
                         ts({0, -4, 8, 240, -552, 180})
                             .scaled(Rat(9, 32))
                             .mul_poly(xp)) -
            (pk->delta * pk->inv_d2) *
                (ts({0, -1, 9}) * ts({1, 5, -21, 15})).scaled(Rat(9, 8));
      } else {
        total =
            ts({1, -6, -32, 48, 64}).scaled(Rat(3, 32)) +
            pk->delta * (ts({1, -4, -44, -48}).scaled(Rat(-3, 32)) +
                         ts({0, 1, -2, -28, -16})
                             .scaled(Rat(3, 8))
                             .mul_poly(xp)) +
            (pk->delta * pk->inv_d2) * ts({0, -1, 3, 36, 32}).scaled(Rat(3, 8));
      }
      if (auto d = ct_mismatch(total, {})) return fail(*d);
      return pass();
    }
    throw std::invalid_argument("unknown identity id: " + id);
  }

  if (id == "jacobi-residue") {
    // ct_x applied to G(u) (1-x)/(1+x) equals the constant term of G in u:
    // checked on G = u^j for j = -5..5.
    if (ct_pair(weight, one_p) != 1) return fail("j=0: weight has ct != 1");
    const LaurentPoly u = u_poly(w);
    const LaurentPoly uinv = u.inverse_lowest();
    LaurentPoly upow = one_p, uqow = one_p;
    for (int j = 1; j <= 5; ++j) {
      upow = upow * u;
      uqow = uqow * uinv;
      if (ct_pair(upow, weight) != 0) {
        return fail("j=" + std::to_string(j) + ": nonzero ct");
      }
      if (ct_pair(uqow, weight) != 0) {
        return fail("j=-" + std::to_string(j) + ": nonzero ct");
      }
    }
    return pass();
  }
  if (id == "log-derivative-d1") {
    // ct of x d/dx log(-D1) as a rational integrand: equals 1 for all t.
    TruncSeries num =
        TruncSeries::from_txc(w, K, {{1, 0, 4}, {0, 1, -1}, {1, 1, 5}});
    TruncSeries den = TruncSeries::from_txc(
        w, K, {{1, 0, 2}, {0, 1, -1}, {1, 1, 5}, {1, 2, 2}});
    if (auto d = ct_mismatch(num * den.inverse(), {Rat(1)})) return fail(*d);
    return pass();
  }
  if (id == "x-inversion-symmetry") {
    for (Flavor f : {Flavor::vacillating, Flavor::hesitating}) {
      auto pk = flavor_pack(f, K, w);
      const std::vector<std::pair<std::string, TruncSeries>> objs = {
          {"delta", pk->delta},
          {"d1/x", pk->d1.mul_poly(xq)},
          {"d2/x^2", pk->d2.mul_poly(xq).mul_poly(xq)},
          {"d3/x^2", pk->d3.mul_poly(xq).mul_poly(xq)},
      };
      for (const auto& [name, obj] : objs) {
        for (int m = 0; m < N; ++m) {
          LaurentPoly c = obj.coeff_t(m);
          if (!(c == c.subst_xinv())) {
            return fail((f == Flavor::vacillating ? std::string("vac ")
                                                  : std::string("hes ")) +
                        name + " not symmetric at t^" + std::to_string(m));
          }
        }
      }
    }
    return pass();
  }
  if (id == "ct-derivative-vanishes") {
    auto pv = flavor_pack(Flavor::vacillating, K, w);
    auto ph = flavor_pack(Flavor::hesitating, K, w);
    const std::vector<std::pair<std::string, TruncSeries>> objs = {
        {"vac delta", pv->delta},
        {"vac root", pv->root},
        {"vac d3", pv->d3},
        {"vac x*delta/d1", pv->obj1},
        {"hes delta", ph->delta},
    };
    for (const auto& [name, obj] : objs) {
      if (auto d = ct_mismatch(obj.xdx(), {})) return fail(name + ": " + *d);
    }
    return pass();
  }
  if (id == "a1-integrand-reduction") {
    auto pk = flavor_pack(Flavor::vacillating, K, w);
    const TruncSeries& y = pk->root;
    TruncSeries y2 = y * y;
    TruncSeries y3 = y2 * y;
    TruncSeries inner =
        TruncSeries::from_poly(w, LaurentPoly::monomial(w, 2, 1), K) +
        y.mul_poly(lp(w, {{-2, 1}, {1, 1}, {2, 1}})) +
        y2.mul_poly(lp(w, {{-3, 1}, {-1, -1}})) +
        y3.mul_poly(lp(w, {{-2, -1}}));
    TruncSeries j = inner.mul_poly(lp(w, {{-2, 1}, {2, -1}}));
    CtEngine engine(Flavor::vacillating, N, window_extra);
    RatSeries want = engine.eval(a_descriptor("A1")).series;
    RatSeries got = j.ct();
    if (got.known() < N) return fail("insufficient working precision");
    for (int m = std::min(got.val, 0); m < N; ++m) {
      Rat wv = m >= 0 && m < want.known() ? want.at(m) : Rat(0);
      if (got.at(m) != wv) {
        return fail("t^" + std::to_string(m) + ": got " +
                    rat_to_string(got.at(m)) + ", want " + rat_to_string(wv));
      }
    }
    return pass();
  }
  throw std::invalid_argument("unknown identity id: " + id);
}

}  // namespace crosswalks
