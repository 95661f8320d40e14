#include "crosswalks/holonomic.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "crosswalks/walks.hpp"
#include "json.hpp"

namespace crosswalks {

// ---------------------------------------------------------------------------
// Poly
// ---------------------------------------------------------------------------

Poly Poly::of(std::vector<Rat> coeffs) { return Poly{std::move(coeffs)}; }

Poly Poly::from_ints(const std::vector<long>& coeffs) {
  Poly p;
  p.c.reserve(coeffs.size());
  for (long v : coeffs) p.c.emplace_back(v);
  return p;
}

int Poly::degree() const {
  for (int d = static_cast<int>(c.size()) - 1; d >= 0; --d) {
    if (c[d] != 0) return d;
  }
  return -1;
}

Rat Poly::operator()(const Rat& x) const {
  Rat acc = 0;
  for (int d = static_cast<int>(c.size()) - 1; d >= 0; --d) acc = acc * x + c[d];
  return acc;
}

bool Poly::operator==(const Poly& o) const {
  const size_t n = std::max(c.size(), o.c.size());
  for (size_t d = 0; d < n; ++d) {
    const Rat a = d < c.size() ? c[d] : Rat(0);
    const Rat b = d < o.c.size() ? o.c[d] : Rat(0);
    if (a != b) return false;
  }
  return true;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int d = 0; d < static_cast<int>(c.size()); ++d) {
    if (c[d] == 0) continue;
    std::string term;
    const std::string s = rat_to_string(c[d]);
    if (d == 0) {
      term = s;
    } else {
      if (s == "1") {
        term = var;
      } else if (s == "-1") {
        term = "-" + var;
      } else {
        term = s + "*" + var;
      }
      if (d > 1) term += "^" + std::to_string(d);
    }
    if (out.empty()) {
      out = term;
    } else if (!term.empty() && term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// PRecurrence
// ---------------------------------------------------------------------------

long PRecurrence::shifts(const IntSeq& seq) const {
  const long s = static_cast<long>(seq.size()) - order();
  return s > 0 ? s : 0;
}

long PRecurrence::first_failure(const IntSeq& seq) const {
  const long bound = shifts(seq);
  for (long n = 0; n < bound; ++n) {
    Rat s = 0;
    for (int i = 0; i <= order(); ++i) {
      s += coef[i](Rat(static_cast<long>(n))) * Rat(seq[n + i]);
    }
    if (s != 0) return n;
  }
  return -1;
}

void PRecurrence::extend(IntSeq& seq, long target) const {
  const int r = order();
  if (static_cast<long>(seq.size()) < r) {
    throw std::domain_error("extend: fewer initial terms than the order");
  }
  while (static_cast<long>(seq.size()) < target) {
    const long n = static_cast<long>(seq.size()) - r;
    const Rat lead = coef[r](Rat(n));
    if (lead == 0) {
      throw std::domain_error("extend: leading coefficient vanishes at n = " +
                              std::to_string(n));
    }
    Rat s = 0;
    for (int i = 0; i < r; ++i) s += coef[i](Rat(n)) * Rat(seq[n + i]);
    Rat next = -s / lead;
    if (!is_integer(next)) {
      throw std::domain_error("extend: non-integral term at n = " +
                              std::to_string(n));
    }
    seq.push_back(next.get_num());
  }
}

PRecurrence PRecurrence::normalized() const {
  // Clear denominators, divide out the content, and fix the sign by the
  // first nonzero coefficient of the leading polynomial.
  Int den_lcm = 1;
  for (const Poly& p : coef) {
    for (const Rat& q : p.c) {
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
              q.get_den().get_mpz_t());
    }
  }
  Int content = 0;
  for (const Poly& p : coef) {
    for (const Rat& q : p.c) {
      Int v = q.get_num() * divexact(den_lcm, q.get_den());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    }
  }
  if (content == 0) throw std::domain_error("normalized: zero recurrence");
  int sign = 0;
  for (const Rat& q : coef.back().c) {
    if (q != 0) {
      sign = q > 0 ? 1 : -1;
      break;
    }
  }
  if (sign == 0) throw std::domain_error("normalized: zero leading polynomial");
  PRecurrence out;
  out.coef.reserve(coef.size());
  for (const Poly& p : coef) {
    Poly np;
    np.c.reserve(p.c.size());
    for (const Rat& q : p.c) {
      Int v = q.get_num() * divexact(den_lcm, q.get_den());
      v = divexact(v, content);
      if (sign < 0) v = -v;
      np.c.emplace_back(v);
    }
    out.coef.push_back(std::move(np));
  }
  return out;
}

bool PRecurrence::operator==(const PRecurrence& o) const {
  if (order() != o.order()) return false;
  for (size_t i = 0; i < coef.size(); ++i) {
    if (!(coef[i] == o.coef[i])) return false;
  }
  return true;
}

std::string PRecurrence::to_string() const {
  std::string out;
  for (int i = 0; i <= order(); ++i) {
    if (coef[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coef[i].to_string("n") + ")*a(n";
    if (i > 0) out += "+" + std::to_string(i);
    out += ")";
  }
  return out + " = 0";
}

// ---------------------------------------------------------------------------
// LinearODE
// ---------------------------------------------------------------------------

namespace {

// s * (s+1) * ... * (s+j-1); the factor carrying f^(j) coefficients.
Int rising(long s, int j) {
  Int f = 1;
  for (int t = 0; t < j; ++t) f *= Int(s + t);
  return f;
}

}  // namespace

std::vector<Rat> LinearODE::residual(const IntSeq& a) const {
  const int r = order();
  const long m_max = static_cast<long>(a.size()) - r;
  std::vector<Rat> out;
  if (m_max <= 0) return out;
  out.reserve(m_max);
  for (long m = 0; m < m_max; ++m) {
    Rat s = m < static_cast<long>(inhom.c.size()) ? inhom.c[m] : Rat(0);
    for (int j = 0; j <= r; ++j) {
      const Poly& p = coef[j];
      for (long d = 0; d < static_cast<long>(p.c.size()); ++d) {
        if (p.c[d] == 0 || m < d) continue;
        // [t^{m-d}] f^(j) = (m-d+1)...(m-d+j) * a[m-d+j]
        s += p.c[d] * Rat(rising(m - d + 1, j) * a[m - d + j]);
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

long LinearODE::first_failure(const IntSeq& a) const {
  const std::vector<Rat> res = residual(a);
  for (long m = 0; m < static_cast<long>(res.size()); ++m) {
    if (res[m] != 0) return m;
  }
  return -1;
}

bool LinearODE::operator==(const LinearODE& o) const {
  if (order() != o.order() || !(inhom == o.inhom)) return false;
  for (size_t j = 0; j < coef.size(); ++j) {
    if (!(coef[j] == o.coef[j])) return false;
  }
  return true;
}

std::string LinearODE::to_string() const {
  std::string out;
  if (!inhom.is_zero()) out = "(" + inhom.to_string("t") + ")";
  for (int j = 0; j <= order(); ++j) {
    if (coef[j].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coef[j].to_string("t") + ")*f";
    for (int q = 0; q < j; ++q) out += "'";
    out += "(t)";
  }
  return out + " = 0";
}

// ---------------------------------------------------------------------------
// Recurrence guessing
// ---------------------------------------------------------------------------

namespace {

// Fraction-free (Bareiss) row echelon reduction of an integer matrix, with
// column skipping on rank deficiency. Returns the pivot columns.
std::vector<int> bareiss_echelon(std::vector<std::vector<Int>>& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  std::vector<int> pivot_cols;
  Int prev = 1;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int sel = -1;
    for (int r = row; r < rows; ++r) {
      if (m[r][col] != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(m[sel], m[row]);
    for (int r = row + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c) {
        m[r][c] = divexact(m[row][col] * m[r][c] - m[r][col] * m[row][c],
                           prev);
      }
      m[r][col] = 0;
    }
    prev = m[row][col];
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

// One nonzero rational nullspace vector (first free variable set to 1), or
// empty when the matrix has full column rank.
std::vector<Rat> nullspace_vector(std::vector<std::vector<Int>> m) {
  const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  const std::vector<int> pivots = bareiss_echelon(m);
  if (static_cast<int>(pivots.size()) >= cols) return {};
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  int free_col = -1;
  for (int c = 0; c < cols; ++c) {
    if (!is_pivot[c]) {
      free_col = c;
      break;
    }
  }
  std::vector<Rat> x(cols, Rat(0));
  x[free_col] = 1;
  for (int p = static_cast<int>(pivots.size()) - 1; p >= 0; --p) {
    const int pc = pivots[p];
    Rat s = 0;
    for (int c = pc + 1; c < cols; ++c) {
      if (x[c] != 0) s += Rat(m[p][c]) * x[c];
    }
    x[pc] = -s / Rat(m[p][pc]);
  }
  return x;
}

Int int_pow(long base, int e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(e));
  return r;
}

}  // namespace

std::optional<PRecurrence> guess_rec(const IntSeq& seq,
                                     const GuessOptions& opt) {
  const long len = static_cast<long>(seq.size());
  for (int r = std::max(1, opt.min_order); r <= opt.max_order; ++r) {
    for (int deg = 0; deg <= opt.max_degree; ++deg) {
      const int unknowns = (r + 1) * (deg + 1);
      const long fit_rows = len - r - opt.holdout;
      // Keep the fit overdetermined; too little data proves nothing.
      if (fit_rows < unknowns + 2) continue;
      std::vector<std::vector<Int>> m(fit_rows,
                                      std::vector<Int>(unknowns, Int(0)));
      for (long n = 0; n < fit_rows; ++n) {
        for (int i = 0; i <= r; ++i) {
          for (int d = 0; d <= deg; ++d) {
            m[n][i * (deg + 1) + d] = int_pow(n, d) * seq[n + i];
          }
        }
      }
      const std::vector<Rat> x = nullspace_vector(std::move(m));
      if (x.empty()) continue;
      PRecurrence cand;
      cand.coef.resize(r + 1);
      for (int i = 0; i <= r; ++i) {
        cand.coef[i].c.assign(x.begin() + i * (deg + 1),
                              x.begin() + (i + 1) * (deg + 1));
      }
      // A vanishing leading polynomial means the true relation has lower
      // order; that shape was already scanned, so reject this one.
      if (cand.coef[r].is_zero()) continue;
      if (cand.first_failure(seq) >= 0) continue;  // held-out rows disagree
      return cand.normalized();
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Asymptotic estimation
// ---------------------------------------------------------------------------

namespace {

double log_int(const Int& z) {
  signed long e = 0;
  const double d = mpz_get_d_2exp(&e, z.get_mpz_t());
  return std::log(d) + static_cast<double>(e) * std::log(2.0);
}

}  // namespace

AsymptoticFit asymptotic_fit(const IntSeq& seq, double rho) {
  const long n = static_cast<long>(seq.size()) - 1;
  if (n < 16) throw std::invalid_argument("asymptotic_fit: sequence too short");
  const long h = n / 2;
  const double log_rho = std::log(rho);
  const auto ratio = [&seq](long i) {
    return log_int(seq[i]) - log_int(seq[i - 1]);
  };
  const auto alpha_at = [&](long i) {
    return static_cast<double>(i) * (log_rho - ratio(i));
  };
  AsymptoticFit fit;
  fit.rho_hat = std::exp(2.0 * ratio(n) - ratio(h));
  fit.alpha_hat = 2.0 * alpha_at(n) - alpha_at(h);
  fit.alpha_int = static_cast<int>(std::lround(fit.alpha_hat));
  const auto log_kappa_at = [&](long i) {
    return log_int(seq[i]) - static_cast<double>(i) * log_rho +
           static_cast<double>(fit.alpha_int) *
               std::log(static_cast<double>(i));
  };
  fit.log_kappa = 2.0 * log_kappa_at(n) - log_kappa_at(h);
  fit.kappa_hat = std::exp(fit.log_kappa);
  return fit;
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

namespace {

PRecurrence rec_of(const std::vector<std::vector<long>>& coef) {
  PRecurrence r;
  r.coef.reserve(coef.size());
  for (const auto& p : coef) r.coef.push_back(Poly::from_ints(p));
  return r;
}

LinearODE ode_of(const std::vector<long>& inhom,
                 const std::vector<std::vector<long>>& coef) {
  LinearODE o;
  o.inhom = Poly::from_ints(inhom);
  o.coef.reserve(coef.size());
  for (const auto& p : coef) o.coef.push_back(Poly::from_ints(p));
  return o;
}

IntSeq ints(const std::vector<long>& v) {
  IntSeq s;
  s.reserve(v.size());
  for (long x : v) s.emplace_back(x);
  return s;
}

}  // namespace

const CatalogRecurrence* HolonomicCatalog::find_rec(
    const std::string& id) const {
  for (const auto& r : recurrences) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

const CatalogODE* HolonomicCatalog::find_ode(const std::string& id) const {
  for (const auto& o : odes) {
    if (o.id == id) return &o;
  }
  return nullptr;
}

const CatalogRecurrence* HolonomicCatalog::paired_rec(
    const CatalogODE& ode) const {
  for (const auto& r : recurrences) {
    if (r.anchor == ode.anchor) return &r;
  }
  return nullptr;
}

HolonomicCatalog builtin_catalog() {
  HolonomicCatalog cat;
  cat.recurrences = {
      {"vac-a2-even-rec", "vac-a2-even",
       rec_of({{0, 54, 27}, {-81, -78, -21}, {-84, -50, -7}, {25, 10, 1}}),
       ints({1, 2, 7})},
      {"vac-odd-rec", "vac-odd",
       rec_of({{18, 27, 9}, {-86, -60, -10}, {20, 9, 1}}), ints({1, 3})},
      {"vac-a3-rec", "vac-a3",
       rec_of({{0, 27, 9}, {-60, -52, -10}, {20, 9, 1}}), ints({1, 2})},
      {"vac-a4-rec", "vac-a4",
       rec_of({{0, 27, 9}, {-60, -52, -10}, {20, 9, 1}}), ints({1, 1})},
      {"vac-a4-odd-rec", "vac-a4-odd",
       rec_of({{36, 36, 9}, {-93, -62, -10}, {25, 10, 1}}), ints({1, 2})},
      {"hes-a2-even-rec", "hes-a2-even",
       rec_of({{24, 32, 8}, {58, 41, 7}, {-20, -9, -1}}), ints({1, 2})},
      {"hes-odd-rec", "hes-odd",
       rec_of({{128, 128, 32}, {328, 220, 36}, {56, 26, 3}, {-36, -12, -1}}),
       ints({1, 3, 11})},
      {"hes-a3-rec", "hes-a3",
       rec_of({{16, 24, 8}, {82, 49, 7}, {-30, -11, -1}}), ints({1, 2})},
  };
  cat.odes = {
      {"vac-a2-even-ode", "vac-a2-even",
       ode_of({-4, -6, -6}, {{4, -12, -24},
                             {0, 5, -29, -57, 81},
                             {0, 0, 1, -7, -21, 27}})},
      {"vac-odd-ode", "vac-odd",
       ode_of({6}, {{-6, 36, -18}, {0, -6, 50, -36}, {0, 0, -1, 10, -9}})},
      {"vac-a3-ode", "vac-a3",
       ode_of({-6, -6}, {{6, -18}, {0, 6, -42, 36}, {0, 0, 1, -10, 9}})},
      {"vac-a4-ode", "vac-a4",
       ode_of({-6, 6}, {{6, -18}, {0, 6, -42, 36}, {0, 0, 1, -10, 9}})},
      {"hes-a2-even-ode", "hes-a2-even",
       ode_of({6}, {{-6, 24, 24}, {0, -6, 34, 40}, {0, 0, -1, 7, 8}})},
      {"hes-odd-ode", "hes-odd",
       ode_of({9, 32, 32}, {{-9, 16, 144, 128},
                            {0, -7, 17, 184, 160},
                            {0, 0, -1, 3, 36, 32}})},
      {"hes-a3-ode", "hes-a3",
       ode_of({12}, {{-12, 40, 16}, {0, -8, 42, 32}, {0, 0, -1, 7, 8}})},
  };
  return cat;
}

std::string default_catalog_path() {
#ifdef CROSSWALKS_DATA_DIR
  return std::string(CROSSWALKS_DATA_DIR) + "/holonomic_catalog.json";
#else
  return "data/holonomic_catalog.json";
#endif
}

namespace {

using nlohmann::json;

json poly_to_json(const Poly& p) {
  json a = json::array();
  for (const Rat& q : p.c) {
    if (!is_integer(q)) {
      throw std::domain_error("catalog polynomials must be integral");
    }
    if (!q.get_num().fits_slong_p()) {
      throw std::domain_error("catalog coefficient out of range");
    }
    a.push_back(static_cast<long>(q.get_num().get_si()));
  }
  return a;
}

Poly poly_from_json(const json& a) {
  std::vector<long> v;
  v.reserve(a.size());
  for (const auto& e : a) v.push_back(e.get<long>());
  return Poly::from_ints(v);
}

}  // namespace

void save_catalog(const HolonomicCatalog& cat, const std::string& path) {
  json j;
  j["format"] = "crosswalks-holonomic-catalog";
  j["version"] = 1;
  j["recurrences"] = json::array();
  for (const auto& r : cat.recurrences) {
    json e;
    e["id"] = r.id;
    e["anchor"] = r.anchor;
    e["coef"] = json::array();
    for (const Poly& p : r.rec.coef) e["coef"].push_back(poly_to_json(p));
    e["initials"] = json::array();
    for (const Int& v : r.initials) e["initials"].push_back(v.get_str());
    j["recurrences"].push_back(std::move(e));
  }
  j["odes"] = json::array();
  for (const auto& o : cat.odes) {
    json e;
    e["id"] = o.id;
    e["anchor"] = o.anchor;
    e["inhom"] = poly_to_json(o.ode.inhom);
    e["coef"] = json::array();
    for (const Poly& p : o.ode.coef) e["coef"].push_back(poly_to_json(p));
    j["odes"].push_back(std::move(e));
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

HolonomicCatalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  json j;
  in >> j;
  if (j.value("format", "") != "crosswalks-holonomic-catalog") {
    throw std::runtime_error("not a holonomic catalog: " + path);
  }
  HolonomicCatalog cat;
  for (const auto& e : j.at("recurrences")) {
    CatalogRecurrence r;
    r.id = e.at("id").get<std::string>();
    r.anchor = e.at("anchor").get<std::string>();
    for (const auto& p : e.at("coef")) r.rec.coef.push_back(poly_from_json(p));
    for (const auto& v : e.at("initials")) {
      r.initials.push_back(parse_int(v.get<std::string>()));
    }
    cat.recurrences.push_back(std::move(r));
  }
  for (const auto& e : j.at("odes")) {
    CatalogODE o;
    o.id = e.at("id").get<std::string>();
    o.anchor = e.at("anchor").get<std::string>();
    o.ode.inhom = poly_from_json(e.at("inhom"));
    for (const auto& p : e.at("coef")) o.ode.coef.push_back(poly_from_json(p));
    cat.odes.push_back(std::move(o));
  }
  return cat;
}

bool catalogs_equal(const HolonomicCatalog& a, const HolonomicCatalog& b) {
  if (a.recurrences.size() != b.recurrences.size()) return false;
  if (a.odes.size() != b.odes.size()) return false;
  for (size_t i = 0; i < a.recurrences.size(); ++i) {
    const auto& x = a.recurrences[i];
    const auto& y = b.recurrences[i];
    if (x.id != y.id || x.anchor != y.anchor || !(x.rec == y.rec) ||
        x.initials != y.initials) {
      return false;
    }
  }
  for (size_t i = 0; i < a.odes.size(); ++i) {
    const auto& x = a.odes[i];
    const auto& y = b.odes[i];
    if (x.id != y.id || x.anchor != y.anchor || !(x.ode == y.ode)) {
      return false;
    }
  }
  return true;
}

IntSeq anchored_sequence(const HolonomicCatalog& cat, const std::string& anchor,
                         long terms, int dp_terms) {
  const int base = static_cast<int>(std::min<long>(terms, dp_terms));
  IntSeq seq = named_row(anchor, base);
  if (static_cast<long>(seq.size()) >= terms) return seq;
  for (const auto& r : cat.recurrences) {
    if (r.anchor == anchor) {
      r.rec.extend(seq, terms);
      return seq;
    }
  }
  throw std::invalid_argument("no catalog recurrence anchored at " + anchor);
}

}  // namespace crosswalks
