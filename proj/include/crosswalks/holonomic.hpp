// Linear recurrences and differential equations with polynomial
// coefficients: exact verification against integer sequences, sequence
// extension, shape-bounded guessing from data, catalog storage, and
// log-scale asymptotic estimation.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crosswalks/rational.hpp"

namespace crosswalks {

// Dense univariate polynomial with exact rational coefficients, ascending
// powers: c[0] + c[1] x + c[2] x^2 + ...
struct Poly {
  std::vector<Rat> c;

  static Poly of(std::vector<Rat> coeffs);
  static Poly from_ints(const std::vector<long>& coeffs);

  int degree() const;  // -1 for the zero polynomial
  bool is_zero() const { return degree() < 0; }
  Rat operator()(const Rat& x) const;  // Horner evaluation

  bool operator==(const Poly& o) const;
  std::string to_string(const std::string& var) const;
};

// Linear recurrence with polynomial coefficients:
//   sum_{i=0}^{order} coef[i](n) * a(n+i) = 0   for every n >= 0.
struct PRecurrence {
  std::vector<Poly> coef;  // size order+1, leading entry nonzero

  int order() const { return static_cast<int>(coef.size()) - 1; }

  // Smallest n with all indices in range where the relation fails; -1 when
  // the recurrence annihilates the whole window. shifts() is the number of
  // n values a sequence of the given length supports.
  long shifts(const IntSeq& seq) const;
  long first_failure(const IntSeq& seq) const;
  bool annihilates(const IntSeq& seq) const { return first_failure(seq) < 0; }

  // Grow seq to target terms by solving for the top index. Requires at
  // least order() initial terms, a leading coefficient that never vanishes
  // at the needed points, and exact integrality of every new term; throws
  // std::domain_error otherwise.
  void extend(IntSeq& seq, long target) const;

  // Canonical form: integer coefficients with overall content one, sign
  // fixed by the first nonzero coefficient of the leading polynomial.
  PRecurrence normalized() const;

  bool operator==(const PRecurrence& o) const;
  std::string to_string() const;
};

// Linear differential equation with polynomial coefficients and a
// polynomial inhomogeneity, acting on a power series f(t):
//   inhom(t) + sum_{j=0}^{order} coef[j](t) * f^(j)(t) = 0.
struct LinearODE {
  Poly inhom;
  std::vector<Poly> coef;  // size order+1

  int order() const { return static_cast<int>(coef.size()) - 1; }

  // Residual series through t^{len(a) - order - 1} for the power series
  // whose coefficients are a[0], a[1], ...; all entries are zero exactly
  // when f satisfies the equation to that depth.
  std::vector<Rat> residual(const IntSeq& a) const;
  long first_failure(const IntSeq& a) const;  // t-order, or -1
  bool annihilates(const IntSeq& a) const { return first_failure(a) < 0; }

  bool operator==(const LinearODE& o) const;
  std::string to_string() const;
};

// Shape-bounded recurrence guessing. Scans (order, degree) pairs in
// lexicographic order, fits a homogeneous integer linear system on all but
// the trailing `holdout` data rows by fraction-free elimination, and
// accepts the first candidate that annihilates the entire sequence
// (held-out rows included). Returns the normalized recurrence, or nullopt.
struct GuessOptions {
  int max_order = 4;
  int max_degree = 3;
  int holdout = 5;
  int min_order = 1;
};
std::optional<PRecurrence> guess_rec(const IntSeq& seq,
                                     const GuessOptions& opt = {});

// Log-scale parameter estimation for a(n) ~ kappa * rho^n / n^alpha, using
// successive-ratio slopes with one Richardson extrapolation step between
// scales n and n/2 (n = last index of the sequence).
//   rho_hat   needs no inputs beyond the data;
//   alpha_hat uses the exact growth base rho;
//   kappa_hat uses rho and alpha_hat rounded to the nearest integer.
struct AsymptoticFit {
  double rho_hat = 0.0;
  double alpha_hat = 0.0;
  int alpha_int = 0;
  double log_kappa = 0.0;
  double kappa_hat = 0.0;
};
AsymptoticFit asymptotic_fit(const IntSeq& seq, double rho);

// Catalog of the recurrences and differential equations satisfied by the
// named walk-count rows. An ODE entry pairs with the recurrence entry that
// shares its anchor (the named_row key of the sequence both constrain).
struct CatalogRecurrence {
  std::string id;
  std::string anchor;
  PRecurrence rec;
  IntSeq initials;  // order() terms pinning the sequence
};
struct CatalogODE {
  std::string id;
  std::string anchor;
  LinearODE ode;
};
struct HolonomicCatalog {
  std::vector<CatalogRecurrence> recurrences;
  std::vector<CatalogODE> odes;

  const CatalogRecurrence* find_rec(const std::string& id) const;
  const CatalogODE* find_ode(const std::string& id) const;
  // Recurrence entry sharing the ODE's anchor, or nullptr.
  const CatalogRecurrence* paired_rec(const CatalogODE& ode) const;
};

// The compiled-in master copy, its JSON serialization, and the default
// on-disk location (data/holonomic_catalog.json in the source tree).
HolonomicCatalog builtin_catalog();
std::string default_catalog_path();
HolonomicCatalog load_catalog(const std::string& path);
void save_catalog(const HolonomicCatalog& cat, const std::string& path);
bool catalogs_equal(const HolonomicCatalog& a, const HolonomicCatalog& b);

// The named_row sequence an anchor refers to, recurrence-extended to
// `terms` entries when the DP row (computed up to dp_terms entries) is
// shorter. Uses the catalog recurrence registered for the anchor.
IntSeq anchored_sequence(const HolonomicCatalog& cat, const std::string& anchor,
                         long terms, int dp_terms = 40);

}  // namespace crosswalks
