#include "crosswalks/holonomic.hpp"

#include <cstdio>
#include <filesystem>

#include "crosswalks/walks.hpp"
#include "doctest.h"

using namespace crosswalks;

namespace {

IntSeq ints(const std::vector<long>& v) {
  IntSeq s;
  for (long x : v) s.emplace_back(x);
  return s;
}

}  // namespace

TEST_CASE("polynomial basics") {
  Poly p = Poly::from_ints({25, 10, 1});  // (n+5)^2
  CHECK(p.degree() == 2);
  CHECK(p(Rat(0)) == 25);
  CHECK(p(Rat(-5)) == 0);
  CHECK(p(Rat(3)) == 64);
  CHECK(p.to_string("n") == "25 + 10*n + n^2");
  CHECK(Poly::from_ints({0, -1, 0, 2}).to_string("t") == "-t + 2*t^3");
  CHECK(Poly::from_ints({}).degree() == -1);
  CHECK(Poly::from_ints({0, 0}).is_zero());
  CHECK(Poly::from_ints({1, 0}) == Poly::from_ints({1}));
}

TEST_CASE("catalog recurrences annihilate the walk rows") {
  const HolonomicCatalog cat = builtin_catalog();
  REQUIRE(cat.recurrences.size() == 8);
  for (const auto& entry : cat.recurrences) {
    CAPTURE(entry.id);
    const IntSeq row = named_row(entry.anchor, 40);
    CHECK(entry.rec.first_failure(row) == -1);
    CHECK(entry.rec.shifts(row) == 40 - entry.rec.order());
    // The catalog initials are the first terms of the row.
    REQUIRE(static_cast<int>(entry.initials.size()) == entry.rec.order());
    for (size_t i = 0; i < entry.initials.size(); ++i) {
      CHECK(row[i] == entry.initials[i]);
    }
    // Extension from the initials reproduces the DP row exactly.
    IntSeq ext = entry.initials;
    entry.rec.extend(ext, 40);
    CHECK(ext == row);
  }
}

TEST_CASE("catalog differential equations have zero residual") {
  const HolonomicCatalog cat = builtin_catalog();
  REQUIRE(cat.odes.size() == 7);
  for (const auto& entry : cat.odes) {
    CAPTURE(entry.id);
    const IntSeq row = named_row(entry.anchor, 40);
    const std::vector<Rat> res = entry.ode.residual(row);
    REQUIRE(static_cast<int>(res.size()) == 40 - entry.ode.order());
    CHECK(entry.ode.first_failure(row) == -1);
  }
}

TEST_CASE("each differential equation is consistent with its recurrence") {
  const HolonomicCatalog cat = builtin_catalog();
  int pairs = 0;
  for (const auto& ode : cat.odes) {
    CAPTURE(ode.id);
    const CatalogRecurrence* rec = cat.paired_rec(ode);
    REQUIRE(rec != nullptr);
    // Recurrence-extend far past the DP window; the equation must keep
    // annihilating the extension, so the two constraints agree deep.
    const IntSeq seq = anchored_sequence(cat, ode.anchor, 120);
    CHECK(rec->rec.first_failure(seq) == -1);
    CHECK(ode.ode.first_failure(seq) == -1);
    ++pairs;
  }
  CHECK(pairs == 7);
}

TEST_CASE("extension guards") {
  SUBCASE("non-integral step throws") {
    PRecurrence r;
    r.coef = {Poly::from_ints({-1}), Poly::from_ints({2})};  // 2 a(n+1) = a(n)
    IntSeq seq = ints({1});
    CHECK_THROWS_AS(r.extend(seq, 3), std::domain_error);
  }
  SUBCASE("vanishing leading coefficient throws") {
    PRecurrence r;
    r.coef = {Poly::from_ints({1}), Poly::from_ints({-3, 1})};  // (n-3) lead
    IntSeq seq = ints({6});
    // a(n+1) = -a(n)/(n-3) works for n = 0,1,2 and must fail at n = 3.
    CHECK_THROWS_AS(r.extend(seq, 6), std::domain_error);
    CHECK(seq.size() == 4);
  }
  SUBCASE("too few initial terms throws") {
    PRecurrence r;
    r.coef = {Poly::from_ints({1}), Poly::from_ints({1}), Poly::from_ints({1})};
    IntSeq seq = ints({1});
    CHECK_THROWS_AS(r.extend(seq, 5), std::domain_error);
  }
}

TEST_CASE("normalization clears denominators, content, and sign") {
  PRecurrence r;
  r.coef = {Poly::of({Rat(2), Rat(4)}), Poly::of({Rat(-6), Rat(1, 2)})};
  // Times 2 clears the denominator; content is then 1; the leading
  // polynomial starts with -12, so every sign flips.
  PRecurrence n = r.normalized();
  CHECK(n.coef[0] == Poly::from_ints({-4, -8}));
  CHECK(n.coef[1] == Poly::from_ints({12, -1}));

  PRecurrence scaled;
  scaled.coef = {Poly::from_ints({6, 9}), Poly::from_ints({3})};
  PRecurrence m = scaled.normalized();
  CHECK(m.coef[0] == Poly::from_ints({2, 3}));
  CHECK(m.coef[1] == Poly::from_ints({1}));
}

TEST_CASE("recurrence guessing recovers the catalog at its shape") {
  const HolonomicCatalog cat = builtin_catalog();
  for (const auto& entry : cat.recurrences) {
    CAPTURE(entry.id);
    const IntSeq row = named_row(entry.anchor, 30);
    GuessOptions opt;
    opt.max_order = entry.rec.order();
    opt.max_degree = 0;
    for (const Poly& p : entry.rec.coef) {
      opt.max_degree = std::max(opt.max_degree, p.degree());
    }
    auto guessed = guess_rec(row, opt);
    REQUIRE(guessed.has_value());
    CHECK(*guessed == entry.rec.normalized());
    // The guess annihilates 100 recurrence-extended terms.
    const IntSeq deep = anchored_sequence(cat, entry.anchor, 100);
    CHECK(guessed->first_failure(deep) == -1);
  }
}

TEST_CASE("a wider degree bound may find a lower-order relation") {
  // With degree 3 allowed, the even chamber row admits a valid order-2
  // recurrence; minimal-order search returns it, and it stays consistent
  // with the catalog extension far past the data it was fit on.
  const HolonomicCatalog cat = builtin_catalog();
  const IntSeq row = named_row("vac-a2-even", 30);
  auto guessed = guess_rec(row, GuessOptions{3, 3, 5, 1});
  REQUIRE(guessed.has_value());
  CHECK(guessed->order() == 2);
  const IntSeq deep = anchored_sequence(cat, "vac-a2-even", 200);
  CHECK(guessed->first_failure(deep) == -1);
}

TEST_CASE("guessing rejects sequences with no small recurrence") {
  // Primes admit no low-order polynomial recurrence.
  const IntSeq primes = ints({2,   3,   5,   7,   11,  13,  17,  19,  23,  29,
                              31,  37,  41,  43,  47,  53,  59,  61,  67,  71,
                              73,  79,  83,  89,  97,  101, 103, 107, 109, 113});
  CHECK_FALSE(guess_rec(primes, GuessOptions{3, 3, 5, 1}).has_value());
}

TEST_CASE("guessing is robust to a corrupted tail") {
  IntSeq row = named_row("vac-a2-even", 30);
  row.back() += 1;
  GuessOptions opt;
  opt.max_order = 3;
  opt.max_degree = 3;
  CHECK_FALSE(guess_rec(row, opt).has_value());
}

TEST_CASE("catalog JSON round-trips and matches the committed file") {
  const HolonomicCatalog cat = builtin_catalog();
  const std::string tmp = "/tmp/crosswalks_catalog_roundtrip.json";
  save_catalog(cat, tmp);
  const HolonomicCatalog back = load_catalog(tmp);
  CHECK(catalogs_equal(cat, back));
  std::filesystem::remove(tmp);

  const HolonomicCatalog committed = load_catalog(default_catalog_path());
  CHECK(catalogs_equal(cat, committed));
}

TEST_CASE("asymptotic fits land on the table constants") {
  const HolonomicCatalog cat = builtin_catalog();
  struct Row {
    const char* anchor;
    double rho;
    int alpha;
    double kappa;  // <= 0 when only reported, not gated
  };
  const std::vector<Row> rows = {
      {"vac-a2-even", 9.0, 3, 3.719},
      {"vac-odd", 9.0, 3, 11.156},
      {"vac-a3", 9.0, 4, 16.732},
      {"vac-a4", 9.0, 4, 8.366},
      {"hes-a2-even", 8.0, 3, 7.835},
      {"hes-odd", 8.0, 3, 15.669},
      {"hes-a3", 8.0, 4, 46.988},
  };
  for (const Row& r : rows) {
    CAPTURE(r.anchor);
    const IntSeq seq = anchored_sequence(cat, r.anchor, 601);
    const AsymptoticFit fit = asymptotic_fit(seq, r.rho);
    CHECK(std::abs(fit.rho_hat - r.rho) / r.rho < 0.01);
    CHECK(std::abs(fit.alpha_hat - r.alpha) < 0.3);
    CHECK(fit.alpha_int == r.alpha);
    CHECK(std::abs(fit.kappa_hat - r.kappa) / r.kappa < 0.15);
  }
}

TEST_CASE("a guessed recurrence extends the start-to-start rows") {
  for (const char* anchor : {"vac-a1", "hes-a1"}) {
    CAPTURE(anchor);
    const IntSeq row = named_row(anchor, 40);
    auto guessed = guess_rec(row, GuessOptions{4, 4, 5, 1});
    REQUIRE(guessed.has_value());
    IntSeq ext(row.begin(), row.begin() + guessed->order());
    guessed->extend(ext, 40);
    CHECK(ext == row);
  }
}
