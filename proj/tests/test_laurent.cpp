#include "crosswalks/laurent.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace crosswalks;

namespace {
const Window W{-8, 8};

LaurentPoly lp(std::vector<std::pair<int, Rat>> terms) {
  return LaurentPoly::from_terms(W, terms);
}
}  // namespace

TEST_CASE("construction and coefficient access") {
  LaurentPoly z = LaurentPoly::zero(W);
  CHECK(z.is_zero());
  CHECK(z.coeff(0) == 0);
  CHECK(z.coeff(3) == 0);

  LaurentPoly m = LaurentPoly::monomial(W, -2, Rat(3, 4));
  CHECK(m.lo() == -2);
  CHECK(m.hi() == -2);
  CHECK(m.coeff(-2) == Rat(3, 4));
  CHECK(m.coeff(0) == 0);

  LaurentPoly p = lp({{0, 1}, {2, -1}, {0, 2}});
  CHECK(p.coeff(0) == 3);
  CHECK(p.coeff(2) == -1);
  CHECK(p.lo() == 0);
  CHECK(p.hi() == 2);

  // Cancelling terms normalize away.
  LaurentPoly q = lp({{5, 1}, {5, -1}, {1, 7}});
  CHECK(q.hi() == 1);

  CHECK_THROWS_AS(LaurentPoly::zero(Window{1, 4}), std::invalid_argument);
  CHECK_THROWS_AS(LaurentPoly::monomial(W, 9, 1), std::runtime_error);
}

TEST_CASE("ring operations") {
  LaurentPoly a = lp({{-1, 1}, {0, 2}, {1, 1}});  // x^-1 + 2 + x  (this is u)
  LaurentPoly b = lp({{0, 1}, {1, -1}});          // 1 - x

  CHECK((a + b) == lp({{-1, 1}, {0, 3}}));
  CHECK((a - a).is_zero());
  CHECK((-b) == lp({{0, -1}, {1, 1}}));
  // u * (1-x) = x^-1 + 1 - x - x^2
  CHECK((a * b) == lp({{-1, 1}, {0, 1}, {1, -1}, {2, -1}}));
  CHECK(a.scaled(Rat(1, 2)) == lp({{-1, Rat(1, 2)}, {0, 1}, {1, Rat(1, 2)}}));
  CHECK(a.shifted(2) == lp({{1, 1}, {2, 2}, {3, 1}}));

  // x * x^-1 = 1
  CHECK((LaurentPoly::monomial(W, 1, 1) * LaurentPoly::monomial(W, -1, 1)) ==
        LaurentPoly::one(W));

  // Exact overflow throws; truncated clips.
  LaurentPoly edge = LaurentPoly::monomial(W, 8, 1);
  CHECK_THROWS_AS(edge * edge, std::runtime_error);
  LaurentPoly clipped = edge.with_truncated() * edge;
  CHECK(clipped.is_zero());
  CHECK(clipped.is_truncated());

  // Window mismatch is a usage error.
  CHECK_THROWS_AS(a + LaurentPoly::one(Window{-2, 2}), std::logic_error);
}

TEST_CASE("derivatives") {
  LaurentPoly p = lp({{-2, 1}, {0, 5}, {3, 2}});
  CHECK(p.dx() == lp({{-3, -2}, {2, 6}}));
  CHECK(p.xdx() == lp({{-2, -2}, {3, 6}}));
  // Constant term vanishes under x d/dx, so coeff(0) of xdx is always 0.
  CHECK(p.xdx().coeff(0) == 0);

  // d/dx at the lower window edge: exact mode throws, truncated clips.
  LaurentPoly low = LaurentPoly::monomial(W, -8, 1);
  CHECK_THROWS_AS(low.dx(), std::runtime_error);
  CHECK(low.with_truncated().dx().is_zero());
}

TEST_CASE("x to 1/x and palindromes") {
  LaurentPoly u = lp({{-1, 1}, {0, 2}, {1, 1}});
  CHECK(u.subst_xinv() == u);
  CHECK(u.is_palindromic());

  LaurentPoly p = lp({{-1, 2}, {3, 1}});
  CHECK(p.subst_xinv() == lp({{-3, 1}, {1, 2}}));
  CHECK(!p.is_palindromic());
  CHECK(p.subst_xinv().subst_xinv() == p);

  CHECK_THROWS_AS(p.with_truncated().subst_xinv(), std::logic_error);
}

TEST_CASE("inverse anchored at the lowest term") {
  // Monomial inverse is exact.
  LaurentPoly m = LaurentPoly::monomial(W, 2, Rat(3));
  LaurentPoly mi = m.inverse_lowest();
  CHECK(!mi.is_truncated());
  CHECK(mi == LaurentPoly::monomial(W, -2, Rat(1, 3)));
  CHECK((m * mi) == LaurentPoly::one(W));

  // 1/(1-x) is the geometric series, truncated at the window.
  LaurentPoly g = lp({{0, 1}, {1, -1}}).inverse_lowest();
  CHECK(g.is_truncated());
  for (int e = 0; e <= 8; ++e) CHECK(g.coeff(e) == 1);
  CHECK(g.coeff(-1) == 0);

  // 1/(1+x) alternates.
  LaurentPoly h = lp({{0, 1}, {1, 1}}).inverse_lowest();
  for (int e = 0; e <= 8; ++e) CHECK(h.coeff(e) == ((e % 2 == 0) ? 1 : -1));

  // (1+x) * 1/(1+x) is exactly 1 after window clipping: the residual term
  // x^9 falls outside and every in-window coefficient cancels.
  CHECK((lp({{0, 1}, {1, 1}}) * h) == LaurentPoly::one(W));

  // Lowest term x^-1: inverse starts at x^1. Because d reaches one step
  // below its top, the product is only trustworthy up to one short of the
  // window top — the signature truncation-edge effect.
  LaurentPoly d = lp({{-1, 1}, {0, 2}});  // x^-1 (1 + 2x)
  LaurentPoly di = d.inverse_lowest();
  CHECK(di.lo() == 1);
  LaurentPoly prod = d * di;
  CHECK(prod.coeff(0) == 1);
  for (int e = 1; e <= 7; ++e) CHECK(prod.coeff(e) == 0);
  for (int e = -8; e < 0; ++e) CHECK(prod.coeff(e) == 0);

  // Rational leading coefficient.
  LaurentPoly r = lp({{0, Rat(2, 3)}, {1, 1}});
  CHECK((r * r.inverse_lowest()) == LaurentPoly::one(W));
}

TEST_CASE("printing") {
  CHECK(LaurentPoly::zero(W).to_string() == "0");
  CHECK(lp({{-1, 1}, {0, 2}, {1, 1}}).to_string() == "x^-1 + 2 + x");
  CHECK(lp({{0, 1}, {1, -3}}).to_string() == "1 - 3*x");
  CHECK(lp({{2, Rat(1, 2)}}).to_string() == "1/2*x^2");
}
