#include "crosswalks/bijections.hpp"

#include <algorithm>
#include <set>

#include "crosswalks/oracles.hpp"
#include "crosswalks/partitions.hpp"
#include "doctest.h"

using namespace crosswalks;

TEST_CASE("ballot words are counted by central binomials") {
  for (int n = 0; n <= 14; ++n) {
    CAPTURE(n);
    CHECK(Int(word_set(n).size()) == central_binomial(n));
  }
}

TEST_CASE("the two prefix conditions agree on every word") {
  for (int n = 0; n <= 12; ++n) {
    for (const Word& w : all_words(n)) {
      CHECK(in_word_set(w) == parity_prefix_condition(w));
    }
  }
}

TEST_CASE("parity counters split the word") {
  // w = 1101001: odd positions carry 1,0,0,1; even positions carry 1,1,0.
  const Word w = {1, 1, 0, 1, 0, 0, 1};
  CHECK(odd_count(w, 1) == 2);
  CHECK(odd_count(w, 0) == 2);
  CHECK(even_count(w, 1) == 2);
  CHECK(even_count(w, 0) == 1);
  CHECK(odd_count(w, 1) + odd_count(w, 0) + even_count(w, 1) +
            even_count(w, 0) ==
        static_cast<int>(w.size()));
}

TEST_CASE("first-half step encoding is a bijection") {
  for (int n = 0; n <= 12; ++n) {
    CAPTURE(n);
    const std::vector<Tableau> all = palindromic_oscillating(n);
    CHECK(Int(all.size()) == central_binomial(n));
    std::set<Word> images;
    for (const Tableau& o : all) {
      REQUIRE(is_oscillating(o));
      REQUIRE(is_palindromic(o));
      const Word w = theta(o);
      CHECK(in_word_set(w));
      CHECK(theta_inv(w) == o);
      images.insert(w);
    }
    CHECK(images.size() == all.size());  // injective
    const std::vector<Word> words = word_set(n);
    CHECK(images.size() == words.size());  // and onto the ballot set
    for (const Word& w : words) CHECK(theta(theta_inv(w)) == w);
  }
}

TEST_CASE("four-case step encoding is a bijection") {
  for (int n = 0; n <= 12; ++n) {
    CAPTURE(n);
    const std::vector<Tableau> all = palindromic_vacillating(n);
    CHECK(Int(all.size()) == central_binomial(n));
    std::set<Word> images;
    for (const Tableau& v : all) {
      REQUIRE(is_vacillating(v));
      REQUIRE(is_palindromic(v));
      const Word w = eta(v);
      CHECK(in_word_set(w));
      CHECK(eta_inv(w) == v);
      images.insert(w);
    }
    CHECK(images.size() == all.size());
    CHECK(images.size() == word_set(n).size());
    for (const Word& w : word_set(n)) CHECK(eta(eta_inv(w)) == w);
  }
}

TEST_CASE("mirror-symmetric noncrossing partitions match the word count") {
  for (int n = 1; n <= 10; ++n) {
    CAPTURE(n);
    PartitionFilter f;
    f.noncross_k = 2;
    f.bisymmetric = true;
    CHECK(count_partitions(n, f) == central_binomial(n));
  }
}

TEST_CASE("balanced words, matchings, and noncrossing partitions agree") {
  for (int m = 0; m <= 7; ++m) {
    CAPTURE(m);
    long dyck = 0;
    for (const Word& w : word_set(2 * m)) {
      if (is_dyck(w)) ++dyck;
    }
    const Int cat = catalan(m);
    CHECK(Int(dyck) == cat);
    CHECK(count_noncrossing_matchings(m) == cat);
    if (m >= 1) {
      PartitionFilter f;
      f.noncross_k = 2;
      CHECK(count_partitions(m, f) == cat);
    }
  }
}

TEST_CASE("balance characterization of the even-length restriction") {
  // Inside the ballot set of even length, equal letter counts is the same
  // as even(w,1) == odd(w,0).
  for (int m = 1; m <= 6; ++m) {
    for (const Word& w : word_set(2 * m)) {
      const bool balanced =
          std::count(w.begin(), w.end(), 1) * 2 == static_cast<long>(w.size());
      CHECK(balanced == (even_count(w, 1) == odd_count(w, 0)));
      CHECK(is_dyck(w) == balanced);
    }
  }
}

TEST_CASE("the worked example runs end to end") {
  const Tableau osc = {0, 1, 2, 1, 2, 1, 0, 1, 0, 1, 2, 1, 2, 1, 0};
  const Word expected_word = {1, 1, 0, 1, 0, 0, 1};
  CHECK(theta(osc) == expected_word);
  const Tableau partner = {0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0};
  CHECK(eta_inv(expected_word) == partner);
  CHECK(eta(partner) == expected_word);

  const std::string demo = bijection_demo();
  CHECK(demo ==
        "oscillating palindrome:  0 1 2 1 2 1 0 1 0 1 2 1 2 1 0\n"
        "step word:               1101001\n"
        "vacillating palindrome:  0 0 1 0 1 0 0 0 0 0 1 0 1 0 0\n"
        "round trip:              consistent\n");
}

TEST_CASE("invalid inputs are rejected") {
  CHECK_THROWS_AS(theta({0, 1, 1, 0, 0}), std::invalid_argument);  // flat step
  CHECK_THROWS_AS(theta({0, 1, 0, 1}), std::invalid_argument);     // even size
  CHECK_THROWS_AS(theta({0, 1, 2, 3, 4}), std::invalid_argument);  // no mirror
  CHECK_THROWS_AS(eta({0, 1, 0}), std::invalid_argument);  // odd step adds
  CHECK_THROWS_AS(theta_inv({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(eta_inv({1, 0, 0, 0}), std::invalid_argument);
}
