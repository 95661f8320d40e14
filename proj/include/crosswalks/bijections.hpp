// 01-words with the ballot prefix condition, palindromic height-one
// tableaux (oscillating and vacillating), the step encodings between them,
// and small exhaustive enumerators for property checks.
#pragma once

#include <string>
#include <vector>

#include "crosswalks/rational.hpp"

namespace crosswalks {

using Word = std::vector<int>;     // letters 0/1, positions 1-based in math
using Tableau = std::vector<int>;  // one-row partition sizes, entries >= 0

// No initial segment contains more 0s than 1s.
bool in_word_set(const Word& w);
// Number of positions i (1-based) of the given parity with w_i == s.
int odd_count(const Word& w, int s);
int even_count(const Word& w, int s);
// The parity-refined characterization: every initial segment w' satisfies
// even(w',1) >= odd(w',0).
bool parity_prefix_condition(const Word& w);

std::vector<Word> all_words(int n);  // all 2^n words
std::vector<Word> word_set(int n);   // the ballot subset, lex order

// Validity of a full tableau sequence (t[0..len]): oscillating moves are
// exactly +-1 per step; vacillating steps alternate stay-or-delete (odd
// steps, 1-based) with stay-or-add (even steps). Both start at the empty
// shape and stay nonnegative.
bool is_oscillating(const Tableau& t);
bool is_vacillating(const Tableau& t);
bool is_palindromic(const Tableau& t);

// First-half step encoding of a palindromic oscillating tableau of length
// 2n: letter i is 1 when step i adds a square. Returns a word of length n;
// theta_inv rebuilds the palindrome. Both throw on invalid input.
Word theta(const Tableau& o);
Tableau theta_inv(const Word& w);

// Four-case step encoding of a palindromic vacillating tableau of length
// 2n: odd stay -> 1, even add -> 1, even stay -> 0, odd delete -> 0.
Word eta(const Tableau& v);
Tableau eta_inv(const Word& w);

// All palindromic tableaux of length 2n (sequences of 2n+1 entries).
std::vector<Tableau> palindromic_oscillating(int n);
std::vector<Tableau> palindromic_vacillating(int n);

// Word in the ballot set with equally many 0s and 1s (length 2m).
bool is_dyck(const Word& w);

// Noncrossing perfect matchings of [2n], counted by exhaustive enumeration
// of all (2n-1)!! matchings with an arc-crossing filter.
Int count_noncrossing_matchings(int n);

// Deterministic demonstration on the fixed seven-letter example: the
// oscillating palindrome, its word, and the vacillating partner computed
// with eta_inv.
std::string bijection_demo();

}  // namespace crosswalks
