#pragma once

#include <random>
#include <set>

#include "sba/qnum.hpp"

namespace sba {

// A monomial in the generators E_0..E_n, stored as letter indices.
using Word = std::vector<std::uint8_t>;

// Noncommuting (dependent) letters; a letter depends on itself.
inline bool letters_dependent(int g, int h) { return g - h <= 1 && h - g <= 1; }

// Cartier-Foata normal form: each letter is placed in the earliest block after
// the last block containing a dependent letter. Blocks are kept sorted, so
// concatenating them yields the canonical representative of the commutation
// class.
struct CFForm {
  std::vector<std::vector<std::uint8_t>> blocks;
  Word concat() const;
};

CFForm cf_normal_form(const Word& u);
Word canonical_word(const Word& u);

struct Descents {
  std::vector<std::uint8_t> left, right;  // sorted
};
Descents descents(const Word& u);

// The special words of the finite-dimensionalizing relations: I is the product
// of the odd-index generators, J of the even-index ones (I = E_1, J = E_0 at
// n = 1).
Word word_I(int n);
Word word_J(int n);

struct Reduced {
  Scalar coeff;
  Word word;  // canonical
};

// Rewrites u to coeff * (reduced monomial), searching the commutation class
// for square, bounded-braid and IJI/JIJ patterns. Deterministic.
Reduced reduce(const Word& u, int n, const ParamSet& ps);
// Same, but picks uniformly among all applicable rewrites at each step.
Reduced reduce_random(const Word& u, int n, const ParamSet& ps,
                      std::mt19937& rng);
// Test oracle: literal subword search over the explicitly enumerated
// commutation class.
Reduced reduce_bruteforce(const Word& u, int n, const ParamSet& ps);

std::vector<Word> commutation_class(const Word& u, std::size_t limit = 200000);

struct ReducibilityWitness {
  bool reducible = false;
  std::uint8_t s = 0, t = 0;  // witness pair when reducible
};
// u ~ s t v with s, t noncommuting and t not in {E_0, E_n}.
ReducibilityWitness left_reducible(const Word& u, int n);
ReducibilityWitness right_reducible(const Word& u, int n);

// All reduced monomials (canonical forms) by breadth-first closure under
// right multiplication by generators.
std::vector<Word> enumerate_reduced(int n, std::size_t budget = 2000000);

// Index string with CF block separators, e.g. "(0 2)(1)"; empty word -> "1".
std::string word_to_string(const Word& u);
// Pretty generator names: E, E_i, F.
std::string word_to_names(const Word& u, int n);

}  // namespace sba
