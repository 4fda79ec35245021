#pragma once
// Freely reduced words over a finite alphabet. A letter is a non-zero int:
// +(i+1) is generator i, -(i+1) its inverse.

#include <cstdint>
#include <string>
#include <vector>

namespace znfree {

using Letter = int;
using Word = std::vector<Letter>;

inline Letter inverse_letter(Letter x) { return -x; }

// Appends v to u with free cancellation at the junction.
Word concat_reduce(const Word& u, const Word& v);
Word free_reduce(const Word& w);
Word invert_word(const Word& w);
Word word_power(const Word& w, int64_t k);
bool is_freely_reduced(const Word& w);
bool is_cyclically_reduced_word(const Word& w);

// Length of the longest common prefix of u and v.
size_t common_prefix_length(const Word& u, const Word& v);

// w = c^-1 * core * c with core cyclically reduced.
void cyclic_split(const Word& w, Word& conj, Word& core);

// Shortest root r with w = r^k (w cyclically reduced); returns w for primitive words.
Word primitive_root(const Word& w, int64_t* exponent = nullptr);

// True if u is a cyclic rotation of v (both cyclically reduced).
bool is_rotation(const Word& u, const Word& v, size_t* shift = nullptr);

// Conjugacy in the free group: finds x with x^-1 u x = v.
bool words_conjugate(const Word& u, const Word& v, Word* conjugator = nullptr);

std::string render_word(const Word& w, const std::vector<std::string>& alphabet);

}  // namespace znfree
