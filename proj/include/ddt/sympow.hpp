#pragma once

#include "ddt/complex.hpp"

namespace ddt {

/// Koszul-sign bookkeeping for words in graded generators. Words are
/// multisets written as ascending index vectors; generators of odd degree
/// may appear at most once.

/// Sort a word into canonical order. Returns the sign picked up from
/// transpositions (0 if an odd generator repeats).
std::pair<std::vector<long>, int> sort_word(std::vector<long> word, const std::vector<int>& degrees);

/// Sign for extracting the letters at `positions` (ascending) to the front
/// of the word, preserving the relative order of both groups.
int extraction_sign(const std::vector<long>& word, const std::vector<size_t>& positions,
                    const std::vector<int>& degrees);

/// All weight-j words over generators 0..n_gen-1 in canonical order
/// (ascending, odd generators distinct), listed lexicographically.
std::vector<std::vector<long>> weight_basis(long n_gen, long j, const std::vector<int>& degrees);

/// Flattened basis of a graded complex: generator -> (degree, index inside
/// the degree component).
struct FlatBasis {
    std::vector<int> degrees;
    std::vector<std::pair<int, long>> location;
    std::map<std::pair<int, long>, long> index;

    static FlatBasis of(const GradedComplex& v);
};

/// Graded symmetric power of a complex (char 0): basis = canonical weight-j
/// words, differential extended by the Leibniz rule with Koszul signs.
GradedComplex symmetric_power_complex(const GradedComplex& v, long j);

/// Graded symmetric power of a graded vector space (dimension count only).
GradedVectorSpace symmetric_power_space(const GradedVectorSpace& v, long j);

}  // namespace ddt
