#pragma once

#include "ddt/dgla.hpp"
#include "ddt/sympow.hpp"

namespace ddt {

/// L-infinity structure on a graded space V, presented by its operations
/// l_k: Gamma^k(V[1]) -> V[1] of degree +1 up to a weight cutoff. Words are
/// canonical weight-k basis elements over the shifted generators.
struct LInfinity {
    Field field;
    std::vector<std::string> names;
    std::vector<int> degrees;        // degrees in V (cochain)
    long k_max = 4;
    /// ops[k][word] = V-coordinates of l_k(word); absent entries are zero.
    std::map<long, std::map<std::vector<long>, std::vector<Scalar>>> ops;

    long dim() const { return static_cast<long>(names.size()); }
    std::vector<int> shifted_degrees() const;

    std::vector<Scalar> op(long k, const std::vector<long>& word) const;

    /// Weight-w cogenerator component of the coderivation squared, as a map
    /// from the canonical basis of Gamma^w(V[1]) to V; zero iff the weight-w
    /// generalized Jacobi identity holds.
    Matrix coderivation_square(long w) const;

    /// (V, l_1) as a cochain complex.
    GradedComplex tangent_complex() const;
};

/// The L-infinity structure of a DGLA: l_1 = d, l_2 the bracket with the
/// decalage sign l_2(sx, sy) = (-1)^{|x|} s[x,y], higher operations zero.
LInfinity dgla_to_linfinity(const DGLA& l, long k_max = 4);

/// Tensor element in Gamma(V) (+) Gamma(V) x Gamma(V) form used by the
/// comultiplication: list of (left word, right word, coefficient).
using CoproductTerms = std::vector<std::tuple<std::vector<long>, std::vector<long>, Scalar>>;

/// Cofree conilpotent coalgebra truncation: comultiplication of a word.
CoproductTerms comultiplication(const std::vector<long>& word, const std::vector<int>& degrees, const Field& f);

}  // namespace ddt
