#pragma once

#include "ddt/bicomplex.hpp"
#include "ddt/cosimplicial.hpp"
#include "ddt/sympow.hpp"

namespace ddt {

/// Decomposition V ~ U (+) Tot*(H) of a quasi-smooth bicomplex, where H is
/// the homology of Tot(V) (chain-graded) and Tot(U) is acyclic. The witness
/// matrices express the isomorphism [minimal part | U] -> V per spot.
struct MinimalDecomposition {
    Bicomplex minimal_part;  // Tot*(H) truncated like the input
    Bicomplex acyclic_part;  // U
    GradedVectorSpace homology;  // chain-graded dims of H_*(Tot V)
    /// iso[spot]: dim(V_spot) x (dim(W_spot) + dim(U_spot)), invertible,
    /// intertwining both differentials.
    std::map<Spot, Matrix> iso;
};

MinimalDecomposition minimal_decomposition(const Bicomplex& v);

/// Verify the witness: spotwise invertibility and intertwining with both
/// differentials of the direct sum W (+) U against V.
void verify_decomposition(const Bicomplex& v, const MinimalDecomposition& d);

/// Gr^a of the Adams filtration with Lambda = k: the graded symmetric power
/// Symm^a(cot) as a graded vector space (a = 0 gives k in degree 0).
GradedVectorSpace adams_graded_pieces(const GradedVectorSpace& cot, long a);

}  // namespace ddt
