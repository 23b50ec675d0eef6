#pragma once

#include <vector>

#include "ddt/complex.hpp"

namespace ddt {

/// Simplicial vector space in levels 0..n_max. Operations needing levels
/// beyond the cutoff fail loudly rather than truncating silently.
struct SimplicialVS {
    Field field;
    int n_max = 0;
    std::vector<long> levels;                 // levels[n] = dim, 0 <= n <= n_max
    std::vector<std::vector<Matrix>> faces;   // faces[n][i]: level n -> n-1, 1 <= n, 0 <= i <= n
    std::vector<std::vector<Matrix>> degen;   // degen[n][i]: level n -> n+1, 0 <= n < n_max, 0 <= i <= n

    long level_dim(int n) const { return (n < 0 || n > n_max) ? 0 : levels[static_cast<size_t>(n)]; }
    const Matrix& face(int n, int i) const;
    const Matrix& degeneracy(int n, int i) const;

    /// Checks the simplicial identities on all composable levels.
    void validate() const;
};

/// Normalised chain complex N_n = cap_{i>0} ker(face_i) with differential
/// face_0, together with the inclusion of N_n into level n.
struct Normalization {
    GradedComplex complex;  // chain grading, degrees 0..n_max
    std::vector<Matrix> inclusions;
};

Normalization normalize_s(const SimplicialVS& v);

/// Dold-Kan denormalization of a non-negatively graded chain complex.
/// Level-n basis is indexed by pairs (jump set S of a surjection [n]->>[m],
/// basis element of C_m), ordered by (|S|, S, index).
SimplicialVS denormalize_s(const GradedComplex& c, int n_max);

/// K^n: denormalization of k[-n] (k in chain degree n).
SimplicialVS test_object_k(const Field& f, int n, int n_max);
/// L^n: denormalization of (k in degree n+1 --id--> k in degree n).
SimplicialVS test_object_l(const Field& f, int n, int n_max);

/// Simplicial homotopy groups pi_* = H_*(N^s).
GradedVectorSpace simplicial_homotopy(const SimplicialVS& v);

}  // namespace ddt
