#pragma once

#include <random>

#include "ddt/artinian.hpp"
#include "ddt/bicomplex.hpp"
#include "ddt/dgalgebra.hpp"

namespace ddt {

using Rng = std::mt19937_64;

/// Uniform scalar with small integer numerator (|n| <= 2 over Q, any
/// residue over F_p).
Scalar random_scalar(const Field& f, Rng& rng);
Matrix random_matrix(const Field& f, long rows, long cols, Rng& rng);

/// Random complex with d*d = 0: dims <= max_dim on [lo, hi], differentials
/// built through cokernel projections.
GradedComplex random_complex(const Field& f, Grading g, int lo, int hi, long max_dim, Rng& rng);

/// Random finite-support graded vector space.
GradedVectorSpace random_graded_space(int lo, int hi, long max_dim, Rng& rng);

/// Random quasi-smooth bicomplex: Tot*(H) for a random graded space H,
/// direct-summed with random commuting squares, then conjugated by random
/// spotwise basis changes. Returns the instance and the planted H.
struct QuasiSmoothInstance {
    Bicomplex bicomplex;
    GradedVectorSpace homology;
};
QuasiSmoothInstance random_quasi_smooth(const Field& f, int bound, int h_lo, int h_hi, long h_dim, int squares,
                                        Rng& rng);

/// Random unital graded-commutative DG algebra: free on generators of
/// degree 1 or 2, truncated above top_degree, with random cocycle
/// differentials on the generators. Dimensions per degree stay small.
DGAlgebra random_dg_algebra(const Field& f, int n_generators, int top_degree, Rng& rng);

}  // namespace ddt
