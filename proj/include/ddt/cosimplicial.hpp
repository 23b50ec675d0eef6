#pragma once

#include "ddt/bicomplex.hpp"
#include "ddt/dgalgebra.hpp"

namespace ddt {

/// Cosimplicial vector space in levels 0..n_max: cofaces d^i raise the
/// level, codegeneracies s^i lower it.
struct CosimplicialVS {
    Field field;
    int n_max = 0;
    std::vector<long> levels;
    std::vector<std::vector<Matrix>> cofaces;   // cofaces[n][i]: level n -> n+1, 0 <= i <= n+1, n < n_max
    std::vector<std::vector<Matrix>> codegen;   // codegen[n][i]: level n -> n-1, 0 <= i <= n-1, n >= 1

    long level_dim(int n) const { return (n < 0 || n > n_max) ? 0 : levels[static_cast<size_t>(n)]; }
    const Matrix& coface(int n, int i) const;
    const Matrix& codegeneracy(int n, int i) const;

    void validate() const;
};

/// Denormalization D(A) of a cochain DG algebra, with the Eilenberg-Zilber
/// shuffle product on each level. The level-n basis is indexed by pairs
/// (J subset of {1..n}, basis element of A^{n-|J|}), ordered by
/// (|J|, J, index).
struct CosimplicialAlgebra {
    const DGAlgebra* algebra = nullptr;
    CosimplicialVS spaces;
    /// products[n]: level-n shuffle product, dim x dim*dim (column = i*dim+j).
    std::vector<Matrix> products;
    /// units[n]: coordinates of the level-n unit (J = {1..n}, 1).
    std::vector<std::vector<Scalar>> units;
    /// Basis labels per level.
    std::vector<std::vector<std::pair<std::vector<int>, long>>> basis;

    long index_of(int n, const std::vector<int>& j_set, long e) const;
    std::vector<Scalar> mul(int n, const std::vector<Scalar>& a, const std::vector<Scalar>& b) const;
};

CosimplicialAlgebra denormalize_c(const DGAlgebra& a, int n_max);

/// Product of two basis elements (i_set, a) and (j_set, b) of level n,
/// per the shuffle formula; returns level-n coordinates.
std::vector<Scalar> shuffle_product(const CosimplicialAlgebra& d, int n, const std::vector<int>& i_set, long a,
                                    const std::vector<int>& j_set, long b);

/// Sign (-1)^{(S,T)} of the shuffle permutation for disjoint integer sets.
int shuffle_sign(const std::vector<int>& s, const std::vector<int>& t);

/// Conormalization N^n = cap ker(codegeneracies) with d = sum (-1)^i d^i.
struct Conormalization {
    GradedComplex complex;  // cochain grading
    std::vector<Matrix> inclusions;
};
Conormalization conormalize_c(const CosimplicialVS& v);

/// Quasi-smoothness certificate for a bicomplex: every row (fixed chain
/// degree) acyclic in all cochain degrees, every column acyclic in positive
/// chain degrees.
void require_quasi_smooth(const Bicomplex& b);
bool is_quasi_smooth(const Bicomplex& b, std::string* reason = nullptr);

/// Corner truncation: column 0 kept, column n > 0 replaced by H_0 of its
/// chain direction. Input must be quasi-smooth.
Bicomplex lrcorner(const Bicomplex& b);

}  // namespace ddt
