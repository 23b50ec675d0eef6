#pragma once

#include <vector>

#include "ddt/complex.hpp"

namespace ddt {

/// Finite-dimensional non-negatively graded cochain DG algebra, unital and
/// graded-commutative. Product tables are stored per degree pair; the
/// column of (a, b) in product[{p,q}] is i * dim(q) + j for basis indices
/// i of A^p and j of A^q.
struct DGAlgebra {
    Field field;
    std::vector<long> dims;                    // dims[n] = dim A^n
    std::vector<std::vector<std::string>> names;
    std::vector<Matrix> diff;                  // diff[n]: A^n -> A^{n+1}
    std::map<std::pair<int, int>, Matrix> product;
    std::vector<Scalar> unit;                  // coordinates in A^0

    long dim(int n) const {
        return (n < 0 || n >= static_cast<int>(dims.size())) ? 0 : dims[static_cast<size_t>(n)];
    }
    int top_degree() const { return static_cast<int>(dims.size()) - 1; }
    Matrix differential_from(int n) const;
    Matrix product_matrix(int p, int q) const;

    std::vector<Scalar> mul(int p, const std::vector<Scalar>& a, int q, const std::vector<Scalar>& b) const;

    const std::string& name(int n, long i) const { return names[static_cast<size_t>(n)][static_cast<size_t>(i)]; }

    GradedComplex underlying_complex() const;

    /// Unit, associativity, graded commutativity, Leibniz, d*d = 0.
    void validate() const;
};

/// Degreewise map of DG algebras.
struct DGAlgebraMap {
    const DGAlgebra* source = nullptr;
    const DGAlgebra* target = nullptr;
    std::vector<Matrix> components;  // components[n]: source A^n -> target A^n

    Matrix component(int n) const;
    /// Multiplicativity, unit and chain-map checks.
    void validate() const;
};

}  // namespace ddt
