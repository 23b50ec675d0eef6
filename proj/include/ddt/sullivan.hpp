#pragma once

#include "ddt/dgalgebra.hpp"

namespace ddt {

/// Polynomial differential forms on the n-simplex in the affine chart
/// t_0 = 1 - sum t_i, truncated at total polynomial degree d_max (dt_i
/// counts 1). Monomials are t^alpha dt_S with |alpha| + |S| <= d_max.
struct SullivanForms {
    int n = 0;
    int d_max = 4;
    DGAlgebra algebra;  // graded by form degree |S|

    /// Monomials per form degree, each (exponents alpha, dt-set bitmask),
    /// in deterministic order.
    std::vector<std::vector<std::pair<std::vector<int>, unsigned>>> monomials;

    long index_of(int form_degree, const std::vector<int>& alpha, unsigned mask) const;
    std::string monomial_name(int form_degree, long index) const;
};

SullivanForms sullivan(const Field& f, int n, int d_max);

/// Pullback along the i-th coface (restriction to the i-th face):
/// matrices per form degree, 𝒜_n -> 𝒜_{n-1}.
std::vector<Matrix> sullivan_face(const SullivanForms& src, const SullivanForms& tgt, int i);

/// Pullback along the i-th codegeneracy: 𝒜_n -> 𝒜_{n+1}.
std::vector<Matrix> sullivan_degeneracy(const SullivanForms& src, const SullivanForms& tgt, int i);

/// Evaluate a 0-form of 𝒜_1 at the point t.
Scalar evaluate_0form(const SullivanForms& a1, const std::vector<Scalar>& coeffs, const Scalar& t);

/// Integrate a 1-form f dt over [0,1]: integral of t^k dt = 1/(k+1).
Scalar integrate(const SullivanForms& a1, const std::vector<Scalar>& one_form);

}  // namespace ddt
