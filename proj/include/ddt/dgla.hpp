#pragma once

#include <string>
#include <vector>

#include "ddt/complex.hpp"

namespace ddt {

/// Differential graded Lie algebra with a named homogeneous basis. Degrees
/// are cochain degrees (d raises by 1). Characteristics 2 and 3 are
/// rejected.
class DGLA {
public:
    struct Raw {
        Field field;
        std::vector<std::string> names;
        std::vector<int> degrees;
        /// bracket[{i,j}]: coordinates of [basis_i, basis_j]; the missing
        /// order is derived from graded antisymmetry.
        std::map<std::pair<long, long>, std::vector<Scalar>> brackets;
        std::map<long, std::vector<Scalar>> diff;
    };

    /// Sparse structure data: full bracket table (both orders) and
    /// differential as (index, coefficient) lists.
    struct SparseRaw {
        Field field;
        std::vector<std::string> names;
        std::vector<int> degrees;
        std::map<std::pair<long, long>, std::vector<std::pair<long, Scalar>>> brackets;
        std::map<long, std::vector<std::pair<long, Scalar>>> diff;
    };

    /// Checks all six axioms on the basis; errors name the axiom and the
    /// offending elements.
    static DGLA validate(const Raw& raw);

    /// Structural construction without axiom checks, for internally built
    /// tensor algebras whose axioms hold by construction.
    static DGLA from_sparse_unchecked(SparseRaw raw);

    static DGLA abelian(const Field& f, const std::vector<std::pair<std::string, int>>& gens);
    static DGLA sl2(const Field& f);
    /// x in degree 1, y in degree 2, [x,x] = y, d = 0.
    static DGLA obstructed_example(const Field& f);
    /// a in degree 0, x in degree 1, da = x, all brackets zero.
    static DGLA acyclic_example(const Field& f);

    const Field& field() const { return field_; }
    long dim() const { return static_cast<long>(names_.size()); }
    const std::string& name(long i) const { return names_[static_cast<size_t>(i)]; }
    int degree(long i) const { return degrees_[static_cast<size_t>(i)]; }
    long find(const std::string& name) const;

    std::vector<Scalar> bracket(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const;
    std::vector<Scalar> bracket_basis(long i, long j) const;
    std::vector<Scalar> d(const std::vector<Scalar>& a) const;
    std::vector<Scalar> d_basis(long i) const;
    std::vector<Scalar> basis_vector(long i) const;
    std::vector<Scalar> zero_vector() const {
        return std::vector<Scalar>(static_cast<size_t>(dim()), Scalar::zero(field_));
    }

    /// Underlying cochain complex (the tangent complex of mc).
    GradedComplex tangent_complex() const;

    /// Indices of basis elements in a given degree, ascending.
    std::vector<long> degree_indices(int n) const;

private:
    DGLA() = default;

    Field field_;
    std::vector<std::string> names_;
    std::vector<int> degrees_;
    std::map<std::pair<long, long>, std::vector<std::pair<long, Scalar>>> bracket_;
    std::map<long, std::vector<std::pair<long, Scalar>>> diff_;
};

/// Bracket structure constants on cohomology classes, with the shifted-
/// grading symmetry [a,b] = (-1)^{mn+m+n} [b,a] for a in H^m(F) = H^{m+1}(L).
struct CohomologyBracket {
    GradedVectorSpace groups;                       // H^*(L), cochain degrees
    std::map<int, Matrix> representatives;          // per degree
    /// constants[{p,q}]: classes of [rep_p_i, rep_q_j] in H^{p+q}, as a
    /// dim(H^{p+q}) x (dim H^p * dim H^q) matrix (column = i * dim_q + j).
    std::map<std::pair<int, int>, Matrix> constants;
};
CohomologyBracket cohomology_bracket(const DGLA& l);

}  // namespace ddt
