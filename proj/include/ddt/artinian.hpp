#pragma once

#include <string>
#include <vector>

#include "ddt/complex.hpp"

namespace ddt {

/// Finite-dimensional local Artinian DG algebra over k. Degrees are chain
/// degrees: the differential lowers degree by 1. The basis contains the
/// unit (degree 0); all other basis elements span the maximal ideal.
class ArtinianDGAlgebra {
public:
    struct Raw {
        Field field;
        std::vector<std::string> names;
        std::vector<int> degrees;
        long unit = 0;  // index of the unit
        /// product[{i,j}] = coordinates of basis_i * basis_j; pairs may be
        /// given for one order only, the other is derived from graded
        /// commutativity.
        std::map<std::pair<long, long>, std::vector<Scalar>> products;
        std::map<long, std::vector<Scalar>> diff;  // d(basis_i)
    };

    /// Checks every axiom (unital, associative, graded-commutative, local,
    /// nilpotent, Leibniz, d^2 = 0) and computes the nilpotency index.
    static ArtinianDGAlgebra validate(const Raw& raw);

    /// k (+) k[-n] eps: square-zero extension with eps in chain degree n.
    static ArtinianDGAlgebra test_algebra(const Field& f, int n);
    /// k (+) (k eta_n (+) k eta'_{n-1}) eps with d(eta) = eta'.
    static ArtinianDGAlgebra test_thickening(const Field& f, int n);
    /// Truncated polynomial algebra k[t]/t^m, t in chain degree 0.
    static ArtinianDGAlgebra truncated_polynomial(const Field& f, int m);

    const Field& field() const { return field_; }
    long dim() const { return static_cast<long>(names_.size()); }
    const std::string& name(long i) const { return names_[static_cast<size_t>(i)]; }
    int degree(long i) const { return degrees_[static_cast<size_t>(i)]; }
    long unit_index() const { return unit_; }
    const std::vector<long>& ideal() const { return ideal_; }  // indices, ascending
    long nilpotency_index() const { return nilpotency_; }

    std::vector<Scalar> mul(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const;
    std::vector<Scalar> mul_basis(long i, long j) const;
    std::vector<Scalar> d(const std::vector<Scalar>& a) const;
    std::vector<Scalar> d_basis(long i) const;
    std::vector<Scalar> basis_vector(long i) const;
    std::vector<Scalar> zero_vector() const { return std::vector<Scalar>(static_cast<size_t>(dim()), Scalar::zero(field_)); }

    long find(const std::string& name) const;

    /// m(A)^k as a column-span matrix (k >= 1).
    Matrix ideal_power_span(int k) const;

    bool operator==(const ArtinianDGAlgebra& o) const;

private:
    ArtinianDGAlgebra() = default;

    Field field_;
    std::vector<std::string> names_;
    std::vector<int> degrees_;
    long unit_ = 0;
    std::vector<long> ideal_;
    std::vector<std::vector<std::vector<Scalar>>> product_;  // full table
    std::vector<std::vector<Scalar>> diff_;
    long nilpotency_ = 0;
};

/// Algebra morphism given on basis; validated to be a unital DG algebra map.
struct AlgebraMorphism {
    const ArtinianDGAlgebra* source = nullptr;
    const ArtinianDGAlgebra* target = nullptr;
    Matrix matrix;  // dim(target) x dim(source)

    void validate() const;
    bool is_surjective() const { return rank(matrix) == target->dim(); }
    Matrix kernel() const { return kernel_basis(matrix); }
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const { return matrix.apply(v); }
};

/// Small extension I -> A -> B: surjection with m(A) * I = 0.
struct SmallExtension {
    ArtinianDGAlgebra source;  // A
    ArtinianDGAlgebra target;  // B
    Matrix map;                // dim(B) x dim(A)
    Matrix kernel;             // columns spanning I inside A

    void validate() const;
    /// Deterministic linear section of the surjection on basis vectors.
    Matrix section() const;
};

/// Quotient A/I by a d-stable ideal (columns of ideal_span); returns the
/// quotient algebra and the projection.
struct QuotientResult {
    ArtinianDGAlgebra algebra;
    Matrix projection;
};
QuotientResult quotient_algebra(const ArtinianDGAlgebra& a, const Matrix& ideal_span);

/// Factor a surjection as a chain of small extensions via the filtration
/// I, m(A) I, m(A)^2 I, ... The composition of the returned maps is f;
/// an identity map yields the empty list.
std::vector<SmallExtension> factor_surjection(const AlgebraMorphism& f);

/// Cotangent space m(A)/m(A)^2 with induced differential (chain grading).
struct CotangentSpace {
    GradedComplex complex;
    Matrix representatives;  // columns: lifts in A of the chosen basis
};
CotangentSpace cotangent(const ArtinianDGAlgebra& a);

/// Mapping cone C(A, I) of a small extension; comes with the surjection
/// C -> B whose kernel is acyclic.
struct MappingCone {
    ArtinianDGAlgebra cone;
    Matrix to_target;            // matrix of the surjection C -> B
    Matrix inclusion_of_source;  // A -> C on basis
};
MappingCone mapping_cone(const SmallExtension& e);

}  // namespace ddt
