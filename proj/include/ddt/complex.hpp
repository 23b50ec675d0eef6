#pragma once

#include <map>

#include "ddt/matrix.hpp"

namespace ddt {

/// Z-graded vector space with finite support (a complex with zero
/// differential).
struct GradedVectorSpace {
    std::map<int, long> dims;

    long dim(int n) const {
        auto it = dims.find(n);
        return it == dims.end() ? 0 : it->second;
    }
    long total_dim() const;
    bool operator==(const GradedVectorSpace& o) const;
};

enum class Grading { Chain, Cochain };

/// Finite-support Z-graded complex. In cochain convention diff[n] maps
/// degree n to n+1; in chain convention degree n to n-1. Degrees absent
/// from `dims` are zero.
struct GradedComplex {
    Field field;
    Grading grading = Grading::Cochain;
    std::map<int, long> dims;
    std::map<int, Matrix> diff;

    long dim(int n) const {
        auto it = dims.find(n);
        return it == dims.end() ? 0 : it->second;
    }
    int diff_target(int n) const { return grading == Grading::Cochain ? n + 1 : n - 1; }
    /// Differential leaving degree n, as a dim(target) x dim(n) matrix.
    Matrix differential_from(int n) const;

    /// Shape and d*d = 0 checks; throws validation_error.
    void validate() const;

    /// Reindex via V^n = V_{-n}.
    GradedComplex converted(Grading target) const;

    static GradedComplex zero(const Field& f, Grading g);
    /// One-dimensional space concentrated in a single degree.
    static GradedComplex point(const Field& f, Grading g, int degree, long dim = 1);
};

struct Cohomology {
    GradedVectorSpace groups;
    /// Chosen representative cocycles per degree: dim(n) x groups.dim(n).
    std::map<int, Matrix> representatives;
    /// Quotient coordinate maps per degree (class of a cocycle vector).
    std::map<int, Matrix> coordinate_maps;
};

/// Cohomology (or homology, per grading) with representatives.
Cohomology cohomology(const GradedComplex& c);

/// Degreewise map of complexes with the same grading convention.
struct ComplexMap {
    const GradedComplex* source;
    const GradedComplex* target;
    std::map<int, Matrix> components;

    Matrix component(int n) const;
    /// Throws if the map fails to commute with the differentials.
    void validate() const;
};

/// True iff the induced map on cohomology is an isomorphism in every degree.
bool is_quasi_iso(const ComplexMap& f);

long euler_characteristic(const GradedComplex& c);

}  // namespace ddt
