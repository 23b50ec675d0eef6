#pragma once

#include "ddt/artinian.hpp"
#include "ddt/dgla.hpp"

namespace ddt {

/// The bigraded tensor L (x) m(A): basis pairs (Lie basis element, ideal
/// basis element) of total cochain degree deg_L - deg_chain(ring). Carries
/// the tensor differential and bracket used by every Maurer-Cartan
/// computation.
class LieRingTensor {
public:
    LieRingTensor(const DGLA& l, const ArtinianDGAlgebra& a);

    struct Pair {
        long lie;
        long ring;
    };

    const DGLA& lie() const { return *lie_; }
    const ArtinianDGAlgebra& ring() const { return *ring_; }

    /// Basis pairs of a given total degree, ordered by (chain degree of the
    /// ring element, Lie index, ring index).
    const std::vector<Pair>& component(int degree) const;
    long dim(int degree) const { return static_cast<long>(component(degree).size()); }

    int pair_degree(const Pair& p) const;
    std::string pair_name(const Pair& p) const;

    /// Total differential as a matrix between degree components.
    Matrix differential(int degree) const;
    /// Bracket of homogeneous elements given by coordinate vectors.
    std::vector<Scalar> bracket(int deg_a, const std::vector<Scalar>& a, int deg_b, const std::vector<Scalar>& b) const;
    std::vector<Scalar> apply_differential(int degree, const std::vector<Scalar>& v) const;

private:
    const DGLA* lie_;
    const ArtinianDGAlgebra* ring_;
    std::map<int, std::vector<Pair>> components_;
    std::map<std::pair<long, long>, long> index_;  // (lie, ring) -> index inside its component
};

/// Quadratic polynomial in the MC variables: linear part plus symmetric
/// quadratic coefficients keyed by variable pairs (v <= w).
struct QuadraticPoly {
    std::vector<Scalar> linear;
    std::map<std::pair<long, long>, Scalar> quadratic;

    Scalar evaluate(const Field& f, const std::vector<Scalar>& point) const;
    bool is_linear() const { return quadratic.empty(); }
};

/// The Maurer-Cartan equation system of a DGLA over an Artinian coefficient
/// ring: variables span (L (x) m(A))^1, equations are the coordinates of
/// d w + 1/2 [w, w] in (L (x) m(A))^2.
struct MCSystem {
    const DGLA* lie = nullptr;
    const ArtinianDGAlgebra* ring = nullptr;
    std::shared_ptr<LieRingTensor> tensor;
    std::vector<QuadraticPoly> equations;

    long variable_count() const { return tensor->dim(1); }
    std::string variable_name(long v) const { return tensor->pair_name(tensor->component(1)[static_cast<size_t>(v)]); }

    /// Direct evaluation of d w + 1/2 [w, w] (independent of `equations`).
    std::vector<Scalar> curvature(const std::vector<Scalar>& omega) const;
    /// Evaluation through the polynomial system.
    std::vector<Scalar> residual(const std::vector<Scalar>& omega) const;

    bool is_mc(const std::vector<Scalar>& omega) const;
};

MCSystem build_mc_system(const DGLA& l, const ArtinianDGAlgebra& a);

/// e^alpha action: w + sum_{n>=0} ad_alpha^n / (n+1)! ([alpha, w] - d alpha).
/// alpha is a degree-0 vector; the input must satisfy the MC equation.
std::vector<Scalar> gauge_act(const MCSystem& sys, const std::vector<Scalar>& alpha, const std::vector<Scalar>& omega);

/// All MC solutions over F_p in lexicographic order of coordinate vectors.
std::vector<std::vector<Scalar>> enumerate_mc(const MCSystem& sys, long budget = 10'000'000);

struct OrbitPartition {
    std::vector<std::vector<Scalar>> solutions;   // lexicographic
    std::vector<std::vector<long>> orbits;        // indices into solutions, each orbit sorted
    std::vector<long> orbit_of;                   // solution index -> orbit index
};

/// Gauge orbits of the finite MC solution set (F_p only).
OrbitPartition deformation_classes(const MCSystem& sys, long budget = 10'000'000);

struct ObstructionClass {
    GradedVectorSpace h2;            // H^2(L (x) I)
    std::vector<Scalar> klass;       // coordinates in the chosen H^2 basis
    std::vector<Scalar> representative;  // cocycle in (L (x) I)^2
    bool is_zero() const;
};

/// Obstruction of an MC element over B against a small extension
/// I -> A -> B; the class is independent of the chosen lift.
ObstructionClass obstruction(const SmallExtension& e, const DGLA& l, const std::vector<Scalar>& omega_b);

/// H^n(mc(L)): MC solutions over k (+) k[-n] eps modulo those extending
/// over the acyclic thickening; equals dim H^{n+1}(L).
long mc_cohomology(const DGLA& l, int n);

}  // namespace ddt
