#include "ddt/complex.hpp"

namespace ddt {

long GradedVectorSpace::total_dim() const {
    long t = 0;
    for (auto& [n, d] : dims) t += d;
    return t;
}

bool GradedVectorSpace::operator==(const GradedVectorSpace& o) const {
    for (auto& [n, d] : dims)
        if (d != o.dim(n)) return false;
    for (auto& [n, d] : o.dims)
        if (d != dim(n)) return false;
    return true;
}

Matrix GradedComplex::differential_from(int n) const {
    auto it = diff.find(n);
    if (it != diff.end()) return it->second;
    return Matrix(field, dim(diff_target(n)), dim(n));
}

void GradedComplex::validate() const {
    for (auto& [n, d] : dims)
        if (d < 0) throw validation_error("negative dimension in degree " + std::to_string(n));
    for (auto& [n, m] : diff) {
        if (m.field() != field) throw validation_error("differential field mismatch in degree " + std::to_string(n));
        if (m.rows() != dim(diff_target(n)) || m.cols() != dim(n))
            throw validation_error("differential shape mismatch in degree " + std::to_string(n));
    }
    for (auto& [n, m] : diff) {
        Matrix next = differential_from(diff_target(n));
        if (!(next * m).is_zero())
            throw validation_error("d*d != 0 leaving degree " + std::to_string(n));
    }
}

GradedComplex GradedComplex::converted(Grading target) const {
    if (target == grading) return *this;
    GradedComplex r;
    r.field = field;
    r.grading = target;
    for (auto& [n, d] : dims) r.dims[-n] = d;
    for (auto& [n, m] : diff) r.diff[-n] = m;
    return r;
}

GradedComplex GradedComplex::zero(const Field& f, Grading g) {
    GradedComplex c;
    c.field = f;
    c.grading = g;
    return c;
}

GradedComplex GradedComplex::point(const Field& f, Grading g, int degree, long dim) {
    GradedComplex c = zero(f, g);
    if (dim > 0) c.dims[degree] = dim;
    return c;
}

Cohomology cohomology(const GradedComplex& c) {
    Cohomology h;
    int into = c.grading == Grading::Cochain ? -1 : +1;  // degree whose differential lands in n
    for (auto& [n, dn] : c.dims) {
        if (dn == 0) continue;
        Matrix out = c.differential_from(n);
        Matrix in = c.differential_from(n + into);
        Matrix z = kernel_basis(out);
        Matrix b = image_basis(in);
        SubquotientBasis q = subquotient_basis(z, b);
        if (q.dim() > 0) h.groups.dims[n] = q.dim();
        h.representatives[n] = q.reps;
        h.coordinate_maps[n] = q.coord_map;
    }
    return h;
}

Matrix ComplexMap::component(int n) const {
    auto it = components.find(n);
    if (it != components.end()) return it->second;
    return Matrix(source->field, target->dim(n), source->dim(n));
}

void ComplexMap::validate() const {
    if (source->grading != target->grading) throw validation_error("complex map mixes grading conventions");
    for (auto& [n, m] : components)
        if (m.rows() != target->dim(n) || m.cols() != source->dim(n))
            throw validation_error("complex map shape mismatch in degree " + std::to_string(n));
    std::map<int, bool> degrees;
    for (auto& [n, d] : source->dims) degrees[n] = true;
    for (auto& [n, d] : target->dims) degrees[n] = true;
    for (auto& [n, _] : degrees) {
        int t = source->diff_target(n);
        Matrix lhs = target->differential_from(n) * component(n);
        Matrix rhs = component(t) * source->differential_from(n);
        if (!(lhs - rhs).is_zero())
            throw validation_error("map does not commute with differentials at degree " + std::to_string(n));
    }
}

bool is_quasi_iso(const ComplexMap& f) {
    f.validate();
    Cohomology hs = cohomology(*f.source);
    Cohomology ht = cohomology(*f.target);
    std::map<int, bool> degrees;
    for (auto& [n, d] : hs.groups.dims) degrees[n] = true;
    for (auto& [n, d] : ht.groups.dims) degrees[n] = true;
    for (auto& [n, _] : degrees) {
        long ds = hs.groups.dim(n), dt = ht.groups.dim(n);
        if (ds != dt) return false;
        if (ds == 0) continue;
        // induced map in the chosen bases
        Matrix induced = ht.coordinate_maps.at(n) * f.component(n) * hs.representatives.at(n);
        if (rank(induced) != ds) return false;
    }
    return true;
}

long euler_characteristic(const GradedComplex& c) {
    long chi = 0;
    for (auto& [n, d] : c.dims) chi += (n % 2 == 0) ? d : -d;
    return chi;
}

}  // namespace ddt
