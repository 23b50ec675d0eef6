#include "ddt/dgalgebra.hpp"

namespace ddt {

Matrix DGAlgebra::differential_from(int n) const {
    if (n >= 0 && n < static_cast<int>(diff.size())) return diff[static_cast<size_t>(n)];
    return Matrix(field, dim(n + 1), dim(n));
}

Matrix DGAlgebra::product_matrix(int p, int q) const {
    auto it = product.find({p, q});
    if (it != product.end()) return it->second;
    return Matrix(field, dim(p + q), dim(p) * dim(q));
}

std::vector<Scalar> DGAlgebra::mul(int p, const std::vector<Scalar>& a, int q, const std::vector<Scalar>& b) const {
    Matrix m = product_matrix(p, q);
    std::vector<Scalar> col(static_cast<size_t>(dim(p) * dim(q)), Scalar::zero(field));
    for (long i = 0; i < dim(p); ++i)
        for (long j = 0; j < dim(q); ++j)
            col[static_cast<size_t>(i * dim(q) + j)] = a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
    return m.apply(col);
}

GradedComplex DGAlgebra::underlying_complex() const {
    GradedComplex c = GradedComplex::zero(field, Grading::Cochain);
    for (int n = 0; n <= top_degree(); ++n)
        if (dim(n) > 0) c.dims[n] = dim(n);
    for (int n = 0; n <= top_degree(); ++n)
        if (dim(n) > 0) c.diff[n] = differential_from(n);
    return c;
}

void DGAlgebra::validate() const {
    int top = top_degree();
    if (dim(0) < 1) throw validation_error("DG algebra must contain the unit in degree 0");
    if (static_cast<long>(unit.size()) != dim(0)) throw validation_error("unit coordinate length mismatch");

    auto basis_vec = [&](int n, long i) {
        std::vector<Scalar> v(static_cast<size_t>(dim(n)), Scalar::zero(field));
        v[static_cast<size_t>(i)] = Scalar::one(field);
        return v;
    };
    auto eq = [&](const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
        if (a.size() != b.size()) return false;
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return false;
        return true;
    };

    for (int n = 0; n <= top; ++n)
        for (long i = 0; i < dim(n); ++i) {
            auto x = basis_vec(n, i);
            if (!eq(mul(0, unit, n, x), x) || !eq(mul(n, x, 0, unit), x))
                throw validation_error("unit law fails on " + name(n, i));
        }

    for (int p = 0; p <= top; ++p)
        for (int q = 0; p + q <= top; ++q)
            for (long i = 0; i < dim(p); ++i)
                for (long j = 0; j < dim(q); ++j) {
                    auto ab = mul(p, basis_vec(p, i), q, basis_vec(q, j));
                    auto ba = mul(q, basis_vec(q, j), p, basis_vec(p, i));
                    Scalar sign = Scalar(field, (p % 2) && (q % 2) ? -1 : 1);
                    for (size_t k = 0; k < ab.size(); ++k)
                        if (ab[k] != ba[k] * sign)
                            throw validation_error("graded commutativity fails on (" + name(p, i) + ", " + name(q, j) + ")");
                    for (int r = 0; p + q + r <= top; ++r)
                        for (long k = 0; k < dim(r); ++k) {
                            auto lhs = mul(p + q, ab, r, basis_vec(r, k));
                            auto rhs = mul(p, basis_vec(p, i), q + r, mul(q, basis_vec(q, j), r, basis_vec(r, k)));
                            if (!eq(lhs, rhs))
                                throw validation_error("associativity fails on (" + name(p, i) + ", " + name(q, j) + ", " +
                                                       name(r, k) + ")");
                        }
                }

    underlying_complex().validate();

    // Leibniz: d(ab) = (da)b + (-1)^p a(db)
    for (int p = 0; p <= top; ++p)
        for (int q = 0; p + q <= top; ++q)
            for (long i = 0; i < dim(p); ++i)
                for (long j = 0; j < dim(q); ++j) {
                    auto a = basis_vec(p, i), b = basis_vec(q, j);
                    auto dab = differential_from(p + q).apply(mul(p, a, q, b));
                    auto da_b = mul(p + 1, differential_from(p).apply(a), q, b);
                    auto a_db = mul(p, a, q + 1, differential_from(q).apply(b));
                    Scalar sign = Scalar(field, p % 2 ? -1 : 1);
                    for (size_t k = 0; k < dab.size(); ++k)
                        if (dab[k] != da_b[k] + a_db[k] * sign)
                            throw validation_error("Leibniz rule fails on (" + name(p, i) + ", " + name(q, j) + ")");
                }
}

Matrix DGAlgebraMap::component(int n) const {
    if (n >= 0 && n < static_cast<int>(components.size())) return components[static_cast<size_t>(n)];
    return Matrix(source->field, target->dim(n), source->dim(n));
}

void DGAlgebraMap::validate() const {
    int top = source->top_degree();
    for (int n = 0; n <= top; ++n) {
        Matrix f = component(n);
        if (f.rows() != target->dim(n) || f.cols() != source->dim(n))
            throw validation_error("algebra map shape mismatch in degree " + std::to_string(n));
    }
    // unit
    {
        std::vector<Scalar> u = component(0).apply(source->unit);
        for (size_t i = 0; i < u.size(); ++i)
            if (u[i] != target->unit[i]) throw validation_error("algebra map does not preserve the unit");
    }
    // chain map
    for (int n = 0; n <= top; ++n) {
        Matrix lhs = target->differential_from(n) * component(n);
        Matrix rhs = component(n + 1) * source->differential_from(n);
        if (lhs != rhs) throw validation_error("algebra map does not commute with d in degree " + std::to_string(n));
    }
    // multiplicativity on basis pairs
    for (int p = 0; p <= top; ++p)
        for (int q = 0; p + q <= top; ++q)
            for (long i = 0; i < source->dim(p); ++i)
                for (long j = 0; j < source->dim(q); ++j) {
                    std::vector<Scalar> a(static_cast<size_t>(source->dim(p)), Scalar::zero(source->field));
                    std::vector<Scalar> b(static_cast<size_t>(source->dim(q)), Scalar::zero(source->field));
                    a[static_cast<size_t>(i)] = Scalar::one(source->field);
                    b[static_cast<size_t>(j)] = Scalar::one(source->field);
                    auto lhs = component(p + q).apply(source->mul(p, a, q, b));
                    auto rhs = target->mul(p, component(p).apply(a), q, component(q).apply(b));
                    for (size_t k = 0; k < lhs.size(); ++k)
                        if (lhs[k] != rhs[k]) throw validation_error("algebra map is not multiplicative");
                }
}

}  // namespace ddt
