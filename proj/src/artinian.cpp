#include "ddt/artinian.hpp"

#include <algorithm>
#include <set>

namespace ddt {

namespace {

bool vec_is_zero(const std::vector<Scalar>& v) {
    for (auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<Scalar> vec_add(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    std::vector<Scalar> r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

std::vector<Scalar> vec_scale(const std::vector<Scalar>& a, const Scalar& c) {
    std::vector<Scalar> r = a;
    for (auto& x : r) x *= c;
    return r;
}

}  // namespace

ArtinianDGAlgebra ArtinianDGAlgebra::validate(const Raw& raw) {
    ArtinianDGAlgebra a;
    a.field_ = raw.field;
    a.names_ = raw.names;
    a.degrees_ = raw.degrees;
    a.unit_ = raw.unit;
    long n = a.dim();

    if (n == 0) throw validation_error("algebra has no basis");
    if (a.names_.size() != a.degrees_.size()) throw validation_error("basis name/degree count mismatch");
    {
        std::set<std::string> seen(a.names_.begin(), a.names_.end());
        if (static_cast<long>(seen.size()) != n) throw validation_error("duplicate basis names");
    }
    if (raw.unit < 0 || raw.unit >= n) throw validation_error("unit index out of range");
    if (a.degree(raw.unit) != 0) throw validation_error("unit must sit in degree 0");
    for (long i = 0; i < n; ++i)
        if (i != raw.unit) a.ideal_.push_back(i);

    // full product table; missing orders derived from graded commutativity,
    // unit products implied
    a.product_.assign(static_cast<size_t>(n),
                      std::vector<std::vector<Scalar>>(static_cast<size_t>(n),
                                                       std::vector<Scalar>(static_cast<size_t>(n), Scalar::zero(raw.field))));
    auto given = [&](long i, long j) { return raw.products.find({i, j}) != raw.products.end(); };
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            std::vector<Scalar> v(static_cast<size_t>(n), Scalar::zero(raw.field));
            if (i == a.unit_ || j == a.unit_) {
                long other = i == a.unit_ ? j : i;
                v[static_cast<size_t>(other)] = Scalar::one(raw.field);
                if (given(i, j)) {
                    auto& g = raw.products.at({i, j});
                    if (g != v) throw validation_error("unit law fails on (" + a.name(i) + ", " + a.name(j) + ")");
                }
            } else if (given(i, j)) {
                v = raw.products.at({i, j});
                if (static_cast<long>(v.size()) != n) throw validation_error("product coordinate length mismatch");
            } else if (given(j, i)) {
                Scalar sign = Scalar(raw.field, (a.degree(i) % 2) && (a.degree(j) % 2) ? -1 : 1);
                v = vec_scale(raw.products.at({j, i}), sign);
            }
            a.product_[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
        }

    // graded commutativity (also catches inconsistent double listings)
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            Scalar sign = Scalar(raw.field, (a.degree(i) % 2) && (a.degree(j) % 2) ? -1 : 1);
            if (a.mul_basis(i, j) != vec_scale(a.mul_basis(j, i), sign))
                throw validation_error("graded commutativity fails on (" + a.name(i) + ", " + a.name(j) + ")");
        }

    // grading of products
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            auto v = a.mul_basis(i, j);
            for (long k = 0; k < n; ++k)
                if (!v[static_cast<size_t>(k)].is_zero() && a.degree(k) != a.degree(i) + a.degree(j))
                    throw validation_error("product of " + a.name(i) + " and " + a.name(j) + " is not graded");
        }

    // locality: products of ideal elements have no unit component
    for (long i : a.ideal_)
        for (long j : a.ideal_)
            if (!a.mul_basis(i, j)[static_cast<size_t>(a.unit_)].is_zero())
                throw validation_error("non-local: product " + a.name(i) + "*" + a.name(j) + " has a unit component");

    // associativity
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            for (long k = 0; k < n; ++k) {
                auto lhs = a.mul(a.mul_basis(i, j), a.basis_vector(k));
                auto rhs = a.mul(a.basis_vector(i), a.mul_basis(j, k));
                if (lhs != rhs)
                    throw validation_error("non-associative on (" + a.name(i) + ", " + a.name(j) + ", " + a.name(k) + ")");
            }

    // differential
    a.diff_.assign(static_cast<size_t>(n), std::vector<Scalar>(static_cast<size_t>(n), Scalar::zero(raw.field)));
    for (auto& [i, v] : raw.diff) {
        if (i < 0 || i >= n) throw validation_error("differential index out of range");
        if (static_cast<long>(v.size()) != n) throw validation_error("differential coordinate length mismatch");
        a.diff_[static_cast<size_t>(i)] = v;
    }
    if (!vec_is_zero(a.diff_[static_cast<size_t>(a.unit_)])) throw validation_error("d(1) != 0");
    for (long i = 0; i < n; ++i) {
        auto& v = a.diff_[static_cast<size_t>(i)];
        for (long k = 0; k < n; ++k)
            if (!v[static_cast<size_t>(k)].is_zero()) {
                if (a.degree(k) != a.degree(i) - 1)
                    throw validation_error("differential of " + a.name(i) + " is not of chain degree -1");
                if (k == a.unit_) throw validation_error("d does not preserve the maximal ideal");
            }
    }
    for (long i = 0; i < n; ++i)
        if (!vec_is_zero(a.d(a.d_basis(i)))) throw validation_error("d*d != 0 on " + a.name(i));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            auto lhs = a.d(a.mul_basis(i, j));
            Scalar sign = Scalar(raw.field, a.degree(i) % 2 ? -1 : 1);
            auto rhs = vec_add(a.mul(a.d_basis(i), a.basis_vector(j)), vec_scale(a.mul(a.basis_vector(i), a.d_basis(j)), sign));
            if (lhs != rhs)
                throw validation_error("non-Leibniz on (" + a.name(i) + ", " + a.name(j) + ")");
        }

    // nilpotency of the maximal ideal
    {
        Matrix span = a.ideal_power_span(1);
        long k = 1;
        while (span.cols() > 0) {
            if (k > a.dim() + 1) throw validation_error("non-nilpotent maximal ideal");
            Matrix next(a.field_, n, 0);
            for (long c = 0; c < span.cols(); ++c)
                for (long i : a.ideal_) {
                    auto p = a.mul(span.column_vector(c), a.basis_vector(i));
                    Matrix col(a.field_, n, 1);
                    col.set_column(0, p);
                    next = next.hstack(col);
                }
            span = image_basis(next);
            ++k;
        }
        a.nilpotency_ = k;
    }
    return a;
}

std::vector<Scalar> ArtinianDGAlgebra::mul(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
    std::vector<Scalar> r = zero_vector();
    long n = dim();
    for (long i = 0; i < n; ++i) {
        if (x[static_cast<size_t>(i)].is_zero()) continue;
        for (long j = 0; j < n; ++j) {
            if (y[static_cast<size_t>(j)].is_zero()) continue;
            Scalar c = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
            auto& p = product_[static_cast<size_t>(i)][static_cast<size_t>(j)];
            for (long k = 0; k < n; ++k)
                if (!p[static_cast<size_t>(k)].is_zero()) r[static_cast<size_t>(k)] += c * p[static_cast<size_t>(k)];
        }
    }
    return r;
}

std::vector<Scalar> ArtinianDGAlgebra::mul_basis(long i, long j) const {
    return product_[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

std::vector<Scalar> ArtinianDGAlgebra::d(const std::vector<Scalar>& x) const {
    std::vector<Scalar> r = zero_vector();
    for (long i = 0; i < dim(); ++i) {
        if (x[static_cast<size_t>(i)].is_zero()) continue;
        auto& di = diff_[static_cast<size_t>(i)];
        for (long k = 0; k < dim(); ++k)
            if (!di[static_cast<size_t>(k)].is_zero()) r[static_cast<size_t>(k)] += x[static_cast<size_t>(i)] * di[static_cast<size_t>(k)];
    }
    return r;
}

std::vector<Scalar> ArtinianDGAlgebra::d_basis(long i) const { return diff_[static_cast<size_t>(i)]; }

std::vector<Scalar> ArtinianDGAlgebra::basis_vector(long i) const {
    auto v = zero_vector();
    v[static_cast<size_t>(i)] = Scalar::one(field_);
    return v;
}

long ArtinianDGAlgebra::find(const std::string& name) const {
    for (long i = 0; i < dim(); ++i)
        if (names_[static_cast<size_t>(i)] == name) return i;
    throw validation_error("unknown basis element '" + name + "'");
}

Matrix ArtinianDGAlgebra::ideal_power_span(int k) const {
    Matrix span(field_, dim(), 0);
    for (long i : ideal_) {
        Matrix col(field_, dim(), 1);
        col.set_column(0, basis_vector(i));
        span = span.hstack(col);
    }
    span = image_basis(span);
    for (int step = 2; step <= k; ++step) {
        Matrix next(field_, dim(), 0);
        for (long c = 0; c < span.cols(); ++c)
            for (long i : ideal_) {
                Matrix col(field_, dim(), 1);
                col.set_column(0, mul(span.column_vector(c), basis_vector(i)));
                next = next.hstack(col);
            }
        span = image_basis(next);
    }
    return span;
}

bool ArtinianDGAlgebra::operator==(const ArtinianDGAlgebra& o) const {
    return field_ == o.field_ && names_ == o.names_ && degrees_ == o.degrees_ && unit_ == o.unit_ &&
           product_ == o.product_ && diff_ == o.diff_;
}

ArtinianDGAlgebra ArtinianDGAlgebra::test_algebra(const Field& f, int n) {
    Raw r;
    r.field = f;
    r.names = {"1", "e"};
    r.degrees = {0, n};
    r.unit = 0;
    r.products[{1, 1}] = std::vector<Scalar>(2, Scalar::zero(f));
    return validate(r);
}

ArtinianDGAlgebra ArtinianDGAlgebra::test_thickening(const Field& f, int n) {
    Raw r;
    r.field = f;
    r.names = {"1", "h", "hp"};
    r.degrees = {0, n, n - 1};
    r.unit = 0;
    auto zero = std::vector<Scalar>(3, Scalar::zero(f));
    for (long i = 1; i <= 2; ++i)
        for (long j = i; j <= 2; ++j) r.products[{i, j}] = zero;
    auto dh = zero;
    dh[2] = Scalar::one(f);
    r.diff[1] = dh;
    return validate(r);
}

ArtinianDGAlgebra ArtinianDGAlgebra::truncated_polynomial(const Field& f, int m) {
    if (m < 2) throw validation_error("truncation exponent must be >= 2");
    Raw r;
    r.field = f;
    r.unit = 0;
    r.names.push_back("1");
    r.degrees.push_back(0);
    for (int i = 1; i < m; ++i) {
        r.names.push_back(i == 1 ? "t" : "t" + std::to_string(i));
        r.degrees.push_back(0);
    }
    for (int i = 1; i < m; ++i)
        for (int j = i; j < m; ++j) {
            std::vector<Scalar> v(static_cast<size_t>(m), Scalar::zero(f));
            if (i + j < m) v[static_cast<size_t>(i + j)] = Scalar::one(f);
            r.products[{i, j}] = v;
        }
    return validate(r);
}

void AlgebraMorphism::validate() const {
    const ArtinianDGAlgebra& A = *source;
    const ArtinianDGAlgebra& B = *target;
    if (A.field() != B.field()) throw validation_error("morphism mixes fields");
    if (matrix.rows() != B.dim() || matrix.cols() != A.dim()) throw validation_error("morphism shape mismatch");
    if (matrix.apply(A.basis_vector(A.unit_index())) != B.basis_vector(B.unit_index()))
        throw validation_error("morphism does not preserve the unit");
    for (long i = 0; i < A.dim(); ++i) {
        auto v = matrix.apply(A.basis_vector(i));
        for (long k = 0; k < B.dim(); ++k)
            if (!v[static_cast<size_t>(k)].is_zero() && B.degree(k) != A.degree(i))
                throw validation_error("morphism does not preserve degrees");
    }
    for (long i = 0; i < A.dim(); ++i)
        if (matrix.apply(A.d_basis(i)) != B.d(matrix.apply(A.basis_vector(i))))
            throw validation_error("morphism does not commute with d");
    for (long i = 0; i < A.dim(); ++i)
        for (long j = 0; j < A.dim(); ++j) {
            auto lhs = matrix.apply(A.mul_basis(i, j));
            auto rhs = B.mul(matrix.apply(A.basis_vector(i)), matrix.apply(A.basis_vector(j)));
            if (lhs != rhs) throw validation_error("morphism is not multiplicative");
        }
}

void SmallExtension::validate() const {
    AlgebraMorphism f{&source, &target, map};
    f.validate();
    if (!f.is_surjective()) throw validation_error("small extension map is not surjective");
    Matrix ker = kernel_basis(map);
    if (rank(ker) != rank(kernel) || rank(ker.hstack(kernel)) != rank(ker))
        throw validation_error("stored kernel does not span ker(f)");
    for (long i : source.ideal())
        for (long c = 0; c < kernel.cols(); ++c)
            if (!vec_is_zero(source.mul(source.basis_vector(i), kernel.column_vector(c))))
                throw validation_error("extension is not small: m(A) * I != 0");
}

Matrix SmallExtension::section() const {
    auto s = solve(map, Matrix::identity(source.field(), target.dim()));
    if (!s) throw validation_error("internal: surjection has no section");
    return *s;
}

QuotientResult quotient_algebra(const ArtinianDGAlgebra& a, const Matrix& ideal_span) {
    const Field& f = a.field();
    long n = a.dim();
    Matrix ideal = image_basis(ideal_span);

    for (long c = 0; c < ideal.cols(); ++c) {
        auto v = ideal.column_vector(c);
        if (!vec_is_zero(a.d(v)) && !in_span(ideal, a.d(v)))
            throw validation_error("quotient ideal is not d-stable");
        for (long i = 0; i < n; ++i) {
            auto p = a.mul(a.basis_vector(i), v);
            if (!vec_is_zero(p) && !in_span(ideal, p)) throw validation_error("quotient span is not an ideal");
        }
        int deg = 0;
        bool seen = false;
        for (long k = 0; k < n; ++k)
            if (!v[static_cast<size_t>(k)].is_zero()) {
                if (seen && a.degree(k) != deg) throw validation_error("quotient ideal basis is not homogeneous");
                deg = a.degree(k);
                seen = true;
            }
    }
    if (in_span(ideal, a.basis_vector(a.unit_index()))) throw validation_error("quotient ideal contains the unit");

    // representatives: the unit first, then standard basis vectors extending
    // the ideal to a full-rank system
    std::vector<long> reps;
    Matrix chosen = ideal;
    {
        Matrix col(f, n, 1);
        col.set_column(0, a.basis_vector(a.unit_index()));
        chosen = chosen.hstack(col);
        reps.push_back(a.unit_index());
    }
    for (long i = 0; i < n && chosen.cols() < n; ++i) {
        if (i == a.unit_index()) continue;
        Matrix col(f, n, 1);
        col.set_column(0, a.basis_vector(i));
        Matrix aug = chosen.hstack(col);
        if (rank(aug) > chosen.cols()) {
            chosen = aug;
            reps.push_back(i);
        }
    }
    long q = static_cast<long>(reps.size());
    if (ideal.cols() + q != n) throw validation_error("internal: quotient basis completion failed");

    // coordinates: invert [ideal | reps] and keep the rep rows
    Matrix full = ideal;
    for (long i : reps) {
        Matrix col(f, n, 1);
        col.set_column(0, a.basis_vector(i));
        full = full.hstack(col);
    }
    Matrix g = inverse(full);
    Matrix proj(f, q, n);
    for (long i = 0; i < q; ++i)
        for (long j = 0; j < n; ++j) proj.set(i, j, g.at(ideal.cols() + i, j));

    ArtinianDGAlgebra::Raw raw;
    raw.field = f;
    raw.unit = 0;
    for (long i : reps) {
        raw.names.push_back(a.name(i));
        raw.degrees.push_back(a.degree(i));
    }
    for (long i = 0; i < q; ++i)
        for (long j = 0; j < q; ++j)
            raw.products[{i, j}] = proj.apply(a.mul_basis(reps[static_cast<size_t>(i)], reps[static_cast<size_t>(j)]));
    for (long i = 0; i < q; ++i) raw.diff[i] = proj.apply(a.d_basis(reps[static_cast<size_t>(i)]));

    QuotientResult out{ArtinianDGAlgebra::validate(raw), proj};
    return out;
}

std::vector<SmallExtension> factor_surjection(const AlgebraMorphism& f) {
    f.validate();
    if (!f.is_surjective()) throw validation_error("factor_surjection expects a surjection");
    const ArtinianDGAlgebra& A = *f.source;
    Matrix I = image_basis(f.kernel());

    if (I.cols() == 0) {
        if (f.matrix == Matrix::identity(A.field(), A.dim())) return {};
        SmallExtension e{A, *f.target, f.matrix, Matrix(A.field(), A.dim(), 0)};
        e.validate();
        return {e};
    }

    // filtration I > m I > m^2 I > ... > 0
    std::vector<Matrix> filtration{I};
    while (filtration.back().cols() > 0) {
        const Matrix& prev = filtration.back();
        Matrix next(A.field(), A.dim(), 0);
        for (long c = 0; c < prev.cols(); ++c)
            for (long i : A.ideal()) {
                Matrix col(A.field(), A.dim(), 1);
                col.set_column(0, A.mul(prev.column_vector(c), A.basis_vector(i)));
                next = next.hstack(col);
            }
        filtration.push_back(image_basis(next));
    }
    long t = static_cast<long>(filtration.size()) - 1;  // filtration[t] = 0

    // quotients A/J_j for j = t-1 .. 0 (A/J_t = A itself)
    std::vector<QuotientResult> quots;
    for (long j = 0; j < t; ++j) quots.push_back(quotient_algebra(A, filtration[static_cast<size_t>(j)]));

    std::vector<SmallExtension> chain;
    for (long j = t - 1; j >= 0; --j) {
        const ArtinianDGAlgebra& src = (j == t - 1) ? A : quots[static_cast<size_t>(j + 1)].algebra;
        Matrix src_proj = (j == t - 1) ? Matrix::identity(A.field(), A.dim()) : quots[static_cast<size_t>(j + 1)].projection;

        // induced map src -> A/J_j: project representatives of src
        Matrix lift = (j == t - 1) ? Matrix::identity(A.field(), A.dim())
                                   : *solve(src_proj, Matrix::identity(A.field(), src.dim()));
        Matrix step = quots[static_cast<size_t>(j)].projection * lift;

        if (j == 0) {
            // compose with the isomorphism A/I -> B induced by f
            Matrix lift0 = *solve(quots[0].projection, Matrix::identity(A.field(), quots[0].algebra.dim()));
            Matrix phi = f.matrix * lift0;
            step = phi * step;
            SmallExtension e{src, *f.target, step, kernel_basis(step)};
            e.validate();
            chain.push_back(e);
        } else {
            SmallExtension e{src, quots[static_cast<size_t>(j)].algebra, step, kernel_basis(step)};
            e.validate();
            chain.push_back(e);
        }
    }
    return chain;
}

CotangentSpace cotangent(const ArtinianDGAlgebra& a) {
    const Field& f = a.field();
    Matrix m1 = a.ideal_power_span(1);
    Matrix m2 = a.ideal_power_span(2);
    SubquotientBasis q = subquotient_basis(m1, m2);

    CotangentSpace out;
    out.representatives = q.reps;
    out.complex = GradedComplex::zero(f, Grading::Chain);

    std::vector<int> rep_degree;
    for (long c = 0; c < q.reps.cols(); ++c) {
        int deg = 0;
        for (long k = 0; k < a.dim(); ++k)
            if (!q.reps.at(k, c).is_zero()) deg = a.degree(k);
        rep_degree.push_back(deg);
        ++out.complex.dims[deg];
    }
    // collapse zero entries
    for (auto it = out.complex.dims.begin(); it != out.complex.dims.end();)
        it = it->second == 0 ? out.complex.dims.erase(it) : std::next(it);

    // induced differential per degree
    std::map<int, std::vector<long>> by_degree;
    for (long c = 0; c < q.reps.cols(); ++c) by_degree[rep_degree[static_cast<size_t>(c)]].push_back(c);
    const std::vector<long> no_cols;
    for (auto& [deg, cols] : by_degree) {
        long tgt = out.complex.dim(deg - 1);
        Matrix dmat(f, tgt, static_cast<long>(cols.size()));
        auto tit = by_degree.find(deg - 1);
        const std::vector<long>& tcols = tit == by_degree.end() ? no_cols : tit->second;
        for (size_t cc = 0; cc < cols.size(); ++cc) {
            auto coords = q.coord_map.apply(a.d(q.reps.column_vector(cols[cc])));
            for (size_t tt = 0; tt < tcols.size(); ++tt)
                dmat.set(static_cast<long>(tt), static_cast<long>(cc), coords[static_cast<size_t>(tcols[tt])]);
        }
        if (tgt > 0 && !dmat.is_zero()) out.complex.diff[deg] = dmat;
    }
    out.complex.validate();
    return out;
}

MappingCone mapping_cone(const SmallExtension& e) {
    e.validate();
    const ArtinianDGAlgebra& A = e.source;
    const Field& f = A.field();
    long na = A.dim();
    long ni = e.kernel.cols();
    long n = na + ni;

    ArtinianDGAlgebra::Raw raw;
    raw.field = f;
    raw.unit = A.unit_index();
    for (long i = 0; i < A.dim(); ++i) {
        raw.names.push_back(A.name(i));
        raw.degrees.push_back(A.degree(i));
    }
    std::vector<int> eta_degree;
    for (long c = 0; c < ni; ++c) {
        int deg = 0;
        for (long k = 0; k < A.dim(); ++k)
            if (!e.kernel.at(k, c).is_zero()) deg = A.degree(k);
        eta_degree.push_back(deg + 1);
        raw.names.push_back("eta" + std::to_string(c));
        raw.degrees.push_back(deg + 1);
    }

    auto extend = [&](const std::vector<Scalar>& va) {
        std::vector<Scalar> v(static_cast<size_t>(n), Scalar::zero(f));
        for (long k = 0; k < na; ++k) v[static_cast<size_t>(k)] = va[static_cast<size_t>(k)];
        return v;
    };

    // products: A-part as in A; m(A) * eta = 0, eta * eta = 0
    for (long i = 0; i < na; ++i)
        for (long j = 0; j < na; ++j) raw.products[{i, j}] = extend(A.mul_basis(i, j));
    std::vector<Scalar> zero(static_cast<size_t>(n), Scalar::zero(f));
    for (long i = 0; i < n; ++i)
        for (long j = std::max(i, na); j < n; ++j) {
            if (i == raw.unit) continue;
            raw.products[{i, j}] = zero;
        }

    // d(eta_c) = (d x_c) eta - (-1)^{|x_c|} x_c
    Matrix ker_coords = [&] {
        auto s = solve(e.kernel, Matrix::identity(f, na));
        // coordinates in the kernel basis are only used on kernel vectors
        return s ? *s : Matrix(f, ni, na);
    }();
    for (long i = 0; i < na; ++i) raw.diff[i] = extend(A.d_basis(i));
    for (long c = 0; c < ni; ++c) {
        std::vector<Scalar> v = zero;
        auto dx = A.d(e.kernel.column_vector(c));  // lies in I
        auto coords = ker_coords.apply(dx);
        for (long cc = 0; cc < ni; ++cc) v[static_cast<size_t>(na + cc)] = coords[static_cast<size_t>(cc)];
        Scalar sign = Scalar(f, (eta_degree[static_cast<size_t>(c)] - 1) % 2 ? 1 : -1);  // -(-1)^{|x|}
        auto xa = e.kernel.column_vector(c);
        for (long k = 0; k < na; ++k) v[static_cast<size_t>(k)] += sign * xa[static_cast<size_t>(k)];
        raw.diff[na + c] = v;
    }

    Matrix to_b(f, e.target.dim(), n);
    for (long j = 0; j < na; ++j) {
        auto col = e.map.column_vector(j);
        for (long i = 0; i < e.target.dim(); ++i) to_b.set(i, j, col[static_cast<size_t>(i)]);
    }
    MappingCone out{ArtinianDGAlgebra::validate(raw), to_b, Matrix(f, n, na)};
    for (long i = 0; i < na; ++i) out.inclusion_of_source.set(i, i, Scalar::one(f));
    AlgebraMorphism check{&out.cone, &e.target, to_b};
    check.validate();
    return out;
}

}  // namespace ddt
