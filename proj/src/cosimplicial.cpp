#include "ddt/cosimplicial.hpp"

#include <algorithm>

namespace ddt {

namespace {

// subsets of {1..n} in (size, lexicographic) order
void enumerate_subsets(int n, int size, std::vector<std::vector<int>>& out) {
    if (size > n) return;
    if (size == 0) {
        out.push_back({});
        return;
    }
    std::vector<int> idx(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i) idx[static_cast<size_t>(i)] = i + 1;
    while (true) {
        out.push_back(idx);
        int i = size - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - (size - 1 - i)) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < size; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

// complement of the missed set: values of the injection delta_J in order
std::vector<int> injection_values(const std::vector<int>& missed, int n) {
    std::vector<int> vals;
    size_t mi = 0;
    for (int x = 0; x <= n; ++x) {
        if (mi < missed.size() && missed[mi] == x) {
            ++mi;
            continue;
        }
        vals.push_back(x);
    }
    return vals;
}

}  // namespace

const Matrix& CosimplicialVS::coface(int n, int i) const {
    if (n < 0 || n >= n_max || i < 0 || i > n + 1)
        throw validation_error("coface index out of range: level " + std::to_string(n) + ", i=" + std::to_string(i));
    return cofaces[static_cast<size_t>(n)][static_cast<size_t>(i)];
}

const Matrix& CosimplicialVS::codegeneracy(int n, int i) const {
    if (n < 1 || n > n_max || i < 0 || i > n - 1)
        throw validation_error("codegeneracy index out of range: level " + std::to_string(n) + ", i=" + std::to_string(i));
    return codegen[static_cast<size_t>(n)][static_cast<size_t>(i)];
}

void CosimplicialVS::validate() const {
    if (static_cast<int>(levels.size()) != n_max + 1) throw validation_error("level count mismatch");
    for (int n = 0; n < n_max; ++n)
        for (int i = 0; i <= n + 1; ++i)
            if (coface(n, i).rows() != level_dim(n + 1) || coface(n, i).cols() != level_dim(n))
                throw validation_error("coface shape mismatch at level " + std::to_string(n));
    for (int n = 1; n <= n_max; ++n)
        for (int i = 0; i <= n - 1; ++i)
            if (codegeneracy(n, i).rows() != level_dim(n - 1) || codegeneracy(n, i).cols() != level_dim(n))
                throw validation_error("codegeneracy shape mismatch at level " + std::to_string(n));

    // cosimplicial identities
    for (int n = 0; n + 2 <= n_max; ++n)
        for (int j = 0; j <= n + 2; ++j)
            for (int i = 0; i < j; ++i)
                if (coface(n + 1, j) * coface(n, i) != coface(n + 1, i) * coface(n, j - 1))
                    throw validation_error("cosimplicial identity d^j d^i fails at level " + std::to_string(n));
    for (int n = 2; n <= n_max; ++n)
        for (int j = 0; j <= n - 2; ++j)
            for (int i = 0; i <= j; ++i)
                if (codegeneracy(n - 1, j) * codegeneracy(n, i) != codegeneracy(n - 1, i) * codegeneracy(n, j + 1))
                    throw validation_error("cosimplicial identity s^j s^i fails at level " + std::to_string(n));
    // d-then-s identities
    for (int n = 0; n < n_max; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                Matrix lhs = codegeneracy(n + 1, j) * coface(n, i);
                Matrix rhs(field, level_dim(n), level_dim(n));
                if (i < j)
                    rhs = coface(n - 1 >= 0 ? n - 1 : 0, i) * codegeneracy(n, j - 1);
                else if (i == j || i == j + 1)
                    rhs = Matrix::identity(field, level_dim(n));
                else
                    rhs = coface(n - 1 >= 0 ? n - 1 : 0, i - 1) * codegeneracy(n, j);
                if (lhs != rhs)
                    throw validation_error("cosimplicial identity s^j d^i fails at level " + std::to_string(n));
            }
}

long CosimplicialAlgebra::index_of(int n, const std::vector<int>& j_set, long e) const {
    auto& b = basis[static_cast<size_t>(n)];
    for (size_t i = 0; i < b.size(); ++i)
        if (b[i].first == j_set && b[i].second == e) return static_cast<long>(i);
    throw validation_error("internal: denormalized basis lookup failed");
}

std::vector<Scalar> CosimplicialAlgebra::mul(int n, const std::vector<Scalar>& a, const std::vector<Scalar>& b) const {
    const Matrix& p = products[static_cast<size_t>(n)];
    long d = spaces.level_dim(n);
    std::vector<Scalar> col(static_cast<size_t>(d * d), Scalar::zero(spaces.field));
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j)
            col[static_cast<size_t>(i * d + j)] = a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
    return p.apply(col);
}

int shuffle_sign(const std::vector<int>& s, const std::vector<int>& t) {
    long inversions = 0;
    for (int a : s)
        for (int b : t)
            if (a > b) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

std::vector<Scalar> shuffle_product(const CosimplicialAlgebra& d, int n, const std::vector<int>& i_set, long a,
                                    const std::vector<int>& j_set, long b) {
    const DGAlgebra& alg = *d.algebra;
    const Field& f = alg.field;
    std::vector<Scalar> out(static_cast<size_t>(d.spaces.level_dim(n)), Scalar::zero(f));

    std::vector<int> j_minus_i, i_minus_j, i_cap_j;
    std::set_difference(j_set.begin(), j_set.end(), i_set.begin(), i_set.end(), std::back_inserter(j_minus_i));
    std::set_difference(i_set.begin(), i_set.end(), j_set.begin(), j_set.end(), std::back_inserter(i_minus_j));
    std::set_intersection(i_set.begin(), i_set.end(), j_set.begin(), j_set.end(), std::back_inserter(i_cap_j));

    int da = n - static_cast<int>(i_set.size());
    int db = n - static_cast<int>(j_set.size());
    if (da != static_cast<int>(j_minus_i.size()) || db != static_cast<int>(i_minus_j.size())) return out;

    Scalar sign = Scalar(f, shuffle_sign(j_minus_i, i_minus_j));
    std::vector<Scalar> va(static_cast<size_t>(alg.dim(da)), Scalar::zero(f));
    std::vector<Scalar> vb(static_cast<size_t>(alg.dim(db)), Scalar::zero(f));
    va[static_cast<size_t>(a)] = Scalar::one(f);
    vb[static_cast<size_t>(b)] = Scalar::one(f);
    std::vector<Scalar> ab = alg.mul(da, va, db, vb);
    for (long r = 0; r < static_cast<long>(ab.size()); ++r) {
        if (ab[static_cast<size_t>(r)].is_zero()) continue;
        long idx = d.index_of(n, i_cap_j, r);
        out[static_cast<size_t>(idx)] += sign * ab[static_cast<size_t>(r)];
    }
    return out;
}

CosimplicialAlgebra denormalize_c(const DGAlgebra& a, int n_max) {
    a.validate();
    const Field& f = a.field;

    CosimplicialAlgebra d;
    d.algebra = &a;
    d.spaces.field = f;
    d.spaces.n_max = n_max;

    for (int n = 0; n <= n_max; ++n) {
        std::vector<std::pair<std::vector<int>, long>> b;
        for (int s = 0; s <= n; ++s) {
            int m = n - s;
            if (a.dim(m) == 0) continue;
            std::vector<std::vector<int>> subsets;
            enumerate_subsets(n, s, subsets);
            for (auto& J : subsets)
                for (long e = 0; e < a.dim(m); ++e) b.push_back({J, e});
        }
        d.basis.push_back(b);
        d.spaces.levels.push_back(static_cast<long>(b.size()));
    }

    // cofaces
    d.spaces.cofaces.resize(static_cast<size_t>(n_max));
    for (int n = 0; n < n_max; ++n) {
        auto& level = d.basis[static_cast<size_t>(n)];
        for (int j = 0; j <= n + 1; ++j) {
            Matrix m(f, d.spaces.level_dim(n + 1), d.spaces.level_dim(n));
            for (size_t col = 0; col < level.size(); ++col) {
                const auto& [J, e] = level[col];
                int deg = n - static_cast<int>(J.size());
                if (j >= 1) {
                    std::vector<int> s2;
                    for (int x : J) s2.push_back(x < j ? x : x + 1);
                    s2.push_back(j);
                    std::sort(s2.begin(), s2.end());
                    long row = d.index_of(n + 1, s2, e);
                    m.set(row, static_cast<long>(col), m.at(row, static_cast<long>(col)) + Scalar::one(f));
                } else {
                    // d^0 d_J = d_{J+1} d^0, then d^0 x = dx - sum_{i>=1} (-1)^i d^i x
                    std::vector<int> jp;
                    for (int x : J) jp.push_back(x + 1);
                    Matrix da = a.differential_from(deg);
                    for (long r = 0; r < da.rows(); ++r) {
                        if (da.at(r, e).is_zero()) continue;
                        long row = d.index_of(n + 1, jp, r);
                        m.set(row, static_cast<long>(col), m.at(row, static_cast<long>(col)) + da.at(r, e));
                    }
                    std::vector<int> comp = injection_values(jp, n + 1);
                    for (int i = 1; i <= deg + 1; ++i) {
                        std::vector<int> s2 = jp;
                        s2.push_back(comp[static_cast<size_t>(i)]);
                        std::sort(s2.begin(), s2.end());
                        long row = d.index_of(n + 1, s2, e);
                        Scalar coeff = Scalar(f, i % 2 == 0 ? -1 : 1);  // -(-1)^i
                        m.set(row, static_cast<long>(col), m.at(row, static_cast<long>(col)) + coeff);
                    }
                }
            }
            d.spaces.cofaces[static_cast<size_t>(n)].push_back(m);
        }
    }

    // codegeneracies
    d.spaces.codegen.resize(static_cast<size_t>(n_max) + 1);
    for (int n = 1; n <= n_max; ++n) {
        auto& level = d.basis[static_cast<size_t>(n)];
        for (int i = 0; i <= n - 1; ++i) {
            Matrix m(f, d.spaces.level_dim(n - 1), d.spaces.level_dim(n));
            for (size_t col = 0; col < level.size(); ++col) {
                const auto& [J, e] = level[col];
                std::vector<int> vals = injection_values(J, n);
                std::vector<int> image;
                bool injective = true;
                for (int x : vals) {
                    int y = x <= i ? x : x - 1;
                    if (!image.empty() && image.back() == y) {
                        injective = false;
                        break;
                    }
                    image.push_back(y);
                }
                if (!injective) continue;  // codegeneracies kill the algebra part
                std::vector<int> missed;
                size_t vi = 0;
                for (int x = 0; x <= n - 1; ++x) {
                    if (vi < image.size() && image[vi] == x)
                        ++vi;
                    else
                        missed.push_back(x);
                }
                long row = d.index_of(n - 1, missed, e);
                m.set(row, static_cast<long>(col), m.at(row, static_cast<long>(col)) + Scalar::one(f));
            }
            d.spaces.codegen[static_cast<size_t>(n)].push_back(m);
        }
    }

    // products and units
    for (int n = 0; n <= n_max; ++n) {
        long dn = d.spaces.level_dim(n);
        Matrix p(f, dn, dn * dn);
        auto& level = d.basis[static_cast<size_t>(n)];
        for (size_t i = 0; i < level.size(); ++i)
            for (size_t j = 0; j < level.size(); ++j) {
                auto prod = shuffle_product(d, n, level[i].first, level[i].second, level[j].first, level[j].second);
                for (long r = 0; r < dn; ++r)
                    if (!prod[static_cast<size_t>(r)].is_zero())
                        p.set(r, static_cast<long>(i) * dn + static_cast<long>(j), prod[static_cast<size_t>(r)]);
            }
        d.products.push_back(p);

        std::vector<int> full;
        for (int k = 1; k <= n; ++k) full.push_back(k);
        std::vector<Scalar> u(static_cast<size_t>(dn), Scalar::zero(f));
        for (long e = 0; e < a.dim(0); ++e)
            if (!a.unit[static_cast<size_t>(e)].is_zero()) u[static_cast<size_t>(d.index_of(n, full, e))] = a.unit[static_cast<size_t>(e)];
        d.units.push_back(u);
    }

    d.spaces.validate();
    return d;
}

Conormalization conormalize_c(const CosimplicialVS& v) {
    v.validate();
    Conormalization out;
    out.complex = GradedComplex::zero(v.field, Grading::Cochain);
    out.inclusions.resize(static_cast<size_t>(v.n_max) + 1, Matrix(v.field, 0, 0));

    for (int n = 0; n <= v.n_max; ++n) {
        long dn = v.level_dim(n);
        Matrix inc = Matrix::identity(v.field, dn);
        if (n >= 1) {
            Matrix stacked(v.field, 0, dn);
            for (int i = 0; i <= n - 1; ++i) stacked = stacked.vstack(v.codegeneracy(n, i));
            inc = kernel_basis(stacked);
        }
        out.inclusions[static_cast<size_t>(n)] = inc;
        if (inc.cols() > 0) out.complex.dims[n] = inc.cols();
    }
    for (int n = 0; n < v.n_max; ++n) {
        long dn = out.complex.dim(n), dm = out.complex.dim(n + 1);
        if (dn == 0 || dm == 0) continue;
        Matrix dsum(v.field, v.level_dim(n + 1), dn);
        for (int i = 0; i <= n + 1; ++i) {
            Matrix t = v.coface(n, i) * out.inclusions[static_cast<size_t>(n)];
            dsum = i % 2 == 0 ? dsum + t : dsum - t;
        }
        auto x = solve(out.inclusions[static_cast<size_t>(n + 1)], dsum);
        if (!x) throw validation_error("internal: conormalization differential does not preserve N");
        out.complex.diff[n] = *x;
    }
    out.complex.validate();
    return out;
}

bool is_quasi_smooth(const Bicomplex& b, std::string* reason) {
    int cmax = b.max_cochain();
    std::map<int, bool> rows_seen, cols_seen;
    for (auto& [s, d] : b.dims)
        if (d > 0) {
            rows_seen[s.second] = true;
            cols_seen[s.first] = true;
        }
    for (auto& [r, _] : rows_seen) {
        Cohomology h = cohomology(b.row(r));
        for (auto& [i, hd] : h.groups.dims)
            if (hd > 0 && i < cmax) {  // the top cochain degree is the truncation edge
                if (reason)
                    *reason = "row at chain degree " + std::to_string(r) + " has H^" + std::to_string(i) + " != 0";
                return false;
            }
    }
    for (auto& [c, _] : cols_seen) {
        if (c == 0) continue;
        Cohomology h = cohomology(b.column(c));
        for (auto& [r, hd] : h.groups.dims)
            if (hd > 0 && r > 0) {
                if (reason)
                    *reason = "column " + std::to_string(c) + " has H_" + std::to_string(r) + " != 0";
                return false;
            }
    }
    return true;
}

void require_quasi_smooth(const Bicomplex& b) {
    std::string reason;
    if (!is_quasi_smooth(b, &reason)) throw validation_error("input is not quasi-smooth: " + reason);
}

Bicomplex lrcorner(const Bicomplex& b) {
    b.validate();
    require_quasi_smooth(b);
    Bicomplex out;
    out.field = b.field;

    // column 0 survives unchanged
    for (auto& [s, d] : b.dims)
        if (s.first == 0 && d > 0) out.dims[s] = d;
    for (auto& [s, m] : b.ds)
        if (s.first == 0) out.ds[s] = m;

    // homology data of positive columns
    std::map<int, Cohomology> h0;
    int cmax = b.max_cochain();
    for (int c = 1; c <= cmax; ++c) h0[c] = cohomology(b.column(c));
    for (int c = 1; c <= cmax; ++c) {
        long d = h0[c].groups.dim(0);
        if (d > 0) out.dims[{c, 0}] = d;
    }

    // induced horizontal maps
    for (int c = 0; c < cmax; ++c) {
        long src = c == 0 ? b.dim(0, 0) : h0[c].groups.dim(0);
        long tgt = h0[c + 1].groups.dim(0);
        if (src == 0 || tgt == 0) continue;
        Matrix reps = c == 0 ? Matrix::identity(b.field, src) : h0[c].representatives.at(0);
        Matrix induced = h0[c + 1].coordinate_maps.at(0) * b.dc_from(c, 0) * reps;
        if (!induced.is_zero()) out.dc[{c, 0}] = induced;
    }
    out.validate();
    return out;
}

}  // namespace ddt
