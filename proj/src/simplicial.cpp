#include "ddt/simplicial.hpp"

#include <algorithm>

namespace ddt {

namespace {

// Surjections [n] ->> [m] are encoded by their jump sets S, the positions
// k in {1..n} with eta(k) = eta(k-1) + 1; |S| = m.
using JumpSet = std::vector<int>;

std::vector<int> values_of(const JumpSet& s, int n) {
    std::vector<int> v(static_cast<size_t>(n) + 1, 0);
    size_t si = 0;
    for (int k = 1; k <= n; ++k) {
        v[static_cast<size_t>(k)] = v[static_cast<size_t>(k - 1)];
        if (si < s.size() && s[si] == k) {
            ++v[static_cast<size_t>(k)];
            ++si;
        }
    }
    return v;
}

JumpSet jumps_of(const std::vector<int>& values) {
    JumpSet s;
    for (size_t k = 1; k < values.size(); ++k)
        if (values[k] > values[k - 1]) s.push_back(static_cast<int>(k));
    return s;
}

// basis of level n: pairs (jump set, index into C_{|S|}), ordered by (|S|, S, index)
struct LevelBasis {
    std::vector<std::pair<JumpSet, long>> elems;
    long index_of(const JumpSet& s, long j) const {
        for (size_t i = 0; i < elems.size(); ++i)
            if (elems[i].first == s && elems[i].second == j) return static_cast<long>(i);
        throw validation_error("internal: denormalization basis lookup failed");
    }
};

void enumerate_jumpsets(int n, int m, std::vector<JumpSet>& out) {
    JumpSet cur;
    // all m-subsets of {1..n} in lexicographic order
    std::vector<int> idx(static_cast<size_t>(m));
    if (m > n) return;
    if (m == 0) {
        out.push_back({});
        return;
    }
    for (int i = 0; i < m; ++i) idx[static_cast<size_t>(i)] = i + 1;
    while (true) {
        out.push_back(JumpSet(idx.begin(), idx.end()));
        int i = m - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - (m - 1 - i)) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < m; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

LevelBasis level_basis(const GradedComplex& c, int n) {
    LevelBasis b;
    for (int m = 0; m <= n; ++m) {
        long dm = c.dim(m);
        if (dm == 0) continue;
        std::vector<JumpSet> sets;
        enumerate_jumpsets(n, m, sets);
        for (auto& s : sets)
            for (long j = 0; j < dm; ++j) b.elems.push_back({s, j});
    }
    return b;
}

}  // namespace

const Matrix& SimplicialVS::face(int n, int i) const {
    if (n < 1 || n > n_max || i < 0 || i > n)
        throw validation_error("face index out of range: level " + std::to_string(n) + ", i=" + std::to_string(i));
    return faces[static_cast<size_t>(n)][static_cast<size_t>(i)];
}

const Matrix& SimplicialVS::degeneracy(int n, int i) const {
    if (n < 0 || n >= n_max || i < 0 || i > n)
        throw validation_error("degeneracy index out of range: level " + std::to_string(n) + ", i=" + std::to_string(i));
    return degen[static_cast<size_t>(n)][static_cast<size_t>(i)];
}

void SimplicialVS::validate() const {
    if (static_cast<int>(levels.size()) != n_max + 1) throw validation_error("level count mismatch");
    for (int n = 1; n <= n_max; ++n) {
        if (static_cast<int>(faces[static_cast<size_t>(n)].size()) != n + 1)
            throw validation_error("face count mismatch at level " + std::to_string(n));
        for (int i = 0; i <= n; ++i) {
            const Matrix& m = face(n, i);
            if (m.rows() != level_dim(n - 1) || m.cols() != level_dim(n))
                throw validation_error("face shape mismatch at level " + std::to_string(n));
        }
    }
    for (int n = 0; n < n_max; ++n) {
        if (static_cast<int>(degen[static_cast<size_t>(n)].size()) != n + 1)
            throw validation_error("degeneracy count mismatch at level " + std::to_string(n));
        for (int i = 0; i <= n; ++i) {
            const Matrix& m = degeneracy(n, i);
            if (m.rows() != level_dim(n + 1) || m.cols() != level_dim(n))
                throw validation_error("degeneracy shape mismatch at level " + std::to_string(n));
        }
    }
    // simplicial identities, wherever both sides are defined
    for (int n = 2; n <= n_max; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                if (face(n - 1, i) * face(n, j) != face(n - 1, j - 1) * face(n, i))
                    throw validation_error("simplicial identity d_i d_j fails at level " + std::to_string(n));
    for (int n = 0; n + 2 <= n_max; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                if (degeneracy(n + 1, i) * degeneracy(n, j) != degeneracy(n + 1, j + 1) * degeneracy(n, i))
                    throw validation_error("simplicial identity s_i s_j fails at level " + std::to_string(n));
    for (int n = 1; n <= n_max - 1; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                Matrix lhs = face(n + 1, i) * degeneracy(n, j);
                Matrix rhs(field, level_dim(n), level_dim(n));
                if (i < j)
                    rhs = degeneracy(n - 1, j - 1) * face(n, i);
                else if (i == j || i == j + 1)
                    rhs = Matrix::identity(field, level_dim(n));
                else
                    rhs = degeneracy(n - 1, j) * face(n, i - 1);
                if (lhs != rhs)
                    throw validation_error("simplicial identity d_i s_j fails at level " + std::to_string(n));
            }
}

Normalization normalize_s(const SimplicialVS& v) {
    v.validate();
    Normalization out;
    out.complex = GradedComplex::zero(v.field, Grading::Chain);
    out.inclusions.resize(static_cast<size_t>(v.n_max) + 1, Matrix(v.field, 0, 0));

    for (int n = 0; n <= v.n_max; ++n) {
        long dn = v.level_dim(n);
        Matrix inc = Matrix::identity(v.field, dn);
        if (n >= 1) {
            Matrix stacked(v.field, 0, dn);
            for (int i = 1; i <= n; ++i) stacked = stacked.vstack(v.face(n, i));
            inc = kernel_basis(stacked);
        }
        out.inclusions[static_cast<size_t>(n)] = inc;
        if (inc.cols() > 0) out.complex.dims[n] = inc.cols();
    }
    for (int n = 1; n <= v.n_max; ++n) {
        long dn = out.complex.dim(n);
        long dm = out.complex.dim(n - 1);
        if (dn == 0) continue;
        Matrix img = v.face(n, 0) * out.inclusions[static_cast<size_t>(n)];
        auto x = solve(out.inclusions[static_cast<size_t>(n - 1)], img);
        if (!x) throw validation_error("internal: face_0 does not preserve the normalised part");
        if (dm > 0) out.complex.diff[n] = *x;
    }
    out.complex.validate();
    return out;
}

SimplicialVS denormalize_s(const GradedComplex& c, int n_max) {
    if (c.grading != Grading::Chain) throw validation_error("denormalize_s expects a chain complex");
    c.validate();
    for (auto& [n, d] : c.dims)
        if (n < 0 && d > 0) throw validation_error("denormalize_s rejects negative degrees");

    SimplicialVS v;
    v.field = c.field;
    v.n_max = n_max;
    std::vector<LevelBasis> bases;
    for (int n = 0; n <= n_max; ++n) {
        bases.push_back(level_basis(c, n));
        v.levels.push_back(static_cast<long>(bases.back().elems.size()));
    }

    // theta-precomposition: image of summand (S, e) under the map induced by
    // dropping (face) or doubling (degeneracy) an entry of the value vector
    auto map_summand = [&](int n, const JumpSet& s, long e, const std::vector<int>& new_values,
                           const LevelBasis& target, Matrix& out, long col) {
        // epi-mono factorisation of the composite with values new_values
        std::vector<int> img;
        for (int x : new_values)
            if (img.empty() || img.back() != x) {
                if (!img.empty() && x < img.back()) throw validation_error("internal: non-monotone composite");
                img.push_back(x);
            }
        int m = static_cast<int>(s.size());
        int m2 = static_cast<int>(img.size()) - 1;
        std::vector<int> normalized(new_values.size());
        for (size_t k = 0; k < new_values.size(); ++k)
            normalized[k] = static_cast<int>(std::lower_bound(img.begin(), img.end(), new_values[k]) - img.begin());
        JumpSet s2 = jumps_of(normalized);

        if (m2 == m) {  // injection part is the identity
            long row = target.index_of(s2, e);
            out.set(row, col, out.at(row, col) + Scalar::one(c.field));
        } else if (m2 == m - 1) {
            // injection misses exactly one value; only the missing-0 case acts
            // (via the chain differential), all others act as zero
            if (img.empty() || img[0] != 0) {
                // misses 0
                Matrix d = c.differential_from(m);  // C_m -> C_{m-1}
                for (long r = 0; r < d.rows(); ++r) {
                    if (d.at(r, e).is_zero()) continue;
                    long row = target.index_of(s2, r);
                    out.set(row, col, out.at(row, col) + d.at(r, e));
                }
            }
        } else {
            throw validation_error("internal: composite dropped more than one value");
        }
    };

    for (int n = 1; n <= n_max; ++n) {
        std::vector<Matrix> fs;
        for (int i = 0; i <= n; ++i) {
            Matrix f(c.field, v.levels[static_cast<size_t>(n - 1)], v.levels[static_cast<size_t>(n)]);
            for (size_t b = 0; b < bases[static_cast<size_t>(n)].elems.size(); ++b) {
                auto& [s, e] = bases[static_cast<size_t>(n)].elems[b];
                std::vector<int> vals = values_of(s, n);
                std::vector<int> nv;
                for (int k = 0; k <= n; ++k)
                    if (k != i) nv.push_back(vals[static_cast<size_t>(k)]);
                map_summand(n, s, e, nv, bases[static_cast<size_t>(n - 1)], f, static_cast<long>(b));
            }
            fs.push_back(f);
        }
        if (static_cast<int>(v.faces.size()) <= n) v.faces.resize(static_cast<size_t>(n) + 1);
        v.faces[static_cast<size_t>(n)] = fs;
    }
    v.faces.resize(static_cast<size_t>(n_max) + 1);

    for (int n = 0; n < n_max; ++n) {
        std::vector<Matrix> ss;
        for (int i = 0; i <= n; ++i) {
            Matrix g(c.field, v.levels[static_cast<size_t>(n + 1)], v.levels[static_cast<size_t>(n)]);
            for (size_t b = 0; b < bases[static_cast<size_t>(n)].elems.size(); ++b) {
                auto& [s, e] = bases[static_cast<size_t>(n)].elems[b];
                std::vector<int> vals = values_of(s, n);
                // value vector with entry i doubled: (v_0..v_i, v_i, v_{i+1}..v_n)
                std::vector<int> nv;
                for (int k = 0; k <= n; ++k) {
                    nv.push_back(vals[static_cast<size_t>(k)]);
                    if (k == i) nv.push_back(vals[static_cast<size_t>(k)]);
                }
                map_summand(n, s, e, nv, bases[static_cast<size_t>(n + 1)], g, static_cast<long>(b));
            }
            ss.push_back(g);
        }
        if (static_cast<int>(v.degen.size()) <= n) v.degen.resize(static_cast<size_t>(n) + 1);
        v.degen[static_cast<size_t>(n)] = ss;
    }
    v.degen.resize(static_cast<size_t>(n_max) + 1);

    v.validate();
    return v;
}

SimplicialVS test_object_k(const Field& f, int n, int n_max) {
    return denormalize_s(GradedComplex::point(f, Grading::Chain, n), n_max);
}

SimplicialVS test_object_l(const Field& f, int n, int n_max) {
    GradedComplex c = GradedComplex::zero(f, Grading::Chain);
    c.dims[n] = 1;
    c.dims[n + 1] = 1;
    c.diff[n + 1] = Matrix::identity(f, 1);
    return denormalize_s(c, n_max);
}

GradedVectorSpace simplicial_homotopy(const SimplicialVS& v) {
    return cohomology(normalize_s(v).complex).groups;
}

}  // namespace ddt
