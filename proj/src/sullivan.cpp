#include "ddt/sullivan.hpp"

#include <algorithm>

namespace ddt {

namespace {

using Mono = std::pair<std::vector<int>, unsigned>;  // (exponents, dt mask)

int mono_poly_degree(const Mono& m) {
    int d = 0;
    for (int a : m.first) d += a;
    d += __builtin_popcount(m.second);
    return d;
}

int mono_form_degree(const Mono& m) { return __builtin_popcount(m.second); }

// sign of dt_S * dt_T as a reordering into ascending dt order; 0 on overlap
int dt_merge_sign(unsigned s, unsigned t) {
    if (s & t) return 0;
    int inversions = 0;
    for (int i = 0; i < 32; ++i)
        if (s & (1u << i))
            for (int j = 0; j < i; ++j)
                if (t & (1u << j)) ++inversions;
    return inversions % 2 ? -1 : 1;
}

struct Poly {
    std::map<Mono, Scalar> terms;

    void add(const Field& f, const Mono& m, const Scalar& c, int d_max) {
        if (c.is_zero() || mono_poly_degree(m) > d_max) return;
        auto it = terms.find(m);
        if (it == terms.end())
            terms[m] = c;
        else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
};

Poly poly_mul(const Field& f, const Poly& a, const Poly& b, int n, int d_max) {
    Poly r;
    for (auto& [ma, ca] : a.terms)
        for (auto& [mb, cb] : b.terms) {
            int sign = dt_merge_sign(ma.second, mb.second);
            if (sign == 0) continue;
            Mono m;
            m.first.resize(static_cast<size_t>(n), 0);
            for (int i = 0; i < n; ++i) m.first[static_cast<size_t>(i)] = ma.first[static_cast<size_t>(i)] + mb.first[static_cast<size_t>(i)];
            m.second = ma.second | mb.second;
            r.add(f, m, ca * cb * Scalar(f, sign), d_max);
        }
    return r;
}

Poly poly_d(const Field& f, const Poly& a, int n, int d_max) {
    Poly r;
    for (auto& [m, c] : a.terms)
        for (int i = 0; i < n; ++i) {
            int ai = m.first[static_cast<size_t>(i)];
            if (ai == 0 || (m.second & (1u << i))) continue;
            Mono t = m;
            --t.first[static_cast<size_t>(i)];
            t.second |= (1u << i);
            // move dt_i into ascending position among dt_S
            int before = 0;
            for (int j = 0; j < i; ++j)
                if (m.second & (1u << j)) ++before;
            int sign = before % 2 ? -1 : 1;
            r.add(f, t, c * Scalar(f, ai * sign), d_max);
        }
    return r;
}

}  // namespace

long SullivanForms::index_of(int form_degree, const std::vector<int>& alpha, unsigned mask) const {
    auto& list = monomials[static_cast<size_t>(form_degree)];
    for (size_t i = 0; i < list.size(); ++i)
        if (list[i].first == alpha && list[i].second == mask) return static_cast<long>(i);
    throw validation_error("internal: Sullivan monomial lookup failed");
}

std::string SullivanForms::monomial_name(int form_degree, long index) const {
    auto& [alpha, mask] = monomials[static_cast<size_t>(form_degree)][static_cast<size_t>(index)];
    std::string s;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < alpha[static_cast<size_t>(i)]; ++k) s += "t" + std::to_string(i + 1);
    for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) s += "dt" + std::to_string(i + 1);
    return s.empty() ? "1" : s;
}

SullivanForms sullivan(const Field& f, int n, int d_max) {
    if (n < 0 || n > 2) throw validation_error("Sullivan forms are supported for simplex dimensions n <= 2");
    if (d_max < 1) throw validation_error("polynomial degree cutoff must be >= 1");

    SullivanForms s;
    s.n = n;
    s.d_max = d_max;
    s.monomials.resize(static_cast<size_t>(n) + 1);

    // enumerate monomials t^alpha dt_S, grouped by |S|, ordered by
    // (|alpha|, alpha lexicographic, mask)
    std::vector<std::vector<int>> exponents;
    {
        std::vector<int> cur(static_cast<size_t>(n), 0);
        auto rec = [&](auto&& self, int pos, int remaining) -> void {
            if (pos == n) {
                exponents.push_back(cur);
                return;
            }
            for (int a = 0; a <= remaining; ++a) {
                cur[static_cast<size_t>(pos)] = a;
                self(self, pos + 1, remaining - a);
            }
            cur[static_cast<size_t>(pos)] = 0;
        };
        rec(rec, 0, d_max);
        std::stable_sort(exponents.begin(), exponents.end(), [](const auto& a, const auto& b) {
            int sa = 0, sb = 0;
            for (int x : a) sa += x;
            for (int x : b) sb += x;
            if (sa != sb) return sa < sb;
            return a < b;
        });
    }
    for (auto& alpha : exponents) {
        int pd = 0;
        for (int x : alpha) pd += x;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            int fd = __builtin_popcount(mask);
            if (pd + fd > d_max) continue;
            s.monomials[static_cast<size_t>(fd)].push_back({alpha, mask});
        }
    }

    DGAlgebra& alg = s.algebra;
    alg.field = f;
    for (int fd = 0; fd <= n; ++fd) {
        alg.dims.push_back(static_cast<long>(s.monomials[static_cast<size_t>(fd)].size()));
        std::vector<std::string> nm;
        for (size_t i = 0; i < s.monomials[static_cast<size_t>(fd)].size(); ++i)
            nm.push_back(s.monomial_name(fd, static_cast<long>(i)));
        alg.names.push_back(nm);
    }
    alg.unit.assign(static_cast<size_t>(alg.dim(0)), Scalar::zero(f));
    alg.unit[static_cast<size_t>(s.index_of(0, std::vector<int>(static_cast<size_t>(n), 0), 0))] = Scalar::one(f);

    auto poly_of = [&](int fd, long idx) {
        Poly p;
        p.terms[s.monomials[static_cast<size_t>(fd)][static_cast<size_t>(idx)]] = Scalar::one(f);
        return p;
    };
    auto coords_of = [&](const Poly& p, int fd) {
        std::vector<Scalar> v(static_cast<size_t>(alg.dim(fd)), Scalar::zero(f));
        for (auto& [m, c] : p.terms) {
            if (mono_form_degree(m) != fd) throw validation_error("internal: mixed form degree in Sullivan polynomial");
            v[static_cast<size_t>(s.index_of(fd, m.first, m.second))] = c;
        }
        return v;
    };

    for (int fd = 0; fd < n; ++fd) {
        Matrix dm(f, alg.dim(fd + 1), alg.dim(fd));
        for (long i = 0; i < alg.dim(fd); ++i) {
            auto dv = coords_of(poly_d(f, poly_of(fd, i), n, d_max), fd + 1);
            for (long r = 0; r < alg.dim(fd + 1); ++r) dm.set(r, i, dv[static_cast<size_t>(r)]);
        }
        alg.diff.push_back(dm);
    }

    for (int p = 0; p <= n; ++p)
        for (int q = 0; p + q <= n; ++q) {
            Matrix pm(f, alg.dim(p + q), alg.dim(p) * alg.dim(q));
            for (long i = 0; i < alg.dim(p); ++i)
                for (long j = 0; j < alg.dim(q); ++j) {
                    auto v = coords_of(poly_mul(f, poly_of(p, i), poly_of(q, j), n, d_max), p + q);
                    for (long r = 0; r < alg.dim(p + q); ++r)
                        if (!v[static_cast<size_t>(r)].is_zero()) pm.set(r, i * alg.dim(q) + j, v[static_cast<size_t>(r)]);
                }
            alg.product[{p, q}] = pm;
        }
    return s;
}

namespace {

// pullback of forms along a substitution of chart coordinates: images[j] is
// an affine polynomial (as a Poly in the target chart) for source t_{j+1}
std::vector<Matrix> substitution_map(const SullivanForms& src, const SullivanForms& tgt,
                                     const std::vector<Poly>& images) {
    const Field& f = src.algebra.field;
    std::vector<Matrix> out;
    std::vector<Poly> dimages;
    for (auto& p : images) dimages.push_back(poly_d(f, p, tgt.n, tgt.d_max));

    for (int fd = 0; fd <= src.n; ++fd) {
        Matrix m(f, tgt.algebra.dim(fd), src.algebra.dim(fd));
        for (long col = 0; col < src.algebra.dim(fd); ++col) {
            auto& [alpha, mask] = src.monomials[static_cast<size_t>(fd)][static_cast<size_t>(col)];
            Poly acc;
            acc.terms[{std::vector<int>(static_cast<size_t>(tgt.n), 0), 0u}] = Scalar::one(f);
            for (int i = 0; i < src.n; ++i)
                for (int k = 0; k < alpha[static_cast<size_t>(i)]; ++k) acc = poly_mul(f, acc, images[static_cast<size_t>(i)], tgt.n, tgt.d_max);
            for (int i = 0; i < src.n; ++i)
                if (mask & (1u << i)) acc = poly_mul(f, acc, dimages[static_cast<size_t>(i)], tgt.n, tgt.d_max);
            for (auto& [mono, c] : acc.terms) {
                if (mono_form_degree(mono) != fd) continue;  // dropped forms beyond the target top degree
                long row = tgt.index_of(fd, mono.first, mono.second);
                m.set(row, col, m.at(row, col) + c);
            }
        }
        out.push_back(m);
    }
    return out;
}

Poly affine_const(const Field& f, int n, long value) {
    Poly p;
    if (value != 0) p.terms[{std::vector<int>(static_cast<size_t>(n), 0), 0u}] = Scalar(f, value);
    return p;
}

Poly affine_var(const Field& f, int n, int var) {  // t_{var+1}
    Poly p;
    std::vector<int> alpha(static_cast<size_t>(n), 0);
    alpha[static_cast<size_t>(var)] = 1;
    p.terms[{alpha, 0u}] = Scalar::one(f);
    return p;
}

Poly affine_t0(const Field& f, int n) {  // 1 - sum of chart variables
    Poly p = affine_const(f, n, 1);
    for (int i = 0; i < n; ++i) {
        std::vector<int> alpha(static_cast<size_t>(n), 0);
        alpha[static_cast<size_t>(i)] = 1;
        p.terms[{alpha, 0u}] = Scalar(f, -1);
    }
    return p;
}

Poly poly_add(const Field& f, const Poly& a, const Poly& b, int d_max) {
    Poly r = a;
    for (auto& [m, c] : b.terms) r.add(f, m, c, d_max);
    return r;
}

}  // namespace

std::vector<Matrix> sullivan_face(const SullivanForms& src, const SullivanForms& tgt, int i) {
    if (tgt.n != src.n - 1) throw validation_error("face target must be one simplex dimension lower");
    if (i < 0 || i > src.n) throw validation_error("face index out of range");
    const Field& f = src.algebra.field;
    // barycentric pullback of delta^i: t_j -> t_j (j < i), t_i -> 0,
    // t_j -> t_{j-1} (j > i); index 0 denotes 1 - sum
    std::vector<Poly> images;
    for (int j = 1; j <= src.n; ++j) {
        if (j < i)
            images.push_back(affine_var(f, tgt.n, j - 1));
        else if (j == i)
            images.push_back(affine_const(f, tgt.n, 0));
        else {  // j > i
            int idx = j - 1;
            images.push_back(idx == 0 ? affine_t0(f, tgt.n) : affine_var(f, tgt.n, idx - 1));
        }
    }
    return substitution_map(src, tgt, images);
}

std::vector<Matrix> sullivan_degeneracy(const SullivanForms& src, const SullivanForms& tgt, int i) {
    if (tgt.n != src.n + 1) throw validation_error("degeneracy target must be one simplex dimension higher");
    if (i < 0 || i > src.n) throw validation_error("degeneracy index out of range");
    const Field& f = src.algebra.field;
    // barycentric pullback of sigma^i: t_j -> t_j (j < i), t_i -> t_i + t_{i+1},
    // t_j -> t_{j+1} (j > i)
    std::vector<Poly> images;
    for (int j = 1; j <= src.n; ++j) {
        if (j < i)
            images.push_back(affine_var(f, tgt.n, j - 1));
        else if (j == i)
            images.push_back(poly_add(f, affine_var(f, tgt.n, j - 1), affine_var(f, tgt.n, j), tgt.d_max));
        else
            images.push_back(affine_var(f, tgt.n, j));
    }
    return substitution_map(src, tgt, images);
}

Scalar evaluate_0form(const SullivanForms& a1, const std::vector<Scalar>& coeffs, const Scalar& t) {
    if (a1.n != 1) throw validation_error("evaluation is defined on the 1-simplex");
    const Field& f = a1.algebra.field;
    Scalar r = Scalar::zero(f);
    for (long i = 0; i < a1.algebra.dim(0); ++i) {
        if (coeffs[static_cast<size_t>(i)].is_zero()) continue;
        int k = a1.monomials[0][static_cast<size_t>(i)].first[0];
        Scalar power = Scalar::one(f);
        for (int j = 0; j < k; ++j) power *= t;
        r += coeffs[static_cast<size_t>(i)] * power;
    }
    return r;
}

Scalar integrate(const SullivanForms& a1, const std::vector<Scalar>& one_form) {
    if (a1.n != 1) throw validation_error("integration is defined on the 1-simplex");
    const Field& f = a1.algebra.field;
    Scalar r = Scalar::zero(f);
    for (long i = 0; i < a1.algebra.dim(1); ++i) {
        if (one_form[static_cast<size_t>(i)].is_zero()) continue;
        int k = a1.monomials[1][static_cast<size_t>(i)].first[0];
        r += one_form[static_cast<size_t>(i)] * Scalar(f, 1, k + 1);
    }
    return r;
}

}  // namespace ddt
