#include "ddt/generators.hpp"

#include <algorithm>

#include "ddt/sympow.hpp"

namespace ddt {

Scalar random_scalar(const Field& f, Rng& rng) {
    if (f.is_rationals()) {
        std::uniform_int_distribution<long> d(-2, 2);
        return Scalar(f, d(rng));
    }
    std::uniform_int_distribution<long> d(0, f.p - 1);
    return Scalar(f, d(rng));
}

Matrix random_matrix(const Field& f, long rows, long cols, Rng& rng) {
    Matrix m(f, rows, cols);
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) m.set(i, j, random_scalar(f, rng));
    return m;
}

GradedComplex random_complex(const Field& f, Grading g, int lo, int hi, long max_dim, Rng& rng) {
    GradedComplex c = GradedComplex::zero(f, g);
    std::uniform_int_distribution<long> dim_dist(0, max_dim);
    for (int n = lo; n <= hi; ++n) {
        long d = dim_dist(rng);
        if (d > 0) c.dims[n] = d;
    }
    // build differentials from the source side; each one factors through a
    // complement of the previous image, forcing d*d = 0
    std::vector<int> order;
    for (auto& [n, d] : c.dims) order.push_back(n);
    if (g == Grading::Chain) std::reverse(order.begin(), order.end());
    Matrix prev(f, 0, 0);
    bool has_prev = false;
    for (int n : order) {
        int t = c.diff_target(n);
        if (c.dim(t) == 0) {
            has_prev = false;
            continue;
        }
        Matrix d(f, c.dim(t), c.dim(n));
        if (has_prev && prev.cols() == c.dim(n)) {
            CokernelProjection cp = cokernel_projection(prev);
            d = random_matrix(f, c.dim(t), cp.dim, rng) * cp.projector;
        } else {
            d = random_matrix(f, c.dim(t), c.dim(n), rng);
        }
        if (!d.is_zero()) c.diff[n] = d;
        prev = d;
        has_prev = true;
    }
    c.validate();
    return c;
}

GradedVectorSpace random_graded_space(int lo, int hi, long max_dim, Rng& rng) {
    GradedVectorSpace v;
    std::uniform_int_distribution<long> dim_dist(0, max_dim);
    for (int n = lo; n <= hi; ++n) {
        long d = dim_dist(rng);
        if (d > 0) v.dims[n] = d;
    }
    return v;
}

namespace {

Matrix random_invertible(const Field& f, long n, Rng& rng) {
    // start from the identity and apply a few random elementary operations
    Matrix m = Matrix::identity(f, n);
    if (n == 0) return m;
    std::uniform_int_distribution<long> idx(0, n - 1);
    std::uniform_int_distribution<long> coeff(-2, 2);
    long ops = 2 * n + 2;
    for (long k = 0; k < ops; ++k) {
        long i = idx(rng), j = idx(rng);
        long c = coeff(rng);
        if (i == j || c == 0) continue;
        for (long col = 0; col < n; ++col) m.set(i, col, m.at(i, col) + Scalar(f, c) * m.at(j, col));
    }
    return m;
}

}  // namespace

QuasiSmoothInstance random_quasi_smooth(const Field& f, int bound, int h_lo, int h_hi, long h_dim, int squares,
                                        Rng& rng) {
    QuasiSmoothInstance out;
    GradedVectorSpace h = random_graded_space(h_lo, h_hi, h_dim, rng);
    if (h.total_dim() == 0) h.dims[0] = 1;  // keep the instance nontrivial
    out.homology = h;

    GradedComplex hc = GradedComplex::zero(f, Grading::Chain);
    hc.dims = h.dims;
    Bicomplex v = tot_pi_star(hc, bound);

    int rmax = v.max_chain();
    std::uniform_int_distribution<int> cpos(0, std::max(0, bound - 1));
    std::uniform_int_distribution<int> rpos(1, std::max(1, rmax));
    for (int s = 0; s < squares; ++s) {
        Bicomplex sq;
        sq.field = f;
        int c = cpos(rng), r = rpos(rng);
        sq.dims[{c, r}] = 1;
        sq.dims[{c + 1, r}] = 1;
        sq.dims[{c, r - 1}] = 1;
        sq.dims[{c + 1, r - 1}] = 1;
        sq.dc[{c, r}] = Matrix::identity(f, 1);
        sq.dc[{c, r - 1}] = Matrix::identity(f, 1);
        sq.ds[{c, r}] = Matrix::identity(f, 1);
        sq.ds[{c + 1, r}] = Matrix::identity(f, 1);
        v = v.direct_sum(sq);
    }

    // conjugate by random spotwise basis changes
    std::map<Spot, Matrix> g, ginv;
    for (auto& [spot, d] : v.dims) {
        Matrix m = random_invertible(f, d, rng);
        g[spot] = m;
        ginv[spot] = inverse(m);
    }
    Bicomplex w;
    w.field = f;
    w.dims = v.dims;
    for (auto& [spot, d] : v.dims) {
        auto [c, r] = spot;
        if (v.dim(c + 1, r) > 0) {
            Matrix m = g.at({c + 1, r}) * v.dc_from(c, r) * ginv.at(spot);
            if (!m.is_zero()) w.dc[spot] = m;
        }
        if (r > 0 && v.dim(c, r - 1) > 0) {
            Matrix m = g.at({c, r - 1}) * v.ds_from(c, r) * ginv.at(spot);
            if (!m.is_zero()) w.ds[spot] = m;
        }
    }
    w.validate();
    out.bicomplex = w;
    return out;
}

DGAlgebra random_dg_algebra(const Field& f, int n_generators, int top_degree, Rng& rng) {
    // generator degrees in {1, 2}
    std::uniform_int_distribution<int> deg_dist(1, 2);
    std::vector<int> gdeg;
    for (int i = 0; i < n_generators; ++i) gdeg.push_back(deg_dist(rng));
    std::sort(gdeg.begin(), gdeg.end());

    // monomial basis of the free graded-commutative algebra, truncated
    std::vector<std::vector<long>> words;
    std::vector<int> word_degree;
    {
        std::vector<long> cur;
        auto rec = [&](auto&& self, long start, int deg) -> void {
            words.push_back(cur);
            word_degree.push_back(deg);
            for (long gidx = start; gidx < n_generators; ++gidx) {
                int nd = deg + gdeg[static_cast<size_t>(gidx)];
                if (nd > top_degree) continue;
                bool odd = gdeg[static_cast<size_t>(gidx)] % 2;
                if (odd && !cur.empty() && cur.back() == gidx) continue;
                cur.push_back(gidx);
                self(self, odd ? gidx + 1 : gidx, nd);
                cur.pop_back();
            }
        };
        rec(rec, 0, 0);
    }

    std::map<int, std::vector<long>> by_degree;  // degree -> word indices
    for (size_t w = 0; w < words.size(); ++w) by_degree[word_degree[w]].push_back(static_cast<long>(w));
    std::map<std::vector<long>, std::pair<int, long>> where;
    for (auto& [deg, ws] : by_degree)
        for (size_t i = 0; i < ws.size(); ++i) where[words[static_cast<size_t>(ws[i])]] = {deg, static_cast<long>(i)};

    DGAlgebra a;
    a.field = f;
    a.dims.assign(static_cast<size_t>(top_degree) + 1, 0);
    a.names.resize(static_cast<size_t>(top_degree) + 1);
    for (auto& [deg, ws] : by_degree) {
        a.dims[static_cast<size_t>(deg)] = static_cast<long>(ws.size());
        for (long w : ws) {
            std::string nm;
            for (long g : words[static_cast<size_t>(w)]) nm += std::string(1, static_cast<char>('u' + g));
            a.names[static_cast<size_t>(deg)].push_back(nm.empty() ? "1" : nm);
        }
    }
    a.unit.assign(static_cast<size_t>(a.dim(0)), Scalar::zero(f));
    a.unit[0] = Scalar::one(f);

    // products: concatenate words and resort with Koszul signs
    for (int p = 0; p <= top_degree; ++p)
        for (int q = 0; p + q <= top_degree; ++q) {
            Matrix pm(f, a.dim(p + q), a.dim(p) * a.dim(q));
            for (long i = 0; i < a.dim(p); ++i)
                for (long j = 0; j < a.dim(q); ++j) {
                    std::vector<long> w = words[static_cast<size_t>(by_degree[p][static_cast<size_t>(i)])];
                    for (long g : words[static_cast<size_t>(by_degree[q][static_cast<size_t>(j)])]) w.push_back(g);
                    auto [sorted, sgn] = sort_word(w, gdeg);
                    if (sgn == 0) continue;
                    auto it = where.find(sorted);
                    if (it == where.end()) continue;  // beyond the truncation
                    pm.set(it->second.second, i * a.dim(q) + j, Scalar(f, sgn));
                }
            a.product[{p, q}] = pm;
        }

    // differential: assign d(generator) = random cocycle among products of
    // earlier generators, then extend by the Leibniz rule; the replacement
    // happens in place so the prefix sign refers to the letter's position
    std::vector<std::vector<Scalar>> dgen(static_cast<size_t>(n_generators));
    auto d_word_in_place = [&](const std::vector<long>& w) {
        int deg = 0;
        for (long g : w) deg += gdeg[static_cast<size_t>(g)];
        std::vector<Scalar> out(static_cast<size_t>(a.dim(deg + 1)), Scalar::zero(f));
        int prefix = 0;
        for (size_t pos = 0; pos < w.size(); ++pos) {
            long g = w[pos];
            Scalar sign = Scalar(f, prefix % 2 ? -1 : 1);
            auto& dg = dgen[static_cast<size_t>(g)];
            if (!dg.empty()) {
                auto& targets = by_degree[gdeg[static_cast<size_t>(g)] + 1];
                for (size_t t = 0; t < targets.size(); ++t) {
                    if (dg[t].is_zero()) continue;
                    std::vector<long> nw;
                    for (size_t k = 0; k < pos; ++k) nw.push_back(w[k]);
                    for (long gg : words[static_cast<size_t>(targets[t])]) nw.push_back(gg);
                    for (size_t k = pos + 1; k < w.size(); ++k) nw.push_back(w[k]);
                    auto [sorted, sgn] = sort_word(nw, gdeg);
                    if (sgn == 0) continue;
                    auto it = where.find(sorted);
                    if (it == where.end()) continue;
                    out[static_cast<size_t>(it->second.second)] += sign * dg[t] * Scalar(f, sgn);
                }
            }
            prefix += gdeg[static_cast<size_t>(g)];
        }
        return out;
    };

    for (long g = 0; g < n_generators; ++g) {
        int target = gdeg[static_cast<size_t>(g)] + 1;
        if (target > top_degree) {
            dgen[static_cast<size_t>(g)] = std::vector<Scalar>(0);
            continue;
        }
        // candidate monomials: products of generators with index < g only
        auto& targets = by_degree[target];
        std::vector<long> candidates;
        for (size_t t = 0; t < targets.size(); ++t) {
            bool ok = true;
            for (long gg : words[static_cast<size_t>(targets[t])]) ok = ok && gg < g;
            if (ok && !words[static_cast<size_t>(targets[t])].empty()) candidates.push_back(static_cast<long>(t));
        }
        std::vector<Scalar> dg(targets.size(), Scalar::zero(f));
        if (!candidates.empty()) {
            // random element of the cocycle subspace of the candidate span
            if (target + 1 > top_degree) {
                for (long c : candidates) dg[static_cast<size_t>(c)] = random_scalar(f, rng);
            } else {
                Matrix dmat(f, a.dim(target + 1), static_cast<long>(candidates.size()));
                for (size_t c = 0; c < candidates.size(); ++c) {
                    auto dv = d_word_in_place(words[static_cast<size_t>(targets[static_cast<size_t>(candidates[c])]]]);
                    for (long r = 0; r < dmat.rows(); ++r) dmat.set(r, static_cast<long>(c), dv[static_cast<size_t>(r)]);
                }
                Matrix k = kernel_basis(dmat);
                if (k.cols() > 0) {
                    Matrix combo = k * random_matrix(f, k.cols(), 1, rng);
                    for (size_t c = 0; c < candidates.size(); ++c)
                        dg[static_cast<size_t>(candidates[c])] = combo.at(static_cast<long>(c), 0);
                }
            }
        }
        dgen[static_cast<size_t>(g)] = dg;
    }

    for (int deg = 0; deg < top_degree; ++deg) {
        Matrix dm(f, a.dim(deg + 1), a.dim(deg));
        auto& ws = by_degree[deg];
        for (size_t i = 0; i < ws.size(); ++i) {
            auto dv = d_word_in_place(words[static_cast<size_t>(ws[i])]);
            for (long r = 0; r < a.dim(deg + 1); ++r) dm.set(r, static_cast<long>(i), dv[static_cast<size_t>(r)]);
        }
        a.diff.push_back(dm);
    }

    a.validate();
    return a;
}

}  // namespace ddt
