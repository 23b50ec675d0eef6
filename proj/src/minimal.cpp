#include "ddt/minimal.hpp"

#include <algorithm>

namespace ddt {

namespace {

// Layout of W = Tot*(H) at a spot: classes of chain degree r-c (left block)
// and r-c+1 (right block); c = 0 holds the single block H_r.
struct WSpot {
    long left = 0;
    long right = 0;
    long dim() const { return left + right; }
};

WSpot w_spot(const GradedVectorSpace& h, int c, int r) {
    auto d = [&](int m) { return h.dim(m); };
    if (c == 0) return {d(r), 0};
    return {d(r - c), d(r - c + 1)};
}

}  // namespace

MinimalDecomposition minimal_decomposition(const Bicomplex& v) {
    v.validate();
    require_quasi_smooth(v);
    const Field& f = v.field;

    TotalComplex tot = tot_pi(v);
    Cohomology h = cohomology(tot.complex);

    MinimalDecomposition out;
    for (auto& [n, d] : h.groups.dims)
        if (d > 0) out.homology.dims[-n] = d;  // chain degree m = -n

    int bound = v.max_cochain();
    GradedComplex h_chain = GradedComplex::zero(f, Grading::Chain);
    h_chain.dims = out.homology.dims;
    out.minimal_part = tot_pi_star(h_chain, bound);
    const Bicomplex& w = out.minimal_part;

    // ray map phi: f_c -> (-1)^c z^{(c)}, s_c -> d_s z^{(c)}, built per class
    // from the representative cocycles of H(Tot V)
    std::map<Spot, Matrix> phi;
    for (auto& [spot, dmw] : w.dims) {
        if (dmw == 0) continue;
        phi[spot] = Matrix(f, v.dim(spot.first, spot.second), dmw);
    }
    auto rep_component = [&](int n, long q, int c) {
        // component of class (cochain degree n, index q) at spot (c, c-n)
        int r = c - n;
        std::vector<Scalar> comp(static_cast<size_t>(v.dim(c, r)), Scalar::zero(f));
        auto lay = tot.layout.find(n);
        if (lay == tot.layout.end()) return comp;
        auto reps = h.representatives.find(n);
        if (reps == h.representatives.end()) return comp;
        for (auto& blk : lay->second)
            if (blk.spot == Spot{c, r})
                for (long i = 0; i < blk.dim; ++i) comp[static_cast<size_t>(i)] = reps->second.at(blk.offset + i, q);
        return comp;
    };

    for (auto& [spot, m] : phi) {
        auto [c, r] = spot;
        WSpot ws = w_spot(out.homology, c, r);
        Scalar fsign = Scalar(f, c % 2 ? -1 : 1);
        // left block: f_c nodes of classes of chain degree r-c (cochain c-r... n = -(r-c))
        for (long q = 0; q < ws.left; ++q) {
            int n = -(r - c);
            auto comp = rep_component(n, q, c);
            for (long i = 0; i < m.rows(); ++i) m.set(i, q, fsign * comp[static_cast<size_t>(i)]);
        }
        // right block: s_c nodes of classes of chain degree r-c+1
        for (long q = 0; q < ws.right; ++q) {
            int n = -(r - c + 1);
            auto comp = rep_component(n, q, c);  // z^{(c)} lives at (c, r+1)
            Matrix ds = v.ds_from(c, r + 1);
            std::vector<Scalar> val(static_cast<size_t>(v.dim(c, r)), Scalar::zero(f));
            if (ds.rows() > 0) val = ds.apply(comp);
            for (long i = 0; i < m.rows(); ++i) m.set(i, ws.left + q, val[static_cast<size_t>(i)]);
        }
    }

    // solve for the retraction rho with rho phi = id, rho d = d rho
    std::vector<Spot> spots;
    std::map<Spot, long> offset;
    long unknowns = 0;
    for (auto& [spot, dv] : v.dims) {
        long dw = w.dim(spot.first, spot.second);
        if (dv == 0) continue;
        spots.push_back(spot);
        offset[spot] = unknowns;
        unknowns += dw * dv;
    }
    auto var_of = [&](Spot s, long i, long j) {  // rho_s entry (i, j)
        return offset.at(s) + i * v.dim(s.first, s.second) + j;
    };

    std::vector<std::vector<Scalar>> rows;
    std::vector<Scalar> rhs;
    auto new_row = [&]() -> std::vector<Scalar>& {
        rows.push_back(std::vector<Scalar>(static_cast<size_t>(unknowns), Scalar::zero(f)));
        rhs.push_back(Scalar::zero(f));
        return rows.back();
    };

    for (auto& spot : spots) {
        auto [c, r] = spot;
        long dv = v.dim(c, r);
        long dw = w.dim(c, r);
        // rho phi = id
        if (dw > 0) {
            const Matrix& p = phi.at(spot);
            for (long i = 0; i < dw; ++i)
                for (long k = 0; k < dw; ++k) {
                    auto& row = new_row();
                    for (long j = 0; j < dv; ++j) row[static_cast<size_t>(var_of(spot, i, j))] = p.at(j, k);
                    rhs.back() = Scalar(f, i == k ? 1 : 0);
                }
        }
        // horizontal intertwining at (c, r): rho_{c+1,r} V.dc = W.dc rho_{c,r}
        {
            Spot tgt{c + 1, r};
            long dv2 = v.dim(c + 1, r), dw2 = w.dim(c + 1, r);
            Matrix vd = v.dc_from(c, r);
            Matrix wd = w.dc_from(c, r);
            for (long i = 0; i < dw2; ++i)
                for (long j = 0; j < dv; ++j) {
                    auto& row = new_row();
                    if (dv2 > 0 && offset.count(tgt))
                        for (long k = 0; k < dv2; ++k)
                            if (!vd.at(k, j).is_zero()) row[static_cast<size_t>(var_of(tgt, i, k))] += vd.at(k, j);
                    if (dw > 0)
                        for (long k = 0; k < dw; ++k)
                            if (!wd.at(i, k).is_zero()) row[static_cast<size_t>(var_of(spot, k, j))] -= wd.at(i, k);
                }
        }
        // vertical intertwining at (c, r): rho_{c,r-1} V.ds = W.ds rho_{c,r}
        if (r > 0) {
            Spot tgt{c, r - 1};
            long dv2 = v.dim(c, r - 1), dw2 = w.dim(c, r - 1);
            Matrix vd = v.ds_from(c, r);
            Matrix wd = w.ds_from(c, r);
            for (long i = 0; i < dw2; ++i)
                for (long j = 0; j < dv; ++j) {
                    auto& row = new_row();
                    if (dv2 > 0 && offset.count(tgt))
                        for (long k = 0; k < dv2; ++k)
                            if (!vd.at(k, j).is_zero()) row[static_cast<size_t>(var_of(tgt, i, k))] += vd.at(k, j);
                    if (dw > 0)
                        for (long k = 0; k < dw; ++k)
                            if (!wd.at(i, k).is_zero()) row[static_cast<size_t>(var_of(spot, k, j))] -= wd.at(i, k);
                }
        }
    }

    Matrix a(f, static_cast<long>(rows.size()), unknowns);
    Matrix b(f, static_cast<long>(rows.size()), 1);
    for (size_t i = 0; i < rows.size(); ++i) {
        for (long j = 0; j < unknowns; ++j) a.set(static_cast<long>(i), j, rows[i][static_cast<size_t>(j)]);
        b.set(static_cast<long>(i), 0, rhs[i]);
    }
    auto sol = solve(a, b);
    if (!sol)
        throw validation_error(
            "minimal decomposition failed: no bicomplex retraction onto Tot*(H) exists for this input");

    std::map<Spot, Matrix> rho;
    for (auto& spot : spots) {
        long dv = v.dim(spot.first, spot.second);
        long dw = w.dim(spot.first, spot.second);
        Matrix m(f, dw, dv);
        for (long i = 0; i < dw; ++i)
            for (long j = 0; j < dv; ++j) m.set(i, j, sol->at(var_of(spot, i, j), 0));
        rho[spot] = m;
    }

    // U = ker(rho), with induced differentials
    Bicomplex& u = out.acyclic_part;
    u.field = f;
    std::map<Spot, Matrix> kernels;
    for (auto& spot : spots) {
        Matrix k = kernel_basis(rho.at(spot));
        kernels[spot] = k;
        if (k.cols() > 0) u.dims[spot] = k.cols();
    }
    for (auto& spot : spots) {
        auto [c, r] = spot;
        const Matrix& k = kernels.at(spot);
        if (k.cols() == 0) continue;
        auto induced = [&](const Matrix& d, Spot tgt) -> std::optional<Matrix> {
            Matrix img = d * k;
            auto kt = kernels.find(tgt);
            Matrix basis = kt == kernels.end() ? Matrix(f, img.rows(), 0) : kt->second;
            return solve(basis, img);
        };
        if (v.dim(c + 1, r) > 0) {
            auto m = induced(v.dc_from(c, r), {c + 1, r});
            if (!m) throw validation_error("internal: ker(rho) is not d_c-stable");
            if (!m->is_zero()) u.dc[spot] = *m;
        } else if (u.dim(c + 1, r) == 0) {
            // nothing to record
        }
        if (r > 0 && v.dim(c, r - 1) > 0) {
            auto m = induced(v.ds_from(c, r), {c, r - 1});
            if (!m) throw validation_error("internal: ker(rho) is not d_s-stable");
            if (!m->is_zero()) u.ds[spot] = *m;
        }
    }
    u.validate();

    for (auto& spot : spots) {
        long dw = w.dim(spot.first, spot.second);
        Matrix p = dw > 0 ? phi.at(spot) : Matrix(f, v.dim(spot.first, spot.second), 0);
        out.iso[spot] = p.hstack(kernels.at(spot));
    }

    verify_decomposition(v, out);
    return out;
}

void verify_decomposition(const Bicomplex& v, const MinimalDecomposition& d) {
    const Field& f = v.field;
    const Bicomplex& w = d.minimal_part;
    const Bicomplex& u = d.acyclic_part;

    for (auto& [spot, dv] : v.dims) {
        if (dv == 0) continue;
        auto it = d.iso.find(spot);
        if (it == d.iso.end()) throw validation_error("decomposition witness missing a spot");
        const Matrix& m = it->second;
        long dw = w.dim(spot.first, spot.second);
        long du = u.dim(spot.first, spot.second);
        if (m.rows() != dv || m.cols() != dw + du || rank(m) != dv)
            throw validation_error("decomposition witness is not a spotwise isomorphism");
    }
    for (auto& [spot, dsum] : w.dims)
        if (dsum > 0 && v.dim(spot.first, spot.second) != dsum + u.dim(spot.first, spot.second))
            throw validation_error("decomposition dimensions do not add up");

    auto block_sum = [&](const Matrix& a, const Matrix& b) {
        Matrix m(f, a.rows() + b.rows(), a.cols() + b.cols());
        for (long i = 0; i < a.rows(); ++i)
            for (long j = 0; j < a.cols(); ++j) m.set(i, j, a.at(i, j));
        for (long i = 0; i < b.rows(); ++i)
            for (long j = 0; j < b.cols(); ++j) m.set(a.rows() + i, a.cols() + j, b.at(i, j));
        return m;
    };
    auto iso_at = [&](Spot s) {
        auto it = d.iso.find(s);
        if (it != d.iso.end()) return it->second;
        return Matrix(f, v.dim(s.first, s.second), w.dim(s.first, s.second) + u.dim(s.first, s.second));
    };

    for (auto& [spot, dv] : v.dims) {
        if (dv == 0) continue;
        auto [c, r] = spot;
        // d_c
        {
            Matrix lhs = v.dc_from(c, r) * iso_at(spot);
            Matrix rhs = iso_at({c + 1, r}) * block_sum(w.dc_from(c, r), u.dc_from(c, r));
            if (lhs != rhs) throw validation_error("decomposition witness does not intertwine d_c");
        }
        if (r > 0) {
            Matrix lhs = v.ds_from(c, r) * iso_at(spot);
            Matrix rhs = iso_at({c, r - 1}) * block_sum(w.ds_from(c, r), u.ds_from(c, r));
            if (lhs != rhs) throw validation_error("decomposition witness does not intertwine d_s");
        }
    }

    // Tot(U) acyclic
    if (u.total_dim() > 0) {
        Cohomology hu = cohomology(tot_pi(u).complex);
        if (hu.groups.total_dim() != 0) throw validation_error("acyclic part has nonzero Tot homology");
    }
    // recovered homology matches
    Cohomology hv = cohomology(tot_pi(v).complex);
    GradedVectorSpace hv_chain;
    for (auto& [n, dm] : hv.groups.dims)
        if (dm > 0) hv_chain.dims[-n] = dm;
    if (!(hv_chain == d.homology)) throw validation_error("recovered homology does not match H(Tot V)");
}

GradedVectorSpace adams_graded_pieces(const GradedVectorSpace& cot, long a) {
    if (a < 0) throw validation_error("Adams weight must be >= 0");
    if (a == 0) {
        GradedVectorSpace k;
        k.dims[0] = 1;
        return k;
    }
    if (a == 1) return cot;
    return symmetric_power_space(cot, a);
}

}  // namespace ddt
