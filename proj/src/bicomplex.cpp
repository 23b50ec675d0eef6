#include "ddt/bicomplex.hpp"

namespace ddt {

namespace {

std::string spot_str(int c, int r) { return "(" + std::to_string(c) + "," + std::to_string(r) + ")"; }

}  // namespace

Matrix Bicomplex::dc_from(int c, int r) const {
    auto it = dc.find({c, r});
    if (it != dc.end()) return it->second;
    return Matrix(field, dim(c + 1, r), dim(c, r));
}

Matrix Bicomplex::ds_from(int c, int r) const {
    auto it = ds.find({c, r});
    if (it != ds.end()) return it->second;
    return Matrix(field, r > 0 ? dim(c, r - 1) : 0, dim(c, r));
}

void Bicomplex::validate() const {
    for (auto& [s, d] : dims) {
        if (s.first < 0 || s.second < 0)
            throw validation_error("bicomplex spot " + spot_str(s.first, s.second) + " outside the first quadrant");
        if (d < 0) throw validation_error("negative dimension at " + spot_str(s.first, s.second));
    }
    for (auto& [s, m] : dc)
        if (m.rows() != dim(s.first + 1, s.second) || m.cols() != dim(s.first, s.second))
            throw validation_error("d_c shape mismatch at " + spot_str(s.first, s.second));
    for (auto& [s, m] : ds) {
        long target = s.second > 0 ? dim(s.first, s.second - 1) : 0;
        if (m.rows() != target || m.cols() != dim(s.first, s.second))
            throw validation_error("d_s shape mismatch at " + spot_str(s.first, s.second));
    }
    for (auto& [s, d] : dims) {
        auto [c, r] = s;
        if (!(dc_from(c + 1, r) * dc_from(c, r)).is_zero())
            throw validation_error("d_c^2 != 0 at " + spot_str(c, r));
        if (r > 0 && !(ds_from(c, r - 1) * ds_from(c, r)).is_zero())
            throw validation_error("d_s^2 != 0 at " + spot_str(c, r));
        if (r > 0) {
            Matrix lhs = dc_from(c, r - 1) * ds_from(c, r);
            Matrix rhs = ds_from(c + 1, r) * dc_from(c, r);
            if (!(lhs - rhs).is_zero())
                throw validation_error("d_c d_s != d_s d_c at " + spot_str(c, r));
        }
    }
}

int Bicomplex::max_cochain() const {
    int m = 0;
    for (auto& [s, d] : dims)
        if (d > 0 && s.first > m) m = s.first;
    return m;
}

int Bicomplex::max_chain() const {
    int m = 0;
    for (auto& [s, d] : dims)
        if (d > 0 && s.second > m) m = s.second;
    return m;
}

long Bicomplex::total_dim() const {
    long t = 0;
    for (auto& [s, d] : dims) t += d;
    return t;
}

GradedComplex Bicomplex::row(int r) const {
    GradedComplex g = GradedComplex::zero(field, Grading::Cochain);
    for (auto& [s, d] : dims)
        if (s.second == r && d > 0) g.dims[s.first] = d;
    for (auto& [n, d] : g.dims) g.diff[n] = dc_from(n, r);
    return g;
}

GradedComplex Bicomplex::column(int c) const {
    GradedComplex g = GradedComplex::zero(field, Grading::Chain);
    for (auto& [s, d] : dims)
        if (s.first == c && d > 0) g.dims[s.second] = d;
    for (auto& [n, d] : g.dims) g.diff[n] = ds_from(c, n);
    return g;
}

Bicomplex Bicomplex::direct_sum(const Bicomplex& other) const {
    if (field != other.field) throw validation_error("direct sum over different fields");
    Bicomplex r;
    r.field = field;
    std::map<Spot, bool> spots;
    for (auto& [s, d] : dims)
        if (d > 0) spots[s] = true;
    for (auto& [s, d] : other.dims)
        if (d > 0) spots[s] = true;
    for (auto& [s, _] : spots) r.dims[s] = dim(s.first, s.second) + other.dim(s.first, s.second);
    auto block2 = [&](const Matrix& a, const Matrix& b) {
        Matrix m(field, a.rows() + b.rows(), a.cols() + b.cols());
        for (long i = 0; i < a.rows(); ++i)
            for (long j = 0; j < a.cols(); ++j) m.set(i, j, a.at(i, j));
        for (long i = 0; i < b.rows(); ++i)
            for (long j = 0; j < b.cols(); ++j) m.set(a.rows() + i, a.cols() + j, b.at(i, j));
        return m;
    };
    for (auto& [s, _] : spots) {
        auto [c, rr] = s;
        r.dc[s] = block2(dc_from(c, rr), other.dc_from(c, rr));
        if (rr > 0) r.ds[s] = block2(ds_from(c, rr), other.ds_from(c, rr));
    }
    return r;
}

TotalComplex tot_pi(const Bicomplex& b) {
    b.validate();
    TotalComplex t;
    t.complex = GradedComplex::zero(b.field, Grading::Cochain);

    for (auto& [s, d] : b.dims) {
        if (d == 0) continue;
        int n = s.first - s.second;
        auto& blocks = t.layout[n];
        long offset = blocks.empty() ? 0 : blocks.back().offset + blocks.back().dim;
        blocks.push_back({s, offset, d});  // map order: ascending c
        t.complex.dims[n] += d;
    }

    for (auto& [n, blocks] : t.layout) {
        long target_dim = t.complex.dim(n + 1);
        Matrix d(b.field, target_dim, t.complex.dim(n));
        auto target_offset = [&](Spot s) -> long {
            auto it = t.layout.find(n + 1);
            if (it == t.layout.end()) return -1;
            for (auto& blk : it->second)
                if (blk.spot == s) return blk.offset;
            return -1;
        };
        for (auto& blk : blocks) {
            auto [c, r] = blk.spot;
            Matrix mc = b.dc_from(c, r);
            long oc = target_offset({c + 1, r});
            if (oc >= 0 && !mc.is_zero())
                for (long i = 0; i < mc.rows(); ++i)
                    for (long j = 0; j < mc.cols(); ++j) d.set(oc + i, blk.offset + j, mc.at(i, j));
            if (r > 0) {
                Matrix ms = b.ds_from(c, r);
                if (c % 2 != 0) ms = -ms;  // d = d_c + (-1)^c d_s
                long os = target_offset({c, r - 1});
                if (os >= 0 && !ms.is_zero())
                    for (long i = 0; i < ms.rows(); ++i)
                        for (long j = 0; j < ms.cols(); ++j) d.set(os + i, blk.offset + j, ms.at(i, j));
            }
        }
        t.complex.diff[n] = d;
    }
    t.complex.validate();
    return t;
}

Bicomplex tot_pi_star(const GradedComplex& v, int bound) {
    if (v.grading != Grading::Chain)
        throw validation_error("tot_pi_star expects a chain-graded complex (convert via V^n = V_{-n})");
    if (bound < 1) throw validation_error("tot_pi_star truncation bound must be >= 1");
    v.validate();

    Bicomplex b;
    b.field = v.field;
    int lo = 0, hi = 0;
    bool any = false;
    for (auto& [n, d] : v.dims)
        if (d > 0) {
            if (!any) lo = hi = n;
            lo = std::min(lo, n);
            hi = std::max(hi, n);
            any = true;
        }
    if (!any) return b;

    auto dim_at = [&](int c, int r) -> long {
        if (r < 0) return 0;
        if (c == 0) return v.dim(r);
        return v.dim(r - c) + v.dim(r - c + 1);
    };
    for (int c = 0; c <= bound; ++c)
        for (int r = 0; r <= bound + std::max(hi, 0) + 1; ++r) {
            long d = dim_at(c, r);
            if (d > 0) b.dims[{c, r}] = d;
        }

    for (auto& [s, dsz] : b.dims) {
        auto [c, r] = s;
        long lv = c == 0 ? v.dim(r) : v.dim(r - c);   // left block V_{r-c}
        long rv = c == 0 ? 0 : v.dim(r - c + 1);      // right block V_{r-c+1}

        // d_c(v,w) = (0,v): lands in the right block of (c+1, r)
        if (c + 1 <= bound) {
            Matrix m(v.field, dim_at(c + 1, r), dsz);
            long tl = v.dim(r - c - 1);
            for (long j = 0; j < lv; ++j) m.set(tl + j, j, Scalar::one(v.field));
            if (!m.is_zero()) b.dc[s] = m;
        }

        // stored d_s(v,w) = (-1)^c (dv, v - dw)
        if (r > 0) {
            Matrix m(v.field, dim_at(c, r - 1), dsz);
            Scalar sign = Scalar(v.field, c % 2 == 0 ? 1 : -1);
            if (c == 0) {
                Matrix dv = v.differential_from(r);  // V_r -> V_{r-1}
                for (long i = 0; i < dv.rows(); ++i)
                    for (long j = 0; j < dv.cols(); ++j) m.set(i, j, dv.at(i, j) * sign);
            } else {
                long tl = v.dim(r - 1 - c);  // target left block
                Matrix dleft = v.differential_from(r - c);
                for (long i = 0; i < dleft.rows(); ++i)
                    for (long j = 0; j < dleft.cols(); ++j) m.set(i, j, dleft.at(i, j) * sign);
                for (long j = 0; j < lv; ++j) m.set(tl + j, j, sign);
                Matrix dright = v.differential_from(r - c + 1);  // V_{r-c+1} -> V_{r-c}
                for (long i = 0; i < dright.rows(); ++i)
                    for (long j = 0; j < dright.cols(); ++j) m.set(tl + i, lv + j, -dright.at(i, j) * sign);
            }
            if (!m.is_zero()) b.ds[s] = m;
        }
    }
    b.validate();
    return b;
}

}  // namespace ddt
