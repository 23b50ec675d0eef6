#include "ddt/dgla.hpp"

#include <set>

namespace ddt {

namespace {

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

bool vec_is_zero(const std::vector<Scalar>& v) {
    for (auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<std::pair<long, Scalar>> sparsify(const std::vector<Scalar>& v) {
    std::vector<std::pair<long, Scalar>> out;
    for (long k = 0; k < static_cast<long>(v.size()); ++k)
        if (!v[static_cast<size_t>(k)].is_zero()) out.push_back({k, v[static_cast<size_t>(k)]});
    return out;
}

}  // namespace

DGLA DGLA::from_sparse_unchecked(SparseRaw raw) {
    DGLA l;
    l.field_ = raw.field;
    l.names_ = std::move(raw.names);
    l.degrees_ = std::move(raw.degrees);
    l.bracket_ = std::move(raw.brackets);
    l.diff_ = std::move(raw.diff);
    return l;
}

DGLA DGLA::validate(const Raw& raw) {
    long p = raw.field.characteristic();
    if (p == 2 || p == 3)
        throw validation_error("DGLA coefficients over F_2 or F_3 are rejected (bracket axioms need p != 2, 3)");

    long n = static_cast<long>(raw.names.size());
    if (raw.names.size() != raw.degrees.size()) throw validation_error("basis name/degree count mismatch");
    {
        std::set<std::string> seen(raw.names.begin(), raw.names.end());
        if (static_cast<long>(seen.size()) != n) throw validation_error("duplicate basis names");
    }

    SparseRaw s;
    s.field = raw.field;
    s.names = raw.names;
    s.degrees = raw.degrees;

    auto given = [&](long i, long j) { return raw.brackets.find({i, j}) != raw.brackets.end(); };
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            std::vector<Scalar> v(static_cast<size_t>(n), Scalar::zero(raw.field));
            if (given(i, j)) {
                v = raw.brackets.at({i, j});
                if (static_cast<long>(v.size()) != n) throw validation_error("bracket coordinate length mismatch");
            } else if (given(j, i)) {
                Scalar sign = Scalar(raw.field, (raw.degrees[static_cast<size_t>(i)] % 2) && (raw.degrees[static_cast<size_t>(j)] % 2) ? 1 : -1);
                v = vec_scale(raw.brackets.at({j, i}), sign);
            }
            auto sp = sparsify(v);
            if (!sp.empty()) s.brackets[{i, j}] = sp;
        }
    for (auto& [i, v] : raw.diff) {
        if (i < 0 || i >= n) throw validation_error("differential index out of range");
        if (static_cast<long>(v.size()) != n) throw validation_error("differential coordinate length mismatch");
        auto sp = sparsify(v);
        if (!sp.empty()) s.diff[i] = sp;
    }

    DGLA l = from_sparse_unchecked(std::move(s));

    // axiom 1: [L^i, L^j] in L^{i+j}; axiom 4: d(L^i) in L^{i+1}
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            auto v = l.bracket_basis(i, j);
            for (long k = 0; k < n; ++k)
                if (!v[static_cast<size_t>(k)].is_zero() && l.degree(k) != l.degree(i) + l.degree(j))
                    throw validation_error("bracket grading fails on (" + l.name(i) + ", " + l.name(j) + ")");
        }
    for (long i = 0; i < n; ++i) {
        auto v = l.d_basis(i);
        for (long k = 0; k < n; ++k)
            if (!v[static_cast<size_t>(k)].is_zero() && l.degree(k) != l.degree(i) + 1)
                throw validation_error("differential grading fails on " + l.name(i));
    }

    // axiom 2: graded antisymmetry
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            Scalar sign = Scalar(raw.field, (l.degree(i) % 2) && (l.degree(j) % 2) ? 1 : -1);
            if (l.bracket_basis(i, j) != vec_scale(l.bracket_basis(j, i), sign))
                throw validation_error("graded antisymmetry fails on (" + l.name(i) + ", " + l.name(j) + ")");
        }

    // axiom 3: graded Jacobi
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
            for (long c = 0; c < n; ++c) {
                auto sgn = [&](long x, long y) {
                    return Scalar(raw.field, (l.degree(x) % 2) && (l.degree(y) % 2) ? -1 : 1);
                };
                auto t1 = vec_scale(l.bracket(l.basis_vector(a), l.bracket_basis(b, c)), sgn(c, a));
                auto t2 = vec_scale(l.bracket(l.basis_vector(b), l.bracket_basis(c, a)), sgn(a, b));
                auto t3 = vec_scale(l.bracket(l.basis_vector(c), l.bracket_basis(a, b)), sgn(b, c));
                if (!vec_is_zero(vec_add(vec_add(t1, t2), t3)))
                    throw validation_error("Jacobi identity fails on (" + l.name(a) + ", " + l.name(b) + ", " +
                                           l.name(c) + ")");
            }

    // axiom 5: d*d = 0
    for (long i = 0; i < n; ++i)
        if (!vec_is_zero(l.d(l.d_basis(i)))) throw validation_error("d*d != 0 on " + l.name(i));

    // axiom 6: Leibniz
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            auto lhs = l.d(l.bracket_basis(i, j));
            Scalar sign = Scalar(raw.field, l.degree(i) % 2 ? -1 : 1);
            auto rhs = vec_add(l.bracket(l.d_basis(i), l.basis_vector(j)),
                               vec_scale(l.bracket(l.basis_vector(i), l.d_basis(j)), sign));
            if (lhs != rhs) throw validation_error("Leibniz rule fails on (" + l.name(i) + ", " + l.name(j) + ")");
        }

    return l;
}

DGLA DGLA::abelian(const Field& f, const std::vector<std::pair<std::string, int>>& gens) {
    Raw r;
    r.field = f;
    for (auto& [nm, deg] : gens) {
        r.names.push_back(nm);
        r.degrees.push_back(deg);
    }
    return validate(r);
}

DGLA DGLA::sl2(const Field& f) {
    Raw r;
    r.field = f;
    r.names = {"e", "f", "h"};
    r.degrees = {0, 0, 0};
    auto coeff = [&](long k, long v) {
        std::vector<Scalar> c(3, Scalar::zero(f));
        c[static_cast<size_t>(k)] = Scalar(f, v);
        return c;
    };
    r.brackets[{0, 1}] = coeff(2, 1);   // [e,f] = h
    r.brackets[{2, 0}] = coeff(0, 2);   // [h,e] = 2e
    r.brackets[{2, 1}] = coeff(1, -2);  // [h,f] = -2f
    return validate(r);
}

DGLA DGLA::obstructed_example(const Field& f) {
    Raw r;
    r.field = f;
    r.names = {"x", "y"};
    r.degrees = {1, 2};
    std::vector<Scalar> y(2, Scalar::zero(f));
    y[1] = Scalar::one(f);
    r.brackets[{0, 0}] = y;  // [x,x] = y
    return validate(r);
}

DGLA DGLA::acyclic_example(const Field& f) {
    Raw r;
    r.field = f;
    r.names = {"a", "x"};
    r.degrees = {0, 1};
    std::vector<Scalar> x(2, Scalar::zero(f));
    x[1] = Scalar::one(f);
    r.diff[0] = x;  // da = x
    return validate(r);
}

long DGLA::find(const std::string& name) const {
    for (long i = 0; i < dim(); ++i)
        if (names_[static_cast<size_t>(i)] == name) return i;
    throw validation_error("unknown generator '" + name + "'");
}

std::vector<Scalar> DGLA::bracket(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const {
    auto r = zero_vector();
    for (long i = 0; i < dim(); ++i) {
        if (a[static_cast<size_t>(i)].is_zero()) continue;
        for (long j = 0; j < dim(); ++j) {
            if (b[static_cast<size_t>(j)].is_zero()) continue;
            auto it = bracket_.find({i, j});
            if (it == bracket_.end()) continue;
            Scalar c = a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
            for (auto& [k, coeff] : it->second) r[static_cast<size_t>(k)] += c * coeff;
        }
    }
    return r;
}

std::vector<Scalar> DGLA::bracket_basis(long i, long j) const {
    auto r = zero_vector();
    auto it = bracket_.find({i, j});
    if (it != bracket_.end())
        for (auto& [k, coeff] : it->second) r[static_cast<size_t>(k)] = coeff;
    return r;
}

std::vector<Scalar> DGLA::d(const std::vector<Scalar>& a) const {
    auto r = zero_vector();
    for (long i = 0; i < dim(); ++i) {
        if (a[static_cast<size_t>(i)].is_zero()) continue;
        auto it = diff_.find(i);
        if (it == diff_.end()) continue;
        for (auto& [k, coeff] : it->second) r[static_cast<size_t>(k)] += a[static_cast<size_t>(i)] * coeff;
    }
    return r;
}

std::vector<Scalar> DGLA::d_basis(long i) const {
    auto r = zero_vector();
    auto it = diff_.find(i);
    if (it != diff_.end())
        for (auto& [k, coeff] : it->second) r[static_cast<size_t>(k)] = coeff;
    return r;
}

std::vector<Scalar> DGLA::basis_vector(long i) const {
    auto v = zero_vector();
    v[static_cast<size_t>(i)] = Scalar::one(field_);
    return v;
}

std::vector<long> DGLA::degree_indices(int n) const {
    std::vector<long> out;
    for (long i = 0; i < dim(); ++i)
        if (degree(i) == n) out.push_back(i);
    return out;
}

GradedComplex DGLA::tangent_complex() const {
    GradedComplex c = GradedComplex::zero(field_, Grading::Cochain);
    std::map<int, std::vector<long>> by_degree;
    for (long i = 0; i < dim(); ++i) by_degree[degree(i)].push_back(i);
    for (auto& [n, idx] : by_degree) c.dims[n] = static_cast<long>(idx.size());
    for (auto& [n, idx] : by_degree) {
        auto tgt = by_degree.find(n + 1);
        if (tgt == by_degree.end()) continue;
        Matrix m(field_, static_cast<long>(tgt->second.size()), static_cast<long>(idx.size()));
        for (size_t j = 0; j < idx.size(); ++j) {
            auto dv = d_basis(idx[j]);
            for (size_t i = 0; i < tgt->second.size(); ++i)
                m.set(static_cast<long>(i), static_cast<long>(j), dv[static_cast<size_t>(tgt->second[i])]);
        }
        if (!m.is_zero()) c.diff[n] = m;
    }
    c.validate();
    return c;
}

CohomologyBracket cohomology_bracket(const DGLA& l) {
    if (!l.field().is_rationals())
        throw validation_error("cohomology bracket is computed over characteristic 0 only");
    GradedComplex tc = l.tangent_complex();
    Cohomology h = cohomology(tc);

    CohomologyBracket out;
    out.groups = h.groups;
    out.representatives = h.representatives;

    std::map<int, std::vector<long>> by_degree;
    for (long i = 0; i < l.dim(); ++i) by_degree[l.degree(i)].push_back(i);

    auto lift = [&](int deg, const Matrix& comp_vec, long col) {
        auto v = l.zero_vector();
        auto it = by_degree.find(deg);
        if (it == by_degree.end()) return v;
        for (size_t i = 0; i < it->second.size(); ++i) v[static_cast<size_t>(it->second[i])] = comp_vec.at(static_cast<long>(i), col);
        return v;
    };
    auto project = [&](int deg, const std::vector<Scalar>& full) {
        auto it = by_degree.find(deg);
        std::vector<Scalar> v(it == by_degree.end() ? 0 : it->second.size(), Scalar::zero(l.field()));
        if (it != by_degree.end())
            for (size_t i = 0; i < it->second.size(); ++i) v[i] = full[static_cast<size_t>(it->second[i])];
        return v;
    };

    for (auto& [p, hp] : h.groups.dims) {
        if (hp == 0) continue;
        for (auto& [q, hq] : h.groups.dims) {
            if (hq == 0) continue;
            long hr = h.groups.dim(p + q);
            Matrix table(l.field(), hr, hp * hq);
            for (long i = 0; i < hp; ++i)
                for (long j = 0; j < hq; ++j) {
                    auto a = lift(p, h.representatives.at(p), i);
                    auto b = lift(q, h.representatives.at(q), j);
                    auto br = project(p + q, l.bracket(a, b));
                    if (hr > 0) {
                        Matrix v(l.field(), static_cast<long>(br.size()), 1);
                        v.set_column(0, br);
                        Matrix cls = h.coordinate_maps.at(p + q) * v;
                        for (long r = 0; r < hr; ++r) table.set(r, i * hq + j, cls.at(r, 0));
                    }
                }
            out.constants[{p, q}] = table;
        }
    }
    return out;
}

}  // namespace ddt
