#include "ddt/mc.hpp"

#include <algorithm>

namespace ddt {

namespace {

std::vector<Scalar> vec_add(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    std::vector<Scalar> r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

bool vec_is_zero(const std::vector<Scalar>& v) {
    for (auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace

LieRingTensor::LieRingTensor(const DGLA& l, const ArtinianDGAlgebra& a) : lie_(&l), ring_(&a) {
    if (l.field() != a.field()) throw validation_error("DGLA and coefficient ring live over different fields");
    // order pairs by (chain degree of ring element, lie index, ring index)
    std::vector<std::tuple<int, long, long>> all;
    for (long j : a.ideal())
        for (long i = 0; i < l.dim(); ++i) all.push_back({a.degree(j), i, j});
    std::sort(all.begin(), all.end());
    for (auto& [dr, i, j] : all) {
        int deg = l.degree(i) - dr;
        index_[{i, j}] = static_cast<long>(components_[deg].size());
        components_[deg].push_back({i, j});
    }
}

const std::vector<LieRingTensor::Pair>& LieRingTensor::component(int degree) const {
    static const std::vector<Pair> empty;
    auto it = components_.find(degree);
    return it == components_.end() ? empty : it->second;
}

int LieRingTensor::pair_degree(const Pair& p) const { return lie_->degree(p.lie) - ring_->degree(p.ring); }

std::string LieRingTensor::pair_name(const Pair& p) const {
    return lie_->name(p.lie) + "*" + ring_->name(p.ring);
}

Matrix LieRingTensor::differential(int degree) const {
    const Field& f = lie_->field();
    auto& src = component(degree);
    auto& tgt = component(degree + 1);
    Matrix m(f, static_cast<long>(tgt.size()), static_cast<long>(src.size()));
    for (size_t col = 0; col < src.size(); ++col) {
        auto [i, j] = src[col];
        // dx (x) r
        auto dx = lie_->d_basis(i);
        for (long k = 0; k < lie_->dim(); ++k)
            if (!dx[static_cast<size_t>(k)].is_zero()) {
                auto it = index_.find({k, j});
                if (it != index_.end())
                    m.set(it->second, static_cast<long>(col), m.at(it->second, static_cast<long>(col)) + dx[static_cast<size_t>(k)]);
            }
        // (-1)^{|x|} x (x) dr
        auto dr = ring_->d_basis(j);
        Scalar sign = Scalar(f, lie_->degree(i) % 2 ? -1 : 1);
        for (long s = 0; s < ring_->dim(); ++s)
            if (!dr[static_cast<size_t>(s)].is_zero()) {
                auto it = index_.find({i, s});
                if (it != index_.end())
                    m.set(it->second, static_cast<long>(col),
                          m.at(it->second, static_cast<long>(col)) + sign * dr[static_cast<size_t>(s)]);
            }
    }
    return m;
}

std::vector<Scalar> LieRingTensor::apply_differential(int degree, const std::vector<Scalar>& v) const {
    return differential(degree).apply(v);
}

std::vector<Scalar> LieRingTensor::bracket(int deg_a, const std::vector<Scalar>& a, int deg_b,
                                           const std::vector<Scalar>& b) const {
    const Field& f = lie_->field();
    auto& ca = component(deg_a);
    auto& cb = component(deg_b);
    auto& ct = component(deg_a + deg_b);
    std::vector<Scalar> out(ct.size(), Scalar::zero(f));
    for (size_t u = 0; u < ca.size(); ++u) {
        if (a[u].is_zero()) continue;
        for (size_t v = 0; v < cb.size(); ++v) {
            if (b[v].is_zero()) continue;
            auto [x, r] = ca[u];
            auto [y, s] = cb[v];
            // [x (x) r, y (x) s] = (-1)^{|r||y|} [x,y] (x) rs
            Scalar c = a[u] * b[v];
            if ((ring_->degree(r) % 2) && (lie_->degree(y) % 2)) c = -c;
            auto br = lie_->bracket_basis(x, y);
            auto rs = ring_->mul_basis(r, s);
            for (long k = 0; k < lie_->dim(); ++k) {
                if (br[static_cast<size_t>(k)].is_zero()) continue;
                for (long t = 0; t < ring_->dim(); ++t) {
                    if (rs[static_cast<size_t>(t)].is_zero()) continue;
                    auto it = index_.find({k, t});
                    if (it == index_.end()) continue;  // unit component cannot occur in m(A)
                    out[static_cast<size_t>(it->second)] += c * br[static_cast<size_t>(k)] * rs[static_cast<size_t>(t)];
                }
            }
        }
    }
    return out;
}

Scalar QuadraticPoly::evaluate(const Field& f, const std::vector<Scalar>& point) const {
    Scalar r = Scalar::zero(f);
    for (size_t i = 0; i < linear.size(); ++i)
        if (!linear[i].is_zero() && !point[i].is_zero()) r += linear[i] * point[i];
    for (auto& [vw, c] : quadratic) {
        const Scalar& pv = point[static_cast<size_t>(vw.first)];
        const Scalar& pw = point[static_cast<size_t>(vw.second)];
        if (!pv.is_zero() && !pw.is_zero()) r += c * pv * pw;
    }
    return r;
}

MCSystem build_mc_system(const DGLA& l, const ArtinianDGAlgebra& a) {
    if (l.field().characteristic() == 2)
        throw validation_error("Maurer-Cartan systems need 1/2: characteristic 2 is rejected");
    MCSystem sys;
    sys.lie = &l;
    sys.ring = &a;
    sys.tensor = std::make_shared<LieRingTensor>(l, a);

    const Field& f = l.field();
    long nv = sys.tensor->dim(1);
    long ne = sys.tensor->dim(2);
    Matrix lin = sys.tensor->differential(1);
    Scalar half = Scalar(f, 1, 2);

    sys.equations.assign(static_cast<size_t>(ne), QuadraticPoly{});
    for (long e = 0; e < ne; ++e) {
        sys.equations[static_cast<size_t>(e)].linear.assign(static_cast<size_t>(nv), Scalar::zero(f));
        for (long v = 0; v < nv; ++v) sys.equations[static_cast<size_t>(e)].linear[static_cast<size_t>(v)] = lin.at(e, v);
    }
    auto unit_vec = [&](long v) {
        std::vector<Scalar> u(static_cast<size_t>(nv), Scalar::zero(f));
        u[static_cast<size_t>(v)] = Scalar::one(f);
        return u;
    };
    for (long v = 0; v < nv; ++v)
        for (long w = v; w < nv; ++w) {
            std::vector<Scalar> coeff;
            if (v == w) {
                coeff = sys.tensor->bracket(1, unit_vec(v), 1, unit_vec(v));
            } else {
                auto vw = sys.tensor->bracket(1, unit_vec(v), 1, unit_vec(w));
                auto wv = sys.tensor->bracket(1, unit_vec(w), 1, unit_vec(v));
                coeff = vec_add(vw, wv);
            }
            for (long e = 0; e < ne; ++e) {
                Scalar c = half * coeff[static_cast<size_t>(e)];
                if (!c.is_zero()) sys.equations[static_cast<size_t>(e)].quadratic[{v, w}] = c;
            }
        }
    return sys;
}

std::vector<Scalar> MCSystem::curvature(const std::vector<Scalar>& omega) const {
    auto d = tensor->apply_differential(1, omega);
    auto br = tensor->bracket(1, omega, 1, omega);
    Scalar half = Scalar(lie->field(), 1, 2);
    for (size_t i = 0; i < d.size(); ++i) d[i] += half * br[i];
    return d;
}

std::vector<Scalar> MCSystem::residual(const std::vector<Scalar>& omega) const {
    std::vector<Scalar> r;
    r.reserve(equations.size());
    for (auto& eq : equations) r.push_back(eq.evaluate(lie->field(), omega));
    return r;
}

bool MCSystem::is_mc(const std::vector<Scalar>& omega) const {
    if (static_cast<long>(omega.size()) != variable_count()) throw validation_error("MC vector has the wrong shape");
    return vec_is_zero(curvature(omega));
}

std::vector<Scalar> gauge_act(const MCSystem& sys, const std::vector<Scalar>& alpha, const std::vector<Scalar>& omega) {
    if (!sys.is_mc(omega)) throw validation_error("gauge_act requires a Maurer-Cartan element");
    const Field& f = sys.lie->field();
    if (static_cast<long>(alpha.size()) != sys.tensor->dim(0)) throw validation_error("gauge parameter has the wrong shape");

    // u = [alpha, omega] - d(alpha)
    auto u = sys.tensor->bracket(0, alpha, 1, omega);
    auto da = sys.tensor->apply_differential(0, alpha);
    for (size_t i = 0; i < u.size(); ++i) u[i] -= da[i];

    auto result = omega;
    long guard = sys.ring->nilpotency_index() + 2;
    std::vector<Scalar> term = u;
    for (long n = 0; !vec_is_zero(term); ++n) {
        if (n > guard) throw validation_error("internal: gauge series failed to terminate");
        Scalar coeff = factorial_scalar(f, n + 1).inverse();
        for (size_t i = 0; i < result.size(); ++i) result[i] += coeff * term[i];
        term = sys.tensor->bracket(0, alpha, 1, term);
    }
    if (!sys.is_mc(result)) throw validation_error("internal: gauge action left the MC locus");
    return result;
}

namespace {

// all vectors of F_p^n in lexicographic order
class FpCube {
public:
    FpCube(const Field& f, long n) : f_(f), digits_(static_cast<size_t>(n), 0), first_(true) {}

    bool next(std::vector<Scalar>& out) {
        if (first_) {
            first_ = false;
        } else {
            long i = static_cast<long>(digits_.size()) - 1;
            while (i >= 0 && digits_[static_cast<size_t>(i)] == f_.p - 1) {
                digits_[static_cast<size_t>(i)] = 0;
                --i;
            }
            if (i < 0) return false;
            ++digits_[static_cast<size_t>(i)];
        }
        out.clear();
        for (long d : digits_) out.push_back(Scalar(f_, d));
        return true;
    }

private:
    Field f_;
    std::vector<long> digits_;
    bool first_;
};

double pow_count(long p, long n) {
    double r = 1;
    for (long i = 0; i < n; ++i) r *= static_cast<double>(p);
    return r;
}

std::vector<long> residues(const std::vector<Scalar>& v) {
    std::vector<long> r;
    for (auto& x : v) r.push_back(x.rational().get_num().get_si());
    return r;
}

}  // namespace

std::vector<std::vector<Scalar>> enumerate_mc(const MCSystem& sys, long budget) {
    const Field& f = sys.lie->field();
    if (f.is_rationals())
        throw validation_error(
            "enumeration over Q is refused; use the emitted polynomial system (mc-system) and tangent data instead");
    if (pow_count(f.p, sys.variable_count()) > static_cast<double>(budget))
        throw validation_error("enumeration budget exceeded: p^vars too large");

    std::vector<std::vector<Scalar>> sols;
    FpCube cube(f, sys.variable_count());
    std::vector<Scalar> cand;
    while (cube.next(cand))
        if (vec_is_zero(sys.residual(cand))) sols.push_back(cand);
    return sols;
}

OrbitPartition deformation_classes(const MCSystem& sys, long budget) {
    const Field& f = sys.lie->field();
    if (f.is_rationals())
        throw validation_error(
            "orbit enumeration over Q is refused; use the emitted polynomial system (mc-system) and tangent data instead");
    if (f.p < 5) throw validation_error("orbit enumeration needs p >= 5");

    OrbitPartition out;
    out.solutions = enumerate_mc(sys, budget);
    std::map<std::vector<long>, long> index;
    for (size_t i = 0; i < out.solutions.size(); ++i) index[residues(out.solutions[i])] = static_cast<long>(i);

    long gauge_dim = sys.tensor->dim(0);
    if (pow_count(f.p, gauge_dim) > static_cast<double>(budget))
        throw validation_error("gauge enumeration budget exceeded");

    // union-find over single gauge steps
    std::vector<long> parent(out.solutions.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<long>(i);
    std::function<long(long)> find = [&](long x) { return parent[static_cast<size_t>(x)] == x ? x : parent[static_cast<size_t>(x)] = find(parent[static_cast<size_t>(x)]); };

    FpCube cube(f, gauge_dim);
    std::vector<Scalar> alpha;
    while (cube.next(alpha)) {
        for (size_t i = 0; i < out.solutions.size(); ++i) {
            auto g = gauge_act(sys, alpha, out.solutions[i]);
            auto it = index.find(residues(g));
            if (it == index.end()) throw validation_error("internal: gauge action left the solution set");
            long a = find(static_cast<long>(i)), b = find(it->second);
            if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
        }
    }

    std::map<long, std::vector<long>> grouped;
    for (size_t i = 0; i < out.solutions.size(); ++i) grouped[find(static_cast<long>(i))].push_back(static_cast<long>(i));
    out.orbit_of.assign(out.solutions.size(), -1);
    for (auto& [root, members] : grouped) {
        for (long m : members) out.orbit_of[static_cast<size_t>(m)] = static_cast<long>(out.orbits.size());
        out.orbits.push_back(members);
    }
    return out;
}

namespace {

// the complex L (x) I for a small extension, with I embedded in A
struct TensorWithKernel {
    GradedComplex complex;  // cochain
    // per degree: list of (lie index, kernel column)
    std::map<int, std::vector<std::pair<long, long>>> basis;
    // embedding into the ambient tensor component of the same degree
    std::map<int, Matrix> embed;
};

TensorWithKernel tensor_with_kernel(const DGLA& l, const SmallExtension& e, const LieRingTensor& ambient) {
    TensorWithKernel t;
    const Field& f = l.field();
    const ArtinianDGAlgebra& a = e.source;
    t.complex = GradedComplex::zero(f, Grading::Cochain);

    std::vector<int> kdeg;
    for (long c = 0; c < e.kernel.cols(); ++c) {
        int deg = 0;
        for (long k = 0; k < a.dim(); ++k)
            if (!e.kernel.at(k, c).is_zero()) deg = a.degree(k);
        kdeg.push_back(deg);
    }
    std::vector<std::tuple<int, int, long, long>> all;  // (kernel chain degree, total, lie, col)
    for (long c = 0; c < e.kernel.cols(); ++c)
        for (long i = 0; i < l.dim(); ++i)
            all.push_back({kdeg[static_cast<size_t>(c)], l.degree(i) - kdeg[static_cast<size_t>(c)], i, c});
    std::sort(all.begin(), all.end());
    for (auto& [kd, tot, i, c] : all) t.basis[tot].push_back({i, c});
    for (auto& [deg, b] : t.basis) t.complex.dims[deg] = static_cast<long>(b.size());

    // kernel coordinates of d_A on kernel columns
    Matrix kcoords = [&] {
        auto s = solve(e.kernel, Matrix::identity(f, a.dim()));
        return s ? *s : Matrix(f, e.kernel.cols(), a.dim());
    }();

    for (auto& [deg, b] : t.basis) {
        auto tgt = t.basis.find(deg + 1);
        if (tgt == t.basis.end()) continue;
        Matrix m(f, static_cast<long>(tgt->second.size()), static_cast<long>(b.size()));
        auto pos = [&](long lie, long col) -> long {
            for (size_t k = 0; k < tgt->second.size(); ++k)
                if (tgt->second[k].first == lie && tgt->second[k].second == col) return static_cast<long>(k);
            return -1;
        };
        for (size_t src = 0; src < b.size(); ++src) {
            auto [i, c] = b[src];
            auto dx = l.d_basis(i);
            for (long k = 0; k < l.dim(); ++k)
                if (!dx[static_cast<size_t>(k)].is_zero()) {
                    long r = pos(k, c);
                    if (r >= 0) m.set(r, static_cast<long>(src), m.at(r, static_cast<long>(src)) + dx[static_cast<size_t>(k)]);
                }
            auto dv = kcoords.apply(a.d(e.kernel.column_vector(c)));
            Scalar sign = Scalar(f, l.degree(i) % 2 ? -1 : 1);
            for (long cc = 0; cc < e.kernel.cols(); ++cc)
                if (!dv[static_cast<size_t>(cc)].is_zero()) {
                    long r = pos(i, cc);
                    if (r >= 0) m.set(r, static_cast<long>(src), m.at(r, static_cast<long>(src)) + sign * dv[static_cast<size_t>(cc)]);
                }
        }
        if (!m.is_zero()) t.complex.diff[deg] = m;
    }
    t.complex.validate();

    for (auto& [deg, b] : t.basis) {
        auto& amb = ambient.component(deg);
        Matrix em(f, static_cast<long>(amb.size()), static_cast<long>(b.size()));
        for (size_t src = 0; src < b.size(); ++src) {
            auto [i, c] = b[src];
            for (long k = 0; k < a.dim(); ++k) {
                if (e.kernel.at(k, c).is_zero()) continue;
                for (size_t t2 = 0; t2 < amb.size(); ++t2)
                    if (amb[t2].lie == i && amb[t2].ring == k)
                        em.set(static_cast<long>(t2), static_cast<long>(src), e.kernel.at(k, c));
            }
        }
        t.embed[deg] = em;
    }
    return t;
}

}  // namespace

bool ObstructionClass::is_zero() const {
    for (auto& x : klass)
        if (!x.is_zero()) return false;
    return true;
}

ObstructionClass obstruction(const SmallExtension& e, const DGLA& l, const std::vector<Scalar>& omega_b) {
    e.validate();
    const Field& f = l.field();
    MCSystem sys_b = build_mc_system(l, e.target);
    if (!sys_b.is_mc(omega_b)) throw validation_error("obstruction requires a Maurer-Cartan base point over B");
    MCSystem sys_a = build_mc_system(l, e.source);

    // degree-matching section of A ->> B
    Matrix section = e.section();
    for (long j = 0; j < section.cols(); ++j)
        for (long i = 0; i < section.rows(); ++i)
            if (!section.at(i, j).is_zero() && e.source.degree(i) != e.target.degree(j))
                section.set(i, j, Scalar::zero(f));

    auto lift_with = [&](const Matrix& sec) {
        std::vector<Scalar> w(static_cast<size_t>(sys_a.variable_count()), Scalar::zero(f));
        auto& vars_b = sys_b.tensor->component(1);
        auto& vars_a = sys_a.tensor->component(1);
        for (size_t v = 0; v < vars_b.size(); ++v) {
            if (omega_b[v].is_zero()) continue;
            auto img = sec.column_vector(vars_b[v].ring);
            for (long k = 0; k < e.source.dim(); ++k) {
                if (img[static_cast<size_t>(k)].is_zero()) continue;
                for (size_t va = 0; va < vars_a.size(); ++va)
                    if (vars_a[va].lie == vars_b[v].lie && vars_a[va].ring == k)
                        w[va] += omega_b[v] * img[static_cast<size_t>(k)];
            }
        }
        return w;
    };

    TensorWithKernel ti = tensor_with_kernel(l, e, *sys_a.tensor);
    Cohomology h = cohomology(ti.complex);

    auto class_of = [&](const std::vector<Scalar>& lift) {
        auto curv = sys_a.curvature(lift);
        Matrix em = ti.embed.count(2) ? ti.embed.at(2) : Matrix(f, sys_a.tensor->dim(2), 0);
        Matrix rhs(f, static_cast<long>(curv.size()), 1);
        rhs.set_column(0, curv);
        auto y = solve(em, rhs);
        if (!y) throw validation_error("internal: curvature of the lift does not land in L (x) I");
        std::vector<Scalar> rep = y->column_vector(0);
        // must be a cocycle
        if (!vec_is_zero(ti.complex.differential_from(2).apply(rep)))
            throw validation_error("internal: obstruction representative is not a cocycle");
        long h2 = h.groups.dim(2);
        std::vector<Scalar> cls(static_cast<size_t>(h2), Scalar::zero(f));
        if (h2 > 0) {
            Matrix v(f, static_cast<long>(rep.size()), 1);
            v.set_column(0, rep);
            Matrix c = h.coordinate_maps.at(2) * v;
            for (long r = 0; r < h2; ++r) cls[static_cast<size_t>(r)] = c.at(r, 0);
        }
        return std::make_pair(cls, rep);
    };

    auto [cls, rep] = class_of(lift_with(section));

    // lift independence: perturb the section by a kernel element of matching degree
    {
        Matrix section2 = section;
        bool perturbed = false;
        for (long j = 0; j < section2.cols() && !perturbed; ++j)
            for (long c = 0; c < e.kernel.cols() && !perturbed; ++c) {
                int kd = 0;
                for (long k = 0; k < e.source.dim(); ++k)
                    if (!e.kernel.at(k, c).is_zero()) kd = e.source.degree(k);
                if (kd != e.target.degree(j)) continue;
                for (long k = 0; k < e.source.dim(); ++k)
                    section2.set(k, j, section2.at(k, j) + e.kernel.at(k, c));
                perturbed = true;
            }
        if (perturbed) {
            auto [cls2, rep2] = class_of(lift_with(section2));
            if (cls2 != cls) throw validation_error("internal: obstruction class depends on the lift");
        }
    }

    ObstructionClass out;
    out.h2.dims = h.groups.dims;
    // keep only degree-2 data visible to callers
    out.klass = cls;
    out.representative = rep;
    return out;
}

long mc_cohomology(const DGLA& l, int n) {
    const Field& f = l.field();
    ArtinianDGAlgebra an = ArtinianDGAlgebra::test_algebra(f, n);
    ArtinianDGAlgebra th = ArtinianDGAlgebra::test_thickening(f, n);
    MCSystem sys_a = build_mc_system(l, an);
    MCSystem sys_t = build_mc_system(l, th);
    for (auto& eq : sys_a.equations)
        if (!eq.is_linear()) throw validation_error("internal: MC system over a square-zero algebra must be linear");
    for (auto& eq : sys_t.equations)
        if (!eq.is_linear()) throw validation_error("internal: MC system over the thickening must be linear");

    Matrix za = kernel_basis(sys_a.tensor->differential(1));
    Matrix zt = kernel_basis(sys_t.tensor->differential(1));

    // restriction along h -> e, h' -> 0
    auto& va = sys_a.tensor->component(1);
    auto& vt = sys_t.tensor->component(1);
    long e_idx = an.find("e");
    long h_idx = th.find("h");
    Matrix r(f, static_cast<long>(va.size()), static_cast<long>(vt.size()));
    for (size_t j = 0; j < vt.size(); ++j) {
        if (vt[j].ring != h_idx) continue;
        for (size_t i = 0; i < va.size(); ++i)
            if (va[i].lie == vt[j].lie && va[i].ring == e_idx) r.set(static_cast<long>(i), static_cast<long>(j), Scalar::one(f));
    }
    Matrix image = r * zt;
    return rank(za) - rank(image);
}

}  // namespace ddt
