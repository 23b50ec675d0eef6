#include "ddt/nerve.hpp"

namespace ddt {

namespace {

double pow_count(long p, long n) {
    double r = 1;
    for (long i = 0; i < n; ++i) r *= static_cast<double>(p);
    return r;
}

}  // namespace

DGLA tensor_dgla(const DGLA& l, const DGAlgebra& a, const std::vector<std::vector<std::string>>& names) {
    const Field& f = l.field();

    // basis pairs ordered by (form degree, lie index, form index)
    std::vector<std::tuple<int, long, long>> pairs;
    for (int fd = 0; fd <= a.top_degree(); ++fd)
        for (long i = 0; i < l.dim(); ++i)
            for (long j = 0; j < a.dim(fd); ++j) pairs.push_back({fd, i, j});

    DGLA::SparseRaw raw;
    raw.field = f;
    std::map<std::tuple<int, long, long>, long> index;
    for (auto& [fd, i, j] : pairs) {
        index[{fd, i, j}] = static_cast<long>(raw.names.size());
        const std::string& fn = names.empty() ? a.names[static_cast<size_t>(fd)][static_cast<size_t>(j)]
                                              : names[static_cast<size_t>(fd)][static_cast<size_t>(j)];
        raw.names.push_back(l.name(i) + "*" + fn);
        raw.degrees.push_back(l.degree(i) + fd);
    }

    // d(x (x) g) = dx (x) g + (-1)^{|x|} x (x) dg
    for (size_t s = 0; s < pairs.size(); ++s) {
        auto [fd, i, j] = pairs[s];
        std::vector<std::pair<long, Scalar>> entry;
        auto dx = l.d_basis(i);
        for (long k = 0; k < l.dim(); ++k)
            if (!dx[static_cast<size_t>(k)].is_zero()) entry.push_back({index.at({fd, k, j}), dx[static_cast<size_t>(k)]});
        Matrix da = a.differential_from(fd);
        Scalar sign = Scalar(f, l.degree(i) % 2 ? -1 : 1);
        for (long r = 0; r < da.rows(); ++r)
            if (!da.at(r, j).is_zero()) entry.push_back({index.at({fd + 1, i, r}), sign * da.at(r, j)});
        if (!entry.empty()) raw.diff[static_cast<long>(s)] = entry;
    }

    // [x (x) g, y (x) h] = (-1)^{|g||y|} [x,y] (x) gh
    for (size_t s1 = 0; s1 < pairs.size(); ++s1)
        for (size_t s2 = 0; s2 < pairs.size(); ++s2) {
            auto [fd1, i1, j1] = pairs[s1];
            auto [fd2, i2, j2] = pairs[s2];
            auto br = l.bracket_basis(i1, i2);
            bool nz = false;
            for (auto& x : br) nz = nz || !x.is_zero();
            if (!nz) continue;
            if (fd1 + fd2 > a.top_degree()) continue;
            std::vector<Scalar> g(static_cast<size_t>(a.dim(fd1)), Scalar::zero(f));
            std::vector<Scalar> h(static_cast<size_t>(a.dim(fd2)), Scalar::zero(f));
            g[static_cast<size_t>(j1)] = Scalar::one(f);
            h[static_cast<size_t>(j2)] = Scalar::one(f);
            auto gh = a.mul(fd1, g, fd2, h);
            Scalar sign = Scalar(f, (fd1 % 2) && (l.degree(i2) % 2) ? -1 : 1);
            std::vector<std::pair<long, Scalar>> entry;
            for (long k = 0; k < l.dim(); ++k) {
                if (br[static_cast<size_t>(k)].is_zero()) continue;
                for (long r = 0; r < a.dim(fd1 + fd2); ++r)
                    if (!gh[static_cast<size_t>(r)].is_zero())
                        entry.push_back({index.at({fd1 + fd2, k, r}), sign * br[static_cast<size_t>(k)] * gh[static_cast<size_t>(r)]});
            }
            if (!entry.empty()) raw.brackets[{static_cast<long>(s1), static_cast<long>(s2)}] = entry;
        }

    return DGLA::from_sparse_unchecked(std::move(raw));
}

NerveLevel nerve_level(const DGLA& l, const ArtinianDGAlgebra& a, int n, int d_max) {
    if (n < 0 || n > 2) throw validation_error("nerve levels are supported for n <= 2");
    NerveLevel lvl;
    lvl.n = n;
    lvl.d_max = d_max;
    lvl.forms = sullivan(l.field(), n, d_max);
    lvl.tensor_lie = std::make_shared<DGLA>(tensor_dgla(l, lvl.forms.algebra, {}));
    lvl.system = build_mc_system(*lvl.tensor_lie, a);
    return lvl;
}

Matrix nerve_variable_map(const NerveLevel& src, const NerveLevel& tgt, const std::vector<Matrix>& form_map,
                          const DGLA& l) {
    const Field& f = l.field();
    auto& vs = src.system.tensor->component(1);
    auto& vt = tgt.system.tensor->component(1);

    // decode a tensor-lie index into (form degree, lie index, form index)
    auto decode = [&](const NerveLevel& lvl, long t) {
        long rem = t;
        for (int fd = 0; fd <= lvl.forms.algebra.top_degree(); ++fd) {
            long block = l.dim() * lvl.forms.algebra.dim(fd);
            if (rem < block) return std::make_tuple(fd, rem / lvl.forms.algebra.dim(fd), rem % lvl.forms.algebra.dim(fd));
            rem -= block;
        }
        throw validation_error("internal: tensor index out of range");
    };
    auto encode = [&](const NerveLevel& lvl, int fd, long li, long fi) {
        long t = 0;
        for (int d = 0; d < fd; ++d) t += l.dim() * lvl.forms.algebra.dim(d);
        return t + li * lvl.forms.algebra.dim(fd) + fi;
    };

    Matrix m(f, static_cast<long>(vt.size()), static_cast<long>(vs.size()));
    for (size_t col = 0; col < vs.size(); ++col) {
        auto [fd, li, fi] = decode(src, vs[col].lie);
        if (fd >= static_cast<int>(form_map.size())) continue;
        const Matrix& comp = form_map[static_cast<size_t>(fd)];
        for (long r = 0; r < comp.rows(); ++r) {
            if (comp.at(r, fi).is_zero()) continue;
            long tl = encode(tgt, fd, li, r);
            for (size_t row = 0; row < vt.size(); ++row)
                if (vt[row].lie == tl && vt[row].ring == vs[col].ring)
                    m.set(static_cast<long>(row), static_cast<long>(col), comp.at(r, fi));
        }
    }
    return m;
}

HomotopyResult mc_homotopic(const DGLA& l, const ArtinianDGAlgebra& a, const std::vector<Scalar>& omega0,
                            const std::vector<Scalar>& omega1, int d_max, long budget) {
    const Field& f = l.field();
    HomotopyResult res;
    res.d_max = d_max;
    res.caveat = "a negative verdict is conclusive only up to polynomial degree " + std::to_string(d_max);

    MCSystem base = build_mc_system(l, a);
    if (!base.is_mc(omega0) || !base.is_mc(omega1))
        throw validation_error("mc_homotopic requires Maurer-Cartan endpoints");

    if (f.is_rationals())
        throw validation_error("homotopy search over Q is refused; request the nerve system instead");

    NerveLevel lvl = nerve_level(l, a, 1, d_max);
    auto& vars = lvl.system.tensor->component(1);
    auto& base_vars = base.tensor->component(1);
    auto& theta_vars0 = base.tensor->component(0);

    // classify level-1 variables: ((x (x) t^k), r) and ((x (x) t^k dt), r)
    struct VarInfo {
        bool is_dt;
        int k;      // power of t
        long lie;   // index in L
        long ring;  // ideal index in A
    };
    std::vector<VarInfo> info;
    long forms0 = lvl.forms.algebra.dim(0);
    for (auto& p : vars) {
        long t = p.lie;
        if (t < l.dim() * forms0) {
            long li = t / forms0, fi = t % forms0;
            info.push_back({false, lvl.forms.monomials[0][static_cast<size_t>(fi)].first[0], li, p.ring});
        } else {
            long u = t - l.dim() * forms0;
            long li = u / lvl.forms.algebra.dim(1), fi = u % lvl.forms.algebra.dim(1);
            info.push_back({true, lvl.forms.monomials[1][static_cast<size_t>(fi)].first[0], li, p.ring});
        }
    }

    auto base_index = [&](long lie, long ring) -> long {
        for (size_t i = 0; i < base_vars.size(); ++i)
            if (base_vars[i].lie == lie && base_vars[i].ring == ring) return static_cast<long>(i);
        return -1;
    };

    // free coefficients: xi_k for 1 <= k <= d_max - 1 and all theta_k;
    // xi_0 = omega0 and xi_{d_max} = omega1 - sum of the others
    std::vector<long> free_positions;   // positions into `vars`
    std::vector<long> top_positions(base_vars.size(), -1);
    std::vector<long> zero_positions(base_vars.size(), -1);
    for (size_t v = 0; v < vars.size(); ++v) {
        const VarInfo& iv = info[v];
        if (!iv.is_dt) {
            long b = base_index(iv.lie, iv.ring);
            if (b < 0) throw validation_error("internal: level-1 variable missing at level 0");
            if (iv.k == 0)
                zero_positions[static_cast<size_t>(b)] = static_cast<long>(v);
            else if (iv.k == d_max)
                top_positions[static_cast<size_t>(b)] = static_cast<long>(v);
            else
                free_positions.push_back(static_cast<long>(v));
        } else {
            free_positions.push_back(static_cast<long>(v));
        }
    }
    (void)theta_vars0;

    if (pow_count(f.p, static_cast<long>(free_positions.size())) > static_cast<double>(budget))
        throw validation_error("homotopy search budget exceeded; reduce d_max");

    // enumerate free coefficients
    std::vector<long> digits(free_positions.size(), 0);
    bool first = true;
    std::vector<Scalar> cand(vars.size(), Scalar::zero(f));
    while (true) {
        if (!first) {
            long i = static_cast<long>(digits.size()) - 1;
            while (i >= 0 && digits[static_cast<size_t>(i)] == f.p - 1) {
                digits[static_cast<size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
            ++digits[static_cast<size_t>(i)];
        }
        first = false;

        for (auto& x : cand) x = Scalar::zero(f);
        for (size_t i = 0; i < free_positions.size(); ++i)
            cand[static_cast<size_t>(free_positions[i])] = Scalar(f, digits[i]);
        // pin the endpoints
        bool ok = true;
        for (size_t b = 0; b < base_vars.size(); ++b) {
            if (zero_positions[b] >= 0) cand[static_cast<size_t>(zero_positions[b])] = omega0[b];
            Scalar sum = Scalar::zero(f);
            for (size_t v = 0; v < vars.size(); ++v)
                if (!info[v].is_dt && info[v].lie == base_vars[b].lie && info[v].ring == base_vars[b].ring &&
                    info[v].k != d_max)
                    sum += cand[v];
            if (top_positions[b] >= 0)
                cand[static_cast<size_t>(top_positions[b])] = omega1[b] - sum;
            else if (sum != omega1[b])
                ok = false;
        }
        if (!ok) continue;

        bool solves = true;
        for (auto& eq : lvl.system.equations)
            if (!eq.evaluate(f, cand).is_zero()) {
                solves = false;
                break;
            }
        if (solves) {
            res.homotopic = true;
            res.path = cand;
            return res;
        }
    }
    res.homotopic = false;
    return res;
}

std::vector<std::vector<long>> homotopy_partition(const DGLA& l, const ArtinianDGAlgebra& a,
                                                  const std::vector<std::vector<Scalar>>& solutions, int d_max,
                                                  long budget) {
    long n = static_cast<long>(solutions.size());
    std::vector<long> parent(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
    std::function<long(long)> find = [&](long x) {
        return parent[static_cast<size_t>(x)] == x ? x : parent[static_cast<size_t>(x)] = find(parent[static_cast<size_t>(x)]);
    };
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j) {
            if (find(i) == find(j)) continue;
            if (mc_homotopic(l, a, solutions[static_cast<size_t>(i)], solutions[static_cast<size_t>(j)], d_max, budget).homotopic) {
                long x = find(i), y = find(j);
                parent[static_cast<size_t>(std::max(x, y))] = std::min(x, y);
            }
        }
    std::map<long, std::vector<long>> grouped;
    for (long i = 0; i < n; ++i) grouped[find(i)].push_back(i);
    std::vector<std::vector<long>> out;
    for (auto& [root, members] : grouped) out.push_back(members);
    return out;
}

}  // namespace ddt
