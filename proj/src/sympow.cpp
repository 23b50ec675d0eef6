#include "ddt/sympow.hpp"

#include <algorithm>

namespace ddt {

std::pair<std::vector<long>, int> sort_word(std::vector<long> word, const std::vector<int>& degrees) {
    int sign = 1;
    for (size_t i = 1; i < word.size(); ++i)
        for (size_t k = i; k > 0 && word[k] < word[k - 1]; --k) {
            bool odd_pair = (degrees[static_cast<size_t>(word[k])] % 2) && (degrees[static_cast<size_t>(word[k - 1])] % 2);
            if (odd_pair) sign = -sign;
            std::swap(word[k], word[k - 1]);
        }
    for (size_t i = 1; i < word.size(); ++i)
        if (word[i] == word[i - 1] && degrees[static_cast<size_t>(word[i])] % 2) return {word, 0};
    return {word, sign};
}

int extraction_sign(const std::vector<long>& word, const std::vector<size_t>& positions,
                    const std::vector<int>& degrees) {
    int sign = 1;
    std::vector<bool> chosen(word.size(), false);
    for (size_t p : positions) chosen[p] = true;
    for (size_t p : positions) {
        if (degrees[static_cast<size_t>(word[p])] % 2 == 0) continue;
        // odd letter hops over every unchosen odd letter to its left
        for (size_t q = 0; q < p; ++q)
            if (!chosen[q] && degrees[static_cast<size_t>(word[q])] % 2) sign = -sign;
    }
    return sign;
}

std::vector<std::vector<long>> weight_basis(long n_gen, long j, const std::vector<int>& degrees) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    // ascending words, odd generators without repetition
    auto rec = [&](auto&& self, long start, long remaining) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (long g = start; g < n_gen; ++g) {
            bool odd = degrees[static_cast<size_t>(g)] % 2;
            if (odd && !cur.empty() && cur.back() == g) continue;
            cur.push_back(g);
            self(self, odd ? g + 1 : g, remaining - 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, j);
    return out;
}

FlatBasis FlatBasis::of(const GradedComplex& v) {
    FlatBasis b;
    for (auto& [n, d] : v.dims)
        for (long i = 0; i < d; ++i) {
            b.index[{n, i}] = static_cast<long>(b.degrees.size());
            b.degrees.push_back(n);
            b.location.push_back({n, i});
        }
    return b;
}

GradedComplex symmetric_power_complex(const GradedComplex& v, long j) {
    if (v.field.characteristic() != 0)
        throw validation_error("symmetric powers are implemented in characteristic 0 only");
    if (j < 1) throw validation_error("symmetric power weight must be >= 1");
    v.validate();
    const Field& f = v.field;

    FlatBasis fb = FlatBasis::of(v);
    long n_gen = static_cast<long>(fb.degrees.size());
    auto words = weight_basis(n_gen, j, fb.degrees);

    auto word_degree = [&](const std::vector<long>& w) {
        int d = 0;
        for (long g : w) d += fb.degrees[static_cast<size_t>(g)];
        return d;
    };

    // per-degree word lists and index maps
    std::map<int, std::vector<std::vector<long>>> by_degree;
    std::map<std::vector<long>, std::pair<int, long>> where;
    for (auto& w : words) {
        int d = word_degree(w);
        where[w] = {d, static_cast<long>(by_degree[d].size())};
        by_degree[d].push_back(w);
    }

    GradedComplex out = GradedComplex::zero(f, v.grading);
    for (auto& [d, ws] : by_degree) out.dims[d] = static_cast<long>(ws.size());

    int step = v.grading == Grading::Cochain ? 1 : -1;
    for (auto& [d, ws] : by_degree) {
        long tgt = out.dim(d + step);
        if (tgt == 0) continue;
        Matrix dmat(f, tgt, static_cast<long>(ws.size()));
        for (size_t col = 0; col < ws.size(); ++col) {
            const auto& w = ws[col];
            Scalar prefix = Scalar::one(f);
            for (size_t pos = 0; pos < w.size(); ++pos) {
                auto [deg_g, idx_g] = fb.location[static_cast<size_t>(w[pos])];
                Matrix dv = v.differential_from(deg_g);
                if (pos > 0) {
                    int prior = fb.degrees[static_cast<size_t>(w[pos - 1])];
                    if (prior % 2) prefix = -prefix;
                }
                if (dv.rows() == 0) continue;
                for (long r = 0; r < dv.rows(); ++r) {
                    if (dv.at(r, idx_g).is_zero()) continue;
                    long gen = fb.index.at({deg_g + step, r});
                    std::vector<long> nw = w;
                    nw[pos] = gen;
                    auto [sorted, sgn] = sort_word(nw, fb.degrees);
                    if (sgn == 0) continue;
                    auto it = where.find(sorted);
                    if (it == where.end()) continue;
                    auto [wd, wi] = it->second;
                    dmat.set(wi, static_cast<long>(col),
                             dmat.at(wi, static_cast<long>(col)) + prefix * Scalar(f, sgn) * dv.at(r, idx_g));
                }
            }
        }
        if (!dmat.is_zero()) out.diff[d] = dmat;
    }
    out.validate();
    return out;
}

GradedVectorSpace symmetric_power_space(const GradedVectorSpace& v, long j) {
    GradedComplex c = GradedComplex::zero(Field::rationals(), Grading::Cochain);
    for (auto& [n, d] : v.dims)
        if (d > 0) c.dims[n] = d;
    FlatBasis fb = FlatBasis::of(c);
    auto words = weight_basis(static_cast<long>(fb.degrees.size()), j, fb.degrees);
    GradedVectorSpace out;
    for (auto& w : words) {
        int d = 0;
        for (long g : w) d += fb.degrees[static_cast<size_t>(g)];
        ++out.dims[d];
    }
    return out;
}

}  // namespace ddt
