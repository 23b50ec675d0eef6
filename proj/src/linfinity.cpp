#include "ddt/linfinity.hpp"

namespace ddt {

std::vector<int> LInfinity::shifted_degrees() const {
    std::vector<int> s = degrees;
    for (auto& d : s) --d;
    return s;
}

std::vector<Scalar> LInfinity::op(long k, const std::vector<long>& word) const {
    auto itk = ops.find(k);
    if (itk == ops.end()) return std::vector<Scalar>(static_cast<size_t>(dim()), Scalar::zero(field));
    auto it = itk->second.find(word);
    if (it == itk->second.end()) return std::vector<Scalar>(static_cast<size_t>(dim()), Scalar::zero(field));
    return it->second;
}

namespace {

// enumerate ascending position subsets of size k
void position_subsets(size_t n, size_t k, std::vector<std::vector<size_t>>& out) {
    if (k > n) return;
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        size_t i = k;
        while (i > 0 && idx[i - 1] == n - (k - i) - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

Matrix LInfinity::coderivation_square(long w) const {
    if (w < 1 || w > k_max) throw validation_error("coderivation weight out of range");
    auto sdeg = shifted_degrees();
    auto words = weight_basis(dim(), w, sdeg);

    Matrix out(field, dim(), static_cast<long>(words.size()));
    for (size_t col = 0; col < words.size(); ++col) {
        const auto& word = words[col];
        // D^2 cogenerator component: sum over k, position subsets S of size k:
        // l_{w-k+1}( l_k(word_S) (.) word_{S^c} )
        for (long k = 1; k <= std::min<long>(w, k_max); ++k) {
            long k2 = w - k + 1;
            if (k2 > k_max) continue;
            std::vector<std::vector<size_t>> subsets;
            position_subsets(word.size(), static_cast<size_t>(k), subsets);
            for (auto& s : subsets) {
                int esign = extraction_sign(word, s, sdeg);
                std::vector<long> sub, rest;
                std::vector<bool> in(word.size(), false);
                for (size_t p : s) in[p] = true;
                for (size_t p = 0; p < word.size(); ++p) (in[p] ? sub : rest).push_back(word[p]);

                auto val = op(k, sub);  // V-coordinates, reused as shifted generators
                for (long g = 0; g < dim(); ++g) {
                    if (val[static_cast<size_t>(g)].is_zero()) continue;
                    std::vector<long> nw;
                    nw.push_back(g);
                    for (long r : rest) nw.push_back(r);
                    auto [sorted, sgn] = sort_word(nw, sdeg);
                    if (sgn == 0) continue;
                    auto inner = op(k2, sorted);
                    Scalar c = Scalar(field, esign * sgn) * val[static_cast<size_t>(g)];
                    for (long t = 0; t < dim(); ++t)
                        if (!inner[static_cast<size_t>(t)].is_zero())
                            out.set(t, static_cast<long>(col), out.at(t, static_cast<long>(col)) + c * inner[static_cast<size_t>(t)]);
                }
            }
        }
    }
    return out;
}

GradedComplex LInfinity::tangent_complex() const {
    GradedComplex c = GradedComplex::zero(field, Grading::Cochain);
    std::map<int, std::vector<long>> by_degree;
    for (long i = 0; i < dim(); ++i) by_degree[degrees[static_cast<size_t>(i)]].push_back(i);
    for (auto& [n, idx] : by_degree) c.dims[n] = static_cast<long>(idx.size());
    for (auto& [n, idx] : by_degree) {
        auto tgt = by_degree.find(n + 1);
        if (tgt == by_degree.end()) continue;
        Matrix m(field, static_cast<long>(tgt->second.size()), static_cast<long>(idx.size()));
        for (size_t j = 0; j < idx.size(); ++j) {
            auto dv = op(1, {idx[j]});
            for (size_t i = 0; i < tgt->second.size(); ++i)
                m.set(static_cast<long>(i), static_cast<long>(j), dv[static_cast<size_t>(tgt->second[i])]);
        }
        if (!m.is_zero()) c.diff[n] = m;
    }
    c.validate();
    return c;
}

LInfinity dgla_to_linfinity(const DGLA& l, long k_max) {
    LInfinity v;
    v.field = l.field();
    v.k_max = k_max;
    for (long i = 0; i < l.dim(); ++i) {
        v.names.push_back(l.name(i));
        v.degrees.push_back(l.degree(i));
    }
    for (long i = 0; i < l.dim(); ++i) {
        auto dv = l.d_basis(i);
        bool nz = false;
        for (auto& x : dv) nz = nz || !x.is_zero();
        if (nz) v.ops[1][{i}] = dv;
    }
    auto sdeg = v.shifted_degrees();
    for (long i = 0; i < l.dim(); ++i)
        for (long j = i; j < l.dim(); ++j) {
            if (sdeg[static_cast<size_t>(i)] % 2 && i == j) continue;  // odd square is zero in Gamma^2
            auto br = l.bracket_basis(i, j);
            Scalar sign = Scalar(l.field(), l.degree(i) % 2 ? -1 : 1);  // l2(sx, sy) = (-1)^{|x|} s[x,y]
            bool nz = false;
            std::vector<Scalar> val(br.size(), Scalar::zero(l.field()));
            for (size_t k = 0; k < br.size(); ++k) {
                val[k] = sign * br[k];
                nz = nz || !val[k].is_zero();
            }
            if (nz) v.ops[2][{i, j}] = val;
        }
    return v;
}

CoproductTerms comultiplication(const std::vector<long>& word, const std::vector<int>& degrees, const Field& f) {
    CoproductTerms out;
    std::vector<std::vector<size_t>> subsets;
    for (size_t k = 1; k < word.size(); ++k) position_subsets(word.size(), k, subsets);
    for (auto& s : subsets) {
        int esign = extraction_sign(word, s, degrees);
        std::vector<long> left, right;
        std::vector<bool> in(word.size(), false);
        for (size_t p : s) in[p] = true;
        for (size_t p = 0; p < word.size(); ++p) (in[p] ? left : right).push_back(word[p]);
        out.push_back({left, right, Scalar(f, esign)});
    }
    return out;
}

}  // namespace ddt
