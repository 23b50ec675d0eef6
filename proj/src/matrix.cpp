#include "ddt/matrix.hpp"

#include <sstream>

namespace ddt {

Matrix::Matrix(const Field& f, long rows, long cols)
    : rows_(rows), cols_(cols), field_(f), e_(static_cast<size_t>(rows * cols), Scalar::zero(f)) {
    if (rows < 0 || cols < 0) throw validation_error("negative matrix dimension");
}

Matrix Matrix::identity(const Field& f, long n) {
    Matrix m(f, n, n);
    for (long i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
    return m;
}

Matrix Matrix::from_ints(const Field& f, const std::vector<std::vector<long>>& rows) {
    long r = static_cast<long>(rows.size());
    long c = r == 0 ? 0 : static_cast<long>(rows[0].size());
    Matrix m(f, r, c);
    for (long i = 0; i < r; ++i) {
        if (static_cast<long>(rows[i].size()) != c) throw validation_error("ragged matrix literal");
        for (long j = 0; j < c; ++j) m.set(i, j, Scalar(f, rows[i][j]));
    }
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw validation_error("matrix shape mismatch in product");
    Matrix r(field_, rows_, o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (long j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (!b.is_zero()) r.set(i, j, r.at(i, j) + a * b);
            }
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw validation_error("matrix shape mismatch in sum");
    Matrix r(field_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const {
    Matrix r(field_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r(field_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * c;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && e_ == o.e_;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::column(long j) const {
    Matrix r(field_, rows_, 1);
    for (long i = 0; i < rows_; ++i) r.set(i, 0, at(i, j));
    return r;
}

std::vector<Scalar> Matrix::column_vector(long j) const {
    std::vector<Scalar> v(static_cast<size_t>(rows_), Scalar::zero(field_));
    for (long i = 0; i < rows_; ++i) v[static_cast<size_t>(i)] = at(i, j);
    return v;
}

void Matrix::set_column(long j, const std::vector<Scalar>& v) {
    if (static_cast<long>(v.size()) != rows_) throw validation_error("column length mismatch");
    for (long i = 0; i < rows_; ++i) set(i, j, v[static_cast<size_t>(i)]);
}

Matrix Matrix::hstack(const Matrix& o) const {
    if (rows_ != o.rows_) throw validation_error("hstack row mismatch");
    Matrix r(field_, rows_, cols_ + o.cols_);
    for (long i = 0; i < rows_; ++i) {
        for (long j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
        for (long j = 0; j < o.cols_; ++j) r.set(i, cols_ + j, o.at(i, j));
    }
    return r;
}

Matrix Matrix::vstack(const Matrix& o) const {
    if (cols_ != o.cols_) throw validation_error("vstack column mismatch");
    Matrix r(field_, rows_ + o.rows_, cols_);
    for (long j = 0; j < cols_; ++j) {
        for (long i = 0; i < rows_; ++i) r.set(i, j, at(i, j));
        for (long i = 0; i < o.rows_; ++i) r.set(rows_ + i, j, o.at(i, j));
    }
    return r;
}

Matrix Matrix::submatrix_columns(const std::vector<long>& js) const {
    Matrix r(field_, rows_, static_cast<long>(js.size()));
    for (size_t k = 0; k < js.size(); ++k)
        for (long i = 0; i < rows_; ++i) r.set(i, static_cast<long>(k), at(i, js[k]));
    return r;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (static_cast<long>(v.size()) != cols_) throw validation_error("vector length mismatch in apply");
    std::vector<Scalar> r(static_cast<size_t>(rows_), Scalar::zero(field_));
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[static_cast<size_t>(j)].is_zero())
                r[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
    return r;
}

std::string Matrix::str() const {
    std::ostringstream out;
    out << "[";
    for (long i = 0; i < rows_; ++i) {
        out << (i ? ", [" : "[");
        for (long j = 0; j < cols_; ++j) out << (j ? ", " : "") << at(i, j).str();
        out << "]";
    }
    out << "]";
    return out.str();
}

RowReduction row_reduce(const Matrix& m) {
    RowReduction res{m, {}, 0};
    Matrix& a = res.rref;
    long r = 0;
    for (long col = 0; col < a.cols() && r < a.rows(); ++col) {
        long piv = -1;
        for (long i = r; i < a.rows(); ++i)
            if (!a.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (long j = 0; j < a.cols(); ++j) {
                Scalar tmp = a.at(r, j);
                a.set(r, j, a.at(piv, j));
                a.set(piv, j, tmp);
            }
        Scalar inv = a.at(r, col).inverse();
        for (long j = col; j < a.cols(); ++j) a.set(r, j, a.at(r, j) * inv);
        for (long i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, col).is_zero()) continue;
            Scalar f = a.at(i, col);
            for (long j = col; j < a.cols(); ++j) a.set(i, j, a.at(i, j) - f * a.at(r, j));
        }
        res.pivots.push_back(col);
        ++r;
    }
    res.rank = r;
    return res;
}

long rank(const Matrix& m) { return row_reduce(m).rank; }

Matrix kernel_basis(const Matrix& m) {
    RowReduction rr = row_reduce(m);
    const Field& f = m.field();
    std::vector<long> free_cols;
    {
        size_t pi = 0;
        for (long j = 0; j < m.cols(); ++j) {
            if (pi < rr.pivots.size() && rr.pivots[pi] == j)
                ++pi;
            else
                free_cols.push_back(j);
        }
    }
    Matrix k(f, m.cols(), static_cast<long>(free_cols.size()));
    for (size_t fc = 0; fc < free_cols.size(); ++fc) {
        long j = free_cols[fc];
        k.set(j, static_cast<long>(fc), Scalar::one(f));
        for (size_t pi = 0; pi < rr.pivots.size(); ++pi)
            k.set(rr.pivots[pi], static_cast<long>(fc), -rr.rref.at(static_cast<long>(pi), j));
    }
    return k;
}

CokernelProjection cokernel_projection(const Matrix& m) {
    // kernel of the transpose gives functionals vanishing on the image
    Matrix k = kernel_basis(m.transpose());
    CokernelProjection c;
    c.projector = k.transpose();
    c.dim = c.projector.rows();
    return c;
}

Matrix image_basis(const Matrix& m) {
    RowReduction rr = row_reduce(m);
    return m.submatrix_columns(rr.pivots);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw validation_error("solve shape mismatch");
    RowReduction rr = row_reduce(a.hstack(b));
    for (long p : rr.pivots)
        if (p >= a.cols()) return std::nullopt;  // inconsistent
    Matrix x(a.field(), a.cols(), b.cols());
    for (size_t pi = 0; pi < rr.pivots.size(); ++pi)
        for (long j = 0; j < b.cols(); ++j)
            x.set(rr.pivots[pi], j, rr.rref.at(static_cast<long>(pi), a.cols() + j));
    return x;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw validation_error("inverse of non-square matrix");
    auto x = solve(m, Matrix::identity(m.field(), m.rows()));
    if (!x || rank(m) != m.rows()) throw validation_error("matrix is singular");
    return *x;
}

bool in_span(const Matrix& span_cols, const std::vector<Scalar>& v) {
    Matrix b(span_cols.field(), span_cols.rows(), 1);
    b.set_column(0, v);
    return solve(span_cols, b).has_value();
}

SubquotientBasis subquotient_basis(const Matrix& z, const Matrix& b) {
    if (z.rows() != b.rows()) throw validation_error("subquotient shape mismatch");
    const Field& f = z.field();
    long n = z.rows();

    // pivots of [b | z] landing in the z-part give representatives
    Matrix bz = b.hstack(z);
    RowReduction rr = row_reduce(bz);
    std::vector<long> rep_cols;
    for (long p : rr.pivots)
        if (p >= b.cols()) rep_cols.push_back(p - b.cols());
    Matrix reps = z.submatrix_columns(rep_cols);

    // complete [im(b) | reps] to a basis of the ambient space, invert, and
    // read off the rows dual to the representatives
    Matrix ib = image_basis(b);
    Matrix partial = ib.hstack(reps);
    Matrix full = partial;
    for (long j = 0; j < n && full.cols() < n; ++j) {
        Matrix cand(f, n, 1);
        cand.set(j, 0, Scalar::one(f));
        Matrix aug = full.hstack(cand);
        if (rank(aug) > full.cols()) full = aug;
    }
    if (full.cols() != n) throw validation_error("basis completion failed");
    Matrix g = inverse(full);

    SubquotientBasis q;
    q.reps = reps;
    q.coord_map = Matrix(f, reps.cols(), n);
    for (long i = 0; i < reps.cols(); ++i)
        for (long j = 0; j < n; ++j) q.coord_map.set(i, j, g.at(ib.cols() + i, j));
    return q;
}

}  // namespace ddt
