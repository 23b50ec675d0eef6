#pragma once

#include <optional>
#include <vector>

#include "ddt/field.hpp"

namespace ddt {

/// Dense exact matrix over Q or F_p, row-major. Zero-dimensional shapes are
/// allowed everywhere; all operations are pure.
class Matrix {
public:
    Matrix() : Matrix(Field::rationals(), 0, 0) {}
    Matrix(const Field& f, long rows, long cols);

    static Matrix identity(const Field& f, long n);
    static Matrix zero(const Field& f, long rows, long cols) { return Matrix(f, rows, cols); }
    /// Build from integer entries (converted into the field).
    static Matrix from_ints(const Field& f, const std::vector<std::vector<long>>& rows);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    const Field& field() const { return field_; }

    const Scalar& at(long i, long j) const { return e_[static_cast<size_t>(i * cols_ + j)]; }
    void set(long i, long j, const Scalar& v) { e_[static_cast<size_t>(i * cols_ + j)] = v; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& c) const;
    Matrix transpose() const;

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;

    Matrix column(long j) const;
    std::vector<Scalar> column_vector(long j) const;
    void set_column(long j, const std::vector<Scalar>& v);
    /// Columns of `o` appended on the right.
    Matrix hstack(const Matrix& o) const;
    /// Rows of `o` appended below.
    Matrix vstack(const Matrix& o) const;
    Matrix submatrix_columns(const std::vector<long>& js) const;

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

    std::string str() const;

private:
    long rows_, cols_;
    Field field_;
    std::vector<Scalar> e_;
};

struct RowReduction {
    Matrix rref;
    std::vector<long> pivots;  // strictly increasing pivot column indices
    long rank = 0;
};

/// Reduced row echelon form; pivot = first nonzero entry scanning
/// top-to-bottom, left-to-right.
RowReduction row_reduce(const Matrix& m);

long rank(const Matrix& m);

/// Columns form a basis of ker(m); column count = cols - rank.
Matrix kernel_basis(const Matrix& m);

struct CokernelProjection {
    long dim = 0;       // rows - rank
    Matrix projector;   // dim x rows, vanishes on im(m), full row rank
};

/// Projection of the codomain onto a complement of the image.
CokernelProjection cokernel_projection(const Matrix& m);

/// Pivot columns of m: a basis of the column space.
Matrix image_basis(const Matrix& m);

/// Solve A x = b for each column of b; empty if inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Inverse of a square invertible matrix; throws if singular.
Matrix inverse(const Matrix& m);

/// Does span(v) contain the given column vector?
bool in_span(const Matrix& span_cols, const std::vector<Scalar>& v);

/// Representatives and coordinates for the subquotient span(z)/span(b).
/// Requires span(b) <= span(z). reps has one column per quotient basis
/// vector; coords(v) = coord_map * v are the quotient coordinates of any
/// v in span(z).
struct SubquotientBasis {
    Matrix reps;       // n x q
    Matrix coord_map;  // q x n
    long dim() const { return reps.cols(); }
};
SubquotientBasis subquotient_basis(const Matrix& z, const Matrix& b);

}  // namespace ddt
