#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ddt/generators.hpp"
#include "ddt/matrix.hpp"

using namespace ddt;

TEST_CASE("scalar arithmetic over Q is canonical") {
    Field q = Field::rationals();
    Scalar a(q, 1, 2), b(q, 1, 3);
    CHECK((a + b).str() == "5/6");
    CHECK((a * b).str() == "1/6");
    CHECK((a - a).is_zero());
    CHECK(Scalar(q, 2, -4).str() == "-1/2");  // positive denominator
    CHECK(Scalar(q, -6, -4).str() == "3/2");
    CHECK(a.inverse().str() == "2");
    CHECK_THROWS_AS(Scalar::zero(q).inverse(), validation_error);
}

TEST_CASE("prime field arithmetic") {
    CHECK_THROWS_AS(Field::prime(6), validation_error);
    Field f5 = Field::prime(5);
    Scalar a(f5, 3), b(f5, 4);
    CHECK((a * b).str() == "2");
    CHECK((a + b).str() == "2");
    CHECK(a.inverse().str() == "2");  // 3 * 2 = 6 = 1
    CHECK(Scalar(f5, 1, 2).str() == "3");  // 1/2 = 3 mod 5
    CHECK(Scalar::parse(f5, "7/3").str() == "4");  // 2 * 3^{-1} = 2*2 = 4
}

TEST_CASE("row_reduce on the worked examples") {
    Field q = Field::rationals();
    SUBCASE("identity") {
        RowReduction r = row_reduce(Matrix::identity(q, 2));
        CHECK(r.rank == 2);
        CHECK(r.pivots == std::vector<long>{0, 1});
        CHECK(r.rref == Matrix::identity(q, 2));
    }
    SUBCASE("rank one over Q") {
        Matrix m = Matrix::from_ints(q, {{2, 4}, {1, 2}});
        RowReduction r = row_reduce(m);
        CHECK(r.rank == 1);
        CHECK(r.rref == Matrix::from_ints(q, {{1, 2}, {0, 0}}));
    }
    SUBCASE("rank one over F_2") {
        Field f2 = Field::prime(2);
        Matrix m = Matrix::from_ints(f2, {{1, 1}, {1, 1}});
        RowReduction r = row_reduce(m);
        CHECK(r.rank == 1);
        CHECK(r.rref == Matrix::from_ints(f2, {{1, 1}, {0, 0}}));
    }
}

TEST_CASE("kernel_basis on the worked examples") {
    Field q = Field::rationals();
    CHECK(kernel_basis(Matrix::zero(q, 2, 2)).cols() == 2);
    Matrix k = kernel_basis(Matrix::from_ints(q, {{1, 2}}));
    REQUIRE(k.cols() == 1);
    CHECK(k.at(0, 0).str() == "-2");
    CHECK(k.at(1, 0).str() == "1");
    CHECK(kernel_basis(Matrix::from_ints(q, {{1, 1}, {0, 1}})).cols() == 0);
}

TEST_CASE("cokernel_projection") {
    Field q = Field::rationals();
    Matrix m = Matrix::from_ints(q, {{1, 0}, {0, 0}, {2, 0}});
    CokernelProjection c = cokernel_projection(m);
    CHECK(c.dim == 2);
    CHECK((c.projector * m).is_zero());
    CHECK(rank(c.projector) == 2);
    CHECK(cokernel_projection(Matrix::identity(q, 3)).dim == 0);
}

TEST_CASE("rank equals transpose rank and rank-nullity, randomized") {
    Rng rng(7);
    for (const Field& f : {Field::rationals(), Field::prime(5)}) {
        for (int trial = 0; trial < 25; ++trial) {
            Matrix m = random_matrix(f, 1 + trial % 4, 1 + (trial / 2) % 5, rng);
            CHECK(rank(m) == rank(m.transpose()));
            CHECK(m.cols() == rank(m) + kernel_basis(m).cols());
            Matrix k = kernel_basis(m);
            CHECK((m * k).is_zero());
        }
    }
}

TEST_CASE("kernel agrees with brute force over small prime fields") {
    for (long p : {2l, 3l, 5l}) {
        Field f = Field::prime(p);
        Rng rng(42 + p);
        for (int trial = 0; trial < 5; ++trial) {
            long n = 1 + trial % 3;
            Matrix m = random_matrix(f, 2, n, rng);
            // enumerate the null space directly
            long count = 0;
            std::vector<long> digits(static_cast<size_t>(n), 0);
            while (true) {
                std::vector<Scalar> v;
                for (long d : digits) v.push_back(Scalar(f, d));
                bool zero = true;
                for (auto& x : m.apply(v)) zero = zero && x.is_zero();
                if (zero) ++count;
                long i = n - 1;
                while (i >= 0 && digits[static_cast<size_t>(i)] == p - 1) digits[static_cast<size_t>(i--)] = 0;
                if (i < 0) break;
                ++digits[static_cast<size_t>(i)];
            }
            long expected = 1;
            for (long i = 0; i < kernel_basis(m).cols(); ++i) expected *= p;
            CHECK(count == expected);
        }
    }
}

TEST_CASE("solve and inverse") {
    Field q = Field::rationals();
    Matrix a = Matrix::from_ints(q, {{2, 1}, {1, 1}});
    Matrix inv = inverse(a);
    CHECK(a * inv == Matrix::identity(q, 2));
    Matrix b = Matrix::from_ints(q, {{1}, {0}});
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(a * *x == b);
    CHECK(!solve(Matrix::from_ints(q, {{1, 1}, {1, 1}}), Matrix::from_ints(q, {{1}, {0}})).has_value());
}

TEST_CASE("subquotient basis") {
    Field q = Field::rationals();
    // Z = all of k^3, B = span(e0 + e1)
    Matrix z = Matrix::identity(q, 3);
    Matrix b(q, 3, 1);
    b.set(0, 0, Scalar::one(q));
    b.set(1, 0, Scalar::one(q));
    SubquotientBasis s = subquotient_basis(z, b);
    CHECK(s.dim() == 2);
    // coordinates kill B
    Matrix coords = s.coord_map * b;
    CHECK(coords.is_zero());
    // and are inverse to reps on the quotient
    Matrix check = s.coord_map * s.reps;
    CHECK(check == Matrix::identity(q, 2));
}
