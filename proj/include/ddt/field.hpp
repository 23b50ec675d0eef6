#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ddt {

/// Error raised when input data violates a mathematical axiom or a
/// structural precondition. The message names the violated axiom.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Coefficient field: the rationals or a prime field F_p.
struct Field {
    enum class Kind { Rationals, Prime };

    Kind kind = Kind::Rationals;
    long p = 0;

    static Field rationals() { return {}; }
    static Field prime(long p);

    bool is_rationals() const { return kind == Kind::Rationals; }
    long characteristic() const { return kind == Kind::Prime ? p : 0; }

    bool operator==(const Field& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::string str() const;
};

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator; prime-field elements are residues in [0, p).
class Scalar {
public:
    Scalar() : field_(Field::rationals()), q_(0) {}
    Scalar(const Field& f, long num, long den = 1);
    static Scalar from_mpq(const Field& f, const mpq_class& q);
    static Scalar parse(const Field& f, const std::string& text);

    static Scalar zero(const Field& f) { return Scalar(f, 0); }
    static Scalar one(const Field& f) { return Scalar(f, 1); }

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Canonical text form: "3", "-1/2"; residue for F_p.
    std::string str() const;

    /// Rational value; for F_p the residue as an integer.
    const mpq_class& rational() const { return q_; }

private:
    void check_same_field(const Scalar& o) const;

    Field field_;
    mpq_class q_;  // for F_p the numerator holds the residue, denominator 1
};

/// n! as a scalar; throws validation_error if it vanishes in the field.
Scalar factorial_scalar(const Field& f, long n);

}  // namespace ddt
