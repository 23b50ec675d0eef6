#include "ddt/field.hpp"

namespace ddt {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long mod_pos(long a, long p) {
    long r = a % p;
    return r < 0 ? r + p : r;
}

// residue of a rational a/b mod p (b coprime to p)
long mod_inverse(long a, long p) {
    long t = 0, new_t = 1, r = p, new_r = mod_pos(a, p);
    while (new_r != 0) {
        long q = r / new_r;
        std::swap(t -= q * new_t, new_t);
        std::swap(r -= q * new_r, new_r);
    }
    if (r != 1) throw validation_error("element not invertible mod " + std::to_string(p));
    return mod_pos(t, p);
}

}  // namespace

Field Field::prime(long p) {
    if (!is_prime(p)) throw validation_error("field characteristic must be prime, got " + std::to_string(p));
    Field f;
    f.kind = Kind::Prime;
    f.p = p;
    return f;
}

std::string Field::str() const { return is_rationals() ? "Q" : "F_" + std::to_string(p); }

Scalar::Scalar(const Field& f, long num, long den) : field_(f) {
    if (den == 0) throw validation_error("zero denominator");
    if (f.is_rationals()) {
        q_ = mpq_class(num, den);
        q_.canonicalize();
    } else {
        long n = mod_pos(num, f.p);
        long d = mod_pos(den, f.p);
        if (d == 0) throw validation_error("denominator vanishes in " + f.str());
        q_ = mpq_class(mod_pos(n * mod_inverse(d, f.p), f.p));
    }
}

Scalar Scalar::from_mpq(const Field& f, const mpq_class& q) {
    Scalar s;
    s.field_ = f;
    if (f.is_rationals()) {
        s.q_ = q;
        s.q_.canonicalize();
    } else {
        mpz_class num = q.get_num(), den = q.get_den();
        mpz_class p(f.p);
        mpz_class n = num % p, d = den % p;
        if (n < 0) n += p;
        if (d < 0) d += p;
        if (d == 0) throw validation_error("denominator vanishes in " + f.str());
        long inv = mod_inverse(d.get_si(), f.p);
        mpz_class r = (n * inv) % p;
        s.q_ = mpq_class(r);
    }
    return s;
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
    auto slash = text.find('/');
    mpq_class q;
    if (slash == std::string::npos) {
        q = mpq_class(mpz_class(text));
    } else {
        q = mpq_class(mpz_class(text.substr(0, slash)), mpz_class(text.substr(slash + 1)));
    }
    q.canonicalize();
    return from_mpq(f, q);
}

bool Scalar::is_zero() const { return q_ == 0; }
bool Scalar::is_one() const { return q_ == 1; }

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_) throw validation_error("mixing elements of " + field_.str() + " and " + o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    return from_mpq(field_, q_ + o.q_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    return from_mpq(field_, q_ - o.q_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    return from_mpq(field_, q_ * o.q_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const { return from_mpq(field_, -q_); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw validation_error("division by zero in " + field_.str());
    if (field_.is_rationals()) return from_mpq(field_, 1 / q_);
    return Scalar(field_, mod_inverse(q_.get_num().get_si(), field_.p));
}

bool Scalar::operator==(const Scalar& o) const { return field_ == o.field_ && q_ == o.q_; }

std::string Scalar::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Scalar factorial_scalar(const Field& f, long n) {
    Scalar r = Scalar::one(f);
    for (long k = 2; k <= n; ++k) {
        r = r * Scalar(f, k);
        if (r.is_zero())
            throw validation_error(std::to_string(k) + "! vanishes in " + f.str() +
                                   "; nilpotency degree too large for this characteristic");
    }
    return r;
}

}  // namespace ddt
