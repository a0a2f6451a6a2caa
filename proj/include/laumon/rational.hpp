#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "laumon/errors.hpp"

namespace laumon {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. Thin wrapper over GMP's mpq_class that canonicalizes on
// every construction path, so equality is plain representation equality.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}                       // NOLINT: implicit by design
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw NotAUnitError("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Accepts "p", "p/q", optional leading '-'.
    static Rational parse(const std::string& s) {
        try {
            mpq_class q(s, 10);
            if (q.get_den() == 0) throw ParseError("zero denominator: " + s);
            q.canonicalize();
            return Rational(q, already_canonical_tag{});
        } catch (const std::invalid_argument&) {
            throw ParseError("invalid rational literal: '" + s + "'");
        }
    }

    std::string str() const {
        return v_.get_str();  // "p" or "p/q", canonical
    }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    long num_long() const { return static_cast<long>(v_.get_num().get_si()); }
    long den_long() const { return static_cast<long>(v_.get_den().get_si()); }

    friend Rational operator+(const Rational& a, const Rational& b) { return wrap(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return wrap(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return wrap(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw NotAUnitError("division by zero");
        return wrap(a.v_ / b.v_);
    }
    Rational operator-() const { return wrap(-v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw NotAUnitError("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational pow_int(long e) const {
        if (e == 0) return Rational(1);
        if (is_zero() && e < 0) throw NotAUnitError("0^negative");
        mpq_class base = e > 0 ? v_ : mpq_class(1) / v_;
        unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), k);
        mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), k);
        return wrap(mpq_class(num) / mpq_class(den));
    }

    const mpq_class& raw() const { return v_; }

private:
    struct already_canonical_tag {};
    Rational(mpq_class q, already_canonical_tag) : v_(std::move(q)) {}
    static Rational wrap(mpq_class q) { return Rational(std::move(q), already_canonical_tag{}); }

    mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r);

// Generalized binomial coefficient C(alpha, k) = alpha(alpha-1)...(alpha-k+1)/k!
inline Rational binomial(const Rational& alpha, long k) {
    Rational acc(1);
    for (long t = 0; t < k; ++t)
        acc = acc * (alpha - Rational(t)) / Rational(t + 1);
    return acc;
}

} // namespace laumon

#include <ostream>
namespace laumon {
inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }
}
