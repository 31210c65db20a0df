#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace symds {

// Exact rational scalar. Always stored in lowest terms with a positive
// denominator; arithmetic never rounds. Backed by GMP so numerators and
// denominators of any size are safe.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long value) : v_(value) {}  // NOLINT: implicit by design
    Rational(int value) : v_(static_cast<long>(value)) {}
    Rational(long num, long den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    // Accepts "p", "-p", or "p/q" with arbitrarily large components.
    static Rational parse(const std::string& text) {
        mpq_class raw;
        try {
            raw = mpq_class(text);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Rational: cannot parse '" + text + "'");
        }
        if (raw.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + text + "'");
        raw.canonicalize();
        Rational r;
        r.v_ = raw;
        return r;
    }

    std::string str() const {
        return v_.get_str();  // "p" or "p/q", canonical
    }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    // Exact conversion; throws when the value does not fit.
    long to_long() const {
        if (!is_integer() || !v_.get_num().fits_slong_p())
            throw std::domain_error("Rational: not representable as long: " + str());
        return v_.get_num().get_si();
    }

    Rational operator-() const { return from_mpq(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    static Rational from_mpq(const mpq_class& q) {
        Rational r;
        r.v_ = q;
        return r;
    }
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace symds
