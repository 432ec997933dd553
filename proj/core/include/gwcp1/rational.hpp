//
// rational.hpp -- exact rational arithmetic on top of GMP.
//
// Every coefficient and every invariant in the library is a Rational.
// Values are kept fully reduced with a positive denominator; zero is 0/1.
//
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "gwcp1/errors.hpp"

namespace gwcp1 {

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT: implicit on purpose
    Rational(long num, long den);
    explicit Rational(mpq_class v);

    // Parses decimal strings; den must be nonzero.
    static Rational from_strings(const std::string& num, const std::string& den);
    // Parses "n" or "n/d".
    static Rational parse(const std::string& text);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    std::string numerator() const;   // decimal string, carries the sign
    std::string denominator() const; // decimal string, always positive
    std::string str() const;         // "n" if integral, else "n/d"

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o); // throws Error on division by zero

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Exact integer helpers used throughout the generating-function formulas.
Rational binomial(std::uint64_t n, std::uint64_t k);
Rational factorial(std::uint64_t n);

} // namespace gwcp1
