//
// rational.cpp
//
#include "gwcp1/rational.hpp"

#include <ostream>

namespace gwcp1 {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw Error("Rational: zero denominator");
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
    v_.canonicalize();
}

Rational Rational::from_strings(const std::string& num, const std::string& den) {
    mpz_class n, d;
    if (n.set_str(num, 10) != 0) throw Error("Rational: bad numerator '" + num + "'");
    if (d.set_str(den, 10) != 0) throw Error("Rational: bad denominator '" + den + "'");
    if (d == 0) throw Error("Rational: zero denominator");
    return Rational(mpq_class(n) / mpq_class(d));
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return from_strings(text, "1");
    return from_strings(text.substr(0, slash), text.substr(slash + 1));
}

std::string Rational::numerator() const {
    return v_.get_num().get_str();
}

std::string Rational::denominator() const {
    return v_.get_den().get_str();
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return numerator();
    return numerator() + "/" + denominator();
}

Rational Rational::operator-() const {
    return Rational(mpq_class(-v_));
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(mpq_class(b));
}

Rational factorial(std::uint64_t n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

} // namespace gwcp1
