#include "nearcentral/rational.hpp"

#include <stdexcept>

#include "nearcentral/errors.hpp"

namespace nearcentral {

Rational::Rational(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0) {
        throw ContractViolation("Rational: zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(long numerator, long denominator)
    : Rational(Integer(numerator), Integer(denominator)) {}

Rational Rational::parse(std::string_view text) {
    const std::string s(text);
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0) {
        throw ContractViolation("Rational: cannot parse '" + s + "'");
    }
    if (q.get_den() == 0) {
        throw ContractViolation("Rational: zero denominator in '" + s + "'");
    }
    q.canonicalize();
    return Rational(std::move(q));
}

Integer Rational::to_integer() const {
    if (!is_integer()) {
        throw ContractViolation("Rational: " + to_string() + " is not an integer");
    }
    return value_.get_num();
}

std::int64_t Rational::to_int64() const {
    const Integer v = to_integer();
    if (!v.fits_slong_p()) {
        throw ContractViolation("Rational: " + to_string() + " does not fit in 64 bits");
    }
    return v.get_si();
}

std::string Rational::to_string() const {
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw ContractViolation("Rational: division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace nearcentral
