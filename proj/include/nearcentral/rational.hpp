#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nearcentral {

using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
    explicit Rational(const Integer& value) : value_(value) {}
    Rational(const Integer& numerator, const Integer& denominator);
    Rational(long numerator, long denominator);

    /// Parses "p", "-p" or "p/q".
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Integer value; throws if the value is not integral.
    Integer to_integer() const;
    /// Narrowing conversion used by tables that hold small counts.
    std::int64_t to_int64() const;

    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& out, const Rational& r) {
        return out << r.to_string();
    }

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_;
};

/// (-1)^k as a small integer.
constexpr int sign_power(long k) { return (k % 2 == 0) ? 1 : -1; }

Integer factorial(unsigned n);
Integer binomial(long n, long k);

}  // namespace nearcentral
