#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "nearcentral/rational.hpp"

namespace nearcentral {

class Partition;

/// Dense polynomial in one indeterminate with exact rational coefficients.
/// Trailing zero coefficients are never stored, so the zero polynomial has no
/// coefficients and equality is structural.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> coefficients);
    explicit Polynomial(std::vector<Rational> coefficients);

    static Polynomial constant(const Rational& c);
    /// c * x^degree.
    static Polynomial monomial(const Rational& c, int degree);
    /// binom(t + shift, k) = prod_{r=0}^{k-1} (t + shift - r) / k!.
    static Polynomial binomial(long shift, int k);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// [x^k]; zero outside the stored range.
    Rational coeff(int k) const;
    Rational evaluate(const Rational& x) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Exact quotient by (1 + x). Throws IdentityFailure if (1 + x) does not
    /// divide this polynomial.
    Polynomial divide_by_one_plus_x() const;

    /// The power series this * (1 + x)^{-1}, truncated after x^max_degree.
    Polynomial times_inverse_one_plus_x(int max_degree) const;

    /// Human-readable form, e.g. "1/2*t^3 - t + 2".
    std::string to_string(char variable = 't') const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// H_mu(y) = prod_i (1 - (-y)^{mu_i}).
Polynomial hook_product(const Partition& mu);

}  // namespace nearcentral
