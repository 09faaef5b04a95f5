#include "nearcentral/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "nearcentral/errors.hpp"
#include "nearcentral/partition.hpp"

namespace nearcentral {

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
    trim();
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
    if (degree < 0) {
        throw ContractViolation("Polynomial::monomial: negative degree");
    }
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::binomial(long shift, int k) {
    if (k < 0) {
        throw ContractViolation("Polynomial::binomial: negative k");
    }
    Polynomial result = constant(1);
    for (int r = 0; r < k; ++r) {
        result *= Polynomial({Rational(shift - r), Rational(1)});
    }
    result *= Rational(Integer(1), factorial(static_cast<unsigned>(k)));
    return result;
}

Rational Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) {
        return Rational(0);
    }
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational Polynomial::evaluate(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    for (auto& a : coeffs_) {
        a *= c;
    }
    trim();
    return *this;
}

Polynomial Polynomial::divide_by_one_plus_x() const {
    if (is_zero()) {
        return {};
    }
    // Synthetic division from the top coefficient down.
    std::vector<Rational> rem = coeffs_;
    std::vector<Rational> quot(rem.size() - 1);
    for (std::size_t d = rem.size() - 1; d >= 1; --d) {
        quot[d - 1] = rem[d];
        rem[d - 1] -= rem[d];
    }
    if (!rem[0].is_zero()) {
        throw IdentityFailure("Polynomial " + to_string('x') + " is not divisible by 1 + x");
    }
    return Polynomial(std::move(quot));
}

Polynomial Polynomial::times_inverse_one_plus_x(int max_degree) const {
    // Coefficients s_d of the series satisfy s_d + s_{d-1} = a_d.
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(std::max(max_degree + 1, 0)));
    Rational prev(0);
    for (int d = 0; d <= max_degree; ++d) {
        prev = coeff(d) - prev;
        out.push_back(prev);
    }
    return Polynomial(std::move(out));
}

std::string Polynomial::to_string(char variable) const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const Rational& c = coeffs_[static_cast<std::size_t>(d)];
        if (c.is_zero()) {
            continue;
        }
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) {
                out << "-";
            }
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == Rational(1);
        if (d == 0) {
            out << mag;
            continue;
        }
        if (!unit) {
            out << mag << "*";
        }
        out << variable;
        if (d > 1) {
            out << "^" << d;
        }
    }
    return out.str();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Polynomial hook_product(const Partition& mu) {
    Polynomial result = Polynomial::constant(1);
    for (int part : mu.parts()) {
        // 1 - (-y)^part
        std::vector<Rational> factor(static_cast<std::size_t>(part) + 1);
        factor[0] = 1;
        factor.back() += Rational(-sign_power(part));
        result *= Polynomial(std::move(factor));
    }
    return result;
}

}  // namespace nearcentral
