#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nearcentral/partition.hpp"
#include "nearcentral/permutation.hpp"
#include "nearcentral/rational.hpp"

namespace nearcentral {

/// Size limits for computations that expand into S_n.
struct BruteForceLimits {
    /// Class-by-element convolution for products of tagged-class basis
    /// elements (structure constants).
    int basis_products = 8;
    /// Full expansion of arbitrary group-algebra elements.
    int group_algebra = 6;
};

/// Sparse element of Q[S_n]. Zero coefficients are never stored.
class GroupAlgebraElement {
public:
    explicit GroupAlgebraElement(int n) : n_(n) {}

    static GroupAlgebraElement identity(int n);
    static GroupAlgebraElement single(const Permutation& pi, const Rational& c = Rational(1));
    /// K_{lambda,i}: the sum of all permutations in C_{lambda,i}.
    static GroupAlgebraElement class_sum(const TaggedClass& c);

    int n() const { return n_; }
    const std::map<Permutation, Rational>& terms() const { return terms_; }
    std::size_t support_size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Permutation& pi) const;

    void add_term(const Permutation& pi, const Rational& c);

    GroupAlgebraElement& operator+=(const GroupAlgebraElement& rhs);
    GroupAlgebraElement& operator-=(const GroupAlgebraElement& rhs);
    GroupAlgebraElement& operator*=(const Rational& c);
    friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
    friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
    friend GroupAlgebraElement operator*(GroupAlgebraElement a, const Rational& c) { return a *= c; }
    /// Convolution product, composing permutations right to left.
    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
    friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

private:
    void check_same_n(const GroupAlgebraElement& other) const;

    int n_;
    std::map<Permutation, Rational> terms_;
};

/// J_k = sum_{1 <= i < k} (i, k); J_1 = 0.
GroupAlgebraElement jm_element(int n, int k);

/// Sparse element of Z_1(n) in the basis {K_{lambda,i}}.
class Z1Element {
public:
    explicit Z1Element(int n) : n_(n) {}
    static Z1Element basis(const TaggedClass& c, const Rational& coefficient = Rational(1));

    int n() const { return n_; }
    const std::map<TaggedClass, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const TaggedClass& c) const;

    void add_term(const TaggedClass& c, const Rational& coefficient);

    /// The element of Q[S_n] it denotes.
    GroupAlgebraElement expand() const;

    Z1Element& operator+=(const Z1Element& rhs);
    Z1Element& operator*=(const Rational& c);
    friend Z1Element operator+(Z1Element a, const Z1Element& b) { return a += b; }
    friend Z1Element operator*(Z1Element a, const Rational& c) { return a *= c; }
    friend bool operator==(const Z1Element&, const Z1Element&) = default;

    std::string to_string() const;

private:
    int n_;
    std::map<TaggedClass, Rational> terms_;
};

/// Rewrites an element that is constant on every tagged class in the K basis.
/// Throws NotCentralizerElement when two permutations of one class carry
/// different coefficients.
Z1Element z1_project(const GroupAlgebraElement& a);

/// Structure constants of Z_1(n): K_a K_b = sum_c constant(a, b, c) K_c.
class StructureConstants {
public:
    /// Brute force by class-by-element convolution: for a fixed z in C_c,
    /// constant(a,b,c) = #{x in C_a : x^{-1} z in C_b}. Cost is
    /// (number of tagged classes) * n!.
    static StructureConstants brute_force(int n, const BruteForceLimits& limits = {}, int jobs = 1);

    /// Shared per-process table built by brute_force with default limits.
    static std::shared_ptr<const StructureConstants> cached(int n, const BruteForceLimits& limits = {});

    int n() const { return n_; }
    const std::vector<TaggedClass>& classes() const { return classes_; }
    /// Non-zero terms of K_a K_b, in class order.
    const std::map<TaggedClass, Integer>& product(const TaggedClass& a, const TaggedClass& b) const;
    Integer constant(const TaggedClass& a, const TaggedClass& b, const TaggedClass& c) const;

    StructureConstants(int n, std::vector<TaggedClass> classes,
                       std::map<std::pair<TaggedClass, TaggedClass>, std::map<TaggedClass, Integer>> table);

    friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

private:
    int n_;
    std::vector<TaggedClass> classes_;
    std::map<std::pair<TaggedClass, TaggedClass>, std::map<TaggedClass, Integer>> table_;
};

/// c^{nu,k}_{lambda,i,mu,j} from generalized characters:
///   |C_a||C_b|/n! * sum_{(rho,l)} gamma_a gamma_b gamma_c / d_{l_-(rho)} * d_rho / d_{l_-(rho)}.
/// The result is checked to be a non-negative integer (IdentityFailure otherwise).
Rational connection_coefficient(const TaggedClass& a, const TaggedClass& b, const TaggedClass& c);

/// How z1_multiply obtains structure constants.
enum class Z1ProductMethod {
    Auto,              // brute force up to limits.basis_products, then the character formula
    BruteForce,        // class convolution; ResourceLimitExceeded past the limit
    CharacterFormula,  // connection_coefficient for every triple
};

Z1Element z1_multiply(const Z1Element& a, const Z1Element& b, Z1ProductMethod method = Z1ProductMethod::Auto,
                      const BruteForceLimits& limits = {});

/// Gamma^{lambda,i} = sum_{T in SYT_{lambda,i}} e_T, with
///   [pi] e_T = (d_lambda / n!) R(pi^{-1})_{TT}
/// in Young's seminormal form. Guarded by limits.group_algebra.
GroupAlgebraElement gamma_element(const TaggedClass& index, const BruteForceLimits& limits = {});

/// Product of two arbitrary elements, guarded by limits.group_algebra.
GroupAlgebraElement multiply_checked(const GroupAlgebraElement& a, const GroupAlgebraElement& b,
                                     const BruteForceLimits& limits = {});

}  // namespace nearcentral
