#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nearcentral/decomposition.hpp"
#include "nearcentral/errors.hpp"
#include "nearcentral/z1_algebra.hpp"

using namespace nearcentral;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
TaggedClass T(std::vector<int> parts, int tag) { return TaggedClass(P(std::move(parts)), tag); }
TaggedClass identity_class(int n) { return TaggedClass(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), 1); }

}  // namespace

TEST_CASE("decomposition examples") {
    for (int n = 2; n <= 8; ++n) {
        CHECK(decomposition_count({identity_class(n), T({n}, n)}) == Rational(1));
    }
    CHECK(decomposition_count({T({2, 1}, 1), T({2, 1}, 2)}) == Rational(1));
    CHECK(decomposition_count({T({2, 1}, 1), T({2, 1}, 1)}) == Rational(0));
    CHECK(brute_decompositions({T({3}, 3), T({3}, 3)}) == 1);
    CHECK(brute_decompositions({T({2, 1}, 2), T({2, 1}, 2)}) == 1);
    CHECK_THROWS_AS(decomposition_count({T({2, 1}, 1), T({2, 2}, 2)}), ContractViolation);
    CHECK_THROWS_AS(decomposition_count({T({1}, 1), T({1}, 1)}), ContractViolation);
    CHECK_THROWS_AS(brute_decompositions({T({9}, 9), T({9}, 9)}), ResourceLimitExceeded);
    CHECK_THROWS_AS(brute_decomposition_table(9), ResourceLimitExceeded);
}

TEST_CASE("closed form equals brute force") {
    for (int n = 2; n <= 7; ++n) {
        const auto table = brute_decomposition_table(n);
        const auto classes = tagged_classes_of(n);
        for (const auto& a : classes) {
            Integer row = 0;
            for (const auto& b : classes) {
                const auto it = table.find({a, b});
                const Integer brute = it == table.end() ? Integer(0) : it->second;
                row += brute;
                const Rational v = decomposition_count({a, b});
                CHECK(v == Rational(brute));
                CHECK(v == decomposition_count({b, a}));
                const int excess = (n - a.shape().length()) + (n - b.shape().length());
                if (excess < n - 1 || (excess - (n - 1)) % 2 != 0) {
                    CHECK(v.is_zero());
                }
            }
            CHECK(row == tagged_class_size(a));
        }
    }
}

TEST_CASE("single queries agree with the table") {
    const auto table = brute_decomposition_table(5);
    for (const auto& a : tagged_classes_of(5)) {
        for (const auto& b : tagged_classes_of(5)) {
            const auto it = table.find({a, b});
            CHECK(brute_decompositions({a, b}) == (it == table.end() ? Integer(0) : it->second));
        }
    }
}

TEST_CASE("decompositions are connection coefficients at the full cycle") {
    for (int n = 2; n <= 6; ++n) {
        const auto full = T({n}, n);
        for (const auto& a : tagged_classes_of(n)) {
            for (const auto& b : tagged_classes_of(n)) {
                CHECK(decomposition_count({a, b}) == connection_coefficient(a, b, full));
            }
        }
    }
}
