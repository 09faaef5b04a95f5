#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "nearcentral/characters.hpp"
#include "nearcentral/errors.hpp"
#include "nearcentral/genchar.hpp"
#include "nearcentral/seminormal.hpp"

using namespace nearcentral;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
TaggedClass T(std::vector<int> parts, int tag) { return TaggedClass(P(std::move(parts)), tag); }

}  // namespace

TEST_CASE("hook characters") {
    CHECK(hook_character(3, 1, P({3})) == -1);
    CHECK(hook_character(3, 0, P({2, 1})) == 1);
    CHECK(hook_character(3, 1, P({1, 1, 1})) == 2);
    for (int n = 1; n <= 8; ++n) {
        for (int k = 0; k <= n - 1; ++k) {
            for (const auto& mu : partitions_of(n)) {
                CHECK(hook_character(n, k, mu) == mn_character(Partition::hook(n, k), mu));
            }
        }
    }
}

TEST_CASE("characters at the full cycle") {
    CHECK(char_full_cycle(P({5})) == 1);
    CHECK(char_full_cycle(P({1, 1, 1, 1})) == -1);
    CHECK(char_full_cycle(P({1, 1, 1})) == 1);
    CHECK(char_full_cycle(P({2, 2})) == 0);
    for (int n = 1; n <= 8; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            CHECK(char_full_cycle(lambda) == mn_character(lambda, P({n})));
        }
    }
}

TEST_CASE("Murnaghan-Nakayama characters") {
    CHECK(mn_character(P({2, 1}), P({3})) == -1);
    CHECK(mn_character(P({2, 1}), P({1, 1, 1})) == 2);
    CHECK(mn_character(P({2, 2}), P({2, 1, 1})) == 0);
    CHECK_THROWS_AS(mn_character(P({2, 1}), P({2, 2})), ContractViolation);
    // Column orthogonality at the identity: sum of squares of dimensions.
    for (int n = 1; n <= 7; ++n) {
        const auto ps = partitions_of(n);
        for (const auto& mu : ps) {
            for (const auto& nu : ps) {
                Integer sum = 0;
                for (const auto& lambda : ps) {
                    sum += mn_character(lambda, mu) * mn_character(lambda, nu);
                }
                const Integer expected = mu == nu ? factorial(static_cast<unsigned>(n)) / class_size(mu) : Integer(0);
                CHECK(sum == expected);
            }
        }
    }
}

TEST_CASE("seminormal representation") {
    const auto id = Permutation(3);
    CHECK(seminormal_rep(P({2, 1}), id) == SeminormalMatrix::identity(2));
    CHECK(seminormal_rep(P({2, 1}), Permutation::from_cycles(3, {{1, 2, 3}})).trace() == Rational(-1));
    const auto s12 = Permutation::transposition(3, 1, 2);
    const auto s23 = Permutation::transposition(3, 2, 3);
    CHECK(seminormal_rep(P({2, 1}), s12) * seminormal_rep(P({2, 1}), s23) ==
          seminormal_rep(P({2, 1}), s12 * s23));

    testgen::Rng rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = testgen::uniform(rng, 2, 6);
        const auto lambda = partitions_of(n)[static_cast<std::size_t>(
            testgen::uniform(rng, 0, static_cast<int>(partitions_of(n).size()) - 1))];
        const auto a = testgen::permutation(rng, n);
        const auto b = testgen::permutation(rng, n);
        const auto rep = SeminormalRepresentation::of(lambda);
        CHECK(rep->matrix(a) * rep->matrix(b) == rep->matrix(a * b));
        CHECK(rep->matrix(a).trace() == Rational(mn_character(lambda, a.cycle_type())));
    }
}

TEST_CASE("generalized characters from the oracle") {
    CHECK(genchar_oracle(T({2, 2}, 2), T({3, 1}, 3)) == Rational(-1));
    CHECK(genchar_oracle(T({2, 2}, 2), T({2, 2}, 2)) == Rational(2));
    for (int n = 1; n <= 5; ++n) {
        for (const auto& c : tagged_classes_of(n)) {
            CHECK(genchar_oracle(T({n}, n), c) == Rational(1));
        }
        for (const auto& index : tagged_classes_of(n)) {
            const Integer d = dimension(index.shape().decrement_part(index.tag()));
            CHECK(genchar_oracle(index, TaggedClass(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), 1)) ==
                  Rational(d));
        }
    }
}

TEST_CASE("the oracle does not depend on the representative") {
    testgen::Rng rng(7);
    for (int n = 2; n <= 6; ++n) {
        for (const auto& cls : tagged_classes_of(n)) {
            const auto index = testgen::tagged_class(rng, n);
            const Rational expected = genchar_oracle(index, cls);
            for (int rep = 0; rep < 3; ++rep) {
                CHECK(genchar_oracle(index, testgen::member_of(rng, cls)) == expected);
            }
        }
    }
}

TEST_CASE("Strahov's rule") {
    CHECK(genchar_strahov(T({2, 2}, 2), T({2, 2}, 2)) == Rational(2));
    CHECK(genchar_strahov(T({4}, 4), T({2, 1, 1}, 1)) == Rational(1));
    CHECK_THROWS_AS(genchar_strahov(T({2, 2}, 2), T({2, 1}, 1)), ContractViolation);
    // Weights vanish off broken border strips.
    CHECK(strahov_weight(P({3, 3}), P({1}), 3) == Rational(0));
    for (int n = 1; n <= 6; ++n) {
        for (const auto& index : tagged_classes_of(n)) {
            for (const auto& cls : tagged_classes_of(n)) {
                CHECK_MESSAGE(genchar_strahov(index, cls) == genchar_oracle(index, cls), index.to_string(), " at ",
                              cls.to_string());
            }
        }
    }
}

TEST_CASE("closed form at K_{(n-1,1),1}") {
    CHECK(genchar_at_K_n11(T({4}, 4)) == Rational(1));
    CHECK(genchar_at_K_n11(T({2, 2}, 2)) == Rational(-1));
    CHECK(genchar_at_K_n11(T({3, 1}, 1)) == Rational(1));
    CHECK(genchar_at_K_n11(T({3, 1}, 3)) == Rational(-1));
    CHECK(genchar_at_K_n11(T({1, 1, 1, 1}, 1)) == Rational(1));
    for (int n = 2; n <= 7; ++n) {
        const auto cls = T({n - 1, 1}, 1);
        for (const auto& index : tagged_classes_of(n)) {
            CHECK(genchar_at_K_n11(index) == genchar_strahov(index, cls));
        }
    }
}

TEST_CASE("closed form at the full cycle") {
    CHECK(genchar_at_full_cycle(T({4}, 4)) == Rational(1));
    CHECK(genchar_at_full_cycle(T({3, 1}, 1)) == Rational(-1, 3));
    CHECK(genchar_at_full_cycle(T({2, 2}, 2)) == Rational(0));
    for (int n = 1; n <= 7; ++n) {
        for (const auto& index : tagged_classes_of(n)) {
            CHECK(genchar_at_full_cycle(index) == genchar_strahov(index, T({n}, n)));
        }
    }
}

TEST_CASE("hook series") {
    CHECK(row_tag_series(5, 2) * Polynomial({Rational(1), Rational(1)}) ==
          Polynomial({Rational(4), Rational(5), Rational(1)}));
    CHECK(genchar_hook_series(5, 1, HookTag::Row, T({3, 2}, 2)) == Rational(-3, 4));
    CHECK(genchar_hook_series(5, 1, HookTag::Column, T({3, 2}, 2)) == Rational(-1, 4));
    CHECK_THROWS_AS(genchar_hook_series(5, 4, HookTag::Row, T({3, 2}, 2)), ContractViolation);
    CHECK_THROWS_AS(genchar_hook_series(5, 0, HookTag::Column, T({3, 2}, 2)), ContractViolation);
    for (int n = 2; n <= 7; ++n) {
        for (const auto& cls : tagged_classes_of(n)) {
            CHECK(genchar_hook_series(n, 0, HookTag::Row, cls) == Rational(1));
            for (int k = 0; k <= n - 2; ++k) {
                CHECK(genchar_hook_series(n, k, HookTag::Row, cls) ==
                      genchar_strahov(TaggedClass(Partition::hook(n, k), n - k), cls));
            }
            for (int k = 1; k <= n - 1; ++k) {
                CHECK(genchar_hook_series(n, k, HookTag::Column, cls) ==
                      genchar_strahov(TaggedClass(Partition::hook(n, k), 1), cls));
            }
        }
    }
}

TEST_CASE("two-part evaluations") {
    CHECK(genchar_two_part(TwoPartFamily::HookRow, 5, 3, 2) == Rational(1, 4));
    CHECK(genchar_two_part(TwoPartFamily::NearHook, 6, 1, 5) == Rational(-1, 3));
    CHECK(genchar_two_part(TwoPartFamily::NearHook, 7, 2, 4) == Rational(0));
    CHECK_THROWS_AS(genchar_two_part(TwoPartFamily::NearHook, 6, 1, 1), ContractViolation);
    CHECK_THROWS_AS(genchar_two_part(TwoPartFamily::HookRow, 6, 5, 2), ContractViolation);
    CHECK(genchar_two_part_branches(TwoPartFamily::HookRow, 5, 2, 2).size() == 2);
    for (int n = 3; n <= 9; ++n) {
        for (const auto family : {TwoPartFamily::HookRow, TwoPartFamily::HookColumn, TwoPartFamily::NearHook}) {
            for (int k = 0; k <= n - 1; ++k) {
                std::optional<TaggedClass> index;
                try {
                    index = two_part_index(family, n, k);
                } catch (const ContractViolation&) {
                    continue;
                }
                for (int p = family == TwoPartFamily::NearHook ? 2 : 1; p <= n - 1; ++p) {
                    const auto cls = TaggedClass(P({p, n - p}), p);
                    for (const auto& v : genchar_two_part_branches(family, n, k, p)) {
                        CHECK(v == genchar_strahov(*index, cls));
                    }
                }
            }
        }
    }
}

TEST_CASE("content polynomials") {
    CHECK(content_poly_sum(T({4}, 4), 4) == Rational(1));
    CHECK(content_poly_sum(T({5}, 5), 1) == Rational(24));
    const Polynomial t = Polynomial::monomial(Rational(1), 1);
    const Polynomial near = t * Polynomial::binomial(1, 3) * Rational(6);
    CHECK(content_poly_sum(T({2, 2}, 2), 2) == near.coeff(2));
    CHECK_THROWS_AS(content_poly_sum(T({2, 2}, 2), 5), ContractViolation);
}

TEST_CASE("the generalized character table is a read-only cache") {
    const auto a = GencharTable::of(5);
    const auto b = GencharTable::of(5);
    CHECK(a.get() == b.get());
    const auto c = T({3, 2}, 2);
    const auto d = T({4, 1}, 1);
    CHECK(a->value(c, d) == genchar_strahov(c, d));
    CHECK_THROWS_AS(a->index_of(T({3, 1}, 1)), ContractViolation);
}
