#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "generators.hpp"
#include "nearcentral/errors.hpp"
#include "nearcentral/partition.hpp"
#include "nearcentral/permutation.hpp"
#include "nearcentral/polynomial.hpp"
#include "nearcentral/rational.hpp"
#include "nearcentral/skew_shape.hpp"
#include "nearcentral/tableau.hpp"

using namespace nearcentral;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

}  // namespace

TEST_CASE("rationals stay normalized") {
    CHECK(Rational(6, 4).to_string() == "3/2");
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(4, -2).to_string() == "-2");
    CHECK(Rational(0, 5).is_zero());
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("7").is_integer());
    CHECK_THROWS_AS(Rational(1, 0), ContractViolation);
    CHECK_THROWS_AS(Rational::parse("1/0"), ContractViolation);
    CHECK_THROWS_AS(Rational::parse("x"), ContractViolation);
    CHECK_THROWS(Rational(1, 2).to_integer());
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(3, 5) == 0);
}

TEST_CASE("polynomial arithmetic") {
    const Polynomial t = Polynomial::monomial(Rational(1), 1);
    CHECK(Polynomial::binomial(1, 2) == Polynomial({Rational(0), Rational(1, 2), Rational(1, 2)}));
    CHECK((t + Polynomial::constant(Rational(1))) * (t - Polynomial::constant(Rational(1))) ==
          Polynomial({Rational(-1), Rational(0), Rational(1)}));
    CHECK((t - t).is_zero());
    CHECK((t - t).degree() == -1);
    CHECK(Polynomial({Rational(1), Rational(2), Rational(1)}).divide_by_one_plus_x() ==
          Polynomial({Rational(1), Rational(1)}));
    CHECK_THROWS_AS(Polynomial({Rational(1), Rational(1), Rational(1)}).divide_by_one_plus_x(), IdentityFailure);
    // 1/(1+x) = 1 - x + x^2 - ...
    CHECK(Polynomial::constant(Rational(1)).times_inverse_one_plus_x(3) ==
          Polynomial({Rational(1), Rational(-1), Rational(1), Rational(-1)}));
    CHECK(Polynomial::binomial(3, 4).evaluate(Rational(1)) == Rational(1));
    // (1 - y^2)(1 + y)
    CHECK(hook_product(P({2, 1})) == Polynomial({Rational(1), Rational(1), Rational(-1), Rational(-1)}));
}

TEST_CASE("partitions_of") {
    const auto p3 = partitions_of(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0] == P({3}));
    CHECK(p3[1] == P({2, 1}));
    CHECK(p3[2] == P({1, 1, 1}));
    CHECK(partitions_of(4).size() == 5);
    const auto two = partitions_of(5, 2);
    REQUIRE(two.size() == 2);
    CHECK(two[0] == P({4, 1}));
    CHECK(two[1] == P({3, 2}));
    CHECK(partitions_of(3, 4).empty());
    REQUIRE(partitions_of(0).size() == 1);
    CHECK(partitions_of(0)[0].empty());
    CHECK(partitions_of(10).size() == 42);
    // The order agrees with operator<.
    for (int n = 1; n <= 8; ++n) {
        const auto ps = partitions_of(n);
        CHECK(std::is_sorted(ps.begin(), ps.end()));
    }
}

TEST_CASE("partition construction and helpers") {
    CHECK(P({1, 3, 1}) == P({3, 1, 1}));
    CHECK_THROWS_AS(P({2, 0}), ContractViolation);
    CHECK_THROWS_AS(P({-1}), ContractViolation);
    CHECK(Partition::parse("3, 2,2") == P({3, 2, 2}));
    CHECK_THROWS_AS(Partition::parse("3,,1"), ContractViolation);
    CHECK(P({3, 2}).decrement_part(2) == P({3, 1}));
    CHECK(P({3, 1}).decrement_part(1) == P({3}));
    CHECK(P({4, 4}).decrement_part(4) == P({4, 3}));
    CHECK_THROWS_AS(P({3, 1}).decrement_part(2), ContractViolation);
    CHECK(P({3, 2, 2, 1}).remove_part(2) == P({3, 2, 1}));
    CHECK(P({3, 2, 2, 1}).lowest_row_of_length(2) == 2);
    CHECK(P({3, 1, 1}).hook_leg() == 2);
    CHECK_FALSE(P({2, 2}).hook_leg().has_value());
    CHECK(P({3, 2, 1}).near_hook_index() == 2);
    CHECK(P({2, 2}).near_hook_index() == 1);
    CHECK_FALSE(P({3, 3}).near_hook_index().has_value());
    CHECK(Partition::hook(5, 2) == P({3, 1, 1}));
    CHECK(Partition::near_hook(6, 2) == P({3, 2, 1}));
    CHECK(P({3, 2}).contains(P({2, 2})));
    CHECK_FALSE(P({3, 1}).contains(P({2, 2})));
    CHECK(P({3, 1, 1}).to_string() == "(3,1,1)");
}

TEST_CASE("tagged classes") {
    CHECK(TaggedClass::parse("3,1:1") == TaggedClass(P({3, 1}), 1));
    CHECK(TaggedClass(P({3, 1}), 1).to_string() == "((3,1),1)");
    CHECK_THROWS_AS(TaggedClass(P({3, 1}), 2), ContractViolation);
    const auto c3 = tagged_classes_of(3);
    REQUIRE(c3.size() == 4);
    CHECK(c3[0] == TaggedClass(P({3}), 3));
    CHECK(c3[1] == TaggedClass(P({2, 1}), 2));
    CHECK(c3[2] == TaggedClass(P({2, 1}), 1));
    CHECK(c3[3] == TaggedClass(P({1, 1, 1}), 1));
}

TEST_CASE("class sizes match exhaustive scans") {
    CHECK(class_size(P({4})) == 6);
    CHECK(class_size(P({1, 1, 1})) == 1);
    CHECK(class_size(P({2, 1})) == 3);
    CHECK(tagged_class_size(TaggedClass(P({2, 1}), 2)) == 2);
    CHECK(tagged_class_size(TaggedClass(P({5}), 5)) == 24);
    CHECK(tagged_class_size(TaggedClass(P({1, 1, 1, 1}), 1)) == 1);
    for (int n = 1; n <= 7; ++n) {
        std::map<Partition, long> by_type;
        std::map<TaggedClass, long> by_class;
        for_each_permutation(n, [&](const Permutation& pi) {
            ++by_type[pi.cycle_type()];
            ++by_class[pi.tagged_class()];
        });
        for (const auto& lambda : partitions_of(n)) {
            CHECK(class_size(lambda) == by_type[lambda]);
            Integer sum = 0;
            for (const auto& c : tagged_classes_of(n)) {
                if (c.shape() == lambda) {
                    sum += tagged_class_size(c);
                }
            }
            CHECK(sum == class_size(lambda));
        }
        for (const auto& c : tagged_classes_of(n)) {
            CHECK(tagged_class_size(c) == by_class[c]);
        }
    }
}

TEST_CASE("permutations compose right to left") {
    const auto a = Permutation::from_cycles(3, {{1, 2}});
    const auto b = Permutation::from_cycles(3, {{2, 3}});
    // (a b)(2) = a(b(2)) = a(3) = 3
    CHECK((a * b)(2) == 3);
    CHECK((a * b) == Permutation::from_cycles(3, {{1, 2, 3}}));
    CHECK(Permutation::from_cycles(4, {{4, 1, 3, 2}}).to_cycle_string() == "(1 3 2 4)");
    CHECK_THROWS_AS(Permutation::from_images({1, 1, 2}), ContractViolation);
    CHECK_THROWS_AS(Permutation::from_cycles(3, {{1, 4}}), ContractViolation);
    CHECK(Permutation::from_cycles(5, {{5, 2}, {1, 3, 4}}).tagged_class() == TaggedClass(P({3, 2}), 2));

    testgen::Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = testgen::uniform(rng, 1, 9);
        const auto pi = testgen::permutation(rng, n);
        CHECK((pi * pi.inverse()).is_identity());
        Permutation rebuilt(n);
        for (int k : pi.adjacent_word()) {
            rebuilt = rebuilt * Permutation::adjacent(n, k);
        }
        CHECK(rebuilt == pi);
        const auto c = pi.tagged_class();
        CHECK(class_representative(c).tagged_class() == c);
        CHECK(testgen::member_of(rng, c).tagged_class() == c);
    }
}

TEST_CASE("cycles through n-1 and n") {
    int count = 0;
    for_each_cycle_through(6, [&](const Permutation& s) {
        ++count;
        CHECK(s(5) == 6);
        CHECK(s.cycle_count() == 1);
    });
    CHECK(count == 24);
}

TEST_CASE("standard Young tableaux") {
    CHECK(syt_enumerate(P({2, 1})).size() == 2);
    CHECK(syt_enumerate(P({4})).size() == 1);
    const auto tagged = syt_enumerate(P({2, 1}), 1);
    REQUIRE(tagged.size() == 1);
    CHECK(tagged[0].position(3) == std::pair<int, int>{1, 0});
    CHECK_THROWS_AS(StandardYoungTableau({{1, 4}, {2, 3}}), ContractViolation);
    CHECK_NOTHROW(StandardYoungTableau({{1, 2}, {3, 4}, {5}}));
    CHECK_THROWS_AS(StandardYoungTableau({{2, 1}}), ContractViolation);
    const StandardYoungTableau t({{1, 2, 4}, {3}});
    CHECK(t.content_vector() == std::vector<int>{0, 1, -1, 2});
    CHECK(t.swap_adjacent(3).has_value());
    CHECK_FALSE(t.swap_adjacent(1).has_value());

    for (int n = 1; n <= 7; ++n) {
        Integer sum = 0;
        for (const auto& lambda : partitions_of(n)) {
            const auto all = syt_enumerate(lambda);
            CHECK(Integer(static_cast<unsigned long>(all.size())) == dimension(lambda));
            sum += dimension(lambda) * dimension(lambda);
            auto reference = all.front().content_vector();
            std::sort(reference.begin(), reference.end());
            for (const auto& tab : all) {
                auto c = tab.content_vector();
                std::sort(c.begin(), c.end());
                CHECK(c == reference);
            }
            std::size_t tagged_total = 0;
            for (int part = 1; part <= n; ++part) {
                if (lambda.has_part(part)) {
                    const auto block = syt_enumerate(lambda, part);
                    tagged_total += block.size();
                    CHECK(Integer(static_cast<unsigned long>(block.size())) == dimension(lambda.decrement_part(part)));
                    for (const auto& tab : block) {
                        CHECK(tab.content(n) == tagged_content(TaggedClass(lambda, part)));
                    }
                }
            }
            CHECK(tagged_total == all.size());
        }
        CHECK(sum == factorial(static_cast<unsigned>(n)));
    }
}

TEST_CASE("skew shapes") {
    const SkewShape square(P({3, 3}), P({1}));
    CHECK(square.cells().size() == 5);
    CHECK_FALSE(square.is_broken_border_strip());
    const SkewShape strip(P({3, 2}), P({1}));
    CHECK(strip.is_broken_border_strip());
    const SkewShape broken(P({3, 1}), P({1}));
    CHECK(broken.is_broken_border_strip());
    // (0,1),(0,2) and (1,0) touch only at a corner.
    CHECK(broken.height() == 0);
    CHECK(SkewShape(P({2, 2, 1}), P({2})).height() == 1);
    CHECK(SkewShape(P({1, 1, 1}), Partition()).height() == 2);
    CHECK(SkewShape(P({3, 2}), P({2})).sharp_corners().size() == 0);
    CHECK(SkewShape(P({3, 2}), P({1})).sharp_corners().size() == 1);
    CHECK(SkewShape(P({3, 1}), P({1})).dull_boxes().size() == 2);
    CHECK_THROWS_AS(SkewShape(P({2}), P({1, 1})), ContractViolation);
}
