#include "nearcentral/decomposition.hpp"

#include <algorithm>

#include "nearcentral/errors.hpp"
#include "nearcentral/genchar.hpp"
#include "nearcentral/polynomial.hpp"

#include "class_key.hpp"

namespace nearcentral {

void FactorizationQuery::validate() const {
    if (left.n() != right.n()) {
        throw ContractViolation("factorization query mixes n=" + std::to_string(left.n()) + " and n=" +
                                std::to_string(right.n()));
    }
}

namespace {

Polynomial reduced_hook_series(const TaggedClass& c) {
    return hook_product(c.shape().remove_part(c.tag()));
}

detail::Images full_cycle_images(int n) {
    detail::Images c(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        c[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>((x + 1) % n);
    }
    return c;
}

void check_limit(int n, int max_n) {
    if (n > max_n) {
        throw ResourceLimitExceeded("decomposition brute force refused: n = " + std::to_string(n) +
                                    " exceeds limit " + std::to_string(max_n));
    }
}

}  // namespace

Rational decomposition_count(const FactorizationQuery& query) {
    query.validate();
    const int n = query.n();
    if (n < 2) {
        throw ContractViolation("decomposition_count needs n >= 2");
    }
    const int i = query.left.tag();
    const int j = query.right.tag();
    const Polynomial hx = reduced_hook_series(query.left);
    const Polynomial hy = reduced_hook_series(query.right);
    const Polynomial rx = (row_tag_series(n, i) * hx).times_inverse_one_plus_x(n);
    const Polynomial ry = (row_tag_series(n, j) * hy).times_inverse_one_plus_x(n);
    const Polynomial sx = (column_tag_series(n, i) * hx).times_inverse_one_plus_x(n);
    const Polynomial sy = (column_tag_series(n, j) * hy).times_inverse_one_plus_x(n);

    Rational sum(0);
    for (int k = 1; k <= n - 1; ++k) {
        const Rational term = rx.coeff(k - 1) * ry.coeff(k - 1) - sx.coeff(k) * sy.coeff(k);
        sum += term * Rational(Integer(sign_power(k - 1)), binomial(n - 2, k - 1));
    }
    const Integer denom = Integer(n - 1) * Integer(n - 1) * factorial(static_cast<unsigned>(n));
    const Rational value = sum * Rational(tagged_class_size(query.left) * tagged_class_size(query.right), denom);
    if (!value.is_integer() || value.sign() < 0) {
        throw IdentityFailure("decomposition count " + value.to_string() + " for " + query.left.to_string() +
                              " x " + query.right.to_string() + " is not a non-negative integer");
    }
    return value;
}

Integer brute_decompositions(const FactorizationQuery& query, int max_n) {
    query.validate();
    const int n = query.n();
    check_limit(n, max_n);
    const detail::ClassIndex index(n);
    const auto& classes = index.classes();
    const std::size_t want_left = static_cast<std::size_t>(
        std::lower_bound(classes.begin(), classes.end(), query.left) - classes.begin());
    const std::size_t want_right = static_cast<std::size_t>(
        std::lower_bound(classes.begin(), classes.end(), query.right) - classes.begin());
    const auto c = full_cycle_images(n);
    detail::Images second(c.size());
    unsigned long count = 0;
    for (const auto& first : detail::all_permutations(n)) {
        if (index(first) != want_left) {
            continue;
        }
        detail::compose_into(detail::inverse_of(first), c, second);
        if (index(second) == want_right) {
            ++count;
        }
    }
    return Integer(count);
}

std::map<std::pair<TaggedClass, TaggedClass>, Integer> brute_decomposition_table(int n, int max_n) {
    check_limit(n, max_n);
    const detail::ClassIndex index(n);
    const auto& classes = index.classes();
    const auto c = full_cycle_images(n);
    detail::Images second(c.size());
    std::map<std::pair<std::size_t, std::size_t>, unsigned long> counts;
    for (const auto& first : detail::all_permutations(n)) {
        detail::compose_into(detail::inverse_of(first), c, second);
        ++counts[{index(first), index(second)}];
    }
    std::map<std::pair<TaggedClass, TaggedClass>, Integer> out;
    for (const auto& [key, v] : counts) {
        out.emplace(std::make_pair(classes[key.first], classes[key.second]), Integer(v));
    }
    return out;
}

}  // namespace nearcentral
