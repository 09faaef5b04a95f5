#pragma once

#include <algorithm>
#include <numeric>
#include <random>

#include "nearcentral/partition.hpp"
#include "nearcentral/permutation.hpp"
#include "nearcentral/z1_algebra.hpp"

namespace testgen {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline nearcentral::Permutation permutation(Rng& rng, int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::shuffle(images.begin(), images.end(), rng);
    return nearcentral::Permutation::from_images(images);
}

inline nearcentral::TaggedClass tagged_class(Rng& rng, int n) {
    const auto classes = nearcentral::tagged_classes_of(n);
    return classes[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(classes.size()) - 1))];
}

// A random permutation in the given class: conjugate the representative by a
// random permutation fixing n.
inline nearcentral::Permutation member_of(Rng& rng, const nearcentral::TaggedClass& c) {
    const int n = c.n();
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::shuffle(images.begin(), images.end() - 1, rng);
    const auto g = nearcentral::Permutation::from_images(images);
    return g * nearcentral::class_representative(c) * g.inverse();
}

inline nearcentral::Rational small_rational(Rng& rng) {
    return nearcentral::Rational(uniform(rng, -6, 6), uniform(rng, 1, 4));
}

inline nearcentral::Z1Element z1_element(Rng& rng, int n, int terms) {
    nearcentral::Z1Element e(n);
    for (int t = 0; t < terms; ++t) {
        e.add_term(tagged_class(rng, n), small_rational(rng));
    }
    return e;
}

}  // namespace testgen
