#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "nearcentral/errors.hpp"
#include "nearcentral/partition.hpp"
#include "nearcentral/permutation.hpp"

namespace nearcentral::detail {

// Permutations as 0-based image arrays, for the tight brute-force loops.
using Images = std::vector<std::uint8_t>;

inline Images to_images(const Permutation& pi) {
    Images out;
    out.reserve(static_cast<std::size_t>(pi.n()));
    for (int y : pi.images()) {
        out.push_back(static_cast<std::uint8_t>(y - 1));
    }
    return out;
}

// out = a * b, i.e. out(x) = a(b(x)).
inline void compose_into(const Images& a, const Images& b, Images& out) {
    for (std::size_t x = 0; x < b.size(); ++x) {
        out[x] = a[b[x]];
    }
}

inline Images inverse_of(const Images& a) {
    Images out(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) {
        out[a[x]] = static_cast<std::uint8_t>(x);
    }
    return out;
}

// Packs (sorted cycle lengths, tag) into an integer; n <= 15.
inline std::uint64_t class_key(const Images& images) {
    const std::size_t n = images.size();
    std::uint8_t lengths[16] = {};
    std::size_t count = 0;
    std::uint64_t tag = 0;
    std::uint32_t seen = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen & (1u << s)) {
            continue;
        }
        std::uint8_t len = 0;
        bool top = false;
        for (std::size_t x = s; !(seen & (1u << x)); x = images[x]) {
            seen |= 1u << x;
            top = top || x == n - 1;
            ++len;
        }
        lengths[count++] = len;
        if (top) {
            tag = len;
        }
    }
    std::sort(lengths, lengths + count);
    std::uint64_t key = tag;
    for (std::size_t i = 0; i < count; ++i) {
        key = key * 16 + lengths[i];
    }
    return key;
}

// Maps image arrays to positions in tagged_classes_of(n).
class ClassIndex {
public:
    explicit ClassIndex(int n) : classes_(tagged_classes_of(n)) {
        if (n > 15) {
            throw ContractViolation("ClassIndex supports n <= 15");
        }
        for (std::size_t i = 0; i < classes_.size(); ++i) {
            index_.emplace(class_key(to_images(class_representative(classes_[i]))), i);
        }
    }

    const std::vector<TaggedClass>& classes() const { return classes_; }
    std::size_t operator()(const Images& images) const { return index_.at(class_key(images)); }

private:
    std::vector<TaggedClass> classes_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
};

inline std::vector<Images> all_permutations(int n) {
    std::vector<Images> out;
    Images cur(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        cur[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    }
    do {
        out.push_back(cur);
    } while (std::next_permutation(cur.begin(), cur.end()));
    return out;
}

}  // namespace nearcentral::detail
