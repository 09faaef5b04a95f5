#include "nearcentral/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "nearcentral/errors.hpp"

namespace nearcentral {

Permutation::Permutation(int n) {
    if (n < 0 || n > 255) {
        throw ContractViolation("Permutation: n out of range");
    }
    images_.resize(static_cast<std::size_t>(n));
    std::iota(images_.begin(), images_.end(), std::uint8_t{0});
}

Permutation Permutation::from_images(const std::vector<int>& images) {
    const int n = static_cast<int>(images.size());
    Permutation p(n);
    std::vector<bool> seen(images.size(), false);
    for (int x = 0; x < n; ++x) {
        const int y = images[static_cast<std::size_t>(x)];
        if (y < 1 || y > n || seen[static_cast<std::size_t>(y - 1)]) {
            throw ContractViolation("Permutation: images are not a bijection of 1..n");
        }
        seen[static_cast<std::size_t>(y - 1)] = true;
        p.images_[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(y - 1);
    }
    return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (const auto& cycle : cycles) {
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            const int a = cycle[k];
            if (a < 1 || a > n || used[static_cast<std::size_t>(a - 1)]) {
                throw ContractViolation("Permutation: cycles are not disjoint within 1..n");
            }
            used[static_cast<std::size_t>(a - 1)] = true;
            images[static_cast<std::size_t>(a - 1)] = cycle[(k + 1) % cycle.size()];
        }
    }
    return from_images(images);
}

Permutation Permutation::transposition(int n, int a, int b) {
    if (a == b) {
        throw ContractViolation("Permutation::transposition: a == b");
    }
    return from_cycles(n, {{a, b}});
}

std::vector<int> Permutation::images() const {
    std::vector<int> out(images_.size());
    for (std::size_t x = 0; x < images_.size(); ++x) {
        out[x] = images_[x] + 1;
    }
    return out;
}

Permutation Permutation::inverse() const {
    Permutation inv(n());
    for (std::size_t x = 0; x < images_.size(); ++x) {
        inv.images_[images_[x]] = static_cast<std::uint8_t>(x);
    }
    return inv;
}

bool Permutation::is_identity() const {
    for (std::size_t x = 0; x < images_.size(); ++x) {
        if (images_[x] != x) {
            return false;
        }
    }
    return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t start = 0; start < images_.size(); ++start) {
        if (seen[start]) {
            continue;
        }
        std::vector<int> cycle;
        for (std::size_t x = start; !seen[x]; x = images_[x]) {
            seen[x] = true;
            cycle.push_back(static_cast<int>(x) + 1);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

int Permutation::cycle_count() const {
    int count = 0;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t start = 0; start < images_.size(); ++start) {
        if (seen[start]) {
            continue;
        }
        ++count;
        for (std::size_t x = start; !seen[x]; x = images_[x]) {
            seen[x] = true;
        }
    }
    return count;
}

Partition Permutation::cycle_type() const {
    std::vector<int> lengths;
    for (const auto& c : cycles()) {
        lengths.push_back(static_cast<int>(c.size()));
    }
    return Partition(std::move(lengths));
}

TaggedClass Permutation::tagged_class() const {
    if (images_.empty()) {
        throw ContractViolation("Permutation::tagged_class: n = 0");
    }
    std::vector<int> lengths;
    int tag = 0;
    std::vector<bool> seen(images_.size(), false);
    const std::size_t top = images_.size() - 1;
    for (std::size_t start = 0; start < images_.size(); ++start) {
        if (seen[start]) {
            continue;
        }
        int len = 0;
        bool has_top = false;
        for (std::size_t x = start; !seen[x]; x = images_[x]) {
            seen[x] = true;
            has_top = has_top || x == top;
            ++len;
        }
        lengths.push_back(len);
        if (has_top) {
            tag = len;
        }
    }
    return TaggedClass(Partition(std::move(lengths)), tag);
}

std::vector<int> Permutation::adjacent_word() const {
    // pi * s_k swaps the images at positions k, k+1. Sorting the image vector
    // with adjacent swaps gives pi * s_{b_1} * ... * s_{b_m} = id, hence
    // pi = s_{b_m} ... s_{b_1}.
    std::vector<std::uint8_t> a = images_;
    std::vector<int> swaps;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k + 1 < a.size(); ++k) {
            if (a[k] > a[k + 1]) {
                std::swap(a[k], a[k + 1]);
                swaps.push_back(static_cast<int>(k) + 1);
                changed = true;
            }
        }
    }
    std::reverse(swaps.begin(), swaps.end());
    return swaps;
}

std::string Permutation::to_cycle_string() const {
    std::string out;
    for (const auto& c : cycles()) {
        out += "(";
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (k) {
                out += " ";
            }
            out += std::to_string(c[k]);
        }
        out += ")";
    }
    return out;
}

Permutation operator*(const Permutation& sigma, const Permutation& tau) {
    if (sigma.n() != tau.n()) {
        throw ContractViolation("Permutation product: degree mismatch");
    }
    Permutation out(sigma.n());
    for (std::size_t x = 0; x < tau.images_.size(); ++x) {
        out.images_[x] = sigma.images_[tau.images_[x]];
    }
    return out;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& f) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    do {
        f(Permutation::from_images(images));
    } while (std::next_permutation(images.begin(), images.end()));
}

void for_each_cycle_through(int n, const std::function<void(const Permutation&)>& f) {
    if (n < 2) {
        throw ContractViolation("for_each_cycle_through: n must be at least 2");
    }
    // sigma = (n, a_1, ..., a_{n-2}, n-1) for each arrangement a of 1..n-2.
    std::vector<int> middle(static_cast<std::size_t>(n - 2));
    std::iota(middle.begin(), middle.end(), 1);
    do {
        std::vector<int> cycle{n};
        cycle.insert(cycle.end(), middle.begin(), middle.end());
        cycle.push_back(n - 1);
        f(Permutation::from_cycles(n, {cycle}));
    } while (std::next_permutation(middle.begin(), middle.end()));
}

Permutation class_representative(const TaggedClass& c) {
    const int n = c.n();
    std::vector<int> lengths = c.shape().parts();
    // Move one copy of the tag to the end.
    auto it = std::find(lengths.begin(), lengths.end(), c.tag());
    lengths.erase(it);
    lengths.push_back(c.tag());
    std::vector<std::vector<int>> cycles;
    int next = 1;
    for (int len : lengths) {
        std::vector<int> cycle;
        for (int k = 0; k < len; ++k) {
            cycle.push_back(next++);
        }
        cycles.push_back(std::move(cycle));
    }
    return Permutation::from_cycles(n, cycles);
}

}  // namespace nearcentral
