#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nearcentral/partition.hpp"

namespace nearcentral {

/// A bijection of {1, ..., n}.
///
/// Products compose right to left: (sigma * tau)(x) = sigma(tau(x)). Every
/// brute-force routine in the library uses this single convention.
class Permutation {
public:
    Permutation() = default;
    /// Identity on n points.
    explicit Permutation(int n);

    /// images[x-1] = pi(x), values 1-based.
    static Permutation from_images(const std::vector<int>& images);
    /// Product of disjoint cycles, 1-based; unlisted points are fixed.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
    /// The transposition (a b).
    static Permutation transposition(int n, int a, int b);
    /// The adjacent transposition s_k = (k, k+1).
    static Permutation adjacent(int n, int k) { return transposition(n, k, k + 1); }

    int n() const { return static_cast<int>(images_.size()); }
    /// pi(x), 1-based.
    int operator()(int x) const { return images_[static_cast<std::size_t>(x - 1)] + 1; }
    std::vector<int> images() const;

    Permutation inverse() const;
    bool is_identity() const;

    /// Cycles in 1-based notation, each starting at its smallest element,
    /// ordered by that element. Fixed points included.
    std::vector<std::vector<int>> cycles() const;
    int cycle_count() const;
    Partition cycle_type() const;
    /// (cycle type, length of the cycle containing n).
    TaggedClass tagged_class() const;

    /// Word a_1 ... a_m with pi = s_{a_1} s_{a_2} ... s_{a_m}, obtained by
    /// bubble sort; m is the number of inversions.
    std::vector<int> adjacent_word() const;

    /// "(1 3 2)(4)".
    std::string to_cycle_string() const;

    friend Permutation operator*(const Permutation& sigma, const Permutation& tau);
    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::uint8_t> images_;  // 0-based
};

/// Calls f on each of the n! permutations of S_n in lexicographic order of
/// image vectors.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& f);

/// Calls f on each full n-cycle sigma with sigma(n-1) = n, i.e.
/// sigma^{-1}(n) = n-1. There are (n-2)! of them.
void for_each_cycle_through(int n, const std::function<void(const Permutation&)>& f);

/// A representative of C_{lambda,i}: cycles filled with 1..n in order, with
/// the tagged cycle placed last so that it contains n.
Permutation class_representative(const TaggedClass& c);

}  // namespace nearcentral
