#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nearcentral/rational.hpp"

namespace nearcentral {

/// An integer partition, parts stored weakly decreasing.
///
/// Ordering: by size, then reverse-lexicographically, so that for a fixed n an
/// ordered container iterates in the same order as partitions_of(n):
/// (3) < (2,1) < (1,1,1).
class Partition {
public:
    Partition() = default;
    /// Parts may be given in any order; they are sorted. Zero or negative
    /// parts are a contract violation.
    explicit Partition(std::vector<int> parts);

    /// The hook (n-k, 1^k), 0 <= k <= n-1.
    static Partition hook(int n, int k);
    /// The near-hook (n-k-1, 2, 1^{k-1}), 1 <= k <= n-3.
    static Partition near_hook(int n, int k);
    /// Parses "3,1,1" (whitespace tolerated). The empty string is the empty
    /// partition.
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t row) const { return parts_[row]; }

    int multiplicity(int part) const;
    bool has_part(int part) const { return multiplicity(part) > 0; }

    /// i_-(lambda): one copy of part i becomes i-1 (dropped when i = 1).
    Partition decrement_part(int part) const;
    /// lambda \ j: one copy of part j removed.
    Partition remove_part(int part) const;

    /// Cellwise containment of Ferrers diagrams: other subset of this.
    bool contains(const Partition& other) const;

    /// 0-based index of the lowest row of the given length.
    int lowest_row_of_length(int part) const;

    /// k if this is the hook (n-k, 1^k).
    std::optional<int> hook_leg() const;
    /// k if this is the near-hook (n-k-1, 2, 1^{k-1}) with 1 <= k <= n-3.
    std::optional<int> near_hook_index() const;

    /// "(3,1,1)".
    std::string to_string() const;
    /// "3,1,1".
    std::string to_compact_string() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) {
            return c;
        }
        return b.parts_ <=> a.parts_;
    }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// A partition together with a distinguished part: the class C_{lambda,i} of
/// permutations of cycle type lambda with n on a cycle of length i.
class TaggedClass {
public:
    TaggedClass(Partition shape, int tag);

    /// "3,1:1" -> ((3,1),1).
    static TaggedClass parse(const std::string& text);

    const Partition& shape() const { return shape_; }
    int tag() const { return tag_; }
    int n() const { return shape_.size(); }

    /// "((3,1),1)".
    std::string to_string() const;

    friend bool operator==(const TaggedClass&, const TaggedClass&) = default;
    friend std::strong_ordering operator<=>(const TaggedClass& a, const TaggedClass& b) {
        if (auto c = a.shape_ <=> b.shape_; c != 0) {
            return c;
        }
        return b.tag_ <=> a.tag_;
    }

private:
    Partition shape_;
    int tag_;
};

/// All partitions of n in reverse-lexicographic order, optionally restricted
/// to exactly num_parts parts. n = 0 yields the single empty partition.
std::vector<Partition> partitions_of(int n, std::optional<int> num_parts = std::nullopt);

/// Every (lambda, i) with lambda |- n and i a distinct part of lambda, ordered
/// by partition and then by decreasing tag.
std::vector<TaggedClass> tagged_classes_of(int n);

/// |C_lambda| = n! / prod_i i^{m_i} m_i!.
Integer class_size(const Partition& lambda);

/// |C_{lambda,i}| = |C_lambda| * i * m_i(lambda) / n.
Integer tagged_class_size(const TaggedClass& c);

/// d_lambda by the hook-length formula.
Integer dimension(const Partition& lambda);

/// Content (column - row, 0-based) of the cell at the end of the lowest row
/// of length i: the content of n in every tableau of SYT_{lambda,i}.
int tagged_content(const TaggedClass& c);

}  // namespace nearcentral
