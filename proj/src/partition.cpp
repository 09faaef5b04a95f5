#include "nearcentral/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "nearcentral/errors.hpp"

namespace nearcentral {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p <= 0) {
            throw ContractViolation("Partition: parts must be positive");
        }
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::hook(int n, int k) {
    if (n < 1 || k < 0 || k > n - 1) {
        throw ContractViolation("Partition::hook: need 0 <= k <= n-1");
    }
    std::vector<int> parts{n - k};
    parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
    return Partition(std::move(parts));
}

Partition Partition::near_hook(int n, int k) {
    if (k < 1 || k > n - 3) {
        throw ContractViolation("Partition::near_hook: need 1 <= k <= n-3");
    }
    std::vector<int> parts{n - k - 1, 2};
    parts.insert(parts.end(), static_cast<std::size_t>(k - 1), 1);
    return Partition(std::move(parts));
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
        if (token.empty()) {
            throw ContractViolation("Partition: empty part in '" + text + "'");
        }
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw ContractViolation("Partition: cannot parse '" + text + "'");
        }
        if (used != token.size()) {
            throw ContractViolation("Partition: cannot parse '" + text + "'");
        }
        parts.push_back(value);
    }
    return Partition(std::move(parts));
}

int Partition::multiplicity(int part) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

Partition Partition::decrement_part(int part) const {
    const int row = lowest_row_of_length(part);
    std::vector<int> out = parts_;
    out[static_cast<std::size_t>(row)] -= 1;
    if (out[static_cast<std::size_t>(row)] == 0) {
        out.erase(out.begin() + row);
    }
    return Partition(std::move(out));
}

Partition Partition::remove_part(int part) const {
    const int row = lowest_row_of_length(part);
    std::vector<int> out = parts_;
    out.erase(out.begin() + row);
    return Partition(std::move(out));
}

bool Partition::contains(const Partition& other) const {
    if (other.length() > length()) {
        return false;
    }
    for (std::size_t r = 0; r < other.parts_.size(); ++r) {
        if (other.parts_[r] > parts_[r]) {
            return false;
        }
    }
    return true;
}

int Partition::lowest_row_of_length(int part) const {
    for (int r = length() - 1; r >= 0; --r) {
        if (parts_[static_cast<std::size_t>(r)] == part) {
            return r;
        }
    }
    throw ContractViolation("Partition: " + std::to_string(part) + " is not a part of " + to_string());
}

std::optional<int> Partition::hook_leg() const {
    if (parts_.empty()) {
        return std::nullopt;
    }
    for (std::size_t r = 1; r < parts_.size(); ++r) {
        if (parts_[r] != 1) {
            return std::nullopt;
        }
    }
    return length() - 1;
}

std::optional<int> Partition::near_hook_index() const {
    if (length() < 2 || parts_[1] != 2) {
        return std::nullopt;
    }
    for (std::size_t r = 2; r < parts_.size(); ++r) {
        if (parts_[r] != 1) {
            return std::nullopt;
        }
    }
    return length() - 1;
}

std::string Partition::to_string() const { return "(" + to_compact_string() + ")"; }

std::string Partition::to_compact_string() const {
    std::string out;
    for (std::size_t r = 0; r < parts_.size(); ++r) {
        if (r) {
            out += ",";
        }
        out += std::to_string(parts_[r]);
    }
    return out;
}

TaggedClass::TaggedClass(Partition shape, int tag) : shape_(std::move(shape)), tag_(tag) {
    if (!shape_.has_part(tag_)) {
        throw ContractViolation("TaggedClass: " + std::to_string(tag_) + " is not a part of " +
                                shape_.to_string());
    }
}

TaggedClass TaggedClass::parse(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw ContractViolation("TaggedClass: expected 'parts:tag', got '" + text + "'");
    }
    int tag = 0;
    try {
        tag = std::stoi(text.substr(colon + 1));
    } catch (const std::exception&) {
        throw ContractViolation("TaggedClass: bad tag in '" + text + "'");
    }
    return TaggedClass(Partition::parse(text.substr(0, colon)), tag);
}

std::string TaggedClass::to_string() const {
    return "(" + shape_.to_string() + "," + std::to_string(tag_) + ")";
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        partitions_rec(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n, std::optional<int> num_parts) {
    if (n < 0) {
        throw ContractViolation("partitions_of: n must be non-negative");
    }
    std::vector<Partition> all;
    std::vector<int> prefix;
    partitions_rec(n, n, prefix, all);
    if (!num_parts) {
        return all;
    }
    std::vector<Partition> out;
    for (auto& p : all) {
        if (p.length() == *num_parts) {
            out.push_back(std::move(p));
        }
    }
    return out;
}

std::vector<TaggedClass> tagged_classes_of(int n) {
    std::vector<TaggedClass> out;
    for (const auto& lambda : partitions_of(n)) {
        std::vector<int> distinct = lambda.parts();
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (int tag : distinct) {
            out.emplace_back(lambda, tag);
        }
    }
    return out;
}

Integer class_size(const Partition& lambda) {
    Integer denom = 1;
    const auto& parts = lambda.parts();
    for (std::size_t r = 0; r < parts.size();) {
        std::size_t s = r;
        while (s < parts.size() && parts[s] == parts[r]) {
            ++s;
        }
        const auto m = static_cast<unsigned>(s - r);
        Integer power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts[r]), m);
        denom *= power * factorial(m);
        r = s;
    }
    return factorial(static_cast<unsigned>(lambda.size())) / denom;
}

Integer tagged_class_size(const TaggedClass& c) {
    const Partition& lambda = c.shape();
    if (lambda.size() == 0) {
        return 1;
    }
    return class_size(lambda) * c.tag() * lambda.multiplicity(c.tag()) / lambda.size();
}

Integer dimension(const Partition& lambda) {
    Integer hooks = 1;
    const auto& parts = lambda.parts();
    for (std::size_t r = 0; r < parts.size(); ++r) {
        for (int c = 0; c < parts[r]; ++c) {
            int below = 0;
            for (std::size_t rr = r + 1; rr < parts.size() && parts[rr] > c; ++rr) {
                ++below;
            }
            hooks *= (parts[r] - c - 1) + below + 1;
        }
    }
    return factorial(static_cast<unsigned>(lambda.size())) / hooks;
}

int tagged_content(const TaggedClass& c) {
    const int row = c.shape().lowest_row_of_length(c.tag());
    return (c.tag() - 1) - row;
}

}  // namespace nearcentral
