#include "nearcentral/genchar.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "nearcentral/characters.hpp"
#include "nearcentral/errors.hpp"
#include "nearcentral/seminormal.hpp"
#include "nearcentral/skew_shape.hpp"
#include "nearcentral/tableau.hpp"

namespace nearcentral {

TaggedClass two_part_index(TwoPartFamily family, int n, int k) {
    switch (family) {
        case TwoPartFamily::HookRow:
            if (k < 0 || k > n - 2) {
                throw ContractViolation("hook-row index needs 0 <= k <= n-2");
            }
            return {Partition::hook(n, k), n - k};
        case TwoPartFamily::HookColumn:
            if (k < 1 || k > n - 1) {
                throw ContractViolation("hook-column index needs 1 <= k <= n-1");
            }
            return {Partition::hook(n, k), 1};
        case TwoPartFamily::NearHook:
            if (k < 1 || k > n - 3) {
                throw ContractViolation("near-hook index needs 1 <= k <= n-3");
            }
            return {Partition::near_hook(n, k), 2};
    }
    throw ContractViolation("unknown two-part family");
}

Rational genchar_oracle(const TaggedClass& index, const Permutation& pi) {
    const auto rep = SeminormalRepresentation::of(index.shape());
    const SeminormalMatrix m = rep->matrix(pi);
    Rational total(0);
    for (const auto& t : syt_enumerate(index.shape(), index.tag())) {
        const std::size_t i = rep->index_of(t);
        total += m.at(i, i);
    }
    return total;
}

Rational genchar_oracle(const TaggedClass& index, const TaggedClass& cls) {
    if (index.n() != cls.n()) {
        throw ContractViolation("genchar_oracle: index and class have different n");
    }
    return genchar_oracle(index, class_representative(cls));
}

Rational strahov_weight(const Partition& lambda, const Partition& nu, int tag) {
    const SkewShape skew(lambda, nu);
    if (!skew.is_broken_border_strip()) {
        return Rational(0);
    }
    const int tag_row = lambda.lowest_row_of_length(tag);
    const SkewShape::Cell tagged{tag_row, tag - 1};
    const int c = SkewShape::content(tagged);
    Rational value(sign_power(skew.height()));
    for (const auto& s : skew.sharp_corners()) {
        value *= Rational(c - SkewShape::content(s));
    }
    for (const auto& d : skew.dull_boxes()) {
        if (d == tagged) {
            continue;
        }
        value /= Rational(c - SkewShape::content(d));
    }
    return value;
}

Rational genchar_strahov(const TaggedClass& index, const TaggedClass& cls) {
    if (index.n() != cls.n()) {
        throw ContractViolation("genchar_strahov: index and class have different n");
    }
    const Partition& lambda = index.shape();
    const Partition lowered = lambda.decrement_part(index.tag());
    const Partition rest = cls.shape().remove_part(cls.tag());
    Rational total(0);
    for (const auto& nu : partitions_of(cls.n() - cls.tag())) {
        if (!lowered.contains(nu)) {
            continue;
        }
        const Rational phi = strahov_weight(lambda, nu, index.tag());
        if (phi.is_zero()) {
            continue;
        }
        total += phi * Rational(mn_character(nu, rest));
    }
    return total;
}

Rational genchar_at_K_n11(const TaggedClass& cls) {
    const int n = cls.n();
    if (n < 2) {
        throw ContractViolation("genchar_at_K_n11: n must be at least 2");
    }
    const Partition& mu = cls.shape();
    const int j = cls.tag();
    if (auto k = mu.near_hook_index(); k && *k >= 1 && *k <= n - 3 && j == 2) {
        return Rational(sign_power(*k));
    }
    if (auto k = mu.hook_leg()) {
        if (j == n - *k && n - *k >= 2) {
            return Rational(sign_power(*k));
        }
        if (j == 1 && *k >= 1) {
            return Rational(sign_power(*k - 1));
        }
    }
    return Rational(0);
}

Rational genchar_at_full_cycle(const TaggedClass& cls) {
    const int n = cls.n();
    if (n == 1) {
        return Rational(1);
    }
    const Partition& mu = cls.shape();
    const int j = cls.tag();
    if (auto k = mu.hook_leg()) {
        if (j == n - *k && n - *k >= 2) {
            return Rational(sign_power(*k) * (n - *k - 1), n - 1);
        }
        if (j == 1 && *k >= 1) {
            return Rational(sign_power(*k) * *k, n - 1);
        }
    }
    return Rational(0);
}

Polynomial row_tag_series(int n, int j) {
    if (j < 1) {
        throw ContractViolation("row_tag_series: j must be positive");
    }
    Polynomial numerator({Rational(n - 1), Rational(n)});
    numerator += Polynomial::monomial(Rational(sign_power(j)), j);
    return numerator.divide_by_one_plus_x();
}

Polynomial column_tag_series(int n, int j) {
    if (j < 1) {
        throw ContractViolation("column_tag_series: j must be positive");
    }
    Polynomial numerator = Polynomial::monomial(Rational(sign_power(j)), 1);
    numerator += Polynomial::monomial(Rational(n), j);
    numerator += Polynomial::monomial(Rational(n - 1), j + 1);
    return numerator.divide_by_one_plus_x() * Rational(sign_power(j - 1));
}

Rational genchar_hook_series(int n, int k, HookTag which, const TaggedClass& cls) {
    if (cls.n() != n || n < 2) {
        throw ContractViolation("genchar_hook_series: class must be over n >= 2");
    }
    if (which == HookTag::Row && (k < 0 || k > n - 2)) {
        throw ContractViolation("genchar_hook_series: row tag needs 0 <= k <= n-2");
    }
    if (which == HookTag::Column && (k < 1 || k > n - 1)) {
        throw ContractViolation("genchar_hook_series: column tag needs 1 <= k <= n-1");
    }
    const Polynomial factor =
        which == HookTag::Row ? row_tag_series(n, cls.tag()) : column_tag_series(n, cls.tag());
    const Polynomial h = hook_product(cls.shape().remove_part(cls.tag()));
    return (factor * h).times_inverse_one_plus_x(k).coeff(k) / Rational(n - 1);
}

std::vector<Rational> genchar_two_part_branches(TwoPartFamily family, int n, int k, int p) {
    (void)two_part_index(family, n, k);  // range check
    if (p < 1 || p > n - 1 || (family == TwoPartFamily::NearHook && p < 2)) {
        throw ContractViolation("genchar_two_part: p out of range");
    }
    const int q = n - p;
    std::vector<Rational> out;
    switch (family) {
        case TwoPartFamily::HookRow:
            if (k <= n - k - 1) {
                if (q <= k) {
                    out.emplace_back(sign_power(k - 1) * q, n - 1);
                } else if (q < n - k) {
                    out.emplace_back(sign_power(k) * (n - k - 1), n - 1);
                } else {
                    out.emplace_back(sign_power(k) * q, n - 1);
                }
            }
            if (k >= n - k - 1) {
                if (q < n - k) {
                    out.emplace_back(sign_power(k - 1) * q, n - 1);
                } else if (q <= k) {
                    out.emplace_back(sign_power(k - 1) * (n - k - 1), n - 1);
                } else {
                    out.emplace_back(sign_power(k) * q, n - 1);
                }
            }
            break;
        case TwoPartFamily::HookColumn:
            if (k <= n - k - 1) {
                if (q <= k) {
                    out.emplace_back(sign_power(k) * q, n - 1);
                } else if (q < n - k) {
                    out.emplace_back(sign_power(k) * k, n - 1);
                } else {
                    out.emplace_back(sign_power(k - 1) * q, n - 1);
                }
            }
            if (k >= n - k - 1) {
                if (q < n - k) {
                    out.emplace_back(sign_power(k) * q, n - 1);
                } else if (q <= k) {
                    out.emplace_back(sign_power(k - 1) * k, n - 1);
                } else {
                    out.emplace_back(sign_power(k - 1) * q, n - 1);
                }
            }
            break;
        case TwoPartFamily::NearHook: {
            const long denom = static_cast<long>(k) * (n - k - 2);
            if (k <= n - k - 2) {
                if (q <= k) {
                    out.emplace_back(sign_power(k) * q, denom);
                } else if (q < n - k - 1) {
                    out.emplace_back(0);
                } else {
                    out.emplace_back(sign_power(k + 1) * q, denom);
                }
            }
            if (k >= n - k - 2) {
                if (q <= n - k - 2) {
                    out.emplace_back(sign_power(k) * q, denom);
                } else if (q <= k) {
                    out.emplace_back(0);
                } else {
                    out.emplace_back(sign_power(k + 1) * q, denom);
                }
            }
            break;
        }
    }
    return out;
}

Rational genchar_two_part(TwoPartFamily family, int n, int k, int p) {
    const auto values = genchar_two_part_branches(family, n, k, p);
    for (const auto& v : values) {
        if (v != values.front()) {
            throw IdentityFailure("genchar_two_part: overlapping case tables disagree at n=" +
                                  std::to_string(n) + ", k=" + std::to_string(k) +
                                  ", p=" + std::to_string(p));
        }
    }
    return values.front();
}

Polynomial content_polynomial(const Partition& rho) {
    Polynomial result = Polynomial::constant(1);
    for (int r = 0; r < rho.length(); ++r) {
        for (int c = 0; c < rho[static_cast<std::size_t>(r)]; ++c) {
            result *= Polynomial({Rational(c - r), Rational(1)});
        }
    }
    return result;
}

Rational content_poly_sum(const TaggedClass& index, int m) {
    if (m < 1 || m > index.n()) {
        throw ContractViolation("content_poly_sum: need 1 <= m <= n");
    }
    return content_polynomial(index.shape()).coeff(m);
}

GencharTable::GencharTable(int n) : n_(n), classes_(tagged_classes_of(n)) {
    values_.reserve(classes_.size() * classes_.size());
    for (const auto& index : classes_) {
        for (const auto& cls : classes_) {
            values_.push_back(genchar_strahov(index, cls));
        }
    }
}

std::shared_ptr<const GencharTable> GencharTable::of(int n) {
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const GencharTable>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) {
            return it->second;
        }
    }
    auto table = std::make_shared<const GencharTable>(n);
    std::lock_guard lock(mutex);
    return cache.emplace(n, std::move(table)).first->second;
}

std::size_t GencharTable::index_of(const TaggedClass& c) const {
    auto it = std::lower_bound(classes_.begin(), classes_.end(), c);
    if (it == classes_.end() || !(*it == c)) {
        throw ContractViolation("GencharTable: class " + c.to_string() + " is not over n=" +
                                std::to_string(n_));
    }
    return static_cast<std::size_t>(it - classes_.begin());
}

const Rational& GencharTable::value(const TaggedClass& index, const TaggedClass& cls) const {
    return value(index_of(index), index_of(cls));
}

}  // namespace nearcentral
