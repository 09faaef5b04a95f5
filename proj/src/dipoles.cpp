#include "nearcentral/dipoles.hpp"

#include <numeric>

#include "nearcentral/errors.hpp"
#include "nearcentral/genchar.hpp"
#include "nearcentral/parallel.hpp"

#include "class_key.hpp"

namespace nearcentral {

void DipoleQuery::validate() const {
    if (n < 2 || p < 1 || p > n - 1 || q < 1 || q > n - 1) {
        throw ContractViolation("dipole query needs n >= 2 and 1 <= p, q <= n-1 (got n=" + std::to_string(n) +
                                ", p=" + std::to_string(p) + ", q=" + std::to_string(q) + ")");
    }
}

Integer GenusHistogram::total() const {
    Integer sum = 0;
    for (const auto& [g, c] : counts) {
        sum += c;
    }
    return sum;
}

Integer GenusHistogram::at(int genus) const {
    auto it = counts.find(genus);
    return it == counts.end() ? Integer(0) : it->second;
}

std::vector<FaceTypeCount> DipoleCensus::face_counts() const {
    std::vector<FaceTypeCount> out;
    for (const auto& [cls, c] : faces) {
        out.push_back({cls, c});
    }
    return out;
}

int genus_of(const TaggedClass& face_class) {
    const int excess = face_class.n() - face_class.shape().length();
    if (excess % 2 != 0) {
        throw IdentityFailure("face class " + face_class.to_string() + " has non-integral genus");
    }
    return excess / 2;
}

namespace {

// The full cycle (n, a_1, ..., a_{n-1}) with a_k given; 0-based images.
detail::Images cycle_images(int n, const std::vector<int>& tail) {
    detail::Images out(static_cast<std::size_t>(n));
    int prev = n;
    for (int x : tail) {
        out[static_cast<std::size_t>(prev - 1)] = static_cast<std::uint8_t>(x - 1);
        prev = x;
    }
    out[static_cast<std::size_t>(prev - 1)] = static_cast<std::uint8_t>(n - 1);
    return out;
}

// Full cycles sigma with sigma^k(n) = n-1, k in 1..n-1.
std::vector<detail::Images> cycles_reaching_at(int n, int k) {
    std::vector<detail::Images> out;
    std::vector<int> rest(static_cast<std::size_t>(n - 2));
    std::iota(rest.begin(), rest.end(), 1);
    do {
        std::vector<int> tail(rest.begin(), rest.end());
        tail.insert(tail.begin() + (k - 1), n - 1);
        out.push_back(cycle_images(n, tail));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

GenusHistogram histogram_of(int n, const std::map<TaggedClass, Integer>& faces) {
    GenusHistogram h;
    h.n = n;
    for (const auto& [cls, c] : faces) {
        if (c != 0) {
            h.counts[genus_of(cls)] += c;
        }
    }
    return h;
}

}  // namespace

Permutation canonical_root_cycle(int n, int p) {
    DipoleQuery{n, p, n - 1}.validate();
    std::vector<int> cycle{n};
    for (int x = 1; x < p; ++x) {
        cycle.push_back(x);
    }
    cycle.push_back(n - 1);
    for (int x = p; x <= n - 2; ++x) {
        cycle.push_back(x);
    }
    const Permutation c = Permutation::from_cycles(n, {cycle});
    int y = n;
    for (int s = 0; s < p; ++s) {
        y = c(y);
    }
    if (y != n - 1) {
        throw IdentityFailure("canonical root cycle does not reach n-1 after p steps");
    }
    return c;
}

DipoleCensus brute_force_p_q_dipoles(const DipoleQuery& query, int max_n, int jobs) {
    query.validate();
    const int n = query.n;
    if (n > max_n) {
        throw ResourceLimitExceeded("dipole brute force refused: n = " + std::to_string(n) + " exceeds limit " +
                                    std::to_string(max_n));
    }
    const detail::ClassIndex index(n);
    const std::size_t nc = index.classes().size();
    const auto left = cycles_reaching_at(n, query.q);
    std::vector<detail::Images> right;
    if (query.q == n - 1) {
        right.push_back(detail::to_images(canonical_root_cycle(n, query.p)));
    } else {
        right = cycles_reaching_at(n, query.p);
    }

    std::vector<std::vector<std::uint64_t>> partial(left.size());
    parallel_for(left.size(), jobs, [&](std::size_t a) {
        auto& counts = partial[a];
        counts.assign(nc, 0);
        detail::Images pi(static_cast<std::size_t>(n));
        for (const auto& b : right) {
            detail::compose_into(left[a], b, pi);
            ++counts[index(pi)];
        }
    });

    std::vector<std::uint64_t> totals(nc, 0);
    for (const auto& counts : partial) {
        for (std::size_t c = 0; c < nc; ++c) {
            totals[c] += counts[c];
        }
    }
    DipoleCensus census;
    for (std::size_t c = 0; c < nc; ++c) {
        if (totals[c] != 0) {
            census.faces.emplace(index.classes()[c], Integer(static_cast<unsigned long>(totals[c])));
        }
    }
    census.genus = histogram_of(n, census.faces);
    return census;
}

namespace {

// gamma^{family(n,k)} at the class ((p, n-p), p).
Rational two_part_value(TwoPartFamily family, int n, int k, int p) {
    if (family == TwoPartFamily::NearHook && p == 1) {
        return genchar_strahov(two_part_index(family, n, k), TaggedClass(Partition({n - 1, 1}), 1));
    }
    return genchar_two_part(family, n, k, p);
}

}  // namespace

Rational dipole_count_formula(const TaggedClass& face_class, int p) {
    const int n = face_class.n();
    DipoleQuery{n, p, n - 1}.validate();

    Rational a(0);
    for (int k = 0; k <= n - 2; ++k) {
        const Rational g = genchar_hook_series(n, k, HookTag::Row, face_class);
        if (g.is_zero()) {
            continue;
        }
        a += Rational(sign_power(k)) * g * two_part_value(TwoPartFamily::HookRow, n, k, p) *
             Rational(Integer(n - 1), dimension(Partition::hook(n - 1, k)) * (n - k - 1));
    }
    Rational b(0);
    for (int k = 1; k <= n - 1; ++k) {
        const Rational g = genchar_hook_series(n, k, HookTag::Column, face_class);
        if (g.is_zero()) {
            continue;
        }
        b += Rational(sign_power(k - 1)) * g * two_part_value(TwoPartFamily::HookColumn, n, k, p) *
             Rational(Integer(n - 1), dimension(Partition::hook(n - 1, k - 1)) * k);
    }
    Rational c(0);
    for (int k = 1; k <= n - 3; ++k) {
        const Rational g = genchar_strahov(two_part_index(TwoPartFamily::NearHook, n, k), face_class);
        if (g.is_zero()) {
            continue;
        }
        c += Rational(sign_power(k)) * g * two_part_value(TwoPartFamily::NearHook, n, k, p) *
             Rational(Integer(static_cast<long>(n) * k * (n - k - 2)),
                      dimension(Partition::hook(n - 1, k)) * ((n - k - 1) * (k + 1)));
    }

    const Rational value = (a + b + c) * Rational(tagged_class_size(face_class) *
                                                      factorial(static_cast<unsigned>(n - 2)),
                                                  factorial(static_cast<unsigned>(n)));
    if (!value.is_integer() || value.sign() < 0) {
        throw IdentityFailure("dipole count " + value.to_string() + " for face class " + face_class.to_string() +
                              ", p=" + std::to_string(p) + " is not a non-negative integer");
    }
    return value;
}

std::map<TaggedClass, Integer> dipole_face_table(int n, int p, int jobs) {
    const auto classes = tagged_classes_of(n);
    std::vector<Integer> values(classes.size());
    parallel_for(classes.size(), jobs, [&](std::size_t i) {
        values[i] = dipole_count_formula(classes[i], p).to_integer();
    });
    std::map<TaggedClass, Integer> out;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (values[i] != 0) {
            out.emplace(classes[i], values[i]);
        }
    }
    return out;
}

Polynomial genus_series_branch(int n, int p, int branch) {
    if (n < 4 || p < 2 || p > n - 1) {
        throw ContractViolation("genus series needs n >= 4 and 2 <= p <= n-1");
    }
    const Polynomial t = Polynomial::monomial(Rational(1), 1);
    Polynomial d = Polynomial::binomial(n - 1, n) + Polynomial::binomial(0, n);
    if (branch == 1) {
        if (2 * p > n) {
            throw ContractViolation("genus series branch 1 needs p <= n/2");
        }
        for (int k = p; k <= n - p - 1; ++k) {
            d += Polynomial::binomial(n - k - 1, n) *
                 Rational(static_cast<long>(n - 1) * (n - p), static_cast<long>(k) * (n - k - 1));
        }
        for (int k = p - 1; k <= n - p - 1; ++k) {
            d -= t * Polynomial::binomial(n - k - 2, n - 1) *
                 Rational(static_cast<long>(n - p), static_cast<long>(n - k - 1) * (k + 1));
        }
    } else if (branch == 2) {
        if (2 * p < n) {
            throw ContractViolation("genus series branch 2 needs p >= n/2");
        }
        for (int k = n - p; k <= p - 1; ++k) {
            d -= Polynomial::binomial(n - k - 1, n) *
                 Rational(static_cast<long>(n - 1) * (n - p), static_cast<long>(k) * (n - k - 1));
        }
        for (int k = n - p; k <= p - 2; ++k) {
            d += t * Polynomial::binomial(n - k - 2, n - 1) *
                 Rational(static_cast<long>(n - p), static_cast<long>(n - k - 1) * (k + 1));
        }
    } else {
        throw ContractViolation("genus series branch must be 1 or 2");
    }
    return d;
}

Polynomial genus_series(int n, int p) { return genus_series_branch(n, p, 2 * p <= n ? 1 : 2); }

GenusHistogram genus_counts(int n, int p) {
    const Polynomial d = genus_series(n, p);
    const Integer scale = factorial(static_cast<unsigned>(n - 2));
    GenusHistogram h;
    h.n = n;
    for (int m = 0; m <= d.degree(); ++m) {
        const Rational c = d.coeff(m) * Rational(scale);
        if (c.is_zero()) {
            continue;
        }
        if ((n - m) % 2 != 0 || !c.is_integer() || c.sign() < 0) {
            throw IdentityFailure("D_{" + std::to_string(n) + "," + std::to_string(p) + "} has coefficient " +
                                  d.coeff(m).to_string() + " at t^" + std::to_string(m));
        }
        h.counts.emplace((n - m) / 2, c.to_integer());
    }
    return h;
}

std::vector<SymmetryVerdict> symmetry_check(int n) {
    if (n < 4) {
        throw ContractViolation("symmetry check needs n >= 4");
    }
    std::vector<SymmetryVerdict> out;
    for (int p = 2; p <= n - 1; ++p) {
        const int q = n + 1 - p;
        out.push_back({p, q, genus_series(n, p) == genus_series(n, q)});
    }
    return out;
}

std::optional<AsymmetryWitness> find_face_type_asymmetry(int n) {
    for (int m = 4; m <= n; ++m) {
        for (int p = 2; 2 * p < m + 1; ++p) {
            const int q = m + 1 - p;
            const auto left = dipole_face_table(m, p);
            const auto right = dipole_face_table(m, q);
            for (const auto& cls : tagged_classes_of(m)) {
                const auto l = left.count(cls) ? left.at(cls) : Integer(0);
                const auto r = right.count(cls) ? right.at(cls) : Integer(0);
                if (l != r) {
                    return AsymmetryWitness{m, p, q, cls, l, r};
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace nearcentral
