#include "nearcentral/z1_algebra.hpp"

#include <algorithm>
#include <mutex>

#include "nearcentral/errors.hpp"
#include "nearcentral/genchar.hpp"
#include "nearcentral/parallel.hpp"
#include "nearcentral/seminormal.hpp"
#include "nearcentral/tableau.hpp"

#include "class_key.hpp"

namespace nearcentral {

// ---------------------------------------------------------------------------
// GroupAlgebraElement

GroupAlgebraElement GroupAlgebraElement::identity(int n) { return single(Permutation(n)); }

GroupAlgebraElement GroupAlgebraElement::single(const Permutation& pi, const Rational& c) {
    GroupAlgebraElement e(pi.n());
    e.add_term(pi, c);
    return e;
}

GroupAlgebraElement GroupAlgebraElement::class_sum(const TaggedClass& c) {
    GroupAlgebraElement e(c.n());
    for_each_permutation(c.n(), [&](const Permutation& pi) {
        if (pi.tagged_class() == c) {
            e.terms_.emplace(pi, Rational(1));
        }
    });
    return e;
}

Rational GroupAlgebraElement::coefficient(const Permutation& pi) const {
    auto it = terms_.find(pi);
    return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::add_term(const Permutation& pi, const Rational& c) {
    if (pi.n() != n_) {
        throw ContractViolation("GroupAlgebraElement: permutation degree mismatch");
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.emplace(pi, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

void GroupAlgebraElement::check_same_n(const GroupAlgebraElement& other) const {
    if (other.n_ != n_) {
        throw ContractViolation("GroupAlgebraElement: ambient n mismatch");
    }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& rhs) {
    check_same_n(rhs);
    for (const auto& [pi, c] : rhs.terms_) {
        add_term(pi, c);
    }
    return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& rhs) {
    check_same_n(rhs);
    for (const auto& [pi, c] : rhs.terms_) {
        add_term(pi, -c);
    }
    return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [pi, v] : terms_) {
        v *= c;
    }
    return *this;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    a.check_same_n(b);
    GroupAlgebraElement out(a.n_);
    for (const auto& [x, cx] : a.terms_) {
        for (const auto& [y, cy] : b.terms_) {
            out.add_term(x * y, cx * cy);
        }
    }
    return out;
}

GroupAlgebraElement jm_element(int n, int k) {
    if (k < 1 || k > n) {
        throw ContractViolation("jm_element: need 1 <= k <= n");
    }
    GroupAlgebraElement e(n);
    for (int i = 1; i < k; ++i) {
        e.add_term(Permutation::transposition(n, i, k), Rational(1));
    }
    return e;
}

GroupAlgebraElement multiply_checked(const GroupAlgebraElement& a, const GroupAlgebraElement& b,
                                     const BruteForceLimits& limits) {
    if (a.n() > limits.group_algebra) {
        throw ResourceLimitExceeded("group-algebra product refused: n = " + std::to_string(a.n()) +
                                    " exceeds limit " + std::to_string(limits.group_algebra));
    }
    return a * b;
}

// ---------------------------------------------------------------------------
// Z1Element

Z1Element Z1Element::basis(const TaggedClass& c, const Rational& coefficient) {
    Z1Element e(c.n());
    e.add_term(c, coefficient);
    return e;
}

Rational Z1Element::coefficient(const TaggedClass& c) const {
    auto it = terms_.find(c);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Z1Element::add_term(const TaggedClass& c, const Rational& coefficient) {
    if (c.n() != n_) {
        throw ContractViolation("Z1Element: class " + c.to_string() + " is not over n=" + std::to_string(n_));
    }
    if (coefficient.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.emplace(c, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

GroupAlgebraElement Z1Element::expand() const {
    GroupAlgebraElement out(n_);
    if (terms_.empty()) {
        return out;
    }
    for_each_permutation(n_, [&](const Permutation& pi) {
        auto it = terms_.find(pi.tagged_class());
        if (it != terms_.end()) {
            out.add_term(pi, it->second);
        }
    });
    return out;
}

Z1Element& Z1Element::operator+=(const Z1Element& rhs) {
    if (rhs.n_ != n_) {
        throw ContractViolation("Z1Element: ambient n mismatch");
    }
    for (const auto& [c, v] : rhs.terms_) {
        add_term(c, v);
    }
    return *this;
}

Z1Element& Z1Element::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [cls, v] : terms_) {
        v *= c;
    }
    return *this;
}

std::string Z1Element::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& [c, v] : terms_) {
        if (!out.empty()) {
            out += " + ";
        }
        out += v.to_string() + "*K" + c.to_string();
    }
    return out;
}

Z1Element z1_project(const GroupAlgebraElement& a) {
    const int n = a.n();
    std::map<TaggedClass, Rational> seen;
    for_each_permutation(n, [&](const Permutation& pi) {
        const Rational c = a.coefficient(pi);
        const TaggedClass cls = pi.tagged_class();
        auto [it, inserted] = seen.emplace(cls, c);
        if (!inserted && it->second != c) {
            throw NotCentralizerElement("coefficients differ within class " + cls.to_string() + ": " +
                                        it->second.to_string() + " vs " + c.to_string());
        }
    });
    Z1Element out(n);
    for (const auto& [cls, c] : seen) {
        out.add_term(cls, c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Structure constants

StructureConstants::StructureConstants(
    int n, std::vector<TaggedClass> classes,
    std::map<std::pair<TaggedClass, TaggedClass>, std::map<TaggedClass, Integer>> table)
    : n_(n), classes_(std::move(classes)), table_(std::move(table)) {}

StructureConstants StructureConstants::brute_force(int n, const BruteForceLimits& limits, int jobs) {
    if (n > limits.basis_products || n > 15) {
        throw ResourceLimitExceeded("structure constants refused: n = " + std::to_string(n) +
                                    " exceeds limit " + std::to_string(limits.basis_products));
    }
    if (n < 1) {
        throw ContractViolation("structure constants need n >= 1");
    }
    const detail::ClassIndex index(n);
    const auto& classes = index.classes();
    const std::size_t nc = classes.size();
    const auto perms = detail::all_permutations(n);
    std::vector<detail::Images> inverses;
    std::vector<std::size_t> cls;
    for (const auto& p : perms) {
        inverses.push_back(detail::inverse_of(p));
        cls.push_back(index(p));
    }

    // counts[c][a * nc + b] for the fixed representative z of class c.
    std::vector<std::vector<std::uint64_t>> counts(nc, std::vector<std::uint64_t>(nc * nc, 0));
    parallel_for(nc, jobs, [&](std::size_t c) {
        const auto z = detail::to_images(class_representative(classes[c]));
        detail::Images y(z.size());
        auto& out = counts[c];
        for (std::size_t p = 0; p < perms.size(); ++p) {
            detail::compose_into(inverses[p], z, y);
            ++out[cls[p] * nc + index(y)];
        }
    });

    std::map<std::pair<TaggedClass, TaggedClass>, std::map<TaggedClass, Integer>> table;
    for (std::size_t a = 0; a < nc; ++a) {
        for (std::size_t b = 0; b < nc; ++b) {
            auto& terms = table[{classes[a], classes[b]}];
            for (std::size_t c = 0; c < nc; ++c) {
                const std::uint64_t v = counts[c][a * nc + b];
                if (v != 0) {
                    terms.emplace(classes[c], Integer(static_cast<unsigned long>(v)));
                }
            }
        }
    }
    return StructureConstants(n, classes, std::move(table));
}

std::shared_ptr<const StructureConstants> StructureConstants::cached(int n, const BruteForceLimits& limits) {
    if (n > limits.basis_products) {
        throw ResourceLimitExceeded("structure constants refused: n = " + std::to_string(n) +
                                    " exceeds limit " + std::to_string(limits.basis_products));
    }
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const StructureConstants>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) {
            return it->second;
        }
    }
    auto table = std::make_shared<const StructureConstants>(brute_force(n, limits));
    std::lock_guard lock(mutex);
    return cache.emplace(n, std::move(table)).first->second;
}

const std::map<TaggedClass, Integer>& StructureConstants::product(const TaggedClass& a,
                                                                  const TaggedClass& b) const {
    auto it = table_.find({a, b});
    if (it == table_.end()) {
        throw ContractViolation("StructureConstants: classes not over n=" + std::to_string(n_));
    }
    return it->second;
}

Integer StructureConstants::constant(const TaggedClass& a, const TaggedClass& b, const TaggedClass& c) const {
    const auto& terms = product(a, b);
    auto it = terms.find(c);
    return it == terms.end() ? Integer(0) : it->second;
}

// ---------------------------------------------------------------------------
// Character formula

Rational connection_coefficient(const TaggedClass& a, const TaggedClass& b, const TaggedClass& c) {
    const int n = a.n();
    if (b.n() != n || c.n() != n) {
        throw ContractViolation("connection_coefficient: classes over different n");
    }
    const auto table = GencharTable::of(n);
    const std::size_t ia = table->index_of(a);
    const std::size_t ib = table->index_of(b);
    const std::size_t ic = table->index_of(c);
    Rational sum(0);
    for (std::size_t r = 0; r < table->classes().size(); ++r) {
        const Rational& ga = table->value(r, ia);
        if (ga.is_zero()) {
            continue;
        }
        const Rational& gb = table->value(r, ib);
        const Rational& gc = table->value(r, ic);
        if (gb.is_zero() || gc.is_zero()) {
            continue;
        }
        const TaggedClass& rho = table->classes()[r];
        const Integer lowered = dimension(rho.shape().decrement_part(rho.tag()));
        sum += ga * gb * gc * Rational(dimension(rho.shape()), lowered * lowered);
    }
    const Rational value = sum * Rational(tagged_class_size(a) * tagged_class_size(b),
                                          factorial(static_cast<unsigned>(n)));
    if (!value.is_integer() || value.sign() < 0) {
        throw IdentityFailure("connection coefficient " + value.to_string() + " for " + a.to_string() +
                              " * " + b.to_string() + " -> " + c.to_string() +
                              " is not a non-negative integer");
    }
    return value;
}

Z1Element z1_multiply(const Z1Element& a, const Z1Element& b, Z1ProductMethod method,
                      const BruteForceLimits& limits) {
    if (a.n() != b.n()) {
        throw ContractViolation("z1_multiply: ambient n mismatch");
    }
    const int n = a.n();
    Z1Element out(n);
    if (a.is_zero() || b.is_zero()) {
        return out;
    }
    bool brute = false;
    switch (method) {
        case Z1ProductMethod::Auto:
            brute = n <= limits.basis_products;
            break;
        case Z1ProductMethod::BruteForce:
            if (n > limits.basis_products) {
                throw ResourceLimitExceeded("z1_multiply: n = " + std::to_string(n) +
                                            " exceeds brute-force limit " +
                                            std::to_string(limits.basis_products));
            }
            brute = true;
            break;
        case Z1ProductMethod::CharacterFormula:
            break;
    }
    if (brute) {
        const auto sc = StructureConstants::cached(n, limits);
        for (const auto& [ca, va] : a.terms()) {
            for (const auto& [cb, vb] : b.terms()) {
                for (const auto& [cc, k] : sc->product(ca, cb)) {
                    out.add_term(cc, va * vb * Rational(k));
                }
            }
        }
        return out;
    }
    const auto classes = tagged_classes_of(n);
    for (const auto& [ca, va] : a.terms()) {
        for (const auto& [cb, vb] : b.terms()) {
            for (const auto& cc : classes) {
                out.add_term(cc, va * vb * connection_coefficient(ca, cb, cc));
            }
        }
    }
    return out;
}

GroupAlgebraElement gamma_element(const TaggedClass& index, const BruteForceLimits& limits) {
    const int n = index.n();
    if (n > limits.group_algebra) {
        throw ResourceLimitExceeded("gamma_element refused: n = " + std::to_string(n) + " exceeds limit " +
                                    std::to_string(limits.group_algebra));
    }
    const auto rep = SeminormalRepresentation::of(index.shape());
    std::vector<std::size_t> block;
    for (const auto& t : syt_enumerate(index.shape(), index.tag())) {
        block.push_back(rep->index_of(t));
    }
    const Rational scale(dimension(index.shape()), factorial(static_cast<unsigned>(n)));
    GroupAlgebraElement out(n);
    for_each_permutation(n, [&](const Permutation& pi) {
        const SeminormalMatrix m = rep->matrix(pi.inverse());
        Rational partial(0);
        for (std::size_t t : block) {
            partial += m.at(t, t);
        }
        out.add_term(pi, partial * scale);
    });
    return out;
}

}  // namespace nearcentral
