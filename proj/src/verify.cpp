#include "nearcentral/verify.hpp"

#include <algorithm>

#include "nearcentral/decomposition.hpp"
#include "nearcentral/dipoles.hpp"
#include "nearcentral/errors.hpp"
#include "nearcentral/genchar.hpp"
#include "nearcentral/polynomial.hpp"
#include "nearcentral/tableau.hpp"

namespace nearcentral {

void SuiteReport::expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
        failures.push_back(what);
    }
}

void SuiteReport::merge(const SuiteReport& other) {
    checks += other.checks;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

namespace {

std::string pair_label(const TaggedClass& index, const TaggedClass& cls) {
    return "gamma^" + index.to_string() + "_" + cls.to_string();
}

std::string nstr(int n) { return std::to_string(n); }

Integer lookup(const std::map<TaggedClass, Integer>& m, const TaggedClass& c) {
    auto it = m.find(c);
    return it == m.end() ? Integer(0) : it->second;
}

// Evaluates f and records an IdentityFailure as a failed check instead of
// aborting the sweep.
template <class F>
bool guarded(SuiteReport& report, const std::string& what, F&& f) {
    try {
        f();
        return true;
    } catch (const IdentityFailure& e) {
        report.expect(false, what + ": " + e.what());
        return false;
    }
}

struct FamilyMember {
    TwoPartFamily family;
    int k;
};

std::vector<FamilyMember> families_of(const TaggedClass& index) {
    const int n = index.n();
    std::vector<FamilyMember> out;
    for (int k = 0; k <= n - 2; ++k) {
        if (two_part_index(TwoPartFamily::HookRow, n, k) == index) {
            out.push_back({TwoPartFamily::HookRow, k});
        }
    }
    for (int k = 1; k <= n - 1; ++k) {
        if (two_part_index(TwoPartFamily::HookColumn, n, k) == index) {
            out.push_back({TwoPartFamily::HookColumn, k});
        }
    }
    for (int k = 1; k <= n - 3; ++k) {
        if (two_part_index(TwoPartFamily::NearHook, n, k) == index) {
            out.push_back({TwoPartFamily::NearHook, k});
        }
    }
    return out;
}

}  // namespace

SuiteReport verify_genchar(int n_max) {
    SuiteReport report{"genchar", 0, {}};
    for (int n = 1; n <= n_max; ++n) {
        const auto classes = tagged_classes_of(n);
        for (const auto& index : classes) {
            const auto families = families_of(index);
            for (const auto& cls : classes) {
                const std::string label = pair_label(index, cls);
                const Rational s = genchar_strahov(index, cls);
                const Rational o = genchar_oracle(index, cls);
                report.expect(s == o, label + ": Strahov " + s.to_string() + " vs oracle " + o.to_string());

                if (n >= 2 && cls == TaggedClass(Partition({n - 1, 1}), 1)) {
                    const Rational v = genchar_at_K_n11(index);
                    report.expect(v == s, label + ": (n-1)-cycle closed form " + v.to_string());
                }
                if (cls == TaggedClass(Partition({n}), n)) {
                    const Rational v = genchar_at_full_cycle(index);
                    report.expect(v == s, label + ": full-cycle closed form " + v.to_string());
                }
                if (n >= 2) {
                    for (const auto& member : families) {
                        if (member.family == TwoPartFamily::NearHook) {
                            continue;
                        }
                        const HookTag which =
                            member.family == TwoPartFamily::HookRow ? HookTag::Row : HookTag::Column;
                        const Rational v = genchar_hook_series(n, member.k, which, cls);
                        report.expect(v == s, label + ": hook series " + v.to_string());
                    }
                }
                if (cls.shape().length() == 2) {
                    const int p = cls.tag();
                    for (const auto& member : families) {
                        if (member.family == TwoPartFamily::NearHook && p < 2) {
                            continue;
                        }
                        for (const auto& v : genchar_two_part_branches(member.family, n, member.k, p)) {
                            report.expect(v == s, label + ": two-part table " + v.to_string());
                        }
                    }
                }
            }
        }
    }
    return report;
}

SuiteReport verify_idempotents(int n_max, const BruteForceLimits& limits) {
    SuiteReport report{"idempotents", 0, {}};
    for (int n = 1; n <= n_max; ++n) {
        const auto classes = tagged_classes_of(n);
        std::vector<GroupAlgebraElement> gammas;
        GroupAlgebraElement total(n);
        for (const auto& c : classes) {
            gammas.push_back(gamma_element(c, limits));
            total += gammas.back();
        }
        report.expect(total == GroupAlgebraElement::identity(n), "n=" + nstr(n) + ": sum of idempotents");
        for (std::size_t a = 0; a < classes.size(); ++a) {
            for (std::size_t b = 0; b < classes.size(); ++b) {
                const auto product = multiply_checked(gammas[a], gammas[b], limits);
                const bool ok = a == b ? product == gammas[a] : product.is_zero();
                report.expect(ok, "Gamma^" + classes[a].to_string() + " Gamma^" + classes[b].to_string());
            }
            try {
                const Z1Element z = z1_project(gammas[a]);
                const Rational scale(factorial(static_cast<unsigned>(n)), dimension(classes[a].shape()));
                for (const auto& cls : classes) {
                    const Rational v = z.coefficient(cls) * scale;
                    report.expect(v == genchar_oracle(classes[a], cls),
                                  "coefficient of " + cls.to_string() + " in Gamma^" + classes[a].to_string());
                }
            } catch (const NotCentralizerElement& e) {
                report.expect(false, "Gamma^" + classes[a].to_string() + " not in Z1: " + e.what());
            }
        }
    }
    return report;
}

SuiteReport verify_connection(int n_max, const BruteForceLimits& limits, int jobs) {
    SuiteReport report{"connection", 0, {}};
    for (int n = 1; n <= n_max; ++n) {
        const auto sc = StructureConstants::brute_force(n, limits, jobs);
        for (const auto& a : sc.classes()) {
            for (const auto& b : sc.classes()) {
                for (const auto& c : sc.classes()) {
                    const std::string label = "c(" + a.to_string() + "," + b.to_string() + ";" + c.to_string() + ")";
                    guarded(report, label, [&] {
                        const Rational v = connection_coefficient(a, b, c);
                        const Integer brute = sc.constant(a, b, c);
                        report.expect(v == Rational(brute),
                                      label + ": formula " + v.to_string() + " vs brute " + brute.get_str());
                    });
                }
            }
        }
    }
    return report;
}

SuiteReport verify_dipoles(int n_min, int n_max, int max_brute_n, int jobs) {
    SuiteReport report{"dipoles", 0, {}};
    for (int n = std::max(n_min, 2); n <= n_max; ++n) {
        const auto classes = tagged_classes_of(n);
        const Integer expected_total = factorial(static_cast<unsigned>(n - 2));
        std::shared_ptr<const StructureConstants> sc;
        if (n <= BruteForceLimits{}.basis_products) {
            sc = StructureConstants::cached(n);
        }
        for (int p = 1; p <= n - 1; ++p) {
            const std::string tag = "n=" + nstr(n) + ",p=" + nstr(p);
            const DipoleCensus census = brute_force_p_q_dipoles({n, p, n - 1}, max_brute_n, jobs);
            report.expect(census.genus.total() == expected_total, tag + ": brute-force total");

            std::map<TaggedClass, Integer> formula;
            guarded(report, tag, [&] { formula = dipole_face_table(n, p, jobs); });
            GenusHistogram from_formula{n, {}};
            for (const auto& cls : classes) {
                const Integer f = lookup(formula, cls);
                const Integer b = lookup(census.faces, cls);
                report.expect(f == b, tag + ", face " + cls.to_string() + ": formula " + f.get_str() + " vs brute " +
                                          b.get_str());
                if (f != 0) {
                    from_formula.counts[genus_of(cls)] += f;
                }
            }
            report.expect(from_formula.total() == expected_total, tag + ": formula total");

            if (sc) {
                const TaggedClass root(Partition({p, n - p}), p);
                const TaggedClass cycle(Partition({n - 1, 1}), 1);
                for (const auto& cls : classes) {
                    const Integer v = sc->constant(cls, cycle, root);
                    report.expect(v == lookup(census.faces, cls),
                                  tag + ", face " + cls.to_string() + ": Z1 encoding " + v.get_str());
                }
            }
            if (n >= 4 && p >= 2) {
                guarded(report, tag, [&] {
                    const GenusHistogram series = genus_counts(n, p);
                    report.expect(series == census.genus, tag + ": genus series vs brute force");
                    report.expect(series == from_formula, tag + ": genus series vs per-class sum");
                });
            }
        }
    }
    return report;
}

SuiteReport verify_symmetry(int n_max, int witness_n_max) {
    SuiteReport report{"symmetry", 0, {}};
    for (int n = 4; n <= n_max; ++n) {
        for (const auto& verdict : symmetry_check(n)) {
            report.expect(verdict.equal, "D_{" + nstr(n) + "," + nstr(verdict.p) + "} vs D_{" + nstr(n) + "," +
                                             nstr(verdict.p_prime) + "}");
        }
        for (int p = 2; p <= n - 1; ++p) {
            const Polynomial d = genus_series(n, p);
            report.expect(d.evaluate(Rational(1)) == Rational(1), "D_{" + nstr(n) + "," + nstr(p) + "}(1)");
            for (int m = 0; m <= d.degree(); ++m) {
                if ((n - m) % 2 != 0) {
                    report.expect(d.coeff(m).is_zero(), "D_{" + nstr(n) + "," + nstr(p) + "} parity at t^" + nstr(m));
                }
            }
        }
    }
    if (witness_n_max >= 4) {
        const auto witness = find_face_type_asymmetry(witness_n_max);
        report.expect(witness.has_value(), "face-type asymmetry witness for n <= " + nstr(witness_n_max));
        if (witness) {
            const auto left = brute_force_p_q_dipoles({witness->n, witness->p, witness->n - 1});
            const auto right = brute_force_p_q_dipoles({witness->n, witness->p_prime, witness->n - 1});
            report.expect(lookup(left.faces, witness->face_class) == witness->count_p &&
                              lookup(right.faces, witness->face_class) == witness->count_p_prime,
                          "witness counts match brute force");
            report.expect(left.genus == right.genus, "witness genus histograms agree");
        }
    }
    return report;
}

SuiteReport verify_decompositions(int n_max, int max_brute_n) {
    SuiteReport report{"decompositions", 0, {}};
    for (int n = 2; n <= n_max; ++n) {
        const auto table = brute_decomposition_table(n, max_brute_n);
        const auto classes = tagged_classes_of(n);
        const TaggedClass full(Partition({n}), n);
        for (const auto& a : classes) {
            Integer row_total = 0;
            for (const auto& b : classes) {
                const std::string label = "n=" + nstr(n) + " " + a.to_string() + " x " + b.to_string();
                auto it = table.find({a, b});
                const Integer brute = it == table.end() ? Integer(0) : it->second;
                row_total += brute;
                guarded(report, label, [&] {
                    const Rational v = decomposition_count({a, b});
                    report.expect(v == Rational(brute), label + ": formula " + v.to_string() + " vs brute " +
                                                            brute.get_str());
                    report.expect(v == decomposition_count({b, a}), label + ": symmetry");
                    if (n <= 6) {
                        report.expect(v == connection_coefficient(a, b, full), label + ": connection coefficient");
                    }
                });
            }
            report.expect(row_total == tagged_class_size(a), "n=" + nstr(n) + " row total for " + a.to_string());
        }
    }
    return report;
}

SuiteReport verify_identities(const IdentityRanges& ranges, const BruteForceLimits& limits) {
    SuiteReport report{"identities", 0, {}};

    BruteForceLimits jm_limits = limits;
    jm_limits.group_algebra = std::max(limits.group_algebra, ranges.jm_n_max);
    for (int n = 2; n <= ranges.jm_n_max; ++n) {
        GroupAlgebraElement product = GroupAlgebraElement::identity(n);
        for (int k = 2; k <= n - 1; ++k) {
            product = multiply_checked(product, jm_element(n, k), jm_limits);
        }
        const TaggedClass cycle(Partition({n - 1, 1}), 1);
        report.expect(product == GroupAlgebraElement::class_sum(cycle), "n=" + nstr(n) + ": J_2...J_{n-1}");

        // gamma^{mu,j} at K_{(n-1,1),1} as e_{n-2} of the contents of j_-(mu).
        for (const auto& index : tagged_classes_of(n)) {
            const auto tableaux = syt_enumerate(index.shape(), index.tag());
            const auto contents = tableaux.front().content_vector();
            Rational product_of_contents(1);
            for (int k = 2; k <= n - 1; ++k) {
                product_of_contents *= Rational(contents[static_cast<std::size_t>(k - 1)]);
            }
            const Integer lowered = dimension(index.shape().decrement_part(index.tag()));
            const Rational v = Rational(lowered, factorial(static_cast<unsigned>(n - 2))) * product_of_contents;
            report.expect(v == genchar_strahov(index, cycle),
                          "n=" + nstr(n) + ": content evaluation for " + index.to_string());
        }
    }

    for (int n = 1; n <= ranges.content_n_max; ++n) {
        const auto classes = tagged_classes_of(n);
        for (const auto& index : classes) {
            const Integer lowered = dimension(index.shape().decrement_part(index.tag()));
            for (int m = 1; m <= n; ++m) {
                Rational sum(0);
                for (const auto& cls : classes) {
                    if (cls.shape().length() == m) {
                        sum += Rational(tagged_class_size(cls), lowered) * genchar_strahov(index, cls);
                    }
                }
                report.expect(sum == content_poly_sum(index, m),
                              "n=" + nstr(n) + ", m=" + nstr(m) + ": weighted sum for " + index.to_string());
            }
            const Polynomial content = content_polynomial(index.shape());
            if (auto k = index.shape().hook_leg()) {
                const Polynomial expected =
                    Polynomial::binomial(n - *k - 1, n) * Rational(factorial(static_cast<unsigned>(n)));
                report.expect(content == expected, "content polynomial of hook " + index.shape().to_string());
            }
            if (auto k = index.shape().near_hook_index()) {
                const Polynomial expected = Polynomial::monomial(Rational(1), 1) *
                                            Polynomial::binomial(n - *k - 2, n - 1) *
                                            Rational(factorial(static_cast<unsigned>(n - 1)));
                report.expect(content == expected, "content polynomial of near-hook " + index.shape().to_string());
            }
        }
    }

    const Polynomial t = Polynomial::monomial(Rational(1), 1);
    for (int n = 2; n <= ranges.binomial_n_max; ++n) {
        for (int k = 0; k <= n - 2; ++k) {
            const Polynomial lhs = t * Polynomial::binomial(n - k - 2, n - 1);
            const Polynomial rhs = Polynomial::binomial(n - k - 1, n) * Rational(n) -
                                   Polynomial::binomial(n - k - 2, n - 1) * Rational(n - k - 1);
            report.expect(lhs == rhs, "binomial identity n=" + nstr(n) + ", k=" + nstr(k));
        }
    }

    for (int n = 2; n <= ranges.boundary_n_max; ++n) {
        for (const auto family : {TwoPartFamily::HookRow, TwoPartFamily::HookColumn, TwoPartFamily::NearHook}) {
            const int lo = family == TwoPartFamily::HookRow ? 0 : 1;
            const int hi = family == TwoPartFamily::HookRow ? n - 2 : family == TwoPartFamily::HookColumn ? n - 1 : n - 3;
            for (int k = lo; k <= hi; ++k) {
                for (int p = family == TwoPartFamily::NearHook ? 2 : 1; p <= n - 1; ++p) {
                    const auto values = genchar_two_part_branches(family, n, k, p);
                    if (values.size() > 1) {
                        report.expect(std::all_of(values.begin(), values.end(),
                                                  [&](const Rational& v) { return v == values.front(); }),
                                      "two-part table boundary n=" + nstr(n) + ", k=" + nstr(k) + ", p=" + nstr(p));
                    }
                }
            }
        }
        if (n >= 4 && n % 2 == 0) {
            const int p = n / 2;
            const Polynomial first = genus_series_branch(n, p, 1);
            const Polynomial second = genus_series_branch(n, p, 2);
            report.expect(first == second, "D_{" + nstr(n) + "," + nstr(p) + "} branches at p = n/2: " +
                                                first.to_string() + " vs " + second.to_string());
        }
    }
    return report;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"genchar",  "idempotents",    "connection", "dipoles",
                                                "symmetry", "decompositions", "identities"};
    return names;
}

std::vector<SuiteReport> run_suite(const std::string& name, int n_max, int max_brute_n, int jobs) {
    const auto& names = suite_names();
    if (name != "all" && std::find(names.begin(), names.end(), name) == names.end()) {
        throw ContractViolation("unknown suite '" + name + "'");
    }
    auto brute_guard = [&](int n) {
        if (n > max_brute_n) {
            throw ResourceLimitExceeded("suite needs brute force up to n = " + std::to_string(n) +
                                        ", above --max-brute-n " + std::to_string(max_brute_n));
        }
    };
    BruteForceLimits limits;
    limits.basis_products = std::min(limits.basis_products, max_brute_n);
    limits.group_algebra = std::min(limits.group_algebra, max_brute_n);

    std::vector<SuiteReport> out;
    const bool all = name == "all";
    if (all || name == "genchar") {
        brute_guard(n_max);
        out.push_back(verify_genchar(n_max));
    }
    if (all || name == "idempotents") {
        // Full products of idempotents grow as (n!)^2 per pair.
        const int n = std::min(n_max, 5);
        brute_guard(n);
        out.push_back(verify_idempotents(n, limits));
    }
    if (all || name == "connection") {
        brute_guard(n_max);
        limits.basis_products = std::max(limits.basis_products, n_max);
        out.push_back(verify_connection(n_max, limits, jobs));
    }
    if (all || name == "dipoles") {
        out.push_back(verify_dipoles(4, n_max, max_brute_n, jobs));
    }
    if (all || name == "symmetry") {
        brute_guard(std::min(n_max, 4));
        out.push_back(verify_symmetry(n_max, n_max));
    }
    if (all || name == "decompositions") {
        out.push_back(verify_decompositions(n_max, max_brute_n));
    }
    if (all || name == "identities") {
        brute_guard(n_max);
        IdentityRanges ranges{n_max, n_max, n_max, n_max};
        BruteForceLimits id_limits = limits;
        id_limits.group_algebra = std::max(limits.group_algebra, n_max);
        out.push_back(verify_identities(ranges, id_limits));
    }
    return out;
}

}  // namespace nearcentral
