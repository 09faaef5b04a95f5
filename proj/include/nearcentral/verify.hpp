#pragma once

#include <string>
#include <vector>

#include "nearcentral/z1_algebra.hpp"

namespace nearcentral {

/// Outcome of one verification sweep: how many comparisons ran and a
/// description of each one that failed.
struct SuiteReport {
    std::string name;
    std::size_t checks = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
    void expect(bool ok, const std::string& what);
    void merge(const SuiteReport& other);
};

/// Strahov's rule against the seminormal oracle and every closed form that
/// applies, n = 1..n_max.
SuiteReport verify_genchar(int n_max);

/// Orthogonal idempotents and resolution of the identity, n = 1..n_max.
SuiteReport verify_idempotents(int n_max, const BruteForceLimits& limits = {});

/// Character formula against brute-force structure constants, n = 1..n_max.
SuiteReport verify_connection(int n_max, const BruteForceLimits& limits = {}, int jobs = 1);

/// Per-class formula, D_{n,p} and brute force, n = n_min..n_max.
SuiteReport verify_dipoles(int n_min, int n_max, int max_brute_n, int jobs = 1);

/// D_{n,p} = D_{n,n+1-p} for n = 4..n_max, plus a face-type witness among
/// n <= witness_n_max.
SuiteReport verify_symmetry(int n_max, int witness_n_max);

/// Closed form against brute force for every ordered pair, n = 2..n_max.
SuiteReport verify_decompositions(int n_max, int max_brute_n);

struct IdentityRanges {
    int jm_n_max = 7;
    int content_n_max = 6;
    int binomial_n_max = 12;
    int boundary_n_max = 12;
};

/// JM product, content-polynomial identities, the binomial identity and
/// branch-boundary agreement.
SuiteReport verify_identities(const IdentityRanges& ranges, const BruteForceLimits& limits = {});

/// Suite names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// Runs one named suite (or "all") with every range capped at n_max.
std::vector<SuiteReport> run_suite(const std::string& name, int n_max, int max_brute_n, int jobs = 1);

}  // namespace nearcentral
