#pragma once

#include <map>
#include <optional>
#include <vector>

#include "nearcentral/partition.hpp"
#include "nearcentral/permutation.hpp"
#include "nearcentral/polynomial.hpp"
#include "nearcentral/rational.hpp"

namespace nearcentral {

/// A (p,q,n)-dipole family: n edges, root jump p, non-root jump q.
struct DipoleQuery {
    int n = 0;
    int p = 0;
    int q = 0;

    /// Throws ContractViolation unless 1 <= p, q <= n-1.
    void validate() const;
};

struct FaceTypeCount {
    TaggedClass face_class;
    Integer count;
};

/// Number of dipoles per genus. Absent genera have count zero.
struct GenusHistogram {
    int n = 0;
    std::map<int, Integer> counts;

    Integer total() const;
    Integer at(int genus) const;
    friend bool operator==(const GenusHistogram&, const GenusHistogram&) = default;
};

struct DipoleCensus {
    std::map<TaggedClass, Integer> faces;
    GenusHistogram genus;

    std::vector<FaceTypeCount> face_counts() const;
};

/// Genus of a face permutation with cycle type lambda: (n - m(lambda)) / 2.
int genus_of(const TaggedClass& face_class);

/// C_p = (n, 1, ..., p-1, n-1, p, ..., n-2), the full cycle with C_p^p(n) = n-1.
Permutation canonical_root_cycle(int n, int p);

/// Brute-force census of (p,q,n)-dipoles by face class.
///
/// For q = n-1 the root cycle is fixed to C_p and sigma ranges over the
/// (n-2)! full cycles with sigma(n-1) = n; faces are pi = sigma C_p. These are
/// unlabelled counts with total (n-2)!.
///
/// For other q both vertex cycles vary: sigma_1 over full cycles with
/// sigma_1^q(n) = n-1 and sigma_2 over full cycles with sigma_2^p(n) = n-1,
/// with faces pi = sigma_1 sigma_2. These are labelled counts with total
/// ((n-2)!)^2.
///
/// Throws ResourceLimitExceeded when n > max_n.
DipoleCensus brute_force_p_q_dipoles(const DipoleQuery& query, int max_n = 9, int jobs = 1);

/// Unlabelled (p,n-1,n)-dipole count with face class (lambda,i), from
/// generalized characters:
///   d = |C_{lambda,i}| (n-2)! / n! * (A + B + C).
/// Throws IdentityFailure if the value is not a non-negative integer.
Rational dipole_count_formula(const TaggedClass& face_class, int p);

/// dipole_count_formula for every tagged class of n, zeros omitted.
std::map<TaggedClass, Integer> dipole_face_table(int n, int p, int jobs = 1);

/// The two displayed expressions for D_{n,p}(t). Branch 1 needs
/// 2 <= p <= n/2, branch 2 needs n/2 <= p <= n-1.
Polynomial genus_series_branch(int n, int p, int branch);

/// D_{n,p}(t): branch 1 for p <= n/2, branch 2 above. n >= 4, 2 <= p <= n-1.
Polynomial genus_series(int n, int p);

/// Genus counts (n-2)! [t^{n-2g}] D_{n,p}(t).
GenusHistogram genus_counts(int n, int p);

struct SymmetryVerdict {
    int p = 0;
    int p_prime = 0;
    bool equal = false;
};

/// Compares D_{n,p} with D_{n,n+1-p} for 2 <= p <= n-1.
std::vector<SymmetryVerdict> symmetry_check(int n);

/// A face class whose counts differ between p and n+1-p although the genus
/// polynomials agree.
struct AsymmetryWitness {
    int n = 0;
    int p = 0;
    int p_prime = 0;
    TaggedClass face_class;
    Integer count_p;
    Integer count_p_prime;
};

/// Searches n' = 4..n and p for a face class with unequal counts.
std::optional<AsymmetryWitness> find_face_type_asymmetry(int n);

}  // namespace nearcentral
