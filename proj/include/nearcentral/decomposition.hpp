#pragma once

#include <map>
#include <utility>

#include "nearcentral/partition.hpp"
#include "nearcentral/rational.hpp"

namespace nearcentral {

/// Factorizations pi_1 pi_2 = C of the full cycle C = (1 2 ... n) with
/// pi_1 in C_{lambda,i} and pi_2 in C_{mu,j}.
struct FactorizationQuery {
    TaggedClass left;
    TaggedClass right;

    int n() const { return left.n(); }
    /// Throws ContractViolation if the classes are over different n.
    void validate() const;
};

/// Closed form
///   |C_a||C_b| / ((n-1)^2 n!) * sum_{k=1}^{n-1} (-1)^{k-1} / binom(n-2,k-1)
///     * ([x^{k-1}] R_{n,i} H'_{lambda\i} [y^{k-1}] R_{n,j} H'_{mu\j}
///        - [x^k] S_{n,i} H'_{lambda\i} [y^k] S_{n,j} H'_{mu\j}),
/// where H' = H (1+x)^{-1} as a power series. Needs n >= 2; throws
/// IdentityFailure if the value is not a non-negative integer.
Rational decomposition_count(const FactorizationQuery& query);

/// Exhaustive count over pi_1 in C_{lambda,i}. ResourceLimitExceeded past max_n.
Integer brute_decompositions(const FactorizationQuery& query, int max_n = 8);

/// Brute-force counts for every ordered pair of classes of n, zeros omitted.
std::map<std::pair<TaggedClass, TaggedClass>, Integer> brute_decomposition_table(int n, int max_n = 8);

}  // namespace nearcentral
