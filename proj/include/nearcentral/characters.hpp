#pragma once

#include "nearcentral/partition.hpp"
#include "nearcentral/rational.hpp"

namespace nearcentral {

/// chi^{(n-k,1^k)}_mu = [y^k] (1+y)^{-1} H_mu(y).
Integer hook_character(int n, int k, const Partition& mu);

/// chi^lambda at a full n-cycle: (-1)^k for the hook (n-k,1^k), else 0.
Integer char_full_cycle(const Partition& lambda);

/// Irreducible character chi^lambda_mu by the classical Murnaghan-Nakayama
/// recursion (rim-hook removal on beta-numbers, largest part of mu first).
/// Both partitions must have the same size; chi^{()}_{()} = 1.
Integer mn_character(const Partition& lambda, const Partition& mu);

}  // namespace nearcentral
