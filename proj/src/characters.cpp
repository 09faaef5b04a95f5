#include "nearcentral/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "nearcentral/errors.hpp"
#include "nearcentral/polynomial.hpp"

namespace nearcentral {

Integer hook_character(int n, int k, const Partition& mu) {
    if (mu.size() != n) {
        throw ContractViolation("hook_character: mu must be a partition of n");
    }
    if (k < 0 || k > n - 1) {
        throw ContractViolation("hook_character: need 0 <= k <= n-1");
    }
    return hook_product(mu).times_inverse_one_plus_x(k).coeff(k).to_integer();
}

Integer char_full_cycle(const Partition& lambda) {
    if (auto k = lambda.hook_leg()) {
        return sign_power(*k);
    }
    return 0;
}

namespace {

// Beta-set recursion: removing an r-rim hook from lambda corresponds to
// replacing a beta-number b by b - r (when b - r >= 0 is not already
// present); the sign is (-1)^(number of beta-numbers strictly between).
Integer mn_recursive(std::vector<int> beta, const std::vector<int>& mu, std::size_t next,
                     std::map<std::pair<std::vector<int>, std::size_t>, Integer>& memo) {
    if (next == mu.size()) {
        // All cells removed: beta must be the staircase m-1, ..., 0.
        for (std::size_t i = 0; i < beta.size(); ++i) {
            if (beta[i] != static_cast<int>(beta.size() - 1 - i)) {
                return 0;
            }
        }
        return 1;
    }
    auto key = std::make_pair(beta, next);
    if (auto it = memo.find(key); it != memo.end()) {
        return it->second;
    }
    const int r = mu[next];
    Integer total = 0;
    for (std::size_t idx = 0; idx < beta.size(); ++idx) {
        const int b = beta[idx];
        const int nb = b - r;
        if (nb < 0 || std::find(beta.begin(), beta.end(), nb) != beta.end()) {
            continue;
        }
        int between = 0;
        for (int x : beta) {
            if (x > nb && x < b) {
                ++between;
            }
        }
        std::vector<int> nbeta = beta;
        nbeta[idx] = nb;
        std::sort(nbeta.begin(), nbeta.end(), std::greater<>());
        const Integer sub = mn_recursive(std::move(nbeta), mu, next + 1, memo);
        total += (between % 2 == 0) ? sub : Integer(-sub);
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

Integer mn_character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) {
        throw ContractViolation("mn_character: lambda and mu must have the same size");
    }
    static std::mutex mutex;
    static std::map<std::pair<Partition, Partition>, Integer> cache;
    const auto key = std::make_pair(lambda, mu);
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) {
            return it->second;
        }
    }
    const int m = lambda.length();
    std::vector<int> beta(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + m - 1 - i;
    }
    std::map<std::pair<std::vector<int>, std::size_t>, Integer> memo;
    Integer value = mn_recursive(std::move(beta), mu.parts(), 0, memo);
    std::lock_guard lock(mutex);
    cache.emplace(key, value);
    return value;
}

}  // namespace nearcentral
