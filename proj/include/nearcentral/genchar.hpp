#pragma once

#include <memory>
#include <vector>

#include "nearcentral/partition.hpp"
#include "nearcentral/permutation.hpp"
#include "nearcentral/polynomial.hpp"
#include "nearcentral/rational.hpp"

namespace nearcentral {

// Generalized characters gamma^{lambda,i}_{mu,j}. Throughout, the first
// TaggedClass argument (lambda,i) indexes the idempotent Gamma^{lambda,i} and
// the second (mu,j) is the class at which it is evaluated.

/// Which hook idempotent: ((n-k,1^k), n-k) or ((n-k,1^k), 1).
enum class HookTag { Row, Column };

/// Index families of the two-part evaluations.
enum class TwoPartFamily {
    HookRow,     // ((n-k,1^k), n-k), 0 <= k <= n-2
    HookColumn,  // ((n-k,1^k), 1),   1 <= k <= n-1
    NearHook,    // ((n-k-1,2,1^{k-1}), 2), 1 <= k <= n-3
};

/// The idempotent index (lambda,i) of a family member.
TaggedClass two_part_index(TwoPartFamily family, int n, int k);

/// Oracle: sum over T in SYT_{lambda,i} of the diagonal entry R(pi)_{TT} of
/// the seminormal representation, at the given permutation.
Rational genchar_oracle(const TaggedClass& index, const Permutation& pi);
/// Oracle at class_representative(cls).
Rational genchar_oracle(const TaggedClass& index, const TaggedClass& cls);

/// phi_{lambda/nu, i} of Strahov's rule: zero unless lambda/nu is a broken
/// border strip, otherwise
///   (-1)^height * prod_{sharp s} (c - c(s)) / prod_{dull d != tagged cell} (c - c(d)),
/// where c is the content of the tagged cell (end of the lowest row of length i).
Rational strahov_weight(const Partition& lambda, const Partition& nu, int tag);

/// Strahov's Murnaghan-Nakayama rule:
///   sum over nu |- n-j, nu inside i_-(lambda), of phi_{lambda/nu,i} chi^nu_{mu \ j}.
Rational genchar_strahov(const TaggedClass& index, const TaggedClass& cls);

/// gamma^{mu,j}_{(n-1,1),1} by shape pattern matching. n >= 2.
Rational genchar_at_K_n11(const TaggedClass& cls);

/// gamma^{mu,j}_{(n),n} by shape pattern matching.
Rational genchar_at_full_cycle(const TaggedClass& cls);

/// R_{n,j}(x) = ((n-1) + n x + (-x)^j) / (1 + x), divided exactly.
Polynomial row_tag_series(int n, int j);
/// S_{n,j}(x) = (-1)^{j-1} ((-1)^j x + n x^j + (n-1) x^{j+1}) / (1 + x).
Polynomial column_tag_series(int n, int j);

/// Hook-series evaluation
///   gamma^{hook,tag}_{mu,j} = [x^k] F_{n,j}(x) (1+x)^{-1} H_{mu \ j}(x) / (n-1),
/// with F = R for the row tag and F = S for the column tag. The (1+x)^{-1}
/// factor turns H into the generating series of hook characters of mu \ j.
Rational genchar_hook_series(int n, int k, HookTag which, const TaggedClass& cls);

/// gamma^{family(n,k)}_{(p,n-p),p} from the case tables. Where both the
/// k <= ... and k >= ... tables apply, both are evaluated and must agree.
Rational genchar_two_part(TwoPartFamily family, int n, int k, int p);

/// All values produced by the two-part case tables that apply to (n,k,p);
/// one value normally, two on a table boundary.
std::vector<Rational> genchar_two_part_branches(TwoPartFamily family, int n, int k, int p);

/// prod over the cells of rho of (t + content).
Polynomial content_polynomial(const Partition& rho);

/// [t^m] content_polynomial(rho), for a tagged index (rho, l).
Rational content_poly_sum(const TaggedClass& index, int m);

/// gamma^{rho,l}_{mu,j} for every pair of tagged classes of one n, via
/// Strahov's rule. Rows and columns follow tagged_classes_of(n).
class GencharTable {
public:
    explicit GencharTable(int n);
    /// Shared, lazily built table.
    static std::shared_ptr<const GencharTable> of(int n);

    int n() const { return n_; }
    const std::vector<TaggedClass>& classes() const { return classes_; }
    std::size_t index_of(const TaggedClass& c) const;
    const Rational& value(const TaggedClass& index, const TaggedClass& cls) const;
    const Rational& value(std::size_t index_row, std::size_t cls_col) const {
        return values_[index_row * classes_.size() + cls_col];
    }

private:
    int n_;
    std::vector<TaggedClass> classes_;
    std::vector<Rational> values_;
};

}  // namespace nearcentral
