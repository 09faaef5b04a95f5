#pragma once

#include <memory>
#include <vector>

#include "nearcentral/partition.hpp"
#include "nearcentral/permutation.hpp"
#include "nearcentral/rational.hpp"
#include "nearcentral/tableau.hpp"

namespace nearcentral {

/// Dense square matrix of rationals, row-major.
class SeminormalMatrix {
public:
    explicit SeminormalMatrix(std::size_t dim);
    static SeminormalMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    Rational& at(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
    const Rational& at(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
    Rational trace() const;

    friend SeminormalMatrix operator*(const SeminormalMatrix& a, const SeminormalMatrix& b);
    friend bool operator==(const SeminormalMatrix&, const SeminormalMatrix&) = default;

private:
    std::size_t dim_;
    std::vector<Rational> entries_;
};

/// Young's seminormal form of the irreducible representation indexed by a
/// shape, with basis syt_enumerate(shape) in that order.
///
/// For s_k = (k, k+1) and a basis tableau T with axial distance
/// d = c_T(k+1) - c_T(k):
///   R(s_k) v_T = (1/d) v_T + a v_{s_k T},
/// where a = 1 if k lies in a higher row than k+1 in T and a = 1 - 1/d^2
/// otherwise; the second term is present only when s_k T is standard.
class SeminormalRepresentation {
public:
    explicit SeminormalRepresentation(const Partition& shape);

    /// Shared, lazily built instance; the cache never changes results.
    static std::shared_ptr<const SeminormalRepresentation> of(const Partition& shape);

    const Partition& shape() const { return shape_; }
    const std::vector<StandardYoungTableau>& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }
    /// Position of a tableau in the basis.
    std::size_t index_of(const StandardYoungTableau& t) const;

    /// R(pi), built from the bubble-sort word of pi.
    SeminormalMatrix matrix(const Permutation& pi) const;

private:
    struct GeneratorColumn {
        Rational diagonal;
        std::ptrdiff_t partner = -1;  // index of s_k T, or -1
        Rational off_diagonal;
    };

    // Right-multiplies m by R(s_k) in place.
    void apply_generator(SeminormalMatrix& m, int k) const;

    Partition shape_;
    std::vector<StandardYoungTableau> basis_;
    // generators_[k-1][t] describes column t of R(s_k).
    std::vector<std::vector<GeneratorColumn>> generators_;
};

/// R(pi) for the irreducible representation indexed by lambda.
SeminormalMatrix seminormal_rep(const Partition& lambda, const Permutation& pi);

}  // namespace nearcentral
