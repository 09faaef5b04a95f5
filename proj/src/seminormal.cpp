#include "nearcentral/seminormal.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "nearcentral/errors.hpp"

namespace nearcentral {

SeminormalMatrix::SeminormalMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

SeminormalMatrix SeminormalMatrix::identity(std::size_t dim) {
    SeminormalMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m.at(i, i) = 1;
    }
    return m;
}

Rational SeminormalMatrix::trace() const {
    Rational t(0);
    for (std::size_t i = 0; i < dim_; ++i) {
        t += at(i, i);
    }
    return t;
}

SeminormalMatrix operator*(const SeminormalMatrix& a, const SeminormalMatrix& b) {
    if (a.dim_ != b.dim_) {
        throw ContractViolation("SeminormalMatrix: dimension mismatch");
    }
    SeminormalMatrix out(a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i) {
        for (std::size_t l = 0; l < a.dim_; ++l) {
            const Rational& x = a.at(i, l);
            if (x.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < a.dim_; ++j) {
                out.at(i, j) += x * b.at(l, j);
            }
        }
    }
    return out;
}

SeminormalRepresentation::SeminormalRepresentation(const Partition& shape)
    : shape_(shape), basis_(syt_enumerate(shape)) {
    const int n = shape.size();
    for (int k = 1; k < n; ++k) {
        std::vector<GeneratorColumn> columns(basis_.size());
        for (std::size_t t = 0; t < basis_.size(); ++t) {
            const auto& tab = basis_[t];
            const int d = tab.content(k + 1) - tab.content(k);
            auto& col = columns[t];
            col.diagonal = Rational(1, d);
            if (auto swapped = tab.swap_adjacent(k)) {
                col.partner = static_cast<std::ptrdiff_t>(index_of(*swapped));
                const bool k_above = tab.position(k).first < tab.position(k + 1).first;
                col.off_diagonal = k_above ? Rational(1) : Rational(1) - Rational(1, d * d);
            }
        }
        generators_.push_back(std::move(columns));
    }
}

std::shared_ptr<const SeminormalRepresentation> SeminormalRepresentation::of(const Partition& shape) {
    static std::mutex mutex;
    static std::map<Partition, std::shared_ptr<const SeminormalRepresentation>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(shape); it != cache.end()) {
            return it->second;
        }
    }
    auto rep = std::make_shared<const SeminormalRepresentation>(shape);
    std::lock_guard lock(mutex);
    return cache.emplace(shape, std::move(rep)).first->second;
}

std::size_t SeminormalRepresentation::index_of(const StandardYoungTableau& t) const {
    auto it = std::find(basis_.begin(), basis_.end(), t);
    if (it == basis_.end()) {
        throw ContractViolation("SeminormalRepresentation: tableau not in basis");
    }
    return static_cast<std::size_t>(it - basis_.begin());
}

void SeminormalRepresentation::apply_generator(SeminormalMatrix& m, int k) const {
    const auto& columns = generators_[static_cast<std::size_t>(k - 1)];
    const std::size_t dim = m.dim();
    SeminormalMatrix out(dim);
    for (std::size_t t = 0; t < dim; ++t) {
        const auto& col = columns[t];
        for (std::size_t i = 0; i < dim; ++i) {
            Rational v = m.at(i, t) * col.diagonal;
            if (col.partner >= 0) {
                v += m.at(i, static_cast<std::size_t>(col.partner)) * col.off_diagonal;
            }
            out.at(i, t) = std::move(v);
        }
    }
    m = std::move(out);
}

SeminormalMatrix SeminormalRepresentation::matrix(const Permutation& pi) const {
    if (pi.n() != shape_.size()) {
        throw ContractViolation("seminormal_rep: permutation degree does not match the shape");
    }
    SeminormalMatrix m = SeminormalMatrix::identity(dim());
    for (int k : pi.adjacent_word()) {
        apply_generator(m, k);
    }
    return m;
}

SeminormalMatrix seminormal_rep(const Partition& lambda, const Permutation& pi) {
    return SeminormalRepresentation::of(lambda)->matrix(pi);
}

}  // namespace nearcentral
