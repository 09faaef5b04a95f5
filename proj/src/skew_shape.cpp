#include "nearcentral/skew_shape.hpp"

#include <algorithm>

#include "nearcentral/errors.hpp"

namespace nearcentral {

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_)) {
        throw ContractViolation("SkewShape: " + inner_.to_string() + " is not contained in " +
                                outer_.to_string());
    }
    for (int r = 0; r < outer_.length(); ++r) {
        const int start = r < inner_.length() ? inner_[static_cast<std::size_t>(r)] : 0;
        for (int c = start; c < outer_[static_cast<std::size_t>(r)]; ++c) {
            cells_.emplace_back(r, c);
        }
    }
}

bool SkewShape::contains_cell(int row, int col) const {
    if (row < 0 || col < 0 || row >= outer_.length()) {
        return false;
    }
    const int start = row < inner_.length() ? inner_[static_cast<std::size_t>(row)] : 0;
    return col >= start && col < outer_[static_cast<std::size_t>(row)];
}

bool SkewShape::is_broken_border_strip() const {
    for (const auto& [r, c] : cells_) {
        if (contains_cell(r + 1, c) && contains_cell(r, c + 1) && contains_cell(r + 1, c + 1)) {
            return false;
        }
    }
    return true;
}

int SkewShape::height() const {
    std::vector<bool> seen(cells_.size(), false);
    auto index_of = [&](int r, int c) -> std::ptrdiff_t {
        auto it = std::find(cells_.begin(), cells_.end(), Cell{r, c});
        return it == cells_.end() ? -1 : it - cells_.begin();
    };
    int total = 0;
    for (std::size_t start = 0; start < cells_.size(); ++start) {
        if (seen[start]) {
            continue;
        }
        int lo = cells_[start].first;
        int hi = lo;
        std::vector<std::size_t> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            const auto [r, c] = cells_[stack.back()];
            stack.pop_back();
            lo = std::min(lo, r);
            hi = std::max(hi, r);
            constexpr int dr[] = {1, -1, 0, 0};
            constexpr int dc[] = {0, 0, 1, -1};
            for (int d = 0; d < 4; ++d) {
                const auto idx = index_of(r + dr[d], c + dc[d]);
                if (idx >= 0 && !seen[static_cast<std::size_t>(idx)]) {
                    seen[static_cast<std::size_t>(idx)] = true;
                    stack.push_back(static_cast<std::size_t>(idx));
                }
            }
        }
        total += hi - lo;
    }
    return total;
}

std::vector<SkewShape::Cell> SkewShape::sharp_corners() const {
    std::vector<Cell> out;
    for (const auto& [r, c] : cells_) {
        if (contains_cell(r + 1, c) && contains_cell(r, c + 1)) {
            out.emplace_back(r, c);
        }
    }
    return out;
}

std::vector<SkewShape::Cell> SkewShape::dull_boxes() const {
    std::vector<Cell> out;
    for (const auto& [r, c] : cells_) {
        if (!contains_cell(r + 1, c) && !contains_cell(r, c + 1)) {
            out.emplace_back(r, c);
        }
    }
    return out;
}

}  // namespace nearcentral
