#include "nearcentral/tableau.hpp"

#include "nearcentral/errors.hpp"

namespace nearcentral {

namespace {

std::vector<int> row_lengths(const std::vector<std::vector<int>>& rows) {
    std::vector<int> lengths;
    for (const auto& r : rows) {
        lengths.push_back(static_cast<int>(r.size()));
    }
    return lengths;
}

}  // namespace

StandardYoungTableau::StandardYoungTableau(std::vector<std::vector<int>> rows)
    : rows_(std::move(rows)), shape_(row_lengths(rows_)) {
    for (std::size_t r = 1; r < rows_.size(); ++r) {
        if (rows_[r].size() > rows_[r - 1].size() || rows_[r].empty()) {
            throw ContractViolation("StandardYoungTableau: rows do not form a partition shape");
        }
    }
    const int n = shape_.size();
    positions_.assign(static_cast<std::size_t>(n), {-1, -1});
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            const int v = rows_[r][c];
            if (v < 1 || v > n || positions_[static_cast<std::size_t>(v - 1)].first != -1) {
                throw ContractViolation("StandardYoungTableau: entries are not 1..n");
            }
            positions_[static_cast<std::size_t>(v - 1)] = {static_cast<int>(r), static_cast<int>(c)};
            if (c > 0 && rows_[r][c - 1] >= v) {
                throw ContractViolation("StandardYoungTableau: rows must increase");
            }
            if (r > 0 && rows_[r - 1][c] >= v) {
                throw ContractViolation("StandardYoungTableau: columns must increase");
            }
        }
    }
}

int StandardYoungTableau::content(int k) const {
    const auto [r, c] = position(k);
    return c - r;
}

std::vector<int> StandardYoungTableau::content_vector() const {
    std::vector<int> out;
    for (int k = 1; k <= n(); ++k) {
        out.push_back(content(k));
    }
    return out;
}

std::optional<StandardYoungTableau> StandardYoungTableau::swap_adjacent(int k) const {
    const auto [r1, c1] = position(k);
    const auto [r2, c2] = position(k + 1);
    if (r1 == r2 || c1 == c2) {
        return std::nullopt;
    }
    auto rows = rows_;
    rows[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c1)] = k + 1;
    rows[static_cast<std::size_t>(r2)][static_cast<std::size_t>(c2)] = k;
    return StandardYoungTableau(std::move(rows));
}

std::string StandardYoungTableau::to_string() const {
    std::string out;
    for (const auto& row : rows_) {
        out += "[";
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) {
                out += " ";
            }
            out += std::to_string(row[c]);
        }
        out += "]";
    }
    return out;
}

namespace {

void fill(const Partition& shape, int next, std::vector<std::vector<int>>& rows,
          std::vector<StandardYoungTableau>& out) {
    if (next > shape.size()) {
        out.emplace_back(rows);
        return;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const std::size_t len = rows[r].size();
        if (static_cast<int>(len) >= shape[r]) {
            continue;
        }
        if (r > 0 && rows[r - 1].size() <= len) {
            continue;
        }
        rows[r].push_back(next);
        fill(shape, next + 1, rows, out);
        rows[r].pop_back();
    }
}

}  // namespace

std::vector<StandardYoungTableau> syt_enumerate(const Partition& shape, std::optional<int> tag) {
    if (tag && !shape.has_part(*tag)) {
        throw ContractViolation("syt_enumerate: tag is not a part of the shape");
    }
    std::vector<StandardYoungTableau> all;
    if (shape.empty()) {
        return all;
    }
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.length()));
    fill(shape, 1, rows, all);
    if (!tag) {
        return all;
    }
    const int n = shape.size();
    std::vector<StandardYoungTableau> out;
    for (auto& t : all) {
        const auto [r, c] = t.position(n);
        if (shape[static_cast<std::size_t>(r)] == *tag && c == *tag - 1) {
            out.push_back(std::move(t));
        }
    }
    return out;
}

}  // namespace nearcentral
