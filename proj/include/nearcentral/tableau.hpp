#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nearcentral/partition.hpp"

namespace nearcentral {

/// A standard Young tableau in English notation. Rows and columns are
/// 0-based; the content of a cell is column - row.
class StandardYoungTableau {
public:
    /// rows[r] lists the entries of row r, left to right. Throws unless the
    /// filling is standard.
    explicit StandardYoungTableau(std::vector<std::vector<int>> rows);

    const Partition& shape() const { return shape_; }
    int n() const { return shape_.size(); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    /// (row, column) of entry k, 1 <= k <= n.
    std::pair<int, int> position(int k) const { return positions_[static_cast<std::size_t>(k - 1)]; }
    /// c_T(k).
    int content(int k) const;
    /// (c_T(1), ..., c_T(n)).
    std::vector<int> content_vector() const;

    /// The tableau with k and k+1 exchanged, if it is still standard.
    std::optional<StandardYoungTableau> swap_adjacent(int k) const;

    std::string to_string() const;

    friend bool operator==(const StandardYoungTableau& a, const StandardYoungTableau& b) {
        return a.rows_ == b.rows_;
    }
    friend auto operator<=>(const StandardYoungTableau& a, const StandardYoungTableau& b) {
        return a.rows_ <=> b.rows_;
    }

private:
    std::vector<std::vector<int>> rows_;
    Partition shape_;
    std::vector<std::pair<int, int>> positions_;
};

/// All SYT of the given shape; with a tag, only those in which n ends a row of
/// that length (SYT_{lambda,i}). The order is fixed: entries are placed
/// 1, 2, ..., n and each is tried in rows from top to bottom.
std::vector<StandardYoungTableau> syt_enumerate(const Partition& shape,
                                                std::optional<int> tag = std::nullopt);

}  // namespace nearcentral
