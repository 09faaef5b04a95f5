#pragma once

#include <utility>
#include <vector>

#include "nearcentral/partition.hpp"

namespace nearcentral {

/// The skew diagram outer / inner. Cells are (row, column), 0-based, listed
/// row by row.
class SkewShape {
public:
    using Cell = std::pair<int, int>;

    /// Throws unless inner is contained in outer.
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    const std::vector<Cell>& cells() const { return cells_; }
    bool contains_cell(int row, int col) const;

    /// No 2x2 block of cells.
    bool is_broken_border_strip() const;
    /// Sum over edge-connected components of (max row - min row). Cells that
    /// only touch at a corner are in different components.
    int height() const;
    /// Cells with a cell directly below and a cell directly to the right.
    std::vector<Cell> sharp_corners() const;
    /// Cells with no cell below and none to the right.
    std::vector<Cell> dull_boxes() const;

    static int content(const Cell& cell) { return cell.second - cell.first; }

private:
    Partition outer_;
    Partition inner_;
    std::vector<Cell> cells_;
};

}  // namespace nearcentral
