#pragma once

#include "wreath_shapes/numeric.hpp"

#include <string>
#include <vector>

namespace wreath {

// A Young diagram stored as its weakly decreasing row lengths.
// Immutable after construction; all derived data (m_j, hooks, corners)
// is computed on demand.
class YoungDiagram {
  public:
    YoungDiagram() = default;
    explicit YoungDiagram(std::vector<int> parts);

    static YoungDiagram empty() { return YoungDiagram(); }

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    // row length, 1-based; 0 beyond the last row
    int part(int i) const {
        return (i >= 1 && i <= rows()) ? parts_[i - 1] : 0;
    }
    bool is_empty() const { return parts_.empty(); }

    YoungDiagram conjugate() const;
    // number of parts equal to j
    int m(int j) const;
    // column length, 1-based
    int col_length(int j) const;

    YoungDiagram with_added_box(int row) const;    // row may be rows()+1
    YoungDiagram with_removed_box(int row) const;

    bool operator==(const YoungDiagram& o) const { return parts_ == o.parts_; }
    auto operator<=>(const YoungDiagram& o) const { return parts_ <=> o.parts_; }

    std::string to_string() const;  // e.g. "(3,1,1)" or "()"

  private:
    std::vector<int> parts_;
    int size_ = 0;
};

// A corner cell (row, col) with content col - row.
struct Corner {
    int row;
    int col;
    int content;
};

// Rectangular profile: interlacing valley/peak x-coordinates (exact).
struct RectangularProfile {
    std::vector<Rational> valleys;  // x_1 < y_1 < x_2 < ... < y_{r-1} < x_r
    std::vector<Rational> peaks;
};

// Same shape after an irrational spatial rescale.
struct RectangularProfileF {
    std::vector<double> valleys;
    std::vector<double> peaks;
};

struct FrobeniusCoordinates {
    std::vector<int> arms;  // b_i, strictly decreasing, >= 0
    std::vector<int> legs;  // a_i, strictly decreasing, >= 0
    int diagonal() const { return static_cast<int>(arms.size()); }
};

// Cells whose addition keeps the diagram valid, top to bottom.
// Contents come out strictly decreasing in row order, so they are
// returned sorted increasing by content.
std::vector<Corner> addable_cells(const YoungDiagram& d);
std::vector<Corner> removable_cells(const YoungDiagram& d);

FrobeniusCoordinates frobenius_coordinates(const YoungDiagram& d);

// Number of standard Young tableaux of the shape (hook length formula).
BigInt dim_sym(const YoungDiagram& d);

// dim(d minus corner at `row`) / dim(d): product of h/(h-1) over the
// cells sharing the corner's row or column. Avoids the full hook product,
// which matters in the n ~ 400 sampling loops.
Rational dim_ratio_removed(const YoungDiagram& d, int row);
// dim(d plus box at `row`) / dim(d): |d|+1 times the h/(h+1) product.
Rational dim_ratio_added(const YoungDiagram& d, int row);

BigInt sum_of_contents(const YoungDiagram& d);

// Sigma_2 = sum_i b_i(b_i+1) - a_i(a_i+1); cross-checked against twice the
// content sum (throws logic_error if the two routes ever disagree).
BigInt sigma2(const YoungDiagram& d);

// Valleys = contents of addable cells, peaks = contents of removable cells.
RectangularProfile profile(const YoungDiagram& d);

RectangularProfile rescale_profile(const RectangularProfile& p, const Rational& factor);
RectangularProfileF rescale_profile(const RectangularProfile& p, double factor);

// All diagrams of size n, lexicographically decreasing parts-order.
std::vector<YoungDiagram> partitions_of(int n);

}  // namespace wreath
