#include "wreath_shapes/diagrams.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wreath {

YoungDiagram::YoungDiagram(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("YoungDiagram: parts must be >= 1");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("YoungDiagram: parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

YoungDiagram YoungDiagram::conjugate() const {
    std::vector<int> cols;
    if (!parts_.empty()) {
        cols.resize(parts_[0]);
        for (int j = 1; j <= parts_[0]; ++j) cols[j - 1] = col_length(j);
    }
    return YoungDiagram(std::move(cols));
}

int YoungDiagram::m(int j) const {
    int count = 0;
    for (int p : parts_) count += (p == j);
    return count;
}

int YoungDiagram::col_length(int j) const {
    int count = 0;
    for (int p : parts_) {
        if (p >= j) ++count;
        else break;
    }
    return count;
}

YoungDiagram YoungDiagram::with_added_box(int row) const {
    if (row < 1 || row > rows() + 1) throw std::out_of_range("with_added_box: bad row");
    std::vector<int> p = parts_;
    if (row == rows() + 1) p.push_back(1);
    else p[row - 1] += 1;
    return YoungDiagram(std::move(p));
}

YoungDiagram YoungDiagram::with_removed_box(int row) const {
    if (row < 1 || row > rows()) throw std::out_of_range("with_removed_box: bad row");
    std::vector<int> p = parts_;
    p[row - 1] -= 1;
    if (p[row - 1] == 0) p.erase(p.begin() + (row - 1));
    return YoungDiagram(std::move(p));
}

std::string YoungDiagram::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

std::vector<Corner> addable_cells(const YoungDiagram& d) {
    std::vector<Corner> v;
    // cell can be added at row i iff row i is strictly shorter than row i-1
    for (int i = 1; i <= d.rows() + 1; ++i) {
        int len = d.part(i);
        if (i == 1 || len < d.part(i - 1)) {
            int col = len + 1;
            v.push_back({i, col, col - i});
        }
    }
    std::reverse(v.begin(), v.end());  // contents increasing
    return v;
}

std::vector<Corner> removable_cells(const YoungDiagram& d) {
    std::vector<Corner> v;
    for (int i = 1; i <= d.rows(); ++i) {
        if (d.part(i) > d.part(i + 1)) {
            int col = d.part(i);
            v.push_back({i, col, col - i});
        }
    }
    std::reverse(v.begin(), v.end());
    return v;
}

FrobeniusCoordinates frobenius_coordinates(const YoungDiagram& d) {
    FrobeniusCoordinates f;
    YoungDiagram t = d.conjugate();
    for (int i = 1; i <= d.rows(); ++i) {
        if (d.part(i) < i) break;
        f.arms.push_back(d.part(i) - i);
        f.legs.push_back(t.part(i) - i);
    }
    return f;
}

namespace {

int hook_length(const YoungDiagram& d, const YoungDiagram& conj, int i, int j) {
    return d.part(i) - j + conj.part(j) - i + 1;
}

}  // namespace

BigInt dim_sym(const YoungDiagram& d) {
    if (d.is_empty()) return 1;
    YoungDiagram conj = d.conjugate();
    BigInt num = 1;
    BigInt den = 1;
    int cell = 0;
    for (int i = 1; i <= d.rows(); ++i) {
        for (int j = 1; j <= d.part(i); ++j) {
            num *= ++cell;
            den *= hook_length(d, conj, i, j);
        }
    }
    return num / den;
}

Rational dim_ratio_removed(const YoungDiagram& d, int row) {
    int col = d.part(row);
    if (col == 0 || d.part(row + 1) == col)
        throw std::invalid_argument("dim_ratio_removed: not a removable corner");
    YoungDiagram conj = d.conjugate();
    BigInt num = 1, den = BigInt(d.size());
    for (int j = 1; j < col; ++j) {
        int h = hook_length(d, conj, row, j);
        num *= h;
        den *= h - 1;
    }
    for (int i = 1; i < row; ++i) {
        int h = hook_length(d, conj, i, col);
        num *= h;
        den *= h - 1;
    }
    return Rational(num, den);
}

Rational dim_ratio_added(const YoungDiagram& d, int row) {
    int col = d.part(row) + 1;
    if (row > d.rows() + 1 || (row > 1 && d.part(row - 1) < col))
        throw std::invalid_argument("dim_ratio_added: not an addable cell");
    YoungDiagram conj = d.conjugate();
    BigInt num = BigInt(d.size() + 1), den = 1;
    for (int j = 1; j < col; ++j) {
        int h = hook_length(d, conj, row, j);
        num *= h;
        den *= h + 1;
    }
    for (int i = 1; i < row; ++i) {
        int h = hook_length(d, conj, i, col);
        num *= h;
        den *= h + 1;
    }
    return Rational(num, den);
}

BigInt sum_of_contents(const YoungDiagram& d) {
    BigInt s = 0;
    for (int i = 1; i <= d.rows(); ++i) {
        // sum of (j - i) over j = 1..part(i)
        long long p = d.part(i);
        s += p * (p + 1) / 2 - p * static_cast<long long>(i);
    }
    return s;
}

BigInt sigma2(const YoungDiagram& d) {
    FrobeniusCoordinates f = frobenius_coordinates(d);
    BigInt s = 0;
    for (size_t i = 0; i < f.arms.size(); ++i) {
        BigInt b = f.arms[i], a = f.legs[i];
        s += b * (b + 1) - a * (a + 1);
    }
    if (s != 2 * sum_of_contents(d))
        throw std::logic_error("sigma2: Frobenius route disagrees with content sum");
    return s;
}

RectangularProfile profile(const YoungDiagram& d) {
    RectangularProfile p;
    for (const Corner& c : addable_cells(d)) p.valleys.emplace_back(c.content);
    for (const Corner& c : removable_cells(d)) p.peaks.emplace_back(c.content);
    return p;
}

RectangularProfile rescale_profile(const RectangularProfile& p, const Rational& factor) {
    if (factor <= 0) throw std::invalid_argument("rescale_profile: factor must be > 0");
    RectangularProfile q;
    q.valleys.reserve(p.valleys.size());
    q.peaks.reserve(p.peaks.size());
    for (const Rational& x : p.valleys) q.valleys.push_back(x * factor);
    for (const Rational& y : p.peaks) q.peaks.push_back(y * factor);
    return q;
}

RectangularProfileF rescale_profile(const RectangularProfile& p, double factor) {
    if (!(factor > 0)) throw std::invalid_argument("rescale_profile: factor must be > 0");
    RectangularProfileF q;
    for (const Rational& x : p.valleys) q.valleys.push_back(to_double(x) * factor);
    for (const Rational& y : p.peaks) q.peaks.push_back(to_double(y) * factor);
    return q;
}

namespace {

void partitions_rec(int n, int max_part, std::vector<int>& cur,
                    std::vector<YoungDiagram>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<YoungDiagram> partitions_of(int n) {
    std::vector<YoungDiagram> out;
    std::vector<int> cur;
    if (n < 0) return out;
    partitions_rec(n, n == 0 ? 1 : n, cur, out);
    return out;
}

}  // namespace wreath
