#pragma once

#include "wreath_shapes/wreath_group.hpp"

#include <vector>

namespace wreath {

// sigma with no length-1 rows, together with the derived shapes:
// sigma_x ("remove the first column") and sigma_o (drop the 1-rows of
// sigma_x as well).
struct ReducedShape {
    YoungDiagram sigma;
    YoungDiagram sigma_x;
    YoungDiagram sigma_o;

    explicit ReducedShape(YoungDiagram s);
    int k() const { return sigma.size(); }
    int length() const { return sigma.rows(); }
};

std::vector<ReducedShape> reduced_shapes(int k);  // all of Ybar_k

// Row-color counts n_i^x: counts[x][i-1] rows of length i carry color x,
// for every color including the derived e_T column.
struct Labeling {
    std::vector<std::vector<int>> counts;  // [color][length-1]
    int count(int color, int length) const { return counts[color][length - 1]; }
};

// Labelings satisfying the box constraints sum_{x != 0} n_i^x <= m_i(sigma_x)
// and the color-product constraint sum_x x * (sum_i n_i^x) = y in Z_r.
std::vector<Labeling> star_labelings(const ReducedShape& sigma, int y, const AbelianGroupSpec& T);

// One main term of the expansion of E[J_{n+1}^k (y,(n+1))]: the class and
// its coefficient prefactor * n^{k-l(sigma)} against the normalized
// indicator A_C/|C|.
struct MainTerm {
    ReducedShape sigma;
    Labeling labeling;
    ConjType cls;        // reduced type, tagged at degree n
    BigInt prefactor;    // |NC(sigma)| |T|^{k-l} prod_i multinomial(m_i(sigma_x); (n_i^x)_x)
    int n_power;         // k - l(sigma)

    Rational normalized_coefficient(int n) const;  // on A_C/|C|
    Rational raw_coefficient(int n) const;         // per group element
};

std::vector<MainTerm> main_terms(int k, int y, const AbelianGroupSpec& T, int n);

struct ClassComparison {
    ConjType cls;
    Rational exact_coeff;  // per element, from brute force
    Rational main_coeff;   // per element, from the main terms
    bool in_exact = false;
    bool in_main = false;

    Rational abs_error() const;
    // |exact - main| / |main|; meaningful when in_main
    Rational rel_error() const;
};

struct CompareReport {
    int k, y, n, r;
    std::vector<ClassComparison> rows;  // sorted by class

    // largest relative error over classes carrying a main term
    Rational max_rel_error() const;
    // classes only seen in the brute force (candidates for N_sigma)
    std::vector<ClassComparison> residual_classes() const;
};

CompareReport compare_bruteforce(int k, int y, const AbelianGroupSpec& T, int n,
                                 long long term_budget = kDefaultTermBudget);

}  // namespace wreath
