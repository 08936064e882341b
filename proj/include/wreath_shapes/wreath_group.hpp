#pragma once

#include "wreath_shapes/diagrams.hpp"
#include "wreath_shapes/numeric.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace wreath {

// T = Z_r, written additively; e_T = 0.
struct AbelianGroupSpec {
    int r = 1;
    explicit AbelianGroupSpec(int r_) : r(r_) {
        if (r < 1) throw std::invalid_argument("AbelianGroupSpec: r must be >= 1");
    }
};

// Element (d, w) of S_m(T): color tuple d in T^m and permutation w of
// {0,...,m-1} (0-based slots). Group law:
//   (d, w)(d', w') = (d + w.d', w w'),   (w.d')_i = d'_{w^{-1}(i)}.
struct WreathElement {
    std::vector<uint8_t> colors;
    std::vector<uint8_t> perm;  // perm[i] = image of slot i

    int degree() const { return static_cast<int>(colors.size()); }
    static WreathElement identity(int m);
    bool is_identity() const;

    auto operator<=>(const WreathElement&) const = default;
    std::string to_string() const;
};

WreathElement wreath_mul(const WreathElement& a, const WreathElement& b, int r);
WreathElement wreath_inv(const WreathElement& a, int r);

// Conjugacy type: one partition per color, stored in reduced form
// (no length-1 rows of color e_T); `degree` records the ambient m.
// The inclusion iota_{n,k} is just re-tagging the degree.
struct ConjType {
    std::vector<YoungDiagram> rho;  // index = color, rho[0] reduced
    int degree = 0;

    int r() const { return static_cast<int>(rho.size()); }
    // total size of the reduced type
    int reduced_size() const;
    int reduced_length() const;
    YoungDiagram padded_identity_part() const;  // rho[0] with 1-rows restored

    ConjType at_degree(int n) const;
    bool is_identity() const { return reduced_size() == 0; }

    auto operator<=>(const ConjType&) const = default;
    std::string to_string() const;
};

ConjType make_conj_type(std::vector<YoungDiagram> per_color, int degree);

// Sparse exact element of the group algebra of S_m(T).
class AlgebraElement {
  public:
    AlgebraElement(int degree, int r) : degree_(degree), r_(r) {}
    static AlgebraElement unit(int degree, int r);

    int degree() const { return degree_; }
    int group_r() const { return r_; }
    const std::map<WreathElement, Rational>& terms() const { return terms_; }
    size_t support_size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const WreathElement& g) const;
    void add_term(const WreathElement& g, const Rational& c);
    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement& scale(const Rational& c);
    bool operator==(const AlgebraElement& o) const {
        return degree_ == o.degree_ && r_ == o.r_ && terms_ == o.terms_;
    }

  private:
    int degree_;
    int r_;
    std::map<WreathElement, Rational> terms_;
};

inline constexpr long long kDefaultTermBudget = 5'000'000;

// Bilinear extension of the group law; throws length_error past the
// expanded-term budget and invalid_argument on degree mismatch.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b,
                        long long term_budget = kDefaultTermBudget);

AlgebraElement conjugate(const AlgebraElement& a, const WreathElement& g);

// Cycle colors are products (sums in Z_r) along each cycle; 1-cycles of
// color e_T are dropped from the stored type.
ConjType conj_type_of(const WreathElement& g, int r);

// |C_rho| = |T|^n n! / prod_x (z_{rho_x} |T|^{l(rho_x)}) over the padded type.
BigInt class_size(const ConjType& rho, int n);

// sum of all elements of the class, coefficient 1 each
AlgebraElement class_indicator(const ConjType& rho, int n);

// J_{n+1}^theta in S_{n+1}(T): n|T| terms, each a colored transposition
// (i, n+1). theta = 0 gives the plain JM element J_{n+1}.
AlgebraElement jm_element(int n, int theta, const AbelianGroupSpec& T);

// keeps terms fixing the last slot with color e_T there, drops the slot
AlgebraElement restrict_E(const AlgebraElement& a);

// natural inclusion S_m(T) -> S_{m'}(T)
AlgebraElement include_into(const AlgebraElement& a, int bigger_degree);

// Exact E[J_{n+1}^k (y, (n+1))], an element of the algebra of S_n(T),
// by term-by-term expansion of the k-fold product.
AlgebraElement jm_moment_bruteforce(int k, int y, int n, const AbelianGroupSpec& T,
                                    long long term_budget = kDefaultTermBudget);

std::vector<WreathElement> enumerate_group(int m, const AbelianGroupSpec& T);
std::vector<ConjType> enumerate_conj_types(int n, const AbelianGroupSpec& T);

}  // namespace wreath
