#pragma once

#include "wreath_shapes/freeprob.hpp"
#include "wreath_shapes/wreath_group.hpp"

#include <complex>
#include <string>
#include <vector>

namespace wreath {

// Element of Q(omega_r), stored as the coefficient vector of length
// deg Phi_r in the power basis 1, omega, ..., reduced modulo the r-th
// cyclotomic polynomial. For r <= 2 this degenerates to plain rationals.
class Cyclotomic {
  public:
    explicit Cyclotomic(int r);  // zero
    static Cyclotomic from_rational(int r, const Rational& q);
    static Cyclotomic root_power(int r, long long j);  // omega_r^j

    int order() const { return r_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational as_rational() const;  // throws if not rational
    Cyclotomic conjugated() const;  // omega -> omega^{-1}
    std::complex<double> to_complex() const;  // evaluate at omega = e^{2 pi i / r}

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Rational& q);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Rational& q) { return a *= q; }
    bool operator==(const Cyclotomic& o) const { return r_ == o.r_ && c_ == o.c_; }

    std::string to_string() const;

    // Phi_r as integer coefficients, ascending; cached.
    static const std::vector<BigInt>& cyclotomic_polynomial(int r);

  private:
    int r_;
    std::vector<Rational> c_;
    void reduce(std::vector<Rational> raw);  // reduce arbitrary-degree poly
};

// lambda in Y_n(T-hat): one diagram per dual character index 0..r-1.
struct MultiPartition {
    std::vector<YoungDiagram> comps;

    int r() const { return static_cast<int>(comps.size()); }
    int n() const;
    MultiPartition with_added_box(int zeta, int row) const;
    MultiPartition with_removed_box(int zeta, int row) const;

    bool operator==(const MultiPartition&) const = default;
    auto operator<=>(const MultiPartition& o) const { return comps <=> o.comps; }
    std::string to_string() const;
};

std::vector<MultiPartition> enumerate_multipartitions(int n, int r);

// Irreducible symmetric-group character chi^lambda at class rho
// (Murnaghan-Nakayama over beta-sets, memoized).
BigInt sym_char(const YoungDiagram& lambda, const YoungDiagram& rho);

// chi^nu((parts, 1^{|nu|-|parts|})) / dim nu by removing only the listed
// border strips and counting dimensions of what remains. Built for large nu
// where the full recursion is out of reach.
Rational normalized_sym_char_padded(const YoungDiagram& nu, const std::vector<int>& parts);

// dim of the S_n(T) irrep: n! prod_zeta dim(lambda^zeta) / |lambda^zeta|!
BigInt wreath_dim(const MultiPartition& lambda);

// chi^lambda at a padded class: sum over assignments of colored cycles to
// the components, each term a product of root-of-unity values and
// symmetric-group characters. Memoized on (lambda, rho).
Cyclotomic wreath_char(const MultiPartition& lambda, const ConjType& rho);

// chi^lambda(iota_{n,k} rho) / dim lambda through falling-factorial
// weights and border strips of the reduced cycles only; the large-n
// evaluation path used by the chain diagnostics.
Cyclotomic normalized_wreath_char(const MultiPartition& lambda, const ConjType& rho);

// Sigma_k(nu) = |nu| falling k * chi^nu_{(k,1^...)} / dim nu; 0 for k > |nu|.
Rational sigma_k(const YoungDiagram& nu, int k);

Rational plancherel_mass(const MultiPartition& lambda);

struct BianeReport {
    bool all_equal = false;
    std::vector<Rational> moments_per_zeta;    // LHS of (1.15)
    std::vector<bool> zeta_equal;              // (1.15) per zeta
    std::vector<bool> theta_equal;             // inverted form per theta
};

// Exact two-sided verification of the wreath moment identity for one
// multipartition: moments of the component transition measures against
// character values of the brute-force JM moments.
BianeReport verify_biane(int n, int k, const AbelianGroupSpec& T, const MultiPartition& lambda,
                         long long term_budget = kDefaultTermBudget);

}  // namespace wreath
