#pragma once

#include "wreath_shapes/diagrams.hpp"
#include "wreath_shapes/numeric.hpp"

#include <stdexcept>
#include <vector>

namespace wreath {

// Atomic probability measure on the line. Exact (rational) instances come
// from transition measures of integer diagrams; approximate (double)
// instances come from rescaled simulation data and quadrature.
class AtomicMeasure {
  public:
    static AtomicMeasure exact(std::vector<Rational> atoms, std::vector<Rational> weights);
    static AtomicMeasure approx(std::vector<double> atoms, std::vector<double> weights);

    bool is_exact() const { return exact_; }
    int support_size() const { return static_cast<int>(atoms_f_.size()); }

    const std::vector<Rational>& atoms() const { return require_exact(), atoms_; }
    const std::vector<Rational>& weights() const { return require_exact(), weights_; }
    const std::vector<double>& atoms_f() const { return atoms_f_; }
    const std::vector<double>& weights_f() const { return weights_f_; }

  private:
    AtomicMeasure() = default;
    bool require_exact() const {
        if (!exact_) throw std::logic_error("AtomicMeasure: exact view of an approximate measure");
        return true;
    }
    bool exact_ = false;
    std::vector<Rational> atoms_, weights_;
    std::vector<double> atoms_f_, weights_f_;
};

// values[j] = M_j; values[0] = 1 by convention.
template <class Scalar>
struct MomentsOf {
    std::vector<Scalar> values;
    int order() const { return static_cast<int>(values.size()) - 1; }
};
using MomentSequence = MomentsOf<Rational>;
using MomentSequenceF = MomentsOf<double>;

// values[k] = R_k for k >= 1; values[0] is an unused 0 slot.
template <class Scalar>
struct CumulantsOf {
    std::vector<Scalar> values;
    int order() const { return static_cast<int>(values.size()) - 1; }
};
using FreeCumulantSequence = CumulantsOf<Rational>;
using FreeCumulantSequenceF = CumulantsOf<double>;

struct NoncrossingPartition {
    std::vector<std::vector<int>> blocks;  // of {1,...,k}, each block sorted
    YoungDiagram block_type() const;
};

// Kerov transition measure of a diagram: atoms at the contents of the
// addable cells, weight dim(mu)/((n+1) dim(lambda)) at the corner giving mu.
// The result is cross-checked against the rational-function
// characterization prod(z-y)/prod(z-x) = sum w_i/(z-x_i) as an exact
// polynomial identity before being returned.
AtomicMeasure transition_measure(const YoungDiagram& lambda);

MomentSequence moments(const AtomicMeasure& m, int max_order);
MomentSequenceF moments_f(const AtomicMeasure& m, int max_order);

template <class Scalar>
CumulantsOf<Scalar> moments_to_cumulants(const MomentsOf<Scalar>& m);
template <class Scalar>
MomentsOf<Scalar> cumulants_to_moments(const CumulantsOf<Scalar>& r, int max_order);

// Oracle path for the moment-cumulant bijection: direct summation of
// prod R_{|B|} over enumerated non-crossing partitions. Kept independent
// of the recursion above; the two are required to agree in the tests.
template <class Scalar>
MomentsOf<Scalar> moments_from_cumulants_nc_sum(const CumulantsOf<Scalar>& r, int max_order);

// Inverse Markov transform for atomic inputs: valleys are the atoms,
// peaks are the roots of N(z) = sum_i w_i prod_{j != i} (z - atom_j).
// The numeric version refines each root to 1e-12 (throws on failure);
// the exact version additionally rationalizes the roots and proves the
// polynomial identity prod(z - y_j) == N(z), throwing if the roots are
// not rational.
RectangularProfileF markov_inverse(const AtomicMeasure& m);
RectangularProfile markov_inverse_exact(const AtomicMeasure& m);

bool is_noncrossing(const std::vector<std::vector<int>>& blocks);
// All non-crossing partitions of {1..|sigma|} whose block sizes form sigma.
std::vector<NoncrossingPartition> nc_enumerate(const YoungDiagram& sigma);
// |NC(sigma)| = k! / ((k-l+1)! prod_j m_j!)
BigInt nc_count(const YoungDiagram& sigma);

// Free-cumulant evolution law of the diffusive-scale limit:
//   R_2(t) = (1-e^{-t/m})/|T| + e^{-t/m} R_2(0),
//   R_{k+1}(t) = e^{-kt/m} R_{k+1}(0) for k >= 2, R_1(t) = 0.
FreeCumulantSequenceF evolve_cumulants(const FreeCumulantSequenceF& r0, double t,
                                       double mean_pause, int card_t);

// Gauss quadrature discretization of a (determinate) moment sequence:
// an n-point atomic measure matching moments up to order 2n-1.
AtomicMeasure quadrature_measure(const MomentSequenceF& m, int points);

}  // namespace wreath
