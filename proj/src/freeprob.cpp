#include "wreath_shapes/freeprob.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace wreath {

AtomicMeasure AtomicMeasure::exact(std::vector<Rational> atoms, std::vector<Rational> weights) {
    if (atoms.empty() || atoms.size() != weights.size())
        throw std::invalid_argument("AtomicMeasure: empty or mismatched support");
    Rational total = 0;
    for (size_t i = 0; i < atoms.size(); ++i) {
        if (i > 0 && atoms[i] <= atoms[i - 1])
            throw std::invalid_argument("AtomicMeasure: atoms must be strictly increasing");
        if (weights[i] <= 0) throw std::invalid_argument("AtomicMeasure: weights must be positive");
        total += weights[i];
    }
    if (total != 1) throw std::invalid_argument("AtomicMeasure: weights must sum to 1");
    AtomicMeasure m;
    m.exact_ = true;
    for (const Rational& a : atoms) m.atoms_f_.push_back(to_double(a));
    for (const Rational& w : weights) m.weights_f_.push_back(to_double(w));
    m.atoms_ = std::move(atoms);
    m.weights_ = std::move(weights);
    return m;
}

AtomicMeasure AtomicMeasure::approx(std::vector<double> atoms, std::vector<double> weights) {
    if (atoms.empty() || atoms.size() != weights.size())
        throw std::invalid_argument("AtomicMeasure: empty or mismatched support");
    double total = 0;
    for (size_t i = 0; i < atoms.size(); ++i) {
        if (i > 0 && atoms[i] <= atoms[i - 1])
            throw std::invalid_argument("AtomicMeasure: atoms must be strictly increasing");
        if (!(weights[i] > 0)) throw std::invalid_argument("AtomicMeasure: weights must be positive");
        total += weights[i];
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw std::invalid_argument("AtomicMeasure: weights must sum to 1");
    AtomicMeasure m;
    m.atoms_f_ = std::move(atoms);
    m.weights_f_ = std::move(weights);
    return m;
}

YoungDiagram NoncrossingPartition::block_type() const {
    std::vector<int> sizes;
    for (const auto& b : blocks) sizes.push_back(static_cast<int>(b.size()));
    std::sort(sizes.rbegin(), sizes.rend());
    return YoungDiagram(sizes);
}

namespace {

// prod (z - roots[i]) as ascending coefficients
std::vector<Rational> poly_from_roots(const std::vector<Rational>& roots) {
    std::vector<Rational> p{1};
    for (const Rational& r : roots) {
        std::vector<Rational> q(p.size() + 1, Rational(0));
        for (size_t i = 0; i < p.size(); ++i) {
            q[i + 1] += p[i];
            q[i] -= r * p[i];
        }
        p = std::move(q);
    }
    return p;
}

// N(z) = sum_i w_i prod_{j != i} (z - x_j), ascending coefficients.
// One full product, then a synthetic division per atom.
std::vector<Rational> stieltjes_numerator(const std::vector<Rational>& atoms,
                                          const std::vector<Rational>& weights) {
    size_t r = atoms.size();
    std::vector<Rational> prod = poly_from_roots(atoms);  // degree r
    std::vector<Rational> acc(r, Rational(0));
    for (size_t i = 0; i < r; ++i) {
        Rational carry = prod[r];
        for (size_t c = r; c-- > 0;) {
            acc[c] += weights[i] * carry;
            carry = prod[c] + atoms[i] * carry;
        }
        if (carry != 0) throw std::logic_error("stieltjes_numerator: division remainder");
    }
    return acc;
}

double poly_eval(const std::vector<double>& coeff, double z) {
    double v = 0;
    for (size_t i = coeff.size(); i-- > 0;) v = v * z + coeff[i];
    return v;
}

double poly_eval_deriv(const std::vector<double>& coeff, double z) {
    double v = 0;
    for (size_t i = coeff.size(); i-- > 1;) v = v * z + coeff[i] * static_cast<double>(i);
    return v;
}

Rational poly_eval_exact(const std::vector<Rational>& coeff, const Rational& z) {
    Rational v = 0;
    for (size_t i = coeff.size(); i-- > 0;) v = v * z + coeff[i];
    return v;
}

}  // namespace

AtomicMeasure transition_measure(const YoungDiagram& lambda) {
    std::vector<Corner> corners = addable_cells(lambda);
    std::vector<Rational> atoms, weights;
    Rational denom(lambda.size() + 1);
    for (const Corner& c : corners) {
        atoms.emplace_back(c.content);
        weights.push_back(dim_ratio_added(lambda, c.row) / denom);
    }
    // Cross-check: sum_i w_i prod_{j!=i}(z - x_i) must equal prod_j (z - y_j)
    // with y_j the removable-corner contents.
    std::vector<Rational> peaks;
    for (const Corner& c : removable_cells(lambda)) peaks.emplace_back(c.content);
    if (stieltjes_numerator(atoms, weights) != poly_from_roots(peaks))
        throw std::logic_error("transition_measure: rational-function characterization failed");
    return AtomicMeasure::exact(std::move(atoms), std::move(weights));
}

MomentSequence moments(const AtomicMeasure& m, int max_order) {
    if (max_order < 0) throw std::invalid_argument("moments: order must be >= 0");
    MomentSequence out;
    out.values.assign(max_order + 1, Rational(0));
    out.values[0] = 1;
    std::vector<Rational> pw(m.atoms().size(), Rational(1));
    for (int k = 1; k <= max_order; ++k) {
        Rational s = 0;
        for (size_t i = 0; i < pw.size(); ++i) {
            pw[i] *= m.atoms()[i];
            s += m.weights()[i] * pw[i];
        }
        out.values[k] = s;
    }
    return out;
}

MomentSequenceF moments_f(const AtomicMeasure& m, int max_order) {
    MomentSequenceF out;
    out.values.assign(max_order + 1, 0.0);
    out.values[0] = 1.0;
    std::vector<double> pw(m.atoms_f().size(), 1.0);
    for (int k = 1; k <= max_order; ++k) {
        double s = 0;
        for (size_t i = 0; i < pw.size(); ++i) {
            pw[i] *= m.atoms_f()[i];
            s += m.weights_f()[i] * pw[i];
        }
        out.values[k] = s;
    }
    return out;
}

namespace {

// [z^t] of prod, truncating everything above `cap`.
template <class S>
std::vector<S> series_mul(const std::vector<S>& a, const std::vector<S>& b, int cap) {
    std::vector<S> c(cap + 1, S(0));
    for (int i = 0; i <= cap && i < static_cast<int>(a.size()); ++i)
        for (int j = 0; j + i <= cap && j < static_cast<int>(b.size()); ++j)
            c[i + j] += a[i] * b[j];
    return c;
}

}  // namespace

// Both directions realize the functional equation M(z) = 1 + sum_s R_s z^s M(z)^s.
template <class Scalar>
CumulantsOf<Scalar> moments_to_cumulants(const MomentsOf<Scalar>& m) {
    int order = m.order();
    if (order < 0 || m.values[0] != Scalar(1))
        throw std::invalid_argument("moments_to_cumulants: M_0 must be 1");
    CumulantsOf<Scalar> r;
    r.values.assign(order + 1, Scalar(0));
    std::vector<Scalar> mseries(m.values.begin(), m.values.end());
    for (int n = 1; n <= order; ++n) {
        // R_n = M_n - sum_{s<n} R_s [z^{n-s}] M(z)^s
        Scalar acc = m.values[n];
        std::vector<Scalar> pw{Scalar(1)};
        for (int s = 1; s < n; ++s) {
            pw = series_mul(pw, mseries, n);
            acc -= r.values[s] * pw[n - s];
        }
        r.values[n] = acc;
    }
    return r;
}

template <class Scalar>
MomentsOf<Scalar> cumulants_to_moments(const CumulantsOf<Scalar>& r, int max_order) {
    MomentsOf<Scalar> m;
    m.values.assign(max_order + 1, Scalar(0));
    m.values[0] = 1;
    for (int n = 1; n <= max_order; ++n) {
        Scalar acc(0);
        std::vector<Scalar> pw{Scalar(1)};
        for (int s = 1; s <= n; ++s) {
            pw = series_mul(pw, m.values, n);
            if (s <= r.order()) acc += r.values[s] * pw[n - s];
        }
        m.values[n] = acc;
    }
    return m;
}

namespace {

template <class F>
void set_partition_rec(int i, int k, int max_label, std::vector<int>& label, F& visit) {
    if (i == k) {
        std::vector<std::vector<int>> blocks(max_label + 1);
        for (int e = 0; e < k; ++e) blocks[label[e]].push_back(e + 1);
        visit(blocks);
        return;
    }
    for (int l = 0; l <= max_label + 1; ++l) {
        label[i] = l;
        set_partition_rec(i + 1, k, std::max(max_label, l), label, visit);
    }
}

// visits every set partition of {1..k} exactly once (restricted growth strings)
template <class F>
void for_each_set_partition(int k, F&& visit) {
    if (k == 0) return;
    std::vector<int> label(k, 0);
    set_partition_rec(0, k, -1, label, visit);
}

}  // namespace

bool is_noncrossing(const std::vector<std::vector<int>>& blocks) {
    // a<b<c<d with {a,c} and {b,d} in different blocks
    std::map<int, int> owner;
    for (size_t b = 0; b < blocks.size(); ++b)
        for (int e : blocks[b]) owner[e] = static_cast<int>(b);
    std::vector<int> elems;
    for (auto& [e, _] : owner) elems.push_back(e);
    int n = static_cast<int>(elems.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    int oa = owner[elems[a]], ob = owner[elems[b]];
                    int oc = owner[elems[c]], od = owner[elems[d]];
                    if (oa == oc && ob == od && oa != ob) return false;
                }
    return true;
}

std::vector<NoncrossingPartition> nc_enumerate(const YoungDiagram& sigma) {
    if (sigma.is_empty()) throw std::invalid_argument("nc_enumerate: sigma must be nonempty");
    int k = sigma.size();
    std::vector<NoncrossingPartition> out;
    for_each_set_partition(k, [&](const std::vector<std::vector<int>>& blocks) {
        std::vector<int> sizes;
        for (const auto& b : blocks) sizes.push_back(static_cast<int>(b.size()));
        std::sort(sizes.rbegin(), sizes.rend());
        if (sizes != sigma.parts()) return;
        if (!is_noncrossing(blocks)) return;
        out.push_back(NoncrossingPartition{blocks});
    });
    return out;
}

BigInt nc_count(const YoungDiagram& sigma) {
    if (sigma.is_empty()) throw std::invalid_argument("nc_count: sigma must be nonempty");
    int k = sigma.size();
    int l = sigma.rows();
    BigInt r = factorial(k) / factorial(k - l + 1);
    for (int j = 1; j <= k; ++j) r /= factorial(sigma.m(j));
    return r;
}

namespace {

struct NumeratorRoots {
    std::vector<double> roots;
};

NumeratorRoots find_peak_roots(const std::vector<double>& atoms,
                               const std::vector<double>& coeff) {
    NumeratorRoots out;
    size_t r = atoms.size();
    for (size_t i = 0; i + 1 < r; ++i) {
        double lo = atoms[i], hi = atoms[i + 1];
        double flo = poly_eval(coeff, lo);
        double fhi = poly_eval(coeff, hi);
        if (flo == 0 || fhi == 0 || (flo > 0) == (fhi > 0))
            throw std::runtime_error("markov_inverse: lost the interlacing bracket");
        for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++it) {
            double mid = 0.5 * (lo + hi);
            double fm = poly_eval(coeff, mid);
            if (fm == 0) {
                lo = hi = mid;
                break;
            }
            if ((fm > 0) == (flo > 0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        double y = 0.5 * (lo + hi);
        double dv = poly_eval_deriv(coeff, y);
        if (dv != 0) {
            double polished = y - poly_eval(coeff, y) / dv;
            if (polished > atoms[i] && polished < atoms[i + 1]) y = polished;
        }
        if (hi - lo > 1e-12 * std::max(1.0, std::abs(y)))
            throw std::runtime_error("markov_inverse: root refinement missed 1e-12");
        out.roots.push_back(y);
    }
    return out;
}

// continued-fraction rationalization with a denominator cap
Rational rationalize(double v, long long max_den) {
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double x = v;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(x);
        long long a = static_cast<long long>(fl);
        long long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        double rem = x - fl;
        if (rem < 1e-14 * std::max(1.0, std::abs(v))) break;
        x = 1.0 / rem;
    }
    return Rational(BigInt(p1), BigInt(q1));
}

}  // namespace

RectangularProfileF markov_inverse(const AtomicMeasure& m) {
    RectangularProfileF p;
    p.valleys = m.atoms_f();
    if (m.support_size() == 1) return p;
    std::vector<double> coeff;
    if (m.is_exact()) {
        for (const Rational& c : stieltjes_numerator(m.atoms(), m.weights()))
            coeff.push_back(to_double(c));
    } else {
        // assemble N(z) numerically: full product, then synthetic division per atom
        size_t r = m.atoms_f().size();
        std::vector<double> prod{1.0};
        for (double a : m.atoms_f()) {
            std::vector<double> nxt(prod.size() + 1, 0.0);
            for (size_t i = 0; i < prod.size(); ++i) {
                nxt[i + 1] += prod[i];
                nxt[i] -= a * prod[i];
            }
            prod = std::move(nxt);
        }
        coeff.assign(r, 0.0);
        for (size_t i = 0; i < r; ++i) {
            // prod / (z - atom_i)
            std::vector<double> q(r, 0.0);
            double carry = prod[r];
            for (size_t c = r; c-- > 0;) {
                q[c] = carry;
                carry = prod[c] + m.atoms_f()[i] * carry;
            }
            for (size_t c = 0; c < r; ++c) coeff[c] += m.weights_f()[i] * q[c];
        }
    }
    p.peaks = find_peak_roots(m.atoms_f(), coeff).roots;
    return p;
}

RectangularProfile markov_inverse_exact(const AtomicMeasure& m) {
    RectangularProfile p;
    p.valleys = m.atoms();
    if (m.support_size() == 1) return p;
    std::vector<Rational> ncoeff = stieltjes_numerator(m.atoms(), m.weights());
    std::vector<double> coeff;
    for (const Rational& c : ncoeff) coeff.push_back(to_double(c));
    NumeratorRoots numeric = find_peak_roots(m.atoms_f(), coeff);
    for (double y : numeric.roots) {
        Rational cand = rationalize(y, 1000000);
        if (poly_eval_exact(ncoeff, cand) != 0)
            throw std::domain_error("markov_inverse_exact: peak is not rational");
        p.peaks.push_back(cand);
    }
    if (poly_from_roots(p.peaks) != ncoeff)
        throw std::logic_error("markov_inverse_exact: N(z) != prod(z - y_j)");
    return p;
}

FreeCumulantSequenceF evolve_cumulants(const FreeCumulantSequenceF& r0, double t,
                                       double mean_pause, int card_t) {
    if (t < 0) throw std::invalid_argument("evolve_cumulants: t must be >= 0");
    if (!(mean_pause > 0)) throw std::invalid_argument("evolve_cumulants: mean must be > 0");
    if (card_t < 1) throw std::invalid_argument("evolve_cumulants: |T| must be >= 1");
    FreeCumulantSequenceF out;
    int order = std::max(r0.order(), 2);
    out.values.assign(order + 1, 0.0);
    double decay = std::exp(-t / mean_pause);
    double r2_init = r0.order() >= 2 ? r0.values[2] : 0.0;
    out.values[1] = 0.0;
    out.values[2] = (1.0 - decay) / card_t + decay * r2_init;
    for (int j = 3; j <= r0.order(); ++j)
        out.values[j] = std::exp(-(j - 1) * t / mean_pause) * r0.values[j];
    return out;
}

namespace {

// Symmetric tridiagonal QL with implicit shifts; tracks the first row of the
// eigenvector matrix, which is all Gauss quadrature needs.
void tql_first_row(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
    int n = static_cast<int>(d.size());
    e.push_back(0.0);
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 1e-15 * dd) break;
            }
            if (m != l) {
                if (iter++ == 60) throw std::runtime_error("quadrature: QL failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + (g >= 0 ? std::abs(r) : -std::abs(r)));
                double s = 1.0, c = 1.0, p = 0.0;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[i], b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    f = z[i + 1];
                    z[i + 1] = s * z[i] + c * f;
                    z[i] = c * z[i] - s * f;
                }
                if (r == 0.0 && m - 1 >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

}  // namespace

AtomicMeasure quadrature_measure(const MomentSequenceF& m, int points) {
    if (points < 1) throw std::invalid_argument("quadrature_measure: need >= 1 point");
    if (m.order() < 2 * points - 1)
        throw std::invalid_argument("quadrature_measure: need moments up to order 2*points-1");
    // Chebyshev algorithm: monomial moments -> three-term recurrence.
    int k = points;
    std::vector<double> alpha(k, 0.0), beta(k, 0.0);
    std::vector<std::vector<double>> sig(2, std::vector<double>(2 * k, 0.0));
    alpha[0] = m.values[1] / m.values[0];
    beta[0] = m.values[0];
    for (int l = 0; l < 2 * k; ++l) sig[1][l] = m.values[l];
    for (int j = 1; j < k; ++j) {
        std::vector<double> nxt(2 * k, 0.0);
        for (int l = j; l < 2 * k - j; ++l) {
            nxt[l] = sig[1][l + 1] - alpha[j - 1] * sig[1][l] - beta[j - 1] * sig[0][l];
        }
        alpha[j] = nxt[j + 1] / nxt[j] - sig[1][j] / sig[1][j - 1];
        beta[j] = nxt[j] / sig[1][j - 1];
        sig[0] = sig[1];
        sig[1] = nxt;
    }
    std::vector<double> d = alpha, e(k, 0.0), z(k, 0.0);
    for (int j = 1; j < k; ++j) {
        if (beta[j] < 0) throw std::runtime_error("quadrature_measure: moment data not positive");
        e[j - 1] = std::sqrt(beta[j]);
    }
    z[0] = 1.0;
    tql_first_row(d, e, z);
    std::vector<std::pair<double, double>> nodes(k);
    for (int i = 0; i < k; ++i) nodes[i] = {d[i], beta[0] * z[i] * z[i]};
    std::sort(nodes.begin(), nodes.end());
    std::vector<double> atoms, weights;
    for (auto& [x, w] : nodes) {
        atoms.push_back(x);
        weights.push_back(w);
    }
    return AtomicMeasure::approx(std::move(atoms), std::move(weights));
}

template CumulantsOf<Rational> moments_to_cumulants(const MomentsOf<Rational>&);
template CumulantsOf<double> moments_to_cumulants(const MomentsOf<double>&);
template MomentsOf<Rational> cumulants_to_moments(const CumulantsOf<Rational>&, int);
template MomentsOf<double> cumulants_to_moments(const CumulantsOf<double>&, int);

namespace {

template <class Scalar>
Scalar nc_sum_moment(const CumulantsOf<Scalar>& r, int n) {
    Scalar total(0);
    for_each_set_partition(n, [&](const std::vector<std::vector<int>>& blocks) {
        if (!is_noncrossing(blocks)) return;
        Scalar term(1);
        for (const auto& b : blocks) {
            int s = static_cast<int>(b.size());
            if (s > r.order()) {
                term = Scalar(0);
                break;
            }
            term *= r.values[s];
        }
        total += term;
    });
    return total;
}

}  // namespace

template <class Scalar>
MomentsOf<Scalar> moments_from_cumulants_nc_sum(const CumulantsOf<Scalar>& r, int max_order) {
    MomentsOf<Scalar> m;
    m.values.assign(max_order + 1, Scalar(0));
    m.values[0] = 1;
    for (int n = 1; n <= max_order; ++n) m.values[n] = nc_sum_moment(r, n);
    return m;
}

template MomentsOf<Rational> moments_from_cumulants_nc_sum(const CumulantsOf<Rational>&, int);
template MomentsOf<double> moments_from_cumulants_nc_sum(const CumulantsOf<double>&, int);

}  // namespace wreath
