#pragma once

#include "wreath_shapes/characters.hpp"

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace wreath {

// Pausing (holding) time distribution on (0, infty) with finite mean.
// The smoothness flag records whether the characteristic function meets
// the integrability condition the exponential-decay law needs; the
// discrete user table does not.
struct PausingSpec {
    enum class Family { Exponential, Gamma, UserTable };
    Family family = Family::Exponential;
    double mean = 1.0;
    double gamma_shape = 1.0;
    std::vector<std::pair<double, double>> table;  // (value, prob)
    bool qualifies_smoothness = true;

    static PausingSpec exponential(double mean);
    static PausingSpec gamma_family(double shape, double mean);
    static PausingSpec user_table(std::vector<std::pair<double, double>> entries);

    double sample(std::mt19937_64& rng) const;
    std::string family_name() const;
};

struct ChainState {
    MultiPartition current;
    std::uint64_t stream_id = 0;
    double time = 0.0;  // microscopic
    long steps = 0;     // renewals applied so far (N_s)
};

// Exact one-step stage distributions of the Res-Ind chain. Probabilities
// are dim ratios of wreath irreps, computed through hook products of the
// touched row and column only.
std::vector<std::pair<MultiPartition, Rational>> down_distribution(const MultiPartition& lambda);
std::vector<std::pair<MultiPartition, Rational>> up_distribution(const MultiPartition& nu, int r);

// one Res-Ind step (down stage then up stage)
MultiPartition step_sample(const MultiPartition& lambda, int r, std::mt19937_64& rng);

// Exact stochastic matrix P over Y_n(T-hat) (budget-guarded).
struct TransitionMatrix {
    std::vector<MultiPartition> states;
    std::vector<std::vector<Rational>> p;  // row-stochastic
    int index_of(const MultiPartition& m) const;
};
TransitionMatrix transition_matrix(int n, const AbelianGroupSpec& T, size_t state_budget = 5000);

// growth by n up-steps from the empty multipartition; exact Plancherel sample
MultiPartition plancherel_sample(int n, const AbelianGroupSpec& T, std::mt19937_64& rng);

struct MomentEstimate {
    double value = 0.0;
    double std_error = 0.0;
    long samples = 0;
    double t = 0.0;
    int k = 0;
    int zeta = 0;
};

// a(k,n,s) = E[(1-k/n)^{N_s}]: closed form exp(-ks/(nm)) for exponential
// pausing, Monte Carlo over the renewal count otherwise.
MomentEstimate a_coefficient(int k, long long n, double s, const PausingSpec& psi,
                             long mc_samples = 10000, std::uint64_t seed = 1);

// N_s Res-Ind steps under IID pausing times
ChainState sample_path(const MultiPartition& initial, double s, const PausingSpec& psi,
                       const AbelianGroupSpec& T, std::mt19937_64& rng);

// Initial ensembles: Plancherel, a fixed multipartition, or a finite mixture.
struct EnsembleSpec {
    enum class Kind { Plancherel, Deterministic, Mixture };
    Kind kind = Kind::Plancherel;
    MultiPartition start;
    std::vector<std::pair<double, MultiPartition>> mixture;

    static EnsembleSpec plancherel();
    static EnsembleSpec deterministic(MultiPartition m);
    static EnsembleSpec finite_mixture(std::vector<std::pair<double, MultiPartition>> mix);

    MultiPartition sample(int n, const AbelianGroupSpec& T, std::mt19937_64& rng) const;
    std::string describe() const;
};

// gamma[x][k] = limit gamma_k^x (k >= 2), real with gamma[x] == gamma[r-x].
struct InitialCycleLimits {
    std::vector<std::vector<double>> gamma;
    int card_t() const { return static_cast<int>(gamma.size()); }
    int max_order() const;
};

// R_k(0)^zeta = (1/|T|) sum_x gamma_k^x conj(zeta(x)) per component
std::vector<FreeCumulantSequenceF> initial_cumulants_from_gamma(const InitialCycleLimits& g);
std::vector<FreeCumulantSequenceF> predicted_cumulants(const InitialCycleLimits& g, double t,
                                                       double mean_pause);
// the explicit non-crossing moment sum evaluated on the evolved cumulants
double predicted_moment_ncsum(const FreeCumulantSequenceF& evolved, int k);

// Exact rescaled initial cumulants of an ensemble (averaged moments first,
// then the moment-cumulant bijection), one sequence per component.
std::vector<FreeCumulantSequenceF> ensemble_initial_cumulants(const EnsembleSpec& ensemble, int n,
                                                              const AbelianGroupSpec& T,
                                                              int max_order);

struct CampaignConfig {
    int n = 0;
    int r = 1;
    PausingSpec pausing;
    EnsembleSpec ensemble;
    std::vector<double> times;
    std::vector<int> orders;
    long paths = 0;
    std::uint64_t seed = 1;
    int workers = 0;  // 0 = auto; results never depend on it
};

struct CampaignCell {
    double t = 0.0;
    int zeta = 0;
    int k = 0;
    MomentEstimate estimate;
    double sample_variance = 0.0;  // per-path variance of the observable
    double predicted = 0.0;
    double zscore = 0.0;
};

struct CampaignResult {
    CampaignConfig config;
    std::vector<CampaignCell> cells;  // ordered by (t, zeta, k)
};

// Runs `paths` independent trajectories, observing n^{-k/2} M_k of the
// component transition measures at every requested time. Deterministic in
// (seed, paths) regardless of the worker count.
CampaignResult run_campaign(const CampaignConfig& cfg);

// the simulate CSV: fixed header, then one row per (t, zeta, k)
std::string campaign_csv(const CampaignResult& result);

struct EigenReport {
    ConjType rho;
    Rational eigenvalue;
    bool exact_match = false;
};

// Exact check that (chi^lambda_{iota rho}/dim lambda)_lambda is a P-eigenvector
// with eigenvalue 1 - reducedsize(rho)/n.
EigenReport eigen_check(int n, const AbelianGroupSpec& T, const ConjType& rho,
                        size_t state_budget = 5000);

struct AfpEstimate {
    std::complex<double> defect;  // f(gh) - f(g) f(h)
    double std_error = 0.0;
    long samples = 0;
};

// Monte Carlo probe of the approximate factorization property at time t.
AfpEstimate afp_probe(const EnsembleSpec& ensemble, const ConjType& g_type,
                      const ConjType& h_type, double t, int n, const AbelianGroupSpec& T,
                      const PausingSpec& psi, long paths, std::uint64_t seed);

int resolve_worker_count(int requested);

}  // namespace wreath
