#include "wreath_shapes/dynamics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <sstream>
#include <thread>

namespace wreath {

namespace {

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Box-Muller without state, so draw counts stay predictable
double standard_normal(std::mt19937_64& rng) {
    double u1 = uniform01(rng);
    while (u1 <= 0.0) u1 = uniform01(rng);
    double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

double sample_gamma_shape(double alpha, std::mt19937_64& rng) {
    if (alpha < 1.0) {
        double x = sample_gamma_shape(alpha + 1.0, rng);
        double u = uniform01(rng);
        while (u <= 0.0) u = uniform01(rng);
        return x * std::pow(u, 1.0 / alpha);
    }
    // Marsaglia-Tsang
    double d = alpha - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    while (true) {
        double x = standard_normal(rng);
        double v = 1.0 + c * x;
        if (v <= 0.0) continue;
        v = v * v * v;
        double u = uniform01(rng);
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

}  // namespace

PausingSpec PausingSpec::exponential(double mean) {
    if (!(mean > 0)) throw std::invalid_argument("PausingSpec: mean must be > 0");
    PausingSpec p;
    p.family = Family::Exponential;
    p.mean = mean;
    p.qualifies_smoothness = true;
    return p;
}

PausingSpec PausingSpec::gamma_family(double shape, double mean) {
    if (!(mean > 0) || !(shape > 0)) throw std::invalid_argument("PausingSpec: bad gamma params");
    PausingSpec p;
    p.family = Family::Gamma;
    p.mean = mean;
    p.gamma_shape = shape;
    p.qualifies_smoothness = true;
    return p;
}

PausingSpec PausingSpec::user_table(std::vector<std::pair<double, double>> entries) {
    if (entries.empty()) throw std::invalid_argument("PausingSpec: empty table");
    double mass = 0, mean = 0;
    for (auto& [v, prob] : entries) {
        if (!(v > 0) || !(prob > 0)) throw std::invalid_argument("PausingSpec: bad table entry");
        mass += prob;
        mean += v * prob;
    }
    PausingSpec p;
    p.family = Family::UserTable;
    p.mean = mean / mass;
    for (auto& [v, prob] : entries) p.table.emplace_back(v, prob / mass);
    // a discrete law has no integrable characteristic-function tail
    p.qualifies_smoothness = false;
    return p;
}

double PausingSpec::sample(std::mt19937_64& rng) const {
    switch (family) {
        case Family::Exponential: {
            double u = uniform01(rng);
            return -mean * std::log1p(-u);
        }
        case Family::Gamma: {
            double scale = mean / gamma_shape;
            double whole = std::floor(gamma_shape);
            if (whole == gamma_shape && whole <= 64) {
                // integer shape: sum of exponentials keeps the draw count fixed
                double s = 0;
                for (int i = 0; i < static_cast<int>(whole); ++i)
                    s += -scale * std::log1p(-uniform01(rng));
                return s;
            }
            return scale * sample_gamma_shape(gamma_shape, rng);
        }
        case Family::UserTable: {
            double u = uniform01(rng);
            double acc = 0;
            for (auto& [v, prob] : table) {
                acc += prob;
                if (u < acc) return v;
            }
            return table.back().first;
        }
    }
    throw std::logic_error("PausingSpec: unknown family");
}

std::string PausingSpec::family_name() const {
    switch (family) {
        case Family::Exponential: return "exponential";
        case Family::Gamma: return "gamma";
        case Family::UserTable: return "table";
    }
    return "?";
}

std::vector<std::pair<MultiPartition, Rational>> down_distribution(const MultiPartition& lambda) {
    int n = lambda.n();
    if (n == 0) throw std::invalid_argument("down_distribution: empty multipartition");
    std::vector<std::pair<MultiPartition, Rational>> out;
    for (int z = 0; z < lambda.r(); ++z) {
        const YoungDiagram& comp = lambda.comps[z];
        Rational comp_weight(comp.size(), n);
        for (const Corner& c : removable_cells(comp))
            out.emplace_back(lambda.with_removed_box(z, c.row),
                             comp_weight * dim_ratio_removed(comp, c.row));
    }
    return out;
}

std::vector<std::pair<MultiPartition, Rational>> up_distribution(const MultiPartition& nu, int r) {
    std::vector<std::pair<MultiPartition, Rational>> out;
    for (int z = 0; z < nu.r(); ++z) {
        const YoungDiagram& comp = nu.comps[z];
        Rational denom(static_cast<long long>(r) * (comp.size() + 1));
        for (const Corner& c : addable_cells(comp))
            out.emplace_back(nu.with_added_box(z, c.row), dim_ratio_added(comp, c.row) / denom);
    }
    return out;
}

namespace {

const MultiPartition& pick(const std::vector<std::pair<MultiPartition, Rational>>& dist,
                           std::mt19937_64& rng) {
    double u = uniform01(rng);
    double acc = 0;
    for (const auto& [state, p] : dist) {
        acc += to_double(p);
        if (u < acc) return state;
    }
    return dist.back().first;
}

}  // namespace

MultiPartition step_sample(const MultiPartition& lambda, int r, std::mt19937_64& rng) {
    MultiPartition down = pick(down_distribution(lambda), rng);
    return pick(up_distribution(down, r), rng);
}

int TransitionMatrix::index_of(const MultiPartition& m) const {
    auto it = std::lower_bound(states.begin(), states.end(), m);
    if (it == states.end() || !(*it == m)) throw std::invalid_argument("state not found");
    return static_cast<int>(it - states.begin());
}

TransitionMatrix transition_matrix(int n, const AbelianGroupSpec& T, size_t state_budget) {
    TransitionMatrix tm;
    tm.states = enumerate_multipartitions(n, T.r);
    if (tm.states.size() > state_budget)
        throw std::length_error("transition_matrix: state budget exceeded");
    size_t count = tm.states.size();
    std::vector<BigInt> dims;
    dims.reserve(count);
    for (const MultiPartition& m : tm.states) dims.push_back(wreath_dim(m));
    tm.p.assign(count, std::vector<Rational>(count, Rational(0)));
    BigInt denom_base = BigInt(n) * T.r;
    for (size_t i = 0; i < count; ++i) {
        const MultiPartition& lambda = tm.states[i];
        for (int z = 0; z < lambda.r(); ++z)
            for (const Corner& c : removable_cells(lambda.comps[z])) {
                MultiPartition nu = lambda.with_removed_box(z, c.row);
                for (int z2 = 0; z2 < nu.r(); ++z2)
                    for (const Corner& c2 : addable_cells(nu.comps[z2])) {
                        MultiPartition mu = nu.with_added_box(z2, c2.row);
                        int j = tm.index_of(mu);
                        tm.p[i][j] += Rational(dims[j], denom_base * dims[i]);
                    }
            }
        Rational row_sum = 0;
        for (const Rational& v : tm.p[i]) row_sum += v;
        if (row_sum != 1) throw std::logic_error("transition_matrix: row does not sum to 1");
    }
    return tm;
}

MultiPartition plancherel_sample(int n, const AbelianGroupSpec& T, std::mt19937_64& rng) {
    MultiPartition m{std::vector<YoungDiagram>(T.r)};
    for (int step = 0; step < n; ++step) m = pick(up_distribution(m, T.r), rng);
    return m;
}

MomentEstimate a_coefficient(int k, long long n, double s, const PausingSpec& psi,
                             long mc_samples, std::uint64_t seed) {
    if (k >= n) throw std::invalid_argument("a_coefficient: k must be < n");
    if (s < 0) throw std::invalid_argument("a_coefficient: s must be >= 0");
    MomentEstimate est;
    est.k = k;
    if (psi.family == PausingSpec::Family::Exponential) {
        // N_s is Poisson(s/mean); E[z^{N_s}] = exp(-(s/mean)(1-z))
        est.value = std::exp(-static_cast<double>(k) * s / (static_cast<double>(n) * psi.mean));
        est.std_error = 0.0;
        est.samples = 0;
        return est;
    }
    double z = 1.0 - static_cast<double>(k) / static_cast<double>(n);
    double sum = 0, sumsq = 0;
    std::uint64_t state = seed;
    std::mt19937_64 rng(splitmix64(state));
    for (long i = 0; i < mc_samples; ++i) {
        double clock = psi.sample(rng);
        long renewals = 0;
        while (clock <= s) {
            ++renewals;
            clock += psi.sample(rng);
        }
        double v = std::pow(z, static_cast<double>(renewals));
        sum += v;
        sumsq += v * v;
    }
    est.value = sum / mc_samples;
    double var = (sumsq - sum * sum / mc_samples) / (mc_samples - 1);
    est.std_error = std::sqrt(std::max(var, 0.0) / mc_samples);
    est.samples = mc_samples;
    return est;
}

ChainState sample_path(const MultiPartition& initial, double s, const PausingSpec& psi,
                       const AbelianGroupSpec& T, std::mt19937_64& rng) {
    if (s < 0) throw std::invalid_argument("sample_path: s must be >= 0");
    ChainState state{initial, 0, 0.0, 0};
    double next = psi.sample(rng);
    while (next <= s) {
        state.current = step_sample(state.current, T.r, rng);
        state.time = next;
        ++state.steps;
        next += psi.sample(rng);
    }
    state.time = s;
    return state;
}

EnsembleSpec EnsembleSpec::plancherel() {
    EnsembleSpec e;
    e.kind = Kind::Plancherel;
    return e;
}

EnsembleSpec EnsembleSpec::deterministic(MultiPartition m) {
    EnsembleSpec e;
    e.kind = Kind::Deterministic;
    e.start = std::move(m);
    return e;
}

EnsembleSpec EnsembleSpec::finite_mixture(std::vector<std::pair<double, MultiPartition>> mix) {
    if (mix.empty()) throw std::invalid_argument("EnsembleSpec: empty mixture");
    double mass = 0;
    for (auto& [w, m] : mix) {
        if (!(w > 0)) throw std::invalid_argument("EnsembleSpec: weights must be positive");
        mass += w;
    }
    EnsembleSpec e;
    e.kind = Kind::Mixture;
    for (auto& [w, m] : mix) e.mixture.emplace_back(w / mass, m);
    return e;
}

MultiPartition EnsembleSpec::sample(int n, const AbelianGroupSpec& T, std::mt19937_64& rng) const {
    switch (kind) {
        case Kind::Plancherel:
            return plancherel_sample(n, T, rng);
        case Kind::Deterministic:
            if (start.n() != n || start.r() != T.r)
                throw std::invalid_argument("EnsembleSpec: start state does not match (n, r)");
            return start;
        case Kind::Mixture: {
            double u = uniform01(rng);
            double acc = 0;
            for (const auto& [w, m] : mixture) {
                acc += w;
                if (u < acc) {
                    if (m.n() != n || m.r() != T.r)
                        throw std::invalid_argument("EnsembleSpec: mixture state mismatch");
                    return m;
                }
            }
            return mixture.back().second;
        }
    }
    throw std::logic_error("EnsembleSpec: unknown kind");
}

std::string EnsembleSpec::describe() const {
    switch (kind) {
        case Kind::Plancherel: return "plancherel";
        case Kind::Deterministic: return "deterministic:" + start.to_string();
        case Kind::Mixture: {
            std::ostringstream os;
            os << "mixture:" << mixture.size();
            return os.str();
        }
    }
    return "?";
}

int InitialCycleLimits::max_order() const {
    size_t len = 0;
    for (const auto& g : gamma) len = std::max(len, g.size());
    return static_cast<int>(len) - 1;
}

std::vector<FreeCumulantSequenceF> initial_cumulants_from_gamma(const InitialCycleLimits& g) {
    int r = g.card_t();
    if (r < 1) throw std::invalid_argument("InitialCycleLimits: need |T| >= 1");
    int order = g.max_order();
    if (order < 2) throw std::invalid_argument("InitialCycleLimits: need gamma_2");
    auto gval = [&](int x, int k) -> double {
        return (k < static_cast<int>(g.gamma[x].size())) ? g.gamma[x][k] : 0.0;
    };
    if (std::abs(gval(0, 2) - 1.0) > 1e-12)
        throw std::invalid_argument("InitialCycleLimits: gamma_2^{e_T} must be 1");
    for (int x = 1; x < r; ++x)
        for (int k = 2; k <= order; ++k)
            if (std::abs(gval(x, k) - gval(r - x, k)) > 1e-12)
                throw std::invalid_argument("InitialCycleLimits: conjugation symmetry violated");
    std::vector<FreeCumulantSequenceF> out;
    for (int z = 0; z < r; ++z) {
        FreeCumulantSequenceF rk;
        rk.values.assign(order + 1, 0.0);
        for (int k = 2; k <= order; ++k) {
            double re = 0, im = 0;
            for (int x = 0; x < r; ++x) {
                double angle = -2.0 * M_PI * z * x / r;
                re += gval(x, k) * std::cos(angle);
                im += gval(x, k) * std::sin(angle);
            }
            if (std::abs(im) > 1e-9)
                throw std::logic_error("initial_cumulants_from_gamma: non-real cumulant");
            rk.values[k] = re / r;
        }
        out.push_back(std::move(rk));
    }
    return out;
}

std::vector<FreeCumulantSequenceF> predicted_cumulants(const InitialCycleLimits& g, double t,
                                                       double mean_pause) {
    std::vector<FreeCumulantSequenceF> out;
    for (const FreeCumulantSequenceF& r0 : initial_cumulants_from_gamma(g))
        out.push_back(evolve_cumulants(r0, t, mean_pause, g.card_t()));
    return out;
}

double predicted_moment_ncsum(const FreeCumulantSequenceF& evolved, int k) {
    // sum over sigma in Ybar_k of |NC(sigma)| prod_j R_j(t)^{m_j(sigma)};
    // the R_1 = 0 constraint is what removes the 1-rows
    double total = 0;
    for (const YoungDiagram& sigma : partitions_of(k)) {
        if (sigma.m(1) != 0) continue;
        double term = to_double(Rational(nc_count(sigma)));
        for (int p : sigma.parts())
            term *= (p <= evolved.order()) ? evolved.values[p] : 0.0;
        total += term;
    }
    return total;
}

std::vector<FreeCumulantSequenceF> ensemble_initial_cumulants(const EnsembleSpec& ensemble, int n,
                                                              const AbelianGroupSpec& T,
                                                              int max_order) {
    std::vector<FreeCumulantSequenceF> out;
    if (ensemble.kind == EnsembleSpec::Kind::Plancherel) {
        for (int z = 0; z < T.r; ++z) {
            FreeCumulantSequenceF r;
            r.values.assign(std::max(max_order, 2) + 1, 0.0);
            r.values[2] = 1.0 / T.r;
            out.push_back(std::move(r));
        }
        return out;
    }
    std::vector<std::pair<double, MultiPartition>> mix;
    if (ensemble.kind == EnsembleSpec::Kind::Deterministic) mix.emplace_back(1.0, ensemble.start);
    else mix = ensemble.mixture;
    double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (int z = 0; z < T.r; ++z) {
        MomentSequenceF avg;
        avg.values.assign(max_order + 1, 0.0);
        avg.values[0] = 1.0;
        for (const auto& [w, m] : mix) {
            if (m.n() != n || m.r() != T.r)
                throw std::invalid_argument("ensemble_initial_cumulants: state mismatch");
            MomentSequence exact = moments(transition_measure(m.comps[z]), max_order);
            for (int k = 1; k <= max_order; ++k)
                avg.values[k] += w * to_double(exact.values[k]) * std::pow(scale, k);
        }
        out.push_back(moments_to_cumulants(avg));
    }
    return out;
}

int resolve_worker_count(int requested) {
    if (requested > 0) return std::min(requested, 256);
    if (const char* env = std::getenv("WREATH_SHAPES_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return std::min(v, 256);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

void run_parallel(long jobs, int workers, const std::function<void(long)>& fn) {
    if (workers <= 1 || jobs <= 1) {
        for (long i = 0; i < jobs; ++i) fn(i);
        return;
    }
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    int count = std::min<long>(workers, jobs);
    pool.reserve(count);
    for (int w = 0; w < count; ++w)
        pool.emplace_back([&]() {
            while (true) {
                long i = next.fetch_add(1);
                if (i >= jobs) break;
                fn(i);
            }
        });
    for (std::thread& th : pool) th.join();
}

std::mt19937_64 path_rng(std::uint64_t seed, long path_index) {
    std::uint64_t state = seed;
    splitmix64(state);
    state ^= 0x517CC1B727220A95ull * static_cast<std::uint64_t>(path_index + 1);
    return std::mt19937_64(splitmix64(state));
}

}  // namespace

CampaignResult run_campaign(const CampaignConfig& cfg) {
    if (cfg.n < 1) throw std::invalid_argument("campaign: n must be >= 1");
    if (cfg.r < 1) throw std::invalid_argument("campaign: r must be >= 1");
    if (cfg.paths < 1) throw std::invalid_argument("campaign: need >= 1 path");
    if (cfg.times.empty()) throw std::invalid_argument("campaign: need >= 1 time");
    if (cfg.orders.empty()) throw std::invalid_argument("campaign: need >= 1 order");
    for (double t : cfg.times)
        if (t < 0) throw std::invalid_argument("campaign: times must be >= 0");
    for (int k : cfg.orders)
        if (k < 1) throw std::invalid_argument("campaign: orders must be >= 1");

    AbelianGroupSpec T(cfg.r);
    CampaignConfig sorted = cfg;
    std::sort(sorted.times.begin(), sorted.times.end());
    sorted.times.erase(std::unique(sorted.times.begin(), sorted.times.end()), sorted.times.end());
    std::sort(sorted.orders.begin(), sorted.orders.end());
    sorted.orders.erase(std::unique(sorted.orders.begin(), sorted.orders.end()),
                        sorted.orders.end());

    int kmax = sorted.orders.back();
    int tcount = static_cast<int>(sorted.times.size());
    int kcount = static_cast<int>(sorted.orders.size());
    long cells_per_path = static_cast<long>(tcount) * cfg.r * kcount;

    // predictions from the evolution law, per (t, zeta)
    std::vector<FreeCumulantSequenceF> r0 =
        ensemble_initial_cumulants(sorted.ensemble, cfg.n, T, std::max(kmax, 2));
    std::vector<std::vector<MomentSequenceF>> predicted(tcount);
    for (int ti = 0; ti < tcount; ++ti) {
        predicted[ti].resize(cfg.r);
        for (int z = 0; z < cfg.r; ++z) {
            FreeCumulantSequenceF evolved =
                evolve_cumulants(r0[z], sorted.times[ti], sorted.pausing.mean, cfg.r);
            predicted[ti][z] = cumulants_to_moments(evolved, kmax);
        }
    }

    std::vector<double> values(static_cast<size_t>(cfg.paths) * cells_per_path, 0.0);
    double rootn = std::sqrt(static_cast<double>(cfg.n));
    const std::function<void(long)> one_path = [&](long p) {
        std::mt19937_64 rng = path_rng(cfg.seed, p);
        MultiPartition state = sorted.ensemble.sample(cfg.n, T, rng);
        double clock_next = sorted.pausing.sample(rng);
        double* row = values.data() + static_cast<size_t>(p) * cells_per_path;
        for (int ti = 0; ti < tcount; ++ti) {
            double target = sorted.times[ti] * cfg.n;  // s = t n
            while (clock_next <= target) {
                state = step_sample(state, cfg.r, rng);
                clock_next += sorted.pausing.sample(rng);
            }
            for (int z = 0; z < cfg.r; ++z) {
                // exact per-path moments; floats only at the single
                // conversion and the n^{-k/2} rescale
                MomentSequence ms = moments(transition_measure(state.comps[z]), kmax);
                for (int ki = 0; ki < kcount; ++ki) {
                    int k = sorted.orders[ki];
                    row[(static_cast<long>(ti) * cfg.r + z) * kcount + ki] =
                        to_double(ms.values[k]) / std::pow(rootn, k);
                }
            }
        }
    };
    run_parallel(cfg.paths, resolve_worker_count(cfg.workers), one_path);

    CampaignResult result;
    result.config = sorted;
    for (int ti = 0; ti < tcount; ++ti)
        for (int z = 0; z < cfg.r; ++z)
            for (int ki = 0; ki < kcount; ++ki) {
                long cell = (static_cast<long>(ti) * cfg.r + z) * kcount + ki;
                double sum = 0;
                for (long p = 0; p < cfg.paths; ++p) sum += values[p * cells_per_path + cell];
                double mean = sum / cfg.paths;
                double ss = 0;
                for (long p = 0; p < cfg.paths; ++p) {
                    double d = values[p * cells_per_path + cell] - mean;
                    ss += d * d;
                }
                double var = cfg.paths > 1 ? ss / (cfg.paths - 1) : 0.0;
                CampaignCell out;
                out.t = sorted.times[ti];
                out.zeta = z;
                out.k = sorted.orders[ki];
                out.estimate.value = mean;
                out.estimate.std_error = std::sqrt(var / cfg.paths);
                out.estimate.samples = cfg.paths;
                out.estimate.t = out.t;
                out.estimate.k = out.k;
                out.estimate.zeta = z;
                out.sample_variance = var;
                out.predicted = predicted[ti][z].values[out.k];
                double diff = mean - out.predicted;
                if (out.estimate.std_error > 0) out.zscore = diff / out.estimate.std_error;
                else out.zscore = diff == 0 ? 0.0 : std::numeric_limits<double>::infinity();
                result.cells.push_back(out);
            }
    return result;
}

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string campaign_csv(const CampaignResult& result) {
    std::ostringstream os;
    const CampaignConfig& c = result.config;
    os << "# wreath-shapes simulate schema=1 seed=" << c.seed << " n=" << c.n << " r=" << c.r
       << " paths=" << c.paths << " pausing=" << c.pausing.family_name()
       << " mean=" << fmt_double(c.pausing.mean) << " ensemble=" << c.ensemble.describe() << "\n";
    os << "t,zeta,k,estimate,stderr,predicted,zscore\n";
    for (const CampaignCell& cell : result.cells) {
        os << fmt_double(cell.t) << ',' << cell.zeta << ',' << cell.k << ','
           << fmt_double(cell.estimate.value) << ',' << fmt_double(cell.estimate.std_error) << ','
           << fmt_double(cell.predicted) << ',' << fmt_double(cell.zscore) << "\n";
    }
    return os.str();
}

EigenReport eigen_check(int n, const AbelianGroupSpec& T, const ConjType& rho,
                        size_t state_budget) {
    EigenReport rep{rho.at_degree(n), Rational(0), false};
    int k_eff = rho.reduced_size();  // k - m_1(rho_{e_T}) of the padded class
    if (k_eff > n) throw std::invalid_argument("eigen_check: class does not fit");
    rep.eigenvalue = Rational(n - k_eff, n);
    TransitionMatrix tm = transition_matrix(n, T, state_budget);
    size_t count = tm.states.size();
    std::vector<Cyclotomic> v;
    v.reserve(count);
    for (const MultiPartition& lambda : tm.states) {
        Cyclotomic val = wreath_char(lambda, rep.rho);
        val *= Rational(1, wreath_dim(lambda));
        v.push_back(val);
    }
    rep.exact_match = true;
    for (size_t i = 0; i < count; ++i) {
        Cyclotomic acc(T.r);
        for (size_t j = 0; j < count; ++j) {
            if (tm.p[i][j] == 0) continue;
            Cyclotomic term = v[j];
            term *= tm.p[i][j];
            acc += term;
        }
        Cyclotomic expect = v[i];
        expect *= rep.eigenvalue;
        if (!(acc == expect)) {
            rep.exact_match = false;
            break;
        }
    }
    return rep;
}

namespace {

ConjType merge_types(const ConjType& a, const ConjType& b, int n) {
    if (a.r() != b.r()) throw std::invalid_argument("merge_types: order mismatch");
    std::vector<YoungDiagram> per_color;
    for (int x = 0; x < a.r(); ++x) {
        std::vector<int> parts = a.rho[x].parts();
        for (int p : b.rho[x].parts()) parts.push_back(p);
        std::sort(parts.rbegin(), parts.rend());
        per_color.emplace_back(std::move(parts));
    }
    return make_conj_type(std::move(per_color), n);
}

}  // namespace

AfpEstimate afp_probe(const EnsembleSpec& ensemble, const ConjType& g_type,
                      const ConjType& h_type, double t, int n, const AbelianGroupSpec& T,
                      const PausingSpec& psi, long paths, std::uint64_t seed) {
    if (paths < 2) throw std::invalid_argument("afp_probe: need >= 2 paths");
    if (g_type.reduced_size() + h_type.reduced_size() > n)
        throw std::invalid_argument("afp_probe: no disjoint representatives at this degree");
    ConjType gh = merge_types(g_type, h_type, n);
    ConjType g = g_type.at_degree(n);
    ConjType h = h_type.at_degree(n);

    std::vector<std::complex<double>> us(paths), vs(paths), ws(paths);
    const std::function<void(long)> one = [&](long p) {
        std::mt19937_64 rng = path_rng(seed, p);
        MultiPartition state = ensemble.sample(n, T, rng);
        ChainState end = sample_path(state, t * n, psi, T, rng);
        us[p] = normalized_wreath_char(end.current, g).to_complex();
        vs[p] = normalized_wreath_char(end.current, h).to_complex();
        ws[p] = normalized_wreath_char(end.current, gh).to_complex();
    };
    run_parallel(paths, resolve_worker_count(0), one);

    std::complex<double> mu(0), mv(0), mw(0);
    for (long p = 0; p < paths; ++p) {
        mu += us[p];
        mv += vs[p];
        mw += ws[p];
    }
    mu /= static_cast<double>(paths);
    mv /= static_cast<double>(paths);
    mw /= static_cast<double>(paths);

    AfpEstimate est;
    est.defect = mw - mu * mv;
    est.samples = paths;
    // delta method on the linearized statistic
    std::complex<double> mean_res(0);
    std::vector<std::complex<double>> res(paths);
    for (long p = 0; p < paths; ++p) {
        res[p] = ws[p] - mv * us[p] - mu * vs[p];
        mean_res += res[p];
    }
    mean_res /= static_cast<double>(paths);
    double var = 0;
    for (long p = 0; p < paths; ++p) var += std::norm(res[p] - mean_res);
    var /= (paths - 1);
    est.std_error = std::sqrt(var / paths);
    return est;
}

}  // namespace wreath
