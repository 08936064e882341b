// wreath-shapes: exact verification suites, symbolic JM expansions,
// Monte Carlo simulation campaigns and limit-shape output for the
// Res-Ind chain on multipartitions.

#include <CLI11.hpp>
#include <json.hpp>

#include "wreath_shapes/dynamics.hpp"
#include "wreath_shapes/jm_asymptotics.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace wreath;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot open output file: " + path);
    out << text;
}

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stod(item));
    return out;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

YoungDiagram parse_partition(const std::string& s) {
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) parts.push_back(std::stoi(item));
    std::sort(parts.rbegin(), parts.rend());
    return YoungDiagram(parts);
}

// components separated by '|': "10,10|3,1"; an empty segment is an empty diagram
MultiPartition parse_multipartition(const std::string& s, int r) {
    std::vector<YoungDiagram> comps;
    std::string rest = s;
    size_t pos;
    while ((pos = rest.find('|')) != std::string::npos) {
        comps.push_back(parse_partition(rest.substr(0, pos)));
        rest = rest.substr(pos + 1);
    }
    comps.push_back(parse_partition(rest));
    while (static_cast<int>(comps.size()) < r) comps.emplace_back();
    if (static_cast<int>(comps.size()) != r)
        throw UsageError("multipartition has more components than r");
    return MultiPartition{std::move(comps)};
}

// "plancherel" | "rect:RxC@Z" | "mp:<spec>" | "mixture:<file>"
EnsembleSpec parse_ensemble(const std::string& s, int n, int r) {
    if (s == "plancherel") return EnsembleSpec::plancherel();
    if (s.rfind("rect:", 0) == 0) {
        std::string body = s.substr(5);
        size_t x = body.find('x'), at = body.find('@');
        if (x == std::string::npos) throw UsageError("rect ensemble: want rect:RxC@Z");
        int rows = std::stoi(body.substr(0, x));
        int cols = std::stoi(
            body.substr(x + 1, at == std::string::npos ? std::string::npos : at - x - 1));
        int zeta = at == std::string::npos ? 0 : std::stoi(body.substr(at + 1));
        if (zeta < 0 || zeta >= r) throw UsageError("rect ensemble: component out of range");
        if (rows * cols != n) throw UsageError("rect ensemble: rows*cols must equal n");
        std::vector<YoungDiagram> comps(r);
        comps[zeta] = YoungDiagram(std::vector<int>(rows, cols));
        return EnsembleSpec::deterministic(MultiPartition{std::move(comps)});
    }
    if (s.rfind("mp:", 0) == 0)
        return EnsembleSpec::deterministic(parse_multipartition(s.substr(3), r));
    if (s.rfind("mixture:", 0) == 0) {
        std::ifstream in(s.substr(8));
        if (!in) throw UsageError("mixture ensemble: cannot open " + s.substr(8));
        std::vector<std::pair<double, MultiPartition>> mix;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ls(line);
            double w;
            std::string mpstr;
            if (!(ls >> w >> mpstr))
                throw UsageError("mixture line: want '<weight> <multipartition>'");
            mix.emplace_back(w, parse_multipartition(mpstr, r));
        }
        return EnsembleSpec::finite_mixture(std::move(mix));
    }
    throw UsageError("unknown ensemble spec: " + s);
}

PausingSpec parse_pausing(const std::string& family, double mean, double shape) {
    if (family == "exponential") return PausingSpec::exponential(mean);
    if (family == "gamma") return PausingSpec::gamma_family(shape, mean);
    if (family.rfind("table:", 0) == 0) {
        std::ifstream in(family.substr(6));
        if (!in) throw UsageError("pausing table: cannot open " + family.substr(6));
        std::vector<std::pair<double, double>> entries;
        double v, p;
        while (in >> v >> p) entries.emplace_back(v, p);
        return PausingSpec::user_table(std::move(entries));
    }
    throw UsageError("unknown pausing family: " + family);
}

// flat key=value config file; '#' starts a comment
std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::map<std::string, std::string> kv;
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        size_t eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            size_t a = s.find_first_not_of(" \t");
            size_t b = s.find_last_not_of(" \t");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (!key.empty()) kv[key] = value;
    }
    return kv;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double chi2_quantile_999(int dof) {
    // Wilson-Hilferty
    double z = 3.0902;
    double t = 1.0 - 2.0 / (9.0 * dof) + z * std::sqrt(2.0 / (9.0 * dof));
    return dof * t * t * t;
}

int verify_biane_suite(int n, int r, int kmax, int sample, json& rep) {
    if (n < 1) throw UsageError("degree must be >= 1");
    if (r < 1) throw UsageError("r must be >= 1");
    AbelianGroupSpec T(r);
    bool all_pass = true;
    json checks = json::array();
    for (int m = 1; m <= n; ++m) {
        std::vector<MultiPartition> lambdas = enumerate_multipartitions(m, r);
        std::vector<MultiPartition> chosen;
        if (sample > 0 && static_cast<size_t>(sample) < lambdas.size()) {
            for (int i = 0; i < sample; ++i)
                chosen.push_back(lambdas[i * (lambdas.size() - 1) / std::max(sample - 1, 1)]);
        } else {
            chosen = lambdas;
        }
        for (int kk = 1; kk <= kmax; ++kk)
            for (const MultiPartition& lambda : chosen) {
                BianeReport br = verify_biane(m, kk, T, lambda);
                json moments_json = json::array();
                for (const Rational& q : br.moments_per_zeta) {
                    std::ostringstream os;
                    os << q;
                    moments_json.push_back(os.str());
                }
                checks.push_back({{"n", m},
                                  {"k", kk},
                                  {"lambda", lambda.to_string()},
                                  {"moments", moments_json},
                                  {"equal", br.all_equal}});
                all_pass = all_pass && br.all_equal;
            }
    }
    rep["checks"] = std::move(checks);
    return all_pass ? kExitPass : kExitCheckFailed;
}

int verify_jm_suite(int n, int r, int kmax, json& rep) {
    if (n < 2) throw UsageError("degree must be >= 2");
    AbelianGroupSpec T(r);
    bool all_pass = true;
    json checks = json::array();
    int n_small = std::max(n / 2, 2);
    for (int kk = 2; kk <= kmax; ++kk)
        for (int yy = 0; yy < r; ++yy) {
            CompareReport big = compare_bruteforce(kk, yy, T, n);
            Rational err_big = big.max_rel_error();
            bool pass;
            json item = {{"k", kk},
                         {"y", yy},
                         {"n", n},
                         {"max_rel_error", to_double(err_big)},
                         {"residual_classes", big.residual_classes().size()}};
            if (kk == 2) {
                pass = err_big == 0;
                item["criterion"] = "exact";
            } else {
                Rational err_small = compare_bruteforce(kk, yy, T, n_small).max_rel_error();
                item["n_small"] = n_small;
                item["max_rel_error_small"] = to_double(err_small);
                pass = err_big < err_small || (err_big == 0 && err_small == 0);
                item["criterion"] = "decay";
            }
            item["pass"] = pass;
            checks.push_back(std::move(item));
            all_pass = all_pass && pass;
        }
    rep["checks"] = std::move(checks);
    return all_pass ? kExitPass : kExitCheckFailed;
}

int verify_eigen_suite(int n, int r, json& rep) {
    if (n < 1) throw UsageError("degree must be >= 1");
    AbelianGroupSpec T(r);
    bool all_pass = true;
    json checks = json::array();
    for (int kk = 0; kk <= n; ++kk)
        for (const ConjType& rho : enumerate_conj_types(kk, T)) {
            if (rho.reduced_size() != kk) continue;
            EigenReport er = eigen_check(n, T, rho);
            std::ostringstream ev;
            ev << er.eigenvalue;
            checks.push_back(
                {{"rho", rho.to_string()}, {"eigenvalue", ev.str()}, {"exact", er.exact_match}});
            all_pass = all_pass && er.exact_match;
        }
    rep["checks"] = std::move(checks);
    return all_pass ? kExitPass : kExitCheckFailed;
}

int verify_stationarity_suite(int n, int r, long paths, std::uint64_t seed, json& rep) {
    if (n < 1) throw UsageError("degree must be >= 1");
    if (paths < 100) throw UsageError("need >= 100 paths");
    AbelianGroupSpec T(r);
    std::vector<MultiPartition> states = enumerate_multipartitions(n, r);
    if (states.size() > 60) throw UsageError("stationarity: state space too large");
    PausingSpec expo = PausingSpec::exponential(1.0);
    std::map<MultiPartition, long> freq;
    for (long p = 0; p < paths; ++p) {
        std::uint64_t s = seed;
        splitmix64(s);
        s ^= 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(p + 1);
        std::mt19937_64 rng(splitmix64(s));
        MultiPartition start = plancherel_sample(n, T, rng);
        freq[sample_path(start, 2.5 * n, expo, T, rng).current] += 1;
    }
    double chi2 = 0;
    json cells = json::array();
    for (const MultiPartition& s : states) {
        double expect = to_double(plancherel_mass(s)) * paths;
        double d = freq[s] - expect;
        chi2 += d * d / expect;
        cells.push_back({{"state", s.to_string()}, {"observed", freq[s]}, {"expected", expect}});
    }
    double threshold = chi2_quantile_999(static_cast<int>(states.size()) - 1);
    rep["chi2"] = chi2;
    rep["threshold_999"] = threshold;
    rep["cells"] = std::move(cells);
    return chi2 < threshold ? kExitPass : kExitCheckFailed;
}

int verify_characters_suite(int n, int r, json& rep) {
    if (n < 1) throw UsageError("degree must be >= 1");
    AbelianGroupSpec T(r);
    auto lambdas = enumerate_multipartitions(n, r);
    auto classes = enumerate_conj_types(n, T);
    BigInt order = factorial(n) * pow_int(BigInt(r), n);
    bool orth = true;
    std::vector<std::vector<Cyclotomic>> table;
    for (const MultiPartition& lambda : lambdas) {
        std::vector<Cyclotomic> row;
        for (const ConjType& cls : classes) row.push_back(wreath_char(lambda, cls));
        table.push_back(std::move(row));
    }
    for (size_t a = 0; a < lambdas.size() && orth; ++a)
        for (size_t b = a; b < lambdas.size() && orth; ++b) {
            Cyclotomic s(r);
            for (size_t c = 0; c < classes.size(); ++c) {
                Cyclotomic term = table[a][c] * table[b][c].conjugated();
                term *= Rational(class_size(classes[c], n));
                s += term;
            }
            orth = s == Cyclotomic::from_rational(r, a == b ? Rational(order) : Rational(0));
        }
    bool branching = true;
    if (n >= 2) {
        for (const MultiPartition& lambda : lambdas)
            for (const ConjType& cls : enumerate_conj_types(n - 1, T)) {
                Cyclotomic lhs = wreath_char(lambda, cls.at_degree(n));
                Cyclotomic rhs(r);
                for (int z = 0; z < r; ++z)
                    for (const Corner& c : removable_cells(lambda.comps[z]))
                        rhs += wreath_char(lambda.with_removed_box(z, c.row), cls);
                branching = branching && (lhs == rhs);
            }
    }
    bool single_cycle = true;
    for (int kk = 1; kk <= n; ++kk)
        for (int theta = 0; theta < r; ++theta) {
            std::vector<YoungDiagram> rho(r);
            rho[theta] = YoungDiagram({kk});
            ConjType cls = make_conj_type(rho, n);
            for (const MultiPartition& lambda : lambdas) {
                Cyclotomic lhs = wreath_char(lambda, cls);
                lhs *= Rational(1, wreath_dim(lambda));
                Cyclotomic rhs(r);
                for (int z = 0; z < r; ++z) {
                    Cyclotomic term =
                        Cyclotomic::root_power(r, static_cast<long long>(z) * theta);
                    term *= sigma_k(lambda.comps[z], kk);
                    rhs += term;
                }
                rhs *= Rational(1, falling_factorial(BigInt(n), kk));
                single_cycle = single_cycle && (lhs == rhs);
            }
        }
    rep["orthogonality"] = orth;
    rep["branching"] = branching;
    rep["single_cycle_identity"] = single_cycle;
    return orth && branching && single_cycle ? kExitPass : kExitCheckFailed;
}

int run_expand(int k, int y, int r, int n, bool check, const std::string& out, json& rep) {
    if (k < 1) throw UsageError("k must be >= 1");
    if (n < 1) throw UsageError("n must be >= 1");
    AbelianGroupSpec T(r);
    std::ostringstream text;
    std::vector<MainTerm> terms = main_terms(k, y, T, n);
    text << "E[J_{n+1}^" << k << " (y=" << y << ", (n+1))] main terms at n=" << n << ", r=" << r
         << ":\n";
    if (terms.empty()) text << "  (empty: Ybar_" << k << " contributes nothing)\n";
    for (const MainTerm& t : terms) {
        text << "  sigma=" << t.sigma.sigma.to_string() << "  class=" << t.cls.to_string()
             << "  normalized=" << t.prefactor << "*n^" << t.n_power
             << "  per-element=" << t.normalized_coefficient(n) << "/" << class_size(t.cls, n)
             << "\n";
    }
    json jterms = json::array();
    for (const MainTerm& t : terms)
        jterms.push_back({{"sigma", t.sigma.sigma.to_string()},
                          {"class", t.cls.to_string()},
                          {"prefactor", t.prefactor.convert_to<long long>()},
                          {"n_power", t.n_power},
                          {"raw_coefficient", to_double(t.raw_coefficient(n))}});
    rep["terms"] = std::move(jterms);
    if (check) {
        CompareReport cmp = compare_bruteforce(k, y, T, n);
        text << "class,exact,main,abs_error,rel_error\n";
        for (const ClassComparison& row : cmp.rows) {
            text << row.cls.to_string() << ',' << fmt(to_double(row.exact_coeff)) << ','
                 << fmt(to_double(row.main_coeff)) << ',' << fmt(to_double(row.abs_error()))
                 << ',' << (row.in_main ? fmt(to_double(row.rel_error())) : "residual") << "\n";
        }
        rep["max_rel_error"] = to_double(cmp.max_rel_error());
    }
    write_text(out, text.str());
    return kExitPass;
}

int run_shape(const CampaignConfig& cfg, double t, int points, const std::string& out,
              json& rep) {
    AbelianGroupSpec T(cfg.r);
    std::vector<FreeCumulantSequenceF> r0 =
        ensemble_initial_cumulants(cfg.ensemble, cfg.n, T, 2 * points);
    std::ostringstream text;
    json comps = json::array();
    for (int z = 0; z < cfg.r; ++z) {
        FreeCumulantSequenceF evolved = evolve_cumulants(r0[z], t, cfg.pausing.mean, cfg.r);
        MomentSequenceF mom = cumulants_to_moments(evolved, 2 * points);
        AtomicMeasure q = quadrature_measure(mom, points);
        RectangularProfileF prof = markov_inverse(q);
        json jv = json::array(), jp = json::array();
        text << "zeta=" << z << " t=" << fmt(t) << "\n  valleys:";
        for (double v : prof.valleys) {
            text << ' ' << fmt(v);
            jv.push_back(v);
        }
        text << "\n  peaks:";
        for (double p : prof.peaks) {
            text << ' ' << fmt(p);
            jp.push_back(p);
        }
        text << "\n";
        comps.push_back({{"zeta", z}, {"valleys", jv}, {"peaks", jp}});
    }
    rep["components"] = std::move(comps);
    write_text(out, text.str());
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorics and dynamics of Jucys-Murphy elements in wreath products"};
    app.require_subcommand(1);

    int n = 3, r = 2, k = 2, kmax = 4, y = 0, points = 4, sample = 0;
    long paths = 200;
    std::uint64_t seed = 1;
    double mean = 1.0, gamma_shape = 2.0, shape_t = 1.0;
    std::string pausing = "exponential", ensemble = "plancherel", out, config_path,
                tlist = "1.0", klist = "2,3";
    bool check = false;

    CLI::App* verify = app.add_subcommand("verify", "run an exact verification suite");
    std::string suite;
    verify->add_option("suite", suite, "biane | jm-expansion | eigen | stationarity | characters")
        ->required();
    verify->add_option("--n", n, "degree");
    verify->add_option("--r", r, "order of the cyclic group T = Z_r");
    verify->add_option("--kmax", kmax, "largest JM power");
    verify->add_option("--sample", sample, "cap multipartitions per degree (0 = all)");
    verify->add_option("--paths", paths, "Monte Carlo paths");
    verify->add_option("--seed", seed, "master seed");
    verify->add_option("--out", out, "write the JSON report here (default stdout)");

    CLI::App* expand =
        app.add_subcommand("expand", "print the main-term expansion of E[J^k (y,.)]");
    expand->add_option("--k", k, "JM power")->required();
    expand->add_option("--y", y, "color in Z_r");
    expand->add_option("--r", r, "order of T");
    expand->add_option("--n", n, "degree");
    expand->add_flag("--check", check, "append the brute-force diff table");
    expand->add_option("--out", out, "output file (default stdout)");

    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo moment campaign");
    simulate->add_option("--config", config_path, "flat key=value config file");
    simulate->add_option("--n", n, "degree");
    simulate->add_option("--r", r, "order of T");
    simulate->add_option("--t", tlist, "comma list of macroscopic times");
    simulate->add_option("--k", klist, "comma list of moment orders");
    simulate->add_option("--paths", paths, "number of paths");
    simulate->add_option("--seed", seed, "master seed");
    simulate->add_option("--mean", mean, "pausing mean");
    simulate->add_option("--pausing", pausing, "exponential | gamma | table:<file>");
    simulate->add_option("--gamma-shape", gamma_shape, "shape for the gamma family");
    simulate->add_option("--ensemble", ensemble,
                         "plancherel | rect:RxC@Z | mp:<spec> | mixture:<file>");
    simulate->add_option("--out", out, "output prefix: writes <out>.csv and <out>.json");

    CLI::App* shape = app.add_subcommand("shape", "valley/peak lists of the predicted limit shape");
    shape->add_option("--n", n, "degree of the initial ensemble");
    shape->add_option("--r", r, "order of T");
    shape->add_option("--t", shape_t, "macroscopic time");
    shape->add_option("--mean", mean, "pausing mean");
    shape->add_option("--points", points, "quadrature points");
    shape->add_option("--ensemble", ensemble, "initial ensemble spec");
    shape->add_option("--out", out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    json rep;
    rep["schema"] = "wreath-shapes-report-v1";
    try {
        int code = kExitPass;
        if (verify->parsed()) {
            rep["suite"] = suite;
            rep["n"] = n;
            rep["r"] = r;
            if (suite == "biane") code = verify_biane_suite(n, r, kmax, sample, rep);
            else if (suite == "jm-expansion") code = verify_jm_suite(n, r, kmax, rep);
            else if (suite == "eigen") code = verify_eigen_suite(n, r, rep);
            else if (suite == "stationarity")
                code = verify_stationarity_suite(n, r, paths, seed, rep);
            else if (suite == "characters") code = verify_characters_suite(n, r, rep);
            else throw UsageError("unknown suite: " + suite);
            rep["status"] = code == kExitPass ? "pass" : "fail";
            write_text(out, rep.dump(2) + "\n");
        } else if (expand->parsed()) {
            code = run_expand(k, y, r, n, check, out, rep);
        } else if (simulate->parsed()) {
            // precedence: explicit flags > config file > defaults
            if (!config_path.empty()) {
                auto kv = read_config_file(config_path);
                auto want = [&](const char* key, const CLI::Option* opt) {
                    return kv.count(key) && opt->count() == 0;
                };
                if (want("n", simulate->get_option("--n"))) n = std::stoi(kv["n"]);
                if (want("r", simulate->get_option("--r"))) r = std::stoi(kv["r"]);
                if (want("t", simulate->get_option("--t"))) tlist = kv["t"];
                if (want("k", simulate->get_option("--k"))) klist = kv["k"];
                if (want("paths", simulate->get_option("--paths"))) paths = std::stol(kv["paths"]);
                if (want("seed", simulate->get_option("--seed"))) seed = std::stoull(kv["seed"]);
                if (want("mean", simulate->get_option("--mean"))) mean = std::stod(kv["mean"]);
                if (want("pausing", simulate->get_option("--pausing"))) pausing = kv["pausing"];
                if (want("gamma-shape", simulate->get_option("--gamma-shape")))
                    gamma_shape = std::stod(kv["gamma-shape"]);
                if (want("ensemble", simulate->get_option("--ensemble"))) ensemble = kv["ensemble"];
                if (want("out", simulate->get_option("--out"))) out = kv["out"];
            }
            CampaignConfig cfg;
            cfg.n = n;
            cfg.r = r;
            cfg.pausing = parse_pausing(pausing, mean, gamma_shape);
            cfg.ensemble = parse_ensemble(ensemble, n, r);
            cfg.times = parse_double_list(tlist);
            cfg.orders = parse_int_list(klist);
            cfg.paths = paths;
            cfg.seed = seed;
            CampaignResult res = run_campaign(cfg);
            std::string csv = campaign_csv(res);
            rep["n"] = cfg.n;
            rep["r"] = cfg.r;
            rep["paths"] = cfg.paths;
            rep["seed"] = cfg.seed;
            rep["pausing"] = cfg.pausing.family_name();
            rep["mean"] = cfg.pausing.mean;
            rep["ensemble"] = cfg.ensemble.describe();
            json cells = json::array();
            bool all_within = true;
            for (const CampaignCell& cell : res.cells) {
                bool within = std::abs(cell.zscore) <= 3.0;
                all_within = all_within && within;
                cells.push_back({{"t", cell.t},
                                 {"zeta", cell.zeta},
                                 {"k", cell.k},
                                 {"estimate", cell.estimate.value},
                                 {"stderr", cell.estimate.std_error},
                                 {"predicted", cell.predicted},
                                 {"zscore", cell.zscore},
                                 {"within_3se", within}});
            }
            rep["cells"] = std::move(cells);
            rep["status"] = all_within ? "pass" : "fail";
            if (out.empty()) {
                std::cout << csv;
                std::cout << rep.dump(2) << "\n";
            } else {
                write_text(out + ".csv", csv);
                write_text(out + ".json", rep.dump(2) + "\n");
            }
            code = all_within ? kExitPass : kExitCheckFailed;
        } else if (shape->parsed()) {
            CampaignConfig cfg;
            cfg.n = n;
            cfg.r = r;
            cfg.pausing = parse_pausing(pausing, mean, gamma_shape);
            cfg.ensemble = parse_ensemble(ensemble, n, r);
            code = run_shape(cfg, shape_t, points, out, rep);
        }
        return code;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}
