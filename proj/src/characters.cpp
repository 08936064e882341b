#include "wreath_shapes/characters.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace wreath {

namespace {

// exact division of integer polynomials (ascending coefficients)
std::vector<BigInt> poly_div_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
    int dn = static_cast<int>(num.size()) - 1;
    int dd = static_cast<int>(den.size()) - 1;
    std::vector<BigInt> q(dn - dd + 1, BigInt(0));
    for (int i = dn; i >= dd; --i) {
        if (num[i] == 0) continue;
        BigInt c = num[i] / den[dd];
        q[i - dd] = c;
        for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (const BigInt& c : num)
        if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return q;
}

}  // namespace

const std::vector<BigInt>& Cyclotomic::cyclotomic_polynomial(int r) {
    static std::map<int, std::vector<BigInt>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(r);
    if (it != cache.end()) return it->second;
    std::function<std::vector<BigInt>(int)> phi = [&](int m) -> std::vector<BigInt> {
        auto hit = cache.find(m);
        if (hit != cache.end()) return hit->second;
        std::vector<BigInt> num(m + 1, BigInt(0));  // x^m - 1
        num[0] = -1;
        num[m] = 1;
        for (int d = 1; d < m; ++d)
            if (m % d == 0) num = poly_div_exact(std::move(num), phi(d));
        cache[m] = num;
        return num;
    };
    phi(r);
    return cache[r];
}

Cyclotomic::Cyclotomic(int r) : r_(r) {
    if (r < 1) throw std::invalid_argument("Cyclotomic: r must be >= 1");
    c_.assign(cyclotomic_polynomial(r).size() - 1, Rational(0));
}

void Cyclotomic::reduce(std::vector<Rational> raw) {
    const std::vector<BigInt>& phi = cyclotomic_polynomial(r_);
    int deg = static_cast<int>(phi.size()) - 1;
    for (int i = static_cast<int>(raw.size()) - 1; i >= deg; --i) {
        if (raw[i] == 0) continue;
        Rational c = raw[i];  // phi is monic
        for (int j = 0; j <= deg; ++j) raw[i - deg + j] -= c * Rational(phi[j]);
    }
    raw.resize(deg, Rational(0));
    while (static_cast<int>(raw.size()) < deg) raw.emplace_back(0);
    c_ = std::move(raw);
}

Cyclotomic Cyclotomic::from_rational(int r, const Rational& q) {
    Cyclotomic z(r);
    z.c_[0] = q;
    return z;
}

Cyclotomic Cyclotomic::root_power(int r, long long j) {
    long long e = ((j % r) + r) % r;
    std::vector<Rational> raw(e + 1, Rational(0));
    raw[e] = 1;
    Cyclotomic z(r);
    z.reduce(std::move(raw));
    return z;
}

bool Cyclotomic::is_zero() const {
    for (const Rational& q : c_)
        if (q != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::as_rational() const {
    if (!is_rational()) throw std::domain_error("Cyclotomic: value is not rational");
    return c_[0];
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> sum(0.0, 0.0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        double angle = 2.0 * M_PI * static_cast<double>(i) / r_;
        sum += to_double(c_[i]) * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return sum;
}

Cyclotomic Cyclotomic::conjugated() const {
    std::vector<Rational> raw(r_, Rational(0));
    if (r_ == 1) return *this;
    for (size_t i = 0; i < c_.size(); ++i) raw[(r_ - i) % r_] += c_[i];
    Cyclotomic z(r_);
    z.reduce(std::move(raw));
    return z;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (r_ != o.r_) throw std::invalid_argument("Cyclotomic: mixed orders");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    if (r_ != o.r_) throw std::invalid_argument("Cyclotomic: mixed orders");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    if (r_ != o.r_) throw std::invalid_argument("Cyclotomic: mixed orders");
    std::vector<Rational> raw(2 * c_.size(), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) raw[i + j] += c_[i] * o.c_[j];
    }
    reduce(std::move(raw));
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& q) {
    for (Rational& c : c_) c *= q;
    return *this;
}

std::string Cyclotomic::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << " + (";
        else os << "(";
        os << c_[i] << ")";
        if (i == 1) os << "w";
        else if (i > 1) os << "w^" << i;
    }
    return os.str();
}

int MultiPartition::n() const {
    int s = 0;
    for (const YoungDiagram& d : comps) s += d.size();
    return s;
}

MultiPartition MultiPartition::with_added_box(int zeta, int row) const {
    MultiPartition m = *this;
    m.comps[zeta] = m.comps[zeta].with_added_box(row);
    return m;
}

MultiPartition MultiPartition::with_removed_box(int zeta, int row) const {
    MultiPartition m = *this;
    m.comps[zeta] = m.comps[zeta].with_removed_box(row);
    return m;
}

std::string MultiPartition::to_string() const {
    std::ostringstream os;
    for (int z = 0; z < r(); ++z) {
        if (z) os << '|';
        os << comps[z].to_string();
    }
    return os.str();
}

std::vector<MultiPartition> enumerate_multipartitions(int n, int r) {
    std::vector<MultiPartition> out;
    std::vector<YoungDiagram> cur(r);
    std::function<void(int, int)> rec = [&](int z, int left) {
        if (z == r - 1) {
            for (const YoungDiagram& d : partitions_of(left)) {
                cur[z] = d;
                out.push_back(MultiPartition{cur});
            }
            return;
        }
        for (int take = 0; take <= left; ++take)
            for (const YoungDiagram& d : partitions_of(take)) {
                cur[z] = d;
                rec(z + 1, left - take);
            }
    };
    if (r < 1) throw std::invalid_argument("enumerate_multipartitions: r must be >= 1");
    rec(0, n);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// beta-set border strip removal: all ways to subtract `len` from one beta
// value, with the Murnaghan-Nakayama sign
struct StripRemoval {
    std::vector<int> new_parts;
    int sign;
};

std::vector<StripRemoval> border_strips(const std::vector<int>& parts, int len) {
    std::vector<StripRemoval> out;
    int l = static_cast<int>(parts.size());
    std::vector<int> beta(l);
    for (int i = 0; i < l; ++i) beta[i] = parts[i] + (l - 1 - i);
    for (int i = 0; i < l; ++i) {
        int target = beta[i] - len;
        if (target < 0) continue;
        bool clash = false;
        int height = 0;
        for (int j = 0; j < l; ++j) {
            if (j == i) continue;
            if (beta[j] == target) clash = true;
            if (beta[j] > target && beta[j] < beta[i]) ++height;
        }
        if (clash) continue;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.rbegin(), nb.rend());
        std::vector<int> np;
        for (int j = 0; j < l; ++j) {
            int part = nb[j] - (l - 1 - j);
            if (part > 0) np.push_back(part);
        }
        out.push_back({std::move(np), height % 2 == 0 ? 1 : -1});
    }
    return out;
}

std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt> mn_cache;
std::mutex mn_mutex;

BigInt mn_rec(const std::vector<int>& lambda, const std::vector<int>& rho) {
    if (rho.empty()) return lambda.empty() ? 1 : 0;
    {
        std::lock_guard<std::mutex> lock(mn_mutex);
        auto it = mn_cache.find({lambda, rho});
        if (it != mn_cache.end()) return it->second;
    }
    std::vector<int> rest(rho.begin() + 1, rho.end());
    BigInt total = 0;
    for (const StripRemoval& s : border_strips(lambda, rho[0]))
        total += s.sign * mn_rec(s.new_parts, rest);
    std::lock_guard<std::mutex> lock(mn_mutex);
    mn_cache.emplace(std::make_pair(lambda, rho), total);
    return total;
}

}  // namespace

BigInt sym_char(const YoungDiagram& lambda, const YoungDiagram& rho) {
    if (lambda.size() != rho.size())
        throw std::invalid_argument("sym_char: |lambda| != |rho|");
    if (lambda.size() == 0) return 1;
    return mn_rec(lambda.parts(), rho.parts());
}

Rational normalized_sym_char_padded(const YoungDiagram& nu, const std::vector<int>& parts) {
    int total = 0;
    for (int p : parts) total += p;
    if (total > nu.size())
        throw std::invalid_argument("normalized_sym_char_padded: parts exceed |nu|");
    std::vector<int> sorted = parts;
    std::sort(sorted.rbegin(), sorted.rend());
    // dim cache local to the call; shapes repeat across removal orders
    std::map<std::vector<int>, BigInt> dims;
    std::function<BigInt(const std::vector<int>&, size_t)> rec =
        [&](const std::vector<int>& shape, size_t idx) -> BigInt {
        if (idx == sorted.size()) {
            auto it = dims.find(shape);
            if (it == dims.end()) it = dims.emplace(shape, dim_sym(YoungDiagram(shape))).first;
            return it->second;
        }
        BigInt total_here = 0;
        for (const StripRemoval& s : border_strips(shape, sorted[idx]))
            total_here += s.sign * rec(s.new_parts, idx + 1);
        return total_here;
    };
    BigInt num = rec(nu.parts(), 0);
    return Rational(num, dim_sym(nu));
}

BigInt wreath_dim(const MultiPartition& lambda) {
    BigInt d = factorial(lambda.n());
    for (const YoungDiagram& comp : lambda.comps) d = d * dim_sym(comp) / factorial(comp.size());
    return d;
}

namespace {

struct CycleGroup {
    int length;
    int color;
    int count;
};

std::vector<CycleGroup> padded_cycle_groups(const ConjType& rho) {
    std::vector<CycleGroup> groups;
    for (int x = 0; x < rho.r(); ++x) {
        YoungDiagram part = (x == 0) ? rho.padded_identity_part() : rho.rho[x];
        for (int j = 1; j <= part.size(); ++j)
            if (int c = part.m(j); c > 0) groups.push_back({j, x, c});
    }
    return groups;
}

std::vector<CycleGroup> reduced_cycle_groups(const ConjType& rho) {
    std::vector<CycleGroup> groups;
    for (int x = 0; x < rho.r(); ++x)
        for (int j = 1; j <= rho.rho[x].size(); ++j)
            if (int c = rho.rho[x].m(j); c > 0) groups.push_back({j, x, c});
    return groups;
}

// Distribute the cycle groups over the components, visiting each leaf with
// the per-component assigned parts, the multinomial weight and the
// root-of-unity exponent. With require_fill the capacities must be consumed
// exactly (padded classes); otherwise slack is allowed (reduced classes).
void assign_rec(const std::vector<CycleGroup>& groups, size_t gi, int r,
                std::vector<int>& capacity, std::vector<std::vector<int>>& assigned,
                BigInt weight, long long root_exp, bool require_fill,
                const std::function<void(const std::vector<std::vector<int>>&, const BigInt&,
                                         long long)>& leaf) {
    if (gi == groups.size()) {
        if (require_fill)
            for (int cap : capacity)
                if (cap != 0) return;
        leaf(assigned, weight, root_exp);
        return;
    }
    const CycleGroup& g = groups[gi];
    // split g.count cycles of size g.length among r components
    std::vector<int> split(r, 0);
    std::function<void(int, int)> split_rec = [&](int zeta, int left) {
        if (zeta == r - 1) {
            if (left * g.length > capacity[zeta]) return;
            split[zeta] = left;
            BigInt w = weight;
            {
                std::vector<unsigned> parts;
                for (int s : split) parts.push_back(static_cast<unsigned>(s));
                w *= multinomial(static_cast<unsigned>(g.count), parts);
            }
            long long e = root_exp;
            for (int z = 0; z < r; ++z) e += static_cast<long long>(z) * g.color * split[z];
            for (int z = 0; z < r; ++z) {
                capacity[z] -= split[z] * g.length;
                for (int c = 0; c < split[z]; ++c) assigned[z].push_back(g.length);
            }
            assign_rec(groups, gi + 1, r, capacity, assigned, w, e, require_fill, leaf);
            for (int z = 0; z < r; ++z) {
                capacity[z] += split[z] * g.length;
                for (int c = 0; c < split[z]; ++c) assigned[z].pop_back();
            }
            split[zeta] = 0;
            return;
        }
        for (int take = 0; take <= left && take * g.length <= capacity[zeta]; ++take) {
            split[zeta] = take;
            split_rec(zeta + 1, left - take);
        }
        split[zeta] = 0;
    };
    split_rec(0, g.count);
}

std::map<std::pair<MultiPartition, ConjType>, Cyclotomic> wc_cache;
std::mutex wc_mutex;

}  // namespace

Cyclotomic wreath_char(const MultiPartition& lambda, const ConjType& rho) {
    int n = lambda.n();
    int r = lambda.r();
    if (rho.r() != r) throw std::invalid_argument("wreath_char: group order mismatch");
    if (rho.reduced_size() > n) throw std::invalid_argument("wreath_char: class does not fit");
    ConjType padded = rho.at_degree(n);
    {
        std::lock_guard<std::mutex> lock(wc_mutex);
        auto it = wc_cache.find({lambda, padded});
        if (it != wc_cache.end()) return it->second;
    }
    std::vector<CycleGroup> groups = padded_cycle_groups(padded);
    std::vector<int> capacity;
    for (const YoungDiagram& comp : lambda.comps) capacity.push_back(comp.size());
    Cyclotomic total(r);
    std::vector<std::vector<int>> assigned(r);
    assign_rec(groups, 0, r, capacity, assigned, BigInt(1), 0, /*require_fill=*/true,
               [&](const std::vector<std::vector<int>>& parts, const BigInt& weight,
                   long long root_exp) {
                   BigInt w = weight;
                   for (int z = 0; z < r; ++z) {
                       std::vector<int> p = parts[z];
                       std::sort(p.rbegin(), p.rend());
                       w *= sym_char(lambda.comps[z], YoungDiagram(p));
                       if (w == 0) return;
                   }
                   Cyclotomic term = Cyclotomic::root_power(r, root_exp);
                   term *= Rational(w);
                   total += term;
               });
    std::lock_guard<std::mutex> lock(wc_mutex);
    wc_cache.emplace(std::make_pair(lambda, padded), total);
    return total;
}

Cyclotomic normalized_wreath_char(const MultiPartition& lambda, const ConjType& rho) {
    int n = lambda.n();
    int r = lambda.r();
    if (rho.r() != r) throw std::invalid_argument("normalized_wreath_char: group order mismatch");
    int k = rho.reduced_size();
    if (k > n) throw std::invalid_argument("normalized_wreath_char: class does not fit");
    std::vector<CycleGroup> groups = reduced_cycle_groups(rho);
    std::vector<int> capacity;
    for (const YoungDiagram& comp : lambda.comps) capacity.push_back(comp.size());
    // capacities only bound the assigned sizes here; slack is absorbed by
    // the padded 1-cycles, weighted by falling factorials below
    Cyclotomic total(r);
    std::vector<std::vector<int>> assigned(r);
    assign_rec(groups, 0, r, capacity, assigned, BigInt(1), 0, /*require_fill=*/false,
               [&](const std::vector<std::vector<int>>& parts, const BigInt& weight,
                   long long root_exp) {
                   Rational w(weight);
                   for (int z = 0; z < r; ++z) {
                       int sz = 0;
                       for (int p : parts[z]) sz += p;
                       w *= Rational(falling_factorial(BigInt(lambda.comps[z].size()),
                                                       static_cast<unsigned>(sz)));
                       if (w == 0) return;
                       w *= normalized_sym_char_padded(lambda.comps[z], parts[z]);
                       if (w == 0) return;
                   }
                   w /= Rational(falling_factorial(BigInt(n), static_cast<unsigned>(k)));
                   Cyclotomic term = Cyclotomic::root_power(r, root_exp);
                   term *= w;
                   total += term;
               });
    return total;
}

Rational sigma_k(const YoungDiagram& nu, int k) {
    if (k < 1) throw std::invalid_argument("sigma_k: k must be >= 1");
    if (k > nu.size()) return 0;
    Rational f(falling_factorial(BigInt(nu.size()), static_cast<unsigned>(k)));
    return f * normalized_sym_char_padded(nu, {k});
}

Rational plancherel_mass(const MultiPartition& lambda) {
    BigInt d = wreath_dim(lambda);
    return Rational(d * d, factorial(lambda.n()) * pow_int(BigInt(lambda.r()), lambda.n()));
}

BianeReport verify_biane(int n, int k, const AbelianGroupSpec& T, const MultiPartition& lambda,
                         long long term_budget) {
    if (lambda.n() != n) throw std::invalid_argument("verify_biane: |lambda| != n");
    if (lambda.r() != T.r) throw std::invalid_argument("verify_biane: order mismatch");
    BianeReport rep;
    BigInt dim = wreath_dim(lambda);

    // normalized character values chi^lambda(E[J^k (y,(n+1))]) / dim
    std::vector<Cyclotomic> char_values;
    for (int y = 0; y < T.r; ++y) {
        AlgebraElement e = jm_moment_bruteforce(k, y, n, T, term_budget);
        Cyclotomic val(T.r);
        // group support by conjugacy type
        std::map<ConjType, Rational> by_type;
        for (const auto& [g, c] : e.terms()) by_type[conj_type_of(g, T.r)] += c;
        for (const auto& [type, coeff] : by_type) {
            Cyclotomic cv = wreath_char(lambda, type);
            cv *= coeff;
            val += cv;
        }
        val *= Rational(1, dim);
        char_values.push_back(val);
    }

    for (int z = 0; z < T.r; ++z)
        rep.moments_per_zeta.push_back(moments(transition_measure(lambda.comps[z]), k).values[k]);

    // (1.15): M_k(m_{lambda^zeta}) = (1/|T|^k) sum_y chi(E)/dim * conj(zeta(y))
    Rational tk = Rational(1, pow_int(BigInt(T.r), static_cast<unsigned>(k)));
    for (int z = 0; z < T.r; ++z) {
        Cyclotomic rhs(T.r);
        for (int y = 0; y < T.r; ++y) {
            Cyclotomic term = char_values[y];
            term *= Cyclotomic::root_power(T.r, -static_cast<long long>(z) * y);
            rhs += term;
        }
        rhs *= tk;
        rep.zeta_equal.push_back(rhs == Cyclotomic::from_rational(T.r, rep.moments_per_zeta[z]));
    }

    // (1.16): chi(E)/dim = |T|^{k-1} sum_zeta M_k(m_{lambda^zeta}) zeta(y)
    Rational tk1(pow_int(BigInt(T.r), static_cast<unsigned>(k - 1)));
    for (int y = 0; y < T.r; ++y) {
        Cyclotomic rhs(T.r);
        for (int z = 0; z < T.r; ++z) {
            Cyclotomic term = Cyclotomic::root_power(T.r, static_cast<long long>(z) * y);
            term *= rep.moments_per_zeta[z];
            rhs += term;
        }
        rhs *= tk1;
        rep.theta_equal.push_back(rhs == char_values[y]);
    }

    rep.all_equal = std::all_of(rep.zeta_equal.begin(), rep.zeta_equal.end(),
                                [](bool b) { return b; }) &&
                    std::all_of(rep.theta_equal.begin(), rep.theta_equal.end(),
                                [](bool b) { return b; });
    return rep;
}

}  // namespace wreath
