#include "wreath_shapes/wreath_group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wreath {

WreathElement WreathElement::identity(int m) {
    WreathElement e;
    e.colors.assign(m, 0);
    e.perm.resize(m);
    std::iota(e.perm.begin(), e.perm.end(), 0);
    return e;
}

bool WreathElement::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (colors[i] != 0 || perm[i] != i) return false;
    return true;
}

std::string WreathElement::to_string() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < degree(); ++i) {
        if (i) os << ',';
        os << int(colors[i]);
    }
    os << ';';
    for (int i = 0; i < degree(); ++i) {
        if (i) os << ',';
        os << int(perm[i]) + 1;
    }
    os << ']';
    return os.str();
}

WreathElement wreath_mul(const WreathElement& a, const WreathElement& b, int r) {
    int m = a.degree();
    if (m != b.degree()) throw std::invalid_argument("wreath_mul: degree mismatch");
    WreathElement c;
    c.colors.resize(m);
    c.perm.resize(m);
    for (int i = 0; i < m; ++i) {
        c.perm[i] = a.perm[b.perm[i]];
        // (a.w . b.d)_j = b.d_{a.w^{-1}(j)}; accumulate at j = a.w(i)
        c.colors[a.perm[i]] = static_cast<uint8_t>((a.colors[a.perm[i]] + b.colors[i]) % r);
    }
    return c;
}

WreathElement wreath_inv(const WreathElement& a, int r) {
    int m = a.degree();
    WreathElement b;
    b.colors.resize(m);
    b.perm.resize(m);
    for (int i = 0; i < m; ++i) {
        b.perm[a.perm[i]] = static_cast<uint8_t>(i);
        b.colors[i] = static_cast<uint8_t>((r - a.colors[a.perm[i]] % r) % r);
    }
    return b;
}

int ConjType::reduced_size() const {
    int s = 0;
    for (const YoungDiagram& d : rho) s += d.size();
    return s;
}

int ConjType::reduced_length() const {
    int l = 0;
    for (const YoungDiagram& d : rho) l += d.rows();
    return l;
}

YoungDiagram ConjType::padded_identity_part() const {
    std::vector<int> parts = rho[0].parts();
    int pad = degree - reduced_size();
    if (pad < 0) throw std::invalid_argument("ConjType: type larger than degree");
    parts.insert(parts.end(), pad, 1);
    return YoungDiagram(std::move(parts));
}

ConjType ConjType::at_degree(int n) const {
    if (reduced_size() > n) throw std::invalid_argument("ConjType: type larger than degree");
    ConjType t = *this;
    t.degree = n;
    return t;
}

std::string ConjType::to_string() const {
    std::ostringstream os;
    bool any = false;
    for (int x = 0; x < r(); ++x) {
        if (rho[x].is_empty()) continue;
        os << rho[x].to_string() << '_' << x;
        any = true;
    }
    if (!any) os << "e";
    os << "@" << degree;
    return os.str();
}

ConjType make_conj_type(std::vector<YoungDiagram> per_color, int degree) {
    if (per_color.empty()) throw std::invalid_argument("make_conj_type: need >= 1 color");
    // reduce: drop 1-rows of color e_T
    std::vector<int> kept;
    for (int p : per_color[0].parts())
        if (p != 1) kept.push_back(p);
    per_color[0] = YoungDiagram(std::move(kept));
    ConjType t;
    t.rho = std::move(per_color);
    t.degree = degree;
    if (t.reduced_size() > degree) throw std::invalid_argument("make_conj_type: size exceeds degree");
    return t;
}

AlgebraElement AlgebraElement::unit(int degree, int r) {
    AlgebraElement a(degree, r);
    a.add_term(WreathElement::identity(degree), 1);
    return a;
}

Rational AlgebraElement::coefficient(const WreathElement& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_term(const WreathElement& g, const Rational& c) {
    if (c == 0) return;
    if (g.degree() != degree_) throw std::invalid_argument("AlgebraElement: degree mismatch");
    auto [it, fresh] = terms_.emplace(g, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    if (degree_ != o.degree_ || r_ != o.r_)
        throw std::invalid_argument("AlgebraElement: degree mismatch");
    for (const auto& [g, c] : o.terms_) add_term(g, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    if (degree_ != o.degree_ || r_ != o.r_)
        throw std::invalid_argument("AlgebraElement: degree mismatch");
    for (const auto& [g, c] : o.terms_) add_term(g, -c);
    return *this;
}

AlgebraElement& AlgebraElement::scale(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [g, v] : terms_) v *= c;
    return *this;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b, long long term_budget) {
    if (a.degree() != b.degree() || a.group_r() != b.group_r())
        throw std::invalid_argument("multiply: degree mismatch");
    long long pairs = static_cast<long long>(a.support_size()) * b.support_size();
    if (pairs > term_budget) throw std::length_error("multiply: term budget exceeded");
    AlgebraElement c(a.degree(), a.group_r());
    for (const auto& [ga, ca] : a.terms())
        for (const auto& [gb, cb] : b.terms())
            c.add_term(wreath_mul(ga, gb, a.group_r()), ca * cb);
    return c;
}

AlgebraElement conjugate(const AlgebraElement& a, const WreathElement& g) {
    AlgebraElement out(a.degree(), a.group_r());
    WreathElement gi = wreath_inv(g, a.group_r());
    for (const auto& [h, c] : a.terms())
        out.add_term(wreath_mul(wreath_mul(g, h, a.group_r()), gi, a.group_r()), c);
    return out;
}

ConjType conj_type_of(const WreathElement& g, int r) {
    int m = g.degree();
    std::vector<std::vector<int>> parts(r);
    std::vector<bool> seen(m, false);
    for (int i = 0; i < m; ++i) {
        if (seen[i]) continue;
        int len = 0, color = 0, j = i;
        do {
            seen[j] = true;
            color = (color + g.colors[j]) % r;
            j = g.perm[j];
            ++len;
        } while (j != i);
        parts[color].push_back(len);
    }
    std::vector<YoungDiagram> rho;
    for (int x = 0; x < r; ++x) {
        std::sort(parts[x].rbegin(), parts[x].rend());
        rho.emplace_back(parts[x]);
    }
    return make_conj_type(std::move(rho), m);
}

namespace {

BigInt z_factor(const YoungDiagram& d) {
    BigInt z = 1;
    for (int j = 1; j <= d.size(); ++j) {
        int mj = d.m(j);
        z *= pow_int(BigInt(j), mj) * factorial(mj);
    }
    return z;
}

}  // namespace

BigInt class_size(const ConjType& rho, int n) {
    if (rho.reduced_size() > n)
        throw std::invalid_argument("class_size: type does not fit in the degree");
    int r = rho.r();
    ConjType t = rho.at_degree(n);
    BigInt num = pow_int(BigInt(r), n) * factorial(n);
    BigInt den = 1;
    for (int x = 0; x < r; ++x) {
        YoungDiagram part = (x == 0) ? t.padded_identity_part() : t.rho[x];
        den *= z_factor(part) * pow_int(BigInt(r), part.rows());
    }
    return num / den;
}

AlgebraElement class_indicator(const ConjType& rho, int n) {
    AbelianGroupSpec T(rho.r());
    ConjType target = rho.at_degree(n);
    AlgebraElement a(n, T.r);
    for (const WreathElement& g : enumerate_group(n, T))
        if (conj_type_of(g, T.r) == target) a.add_term(g, 1);
    if (BigInt(a.support_size()) != class_size(rho, n))
        throw std::logic_error("class_indicator: enumeration disagrees with class_size");
    return a;
}

AlgebraElement jm_element(int n, int theta, const AbelianGroupSpec& T) {
    if (n < 0) throw std::invalid_argument("jm_element: n must be >= 0");
    AlgebraElement a(n + 1, T.r);
    for (int i = 0; i < n; ++i)
        for (int y = 0; y < T.r; ++y) {
            WreathElement g = WreathElement::identity(n + 1);
            g.colors[i] = static_cast<uint8_t>((T.r - y) % T.r);
            g.colors[n] = static_cast<uint8_t>((theta + y) % T.r);
            std::swap(g.perm[i], g.perm[n]);
            a.add_term(g, 1);
        }
    return a;
}

AlgebraElement restrict_E(const AlgebraElement& a) {
    int m = a.degree();
    if (m == 0) throw std::invalid_argument("restrict_E: degree 0 has no last slot");
    AlgebraElement out(m - 1, a.group_r());
    for (const auto& [g, c] : a.terms()) {
        if (g.perm[m - 1] != m - 1 || g.colors[m - 1] != 0) continue;
        WreathElement h;
        h.colors.assign(g.colors.begin(), g.colors.end() - 1);
        h.perm.assign(g.perm.begin(), g.perm.end() - 1);
        out.add_term(h, c);
    }
    return out;
}

AlgebraElement include_into(const AlgebraElement& a, int bigger_degree) {
    if (bigger_degree < a.degree())
        throw std::invalid_argument("include_into: target degree too small");
    AlgebraElement out(bigger_degree, a.group_r());
    for (const auto& [g, c] : a.terms()) {
        WreathElement h = WreathElement::identity(bigger_degree);
        std::copy(g.colors.begin(), g.colors.end(), h.colors.begin());
        std::copy(g.perm.begin(), g.perm.end(), h.perm.begin());
        out.add_term(h, c);
    }
    return out;
}

AlgebraElement jm_moment_bruteforce(int k, int y, int n, const AbelianGroupSpec& T,
                                    long long term_budget) {
    if (k < 1) throw std::invalid_argument("jm_moment_bruteforce: k must be >= 1");
    double raw = std::pow(static_cast<double>(n) * T.r, k);
    if (raw > static_cast<double>(term_budget))
        throw std::length_error("jm_moment_bruteforce: (n|T|)^k exceeds the term budget");
    AlgebraElement acc(n + 1, T.r);
    WreathElement start = WreathElement::identity(n + 1);
    start.colors[n] = static_cast<uint8_t>(((y % T.r) + T.r) % T.r);
    acc.add_term(start, 1);
    AlgebraElement jm = jm_element(n, 0, T);
    for (int step = 0; step < k; ++step) acc = multiply(jm, acc, term_budget);
    return restrict_E(acc);
}

std::vector<WreathElement> enumerate_group(int m, const AbelianGroupSpec& T) {
    std::vector<WreathElement> out;
    std::vector<uint8_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<uint8_t> colors(m, 0);
    do {
        // odometer over colors
        std::fill(colors.begin(), colors.end(), 0);
        while (true) {
            WreathElement g;
            g.colors = colors;
            g.perm = perm;
            out.push_back(std::move(g));
            int i = 0;
            while (i < m && colors[i] == T.r - 1) colors[i++] = 0;
            if (i == m) break;
            ++colors[i];
        }
        if (m == 0) break;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<ConjType> enumerate_conj_types(int n, const AbelianGroupSpec& T) {
    // all (rho_x) with total padded size n: compositions of n into r parts,
    // partitions per part
    std::vector<ConjType> out;
    std::vector<YoungDiagram> cur(T.r);
    std::function<void(int, int)> rec = [&](int x, int left) {
        if (x == T.r - 1) {
            for (const YoungDiagram& d : partitions_of(left)) {
                cur[x] = d;
                out.push_back(make_conj_type(cur, n));
            }
            return;
        }
        for (int take = 0; take <= left; ++take)
            for (const YoungDiagram& d : partitions_of(take)) {
                cur[x] = d;
                rec(x + 1, left - take);
            }
    };
    rec(0, n);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace wreath
