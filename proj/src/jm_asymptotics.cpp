#include "wreath_shapes/jm_asymptotics.hpp"

#include "wreath_shapes/freeprob.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace wreath {

ReducedShape::ReducedShape(YoungDiagram s) : sigma(std::move(s)) {
    if (sigma.m(1) != 0) throw std::invalid_argument("ReducedShape: sigma has 1-rows");
    std::vector<int> xs, os;
    for (int p : sigma.parts()) {
        xs.push_back(p - 1);
        if (p - 1 >= 2) os.push_back(p - 1);
    }
    sigma_x = YoungDiagram(std::move(xs));
    sigma_o = YoungDiagram(std::move(os));
}

std::vector<ReducedShape> reduced_shapes(int k) {
    std::vector<ReducedShape> out;
    for (const YoungDiagram& s : partitions_of(k))
        if (s.m(1) == 0) out.emplace_back(s);
    return out;
}

std::vector<Labeling> star_labelings(const ReducedShape& sigma, int y, const AbelianGroupSpec& T) {
    int r = T.r;
    int yy = ((y % r) + r) % r;
    int max_len = sigma.sigma_x.is_empty() ? 0 : sigma.sigma_x.part(1);
    std::vector<Labeling> out;
    Labeling cur;
    cur.counts.assign(r, std::vector<int>(std::max(max_len, 1), 0));
    // choose n_i^x for x in T^0 row-length by row-length, tracking the color sum
    std::function<void(int, int)> rec = [&](int i, int color_sum) {
        if (i > max_len) {
            if (color_sum % r == yy) {
                Labeling done = cur;
                for (int len = 1; len <= max_len; ++len) {
                    int used = 0;
                    for (int x = 1; x < r; ++x) used += done.counts[x][len - 1];
                    done.counts[0][len - 1] = sigma.sigma_x.m(len) - used;
                }
                out.push_back(std::move(done));
            }
            return;
        }
        int cap = sigma.sigma_x.m(i);
        // the product constraint counts each labeled row once: sum_x x * n_i^x
        std::function<void(int, int, int)> colors = [&](int x, int used, int csum) {
            if (x == r) {
                rec(i + 1, csum);
                return;
            }
            for (int c = 0; c + used <= cap; ++c) {
                cur.counts[x][i - 1] = c;
                colors(x + 1, used + c, (csum + c * x) % r);
                cur.counts[x][i - 1] = 0;
            }
        };
        colors(1, 0, color_sum);
    };
    rec(1, 0);
    return out;
}

namespace {

ConjType labeling_class(const Labeling& lab, int r, int n) {
    std::vector<YoungDiagram> per_color;
    for (int x = 0; x < r; ++x) {
        std::vector<int> parts;
        for (int len = static_cast<int>(lab.counts[x].size()); len >= 1; --len)
            parts.insert(parts.end(), lab.counts[x][len - 1], len);
        per_color.emplace_back(std::move(parts));
    }
    return make_conj_type(std::move(per_color), n);
}

}  // namespace

Rational MainTerm::normalized_coefficient(int n) const {
    return Rational(prefactor * pow_int(BigInt(n), static_cast<unsigned>(n_power)));
}

Rational MainTerm::raw_coefficient(int n) const {
    return normalized_coefficient(n) / Rational(class_size(cls, n));
}

std::vector<MainTerm> main_terms(int k, int y, const AbelianGroupSpec& T, int n) {
    if (k < 1) throw std::invalid_argument("main_terms: k must be >= 1");
    std::vector<MainTerm> out;
    for (const ReducedShape& shape : reduced_shapes(k)) {
        BigInt nc = nc_count(shape.sigma);
        int npow = k - shape.length();
        BigInt base = nc * pow_int(BigInt(T.r), static_cast<unsigned>(npow));
        for (const Labeling& lab : star_labelings(shape, y, T)) {
            BigInt pref = base;
            for (int len = 1; len <= static_cast<int>(lab.counts[0].size()); ++len) {
                if (shape.sigma_x.m(len) == 0) continue;
                std::vector<unsigned> split;
                for (int x = 0; x < T.r; ++x)
                    split.push_back(static_cast<unsigned>(lab.counts[x][len - 1]));
                pref *= multinomial(static_cast<unsigned>(shape.sigma_x.m(len)), split);
            }
            MainTerm term{shape, lab, labeling_class(lab, T.r, n), pref, npow};
            out.push_back(std::move(term));
        }
    }
    return out;
}

Rational ClassComparison::abs_error() const {
    Rational d = exact_coeff - main_coeff;
    return d < 0 ? -d : d;
}

Rational ClassComparison::rel_error() const {
    if (main_coeff == 0) throw std::logic_error("rel_error: class has no main term");
    Rational m = main_coeff < 0 ? -main_coeff : main_coeff;
    return abs_error() / m;
}

Rational CompareReport::max_rel_error() const {
    Rational best = 0;
    for (const ClassComparison& c : rows)
        if (c.in_main) best = std::max(best, c.rel_error());
    return best;
}

std::vector<ClassComparison> CompareReport::residual_classes() const {
    std::vector<ClassComparison> out;
    for (const ClassComparison& c : rows)
        if (c.in_exact && !c.in_main) out.push_back(c);
    return out;
}

CompareReport compare_bruteforce(int k, int y, const AbelianGroupSpec& T, int n,
                                 long long term_budget) {
    CompareReport rep{k, y, n, T.r, {}};
    AlgebraElement exact = jm_moment_bruteforce(k, y, n, T, term_budget);

    std::map<ConjType, ClassComparison> rows;
    // exact coefficients: constant on each class (centrality); verified here
    for (const auto& [g, c] : exact.terms()) {
        ConjType cls = conj_type_of(g, T.r);
        auto it = rows.find(cls);
        if (it == rows.end()) {
            ClassComparison cc;
            cc.cls = cls;
            cc.exact_coeff = c;
            cc.in_exact = true;
            rows.emplace(cls, std::move(cc));
        } else if (it->second.exact_coeff != c) {
            throw std::logic_error("compare_bruteforce: coefficient not constant on a class");
        }
    }
    for (const MainTerm& t : main_terms(k, y, T, n)) {
        auto it = rows.find(t.cls);
        if (it == rows.end()) {
            ClassComparison cc;
            cc.cls = t.cls;
            cc.main_coeff = t.raw_coefficient(n);
            cc.in_main = true;
            rows.emplace(t.cls, std::move(cc));
        } else {
            it->second.main_coeff += t.raw_coefficient(n);
            it->second.in_main = true;
        }
    }
    for (auto& [cls, row] : rows) rep.rows.push_back(row);
    return rep;
}

}  // namespace wreath
