#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wreath_shapes/freeprob.hpp"
#include "wreath_shapes/jm_asymptotics.hpp"

#include <map>
#include <numeric>

using namespace wreath;

TEST_CASE("reduced shapes: first-column bookkeeping identities, k <= 10") {
    for (int k = 1; k <= 10; ++k)
        for (const ReducedShape& s : reduced_shapes(k)) {
            CHECK(s.sigma.m(1) == 0);
            CHECK(s.sigma_x.rows() == s.sigma.rows());
            CHECK(s.sigma_x.size() == s.sigma.size() - s.sigma.rows());
            for (int j = 2; j <= k; ++j) CHECK(s.sigma.m(j) == s.sigma_x.m(j - 1));
            // walk identity: u + d = k and u - d = |sigma_o| - l(sigma_o)
            CHECK((k - (s.sigma_o.size() - s.sigma_o.rows())) % 2 == 0);
            int d = (k - (s.sigma_o.size() - s.sigma_o.rows())) / 2;
            CHECK(d == s.length());
            CHECK(k - d == s.sigma.size() - s.length());
        }
    CHECK(reduced_shapes(1).empty());
    CHECK(reduced_shapes(4).size() == 2);  // (4) and (2,2)
}

TEST_CASE("star_labelings: pinned examples") {
    AbelianGroupSpec Z2(2);
    ReducedShape two(YoungDiagram({2}));

    auto lab0 = star_labelings(two, 0, Z2);
    REQUIRE(lab0.size() == 1);
    CHECK(lab0[0].count(1, 1) == 0);
    CHECK(lab0[0].count(0, 1) == 1);

    auto labg = star_labelings(two, 1, Z2);
    REQUIRE(labg.size() == 1);
    CHECK(labg[0].count(1, 1) == 1);
    CHECK(labg[0].count(0, 1) == 0);

    ReducedShape twotwo(YoungDiagram({2, 2}));
    auto lab22 = star_labelings(twotwo, 0, Z2);
    REQUIRE(lab22.size() == 2);  // n_1^g in {0, 2}
    std::vector<int> g_counts;
    for (const Labeling& l : lab22) g_counts.push_back(l.count(1, 1));
    std::sort(g_counts.begin(), g_counts.end());
    CHECK(g_counts == std::vector<int>{0, 2});
}

TEST_CASE("main_terms: pinned coefficients") {
    AbelianGroupSpec Z2(2);
    AbelianGroupSpec triv(1);

    // k = 1: Ybar_1 is empty
    CHECK(main_terms(1, 0, Z2, 8).empty());

    // k = 2, y = 0: single term, 2n on the identity class
    auto t20 = main_terms(2, 0, Z2, 8);
    REQUIRE(t20.size() == 1);
    CHECK(t20[0].cls.is_identity());
    CHECK(t20[0].normalized_coefficient(8) == 16);
    CHECK(t20[0].raw_coefficient(8) == 16);  // identity class has size 1

    // k = 2, y = g: 2n A_{(1)_g}/n = 2 A_{(1)_g}
    auto t2g = main_terms(2, 1, Z2, 8);
    REQUIRE(t2g.size() == 1);
    CHECK(t2g[0].cls.rho[1] == YoungDiagram({1}));
    CHECK(t2g[0].raw_coefficient(8) == 2);

    // k = 3, r = 1: sole term n^2 A_{(2)}/|C|
    auto t3 = main_terms(3, 0, triv, 10);
    REQUIRE(t3.size() == 1);
    CHECK(t3[0].sigma.sigma == YoungDiagram({3}));
    CHECK(t3[0].cls.rho[0] == YoungDiagram({2}));
    CHECK(t3[0].normalized_coefficient(10) == 100);

    // k = 4, r = 1: sigma = (4) puts |NC((4))| n^3 on the (3)-cycle class
    bool saw_sigma4 = false;
    for (const MainTerm& t : main_terms(4, 0, triv, 10))
        if (t.sigma.sigma == YoungDiagram({4})) {
            saw_sigma4 = true;
            CHECK(t.cls.rho[0] == YoungDiagram({3}));
            CHECK(t.normalized_coefficient(10) == Rational(nc_count(YoungDiagram({4})) * 1000));
        }
    CHECK(saw_sigma4);
}

TEST_CASE("main-term classes carry sigma_x rows up to missing 1-boxes") {
    for (int r = 1; r <= 2; ++r) {
        AbelianGroupSpec T(r);
        for (int k = 2; k <= 6; ++k)
            for (int y = 0; y < r; ++y)
                for (const MainTerm& t : main_terms(k, y, T, 20)) {
                    // row multiset across colors, with color-0 1-rows
                    // restored from the labeling
                    std::map<int, int> rows;
                    for (int x = 0; x < r; ++x)
                        for (int p : t.cls.rho[x].parts()) ++rows[p];
                    rows[1] += t.labeling.count(0, 1);
                    if (rows[1] == 0) rows.erase(1);
                    std::map<int, int> expect;
                    for (int p : t.sigma.sigma_x.parts()) ++expect[p];
                    CHECK(rows == expect);
                }
    }
}

namespace {

// Walk oracle: enumerate all (i_1..i_k) in {1..n}^k, keep those whose
// product (i_k *) ... (i_1 *) fixes * and uses no semi-up step, and bucket
// them by the shape reconstructed from the terminal type and down count.
std::map<YoungDiagram, long> walk_census(int k, int n) {
    std::map<YoungDiagram, long> census;
    std::vector<int> idx(k, 1);
    int star = n;  // 0-based slot of *
    while (true) {
        std::vector<int> perm(n + 1);
        std::iota(perm.begin(), perm.end(), 0);
        int downs = 0;
        bool semi_up = false;
        std::vector<bool> seen(n + 1, false);
        int cycles_prev = n + 1;
        for (int j = 0; j < k && !semi_up; ++j) {
            int a = idx[j] - 1;
            std::swap(perm[a], perm[star]);  // left-multiply by (a *)
            std::vector<bool> vis(n + 1, false);
            int cycles = 0;
            for (int s = 0; s <= n; ++s) {
                if (vis[s]) continue;
                ++cycles;
                for (int t = s; !vis[t]; t = perm[t]) vis[t] = true;
            }
            bool up = cycles < cycles_prev;  // support grew
            bool repeat = seen[a];
            if (up && repeat) semi_up = true;
            if (!up) ++downs;
            seen[a] = true;
            cycles_prev = cycles;
        }
        if (!semi_up && perm[star] == star) {
            std::vector<bool> vis(n + 1, false);
            vis[star] = true;
            std::vector<int> nontrivial;
            for (int s = 0; s < n; ++s) {
                if (vis[s]) continue;
                int len = 0;
                for (int t = s; !vis[t]; t = perm[t]) {
                    vis[t] = true;
                    ++len;
                }
                if (len > 1) nontrivial.push_back(len);
            }
            std::sort(nontrivial.rbegin(), nontrivial.rend());
            YoungDiagram sigma_o(nontrivial);
            // sigma: m_j = m_{j-1}(sigma_o) for j >= 3, m_2 = downs - l(sigma_o)
            std::vector<int> parts;
            for (int p : nontrivial) parts.push_back(p + 1);
            int m2 = downs - sigma_o.rows();
            REQUIRE(m2 >= 0);
            parts.insert(parts.end(), m2, 2);
            std::sort(parts.rbegin(), parts.rend());
            YoungDiagram sigma(parts);
            REQUIRE(sigma.size() == k);
            ++census[sigma];
        }
        // odometer over the index tuple
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == n) idx[pos--] = 1;
        if (pos < 0) break;
        ++idx[pos];
    }
    return census;
}

}  // namespace

TEST_CASE("walk semantics: strict-up walks count as |NC(sigma)| times injective fillings") {
    for (int n = 4; n <= 8; n += 2)
        for (int k = 2; k <= (n >= 8 ? 6 : 5); ++k) {
            std::map<YoungDiagram, long> census = walk_census(k, n);
            long expected_total = 0;
            for (const ReducedShape& s : reduced_shapes(k)) {
                BigInt expect =
                    nc_count(s.sigma) *
                    falling_factorial(BigInt(n), static_cast<unsigned>(k - s.length()));
                auto it = census.find(s.sigma);
                BigInt got = it == census.end() ? 0 : BigInt(it->second);
                CHECK(got == expect);
                if (it != census.end()) expected_total += it->second;
            }
            long total = 0;
            for (auto& [sigma, count] : census) total += count;
            CHECK(total == expected_total);  // nothing lands outside Ybar_k
        }
}

TEST_CASE("compare_bruteforce: k = 2 is exact for n <= 8") {
    for (int r = 1; r <= 2; ++r) {
        AbelianGroupSpec T(r);
        for (int n = 1; n <= 8; ++n)
            for (int y = 0; y < r; ++y) {
                CompareReport rep = compare_bruteforce(2, y, T, n);
                for (const ClassComparison& row : rep.rows) {
                    CHECK(row.in_main);
                    CHECK(row.in_exact);
                    CHECK(row.abs_error() == 0);
                }
            }
    }
}

TEST_CASE("compare_bruteforce: k = 3 relative error halves from n = 6 to n = 12") {
    AbelianGroupSpec triv(1);
    Rational r6 = compare_bruteforce(3, 0, triv, 6).max_rel_error();
    Rational r12 = compare_bruteforce(3, 0, triv, 12).max_rel_error();
    CHECK(r6 > 0);
    CHECK(r12 < r6);
    Rational ratio = r12 / r6;
    CHECK(ratio <= Rational(65, 100));
    CHECK(ratio >= Rational(3, 10));
}

TEST_CASE("compare_bruteforce: residual gap stays one power of n below the main term") {
    for (int r = 1; r <= 2; ++r) {
        AbelianGroupSpec T(r);
        for (int k = 3; k <= 4; ++k)
            for (int y = 0; y < r; ++y) {
                // class label -> (n -> normalized gap), and the main-term
                // power per class
                std::map<std::string, std::map<int, double>> gaps;
                std::map<std::string, int> power;
                for (int n : {6, 12}) {
                    std::map<ConjType, int> npow;
                    for (const MainTerm& t : main_terms(k, y, T, n)) npow[t.cls] = t.n_power;
                    CompareReport rep = compare_bruteforce(k, y, T, n);
                    for (const ClassComparison& row : rep.rows) {
                        if (!row.in_main) continue;
                        Rational gap = row.abs_error() * Rational(class_size(row.cls, n));
                        std::string label;
                        for (const YoungDiagram& d : row.cls.rho) label += d.to_string();
                        gaps[label][n] = to_double(gap);
                        power[label] = npow[row.cls];
                    }
                }
                for (auto& [label, by_n] : gaps) {
                    if (!by_n.count(6) || !by_n.count(12) || by_n[6] == 0) continue;
                    double growth = by_n[12] / by_n[6];
                    // a full main-term order would grow like 2^npow
                    CHECK(growth < std::pow(2.0, power[label]) * 0.75);
                }
            }
    }
}

TEST_CASE("compare_bruteforce: exact equals main at n = 1 for k = 2") {
    AbelianGroupSpec Z2(2);
    CompareReport rep = compare_bruteforce(2, 0, Z2, 1);
    REQUIRE(rep.rows.size() == 1);
    CHECK(rep.rows[0].exact_coeff == 2);
    CHECK(rep.rows[0].main_coeff == 2);
}

TEST_CASE("input validation") {
    AbelianGroupSpec Z2(2);
    CHECK_THROWS_AS(ReducedShape(YoungDiagram({2, 1})), std::invalid_argument);
    CHECK_THROWS_AS(main_terms(0, 0, Z2, 4), std::invalid_argument);
}
