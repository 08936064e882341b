#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wreath_shapes/diagrams.hpp"
#include "wreath_shapes/freeprob.hpp"

#include <cmath>
#include <random>

using namespace wreath;

TEST_CASE("transition_measure: small diagrams") {
    AtomicMeasure m0 = transition_measure(YoungDiagram::empty());
    CHECK(m0.atoms() == std::vector<Rational>{Rational(0)});
    CHECK(m0.weights() == std::vector<Rational>{Rational(1)});

    AtomicMeasure m1 = transition_measure(YoungDiagram({1}));
    CHECK(m1.atoms() == std::vector<Rational>{Rational(-1), Rational(1)});
    CHECK(m1.weights() == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});

    AtomicMeasure m21 = transition_measure(YoungDiagram({2, 1}));
    CHECK(m21.atoms() == std::vector<Rational>{Rational(-2), Rational(0), Rational(2)});
    CHECK(m21.weights() ==
          std::vector<Rational>{Rational(3, 8), Rational(1, 4), Rational(3, 8)});
}

TEST_CASE("transition_measure: corner-weight path vs dim_sym definition, all |lambda| <= 8") {
    for (int n = 0; n <= 8; ++n)
        for (const YoungDiagram& d : partitions_of(n)) {
            AtomicMeasure m = transition_measure(d);
            auto corners = addable_cells(d);
            REQUIRE(static_cast<size_t>(m.support_size()) == corners.size());
            Rational sum = 0;
            for (size_t i = 0; i < corners.size(); ++i) {
                YoungDiagram up = d.with_added_box(corners[i].row);
                CHECK(m.weights()[i] ==
                      Rational(dim_sym(up), BigInt(n + 1) * dim_sym(d)));
                sum += m.weights()[i];
            }
            CHECK(sum == 1);
        }
}

TEST_CASE("moments: examples and the M_1 = 0, M_2 = n law") {
    AtomicMeasure d0 = transition_measure(YoungDiagram::empty());
    MomentSequence md0 = moments(d0, 6);
    for (int j = 1; j <= 6; ++j) CHECK(md0.values[j] == 0);

    MomentSequence m21 = moments(transition_measure(YoungDiagram({2, 1})), 4);
    CHECK(m21.values[1] == 0);
    CHECK(m21.values[2] == 3);
    CHECK(m21.values[3] == 0);
    CHECK(m21.values[4] == 12);

    MomentSequence m1 = moments(transition_measure(YoungDiagram({1})), 4);
    CHECK(m1.values[2] == 1);
    CHECK(m1.values[4] == 1);

    for (int n = 0; n <= 8; ++n)
        for (const YoungDiagram& d : partitions_of(n)) {
            MomentSequence ms = moments(transition_measure(d), 2);
            CHECK(ms.values[1] == 0);
            CHECK(ms.values[2] == n);
        }
}

TEST_CASE("moment/cumulant conversion: pinned examples") {
    MomentSequence semicircle;
    semicircle.values = {Rational(1), Rational(0), Rational(1), Rational(0), Rational(2)};
    FreeCumulantSequence r = moments_to_cumulants(semicircle);
    CHECK(r.values[1] == 0);
    CHECK(r.values[2] == 1);
    CHECK(r.values[3] == 0);
    CHECK(r.values[4] == 0);

    MomentSequence bern;  // measure m_{(1)}
    bern.values = {Rational(1), Rational(0), Rational(1), Rational(0), Rational(1)};
    FreeCumulantSequence rb = moments_to_cumulants(bern);
    CHECK(rb.values[2] == 1);
    CHECK(rb.values[4] == -1);

    FreeCumulantSequence zero;
    zero.values.assign(7, Rational(0));
    MomentSequence mz = cumulants_to_moments(zero, 6);
    for (int j = 1; j <= 6; ++j) CHECK(mz.values[j] == 0);
}

TEST_CASE("moment/cumulant conversion: recursion equals NC-sum oracle, k <= 8") {
    std::mt19937 rng(20240811u);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    for (int rep = 0; rep < 25; ++rep) {
        FreeCumulantSequence r;
        r.values.assign(9, Rational(0));
        for (int j = 1; j <= 8; ++j) r.values[j] = Rational(num(rng), den(rng));
        MomentSequence fast = cumulants_to_moments(r, 8);
        MomentSequence oracle = moments_from_cumulants_nc_sum(r, 8);
        for (int j = 0; j <= 8; ++j) CHECK(fast.values[j] == oracle.values[j]);
    }
}

TEST_CASE("moment/cumulant round trip on random rational sequences of length 10") {
    std::mt19937 rng(777u);
    std::uniform_int_distribution<int> num(-12, 12), den(1, 7);
    for (int rep = 0; rep < 100; ++rep) {
        MomentSequence m;
        m.values.assign(11, Rational(1));
        for (int j = 1; j <= 10; ++j) m.values[j] = Rational(num(rng), den(rng));
        FreeCumulantSequence r = moments_to_cumulants(m);
        MomentSequence back = cumulants_to_moments(r, 10);
        for (int j = 0; j <= 10; ++j) CHECK(back.values[j] == m.values[j]);
    }
}

TEST_CASE("markov_inverse: degenerate and two/three atom cases") {
    AtomicMeasure d0 = transition_measure(YoungDiagram::empty());
    RectangularProfile p0 = markov_inverse_exact(d0);
    CHECK(p0.valleys == std::vector<Rational>{Rational(0)});
    CHECK(p0.peaks.empty());

    AtomicMeasure m1 = transition_measure(YoungDiagram({1}));
    RectangularProfile p1 = markov_inverse_exact(m1);
    CHECK(p1.peaks == std::vector<Rational>{Rational(0)});

    AtomicMeasure m21 = transition_measure(YoungDiagram({2, 1}));
    RectangularProfile p21 = markov_inverse_exact(m21);
    CHECK(p21.peaks == std::vector<Rational>{Rational(-1), Rational(1)});

    RectangularProfileF pf = markov_inverse(m21);
    REQUIRE(pf.peaks.size() == 2);
    CHECK(pf.peaks[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(pf.peaks[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("markov_inverse of transition_measure recovers the profile, all |lambda| <= 8") {
    for (int n = 0; n <= 8; ++n)
        for (const YoungDiagram& d : partitions_of(n)) {
            RectangularProfile expect = profile(d);
            RectangularProfile got = markov_inverse_exact(transition_measure(d));
            CHECK(got.valleys == expect.valleys);
            CHECK(got.peaks == expect.peaks);
        }
}

TEST_CASE("nc counts: examples, and formula vs enumeration for k <= 8") {
    for (int k = 1; k <= 6; ++k) CHECK(nc_count(YoungDiagram({k})) == 1);
    CHECK(nc_count(YoungDiagram({2, 2})) == 2);
    CHECK(nc_count(YoungDiagram({3, 2})) == 5);

    for (int k = 1; k <= 8; ++k)
        for (const YoungDiagram& sigma : partitions_of(k)) {
            auto parts = nc_enumerate(sigma);
            CHECK(nc_count(sigma) == BigInt(parts.size()));
            for (const NoncrossingPartition& p : parts) {
                CHECK(is_noncrossing(p.blocks));
                CHECK(p.block_type() == sigma);
            }
        }
}

TEST_CASE("non-crossing sanity: total NC(k) is the Catalan number") {
    const long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (int k = 1; k <= 8; ++k) {
        BigInt total = 0;
        for (const YoungDiagram& sigma : partitions_of(k)) total += nc_count(sigma);
        CHECK(total == catalan[k]);
    }
}

TEST_CASE("evolve_cumulants: fixed points and decay rates") {
    FreeCumulantSequenceF r0;
    r0.values = {0.0, 0.0, 0.7, 1.0, -0.3};

    FreeCumulantSequenceF at0 = evolve_cumulants(r0, 0.0, 1.0, 2);
    for (int j = 1; j <= 4; ++j) CHECK(at0.values[j] == doctest::Approx(r0.values[j]));

    FreeCumulantSequenceF late = evolve_cumulants(r0, 1e3, 1.0, 2);
    CHECK(late.values[2] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(late.values[3] == doctest::Approx(0.0));
    CHECK(late.values[4] == doctest::Approx(0.0));

    FreeCumulantSequenceF r3;
    r3.values = {0.0, 0.0, 0.0, 1.0};
    FreeCumulantSequenceF ln2 = evolve_cumulants(r3, std::log(2.0), 1.0, 1);
    CHECK(ln2.values[3] == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("evolve_cumulants agrees with compression + semicircle convolution") {
    // R_k(mu_c) = c^{k-1} R_k(mu); free convolution adds cumulants, the
    // semicircle part contributing (1-c)/|T| to R_2 only.
    FreeCumulantSequenceF r0;
    r0.values = {0.0, 0.0, 1.3, -0.4, 0.9, 0.2, -1.1};
    for (double t : {0.0, 0.3, 1.0, 2.5})
        for (int cardT : {1, 2, 3}) {
            double m = 1.7;
            FreeCumulantSequenceF evolved = evolve_cumulants(r0, t, m, cardT);
            double c = std::exp(-t / m);
            for (int k = 2; k <= r0.order(); ++k) {
                double compressed = std::pow(c, k - 1) * r0.values[k];
                double semi = (k == 2) ? (1.0 - c) / cardT : 0.0;
                CHECK(evolved.values[k] == doctest::Approx(compressed + semi).epsilon(1e-12));
            }
        }
}

TEST_CASE("quadrature_measure reproduces the moments it was built from") {
    // semicircle, variance 1/2: M_{2k} = Catalan_k / 2^k
    MomentSequenceF m;
    m.values = {1.0, 0.0, 0.5, 0.0, 0.5, 0.0, 0.625, 0.0};
    AtomicMeasure q = quadrature_measure(m, 4);
    CHECK(q.support_size() == 4);
    for (int k = 0; k <= 7; ++k) {
        double s = 0;
        for (int i = 0; i < q.support_size(); ++i)
            s += q.weights_f()[i] * std::pow(q.atoms_f()[i], k);
        CHECK(s == doctest::Approx(m.values[k]).epsilon(1e-9));
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(AtomicMeasure::exact({Rational(1), Rational(0)}, {Rational(1, 2), Rational(1, 2)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(AtomicMeasure::exact({Rational(0)}, {Rational(1, 2)}), std::invalid_argument);
    CHECK_THROWS_AS(nc_count(YoungDiagram::empty()), std::invalid_argument);
    CHECK_THROWS_AS(evolve_cumulants(FreeCumulantSequenceF{}, -1.0, 1.0, 1), std::invalid_argument);
    MomentSequence bad;
    bad.values = {Rational(2)};
    CHECK_THROWS_AS(moments_to_cumulants(bad), std::invalid_argument);
}
