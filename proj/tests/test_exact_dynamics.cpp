#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dense_oracle.hpp"
#include "spinstar/revival_analysis.hpp"
#include "test_helpers.hpp"

using namespace spinstar;
using namespace spinstar::testing;

TEST_CASE("build_initial: alpha=1 gives the (N+1)-qubit product state") {
    const int N = 6;
    const auto st = equatorial_initial(N);
    // [(|down>+|up>)/sqrt(2)]^{(N+1)}: every (m,s) amplitude is
    // C_m(pi/2,0) / sqrt(2), all real positive.
    const auto c = coherent_coeffs(SpinCoherentSpec(N, 1.0, 0.0));
    for (int k = 0; k <= N; ++k) {
        CHECK(std::abs(st.at(k, 0) - c.amps[k] / std::sqrt(2.0)) < 1e-14);
        CHECK(std::abs(st.at(k, 1) - c.amps[k] / std::sqrt(2.0)) < 1e-14);
    }
}

TEST_CASE("build_initial: equal branch weights reduce to |down>") {
    ModelParams params;
    params.N = 8;
    params.phi0 = 1.1;
    const auto spec = SpinCoherentSpec(8, 0.6, 1.1);
    const double r = 1.0 / std::sqrt(2.0);
    const auto st = build_initial(params, spec, r, r);
    for (int k = 0; k <= 8; ++k) CHECK(std::abs(st.at(k, 1)) < 1e-14);
    CHECK(st.is_normalized());
}

TEST_CASE("build_initial: N=1 two-qubit product") {
    ModelParams params;
    params.N = 1;
    const auto st = build_initial(params, SpinCoherentSpec(1, 1.0, 0.0), 1.0, 0.0);
    for (int k = 0; k <= 1; ++k)
        for (int s = 0; s < 2; ++s)
            CHECK(std::abs(st.at(k, s) - cplx(0.5)) < 1e-14);
}

TEST_CASE("build_initial error paths") {
    ModelParams params;
    params.N = 4;
    CHECK_THROWS_AS(build_initial(params, SpinCoherentSpec(4, 1.0, 0.0), 1.0, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_initial(params, SpinCoherentSpec(4, 1.0, 0.5), 1.0, 0.0),
                    std::invalid_argument);  // phase mismatch
    CHECK_THROWS_AS(build_initial(params, SpinCoherentSpec(5, 1.0, 0.0), 1.0, 0.0),
                    std::invalid_argument);  // N mismatch
}

TEST_CASE("exact_propagate: t=0 is the identity") {
    std::mt19937 gen(7);
    ModelParams params;
    params.N = 12;
    const auto st = random_state(12, gen);
    CHECK(l2_distance(st, exact_propagate(st, params, 0.0)) == 0.0);
}

TEST_CASE("exact_propagate: N=1 full Rabi transfer") {
    ModelParams params;
    params.N = 1;
    JointState st(1);
    st.at(0, 1) = 1.0;  // |m=-1/2, up>
    const auto out = exact_propagate(st, params, std::numbers::pi / 2.0);
    // g = lambda for the single block; -i sin(pi/2) on the partner
    CHECK(std::abs(out.at(1, 0) - cplx(0.0, -1.0)) < 1e-14);
    CHECK(std::abs(out.at(0, 1)) < 1e-14);
}

TEST_CASE("edge states are stationary") {
    ModelParams params;
    params.N = 5;
    JointState top(5), bottom(5);
    top.at(5, 1) = 1.0;     // |j, up>
    bottom.at(0, 0) = 1.0;  // |-j, down>
    CHECK(l2_distance(top, exact_propagate(top, params, 2.3)) < 1e-15);
    CHECK(l2_distance(bottom, exact_propagate(bottom, params, 2.3)) < 1e-15);
}

TEST_CASE("unitarity for random states up to N=500") {
    std::mt19937 gen(11);
    std::uniform_real_distribution<double> tdist(-5.0, 5.0);
    for (int N : {2, 37, 500}) {
        ModelParams params;
        params.N = N;
        for (int rep = 0; rep < 5; ++rep) {
            const auto st = random_state(N, gen);
            const auto out = exact_propagate(st, params, tdist(gen));
            CHECK(std::abs(out.norm() - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("group property: U(t1) U(t2) = U(t1+t2)") {
    std::mt19937 gen(13);
    ModelParams params;
    params.N = 24;
    for (int rep = 0; rep < 10; ++rep) {
        const auto st = random_state(24, gen);
        const double t1 = 0.8 * rep, t2 = 1.7 - 0.3 * rep;
        const auto a = exact_propagate(exact_propagate(st, params, t1), params, t2);
        const auto b = exact_propagate(st, params, t1 + t2);
        CHECK(l2_distance(a, b) < 1e-10);
    }
}

TEST_CASE("agreement with the dense matrix-exponential oracle, N <= 6") {
    std::mt19937 gen(17);
    std::uniform_real_distribution<double> tdist(0.0, 3.0);
    for (int N = 1; N <= 6; ++N) {
        ModelParams params;
        params.N = N;
        for (int rep = 0; rep < 5; ++rep) {
            const auto st = random_state(N, gen);
            const double t = tdist(gen);
            CHECK(l2_distance(exact_propagate(st, params, t),
                              dense_propagate(st, params, t)) < 1e-9);
        }
    }
}

TEST_CASE("backward evolution inverts forward evolution") {
    std::mt19937 gen(19);
    ModelParams params;
    params.N = 40;
    const auto st = random_state(40, gen);
    const auto roundtrip =
        exact_propagate(exact_propagate(st, params, 1.3), params, -1.3);
    CHECK(l2_distance(st, roundtrip) < 1e-12);
}

TEST_CASE("conserved excitation") {
    SUBCASE("equatorial product state has expectation 0") {
        const auto rep = conserved_excitation(equatorial_initial(16));
        CHECK(std::abs(rep.expectation) < 1e-12);
    }
    SUBCASE("|j, up> is a point mass at j + 1/2") {
        const int N = 6;
        JointState st(N);
        st.at(N, 1) = 1.0;
        const auto rep = conserved_excitation(st);
        CHECK(rep.expectation == doctest::Approx(0.5 * N + 0.5));
        CHECK(rep.distribution.back() == doctest::Approx(1.0));
    }
    SUBCASE("distribution invariant under evolution") {
        std::mt19937 gen(23);
        ModelParams params;
        params.N = 30;
        const auto st = random_state(30, gen);
        const auto before = conserved_excitation(st);
        const auto after =
            conserved_excitation(exact_propagate(st, params, 1.7 / params.lambda));
        for (size_t i = 0; i < before.distribution.size(); ++i)
            CHECK(std::abs(before.distribution[i] - after.distribution[i]) < 1e-12);
    }
}

TEST_CASE("large revival at N=100 under exact dynamics") {
    const auto st = equatorial_initial(100);
    ModelParams params;
    params.N = 100;
    const double T = revival_time(params).T;
    const auto out = exact_propagate(st, params, T);
    CHECK(std::abs(overlap(st, out)) > 0.8);
}

TEST_CASE("non-finite time rejected") {
    ModelParams params;
    params.N = 3;
    JointState st(3);
    st.at(0, 0) = 1.0;
    CHECK_THROWS_AS(exact_propagate(st, params, std::nan("")), std::invalid_argument);
}
