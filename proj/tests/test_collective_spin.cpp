#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spinstar/collective_spin.hpp"

using namespace spinstar;

TEST_CASE("coherent coefficients at N=2, zeta=1") {
    const auto v = coherent_coeffs(SpinCoherentSpec(2, 1.0, 0.0));
    CHECK(v.amps[0].real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(v.amps[1].real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(v.amps[2].real() == doctest::Approx(0.5).epsilon(1e-14));
    for (const auto& a : v.amps) CHECK(std::abs(a.imag()) < 1e-15);
}

TEST_CASE("zeta=0 is the ground state") {
    const auto v = coherent_coeffs(SpinCoherentSpec(5, 0.0, 0.3));
    CHECK(std::abs(v.amps[0] - cplx(1.0)) < 1e-15);
    for (int k = 1; k <= 5; ++k) CHECK(std::abs(v.amps[k]) == 0.0);
}

TEST_CASE("large-N log-domain accuracy: N=200, zeta=1") {
    const auto v = coherent_coeffs(SpinCoherentSpec(200, 1.0, 0.0));
    CHECK(std::abs(norm_squared(v.amps) - 1.0) < 1e-12);
    // |C_{+-100}|^2 = 2^-200
    const double expected = std::pow(2.0, -200);
    CHECK(std::norm(v.amps[0]) == doctest::Approx(expected).epsilon(1e-10));
    CHECK(std::norm(v.amps[200]) == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("normalization holds across N and zeta") {
    for (int N : {1, 3, 17, 100, 1000, 10000}) {
        for (double z : {1e-3, 0.1, 1.0, 10.0, 1e3}) {
            const auto v = coherent_coeffs(SpinCoherentSpec(N, z, 1.2345));
            // log-domain rounding grows slowly with the term count
            CHECK(std::abs(norm_squared(v.amps) - 1.0) < 1e-13 * (N + 100));
        }
    }
}

TEST_CASE("|C_m(z)| = |C_{-m}(1/z)| for real z > 0") {
    for (int N : {4, 51, 200}) {
        for (double z : {0.2, 0.7, 3.0}) {
            const auto a = coherent_coeffs(SpinCoherentSpec(N, z, 0.0));
            const auto b = coherent_coeffs(SpinCoherentSpec(N, 1.0 / z, 0.0));
            for (int k = 0; k <= N; ++k)
                CHECK(std::abs(a.amps[k]) ==
                      doctest::Approx(std::abs(b.amps[N - k])).epsilon(1e-11));
        }
    }
}

TEST_CASE("bloch <-> zeta transformations") {
    CHECK(bloch_from_zeta(1.0) == doctest::Approx(std::numbers::pi / 2.0));
    CHECK(bloch_from_zeta(0.0) == 0.0);
    CHECK(zeta_from_bloch(2.0 * std::atan(0.3)) == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(std::isinf(zeta_from_bloch(std::numbers::pi)));
    // round trips
    for (double z : {1e-6, 1e-2, 1.0, 1e2, 1e6})
        CHECK(zeta_from_bloch(bloch_from_zeta(z)) == doctest::Approx(z).epsilon(1e-9));
}

TEST_CASE("south pole goes through the dedicated constructor") {
    const auto spec = SpinCoherentSpec::from_bloch(4, std::numbers::pi, 0.0);
    CHECK(spec.south_pole);
    const auto v = coherent_coeffs(spec);
    CHECK(std::abs(v.amps[4]) == doctest::Approx(1.0));
    for (int k = 0; k < 4; ++k) CHECK(std::abs(v.amps[k]) == 0.0);
}

TEST_CASE("dicke moments examples") {
    SUBCASE("|zeta|=1, N=16") {
        const auto mom = dicke_moments(coherent_coeffs(SpinCoherentSpec(16, 1.0, 0.0)));
        CHECK(std::abs(mom.m_bar) < 1e-12);
        CHECK(mom.delta_m == doctest::Approx(2.0).epsilon(1e-12));
    }
    SUBCASE("zeta=0") {
        for (int N : {1, 7, 40}) {
            const auto mom = dicke_moments(coherent_coeffs(SpinCoherentSpec(N, 0.0, 0.0)));
            CHECK(mom.m_bar == doctest::Approx(-0.5 * N));
            CHECK(mom.delta_m == 0.0);
        }
    }
    SUBCASE("N=50, |zeta|=0.5") {
        const auto mom = dicke_moments(coherent_coeffs(SpinCoherentSpec(50, 0.5, 0.0)));
        CHECK(mom.m_bar == doctest::Approx(-15.0).epsilon(1e-10));
        CHECK(mom.delta_m ==
              doctest::Approx(std::sqrt(50.0) * 0.5 / 1.25).epsilon(1e-10));
    }
}

TEST_CASE("moments match the closed forms over an (N, zeta) grid") {
    for (int N : {2, 9, 33, 128}) {
        for (double z : {0.05, 0.5, 1.0, 2.0, 20.0}) {
            const auto mom = dicke_moments(coherent_coeffs(SpinCoherentSpec(N, z, 0.7)));
            const double z2 = z * z;
            const double m_bar = -0.5 * N * (1.0 - z2) / (1.0 + z2);
            const double dm = std::sqrt(static_cast<double>(N)) * z / (1.0 + z2);
            CHECK(mom.m_bar == doctest::Approx(m_bar).epsilon(1e-10));
            CHECK(mom.delta_m == doctest::Approx(dm).epsilon(1e-10));
        }
    }
}

TEST_CASE("overlap examples") {
    const auto v = coherent_coeffs(SpinCoherentSpec(10, 1.0, 0.4));
    CHECK(std::abs(overlap(v, v) - cplx(1.0)) < 1e-12);

    const auto ground = coherent_coeffs(SpinCoherentSpec(10, 0.0, 0.0));
    const auto equator =
        coherent_coeffs(SpinCoherentSpec::from_bloch(10, std::numbers::pi / 2.0, 0.0));
    CHECK(std::abs(overlap(ground, equator)) ==
          doctest::Approx(std::pow(2.0, -5)).epsilon(1e-12));

    // antipodal states are orthogonal
    const auto a = coherent_coeffs(SpinCoherentSpec::from_bloch(12, 0.8, 0.3));
    const auto b = coherent_coeffs(
        SpinCoherentSpec::from_bloch(12, std::numbers::pi - 0.8, 0.3 + std::numbers::pi));
    CHECK(std::abs(overlap(a, b)) < 1e-12);
}

TEST_CASE("error paths") {
    CHECK_THROWS_AS(SpinCoherentSpec(0, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(SpinCoherentSpec(4, std::nan(""), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(SpinCoherentSpec(4, -1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(SpinCoherentSpec::from_bloch(4, 3.5, 0.0), std::invalid_argument);

    DickeVector unnorm(3);
    unnorm.amps[0] = 0.5;
    CHECK_THROWS_AS(dicke_moments(unnorm), std::invalid_argument);

    DickeVector a(3), b(4);
    CHECK_THROWS_AS(overlap(a, b), std::invalid_argument);
}
