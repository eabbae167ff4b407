#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spinstar/phase_space.hpp"
#include "spinstar/revival_analysis.hpp"
#include "test_helpers.hpp"

using namespace spinstar;
using namespace spinstar::testing;

namespace {

ModelParams make_params(int N) {
    ModelParams p;
    p.N = N;
    return p;
}

}  // namespace

TEST_CASE("revival time") {
    CHECK(revival_time(make_params(2)).T ==
          doctest::Approx(two_pi * std::sqrt(2.0)).epsilon(1e-14));
    CHECK(revival_time(make_params(100)).T ==
          doctest::Approx(two_pi * std::sqrt(2550.0)).epsilon(1e-14));
    CHECK(revival_time(make_params(9)).full_period ==
          doctest::Approx(2.0 * revival_time(make_params(9)).T));
    CHECK(revival_time(make_params(16)).full_period ==
          doctest::Approx(revival_time(make_params(16)).T));
}

TEST_CASE("component phases") {
    const auto q3 = fourier_component_phases(3);
    CHECK(q3[0] == 0.0);
    CHECK(q3[1] == doctest::Approx(two_pi / 3.0));
    CHECK(q3[2] == doctest::Approx(2.0 * two_pi / 3.0));

    const auto q2 = fourier_component_phases(2);
    CHECK(q2[0] == doctest::Approx(std::numbers::pi / 2.0));
    CHECK(q2[1] == doctest::Approx(3.0 * std::numbers::pi / 2.0));

    CHECK(fourier_component_phases(1) == std::vector<double>{0.0});
    CHECK_THROWS_AS(fourier_component_phases(0), std::invalid_argument);

    // strictly increasing in [0, 2pi)
    for (int q = 1; q <= 12; ++q) {
        const auto phis = fourier_component_phases(q);
        for (int l = 0; l < q; ++l) {
            CHECK(phis[l] >= 0.0);
            CHECK(phis[l] < two_pi);
            if (l > 0) CHECK(phis[l] > phis[l - 1]);
        }
    }
}

TEST_CASE("gauss sums: unit modulus") {
    for (int q : {1, 2, 5, 8, 12}) {
        for (int N : {16, 100, 168}) {
            for (auto sign : {BranchSign::plus, BranchSign::minus}) {
                const auto coeffs = gauss_sum_dft(FractionalTime(1, q), make_params(N), sign);
                for (const auto& c : coeffs) CHECK(std::abs(std::abs(c) - 1.0) < 1e-12);
            }
        }
    }
}

TEST_CASE("gauss sums: DFT matches the closed forms for p=1") {
    for (int q = 2; q <= 8; ++q) {
        for (int N : {16, 100, 168}) {
            for (auto sign : {BranchSign::plus, BranchSign::minus}) {
                const auto dft = gauss_sum_dft(FractionalTime(1, q), make_params(N), sign);
                for (int l = 0; l < q; ++l)
                    CHECK(std::abs(dft[l] -
                                   gauss_sum_closed_form(q, l, make_params(N), sign)) <
                          1e-12);
            }
        }
    }
}

TEST_CASE("G_l = e^{-i phi_l} F_l") {
    // G uses the index-shifted quadratic phase m(m+1).
    for (int q = 1; q <= 12; ++q) {
        for (auto sign : {BranchSign::plus, BranchSign::minus}) {
            const auto params = make_params(100);
            const auto F = gauss_sum_dft(FractionalTime(1, q), params, sign);
            const auto phis = fourier_component_phases(q);
            const double s = sign_of(sign);
            const double j = 50.0;
            const cplx pref = std::polar(1.0, -s * (two_pi / q) * j * (j + 1.0));
            for (int l = 0; l < q; ++l) {
                cplx G = 0.0;
                for (int m = 0; m < q; ++m)
                    G += std::polar(1.0, phis[l] * m +
                                             s * std::numbers::pi / q * m * (m + 1.0));
                G *= pref / std::sqrt(static_cast<double>(q));
                CHECK(std::abs(G - std::polar(1.0, -phis[l]) * F[l]) < 1e-12);
            }
        }
    }
}

TEST_CASE("F_m (anti)periodicity at t = pT/q") {
    const auto params = make_params(24);
    const double T = revival_time(params).T;
    const double j = 12.0;
    for (int q = 1; q <= 12; ++q) {
        for (int p : {1, 3}) {
            if (std::gcd(p, q) != 1) continue;
            const double t = p * T / q;
            for (double m = -j; m + q <= j; m += 1.0) {
                const auto a = fg_phases(params, BranchSign::plus, m, t);
                const auto b = fg_phases(params, BranchSign::plus, m + q, t);
                const double parity = q % 2 == 1 ? 1.0 : -1.0;
                CHECK(std::abs(b.F - parity * a.F) < 1e-9);
                CHECK(std::abs(b.G - parity * a.G) < 1e-9);
            }
        }
    }
}

TEST_CASE("Parseval: sum |F_l|^2 = q") {
    for (int q = 1; q <= 12; ++q) {
        const auto coeffs = gauss_sum_dft(FractionalTime(1, q), make_params(16),
                                          BranchSign::plus);
        double sum = 0.0;
        for (const auto& c : coeffs) sum += std::norm(c);
        CHECK(sum == doctest::Approx(q).epsilon(1e-10));
    }
}

TEST_CASE("fractional revival state") {
    const auto params = make_params(100);
    const auto spec =
        SpinCoherentSpec::from_bloch(100, std::numbers::pi / 2.0, 0.0);
    const auto initial = equatorial_initial(100);
    const double T = revival_time(params).T;

    SUBCASE("q=1 reproduces the initial state") {
        const auto st = fractional_revival_state(FractionalTime(1, 1), params, spec,
                                                 BranchSign::plus);
        CHECK(std::abs(std::abs(overlap(st, initial)) - 1.0) < 1e-10);
    }
    SUBCASE("q=2 is a GHZ state: coherent components at phi = pi/2, 3pi/2") {
        const auto st = fractional_revival_state(FractionalTime(1, 2), params, spec,
                                                 BranchSign::plus);
        CHECK(st.is_normalized());
        const auto slice = equatorial_slice(st, 256);
        CHECK(cat_count(slice) == 2);
        // peaks sit at the component phases
        const auto phis = fourier_component_phases(2);
        for (double phi : phis) {
            const int idx = static_cast<int>(std::round(phi / (two_pi / 256))) % 256;
            CHECK(slice[idx] > 0.4);
        }
    }
    SUBCASE("matches the exact state at T/4") {
        const auto ideal = fractional_revival_state(FractionalTime(1, 4), params, spec,
                                                    BranchSign::plus);
        const auto exact = exact_propagate(initial, params, T / 4.0);
        CHECK(std::abs(overlap(ideal, exact)) > 0.9);
    }
    SUBCASE("displacement form: ideal state equals the truncated evolution") {
        for (int q : {2, 3, 5}) {
            const auto ideal = fractional_revival_state(FractionalTime(1, q), params,
                                                        spec, BranchSign::plus);
            const auto trunc = truncated_propagate(initial, params, T / q);
            CHECK(l2_distance(ideal, trunc) < 1e-10);
        }
    }
    SUBCASE("rejects theta0 != pi/2") {
        const auto tilted = SpinCoherentSpec::from_bloch(100, 1.0, 0.0);
        CHECK_THROWS_AS(fractional_revival_state(FractionalTime(1, 2), params, tilted,
                                                 BranchSign::plus),
                        std::invalid_argument);
    }
}

TEST_CASE("coprimality enforced") {
    CHECK_THROWS_AS(FractionalTime(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(FractionalTime(0, 3), std::invalid_argument);
    CHECK_NOTHROW(FractionalTime(3, 4));
}

TEST_CASE("cat_count") {
    SUBCASE("initial coherent state counts one component") {
        const auto slice = equatorial_slice(equatorial_initial(100), 256);
        CHECK(cat_count(slice) == 1);
    }
    SUBCASE("GHZ at T/2 counts two, N=100") {
        const auto params = make_params(100);
        const double T = revival_time(params).T;
        const auto st = exact_propagate(equatorial_initial(100), params, T / 2.0);
        CHECK(cat_count(equatorial_slice(st, 256)) == 2);
    }
    SUBCASE("N=16 at T/4 counts four") {
        const auto params = make_params(16);
        const double T = revival_time(params).T;
        const auto st = exact_propagate(equatorial_initial(16), params, T / 4.0);
        CHECK(cat_count(equatorial_slice(st, 256)) == 4);
    }
    SUBCASE("error paths") {
        CHECK_THROWS_AS(cat_count(std::vector<double>{}), std::invalid_argument);
        CHECK_THROWS_AS(cat_count(std::vector<double>(10, 1.0)), std::invalid_argument);
    }
}

TEST_CASE("revival report") {
    const auto rep = make_revival_report(FractionalTime(1, 3), make_params(100),
                                         BranchSign::plus, 256);
    CHECK(rep.q == 3);
    CHECK(rep.cat_count_estimate == 3);
    CHECK(rep.closed_form_residual < 1e-12);
    CHECK(rep.fidelity_vs_exact > 0.9);
    CHECK(!rep.odd_N_rescaled);

    const auto text = to_key_value(rep);
    CHECK(text.find("cat_count_estimate = 3") != std::string::npos);
    CHECK(text.find("T = ") != std::string::npos);

    SUBCASE("odd N is rescaled to the full period and flagged") {
        const auto odd = make_revival_report(FractionalTime(1, 2), make_params(9),
                                             BranchSign::plus, 256);
        CHECK(odd.odd_N_rescaled);
        CHECK(odd.full_period == doctest::Approx(2.0 * odd.T));
    }
}
