#include "spinstar/revival_analysis.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "spinstar/phase_space.hpp"

namespace spinstar {

FractionalTime::FractionalTime(int p_, int q_) : p(p_), q(q_) {
    require(p >= 1 && q >= 1, "FractionalTime: p, q must be positive");
    require(std::gcd(p, q) == 1, "FractionalTime: p and q must be coprime");
}

RevivalPeriod revival_time(const ModelParams& params) {
    params.validate();
    const double j = 0.5 * params.N;
    const double T = two_pi / params.lambda * std::sqrt(j * (j + 1.0));
    return {T, params.N % 2 == 0 ? T : 2.0 * T};
}

std::vector<double> fourier_component_phases(int q) {
    require(q >= 1, "fourier_component_phases: q must be >= 1");
    std::vector<double> phis(q);
    for (int l = 0; l < q; ++l)
        phis[l] = q % 2 == 1 ? two_pi * l / q : std::numbers::pi * (2 * l + 1) / q;
    return phis;
}

namespace {

// e^{i pi n / d} with n reduced mod 2d, so the argument never grows
// and rational multiples of pi stay exact at any N.
cplx unit_phase(long long n, long long d) {
    n %= 2 * d;
    if (n < 0) n += 2 * d;
    return std::polar(1.0, std::numbers::pi * static_cast<double>(n) /
                               static_cast<double>(d));
}

}  // namespace

std::vector<cplx> gauss_sum_dft(const FractionalTime& frac, const ModelParams& params,
                                BranchSign sign) {
    params.validate();
    const long long p = frac.p, q = frac.q;
    const long long si = sign == BranchSign::plus ? 1 : -1;
    const long long N = params.N;
    // every phase is an integer multiple of pi/(2q):
    //   prefactor  -s (2 pi p / q) j(j+1) = pi * (-s p N(N+2)) / (2q)
    //   phi_l m                           = pi * (4 l m) / (2q)    [odd q]
    //                                       pi * (2 (2l+1) m) / (2q) [even q]
    //   s (p/q) pi m(m-1)                 = pi * (2 s p m(m-1)) / (2q)
    const long long n_pref = -si * p * N * (N + 2);

    std::vector<cplx> coeffs(q);
    for (long long l = 0; l < q; ++l) {
        cplx sum = 0.0;
        for (long long m = 0; m < q; ++m) {
            const long long n_lin = q % 2 == 1 ? 4 * l * m : 2 * (2 * l + 1) * m;
            const long long n_quad = 2 * si * p * m * (m - 1);
            sum += unit_phase(n_pref + n_lin + n_quad, 2 * q);
        }
        coeffs[l] = sum / std::sqrt(static_cast<double>(q));
    }
    return coeffs;
}

cplx gauss_sum_closed_form(int q, int l, const ModelParams& params, BranchSign sign) {
    require(q >= 1, "gauss_sum_closed_form: q must be >= 1");
    require(l >= 0 && l < q, "gauss_sum_closed_form: l out of range");
    params.validate();
    const long long si = sign == BranchSign::plus ? 1 : -1;
    const long long N = params.N;
    // e^{-/+ i 2pi j(j+1)/q} e^{+-i pi/4} e^{-/+ i (pi/4) (2l -/+ 1 [+1])^2 / q};
    // all terms are integer multiples of pi/(4q).
    const long long root = q % 2 == 1 ? 2 * l - si : 2 * l - si + 1;
    const long long n = si * (-2 * N * (N + 2) + q - root * root);
    return unit_phase(n, 4 * q);
}

JointState fractional_revival_state(const FractionalTime& frac,
                                    const ModelParams& params,
                                    const SpinCoherentSpec& spec, BranchSign sign) {
    require(params.N % 2 == 0, "fractional_revival_state: N must be even");
    require(std::abs(spec.theta() - std::numbers::pi / 2.0) <= 1e-12,
            "fractional_revival_state: construction requires theta0 = pi/2");
    require(params.N == spec.N, "fractional_revival_state: N mismatch");

    const int N = params.N, q = frac.q;
    const auto coeffs = gauss_sum_dft(frac, params, sign);
    const auto phis = fourier_component_phases(q);
    const double s = sign_of(sign);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    JointState st(N);
    for (int l = 0; l < q; ++l) {
        const double phi_l = spec.phi + phis[l];
        const DickeVector c = coherent_coeffs(SpinCoherentSpec(N, 1.0, phi_l));
        const cplx amp = coeffs[l] * std::polar(1.0, phis[l] * 0.5 * N) /
                         std::sqrt(static_cast<double>(q));
        const cplx e = std::polar(1.0, -phi_l);
        for (int k = 0; k <= N; ++k) {
            st.at(k, 0) += amp * c.amps[k] * inv_sqrt2;
            st.at(k, 1) += amp * c.amps[k] * s * e * inv_sqrt2;
        }
    }
    // Components are not orthogonal at small N; normalize the sum.
    const double nrm = st.norm();
    require(nrm > 0.0, "fractional_revival_state: degenerate superposition");
    for (auto& a : st.amps) a /= nrm;
    return st;
}

int cat_count(std::span<const double> slice, double prominence) {
    require(!slice.empty(), "cat_count: empty slice");
    require(slice.size() >= 64, "cat_count: slice must have length >= 64");
    const size_t n = slice.size();
    double mx = 0.0;
    for (double v : slice) mx = std::max(mx, v);
    const double thr = prominence * mx;
    int count = 0;
    for (size_t i = 0; i < n; ++i) {
        const double prev = slice[(i + n - 1) % n];
        const double next = slice[(i + 1) % n];
        if (slice[i] > thr && slice[i] > prev && slice[i] >= next) ++count;
    }
    return count;
}

RevivalReport make_revival_report(const FractionalTime& frac,
                                  const ModelParams& params, BranchSign sign,
                                  int n_phi) {
    params.validate();
    RevivalReport rep;
    const auto period = revival_time(params);
    rep.T = period.T;
    rep.full_period = period.full_period;
    rep.p = frac.p;
    rep.q = frac.q;
    rep.odd_N_rescaled = params.N % 2 != 0;

    // For odd N the analysis runs against the full period 2T; reduce
    // (2p)/q back to lowest terms for the Gauss machinery.
    FractionalTime eff = frac;
    if (rep.odd_N_rescaled) {
        const int num = 2 * frac.p, g = std::gcd(num, frac.q);
        eff = FractionalTime(num / g, frac.q / g);
    }
    const double t = eff.p * rep.T / eff.q;

    rep.fourier_coeffs = gauss_sum_dft(eff, params, sign);
    rep.component_phases = fourier_component_phases(eff.q);

    if (eff.p == 1) {
        double resid = 0.0;
        for (int l = 0; l < eff.q; ++l)
            resid = std::max(resid, std::abs(rep.fourier_coeffs[l] -
                                             gauss_sum_closed_form(eff.q, l, params,
                                                                   sign)));
        rep.closed_form_residual = resid;
    } else {
        rep.closed_form_residual = std::numeric_limits<double>::quiet_NaN();
    }

    const SpinCoherentSpec spec =
        SpinCoherentSpec::from_bloch(params.N, std::numbers::pi / 2.0, params.phi0);
    const cplx alpha = sign == BranchSign::plus ? 1.0 : 0.0;
    const cplx beta = sign == BranchSign::plus ? 0.0 : 1.0;
    const JointState exact =
        exact_propagate(build_initial(params, spec, alpha, beta), params, t);
    rep.cat_count_estimate = cat_count(equatorial_slice(exact, n_phi));
    if (params.N % 2 == 0) {
        rep.fidelity_vs_exact =
            std::abs(overlap(fractional_revival_state(eff, params, spec, sign), exact));
    } else {
        rep.fidelity_vs_exact = std::numeric_limits<double>::quiet_NaN();
    }
    return rep;
}

std::string to_key_value(const RevivalReport& rep) {
    std::ostringstream os;
    os.precision(17);
    os << "T = " << rep.T << '\n';
    os << "full_period = " << rep.full_period << '\n';
    os << "p = " << rep.p << '\n';
    os << "q = " << rep.q << '\n';
    os << "odd_N_rescaled = " << (rep.odd_N_rescaled ? 1 : 0) << '\n';
    for (size_t l = 0; l < rep.fourier_coeffs.size(); ++l) {
        os << "fourier_re_" << l << " = " << rep.fourier_coeffs[l].real() << '\n';
        os << "fourier_im_" << l << " = " << rep.fourier_coeffs[l].imag() << '\n';
    }
    for (size_t l = 0; l < rep.component_phases.size(); ++l)
        os << "phi_" << l << " = " << rep.component_phases[l] << '\n';
    os << "closed_form_residual = " << rep.closed_form_residual << '\n';
    os << "cat_count_estimate = " << rep.cat_count_estimate << '\n';
    os << "fidelity_vs_exact = " << rep.fidelity_vs_exact << '\n';
    return os.str();
}

}  // namespace spinstar
