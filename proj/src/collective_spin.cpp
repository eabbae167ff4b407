#include "spinstar/collective_spin.hpp"

#include <cmath>
#include <limits>

namespace spinstar {

SpinCoherentSpec::SpinCoherentSpec(int N_, double zeta_abs_, double phi_)
    : N(N_), zeta_abs(zeta_abs_), phi(reduce_mod_2pi(phi_)) {
    require(N >= 1, "SpinCoherentSpec: N must be >= 1");
    require(std::isfinite(zeta_abs) && zeta_abs >= 0.0,
            "SpinCoherentSpec: |zeta| must be finite and nonnegative");
}

SpinCoherentSpec SpinCoherentSpec::from_bloch(int N, double theta, double phi) {
    require(theta >= 0.0 && theta <= std::numbers::pi,
            "SpinCoherentSpec: theta must lie in [0, pi]");
    if (theta == std::numbers::pi) return at_south_pole(N, phi);
    return SpinCoherentSpec(N, zeta_from_bloch(theta), phi);
}

SpinCoherentSpec SpinCoherentSpec::at_south_pole(int N, double phi) {
    SpinCoherentSpec s(N, 0.0, phi);
    s.south_pole = true;
    return s;
}

double SpinCoherentSpec::theta() const {
    return south_pole ? std::numbers::pi : bloch_from_zeta(zeta_abs);
}

double bloch_from_zeta(double zeta_abs) { return 2.0 * std::atan(zeta_abs); }

double zeta_from_bloch(double theta) {
    if (theta == std::numbers::pi) return std::numeric_limits<double>::infinity();
    return std::tan(0.5 * theta);
}

DickeVector coherent_coeffs(const SpinCoherentSpec& spec) {
    const int N = spec.N;
    DickeVector v(N);
    if (spec.south_pole) {
        // All weight on m = +N/2 with phase e^{-i N phi}.
        v.amps[N] = std::polar(1.0, -static_cast<double>(N) * spec.phi);
        return v;
    }
    const double z = spec.zeta_abs;
    if (z == 0.0) {
        v.amps[0] = 1.0;
        return v;
    }
    // log|C_m| = log binom(N,k)/2 + k log|zeta| - (N/2) log(1+|zeta|^2),
    // k = m + N/2; phase is -k phi.
    const double lgN = std::lgamma(N + 1.0);
    const double logz = std::log(z);
    const double lognorm = 0.5 * N * std::log1p(z * z);
    for (int k = 0; k <= N; ++k) {
        const double logbinom =
            0.5 * (lgN - std::lgamma(k + 1.0) - std::lgamma(N - k + 1.0));
        const double logmag = logbinom + k * logz - lognorm;
        v.amps[k] = std::polar(std::exp(logmag), -k * spec.phi);
    }
    return v;
}

DickeMoments dicke_moments(const DickeVector& v) {
    require(v.is_normalized(), "dicke_moments: input not normalized");
    const double j = 0.5 * v.N;
    double m1 = 0.0, m2 = 0.0;
    for (int k = 0; k <= v.N; ++k) {
        const double p = std::norm(v.amps[k]);
        const double m = k - j;
        m1 += m * p;
        m2 += m * m * p;
    }
    return {m1, std::sqrt(std::max(0.0, m2 - m1 * m1))};
}

cplx overlap(const DickeVector& u, const DickeVector& v) {
    require(u.N == v.N, "overlap: mismatched N");
    cplx s = 0.0;
    for (int k = 0; k <= u.N; ++k) s += std::conj(u.amps[k]) * v.amps[k];
    return s;
}

}  // namespace spinstar
