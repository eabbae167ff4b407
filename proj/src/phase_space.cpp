#include "spinstar/phase_space.hpp"

#include <cmath>

#include "spinstar/parallel.hpp"

namespace spinstar {

namespace {

cplx probe_overlap(const JointState& state, const DickeVector& probe, double theta,
                   double phi) {
    const double c2 = std::cos(0.5 * theta);
    const double s2 = std::sin(0.5 * theta);
    const cplx up_factor = std::polar(s2, -phi);
    cplx o = 0.0;
    for (int k = 0; k <= state.N; ++k)
        o += probe.amps[k] *
             (std::conj(state.at(k, 0)) * c2 + std::conj(state.at(k, 1)) * up_factor);
    return o;
}

}  // namespace

double husimi_q(const JointState& state, double theta, double phi) {
    require(state.is_normalized(), "husimi_q: state not normalized");
    require(theta >= 0.0 && theta <= std::numbers::pi, "husimi_q: theta outside [0, pi]");
    const SpinCoherentSpec probe_spec =
        theta == std::numbers::pi ? SpinCoherentSpec::at_south_pole(state.N, phi)
                                  : SpinCoherentSpec(state.N, zeta_from_bloch(theta), phi);
    const DickeVector probe = coherent_coeffs(probe_spec);
    return std::norm(probe_overlap(state, probe, theta, phi));
}

QRaster q_grid(const JointState& state, int n_theta, int n_phi) {
    require(state.is_normalized(), "q_grid: state not normalized");
    require(n_theta >= 2 && n_phi >= 2, "q_grid: degenerate grid");
    QRaster raster(n_theta, n_phi);
    raster.axis0_label = "theta";
    raster.axis1_label = "phi";
    for (int r = 0; r < n_theta; ++r)
        raster.axis0[r] = (r + 0.5) * std::numbers::pi / n_theta;
    for (int c = 0; c < n_phi; ++c) raster.axis1[c] = c * two_pi / n_phi;

    parallel_for(n_theta, [&](std::size_t r) {
        const double theta = raster.axis0[r];
        // Probe magnitudes depend on theta only; phases on phi only.
        const DickeVector mag =
            coherent_coeffs(SpinCoherentSpec(state.N, zeta_from_bloch(theta), 0.0));
        const double c2 = std::cos(0.5 * theta);
        const double s2 = std::sin(0.5 * theta);
        for (int c = 0; c < n_phi; ++c) {
            const double phi = raster.axis1[c];
            cplx o = 0.0;
            for (int k = 0; k <= state.N; ++k) {
                const cplx probe_k = mag.amps[k] * std::polar(1.0, -k * phi);
                o += probe_k * (std::conj(state.at(k, 0)) * c2 +
                                std::conj(state.at(k, 1)) * std::polar(s2, -phi));
            }
            raster.at(r, c) = std::norm(o);
        }
    });
    return raster;
}

std::vector<double> equatorial_slice(const JointState& state, int n_phi) {
    require(state.is_normalized(), "equatorial_slice: state not normalized");
    require(n_phi >= 2, "equatorial_slice: degenerate grid");
    const int N = state.N;
    const DickeVector mag = coherent_coeffs(SpinCoherentSpec(N, 1.0, 0.0));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<double> out(n_phi);
    for (int c = 0; c < n_phi; ++c) {
        const double phi = c * two_pi / n_phi;
        cplx o = 0.0;
        for (int k = 0; k <= N; ++k) {
            const cplx probe_k = mag.amps[k] * std::polar(1.0, -k * phi);
            o += probe_k * (std::conj(state.at(k, 0)) +
                            std::conj(state.at(k, 1)) * std::polar(1.0, -phi)) *
                 inv_sqrt2;
        }
        out[c] = std::norm(o);
    }
    return out;
}

QRaster carpet(const ModelParams& params, const SpinCoherentSpec& spec, cplx alpha,
               cplx beta, int n_t, int n_phi, double t_max_in_T) {
    require(n_t >= 2 && n_phi >= 2, "carpet: degenerate grid");
    const double j = 0.5 * params.N;
    const double T = two_pi / params.lambda * std::sqrt(j * (j + 1.0));
    const JointState initial = build_initial(params, spec, alpha, beta);

    QRaster raster(n_t, n_phi);
    raster.axis0_label = "t_over_T";
    raster.axis1_label = "phi";
    for (int r = 0; r < n_t; ++r)
        raster.axis0[r] = t_max_in_T * r / (n_t - 1);
    for (int c = 0; c < n_phi; ++c) raster.axis1[c] = c * two_pi / n_phi;

    parallel_for(n_t, [&](std::size_t r) {
        const JointState st = exact_propagate(initial, params, raster.axis0[r] * T);
        const auto slice = equatorial_slice(st, n_phi);
        std::copy(slice.begin(), slice.end(), raster.values.begin() + r * n_phi);
    });
    return raster;
}

}  // namespace spinstar
