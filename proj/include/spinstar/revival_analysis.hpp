#ifndef SPINSTAR_REVIVAL_ANALYSIS_HPP
#define SPINSTAR_REVIVAL_ANALYSIS_HPP

#include <span>
#include <string>
#include <vector>

#include "spinstar/effective_dynamics.hpp"

namespace spinstar {

/// A rational fraction p/q of the revival time, p and q coprime.
struct FractionalTime {
    int p = 1;
    int q = 1;

    FractionalTime() = default;
    FractionalTime(int p_, int q_);
};

struct RevivalPeriod {
    double T;            // (2 pi / lambda) sqrt(j(j+1))
    double full_period;  // T for even N, 2T for odd N
};

RevivalPeriod revival_time(const ModelParams& params);

/// phi_l = 2 pi l / q (q odd) or pi (2l+1)/q (q even), l = 0..q-1.
std::vector<double> fourier_component_phases(int q);

/// Fourier coefficients of F_m(pT/q) by direct summation of the
/// generalized Gauss sum, prefactor included. Each has unit modulus.
std::vector<cplx> gauss_sum_dft(const FractionalTime& frac, const ModelParams& params,
                                BranchSign sign);

/// Closed-form value for p = 1 (odd-q and even-q cases).
cplx gauss_sum_closed_form(int q, int l, const ModelParams& params, BranchSign sign);

/// The ideal q-component cat state at t = pT/q for the equatorial
/// initial state: (1/sqrt(q)) sum_l F_l e^{i phi_l N/2}
/// |pi/2, phi0+phi_l>_N (|down> +- e^{-i(phi0+phi_l)}|up>)/sqrt(2),
/// normalized after summation.
JointState fractional_revival_state(const FractionalTime& frac,
                                    const ModelParams& params,
                                    const SpinCoherentSpec& spec, BranchSign sign);

/// Counts circular local maxima of an equatorial Q slice exceeding
/// prominence * max(slice); estimates the cat component count q.
int cat_count(std::span<const double> slice, double prominence = 0.2);

struct RevivalReport {
    double T = 0.0;
    double full_period = 0.0;
    int p = 1, q = 1;
    bool odd_N_rescaled = false;  // fractional analysis run against 2T
    std::vector<cplx> fourier_coeffs;
    std::vector<double> component_phases;
    double closed_form_residual = 0.0;  // NaN when p != 1
    int cat_count_estimate = 0;
    double fidelity_vs_exact = 0.0;
};

/// Full fractional-revival analysis at t = pT/q: Gauss-sum
/// coefficients, closed-form residual (p = 1), ideal-state fidelity
/// against the exact propagator, and the cat count of the exact
/// equatorial slice.
RevivalReport make_revival_report(const FractionalTime& frac,
                                  const ModelParams& params, BranchSign sign,
                                  int n_phi = 512);

/// Flat key=value serialization.
std::string to_key_value(const RevivalReport& rep);

}  // namespace spinstar

#endif
