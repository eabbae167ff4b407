#ifndef SPINSTAR_EXACT_DYNAMICS_HPP
#define SPINSTAR_EXACT_DYNAMICS_HPP

#include <vector>

#include "spinstar/collective_spin.hpp"
#include "spinstar/common.hpp"

namespace spinstar {

/// Physical configuration of a spin-star run. omega and Omega are kept
/// for documentation only: all dynamics here is resonant (Omega = omega)
/// and evaluated in the interaction picture, where neither enters.
struct ModelParams {
    int N = 100;
    double lambda = 1.0;
    double omega = 0.0;
    double Omega = 0.0;
    double phi0 = 0.0;

    void validate() const {
        require(N >= 1, "ModelParams: N must be >= 1");
        require(lambda > 0.0 && std::isfinite(lambda),
                "ModelParams: lambda must be positive and finite");
    }
};

/// Joint state of the N-qubit Dicke subspace and the central qubit:
/// amplitudes a_{m,s} with m = -N/2..N/2 (index k = m + N/2) and
/// s in {down, up}.
struct JointState {
    int N = 1;
    std::vector<cplx> amps;  // layout: [k][s], s = 0 down, 1 up

    JointState() = default;
    explicit JointState(int N_) : N(N_), amps(2 * (static_cast<size_t>(N_) + 1)) {}

    cplx& at(int k, int s) { return amps[2 * static_cast<size_t>(k) + s]; }
    const cplx& at(int k, int s) const { return amps[2 * static_cast<size_t>(k) + s]; }

    double norm() const { return std::sqrt(norm_squared(amps)); }
    bool is_normalized(double tol = norm_tol) const {
        return std::abs(norm_squared(amps) - 1.0) <= tol;
    }
};

/// |zeta0>_N tensor (alpha |phi0+> + beta |phi0->) with
/// |phi0+-> = (|down> +- e^{-i phi0} |up>)/sqrt(2).
JointState build_initial(const ModelParams& params, const SpinCoherentSpec& spec,
                         cplx alpha, cplx beta);

/// Applies U(t) = exp(-i t lambda (J- s+ + J+ s-)) in closed form.
/// The pairs {|m,up>, |m+1,down>} form 2x2 blocks with Rabi rate
/// g_m = lambda sqrt((j-m)(j+m+1)); |j,up> and |-j,down> are stationary.
JointState exact_propagate(const JointState& state, const ModelParams& params,
                           double t);

/// Expectation and eigenvalue distribution of Jz + sigma_z/2, the
/// conserved excitation. Eigenvalue M_i = i - (N+1)/2 at index i,
/// i = 0..N+1.
struct ExcitationReport {
    double expectation;
    std::vector<double> distribution;  // length N + 2

    double eigenvalue(int i, int N) const { return i - 0.5 * (N + 1); }
};

ExcitationReport conserved_excitation(const JointState& state);

cplx overlap(const JointState& u, const JointState& v);

}  // namespace spinstar

#endif
