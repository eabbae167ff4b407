#ifndef SPINSTAR_EFFECTIVE_DYNAMICS_HPP
#define SPINSTAR_EFFECTIVE_DYNAMICS_HPP

#include <array>

#include "spinstar/exact_dynamics.hpp"

namespace spinstar {

/// Selects which semiclassical qubit eigenstate |phi0+-> the effective
/// dynamics is conditioned on.
enum class BranchSign : int { plus = +1, minus = -1 };

inline int sign_of(BranchSign b) { return static_cast<int>(b); }

/// The two unit-modulus evolution phases applied per Dicke level by the
/// truncated one-axis-twisting Hamiltonian: F on the down component,
/// G on the up component.
struct PhasePair {
    cplx F;
    cplx G;
};

/// |phi0+-> = (|down> +- e^{-i phi0} |up>)/sqrt(2), as (down, up) amplitudes.
struct SemiclassicalBasis {
    std::array<cplx, 2> plus;
    std::array<cplx, 2> minus;
};

SemiclassicalBasis semiclassical_basis(double phi0);

/// F_m(t) = exp[-/+ i t lambda (r - m(m-1)/(2r))], G_m likewise with
/// m(m+1), r = sqrt(j(j+1)), j = N/2.
PhasePair fg_phases(const ModelParams& params, BranchSign sign, double m, double t);

/// Evolves a joint state under the truncated effective Hamiltonian:
/// per Dicke level the qubit factor is split into |phi0+-> components
/// and each branch picks up its F/G phases, global terms included
/// (they carry the relative phase when both branches are populated).
JointState truncated_propagate(const JointState& state, const ModelParams& params,
                               double t);

/// Exact eigenphase rate +-lambda sqrt(j(j+1) - m^2 - m s) of the
/// untruncated effective Hamiltonian on |j,m> |z = s>; 0 at the
/// stationary edges where the radicand vanishes or goes negative.
double effective_eigenphase(const ModelParams& params, double m, int s,
                            BranchSign sign);

/// Truncated eigenphase rate from the first two series terms.
double truncated_eigenphase(const ModelParams& params, double m, int s,
                            BranchSign sign);

/// Series coefficient A_k of the square-root expansion: A_0 = 1,
/// A_1 = -1/2, A_k = -(2k-3)!!/(2^k k!) for k >= 2.
double series_coefficient(int k);

}  // namespace spinstar

#endif
