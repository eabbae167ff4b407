#ifndef SPINSTAR_VALIDATION_HPP
#define SPINSTAR_VALIDATION_HPP

#include <string>
#include <vector>

#include "spinstar/effective_dynamics.hpp"
#include "spinstar/phase_space.hpp"

namespace spinstar {

/// Normalized ladder actions on Dicke amplitudes: pure index shifts.
/// Lowering maps a_m -> a'_{m-1} = a_m; the m = +N/2 amplitude has no
/// image and is dropped, so the norm may shrink.
DickeVector normalized_lowering(const DickeVector& v);
DickeVector normalized_raising(const DickeVector& v);

/// How far the coherent state is from being an eigenstate of the
/// normalized lowering operator with eigenvalue e^{-i phi0}:
/// e1 = |<zeta|E|zeta>|, e2 = |<zeta|E^2|zeta>|.
struct DefectReport {
    double e1;
    double e2;
    bool above_lower_boundary;  // |zeta|^2 > 1/N
    bool below_upper_boundary;  // |zeta|^2 < N
};

DefectReport eigenvalue_defect(const SpinCoherentSpec& spec);

std::string to_key_value(const DefectReport& rep);

/// e1 and e2 rasters over (theta0, N), with the boundary curves
/// |zeta|^2 = 1/N and |zeta|^2 = N expressed as theta values per N.
struct DefectMap {
    QRaster e1;
    QRaster e2;
    std::vector<double> boundary_low_theta;   // per N entry
    std::vector<double> boundary_high_theta;  // per N entry
};

DefectMap defect_map(const std::vector<double>& theta_grid,
                     const std::vector<int>& N_list);

/// Edge coefficients |C_{+-N/2}|^2 against the bound (1/(1+1/N))^N.
struct EdgeCoefficientReport {
    double c_top;
    double c_bottom;
    double bound;
    bool in_regime;  // 1/N < |zeta|^2 < N
    bool within_bound;
};

EdgeCoefficientReport edge_coefficient_bounds(const SpinCoherentSpec& spec);

/// |<Psi_trunc(t)|Psi_exact(t)>| for a pure-branch initial state.
double approximation_fidelity(const ModelParams& params, const SpinCoherentSpec& spec,
                              BranchSign sign, double t);

/// Fidelity raster against N at theta0 = pi/2; times in units of each
/// N's own revival time T.
QRaster fidelity_map_vs_N(const std::vector<int>& N_list,
                          const std::vector<double>& t_over_T_grid, double lambda,
                          BranchSign sign);

/// Fidelity raster against theta0 at fixed N.
QRaster fidelity_map_vs_theta(int N, const std::vector<double>& theta_grid,
                              const std::vector<double>& t_over_T_grid, double lambda,
                              BranchSign sign);

/// Validity times of the series truncation, in units of 1/lambda; the
/// smaller of the two is the operative constraint. t1 is +infinity at
/// |zeta| = 1.
struct TruncationBounds {
    double t1;
    double t2;
};

TruncationBounds truncation_time_bounds(const ModelParams& params,
                                        const SpinCoherentSpec& spec);

}  // namespace spinstar

#endif
