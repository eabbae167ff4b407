#ifndef SPINSTAR_PHASE_SPACE_HPP
#define SPINSTAR_PHASE_SPACE_HPP

#include <string>
#include <vector>

#include "spinstar/exact_dynamics.hpp"

namespace spinstar {

/// Real-valued raster of Husimi Q values with grid metadata. axis0 is
/// either a theta grid or a time grid in units of T; axis1 is the phi
/// grid. Row r, column c lives at values[r * cols + c].
struct QRaster {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;
    std::vector<double> axis0;
    std::vector<double> axis1;
    std::string axis0_label;  // "theta", "t_over_T", or "N"
    std::string axis1_label;
    std::vector<std::pair<std::string, std::string>> meta;

    QRaster() = default;
    QRaster(std::size_t r, std::size_t c)
        : rows(r), cols(c), values(r * c, 0.0), axis0(r), axis1(c) {}

    double& at(std::size_t r, std::size_t c) { return values[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
};

/// Q(theta, phi) = |<Psi | theta,phi>_{N+1}|^2, with the (N+1)-qubit
/// coherent probe factorized as |theta,phi>_N (x) |theta,phi>_1.
double husimi_q(const JointState& state, double theta, double phi);

/// Q over a uniform grid: theta cell-centered in (0, pi), phi in [0, 2pi).
QRaster q_grid(const JointState& state, int n_theta, int n_phi);

/// Q(pi/2, phi) on a uniform phi grid.
std::vector<double> equatorial_slice(const JointState& state, int n_phi);

/// Quantum carpet: rows are times uniform in [0, t_max_in_T * T],
/// columns phi; each row is the equatorial slice of the exactly
/// propagated state. Rows are computed in parallel.
QRaster carpet(const ModelParams& params, const SpinCoherentSpec& spec, cplx alpha,
               cplx beta, int n_t, int n_phi, double t_max_in_T);

}  // namespace spinstar

#endif
