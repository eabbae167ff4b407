#include "spinstar/validation.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "spinstar/parallel.hpp"

namespace spinstar {

DickeVector normalized_lowering(const DickeVector& v) {
    // J- annihilates |-j>; that amplitude is dropped.
    DickeVector out(v.N);
    for (int k = 0; k < v.N; ++k) out.amps[k] = v.amps[k + 1];
    return out;
}

DickeVector normalized_raising(const DickeVector& v) {
    DickeVector out(v.N);
    for (int k = 1; k <= v.N; ++k) out.amps[k] = v.amps[k - 1];
    return out;
}

namespace {

DickeVector apply_defect_op(const DickeVector& v, double phi0) {
    // E = e^{-i phi0} - (J- J+)^{-1/2} J-
    const cplx e = std::polar(1.0, -phi0);
    DickeVector lowered = normalized_lowering(v);
    DickeVector out(v.N);
    for (int k = 0; k <= v.N; ++k) out.amps[k] = e * v.amps[k] - lowered.amps[k];
    return out;
}

}  // namespace

DefectReport eigenvalue_defect(const SpinCoherentSpec& spec) {
    require(spec.N >= 2, "eigenvalue_defect: N must be >= 2");
    const DickeVector c = coherent_coeffs(spec);
    const DickeVector ec = apply_defect_op(c, spec.phi);
    const DickeVector eec = apply_defect_op(ec, spec.phi);
    const double z2 = spec.south_pole ? std::numeric_limits<double>::infinity()
                                      : spec.zeta_abs * spec.zeta_abs;
    return {std::abs(overlap(c, ec)), std::abs(overlap(c, eec)),
            z2 > 1.0 / spec.N, z2 < static_cast<double>(spec.N)};
}

std::string to_key_value(const DefectReport& rep) {
    std::ostringstream os;
    os.precision(17);
    os << "e1 = " << rep.e1 << '\n';
    os << "e2 = " << rep.e2 << '\n';
    os << "above_lower_boundary = " << (rep.above_lower_boundary ? 1 : 0) << '\n';
    os << "below_upper_boundary = " << (rep.below_upper_boundary ? 1 : 0) << '\n';
    return os.str();
}

DefectMap defect_map(const std::vector<double>& theta_grid,
                     const std::vector<int>& N_list) {
    require(!theta_grid.empty() && !N_list.empty(), "defect_map: empty grid");
    DefectMap map;
    map.e1 = QRaster(N_list.size(), theta_grid.size());
    map.e2 = QRaster(N_list.size(), theta_grid.size());
    map.e1.axis0_label = map.e2.axis0_label = "N";
    map.e1.axis1_label = map.e2.axis1_label = "theta0";
    for (size_t r = 0; r < N_list.size(); ++r)
        map.e1.axis0[r] = map.e2.axis0[r] = N_list[r];
    map.e1.axis1 = map.e2.axis1 = theta_grid;
    map.boundary_low_theta.resize(N_list.size());
    map.boundary_high_theta.resize(N_list.size());

    parallel_for(N_list.size(), [&](std::size_t r) {
        const int N = N_list[r];
        map.boundary_low_theta[r] = 2.0 * std::atan(1.0 / std::sqrt(N));
        map.boundary_high_theta[r] = 2.0 * std::atan(std::sqrt(N));
        for (size_t c = 0; c < theta_grid.size(); ++c) {
            const auto rep =
                eigenvalue_defect(SpinCoherentSpec::from_bloch(N, theta_grid[c], 0.0));
            map.e1.at(r, c) = rep.e1;
            map.e2.at(r, c) = rep.e2;
        }
    });
    return map;
}

EdgeCoefficientReport edge_coefficient_bounds(const SpinCoherentSpec& spec) {
    const int N = spec.N;
    const double z2 = spec.south_pole ? std::numeric_limits<double>::infinity()
                                      : spec.zeta_abs * spec.zeta_abs;
    EdgeCoefficientReport rep;
    rep.c_top = std::isinf(z2) ? 1.0 : std::pow(z2 / (1.0 + z2), N);
    rep.c_bottom = std::isinf(z2) ? 0.0 : std::pow(1.0 / (1.0 + z2), N);
    rep.bound = std::pow(1.0 / (1.0 + 1.0 / N), N);
    rep.in_regime = z2 > 1.0 / N && z2 < static_cast<double>(N);
    rep.within_bound = rep.c_top <= rep.bound && rep.c_bottom <= rep.bound;
    return rep;
}

double approximation_fidelity(const ModelParams& params, const SpinCoherentSpec& spec,
                              BranchSign sign, double t) {
    const cplx alpha = sign == BranchSign::plus ? 1.0 : 0.0;
    const cplx beta = sign == BranchSign::plus ? 0.0 : 1.0;
    const JointState initial = build_initial(params, spec, alpha, beta);
    const JointState exact = exact_propagate(initial, params, t);
    const JointState approx = truncated_propagate(initial, params, t);
    return std::abs(overlap(approx, exact));
}

QRaster fidelity_map_vs_N(const std::vector<int>& N_list,
                          const std::vector<double>& t_over_T_grid, double lambda,
                          BranchSign sign) {
    require(!N_list.empty() && !t_over_T_grid.empty(), "fidelity_map_vs_N: empty grid");
    QRaster raster(N_list.size(), t_over_T_grid.size());
    raster.axis0_label = "N";
    raster.axis1_label = "t_over_T";
    for (size_t r = 0; r < N_list.size(); ++r) raster.axis0[r] = N_list[r];
    raster.axis1 = t_over_T_grid;

    parallel_for(N_list.size(), [&](std::size_t r) {
        const int N = N_list[r];
        ModelParams params;
        params.N = N;
        params.lambda = lambda;
        const auto spec =
            SpinCoherentSpec::from_bloch(N, std::numbers::pi / 2.0, 0.0);
        const double j = 0.5 * N;
        const double T = two_pi / lambda * std::sqrt(j * (j + 1.0));
        for (size_t c = 0; c < t_over_T_grid.size(); ++c)
            raster.at(r, c) =
                approximation_fidelity(params, spec, sign, t_over_T_grid[c] * T);
    });
    return raster;
}

QRaster fidelity_map_vs_theta(int N, const std::vector<double>& theta_grid,
                              const std::vector<double>& t_over_T_grid, double lambda,
                              BranchSign sign) {
    require(!theta_grid.empty() && !t_over_T_grid.empty(),
            "fidelity_map_vs_theta: empty grid");
    QRaster raster(theta_grid.size(), t_over_T_grid.size());
    raster.axis0_label = "theta0";
    raster.axis1_label = "t_over_T";
    raster.axis0 = theta_grid;
    raster.axis1 = t_over_T_grid;

    ModelParams params;
    params.N = N;
    params.lambda = lambda;
    const double j = 0.5 * N;
    const double T = two_pi / lambda * std::sqrt(j * (j + 1.0));

    parallel_for(theta_grid.size(), [&](std::size_t r) {
        const auto spec = SpinCoherentSpec::from_bloch(N, theta_grid[r], 0.0);
        for (size_t c = 0; c < t_over_T_grid.size(); ++c)
            raster.at(r, c) =
                approximation_fidelity(params, spec, sign, t_over_T_grid[c] * T);
    });
    return raster;
}

TruncationBounds truncation_time_bounds(const ModelParams& params,
                                        const SpinCoherentSpec& spec) {
    params.validate();
    const double z2 = spec.zeta_abs * spec.zeta_abs;
    const double inf = std::numeric_limits<double>::infinity();
    TruncationBounds b;
    if (spec.south_pole) {
        // |zeta| -> infinity: the ratio (1+z^2)/(1-z^2) tends to -1.
        b.t1 = 2.0 / params.N / params.lambda;
    } else if (z2 == 1.0) {
        b.t1 = inf;
    } else {
        const double ratio = (1.0 + z2) / (1.0 - z2);
        b.t1 = 2.0 / params.N * std::pow(ratio, 4) / params.lambda;
        b.t1 = std::abs(b.t1);
    }
    if (z2 == 0.0 || spec.south_pole) {
        b.t2 = inf;
    } else {
        b.t2 = params.N * std::pow(1.0 + z2, 4) / (8.0 * z2 * z2) / params.lambda;
    }
    return b;
}

}  // namespace spinstar
