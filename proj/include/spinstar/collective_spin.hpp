#ifndef SPINSTAR_COLLECTIVE_SPIN_HPP
#define SPINSTAR_COLLECTIVE_SPIN_HPP

#include <span>
#include <vector>

#include "spinstar/common.hpp"

namespace spinstar {

/// Parameters of an N-qubit spin-coherent state |zeta> with
/// zeta = |zeta| e^{-i phi}, or equivalently Bloch angles
/// theta = 2 arctan|zeta| and azimuth phi.
struct SpinCoherentSpec {
    int N = 1;
    double zeta_abs = 0.0;
    double phi = 0.0;
    // theta = pi (|zeta| -> infinity) is representable only through
    // this flag; zeta_abs is ignored when set.
    bool south_pole = false;

    SpinCoherentSpec() = default;
    SpinCoherentSpec(int N_, double zeta_abs_, double phi_);

    static SpinCoherentSpec from_bloch(int N, double theta, double phi);
    static SpinCoherentSpec at_south_pole(int N, double phi);

    double theta() const;
};

/// theta = 2 arctan|zeta|; phi passes through unchanged.
double bloch_from_zeta(double zeta_abs);
/// |zeta| = tan(theta/2); theta = pi maps to +infinity.
double zeta_from_bloch(double theta);

/// Complex amplitudes a_m over the Dicke basis m = -N/2..N/2 of the
/// j = N/2 symmetric subspace; stored at integer index k = m + N/2.
struct DickeVector {
    int N = 1;
    std::vector<cplx> amps;  // length N + 1

    DickeVector() = default;
    explicit DickeVector(int N_) : N(N_), amps(static_cast<size_t>(N_) + 1) {}

    double norm() const { return std::sqrt(norm_squared(amps)); }
    bool is_normalized(double tol = norm_tol) const {
        return std::abs(norm_squared(amps) - 1.0) <= tol;
    }
};

/// Dicke-basis coefficients C_m of the spin-coherent state, evaluated
/// in the log domain so they stay finite and accurate up to N ~ 1e4.
DickeVector coherent_coeffs(const SpinCoherentSpec& spec);

struct DickeMoments {
    double m_bar;
    double delta_m;
};

/// Mean and standard deviation of m under |a_m|^2.
DickeMoments dicke_moments(const DickeVector& v);

/// <u|v> = sum_m conj(u_m) v_m.
cplx overlap(const DickeVector& u, const DickeVector& v);

}  // namespace spinstar

#endif
