#ifndef SPINSTAR_COMMON_HPP
#define SPINSTAR_COMMON_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

namespace spinstar {

using cplx = std::complex<double>;

inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Global normalization tolerance for state vectors.
inline constexpr double norm_tol = 1e-10;

inline double reduce_mod_2pi(double phi) {
    double r = std::fmod(phi, two_pi);
    if (r < 0.0) r += two_pi;
    return r;
}

inline double norm_squared(std::span<const cplx> amps) {
    double s = 0.0;
    for (const auto& a : amps) s += std::norm(a);
    return s;
}

inline void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace spinstar

#endif
