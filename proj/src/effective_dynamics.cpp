#include "spinstar/effective_dynamics.hpp"

namespace spinstar {

SemiclassicalBasis semiclassical_basis(double phi0) {
    const double r = 1.0 / std::sqrt(2.0);
    const cplx e = std::polar(1.0, -phi0);
    return {{r, r * e}, {r, -r * e}};
}

PhasePair fg_phases(const ModelParams& params, BranchSign sign, double m, double t) {
    const double j = 0.5 * params.N;
    require(m >= -j - 1e-9 && m <= j + 1e-9, "fg_phases: m out of range");
    const double r = std::sqrt(j * (j + 1.0));
    const double s = sign_of(sign);
    const double base = -s * t * params.lambda;
    return {std::polar(1.0, base * (r - m * (m - 1.0) / (2.0 * r))),
            std::polar(1.0, base * (r - m * (m + 1.0) / (2.0 * r)))};
}

JointState truncated_propagate(const JointState& state, const ModelParams& params,
                               double t) {
    require(state.N == params.N, "truncated_propagate: N mismatch");
    const int N = state.N;
    const double j = 0.5 * N;
    const double r = std::sqrt(j * (j + 1.0));
    const cplx e = std::polar(1.0, -params.phi0);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    JointState out(N);
    for (int branch = 0; branch < 2; ++branch) {
        const double s = branch == 0 ? 1.0 : -1.0;
        const double base = -s * t * params.lambda;
        for (int k = 0; k <= N; ++k) {
            const double m = k - j;
            // <phi0 s | qubit factor at level m>
            const cplx c =
                (state.at(k, 0) + s * std::conj(e) * state.at(k, 1)) * inv_sqrt2;
            const cplx F = std::polar(1.0, base * (r - m * (m - 1.0) / (2.0 * r)));
            const cplx G = std::polar(1.0, base * (r - m * (m + 1.0) / (2.0 * r)));
            out.at(k, 0) += c * F * inv_sqrt2;
            out.at(k, 1) += c * s * e * G * inv_sqrt2;
        }
    }
    return out;
}

double effective_eigenphase(const ModelParams& params, double m, int s,
                            BranchSign sign) {
    require(s == 1 || s == -1, "effective_eigenphase: s must be +-1");
    const double j = 0.5 * params.N;
    require(m >= -j - 1e-9 && m <= j + 1e-9, "effective_eigenphase: m out of range");
    const double radicand = j * (j + 1.0) - m * m - m * s;
    if (radicand <= 0.0) return 0.0;  // stationary edge states
    return sign_of(sign) * params.lambda * std::sqrt(radicand);
}

double truncated_eigenphase(const ModelParams& params, double m, int s,
                            BranchSign sign) {
    const double j = 0.5 * params.N;
    const double r = std::sqrt(j * (j + 1.0));
    return sign_of(sign) * params.lambda * (r - (m * m + m * s) / (2.0 * r));
}

double series_coefficient(int k) {
    require(k >= 0, "series_coefficient: k must be >= 0");
    if (k == 0) return 1.0;
    if (k == 1) return -0.5;
    // (2k-3)!! / (2^k k!)
    double dfact = 1.0;
    for (int i = 2 * k - 3; i >= 1; i -= 2) dfact *= i;
    double denom = 1.0;
    for (int i = 1; i <= k; ++i) denom *= 2.0 * i;
    return -dfact / denom;
}

}  // namespace spinstar
