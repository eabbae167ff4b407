#include "spinstar/exact_dynamics.hpp"

namespace spinstar {

JointState build_initial(const ModelParams& params, const SpinCoherentSpec& spec,
                         cplx alpha, cplx beta) {
    params.validate();
    require(params.N == spec.N, "build_initial: N mismatch between params and spec");
    require(std::abs(std::norm(alpha) + std::norm(beta) - 1.0) <= norm_tol,
            "build_initial: (alpha, beta) not normalized");
    require(std::abs(reduce_mod_2pi(spec.phi) - reduce_mod_2pi(params.phi0)) <= 1e-12,
            "build_initial: spec.phi must equal params.phi0");

    const DickeVector c = coherent_coeffs(spec);
    // Qubit factor in the |down>, |up> basis.
    const cplx q_down = (alpha + beta) / std::sqrt(2.0);
    const cplx q_up = (alpha - beta) * std::polar(1.0, -params.phi0) / std::sqrt(2.0);

    JointState st(params.N);
    for (int k = 0; k <= params.N; ++k) {
        st.at(k, 0) = c.amps[k] * q_down;
        st.at(k, 1) = c.amps[k] * q_up;
    }
    return st;
}

JointState exact_propagate(const JointState& state, const ModelParams& params,
                           double t) {
    require(std::isfinite(t), "exact_propagate: t must be finite");
    require(state.N == params.N, "exact_propagate: N mismatch");
    const int N = state.N;
    const double j = 0.5 * N;

    JointState out = state;
    for (int k = 0; k < N; ++k) {
        // Block couples |m,up> (index k) with |m+1,down> (index k+1), m = k - j.
        const double m = k - j;
        const double g = params.lambda * std::sqrt((j - m) * (j + m + 1.0));
        const double c = std::cos(g * t);
        const double s = std::sin(g * t);
        const cplx a_up = state.at(k, 1);
        const cplx a_down = state.at(k + 1, 0);
        out.at(k, 1) = c * a_up - cplx(0.0, 1.0) * s * a_down;
        out.at(k + 1, 0) = c * a_down - cplx(0.0, 1.0) * s * a_up;
    }
    return out;
}

ExcitationReport conserved_excitation(const JointState& state) {
    require(state.is_normalized(), "conserved_excitation: state not normalized");
    const int N = state.N;
    ExcitationReport rep;
    rep.distribution.assign(static_cast<size_t>(N) + 2, 0.0);
    // M = m - 1/2 for down (bucket k), M = m + 1/2 for up (bucket k+1).
    for (int k = 0; k <= N; ++k) {
        rep.distribution[k] += std::norm(state.at(k, 0));
        rep.distribution[k + 1] += std::norm(state.at(k, 1));
    }
    double ex = 0.0;
    for (int i = 0; i <= N + 1; ++i)
        ex += rep.distribution[i] * (i - 0.5 * (N + 1));
    rep.expectation = ex;
    return rep;
}

cplx overlap(const JointState& u, const JointState& v) {
    require(u.N == v.N, "overlap: mismatched N");
    cplx s = 0.0;
    for (size_t i = 0; i < u.amps.size(); ++i) s += std::conj(u.amps[i]) * v.amps[i];
    return s;
}

}  // namespace spinstar
