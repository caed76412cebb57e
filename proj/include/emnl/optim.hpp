#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "emnl/error.hpp"
#include "emnl/matrix.hpp"

namespace emnl {

// Adam with bias correction and global-norm gradient clipping.
struct AdamState {
    Vector m;  // first moment
    Vector v;  // second moment
    std::int64_t step = 0;
    double learning_rate = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-7;
    double clipnorm = 50.0;  // <= 0 or +inf disables clipping

    AdamState() = default;
    explicit AdamState(std::size_t n_params) : m(n_params, 0.0), v(n_params, 0.0) {}
};

inline bool clipnorm_enabled(double clipnorm) {
    return clipnorm > 0.0 && std::isfinite(clipnorm);
}

// Scale factor that brings the gradient to global L2 norm <= clipnorm.
inline double clip_scale(double grad_norm, double clipnorm) {
    if (!clipnorm_enabled(clipnorm) || grad_norm <= clipnorm) return 1.0;
    return clipnorm / grad_norm;
}

inline void adam_step(Vector& params, const Vector& grads, AdamState& state) {
    if (params.size() != grads.size() || params.size() != state.m.size())
        throw FitError("adam_step: shape mismatch (params " + std::to_string(params.size()) +
                       ", grads " + std::to_string(grads.size()) + ", state " +
                       std::to_string(state.m.size()) + ")");
    state.step += 1;
    const double scale = clip_scale(l2_norm(grads), state.clipnorm);
    const double bc1 = 1.0 - std::pow(state.beta1, static_cast<double>(state.step));
    const double bc2 = 1.0 - std::pow(state.beta2, static_cast<double>(state.step));
    for (std::size_t i = 0; i < params.size(); ++i) {
        const double g = grads[i] * scale;
        state.m[i] = state.beta1 * state.m[i] + (1.0 - state.beta1) * g;
        state.v[i] = state.beta2 * state.v[i] + (1.0 - state.beta2) * g * g;
        const double mhat = state.m[i] / bc1;
        const double vhat = state.v[i] / bc2;
        params[i] -= state.learning_rate * mhat / (std::sqrt(vhat) + state.epsilon);
    }
}

}  // namespace emnl
