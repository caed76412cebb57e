#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>

#include "emnl/error.hpp"

namespace emnl {

// Max over available entries. Throws if no entry is available.
inline double masked_max(std::span<const double> v, std::span<const std::uint8_t> mask) {
    double vmax = -std::numeric_limits<double>::infinity();
    bool any = false;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (!mask[j]) continue;
        any = true;
        if (v[j] > vmax) vmax = v[j];
    }
    if (!any) throw ValidationError("no available alternatives");
    return vmax;
}

// Probabilities over available entries; unavailable entries get exactly 0.
// Max-subtraction keeps exp() in range for arbitrary finite utilities.
inline void softmax_masked(std::span<const double> v, std::span<const std::uint8_t> mask,
                           std::span<double> out) {
    const double vmax = masked_max(v, mask);
    double sum = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j) {
        out[j] = mask[j] ? std::exp(v[j] - vmax) : 0.0;
        sum += out[j];
    }
    const double inv = 1.0 / sum;
    for (std::size_t j = 0; j < v.size(); ++j) out[j] *= inv;
}

// log sum_{available j} exp(v_j)
inline double log_sum_exp_masked(std::span<const double> v, std::span<const std::uint8_t> mask) {
    const double vmax = masked_max(v, mask);
    double sum = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j)
        if (mask[j]) sum += std::exp(v[j] - vmax);
    return vmax + std::log(sum);
}

}  // namespace emnl
