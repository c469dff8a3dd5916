#pragma once

// Conformal bookkeeping for an Einstein metric g = s^-2 k conformal to an
// extremal Kahler metric k in real dimension four.

#include <cmath>

#include "rfcone/numerics/errors.hpp"

namespace rfcone {

/// sup Delta s^2 below this (Einstein constant 3) makes the Ricci-flat cone
/// unstable: 6 - 15/4 leaves exactly the 9/4 gap needed at n = 5.
inline constexpr double kConeInstabilityThreshold = 15.0 / 4.0;
/// sup Delta s^2 below this makes the shrinker integrand 6 - Delta s^2 positive.
inline constexpr double kShrinkerInstabilityThreshold = 6.0;
/// The Hardy gap for cones over four-manifolds (1 / C_H at n = 5).
inline constexpr double kFourManifoldGap = 9.0 / 4.0;
/// Normalized Einstein constant.
inline constexpr double kNormalizedEinsteinConstant = 3.0;

/// Scalar curvature of g = s^-2 k: s^3 + 6 s Delta s - 12 |grad s|^2.
template <class T>
T conformal_scal_identity(const T& s, const T& laplacian_s, const T& grad_s_sq) {
    return s * s * s + 6 * s * laplacian_s - 12 * grad_s_sq;
}

/// Delta s^2 = kappa/3 + 6 |grad s|^2 - s^3/3 when g has constant scalar
/// curvature kappa.
template <class T>
T delta_s2_identity(const T& kappa, const T& grad_s_sq, const T& s) {
    return kappa / 3 + 6 * grad_s_sq - s * s * s / 3;
}

struct NormalizedSup {
    double ratio;            // 12 K / kappa
    bool cone_unstable;      // ratio < 15/4
    bool shrinker_unstable;  // ratio < 6
};

/// sup Delta s^2 after rescaling so that the Einstein constant is 3.
inline NormalizedSup normalized_sup(double kappa, double K) {
    if (!(kappa > 0.0)) throw DomainError("normalized_sup requires kappa > 0");
    const double ratio = 12.0 * K / kappa;
    return {ratio, ratio < kConeInstabilityThreshold, ratio < kShrinkerInstabilityThreshold};
}

/// k -> c^2 k sends s -> c^-2 s, g -> c^6 g and Delta s^2 -> c^-6 Delta s^2.
struct ScalingState {
    double c;
    double kappa;  // scalar curvature of the Einstein metric before scaling

    /// c = (kappa / 12)^(1/6), the scale giving Einstein constant 3.
    static ScalingState normalizing(double kappa) {
        if (!(kappa > 0.0)) throw DomainError("ScalingState requires kappa > 0");
        return {std::pow(kappa / 12.0, 1.0 / 6.0), kappa};
    }

    double einstein_constant() const { return kappa / (4.0 * std::pow(c, 6)); }
    double scale_delta_s2(double value) const { return value / std::pow(c, 6); }
    double scale_kahler_scalar(double s) const { return s / (c * c); }
};

}  // namespace rfcone
