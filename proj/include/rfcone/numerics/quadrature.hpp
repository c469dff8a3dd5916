#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "rfcone/numerics/errors.hpp"
#include "rfcone/numerics/interval.hpp"

namespace rfcone {

/// N-point Gauss-Legendre rule on [-1, 1]; exact for degree 2N-1.
template <std::size_t N>
struct GaussLegendre {
    std::array<double, N> nodes{};
    std::array<double, N> weights{};

    static const GaussLegendre& get() {
        static const GaussLegendre rule = build();
        return rule;
    }

private:
    static GaussLegendre build() {
        GaussLegendre r;
        for (std::size_t i = 0; i < N; ++i) {
            // Chebyshev initial guess, then Newton on P_N.
            double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(N) + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (std::size_t k = 2; k <= N; ++k) {
                    double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
                    p0 = p1;
                    p1 = pk;
                }
                dp = static_cast<double>(N) * (x * p1 - p0) / (x * x - 1.0);
                double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            r.nodes[i] = x;
            r.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        return r;
    }
};

template <std::size_t N, class F>
double gauss_legendre(F&& f, double lo, double hi) {
    const auto& rule = GaussLegendre<N>::get();
    const double half = 0.5 * (hi - lo), mid = 0.5 * (hi + lo);
    double sum = 0.0;
    for (std::size_t i = 0; i < N; ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * sum;
}

struct QuadratureResult {
    double value;
    double error_estimate;
    std::size_t evaluations;
};

struct QuadratureOptions {
    int max_depth = 40;
    std::size_t max_evaluations = 2'000'000;
};

/// Adaptive composite 8-point Gauss-Legendre. A panel is accepted when the
/// one-panel and two-half-panel estimates agree within its share of tol.
template <class F>
QuadratureResult integrate_1d(F&& f, Interval domain, double tol, QuadratureOptions options = {}) {
    constexpr std::size_t kPoints = 8;
    struct Panel {
        double lo, hi, estimate;
        int depth;
    };
    std::size_t evaluations = kPoints;
    std::vector<Panel> stack{{domain.lo, domain.hi, gauss_legendre<kPoints>(f, domain.lo, domain.hi), 0}};
    double total = 0.0, error = 0.0;
    bool converged = true;
    const double full_width = domain.width();
    while (!stack.empty()) {
        Panel p = stack.back();
        stack.pop_back();
        const double mid = 0.5 * (p.lo + p.hi);
        const double left = gauss_legendre<kPoints>(f, p.lo, mid);
        const double right = gauss_legendre<kPoints>(f, mid, p.hi);
        evaluations += 2 * kPoints;
        const double refined = left + right;
        const double diff = std::abs(refined - p.estimate);
        const double share = tol * (p.hi - p.lo) / full_width;
        if (diff <= share || p.depth >= options.max_depth || evaluations >= options.max_evaluations) {
            if (diff > share) converged = false;
            total += refined;
            error += diff;
        } else {
            stack.push_back({p.lo, mid, left, p.depth + 1});
            stack.push_back({mid, p.hi, right, p.depth + 1});
        }
    }
    if (!converged && error > tol)
        throw NonConvergence("integrate_1d: subdivision limit reached", total, error);
    return {total, error, evaluations};
}

}  // namespace rfcone
