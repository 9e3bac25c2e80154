#pragma once

#include <optional>
#include <vector>

#include "cpn/surface.hpp"

namespace cpn {

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;         // |value(level L) − value(level L−1)|
    std::vector<long> node_counts;       // total nodes per order-doubling level
    std::optional<long> integer_snap;    // nearest integer, when requested
    double snap_deviation = 0.0;

    IntegralResult& with_snap();
};

struct QuadratureOptions {
    double rel_tol = 1e-8;
    int initial_order = 64;   // tensor order per disk (radial = angular)
    int max_order = 1024;
    int threads = 0;          // 0: use CPN_THREADS env or hardware concurrency
};

/// ∫_{R²} f dξ₁dξ₂ for a rational f, real-valued on the real slice
/// ξ₋ = conj ξ₊.  The plane splits into the closed unit disk plus the
/// inverted exterior: ∫_{|ξ|≤1} f + ∫_{|w|≤1} f(1/w₊,1/w₋)/(w₊w₋)², each by
/// tensor Gauss–Legendre in polar coordinates with order doubling.  All
/// plane measures are Lebesgue dξ₁dξ₂.
IntegralResult integrate_plane(const RationalFunction& f, const QuadratureOptions& opts = {});

/// S = ∫ L(P); the action of the model.
IntegralResult action(const Projector& p, const QuadratureOptions& opts = {});
/// A = ∫ 2 g₊₋ with g₊₋ = (∂₊F, ∂₋F) computed from the surface tangents —
/// an independent route that must agree with the action.
IntegralResult area(const ProjectorTower& tower, int k, const QuadratureOptions& opts = {});
/// Q = (1/π) ∫ q, snapped to the nearest integer.
IntegralResult charge(const Projector& p, const QuadratureOptions& opts = {});
/// Δ = −(1/π) ∫ ∂₊∂₋ ln L, snapped to the nearest integer.
IntegralResult euler_poincare(const Projector& p, const QuadratureOptions& opts = {});
/// W = S/2 + (3/2) ∫ q²/L.
IntegralResult willmore(const ProjectorTower& tower, int k, const QuadratureOptions& opts = {});

/// Gauss–Legendre nodes/weights on [-1, 1].
void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace cpn
