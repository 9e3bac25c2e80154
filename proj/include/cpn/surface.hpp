#pragma once

#include <optional>
#include <string>

#include "cpn/projector.hpp"

namespace cpn {

/// c_k = (1+2k)/N, the spectral constant of the k-th surface.
GaussianRational surface_constant(int k, int n);

/// Immersed surface F_k = −i(P_k + 2Σ_{j<k}P_j − c_k·I) ∈ su(N), with its
/// exact algebraic certificates (skew-Hermitian, traceless, minimal
/// polynomial annihilation) established at construction.
struct SurfaceField {
    MatrixField f;
    int k = 0;
    GaussianRational c_k;
};

SurfaceField surface_from_tower(const ProjectorTower& tower, int k);

/// (A,B) = −½ tr(A·B), proportional to the Killing form on su(N).
RationalFunction killing_product(const MatrixField& a, const MatrixField& b);

/// ∂₊F = −i[∂₊P, P],  ∂₋F = +i[∂₋P, P] — the tangents of the surface
/// attached to a tower element P.
MatrixField tangent_plus(const Projector& p);
MatrixField tangent_minus(const Projector& p);

/// Gaussian curvature K = −2 ∂₊∂₋(ln L)/L, computed rationally via
/// ∂₊∂₋ln L = (L ∂₊∂₋L − ∂₊L ∂₋L)/L².
RationalFunction gauss_curvature(const Projector& p);
/// Rational form of ∂₊∂₋ ln L (the Euler-Poincaré integrand, up to −1/π).
RationalFunction log_lagrangian_mixed_derivative(const Projector& p);
/// Curvature of a holomorphic (dir=Plus) or anti-holomorphic (dir=Minus)
/// projector through covariant derivatives:
/// K = 4 − 2(‖D²P‖²‖DP‖² − |⟨DP, D²P⟩|²)/‖DP‖⁶.
RationalFunction gauss_curvature_covariant(const Projector& p, const VectorField& e, Dir dir);

/// Mean curvature H = (−4i/L)[∂₊P, ∂₋P] and its Killing norm; the direct
/// norm and the closed form 4(L² + 3q²)/L² must agree exactly.
std::pair<MatrixField, RationalFunction> mean_curvature(const Projector& p);

/// (Γ⁺₊₊, Γ⁻₋₋) = (∂₊L/L, ∂₋L/L).
std::pair<RationalFunction, RationalFunction> christoffel(const Projector& p);

struct Normals {
    MatrixField npp;  // ∂₊²F − Γ⁺₊₊ ∂₊F
    MatrixField npm;  // ∂₊∂₋F = (L/4)·H
    MatrixField nmm;  // ∂₋²F − Γ⁻₋₋ ∂₋F
};

/// Second-fundamental-form normals; each is verified Killing-orthogonal to
/// both tangents.
Normals second_fundamental_normals(const Projector& p);

struct CertificateReport {
    bool char_poly_ok = false;      // char_poly(F) = p_k(t), constant coefficients
    bool min_poly_ok = false;       // q_k(F) = 0
    bool cubic_ok = false;          // (F−i(c_k−1))³ + (F−i(c_k−1)) = 0 (all k)
    bool reconstruction_ok = false; // (F−i(c_k−1))² + I = P_k
    bool all() const { return char_poly_ok && min_poly_ok && cubic_ok && reconstruction_ok; }
};

/// p_k(t) = (t−ic_k)^{N−k−1}(t−i(c_k−1))(t−i(c_k−2))^k, ascending coefficients.
std::vector<GaussianRational> expected_char_poly(int k, int n);

CertificateReport certify_polynomials(const SurfaceField& s, const Projector& pk);

struct Classification {
    bool accepted = false;
    int k = -1;
    GaussianRational lambda;
    bool canonical_lambda = true;  // λ = c_k; other real matches are flagged
    std::optional<Projector> projector;
    std::string diagnostic;
};

/// Decide whether a skew-Hermitian matrix of rational functions is a surface
/// of the model: match det(F) against i^N λ^{N−k−1}(λ−1)(λ−2)^k over the
/// candidate family λ = c_k, verify the differential identity, reconstruct
/// P = (F−i(λ−1))² + I and check it is a rank-1 Hermitian E-L solution.
Classification classify_surface(const MatrixField& f);

}  // namespace cpn
