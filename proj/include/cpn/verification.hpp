#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cpn/quadrature.hpp"
#include "cpn/surface.hpp"

namespace cpn {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<Check> checks;
    bool all_pass() const;
    void add(std::string name, bool pass, std::string detail = "");
};

/// Exact structural checks of a tower: projector laws, E-L forms, pairwise
/// orthogonality, sum decomposition, ladder inverses, endpoint annihilation,
/// Lagrangian/charge identities, conformality and polynomial certificates of
/// every surface, and the Lemma-1 orthogonality table for the holomorphic
/// generator.
VerificationReport verify_tower_report(const ProjectorTower& tower, int table_cap = 3);

nlohmann::json tower_report_json(const ProjectorTower& tower, const VerificationReport& vr);

/// Symbolic part of the geometry of (tower, k) plus numerically integrated
/// global invariants.
nlohmann::json geometry_report_json(const ProjectorTower& tower, int k,
                                    const QuadratureOptions& opts);

nlohmann::json integral_to_json(const IntegralResult& r);

/// Numeric su(N) basis, anti-Hermitian, orthonormal under (A,B) = −½tr(AB)
/// (i · generalized Gell-Mann matrices).  Row-major N×N complex entries.
std::vector<std::vector<std::complex<double>>> su_basis(int n);

/// CSV point cloud: ξ₁, ξ₂, the N²−1 su(N) coordinates of F, then L, q, K.
/// Rows on poles carry "nan" sentinels; the pole-row count is returned.
struct SurfaceExport {
    std::string csv;
    long rows = 0;
    long pole_rows = 0;
};
SurfaceExport export_surface_csv(const ProjectorTower& tower, int k, double extent, int resolution);

}  // namespace cpn
