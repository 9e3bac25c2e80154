#include "cpn/verification.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <sstream>

#include "cpn/errors.hpp"
#include "cpn/serialize.hpp"

namespace cpn {

using json = nlohmann::json;

bool VerificationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void VerificationReport::add(std::string name, bool pass, std::string detail) {
    checks.push_back({std::move(name), pass, std::move(detail)});
}

VerificationReport verify_tower_report(const ProjectorTower& tower, int table_cap) {
    VerificationReport vr;
    int len = tower.length(), n = tower.dim();
    const VectorField& e = tower.e;

    for (int i = 0; i < len; ++i) {
        const Projector& p = tower.elements[i];
        const MatrixField& m = p.mat();
        std::string tag = "P" + std::to_string(i);
        vr.add(tag + ".projector_laws",
               (m * m == m) && (m.dagger() == m) && m.trace() == RationalFunction(1));
        vr.add(tag + ".euler_lagrange", is_el_solution(p, e).satisfied);
        vr.add(tag + ".decomposition",
               outer_product(mat_vec(m, e), mat_vec(m, e)) == sandwich(e, m, e) * m);
        auto [np, nm] = norms(p, e);
        vr.add(tag + ".lagrangian_forms", lagrangian(p) == np + nm);
        vr.add(tag + ".charge_forms", charge_density(p) == np - nm);
        if (i == 0) vr.add(tag + ".holomorphic", is_holomorphic(p) && !lower_projector(p));
        if (i == len - 1)
            vr.add(tag + ".antiholomorphic", is_antiholomorphic(p) && !raise_projector(p));
        for (int j = i + 1; j < len; ++j)
            vr.add(tag + ".orthogonal_P" + std::to_string(j),
                   (m * tower.elements[j].mat()).is_zero());
        if (i + 1 < len) {
            auto up = raise_projector(p);
            bool ok = up && up->mat() == tower.elements[i + 1].mat();
            if (ok) {
                auto back = lower_projector(*up);
                ok = back && back->mat() == m;
            }
            vr.add(tag + ".ladder_inverse", ok);
        }
    }

    MatrixField sum = MatrixField::zero(n, n);
    for (const auto& p : tower.elements) sum = sum + p.mat();
    if (len == n)
        vr.add("tower.sum_identity", sum == MatrixField::identity(n));
    else
        vr.add("tower.sum_constant_projector",
               sum.d_plus().is_zero() && sum.d_minus().is_zero() && sum * sum == sum &&
                   sum.dagger() == sum && sum.trace() == RationalFunction(len));

    auto table = orthogonality_table(tower.elements[tower.hol_index], e, table_cap, table_cap);
    bool table_ok = table[0][0].is_one();
    for (int i = 0; i <= table_cap && table_ok; ++i)
        for (int j = 0; j <= table_cap; ++j) {
            if (i + j == 0 || i + j > table_cap) continue;
            if (!table[i][j].is_zero()) {
                table_ok = false;
                break;
            }
        }
    vr.add("tower.orthogonality_table", table_ok,
           "A00 = 1 and Aij = 0 for 1 <= i+j <= " + std::to_string(table_cap));

    for (int k = 0; k < len; ++k) {
        const Projector& pk = tower.elements[k];
        std::string tag = "F" + std::to_string(k);
        try {
            SurfaceField s = surface_from_tower(tower, k);
            CertificateReport c = certify_polynomials(s, pk);
            vr.add(tag + ".char_poly", c.char_poly_ok);
            vr.add(tag + ".min_poly", c.min_poly_ok && c.cubic_ok);
            vr.add(tag + ".reconstruction", c.reconstruction_ok);
            MatrixField fp = tangent_plus(pk), fm = tangent_minus(pk);
            vr.add(tag + ".conformal", killing_product(fp, fp).is_zero() &&
                                           killing_product(fm, fm).is_zero() &&
                                           RationalFunction(2) * killing_product(fp, fm) ==
                                               lagrangian(pk));
            if (!lagrangian(pk).is_zero()) {
                auto nrm = second_fundamental_normals(pk);
                auto [h, hh] = mean_curvature(pk);
                vr.add(tag + ".normals",
                       nrm.npm == (lagrangian(pk) / RationalFunction(4)) * h);
                bool tower_normal = true;
                for (const auto& pj : tower.elements)
                    if (!killing_product(pj.mat(), fp).is_zero() ||
                        !killing_product(pj.mat(), fm).is_zero())
                        tower_normal = false;
                vr.add(tag + ".tower_normality", tower_normal);
            }
        } catch (const Error& err) {
            vr.add(tag + ".certificates", false, err.what());
        }
    }

    if (len == n) {
        MatrixField alt = MatrixField::zero(n, n);
        for (int k = 0; k < len; ++k) {
            SurfaceField s = surface_from_tower(tower, k);
            alt = (k % 2 == 0) ? alt + s.f : alt - s.f;
        }
        vr.add("tower.alternating_sum", alt.is_zero());
    }
    return vr;
}

json tower_report_json(const ProjectorTower& tower, const VerificationReport& vr) {
    json j;
    j["schema_version"] = 1;
    j["N"] = tower.dim();
    j["length"] = tower.length();
    j["n"] = tower.hol_index;
    j["m"] = tower.antihol_index;
    json evec = json::array();
    for (int i = 0; i < tower.e.size(); ++i) evec.push_back(tower.e[i].to_string());
    j["reference_vector"] = std::move(evec);
    json elems = json::array();
    for (int i = 0; i < tower.length(); ++i) {
        const MatrixField& m = tower.elements[i].mat();
        MatrixField residual = commutator(m.d_plus().d_minus(), m);
        elems.push_back({{"index", i},
                         {"max_num_degree", m.max_num_degree()},
                         {"max_den_degree", m.max_den_degree()},
                         {"el_residual_degree",
                          residual.is_zero() ? -1 : residual.max_num_degree()}});
    }
    j["elements"] = std::move(elems);
    json checks = json::array();
    for (const auto& c : vr.checks) {
        json cj = {{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) cj["detail"] = c.detail;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    j["all_pass"] = vr.all_pass();
    return j;
}

json integral_to_json(const IntegralResult& r) {
    json j;
    j["value"] = r.value;
    j["error_estimate"] = r.error_estimate;
    j["node_counts"] = r.node_counts;
    if (r.integer_snap) {
        j["integer_snap"] = *r.integer_snap;
        j["snap_deviation"] = r.snap_deviation;
    }
    return j;
}

namespace {

json matrix_strings(const MatrixField& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

json geometry_report_json(const ProjectorTower& tower, int k, const QuadratureOptions& opts) {
    if (k < 0 || k >= tower.length()) throw ValidationError("geometry: k out of tower range");
    const Projector& pk = tower.elements[k];
    SurfaceField s = surface_from_tower(tower, k);

    json j;
    j["schema_version"] = 1;
    j["k"] = k;
    j["c_k"] = surface_constant(k, tower.dim()).to_string();

    RationalFunction L = lagrangian(pk);
    json sym;
    sym["lagrangian"] = L.to_string();
    sym["charge_density"] = charge_density(pk).to_string();
    sym["g_plus_minus"] =
        killing_product(tangent_plus(pk), tangent_minus(pk)).to_string();
    if (!L.is_zero()) {
        auto [gp, gm] = christoffel(pk);
        sym["christoffel_ppp"] = gp.to_string();
        sym["christoffel_mmm"] = gm.to_string();
        sym["gaussian_curvature"] = gauss_curvature(pk).to_string();
        auto [h, hh] = mean_curvature(pk);
        sym["mean_curvature"] = matrix_strings(h);
        sym["mean_curvature_norm_sq"] = hh.to_string();
        auto nrm = second_fundamental_normals(pk);
        sym["normals"] = {{"npp", matrix_strings(nrm.npp)},
                          {"npm", matrix_strings(nrm.npm)},
                          {"nmm", matrix_strings(nrm.nmm)}};
    }
    j["symbolic"] = std::move(sym);
    j["surface"] = matrix_strings(s.f);
    j["surface_exact"] = matrix_to_json(s.f);

    json global;
    global["action"] = integral_to_json(action(pk, opts));
    global["area"] = integral_to_json(area(tower, k, opts));
    global["charge"] = integral_to_json(charge(pk, opts));
    if (!L.is_zero()) {
        global["euler_poincare"] = integral_to_json(euler_poincare(pk, opts));
        global["willmore"] = integral_to_json(willmore(tower, k, opts));
    }
    j["global"] = std::move(global);
    return j;
}

std::vector<std::vector<std::complex<double>>> su_basis(int n) {
    using cd = std::complex<double>;
    std::vector<std::vector<cd>> basis;
    auto mat = [n]() { return std::vector<cd>(n * n, cd(0.0)); };
    const cd iu(0.0, 1.0);
    // i · generalized Gell-Mann matrices: unit Killing norm.
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            auto sym = mat();
            sym[a * n + b] = iu;
            sym[b * n + a] = iu;
            basis.push_back(std::move(sym));
            auto asym = mat();
            asym[a * n + b] = cd(1.0);
            asym[b * n + a] = cd(-1.0);
            basis.push_back(std::move(asym));
        }
    for (int l = 1; l < n; ++l) {
        auto d = mat();
        double scale = std::sqrt(2.0 / (l * (l + 1.0)));
        for (int a = 0; a < l; ++a) d[a * n + a] = iu * scale;
        d[l * n + l] = -iu * scale * static_cast<double>(l);
        basis.push_back(std::move(d));
    }
    return basis;
}

SurfaceExport export_surface_csv(const ProjectorTower& tower, int k, double extent,
                                 int resolution) {
    if (resolution < 2) throw ValidationError("grid resolution must be at least 2");
    const Projector& pk = tower.elements.at(k);
    SurfaceField s = surface_from_tower(tower, k);
    int n = tower.dim();
    auto basis = su_basis(n);
    RationalFunction L = lagrangian(pk);
    RationalFunction q = charge_density(pk);
    RationalFunction K = gauss_curvature(pk);

    std::ostringstream csv;
    csv << "xi1,xi2";
    for (std::size_t a = 0; a < basis.size(); ++a) csv << ",x" << (a + 1);
    csv << ",L,q,K\n";

    auto fmt = [](double v) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.12g", v);
        return std::string(buf);
    };

    SurfaceExport out;
    for (int iy = 0; iy < resolution; ++iy)
        for (int ix = 0; ix < resolution; ++ix) {
            double x1 = -extent + 2.0 * extent * ix / (resolution - 1);
            double x2 = -extent + 2.0 * extent * iy / (resolution - 1);
            std::complex<double> z(x1, x2);
            csv << fmt(x1) << "," << fmt(x2);
            std::string row;
            try {
                std::vector<std::complex<double>> fval(n * n);
                for (int r = 0; r < n; ++r)
                    for (int c = 0; c < n; ++c) fval[r * n + c] = s.f.at(r, c).eval(z);
                for (const auto& t : basis) {
                    // (F, T_a) = −½ tr(F · T_a)
                    std::complex<double> trace(0.0);
                    for (int r = 0; r < n; ++r)
                        for (int c = 0; c < n; ++c) trace += fval[r * n + c] * t[c * n + r];
                    row += "," + fmt(-0.5 * trace.real());
                }
                row += "," + fmt(L.eval(z).real()) + "," + fmt(q.eval(z).real()) + "," +
                       fmt(K.eval(z).real());
            } catch (const NumericsError&) {
                ++out.pole_rows;
                row.clear();
                for (std::size_t a = 0; a < basis.size() + 3; ++a) row += ",nan";
            }
            csv << row << "\n";
            ++out.rows;
        }
    out.csv = csv.str();
    return out;
}

}  // namespace cpn
