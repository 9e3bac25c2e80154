// Command-line pipeline: ingest holomorphic vector descriptors, run the
// exact verification suites, emit geometry reports and surface point clouds.
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cpn/errors.hpp"
#include "cpn/quadrature.hpp"
#include "cpn/serialize.hpp"
#include "cpn/verification.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitCertificate = 3;
constexpr int kExitNumerics = 4;

struct Options {
    std::string input;
    std::string out;
    int k = 0;
    double grid_extent = 3.0;
    int grid_res = 51;
    double tol = 1e-8;
    int max_nodes = 1024;
};

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty())
        std::cout << text << "\n";
    else
        cpn::write_text_file(opt.out, text + "\n");
}

void emit(const Options& opt, const nlohmann::json& j) { emit(opt, j.dump(2)); }

cpn::ProjectorTower tower_from_input(const Options& opt) {
    cpn::VectorDescriptor d = cpn::descriptor_from_json(cpn::load_json_file(opt.input));
    cpn::Projector p = cpn::projector_from_vector(d.components);
    return cpn::build_tower(p);
}

cpn::QuadratureOptions quad_options(const Options& opt) {
    cpn::QuadratureOptions q;
    q.rel_tol = opt.tol;
    q.max_order = opt.max_nodes;
    return q;
}

int run(const Options& opt, const std::string& command) {
    if (command == "tower" || command == "verify") {
        cpn::ProjectorTower t = tower_from_input(opt);
        cpn::VerificationReport vr = cpn::verify_tower_report(t, command == "verify" ? 4 : 3);
        emit(opt, cpn::tower_report_json(t, vr));
        return vr.all_pass() ? kExitOk : kExitCertificate;
    }
    if (command == "geometry") {
        cpn::ProjectorTower t = tower_from_input(opt);
        emit(opt, cpn::geometry_report_json(t, opt.k, quad_options(opt)));
        return kExitOk;
    }
    if (command == "integrate") {
        cpn::ProjectorTower t = tower_from_input(opt);
        if (opt.k < 0 || opt.k >= t.length()) throw cpn::ValidationError("k out of tower range");
        cpn::QuadratureOptions q = quad_options(opt);
        const cpn::Projector& pk = t.elements[opt.k];
        nlohmann::json j;
        j["schema_version"] = 1;
        j["k"] = opt.k;
        j["action"] = cpn::integral_to_json(cpn::action(pk, q));
        j["area"] = cpn::integral_to_json(cpn::area(t, opt.k, q));
        j["charge"] = cpn::integral_to_json(cpn::charge(pk, q));
        if (!cpn::lagrangian(pk).is_zero()) {
            j["euler_poincare"] = cpn::integral_to_json(cpn::euler_poincare(pk, q));
            j["willmore"] = cpn::integral_to_json(cpn::willmore(t, opt.k, q));
        }
        emit(opt, j);
        return kExitOk;
    }
    if (command == "export-surface") {
        cpn::ProjectorTower t = tower_from_input(opt);
        if (opt.k < 0 || opt.k >= t.length()) throw cpn::ValidationError("k out of tower range");
        cpn::SurfaceExport ex =
            cpn::export_surface_csv(t, opt.k, opt.grid_extent, opt.grid_res);
        if (opt.out.empty()) {
            std::cout << ex.csv;
        } else {
            cpn::write_text_file(opt.out, ex.csv);
            nlohmann::json j{{"rows", ex.rows}, {"pole_rows", ex.pole_rows}, {"out", opt.out}};
            std::cout << j.dump(2) << "\n";
        }
        return kExitOk;
    }
    if (command == "classify") {
        cpn::MatrixField f = cpn::matrix_from_json(cpn::load_json_file(opt.input));
        cpn::Classification c = cpn::classify_surface(f);
        nlohmann::json j;
        j["schema_version"] = 1;
        j["accepted"] = c.accepted;
        j["diagnostic"] = c.diagnostic;
        if (c.accepted) {
            j["k"] = c.k;
            j["lambda"] = c.lambda.to_string();
            j["canonical_lambda"] = c.canonical_lambda;
            j["projector"] = cpn::matrix_to_json(c.projector->mat());
        }
        emit(opt, j);
        return c.accepted ? kExitOk : kExitCertificate;
    }
    throw cpn::ValidationError("unknown command '" + command + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact CP^{N-1} sigma-model projector towers and their immersed surfaces"};
    app.require_subcommand(1);

    Options opt;
    std::string command;
    for (const char* name :
         {"tower", "verify", "geometry", "integrate", "export-surface", "classify"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--input", opt.input, "input JSON (descriptor, or matrix for classify)")
            ->required();
        sub->add_option("--k", opt.k, "tower index of the surface");
        sub->add_option("--grid-extent", opt.grid_extent, "half-width of the export grid");
        sub->add_option("--grid-res", opt.grid_res, "points per grid axis");
        sub->add_option("--tol", opt.tol, "quadrature relative tolerance");
        sub->add_option("--max-nodes", opt.max_nodes, "max tensor order per disk");
        sub->add_option("--out", opt.out, "output path (default: stdout)");
        sub->callback([&command, name]() { command = name; });
    }

    try {
        app.parse(argc, argv);
        return run(opt, command);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const cpn::ValidationError& e) {
        std::cerr << nlohmann::json{{"error", "validation"}, {"message", e.what()}}.dump() << "\n";
        return kExitValidation;
    } catch (const cpn::CertificateError& e) {
        std::cerr << nlohmann::json{{"error", "certificate"}, {"message", e.what()}}.dump() << "\n";
        return kExitCertificate;
    } catch (const cpn::NumericsError& e) {
        std::cerr << nlohmann::json{{"error", "numerics"}, {"message", e.what()}}.dump() << "\n";
        return kExitNumerics;
    } catch (const std::exception& e) {
        std::cerr << nlohmann::json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
}
