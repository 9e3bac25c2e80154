// End-to-end tests of the command-line pipeline: real process invocations,
// exit codes, output schemas, and byte-level determinism.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef CPN_CLI_PATH
#error "CPN_CLI_PATH must be defined"
#endif
#ifndef CPN_DATA_DIR
#error "CPN_DATA_DIR must be defined"
#endif

namespace {

using nlohmann::json;

std::string data(const std::string& name) { return std::string(CPN_DATA_DIR) + "/" + name; }

int run(const std::string& args, const std::string& out_file = "") {
    std::string cmd = std::string(CPN_CLI_PATH) + " " + args;
    if (!out_file.empty()) cmd += " > " + out_file + " 2>/dev/null";
    else cmd += " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json load(const std::string& path) { return json::parse(slurp(path)); }

}  // namespace

TEST_CASE("tower command") {
    REQUIRE(run("tower --input " + data("veronese.json"), "/tmp/cpn_t1.json") == 0);
    json j = load("/tmp/cpn_t1.json");
    CHECK(j["N"] == 3);
    CHECK(j["n"] == 0);
    CHECK(j["m"] == 2);
    CHECK(j["length"] == 3);
    CHECK(j["all_pass"] == true);
    CHECK(j["checks"].size() > 20);

    CHECK(run("tower --input " + data("degree_one.json"), "/tmp/cpn_t2.json") == 0);
    json j2 = load("/tmp/cpn_t2.json");
    CHECK(j2["length"] == 2);
    CHECK(j2["all_pass"] == true);
}

TEST_CASE("validation failures exit with code 2") {
    CHECK(run("tower --input " + data("zero_vector.json")) == 2);
    CHECK(run("tower --input /does/not/exist.json") == 2);
    CHECK(run("geometry --input " + data("veronese.json") + " --k 9") == 2);
}

TEST_CASE("geometry report") {
    REQUIRE(run("geometry --input " + data("veronese.json") + " --k 0 --out /tmp/cpn_g.json") ==
            0);
    json j = load("/tmp/cpn_g.json");
    CHECK(j["symbolic"]["gaussian_curvature"] == "2");
    CHECK(j["symbolic"]["mean_curvature_norm_sq"] == "16");
    double s = j["global"]["action"]["value"].get<double>();
    CHECK(s == doctest::Approx(6.283185307).epsilon(1e-8));
    CHECK(j["global"]["charge"]["integer_snap"] == 2);
    CHECK(j["global"]["euler_poincare"]["integer_snap"] == 2);
    double w = j["global"]["willmore"]["value"].get<double>();
    CHECK(w == doctest::Approx(2.0 * s).epsilon(1e-8));
}

TEST_CASE("export-surface shape and determinism") {
    std::string cmd = "export-surface --input " + data("degree_one.json") +
                      " --k 0 --grid-extent 3 --grid-res 51 --out /tmp/cpn_s1.csv";
    REQUIRE(run(cmd, "/tmp/cpn_sum1.json") == 0);
    REQUIRE(run("export-surface --input " + data("degree_one.json") +
                    " --k 0 --grid-extent 3 --grid-res 51 --out /tmp/cpn_s2.csv",
                "/tmp/cpn_sum2.json") == 0);
    std::string a = slurp("/tmp/cpn_s1.csv"), b = slurp("/tmp/cpn_s2.csv");
    CHECK(a == b);  // byte-identical outputs for identical inputs and flags
    json sum = load("/tmp/cpn_sum1.json");
    CHECK(sum["rows"] == 2601);
    CHECK(sum["pole_rows"] == 0);
    // 51*51 data rows + header; 2 + 3 + 3 columns for N = 2
    std::istringstream lines(a);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "xi1,xi2,x1,x2,x3,L,q,K");
    long rows = 0;
    for (std::string line; std::getline(lines, line);) ++rows;
    CHECK(rows == 2601);
}

TEST_CASE("classify round trip via CLI") {
    REQUIRE(run("geometry --input " + data("veronese.json") + " --k 1 --out /tmp/cpn_g1.json") ==
            0);
    json g = load("/tmp/cpn_g1.json");
    std::ofstream("/tmp/cpn_f1.json") << g["surface_exact"].dump();
    REQUIRE(run("classify --input /tmp/cpn_f1.json", "/tmp/cpn_c1.json") == 0);
    json c = load("/tmp/cpn_c1.json");
    CHECK(c["accepted"] == true);
    CHECK(c["k"] == 1);
    CHECK(c["lambda"] == "1");

    SUBCASE("rejection exits with code 3") {
        // a constant skew-Hermitian matrix with the wrong determinant
        json bad = json::array(
            {json::array({json::array(), json::array({{{"dp", 0}, {"dm", 0}, {"im", "1"}}})}),
             json::array({json::array({{{"dp", 0}, {"dm", 0}, {"im", "1"}}}), json::array()})});
        std::ofstream("/tmp/cpn_bad.json") << bad.dump();
        CHECK(run("classify --input /tmp/cpn_bad.json", "/tmp/cpn_cbad.json") == 3);
        CHECK(load("/tmp/cpn_cbad.json")["accepted"] == false);
    }
}

TEST_CASE("integrate command") {
    REQUIRE(run("integrate --input " + data("negative_curvature.json") +
                    " --k 0 --tol 1e-9 --out /tmp/cpn_i.json") == 0);
    json j = load("/tmp/cpn_i.json");
    CHECK(j["action"]["value"].get<double>() == doctest::Approx(6.283185307).epsilon(1e-6));
    CHECK(j["charge"]["integer_snap"] == 2);
    CHECK(j["euler_poincare"]["integer_snap"] == 2);
    CHECK(j["willmore"]["value"].get<double>() == doctest::Approx(12.56637061).epsilon(1e-6));
}
