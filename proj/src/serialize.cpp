#include "cpn/serialize.hpp"

#include <fstream>

#include "cpn/errors.hpp"

namespace cpn {

json poly_to_json(const BiPolynomial& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json t;
        t["dp"] = m.dp;
        t["dm"] = m.dm;
        t["re"] = c.base.re.get_str();
        t["im"] = c.base.im.get_str();
        if (!c.surd.is_zero()) {
            t["sre"] = c.surd.re.get_str();
            t["sim"] = c.surd.im.get_str();
        }
        terms.push_back(std::move(t));
    }
    return terms;
}

BiPolynomial poly_from_json(const json& j) {
    if (!j.is_array()) throw ValidationError("polynomial JSON must be an array of terms");
    BiPolynomial p;
    for (const auto& t : j) {
        long dp = t.value("dp", 0L), dm = t.value("dm", 0L);
        if (dp < 0 || dm < 0) throw ValidationError("polynomial term with negative exponent");
        GaussianRational base = GaussianRational::from_strings(t.value("re", "0"), t.value("im", "0"));
        GaussianRational surd = GaussianRational::from_strings(t.value("sre", "0"), t.value("sim", "0"));
        p.add_term({dp, dm}, Coeff{base, surd});
    }
    return p;
}

json rational_function_to_json(const RationalFunction& f) {
    return {{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

RationalFunction rational_function_from_json(const json& j) {
    if (j.is_array()) return RationalFunction(poly_from_json(j));  // bare polynomial
    if (!j.contains("num")) throw ValidationError("rational function JSON needs 'num'");
    BiPolynomial num = poly_from_json(j.at("num"));
    BiPolynomial den = j.contains("den") ? poly_from_json(j.at("den")) : BiPolynomial(1);
    if (den.is_zero()) throw ValidationError("rational function JSON with zero denominator");
    return {num, den};
}

json matrix_to_json(const MatrixField& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rational_function_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

MatrixField matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw ValidationError("matrix JSON must be a nested array");
    int rows = static_cast<int>(j.size());
    int cols = static_cast<int>(j[0].size());
    MatrixField m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(j[r].size()) != cols)
            throw ValidationError("ragged matrix JSON");
        for (int c = 0; c < cols; ++c) m.at(r, c) = rational_function_from_json(j[r][c]);
    }
    return m;
}

VectorDescriptor descriptor_from_json(const json& j) {
    VectorDescriptor d;
    if (!j.contains("N") || !j.contains("components"))
        throw ValidationError("descriptor needs 'N' and 'components'");
    d.n = j.at("N").get<int>();
    if (d.n <= 0) throw ValidationError("descriptor N must be positive");
    if (j.contains("extension")) {
        std::string ext = j.at("extension").get<std::string>();
        if (ext != "sqrt2") throw ValidationError("unsupported extension '" + ext + "'");
        d.sqrt2_extension = true;
    }
    const json& comps = j.at("components");
    if (!comps.is_array() || static_cast<int>(comps.size()) != d.n)
        throw ValidationError("descriptor needs exactly N components");
    d.components = VectorField(d.n);
    bool any = false;
    for (int i = 0; i < d.n; ++i) {
        BiPolynomial p = poly_from_json(comps[i]);
        if (p.degree_minus() > 0)
            throw ValidationError("descriptor components must be polynomials in xi+ only");
        for (const auto& [m, c] : p.terms())
            if (!c.surd.is_zero() && !d.sqrt2_extension)
                throw ValidationError("surd coefficient requires \"extension\": \"sqrt2\"");
        any = any || !p.is_zero();
        d.components[i] = RationalFunction(p);
    }
    if (!any) throw ValidationError("descriptor vector is identically zero");
    return d;
}

json descriptor_to_json(const VectorDescriptor& d) {
    json j;
    j["N"] = d.n;
    if (d.sqrt2_extension) j["extension"] = "sqrt2";
    json comps = json::array();
    for (int i = 0; i < d.n; ++i) comps.push_back(poly_to_json(d.components[i].num()));
    j["components"] = std::move(comps);
    return j;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open input file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ValidationError("JSON parse error in '" + path + "': " + e.what());
    }
    return j;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot open output file '" + path + "'");
    out << content;
}

}  // namespace cpn
