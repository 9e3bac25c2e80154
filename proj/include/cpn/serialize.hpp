#pragma once

#include <string>

#include <json.hpp>

#include "cpn/matrix_field.hpp"

namespace cpn {

using json = nlohmann::json;

/// Polynomial terms: [{"dp": int, "dm": int, "re": "p/q", "im": "p/q"}, ...];
/// optional "sre"/"sim" carry the √2 part of a coefficient.  Round-trips
/// exactly (all rationals are strings).
json poly_to_json(const BiPolynomial& p);
BiPolynomial poly_from_json(const json& j);

/// {"num": [...], "den": [...]}
json rational_function_to_json(const RationalFunction& f);
RationalFunction rational_function_from_json(const json& j);

/// Row-major nested arrays of rational-function JSON.
json matrix_to_json(const MatrixField& m);
MatrixField matrix_from_json(const json& j);

/// Holomorphic vector descriptor:
/// {"N": int, "components": [poly...], "extension": "sqrt2"?}.
/// Components are polynomials in ξ₊ only; surd coefficients require the
/// extension tag.
struct VectorDescriptor {
    int n = 0;
    VectorField components;
    bool sqrt2_extension = false;
};

VectorDescriptor descriptor_from_json(const json& j);
json descriptor_to_json(const VectorDescriptor& d);

json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace cpn
