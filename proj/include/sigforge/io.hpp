#pragma once

// Text and JSON formats shared by the CLI, the tests and the Python module.
//
// Matrix text file:   first line "n" or "n classical|highdim", then n rows of
//                     n integers. Lines starting with '#' are ignored.
// Matrix JSON:        {"n": 2, "rows": [[-1, 1], [0, -1]], "parity": "classical"}
// Basis text file:    first line "k n", then k rows of n integers.
// Basis JSON:         {"rows": [[1, 0, 0, 0], [0, 1, 0, 0]]}
// Integers that do not fit in 64 bits are written as decimal strings.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sigforge/seifert.hpp"

namespace sigforge {

using Json = nlohmann::ordered_json;

struct MatrixFile {
    IntMatrix matrix;
    std::optional<Parity> parity;

    Parity parity_or(Parity fallback) const { return parity.value_or(fallback); }
};

MatrixFile parse_matrix_text(std::string_view text);
MatrixFile parse_matrix_json(const Json& j);
// JSON when the first non-blank character is '{', text otherwise.
MatrixFile parse_matrix(std::string_view text);
MatrixFile read_matrix_file(const std::string& path);

std::string format_matrix_text(const IntMatrix& m, std::optional<Parity> parity = std::nullopt);
Json matrix_to_json(const IntMatrix& m, std::optional<Parity> parity = std::nullopt);

IntMatrix parse_basis(std::string_view text);
IntMatrix read_basis_file(const std::string& path);

std::string read_text_file(const std::string& path);

Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j);
Json rational_to_json(const Rational& x);  // always "p/q" or "p" as a string
Rational rational_from_json(const Json& j);

Json algebraic_to_json(const AlgebraicReal& x);
AlgebraicReal algebraic_from_json(const Json& j);

Json step_function_to_json(const SignatureStepFunction& f);
SignatureStepFunction step_function_from_json(const Json& j);

// Columns c_lo,c_hi,value,kind; "interval" rows for the open gaps and "point"
// rows (c_lo = c_hi) for the breakpoints, left to right.
std::string step_function_csv(const SignatureStepFunction& f);

// "a,b,c" with rationals in any accepted form.
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace sigforge
