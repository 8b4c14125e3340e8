#include "sigforge/io.hpp"

#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace sigforge {

namespace {

std::vector<std::string> meaningful_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::size_t parse_size(const std::string& tok, const char* what) {
    Integer v = parse_integer(tok);
    if (v < 0 || v > 100000) throw ParseError(std::string("invalid ") + what + " '" + tok + "'");
    return v.get_ui();
}

IntMatrix parse_rows(const std::vector<std::string>& lines, std::size_t first, std::size_t rows, std::size_t cols) {
    if (lines.size() - first != rows) {
        throw ParseError("expected " + std::to_string(rows) + " matrix rows, found " + std::to_string(lines.size() - first));
    }
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        auto t = tokens(lines[first + i]);
        if (t.size() != cols) {
            throw ParseError("row " + std::to_string(i + 1) + " has " + std::to_string(t.size()) + " entries, expected " +
                             std::to_string(cols));
        }
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = parse_integer(t[j]);
    }
    return m;
}

IntMatrix rows_from_json(const Json& rows) {
    if (!rows.is_array()) throw ParseError("'rows' must be an array");
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (!rows[i].is_array() || rows[i].size() != c) throw ParseError("ragged 'rows' array");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = integer_from_json(rows[i][j]);
    }
    return m;
}

Json rows_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json parse_json_text(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

bool looks_like_json(std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    return first != std::string_view::npos && text[first] == '{';
}

std::string format_double(double x) {
    std::ostringstream out;
    out << std::setprecision(17) << x;
    return out.str();
}

}  // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

MatrixFile parse_matrix_text(std::string_view text) {
    auto lines = meaningful_lines(text);
    if (lines.empty()) throw ParseError("empty matrix file");
    auto header = tokens(lines[0]);
    if (header.empty() || header.size() > 2) throw ParseError("matrix header must be 'n' or 'n classical|highdim'");
    MatrixFile out;
    std::size_t n = parse_size(header[0], "dimension");
    if (header.size() == 2) out.parity = parse_parity(header[1]);
    out.matrix = parse_rows(lines, 1, n, n);
    return out;
}

MatrixFile parse_matrix_json(const Json& j) {
    if (!j.is_object() || !j.contains("rows")) throw ParseError("matrix JSON needs a 'rows' array");
    MatrixFile out;
    out.matrix = rows_from_json(j.at("rows"));
    if (!out.matrix.is_square()) throw ParseError("matrix must be square");
    if (j.contains("n")) {
        if (!j.at("n").is_number_integer() || j.at("n").get<long long>() != static_cast<long long>(out.matrix.rows())) {
            throw ParseError("'n' does not match the number of rows");
        }
    }
    if (j.contains("parity") && !j.at("parity").is_null()) out.parity = parse_parity(j.at("parity").get<std::string>());
    return out;
}

MatrixFile parse_matrix(std::string_view text) {
    return looks_like_json(text) ? parse_matrix_json(parse_json_text(text)) : parse_matrix_text(text);
}

MatrixFile read_matrix_file(const std::string& path) { return parse_matrix(read_text_file(path)); }

std::string format_matrix_text(const IntMatrix& m, std::optional<Parity> parity) {
    std::ostringstream out;
    out << m.rows();
    if (parity) out << ' ' << to_string(*parity);
    out << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j).get_str();
        out << '\n';
    }
    return out.str();
}

Json matrix_to_json(const IntMatrix& m, std::optional<Parity> parity) {
    Json j;
    j["n"] = m.rows();
    j["rows"] = rows_to_json(m);
    if (parity) j["parity"] = to_string(*parity);
    return j;
}

IntMatrix parse_basis(std::string_view text) {
    if (looks_like_json(text)) {
        Json j = parse_json_text(text);
        if (!j.is_object() || !j.contains("rows")) throw ParseError("basis JSON needs a 'rows' array");
        return rows_from_json(j.at("rows"));
    }
    auto lines = meaningful_lines(text);
    if (lines.empty()) throw ParseError("empty basis file");
    auto header = tokens(lines[0]);
    if (header.size() != 2) throw ParseError("basis header must be 'k n'");
    return parse_rows(lines, 1, parse_size(header[0], "row count"), parse_size(header[1], "column count"));
}

IntMatrix read_basis_file(const std::string& path) { return parse_basis(read_text_file(path)); }

Json integer_to_json(const Integer& x) {
    if (x.fits_slong_p()) return Json(static_cast<long long>(x.get_si()));
    return Json(x.get_str());
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
    if (j.is_string()) return parse_integer(j.get<std::string>());
    throw ParseError("expected an integer, got " + j.dump());
}

Json rational_to_json(const Rational& x) { return Json(to_string(x)); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(integer_from_json(j));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("expected a rational, got " + j.dump());
}

Json algebraic_to_json(const AlgebraicReal& x) {
    Json j;
    j["minpoly"] = serialize(x.minpoly());
    j["lo"] = to_string(x.lo());
    j["hi"] = to_string(x.hi());
    j["approx"] = x.approx();
    return j;
}

AlgebraicReal algebraic_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("minpoly") || !j.contains("lo") || !j.contains("hi")) {
        throw ParseError("algebraic number JSON needs minpoly, lo and hi");
    }
    return AlgebraicReal(parse_polynomial(j.at("minpoly").get<std::string>()), rational_from_json(j.at("lo")),
                         rational_from_json(j.at("hi")));
}

Json step_function_to_json(const SignatureStepFunction& f) {
    Json j;
    Json bps = Json::array();
    for (const auto& b : f.breakpoints) bps.push_back(algebraic_to_json(b));
    j["breakpoints"] = std::move(bps);
    j["interval_values"] = f.interval_values;
    j["point_values"] = f.point_values;
    Json samples = Json::array();
    for (const auto& s : f.samples) samples.push_back(rational_to_json(s));
    j["samples"] = std::move(samples);
    return j;
}

SignatureStepFunction step_function_from_json(const Json& j) {
    SignatureStepFunction f;
    try {
        for (const auto& b : j.at("breakpoints")) f.breakpoints.push_back(algebraic_from_json(b));
        f.interval_values = j.at("interval_values").get<std::vector<long>>();
        f.point_values = j.at("point_values").get<std::vector<long>>();
        for (const auto& s : j.at("samples")) f.samples.push_back(rational_from_json(s));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid step function JSON: ") + e.what());
    }
    const std::size_t nb = f.breakpoints.size();
    if (f.interval_values.size() != nb + 1 || f.point_values.size() != nb || f.samples.size() != nb + 1) {
        throw ParseError("step function JSON has inconsistent lengths");
    }
    return f;
}

std::string step_function_csv(const SignatureStepFunction& f) {
    std::ostringstream out;
    out << "c_lo,c_hi,value,kind\n";
    double lo = -1.0;
    for (std::size_t i = 0; i < f.breakpoints.size(); ++i) {
        const double b = f.breakpoints[i].approx();
        out << format_double(lo) << ',' << format_double(b) << ',' << f.interval_values[i] << ",interval\n";
        out << format_double(b) << ',' << format_double(b) << ',' << f.point_values[i] << ",point\n";
        lo = b;
    }
    out << format_double(lo) << ",1," << f.interval_values.back() << ",interval\n";
    return out.str();
}

std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view item = text.substr(start, comma - start);
        if (item.empty()) throw ParseError("empty entry in list '" + std::string(text) + "'");
        out.push_back(parse_rational(item));
        start = comma + 1;
    }
    return out;
}

}  // namespace sigforge
