#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sigforge/constructors.hpp"
#include "sigforge/float_oracle.hpp"
#include "sigforge/io.hpp"

namespace py = pybind11;
using namespace sigforge;

namespace {

// Python ints and Fractions cross the boundary as decimal strings.
Integer to_integer(const py::handle& h) { return parse_integer(py::str(h).cast<std::string>()); }
Rational to_rational(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }

py::object from_integer(const Integer& x) { return py::module_::import("builtins").attr("int")(x.get_str()); }
py::object from_rational(const Rational& x) {
    return py::module_::import("fractions").attr("Fraction")(sigforge::to_string(x));
}

IntMatrix to_matrix(const py::sequence& rows) {
    const std::size_t r = py::len(rows);
    const std::size_t c = r ? py::len(rows[0]) : 0;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        py::sequence row = rows[i];
        if (py::len(row) != c) throw PreconditionError("ragged matrix");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = to_integer(row[j]);
    }
    return m;
}

py::list from_matrix(const IntMatrix& m) {
    py::list rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.append(from_integer(m(i, j)));
        rows.append(row);
    }
    return rows;
}

IntPolynomial to_poly(const py::sequence& coeffs) {
    std::vector<Integer> c;
    for (auto h : coeffs) c.push_back(to_integer(h));
    return IntPolynomial(std::move(c));
}

py::list from_poly(const IntPolynomial& p) {
    py::list out;
    for (const auto& c : p.coeffs()) out.append(from_integer(c));
    return out;
}

SeifertMatrix seifert(const py::sequence& rows, const std::string& parity) {
    return SeifertMatrix(to_matrix(rows), parse_parity(parity));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact signature functions of Seifert matrices";

    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ParityViolation>(m, "ParityViolation", PyExc_ValueError);
    py::register_exception<VerificationFailure>(m, "VerificationFailure", PyExc_RuntimeError);

    m.def("parity_determinant", [](const py::sequence& rows, const std::string& parity) {
        return from_integer(parity_determinant(to_matrix(rows), parse_parity(parity)));
    }, py::arg("rows"), py::arg("parity") = "classical");

    m.def("validate", [](const py::sequence& rows, const std::string& parity) {
        seifert(rows, parity);
        return true;
    }, py::arg("rows"), py::arg("parity") = "classical");

    m.def("alexander_polynomial", [](const py::sequence& rows, const std::string& parity) {
        AlexanderPolynomial a = alexander_polynomial(seifert(rows, parity));
        return py::make_tuple(from_poly(a.raw), from_poly(a.normalized));
    }, py::arg("rows"), py::arg("parity") = "classical");

    m.def("signature", [](const py::sequence& rows, const py::object& c, const std::string& parity) {
        return signature_at_rational(seifert(rows, parity), to_rational(c));
    }, py::arg("rows"), py::arg("c"), py::arg("parity") = "classical");

    m.def("averaged_signature", [](const py::sequence& rows, const py::object& c, const std::string& parity) {
        return from_rational(Rational(averaged_signature(seifert(rows, parity), to_rational(c)).twice, 2));
    }, py::arg("rows"), py::arg("c"), py::arg("parity") = "classical");

    m.def("step_function_json", [](const py::sequence& rows, const std::string& parity) {
        return step_function_to_json(signature_step_function(seifert(rows, parity))).dump();
    }, py::arg("rows"), py::arg("parity") = "classical");

    m.def("jump_polynomial", [](const py::object& r, const py::object& eps) {
        return from_poly(jump_polynomial(to_rational(r), to_rational(eps)));
    }, py::arg("r"), py::arg("eps"));

    m.def("highdim_jump_polynomial", [](const py::object& r, const py::object& eps) {
        return from_poly(highdim_jump_polynomial(to_rational(r), to_rational(eps)));
    }, py::arg("r"), py::arg("eps"));

    m.def("highdim_validate_polynomial", [](const py::sequence& coeffs) {
        return highdim_validate_polynomial(to_poly(coeffs));
    }, py::arg("coeffs"));

    m.def("lambda_coefficients", [](const py::sequence& coeffs) {
        py::list out;
        for (const auto& a : lambda_coefficients(to_poly(coeffs)).a) out.append(from_integer(a));
        return out;
    }, py::arg("coeffs"));

    m.def("hankel_realize", [](const py::sequence& coeffs) {
        return from_matrix(hankel_realize(to_poly(coeffs)).matrix());
    }, py::arg("coeffs"));

    m.def("metabolic_peak", [](const py::sequence& coeffs, std::size_t p, bool highdim) {
        IntPolynomial delta = to_poly(coeffs);
        return from_matrix((highdim ? highdim_metabolic_peak(delta, p) : metabolic_peak(delta, p)).matrix());
    }, py::arg("coeffs"), py::arg("p"), py::arg("highdim") = false);

    m.def("independence_certificate", [](const py::sequence& points, std::size_t k) {
        std::vector<Rational> cs;
        for (auto h : points) cs.push_back(to_rational(h));
        return from_matrix(independence_certificate(cs, k).matrix());
    }, py::arg("points"), py::arg("k"));

    m.def("verify_metabolizer", [](const py::sequence& rows, const py::sequence& basis, const std::string& parity) {
        return verify_metabolizer(seifert(rows, parity), MetabolizerCertificate{to_matrix(basis)});
    }, py::arg("rows"), py::arg("basis"), py::arg("parity") = "classical");

    m.def("signature_float", [](const py::sequence& rows, std::complex<double> omega, const std::string& parity,
                                double threshold) {
        OracleResult r = signature_float(seifert(rows, parity), omega, threshold);
        py::dict d;
        d["signature"] = r.signature;
        d["min_abs_eigenvalue"] = r.min_abs_eigenvalue;
        d["gap_certified"] = r.gap_certified;
        return d;
    }, py::arg("rows"), py::arg("omega"), py::arg("parity") = "classical", py::arg("threshold") = 1e-8);
}
