#include "sigforge/cli.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "sigforge/constructors.hpp"
#include "sigforge/float_oracle.hpp"
#include "sigforge/io.hpp"

namespace sigforge {

namespace {

struct Globals {
    bool oracle = false;
    std::uint64_t seed = 20240611;
    std::string format = "text";
    int samples = 8;
};

struct Report {
    std::string command;
    Json inputs = Json::object();
    Json outputs = Json::object();
    CheckList checks;
    std::vector<std::string> text;
    std::string raw;  // printed verbatim instead of the report (sigfn --json/--csv)

    void line(std::string s) { text.push_back(std::move(s)); }
    void add(std::string name, bool passed, std::string detail = {}) {
        checks.push_back(Check{std::move(name), passed, std::move(detail)});
    }
    void add_all(const CheckList& more) { checks.insert(checks.end(), more.begin(), more.end()); }
    bool verified() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
    }
};

std::string describe(const AlgebraicReal& x) {
    if (auto q = x.as_rational()) return to_string(*q);
    std::ostringstream out;
    out << "root of " << pretty(x.minpoly(), "c") << " in (" << to_string(x.lo()) << ", " << to_string(x.hi())
        << ") ~ " << x.approx();
    return out.str();
}

std::string matrix_lines(const IntMatrix& m) {
    std::ostringstream out;
    std::vector<std::size_t> width(m.cols(), 1);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) width[j] = std::max(width[j], m(i, j).get_str().size());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << "  ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::string s = m(i, j).get_str();
            out << std::string(width[j] - s.size() + (j ? 1 : 0), ' ') << s;
        }
        if (i + 1 < m.rows()) out << '\n';
    }
    return out.str();
}

Json step_table(const SignatureStepFunction& f) {
    Json rows = Json::array();
    std::string lo = "-1";
    for (std::size_t i = 0; i <= f.breakpoints.size(); ++i) {
        std::string hi = i < f.breakpoints.size() ? describe(f.breakpoints[i]) : "1";
        rows.push_back({{"kind", "interval"}, {"lo", lo}, {"hi", hi}, {"value", f.interval_values[i]}});
        if (i < f.breakpoints.size()) {
            rows.push_back({{"kind", "point"}, {"at", hi}, {"value", f.point_values[i]}});
            lo = hi;
        }
    }
    return rows;
}

void step_text(Report& r, const SignatureStepFunction& f) {
    std::string lo = "-1";
    for (std::size_t i = 0; i <= f.breakpoints.size(); ++i) {
        std::string hi = i < f.breakpoints.size() ? describe(f.breakpoints[i]) : "1";
        r.line("  (" + lo + ", " + hi + "): " + std::to_string(f.interval_values[i]));
        if (i < f.breakpoints.size()) {
            r.line("  at c = " + hi + ": " + std::to_string(f.point_values[i]));
            lo = hi;
        }
    }
}

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> den_dist(2, 240);
    long den = den_dist(rng);
    std::uniform_int_distribution<long> num_dist(-den + 1, den - 1);
    Rational q(num_dist(rng), den);
    q.canonicalize();
    return q;
}

// Float cross-check at the gap samples of f and at seeded random points.
void oracle_checks(Report& r, const Globals& g, const SeifertMatrix& k, const SignatureStepFunction& f) {
    std::mt19937_64 rng(g.seed);
    std::vector<Rational> points = f.samples;
    for (int i = 0; i < g.samples; ++i) points.push_back(random_rational(rng));
    Json rows = Json::array();
    std::size_t certified = 0;
    std::size_t disagreements = 0;
    for (const auto& c : points) {
        long exact = signature_at_rational(k, c);
        OracleResult o = signature_float(k, omega_from_real_part(c.get_d()));
        rows.push_back({{"c", to_string(c)},
                        {"exact", exact},
                        {"float", o.signature},
                        {"min_abs_eigenvalue", o.min_abs_eigenvalue},
                        {"gap_certified", o.gap_certified}});
        if (o.gap_certified) {
            ++certified;
            if (o.signature != exact) ++disagreements;
        }
        r.line("  oracle c = " + to_string(c) + ": exact " + std::to_string(exact) + ", float " +
               std::to_string(o.signature) + (o.gap_certified ? "" : " (gap not certified)"));
    }
    r.outputs["oracle"] = {{"seed", g.seed}, {"points", rows}};
    r.add("float oracle agrees at certified points", disagreements == 0,
          std::to_string(certified) + " certified, " + std::to_string(disagreements) + " disagreements");
}

SeifertMatrix load_seifert(Report& r, const std::string& path, const std::string& parity_flag) {
    MatrixFile file = read_matrix_file(path);
    Parity parity = parity_flag.empty() ? file.parity_or(Parity::Classical) : parse_parity(parity_flag);
    r.inputs["matrix_file"] = path;
    r.inputs["parity"] = to_string(parity);
    return SeifertMatrix(file.matrix, parity);
}

// ---------------------------------------------------------------------------

void cmd_validate(Report& r, const std::string& path, const std::string& parity_flag) {
    MatrixFile file = read_matrix_file(path);
    Parity parity = parity_flag.empty() ? file.parity_or(Parity::Classical) : parse_parity(parity_flag);
    r.inputs["matrix_file"] = path;
    r.inputs["parity"] = to_string(parity);
    if (!file.matrix.is_square()) throw PreconditionError("matrix must be square");
    Integer classical = parity_determinant(file.matrix, Parity::Classical);
    Integer highdim = parity_determinant(file.matrix, Parity::HighDimSym);
    r.outputs["dimension"] = file.matrix.rows();
    r.outputs["det_v_minus_vt"] = integer_to_json(classical);
    r.outputs["det_v_plus_vt"] = integer_to_json(highdim);
    r.outputs["classical"] = abs(classical) == 1 && file.matrix.rows() % 2 == 0;
    r.outputs["highdim"] = abs(highdim) == 1 && file.matrix.rows() % 2 == 0;
    r.line("dimension " + std::to_string(file.matrix.rows()));
    r.line("det(V - V^T) = " + classical.get_str());
    r.line("det(V + V^T) = " + highdim.get_str());
    SeifertMatrix k(file.matrix, parity);  // throws ParityViolation
    r.line("valid " + to_string(parity) + " Seifert matrix");
    r.add("parity determinant is a unit", true);
}

void cmd_alexander(Report& r, const std::string& path, const std::string& parity_flag) {
    SeifertMatrix k = load_seifert(r, path, parity_flag);
    AlexanderPolynomial a = alexander_polynomial(k);
    r.outputs["raw"] = serialize(a.raw);
    r.outputs["normalized"] = serialize(a.normalized);
    r.outputs["pretty"] = pretty(a.normalized);
    r.line("raw        " + serialize(a.raw) + "    " + pretty(a.raw));
    r.line("normalized " + serialize(a.normalized) + "    " + pretty(a.normalized));
}

void cmd_signature(Report& r, const Globals& g, const std::string& path, const std::string& parity_flag,
                   const std::string& re, int root) {
    SeifertMatrix k = load_seifert(r, path, parity_flag);
    if (re.empty() == (root == 0)) throw PreconditionError("give exactly one of --re or --at-root");
    if (!re.empty()) {
        Rational c = parse_rational(re);
        r.inputs["re"] = to_string(c);
        PointSignature s = signature_detail_at_rational(k, c);
        HalfInteger avg = averaged_signature(k, c);
        r.outputs["signature"] = s.signature;
        r.outputs["nullity"] = s.nullity;
        r.outputs["averaged"] = avg.str();
        r.line("signature " + std::to_string(s.signature));
        r.line("nullity " + std::to_string(s.nullity));
        r.line("averaged " + avg.str());
        if (g.oracle) {
            OracleResult o = signature_float(k, omega_from_real_part(c.get_d()));
            r.outputs["oracle"] = {{"signature", o.signature},
                                   {"min_abs_eigenvalue", o.min_abs_eigenvalue},
                                   {"gap_certified", o.gap_certified}};
            r.line("oracle " + std::to_string(o.signature) + (o.gap_certified ? " (certified)" : " (gap not certified)"));
            if (o.gap_certified) r.add("float oracle agrees", o.signature == s.signature);
        }
        return;
    }
    r.inputs["at_root"] = root;
    SignatureStepFunction f = signature_step_function(k);
    if (root < 1 || static_cast<std::size_t>(root) > f.breakpoints.size()) {
        throw PreconditionError("root index " + std::to_string(root) + " out of range 1.." +
                                std::to_string(f.breakpoints.size()));
    }
    const std::size_t i = static_cast<std::size_t>(root) - 1;
    HalfInteger avg = averaged_signature(f, f.breakpoints[i]);
    r.outputs["breakpoint"] = algebraic_to_json(f.breakpoints[i]);
    r.outputs["signature"] = f.point_values[i];
    r.outputs["left"] = f.interval_values[i];
    r.outputs["right"] = f.interval_values[i + 1];
    r.outputs["averaged"] = avg.str();
    r.line("breakpoint c = " + describe(f.breakpoints[i]));
    r.line("signature " + std::to_string(f.point_values[i]));
    r.line("one-sided values " + std::to_string(f.interval_values[i]) + " | " + std::to_string(f.interval_values[i + 1]));
    r.line("averaged " + avg.str());
}

void cmd_sigfn(Report& r, const Globals& g, const std::string& path, const std::string& parity_flag, bool json,
               bool csv) {
    SeifertMatrix k = load_seifert(r, path, parity_flag);
    SignatureStepFunction f = signature_step_function(k);
    if (json) {
        r.raw = step_function_to_json(f).dump(2) + "\n";
        return;
    }
    if (csv) {
        r.raw = step_function_csv(f);
        return;
    }
    r.outputs["step_function"] = step_function_to_json(f);
    r.outputs["table"] = step_table(f);
    const std::size_t nb = f.breakpoints.size();
    r.line("signature function (" + std::to_string(nb) + (nb == 1 ? " breakpoint)" : " breakpoints)"));
    step_text(r, f);
    r.add("galois parity", galois_parity_property(k, f));
    if (g.oracle) oracle_checks(r, g, k, f);
}

void cmd_jump(Report& r, const Globals& g, const std::string& re, const std::string& eps_text, bool highdim,
              bool realize, const std::string& floor_text) {
    const Rational rr = parse_rational(re);
    const Rational eps = parse_rational(eps_text);
    r.inputs["re"] = to_string(rr);
    r.inputs["eps"] = to_string(eps);
    r.inputs["highdim"] = highdim;
    if (highdim && realize) throw PreconditionError("--realize is available for classical polynomials only");

    IntPolynomial poly;
    if (highdim) {
        std::optional<Rational> floor;
        if (!floor_text.empty()) floor = parse_rational(floor_text);
        HighDimJump h = highdim_jump_search(rr, eps, floor);
        poly = h.d;
        r.outputs["a"] = integer_to_json(h.base.a);
        r.outputs["b"] = integer_to_json(h.base.b);
        r.outputs["c"] = integer_to_json(h.c);
        r.outputs["factor"] = serialize(h.factor);
        r.outputs["quartic"] = serialize(h.base.delta);
        r.outputs["extra_real_part"] = to_string(h.extra_real_part);
        r.line("a = " + h.base.a.get_str() + ", b = " + h.base.b.get_str() + ", c = " + h.c.get_str());
        r.line("D(t) = (" + pretty(h.factor) + ") * (" + pretty(h.base.delta) + ")");
        const Integer at_minus_one = h.d.eval(Integer(-1));
        r.add("D(1) = -1", h.d.eval(Integer(1)) == -1);
        r.add("D(-1) is a perfect square", is_perfect_square(at_minus_one), at_minus_one.get_str());
        r.add("high-dimensional conditions", highdim_validate_polynomial(poly));
    } else {
        JumpSearchResult j = jump_search(rr, eps);
        poly = j.delta;
        r.outputs["a"] = integer_to_json(j.a);
        r.outputs["b"] = integer_to_json(j.b);
        r.line("a = " + j.a.get_str() + ", b = " + j.b.get_str());
        r.add("delta(1) = -1", poly.eval(Integer(1)) == -1);
    }
    r.outputs["polynomial"] = serialize(poly);
    r.line("polynomial " + serialize(poly) + "    " + pretty(poly));
    r.add("palindromic", is_palindromic(poly));

    auto roots = unit_root_real_parts(poly);
    Json jr = Json::array();
    for (const auto& x : roots) {
        jr.push_back(algebraic_to_json(x));
        r.line("unit root real part " + describe(x));
    }
    r.outputs["unit_root_real_parts"] = jr;
    bool near = !roots.empty() && roots[0].compare(rr - eps) == std::strong_ordering::greater &&
                roots[0].compare(rr + eps) == std::strong_ordering::less;
    r.add("|c* - r| < eps", near);
    r.add("unit-root pair count", roots.size() == (highdim ? 2u : 1u));

    if (realize) {
        SeifertMatrix v = hankel_realize(poly);
        SignatureStepFunction f = signature_step_function(v);
        r.outputs["matrix"] = matrix_to_json(v.matrix(), Parity::Classical);
        r.outputs["step_function"] = step_function_to_json(f);
        r.line("Seifert matrix:");
        r.line(matrix_lines(v.matrix()));
        r.line("signature function:");
        step_text(r, f);
        r.add("valid classical Seifert matrix", abs(parity_determinant(v.matrix(), Parity::Classical)) == 1);
        r.add("Alexander polynomial matches",
              normalize_unit(alexander_polynomial(v).normalized) == normalize_unit(poly));
        r.add("single jump, rightmost value 0",
              f.breakpoints.size() == 1 && f.interval_values.back() == 0 && std::abs(f.interval_values.front()) == 2);
        if (g.oracle) oracle_checks(r, g, v, f);
    }
}

void cmd_metabolic(Report& r, const Globals& g, const std::string& poly_text, int root, bool highdim) {
    IntPolynomial delta = parse_polynomial(poly_text);
    r.inputs["poly"] = serialize(delta);
    r.inputs["root_index"] = root;
    r.inputs["highdim"] = highdim;
    if (root < 1) throw PreconditionError("root index must be positive");
    const std::size_t p = static_cast<std::size_t>(root);
    MetabolicPeak peak = highdim ? highdim_metabolic_peak_detail(delta, p) : metabolic_peak_detail(delta, p);
    const Parity parity = peak.matrix.parity();
    const SignatureStepFunction& f = peak.step;
    r.add_all(peak.checks);
    r.add("valid " + to_string(parity) + " Seifert matrix", abs(parity_determinant(peak.matrix.matrix(), parity)) == 1);

    Json lambda = Json::array();
    for (const auto& a : peak.lambda.a) lambda.push_back(integer_to_json(a));
    auto summand = [](const PeakSummand& s) {
        return Json{{"separator", to_string(s.separator)}, {"b1", integer_to_json(s.b1)}, {"b2", integer_to_json(s.b2)}};
    };
    r.outputs["lambda"] = lambda;
    r.outputs["summands"] = Json::array({summand(peak.first), summand(peak.second)});
    r.outputs["matrix"] = matrix_to_json(peak.matrix.matrix(), parity);
    r.outputs["step_function"] = step_function_to_json(f);
    r.outputs["table"] = step_table(f);

    r.line(std::to_string(peak.matrix.dimension()) + "x" + std::to_string(peak.matrix.dimension()) + " " +
           to_string(parity) + " Seifert matrix:");
    r.line(matrix_lines(peak.matrix.matrix()));
    r.line("b1, b2 = " + peak.first.b1.get_str() + ", " + peak.first.b2.get_str() + " | " + peak.second.b1.get_str() +
           ", " + peak.second.b2.get_str());
    r.line("signature function:");
    step_text(r, f);
    r.line("point value " + std::to_string(f.point_values[p - 1]) + " at c = " + describe(f.breakpoints[p - 1]));
    if (g.oracle) oracle_checks(r, g, peak.matrix, f);
}

void cmd_independence(Report& r, const Globals& g, const std::string& points_text, int target) {
    std::vector<Rational> points = parse_rational_list(points_text);
    Json jp = Json::array();
    for (const auto& c : points) jp.push_back(to_string(c));
    r.inputs["points"] = jp;
    r.inputs["target"] = target;
    if (target < 1) throw PreconditionError("target index must be positive");
    IndependenceCertificate cert = independence_certificate_detail(points, static_cast<std::size_t>(target));
    r.add_all(cert.checks);
    r.outputs["eps"] = to_string(cert.eps);
    r.outputs["matrix"] = matrix_to_json(cert.matrix.matrix(), Parity::Classical);
    r.outputs["right_polynomial"] = serialize(cert.right.delta);
    if (cert.left) r.outputs["left_polynomial"] = serialize(cert.left->delta);
    Json table = Json::array();
    r.line(std::to_string(cert.matrix.dimension()) + "x" + std::to_string(cert.matrix.dimension()) +
           " classical Seifert matrix:");
    r.line(matrix_lines(cert.matrix.matrix()));
    r.line("signatures:");
    for (std::size_t i = 0; i < points.size(); ++i) {
        table.push_back({{"c", to_string(points[i])}, {"signature", cert.signatures[i]}});
        r.line("  c = " + to_string(points[i]) + ": " + std::to_string(cert.signatures[i]));
    }
    r.outputs["signatures"] = table;
    if (g.oracle) oracle_checks(r, g, cert.matrix, signature_step_function(cert.matrix));
}

void cmd_verify_metabolizer(Report& r, const std::string& matrix_path, const std::string& basis_path,
                            const std::string& parity_flag) {
    SeifertMatrix k = load_seifert(r, matrix_path, parity_flag);
    IntMatrix basis = read_basis_file(basis_path);
    r.inputs["basis_file"] = basis_path;
    bool ok = verify_metabolizer(k, MetabolizerCertificate{basis});
    r.outputs["metabolizer"] = ok;
    r.line(ok ? "metabolizer verified" : "not a metabolizer");
    r.add("basis spans a primitive half-rank isotropic summand", ok);
}

void render(const Report& r, const Globals& g, double elapsed_ms, std::ostream& out) {
    if (!r.raw.empty()) {
        out << r.raw;
        return;
    }
    if (g.format == "json") {
        Json j;
        j["command"] = r.command;
        j["inputs"] = r.inputs;
        j["outputs"] = r.outputs;
        Json checks = Json::array();
        for (const auto& c : r.checks) {
            Json cj{{"name", c.name}, {"passed", c.passed}};
            if (!c.detail.empty()) cj["detail"] = c.detail;
            checks.push_back(std::move(cj));
        }
        j["checks"] = checks;
        j["verified"] = r.verified();
        j["timing_ms"] = elapsed_ms;
        out << j.dump(2) << '\n';
        return;
    }
    for (const auto& l : r.text) out << l << '\n';
    if (!r.checks.empty()) {
        out << "checks:\n";
        for (const auto& c : r.checks) {
            out << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name;
            if (!c.detail.empty()) out << " (" << c.detail << ")";
            out << '\n';
        }
    }
}

void render_error(const std::string& command, const std::string& kind, const std::string& message,
                  const Globals& g, std::ostream& out, std::ostream& err) {
    if (g.format == "json") {
        Json j{{"command", command}, {"error", {{"type", kind}, {"message", message}}}};
        out << j.dump(2) << '\n';
    }
    err << "error: " << message << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Globals g;
    CLI::App app{"Exact signature functions of Seifert matrices", "sigforge"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_flag("--oracle", g.oracle, "Append a floating-point cross-check");
    app.add_option("--seed", g.seed, "Seed for randomized sample points");
    app.add_option("--samples", g.samples, "Number of random points for --oracle")->check(CLI::NonNegativeNumber);
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::string matrix_path, basis_path, parity, re, eps, poly, points, floor;
    int root = 0;
    int target = 0;
    bool json = false, csv = false, highdim = false, realize = false;

    auto* validate = app.add_subcommand("validate", "Check the parity determinant condition");
    validate->add_option("matrix", matrix_path, "Matrix file")->required();
    validate->add_option("--parity", parity, "classical|highdim (default: from file, else classical)");

    auto* alexander = app.add_subcommand("alexander", "Alexander polynomial, raw and normalized");
    alexander->add_option("matrix", matrix_path, "Matrix file")->required();
    alexander->add_option("--parity", parity, "classical|highdim");

    auto* signature = app.add_subcommand("signature", "Exact signature at a point");
    signature->add_option("matrix", matrix_path, "Matrix file")->required();
    signature->add_option("--re", re, "Real part p/q of omega");
    signature->add_option("--at-root", root, "1-based breakpoint index");
    signature->add_option("--parity", parity, "classical|highdim");

    auto* sigfn = app.add_subcommand("sigfn", "Full signature step function");
    sigfn->add_option("matrix", matrix_path, "Matrix file")->required();
    sigfn->add_option("--parity", parity, "classical|highdim");
    auto* json_flag = sigfn->add_flag("--json", json, "Emit the step function as JSON");
    sigfn->add_flag("--csv", csv, "Emit plot-ready CSV")->excludes(json_flag);

    auto* construct = app.add_subcommand("construct", "Explicit constructions");
    construct->require_subcommand(1);
    auto* jump = construct->add_subcommand("jump", "Polynomial with a single localized jump");
    jump->add_option("--re", re, "Jump location r in (-1, 1)")->required();
    jump->add_option("--eps", eps, "Tolerance")->required();
    jump->add_flag("--highdim", highdim, "High-dimensional variant");
    jump->add_flag("--realize", realize, "Also realize as a Seifert matrix");
    jump->add_option("--extra-floor", floor, "Lower bound for the extra unit root (highdim)");
    auto* metabolic = construct->add_subcommand("metabolic", "Metabolic matrix with a single peak");
    metabolic->add_option("--poly", poly, "Constant-first coefficients, e.g. 1,-1,1")->required();
    metabolic->add_option("--root-index", root, "1-based unit root index")->required();
    metabolic->add_flag("--highdim", highdim, "High-dimensional variant");

    auto* independence = app.add_subcommand("independence", "Independence certificate");
    independence->add_option("--points", points, "Sorted rationals, e.g. -3/5,-1/10,2/5")->required();
    independence->add_option("--target", target, "1-based target index")->required();

    auto* verify = app.add_subcommand("verify-metabolizer", "Check a metabolizer basis");
    verify->add_option("matrix", matrix_path, "Matrix file")->required();
    verify->add_option("basis", basis_path, "Basis file")->required();
    verify->add_option("--parity", parity, "classical|highdim");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    Report r;
    for (const auto* sub : app.get_subcommands()) {
        r.command = sub->get_name();
        for (const auto* nested : sub->get_subcommands()) r.command += " " + nested->get_name();
    }
    const auto start = std::chrono::steady_clock::now();
    try {
        if (validate->parsed()) cmd_validate(r, matrix_path, parity);
        else if (alexander->parsed()) cmd_alexander(r, matrix_path, parity);
        else if (signature->parsed()) cmd_signature(r, g, matrix_path, parity, re, root);
        else if (sigfn->parsed()) cmd_sigfn(r, g, matrix_path, parity, json, csv);
        else if (jump->parsed()) cmd_jump(r, g, re, eps, highdim, realize, floor);
        else if (metabolic->parsed()) cmd_metabolic(r, g, poly, root, highdim);
        else if (independence->parsed()) cmd_independence(r, g, points, target);
        else if (verify->parsed()) cmd_verify_metabolizer(r, matrix_path, basis_path, parity);
    } catch (const ParityViolation& e) {
        if (g.format == "text") render(r, g, 0.0, out);
        render_error(r.command, "ParityViolation", e.what(), g, out, err);
        return kExitVerification;
    } catch (const VerificationFailure& e) {
        render_error(r.command, "VerificationFailure", e.what(), g, out, err);
        return kExitVerification;
    } catch (const ParseError& e) {
        render_error(r.command, "ParseError", e.what(), g, out, err);
        return kExitUsage;
    } catch (const PreconditionError& e) {
        render_error(r.command, "PreconditionError", e.what(), g, out, err);
        return kExitUsage;
    }
    const double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    render(r, g, elapsed, out);
    return r.verified() ? kExitOk : kExitVerification;
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    try {
        return run_cli(args, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace sigforge
