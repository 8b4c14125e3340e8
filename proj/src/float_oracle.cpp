#include "sigforge/float_oracle.hpp"

#include <algorithm>
#include <cmath>

namespace sigforge {

std::complex<double> omega_from_real_part(double c) {
    if (!(c > -1.0 && c < 1.0)) throw PreconditionError("real part must lie in (-1, 1)");
    return {c, std::sqrt(1.0 - c * c)};
}

std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n) {
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
    double total = 0.0;
    for (double v : a) total += v * v;
    if (total == 0.0) return std::vector<double>(n, 0.0);

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
        if (off <= 1e-30 * total) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = at(p, k);
                    const double aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

OracleResult signature_float(const SeifertMatrix& k, std::complex<double> omega, double threshold,
                             bool allow_lower_half) {
    if (std::abs(std::abs(omega) - 1.0) > 1e-9) throw PreconditionError("omega must lie on the unit circle");
    if (omega.imag() == 0.0 || (omega.imag() < 0.0 && !allow_lower_half)) {
        throw PreconditionError("omega must lie in the open upper half plane");
    }
    const IntMatrix& v = k.matrix();
    const std::size_t n = v.rows();
    const std::complex<double> one(1.0, 0.0);
    const std::complex<double> conj = std::conj(omega);

    std::vector<double> emb(4 * n * n, 0.0);
    const std::size_t m = 2 * n;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double vij = v(i, j).get_d();
            const double vji = v(j, i).get_d();
            std::complex<double> h;
            if (k.parity() == Parity::Classical) {
                h = (one - omega) * vij + (one - conj) * vji;
            } else {
                h = (omega - conj) * ((one - omega) * vij - (one - conj) * vji);
            }
            emb[i * m + j] = h.real();
            emb[(i + n) * m + (j + n)] = h.real();
            emb[i * m + (j + n)] = -h.imag();
            emb[(i + n) * m + j] = h.imag();
        }
    }
    double norm = 0.0;
    for (double x : emb) norm += x * x;
    norm = std::sqrt(norm);

    std::vector<double> eig = symmetric_eigenvalues(std::move(emb), m);
    const double tol = threshold * std::max(norm, 1.0);
    OracleResult res;
    long pos = 0;
    long neg = 0;
    res.min_abs_eigenvalue = eig.empty() ? 0.0 : std::abs(eig.front());
    for (double e : eig) {
        res.min_abs_eigenvalue = std::min(res.min_abs_eigenvalue, std::abs(e));
        if (e > tol) ++pos;
        else if (e < -tol) ++neg;
    }
    res.signature = (pos - neg) / 2;
    res.gap_certified = res.min_abs_eigenvalue > tol && (pos - neg) % 2 == 0;
    return res;
}

}  // namespace sigforge
