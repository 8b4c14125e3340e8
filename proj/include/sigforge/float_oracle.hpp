#pragma once

// Floating-point cross-check of the exact signature: eigenvalues of the
// Hermitian form at an explicit unit complex number, via a Jacobi sweep on the
// real symmetric embedding [[A, -B], [B, A]] of H = A + iB.

#include <complex>
#include <vector>

#include "sigforge/seifert.hpp"

namespace sigforge {

struct OracleResult {
    long signature = 0;
    double min_abs_eigenvalue = 0.0;
    bool gap_certified = false;  // every eigenvalue farther than threshold * norm from 0
};

// Classical: (1-w)V + (1-w̄)Vᵀ.  HighDimSym: (w-w̄)((1-w)V - (1-w̄)Vᵀ).
// Throws PreconditionError when |w| != 1 or Im(w) <= 0 (Im(w) < 0 is accepted
// with allow_lower_half).
OracleResult signature_float(const SeifertMatrix& k, std::complex<double> omega, double threshold = 1e-8,
                             bool allow_lower_half = false);

// c + i sqrt(1 - c^2)
std::complex<double> omega_from_real_part(double c);

// Eigenvalues of a real symmetric matrix (row-major n x n), ascending.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n);

}  // namespace sigforge
