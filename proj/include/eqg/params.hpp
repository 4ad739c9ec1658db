// Global model parameters shared by every construction: rank, modulus, crossing
// parameter, generic weight shifts, spectral offsets, and tolerances.
#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqg {

using cplx = std::complex<double>;

struct ModularParams {
    int n = 2;                     // rank: dimension of the auxiliary/quantum space
    cplx tau{0.0, 0.8};            // modulus, Im(tau) >= 0.3 enforced
    cplx w{0.2137, 0.1129};        // crossing parameter
    std::vector<double> w_vec;     // generic per-component shifts entering abar
    cplx z0{0.0, 0.0};             // spectral offset of the fundamental representation
    cplx delta0{0.0, 0.0};         // shift in the structured operator form; default w/n - z0
    double tol_series = 1e-14;     // theta series truncation tolerance
    double tol_residual = 1e-9;    // generic identity-check tolerance

    void validate() const {
        if (n < 2 || n > 4)
            throw std::invalid_argument("rank n must be in {2,3,4}, got " + std::to_string(n));
        if (tau.imag() < 0.3)
            throw std::invalid_argument("Im(tau) must be >= 0.3 for series convergence");
        if ((int)w_vec.size() != n)
            throw std::invalid_argument("w_vec must have exactly n entries");
        for (std::size_t i = 0; i < w_vec.size(); ++i)
            for (std::size_t j = i + 1; j < w_vec.size(); ++j)
                if (std::abs(w_vec[i] - w_vec[j]) < 1e-9)
                    throw std::invalid_argument("w_vec entries must be pairwise distinct");
        if (tol_series <= 0 || tol_residual <= 0)
            throw std::invalid_argument("tolerances must be positive");
    }
};

// Default generic parameter sets used across checks and tests.
inline ModularParams default_params(int n) {
    ModularParams p;
    p.n = n;
    p.tau = cplx(0.0, 0.8);
    p.w = cplx(0.2137, 0.1129);
    switch (n) {
        case 2: p.w_vec = {0.1, 0.3}; break;
        case 3: p.w_vec = {0.1, 0.25, 0.4}; break;
        case 4: p.w_vec = {0.1, 0.25, 0.4, 0.55}; break;
        default: throw std::invalid_argument("default_params: n must be 2, 3 or 4");
    }
    p.z0 = cplx(0.0, 0.0);
    p.delta0 = p.w / double(n) - p.z0;
    p.validate();
    return p;
}

}  // namespace eqg
