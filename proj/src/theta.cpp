#include "eqg/theta.hpp"

#include <cmath>
#include <stdexcept>

namespace eqg {

namespace {
constexpr double PI = 3.14159265358979323846;
const cplx I_UNIT(0.0, 1.0);
}  // namespace

cplx theta_char(double a, double b, cplx z, cplx tau, double tol) {
    if (tau.imag() < 0.3)
        throw std::invalid_argument("theta_char: Im(tau) must be >= 0.3");

    // Reduce z = z' + k*tau + j with z' in a cell near the origin.  The removed
    // translations contribute exact exponential prefactors:
    //   theta[a,b](z + 1)   = e^{2 pi i a} theta[a,b](z)
    //   theta[a,b](z + tau) = e^{-i pi tau - 2 pi i (z + b)} theta[a,b](z)
    // iterating the tau-law k times against the reduced argument gives
    //   theta[a,b](z' + k tau) = e^{-i pi k^2 tau - 2 pi i k (z' + b)} theta[a,b](z')
    // hence theta[a,b](z) = e^{2 pi i a j} e^{-i pi k^2 tau - 2 pi i k (z'+b)} theta[a,b](z').
    double k = std::round(z.imag() / tau.imag());
    cplx z1 = z - k * tau;
    double j = std::round(z1.real());
    z1 -= j;
    cplx phase = std::exp(2.0 * PI * I_UNIT * a * j) *
                 std::exp(-I_UNIT * PI * k * k * tau - 2.0 * PI * I_UNIT * k * (z1 + b));

    // Symmetric-pair summation around m = -a: terms m and -1-2*round(a)-m... in
    // practice pair (m0 + t, m0 - 1 - t) around m0 = round(-a) captures the two
    // dominant tails; stop after two consecutive pairs below tol * |partial sum|.
    long m0 = std::lround(-a);
    cplx s(0.0, 0.0);
    int small_pairs = 0;
    for (long t = 0; t < 4000; ++t) {
        long mp = m0 + t;
        long mm = m0 - 1 - t;
        double ap = double(mp) + a;
        double am = double(mm) + a;
        cplx term = std::exp(I_UNIT * PI * ap * ap * tau + 2.0 * PI * I_UNIT * ap * (z1 + b)) +
                    std::exp(I_UNIT * PI * am * am * tau + 2.0 * PI * I_UNIT * am * (z1 + b));
        s += term;
        if (std::abs(term) < tol * (std::abs(s) + 1e-300)) {
            if (++small_pairs >= 2) break;
        } else {
            small_pairs = 0;
        }
    }
    return phase * s;
}

cplx sigma(cplx z, cplx tau, double tol) { return theta_char(0.5, 0.5, z, tau, tol); }

cplx theta_slot(int j, int n, cplx z, cplx tau, double tol) {
    if (j < 0 || j >= n) throw std::invalid_argument("theta_slot: need 0 <= j < n");
    return theta_char(0.5 - double(j) / double(n), 0.5, z, double(n) * tau, tol);
}

}  // namespace eqg
