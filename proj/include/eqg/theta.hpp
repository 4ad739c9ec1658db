// Jacobi theta functions with rational characteristics, the odd building block
// sigma, and the level-n family used by the determinant construction.
#pragma once

#include <complex>

#include "eqg/params.hpp"

namespace eqg {

// theta[a,b](z, tau) = sum_m exp(i pi (m+a)^2 tau + 2 i pi (m+a)(z+b)).
// Requires Im(tau) >= 0.3.  The series is summed in symmetric pairs around the
// characteristic after reducing z into the fundamental cell, with the removed
// lattice translations restored exactly through the quasi-periodicity phases.
cplx theta_char(double a, double b, cplx z, cplx tau, double tol = 1e-14);

// sigma(z) = theta[1/2,1/2](z, tau): odd, sigma(0) = 0, simple zeros on the lattice.
cplx sigma(cplx z, cplx tau, double tol = 1e-14);
inline cplx sigma(cplx z, const ModularParams& p) { return sigma(z, p.tau, p.tol_series); }

// theta_slot(j): theta[1/2 - j/n, 1/2](z, n*tau), the n functions entering the
// determinant numerator.  0 <= j < n.
cplx theta_slot(int j, int n, cplx z, cplx tau, double tol = 1e-14);

}  // namespace eqg
