// Fused column of n two-slot weight matrices sharing one auxiliary slot, the
// antisymmetrized corner scalar extracted from it, and the determinant identity
// for the level-n theta family that certifies the corner's product form.
#pragma once

#include <vector>

#include "eqg/lattice.hpp"
#include "eqg/params.hpp"
#include "eqg/tensor.hpp"

namespace eqg {

// Operator on n column slots plus one auxiliary slot (dimension n^(n+1)),
// indexed [flat(i_0..i_{n-1}, j)][flat(ip_0..ip_{n-1}, jp)] with the auxiliary
// index last.  Factor k couples column slot k to the auxiliary slot at spectral
// point z + k*w and weight m + sum_{l<k} e_{ip_l} (the accumulated outgoing
// column indices).  With drop_first_shift the k=1 factor is evaluated at the
// unshifted weight instead, a deliberate mistake used as a negative control.
CMat fused_column(const Weight& m, cplx z, const ModularParams& p,
                  bool drop_first_shift = false);

// Antisymmetrizer of the n column slots, identity on the auxiliary slot.
CMat column_antisymmetrizer(int n);

// The n x n corner block of P_- X P_- at column multi-index (0,1,...,n-1) on
// both sides, indexed by the auxiliary (incoming j, outgoing jp).
CMat corner_block(const Weight& m, cplx z, const ModularParams& p);

// Single corner entry.
cplx qdet_scalar(const Weight& m, cplx z, const ModularParams& p, int j, int jp);

// Det[ theta_slot(i)(n*zs[k]) ] / ( sigma(sum zs - (n-1)/2) prod_{k<l} sigma(zs[k]-zs[l]) ),
// constant in zs.
cplx tdet_ratio(const std::vector<cplx>& zs, const ModularParams& p);

// Evaluation points n*z_mu = z + n*w*abar_mu + (n-1)*w tying the determinant
// identity to the corner factorization.
std::vector<cplx> tdet_special_points(const Weight& m, cplx z, const ModularParams& p);

}  // namespace eqg
