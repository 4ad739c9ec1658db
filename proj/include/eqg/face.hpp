// Face-type weight matrix R(a|z) on V x V: diagonal-preserving entries built
// from sigma ratios, with an exact structural zero pattern (entries vanish
// unless the incoming pair equals the outgoing pair as a multiset).
#pragma once

#include <vector>

#include "eqg/lattice.hpp"
#include "eqg/params.hpp"

namespace eqg {

// Rank-4 array R[i][j][ip][jp] = entry from incoming pair (i,j) to outgoing
// pair (ip,jp); flattened row-major with strides (n^3, n^2, n, 1).
struct FaceR {
    int n = 0;
    std::vector<cplx> v;
    cplx& at(int i, int j, int ip, int jp) { return v[((i * n + j) * n + ip) * n + jp]; }
    const cplx& at(int i, int j, int ip, int jp) const {
        return v[((i * n + j) * n + ip) * n + jp];
    }
};

// Nonzero entries:
//   equal pair:     R(a|z)[i,i -> i,i] = sigma(z+w)/sigma(w)
//   pair-preserving R(a|z)[i,j -> i,j] = sigma(z) sigma(a_ij - w) / (sigma(w) sigma(a_ij))
//   pair-exchanging R(a|z)[i,j -> j,i] = sigma(z + a_ij) / sigma(a_ij)
// with a_ij = a_i - a_j at the weight m.  All other entries are exactly zero
// (written as zeros, never computed).
FaceR build_r(const Weight& m, cplx z, const ModularParams& p);

// n^2 x n^2 matrix view, row = incoming pair (i,j), column = outgoing (ip,jp).
std::vector<cplx> as_matrix(const FaceR& r);

}  // namespace eqg
