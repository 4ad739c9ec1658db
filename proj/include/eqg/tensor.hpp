// Dense operators on tensor powers V^{otimes k} (dim V = n): permutation
// actions, the antisymmetrizer, slot embeddings, and the ordered products of
// two-slot weight matrices used by the antisymmetrizer factorization checks.
#pragma once

#include <vector>

#include "eqg/face.hpp"
#include "eqg/params.hpp"

namespace eqg {

// Square complex matrix indexed M[row=input][col=output]; products compose
// input-side first: (A*B) applies A then B.
struct CMat {
    int dim = 0;
    std::vector<cplx> v;
    CMat() = default;
    explicit CMat(int d) : dim(d), v(std::size_t(d) * d, cplx(0, 0)) {}
    cplx& at(int r, int c) { return v[std::size_t(r) * dim + c]; }
    const cplx& at(int r, int c) const { return v[std::size_t(r) * dim + c]; }
    static CMat identity(int d);
};

CMat mul(const CMat& a, const CMat& b);
CMat add(const CMat& a, const CMat& b);
CMat sub(const CMat& a, const CMat& b);
CMat scale(const CMat& a, cplx s);
cplx trace(const CMat& a);
double max_abs(const CMat& a);
double max_abs_diff(const CMat& a, const CMat& b);

// Multi-index <-> flat index on k slots of dimension n, slot 0 most significant.
int flatten(const std::vector<int>& idx, int n);
std::vector<int> unflatten(int flat, int n, int k);

// Permutation action S_perm on V^{otimes k}: slot s of the input moves to slot
// perm[s] of the output, so mul(S_p, S_q) = S_{q o p}.
CMat perm_op(const std::vector<int>& perm, int n, int k);

int perm_sign(const std::vector<int>& perm);

// Antisymmetrizer (1/k!) sum_perm sign(perm) S_perm on V^{otimes k}.
CMat antisymmetrizer(int n, int k);

// Embed a two-slot operator (rank-4 face array) acting on slots (s1, s2) of
// V^{otimes k}, identity elsewhere.
CMat embed_two_slot(const FaceR& r, int s1, int s2, int k);

// Embed a k0-slot operator into the first k0 slots of V^{otimes k}.
CMat embed_leading(const CMat& op, int n, int k0, int k);

// Ordered product over pairs p<q (lexicographic) of the two-slot weight matrix
// at spectral point -(q-p)*w on V^{otimes n}, all factors at the fixed weight m.
CMat cherednik_plain(const Weight& m, const ModularParams& p);

// Same factor sequence, but evaluated chain-by-chain with each factor's weight
// shifted by the unit vectors of the slot values outside its interval [p..q],
// taken at their current values at that point of the walk (slots already acted
// on carry intermediate values, untouched slots the input values).
CMat cherednik_shifted(const Weight& m, const ModularParams& p);

}  // namespace eqg
