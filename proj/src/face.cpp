#include "eqg/face.hpp"

#include "eqg/theta.hpp"

namespace eqg {

FaceR build_r(const Weight& m, cplx z, const ModularParams& p) {
    const int n = p.n;
    FaceR r;
    r.n = n;
    r.v.assign(std::size_t(n) * n * n * n, cplx(0.0, 0.0));

    const cplx sw = sigma(p.w, p);
    const cplx diag = sigma(z + p.w, p) / sw;
    for (int i = 0; i < n; ++i) r.at(i, i, i, i) = diag;

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const cplx aij = a_diff(m, i, j, p);
            const cplx saij = sigma(aij, p);
            r.at(i, j, i, j) = sigma(z, p) * sigma(aij - p.w, p) / (sw * saij);
            r.at(i, j, j, i) = sigma(z + aij, p) / saij;
        }
    return r;
}

std::vector<cplx> as_matrix(const FaceR& r) { return r.v; }

}  // namespace eqg
