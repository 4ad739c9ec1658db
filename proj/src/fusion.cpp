#include "eqg/fusion.hpp"

#include <cmath>
#include <map>

#include "eqg/face.hpp"
#include "eqg/theta.hpp"

namespace eqg {

CMat fused_column(const Weight& m, cplx z, const ModularParams& p, bool drop_first_shift) {
    const int n = p.n;
    const int ncols = int(std::pow(double(n), n) + 0.5);
    const int dim = ncols * n;
    CMat X(dim);

    std::map<std::pair<std::vector<int>, int>, FaceR> cache;
    auto getR = [&](const std::vector<int>& shift, int k) -> const FaceR& {
        auto key = std::make_pair(shift, k);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, build_r(shifted_by(m, shift), z + double(k) * p.w, p)).first;
        return it->second;
    };

    std::vector<cplx> T(n * n), Tn(n * n);
    for (int ipf = 0; ipf < ncols; ++ipf) {
        auto ip = unflatten(ipf, n, n);
        // accumulated outgoing shifts: factor k sees m + sum_{l<k} e_{ip_l}
        std::vector<std::vector<int>> shifts;
        std::vector<int> acc(n, 0);
        for (int k = 0; k < n; ++k) {
            shifts.push_back(acc);
            acc[ip[k]] += 1;
        }
        if (drop_first_shift && n >= 2) shifts[1].assign(n, 0);

        for (int iff = 0; iff < ncols; ++iff) {
            auto i = unflatten(iff, n, n);
            // auxiliary transfer chain: T <- M_k T, M_k[jn][jo] = R_k[i_k, jo -> ip_k, jn]
            std::fill(T.begin(), T.end(), cplx(0, 0));
            for (int j = 0; j < n; ++j) T[j * n + j] = cplx(1, 0);
            for (int k = 0; k < n; ++k) {
                const FaceR& Rk = getR(shifts[k], k);
                std::fill(Tn.begin(), Tn.end(), cplx(0, 0));
                for (int jn = 0; jn < n; ++jn)
                    for (int jm = 0; jm < n; ++jm) {
                        const cplx mk = Rk.at(i[k], jm, ip[k], jn);
                        if (mk == cplx(0, 0)) continue;
                        for (int jo = 0; jo < n; ++jo) Tn[jn * n + jo] += mk * T[jm * n + jo];
                    }
                std::swap(T, Tn);
            }
            for (int j = 0; j < n; ++j)
                for (int jp = 0; jp < n; ++jp) X.at(iff * n + j, ipf * n + jp) = T[jp * n + j];
        }
    }
    return X;
}

CMat column_antisymmetrizer(int n) {
    return embed_leading(antisymmetrizer(n, n), n, n, n + 1);
}

CMat corner_block(const Weight& m, cplx z, const ModularParams& p) {
    const int n = p.n;
    CMat X = fused_column(m, z, p);
    CMat E = column_antisymmetrizer(n);
    CMat Y = mul(mul(E, X), E);
    std::vector<int> cols0(n);
    for (int i = 0; i < n; ++i) cols0[i] = i;
    const int base = flatten(cols0, n) * n;
    CMat out(n);
    for (int j = 0; j < n; ++j)
        for (int jp = 0; jp < n; ++jp) out.at(j, jp) = Y.at(base + j, base + jp);
    return out;
}

cplx qdet_scalar(const Weight& m, cplx z, const ModularParams& p, int j, int jp) {
    return corner_block(m, z, p).at(j, jp);
}

cplx tdet_ratio(const std::vector<cplx>& zs, const ModularParams& p) {
    const int n = p.n;
    // determinant of the n x n slot matrix by Gaussian elimination
    std::vector<cplx> M(n * n);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            M[k * n + i] = theta_slot(i, n, double(n) * zs[k], p.tau, p.tol_series);
    cplx det(1.0, 0.0);
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(M[r * n + c]) > std::abs(M[piv * n + c])) piv = r;
        if (piv != c) {
            for (int t = 0; t < n; ++t) std::swap(M[c * n + t], M[piv * n + t]);
            det = -det;
        }
        det *= M[c * n + c];
        if (M[c * n + c] == cplx(0, 0)) return cplx(0, 0);
        for (int r = c + 1; r < n; ++r) {
            cplx f = M[r * n + c] / M[c * n + c];
            for (int t = c; t < n; ++t) M[r * n + t] -= f * M[c * n + t];
        }
    }

    cplx zsum(0, 0);
    for (const cplx& zk : zs) zsum += zk;
    cplx den = sigma(zsum - double(n - 1) / 2.0, p.tau, p.tol_series);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) den *= sigma(zs[i] - zs[j], p.tau, p.tol_series);
    return det / den;
}

std::vector<cplx> tdet_special_points(const Weight& m, cplx z, const ModularParams& p) {
    const int n = p.n;
    auto ab = abar(m, p);
    std::vector<cplx> zs(n);
    for (int mu = 0; mu < n; ++mu)
        zs[mu] = (z + double(n) * p.w * ab[mu] + double(n - 1) * p.w) / double(n);
    return zs;
}

}  // namespace eqg
