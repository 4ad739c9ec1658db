#include "eqg/lattice.hpp"

#include <stdexcept>

#include "eqg/theta.hpp"

namespace eqg {

std::vector<double> abar(const Weight& m, const ModularParams& p) {
    if ((int)m.size() != p.n) throw std::invalid_argument("abar: weight size != n");
    double mean = 0.0;
    for (int mi : m) mean += double(mi);
    mean /= double(p.n);
    std::vector<double> out(p.n);
    for (int i = 0; i < p.n; ++i) out[i] = double(m[i]) - mean + p.w_vec[i];
    return out;
}

std::vector<cplx> avals(const Weight& m, const ModularParams& p) {
    auto ab = abar(m, p);
    std::vector<cplx> out(p.n);
    for (int i = 0; i < p.n; ++i) out[i] = p.w * ab[i];
    return out;
}

cplx a_diff(const Weight& m, int i, int j, const ModularParams& p) {
    // abar_i - abar_j = m_i - m_j + w_vec_i - w_vec_j (mean cancels)
    return p.w * (double(m[i] - m[j]) + (p.w_vec[i] - p.w_vec[j]));
}

cplx delta_product(const Weight& m, const ModularParams& p) {
    cplx out(1.0, 0.0);
    for (int i = 0; i < p.n; ++i)
        for (int j = i + 1; j < p.n; ++j) out *= sigma(a_diff(m, i, j, p), p);
    return out;
}

Weight shifted(const Weight& m, int k, int step) {
    Weight out = m;
    out.at(k) += step;
    return out;
}

Weight shifted_by(const Weight& m, const std::vector<int>& d) {
    if (d.size() != m.size()) throw std::invalid_argument("shifted_by: size mismatch");
    Weight out = m;
    for (std::size_t i = 0; i < m.size(); ++i) out[i] += d[i];
    return out;
}

bool is_generic(const Weight& m, const ModularParams& p, double floor, int k_range) {
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j) {
            if (i == j) continue;
            cplx aij = a_diff(m, i, j, p);
            for (int k = -k_range; k <= k_range; ++k)
                if (std::abs(sigma(aij + double(k) * p.w, p)) < floor) return false;
        }
    return true;
}

}  // namespace eqg
