#include "eqg/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace eqg {

CMat CMat::identity(int d) {
    CMat m(d);
    for (int i = 0; i < d; ++i) m.at(i, i) = cplx(1.0, 0.0);
    return m;
}

CMat mul(const CMat& a, const CMat& b) {
    if (a.dim != b.dim) throw std::invalid_argument("mul: dimension mismatch");
    const int d = a.dim;
    CMat out(d);
    for (int r = 0; r < d; ++r)
        for (int m = 0; m < d; ++m) {
            const cplx arm = a.at(r, m);
            if (arm == cplx(0.0, 0.0)) continue;
            for (int c = 0; c < d; ++c) out.at(r, c) += arm * b.at(m, c);
        }
    return out;
}

CMat add(const CMat& a, const CMat& b) {
    CMat out = a;
    for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] += b.v[i];
    return out;
}

CMat sub(const CMat& a, const CMat& b) {
    CMat out = a;
    for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] -= b.v[i];
    return out;
}

CMat scale(const CMat& a, cplx s) {
    CMat out = a;
    for (auto& x : out.v) x *= s;
    return out;
}

cplx trace(const CMat& a) {
    cplx t(0.0, 0.0);
    for (int i = 0; i < a.dim; ++i) t += a.at(i, i);
    return t;
}

double max_abs(const CMat& a) {
    double m = 0.0;
    for (const auto& x : a.v) m = std::max(m, std::abs(x));
    return m;
}

double max_abs_diff(const CMat& a, const CMat& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.v.size(); ++i) m = std::max(m, std::abs(a.v[i] - b.v[i]));
    return m;
}

int flatten(const std::vector<int>& idx, int n) {
    int f = 0;
    for (int x : idx) f = f * n + x;
    return f;
}

std::vector<int> unflatten(int flat, int n, int k) {
    std::vector<int> idx(k);
    for (int s = k - 1; s >= 0; --s) {
        idx[s] = flat % n;
        flat /= n;
    }
    return idx;
}

CMat perm_op(const std::vector<int>& perm, int n, int k) {
    if ((int)perm.size() != k) throw std::invalid_argument("perm_op: size mismatch");
    const int d = int(std::pow(double(n), k) + 0.5);
    CMat out(d);
    for (int in = 0; in < d; ++in) {
        auto src = unflatten(in, n, k);
        std::vector<int> dst(k);
        for (int s = 0; s < k; ++s) dst[perm[s]] = src[s];
        out.at(in, flatten(dst, n)) = cplx(1.0, 0.0);
    }
    return out;
}

int perm_sign(const std::vector<int>& perm) {
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) sign = -sign;
    return sign;
}

CMat antisymmetrizer(int n, int k) {
    const int d = int(std::pow(double(n), k) + 0.5);
    CMat out(d);
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    double kfact = 1.0;
    for (int i = 2; i <= k; ++i) kfact *= double(i);
    do {
        const double s = double(perm_sign(perm)) / kfact;
        for (int in = 0; in < d; ++in) {
            auto src = unflatten(in, n, k);
            std::vector<int> dst(k);
            for (int t = 0; t < k; ++t) dst[perm[t]] = src[t];
            out.at(in, flatten(dst, n)) += s;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

CMat embed_two_slot(const FaceR& r, int s1, int s2, int k) {
    const int n = r.n;
    const int d = int(std::pow(double(n), k) + 0.5);
    CMat out(d);
    for (int in = 0; in < d; ++in) {
        auto idx = unflatten(in, n, k);
        const int i = idx[s1], j = idx[s2];
        for (int ip = 0; ip < n; ++ip)
            for (int jp = 0; jp < n; ++jp) {
                const cplx val = r.at(i, j, ip, jp);
                if (val == cplx(0.0, 0.0)) continue;
                auto jdx = idx;
                jdx[s1] = ip;
                jdx[s2] = jp;
                out.at(in, flatten(jdx, n)) += val;
            }
    }
    return out;
}

CMat embed_leading(const CMat& op, int n, int k0, int k) {
    const int d = int(std::pow(double(n), k) + 0.5);
    const int rest = int(std::pow(double(n), k - k0) + 0.5);
    CMat out(d);
    for (int r = 0; r < op.dim; ++r)
        for (int c = 0; c < op.dim; ++c) {
            const cplx val = op.at(r, c);
            if (val == cplx(0.0, 0.0)) continue;
            for (int t = 0; t < rest; ++t) out.at(r * rest + t, c * rest + t) = val;
        }
    return out;
}

CMat cherednik_plain(const Weight& m, const ModularParams& p) {
    const int n = p.n;
    CMat out = CMat::identity(int(std::pow(double(n), n) + 0.5));
    // lexicographic pair order (0,1),(0,2),...,(0,n-1),(1,2),...
    for (int pp = 0; pp < n; ++pp)
        for (int q = pp + 1; q < n; ++q) {
            FaceR r = build_r(m, -double(q - pp) * p.w, p);
            out = mul(out, embed_two_slot(r, pp, q, n));
        }
    return out;
}

CMat cherednik_shifted(const Weight& m, const ModularParams& p) {
    const int n = p.n;
    const int d = int(std::pow(double(n), n) + 0.5);
    std::vector<std::pair<int, int>> factors;
    for (int pp = 0; pp < n; ++pp)
        for (int q = pp + 1; q < n; ++q) factors.emplace_back(pp, q);

    CMat out(d);
    // Walk every chain of intermediate slot configurations; each factor sees
    // the weight shifted by the current values of the slots outside [p..q].
    std::function<void(std::size_t, std::vector<int>&, cplx, int)> walk =
        [&](std::size_t f, std::vector<int>& cur, cplx amp, int in_flat) {
            if (amp == cplx(0.0, 0.0)) return;
            if (f == factors.size()) {
                out.at(in_flat, flatten(cur, n)) += amp;
                return;
            }
            const auto [pp, q] = factors[f];
            Weight mw = m;
            for (int s = 0; s < n; ++s)
                if (s < pp || s > q) mw[cur[s]] += 1;
            FaceR r = build_r(mw, -double(q - pp) * p.w, p);
            const int i = cur[pp], j = cur[q];
            for (int ip = 0; ip < n; ++ip)
                for (int jp = 0; jp < n; ++jp) {
                    const cplx val = r.at(i, j, ip, jp);
                    if (val == cplx(0.0, 0.0)) continue;
                    cur[pp] = ip;
                    cur[q] = jp;
                    walk(f + 1, cur, amp * val, in_flat);
                    cur[pp] = i;
                    cur[q] = j;
                }
        };

    for (int in = 0; in < d; ++in) {
        auto idx = unflatten(in, n, n);
        walk(0, idx, cplx(1.0, 0.0), in);
    }
    return out;
}

}  // namespace eqg
