#include "eqg/qdet_rep.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "eqg/face.hpp"
#include "eqg/rng.hpp"
#include "eqg/theta.hpp"

namespace eqg {

std::string Convention::name() const {
    std::string s;
    s += dyn_state_shift ? "state-shifted" : "label-weight";
    s += slot_swapped ? "/slot-swapped" : "/label-first";
    s += reversed ? "/last-acts-first" : "/first-acts-first";
    return s;
}

CMat lop(const Weight& m, cplx z, int lower, int upper, const ModularParams& p,
         const Convention& c) {
    const int n = p.n;
    CMat M(n);
    if (!c.dyn_state_shift) {
        FaceR R = build_r(m, z - p.z0, p);
        for (int h = 0; h < n; ++h)
            for (int hp = 0; hp < n; ++hp)
                M.at(h, hp) = c.slot_swapped ? R.at(h, lower, hp, upper)
                                             : R.at(lower, h, upper, hp);
    } else {
        for (int h = 0; h < n; ++h) {
            FaceR R = build_r(shifted(m, h), z - p.z0, p);
            for (int hp = 0; hp < n; ++hp)
                M.at(h, hp) = c.slot_swapped ? R.at(h, lower, hp, upper)
                                             : R.at(lower, h, upper, hp);
        }
    }
    return M;
}

CMat assemble(const std::vector<CMat>& written) {
    if (written.empty()) throw std::invalid_argument("assemble: empty factor list");
    CMat T = written.front();
    for (std::size_t k = 1; k < written.size(); ++k) T = mul(T, written[k]);
    return T;
}

namespace {

// Two-factor state walk: first factor then second factor (or reversed).
cplx two_factor(const CMat& f1, const CMat& f2, int h, int hp, bool reversed) {
    cplx t(0, 0);
    const int n = f1.dim;
    for (int h1 = 0; h1 < n; ++h1)
        t += reversed ? f2.at(h, h1) * f1.at(h1, hp) : f1.at(h, h1) * f2.at(h1, hp);
    return t;
}

// All n^2 label matrices at one (weight, spectral point), sharing the face builds.
struct LopCache {
    int n = 0;
    std::vector<CMat> mats;  // indexed lower*n + upper
    const CMat& get(int lower, int upper) const { return mats[lower * n + upper]; }
};

LopCache make_lops(const Weight& m, cplx z, const ModularParams& p, const Convention& c) {
    const int n = p.n;
    LopCache out;
    out.n = n;
    out.mats.assign(std::size_t(n) * n, CMat(n));
    std::vector<FaceR> Rs;
    if (!c.dyn_state_shift) {
        Rs.push_back(build_r(m, z - p.z0, p));
    } else {
        for (int h = 0; h < n; ++h) Rs.push_back(build_r(shifted(m, h), z - p.z0, p));
    }
    for (int lo = 0; lo < n; ++lo)
        for (int up = 0; up < n; ++up) {
            CMat& M = out.mats[lo * n + up];
            for (int h = 0; h < n; ++h) {
                const FaceR& R = Rs[c.dyn_state_shift ? h : 0];
                for (int hp = 0; hp < n; ++hp)
                    M.at(h, hp) =
                        c.slot_swapped ? R.at(h, lo, hp, up) : R.at(lo, h, up, hp);
            }
        }
    return out;
}

}  // namespace

double exchange_residual(const Weight& m, cplx z1, cplx z2, const ModularParams& p,
                         const Convention& c) {
    const int n = p.n;
    double worst = 0.0;
    FaceR Ra = build_r(m, z1 - z2, p);
    std::vector<FaceR> Rb(n);
    for (int h = 0; h < n; ++h) Rb[h] = build_r(shifted(m, h), z1 - z2, p);

    const LopCache L1m = make_lops(m, z1, p, c);
    const LopCache L2m = make_lops(m, z2, p, c);
    std::vector<LopCache> L2s, L1s;
    for (int k = 0; k < n; ++k) {
        L2s.push_back(make_lops(shifted(m, k), z2, p, c));
        L1s.push_back(make_lops(shifted(m, k), z1, p, c));
    }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int i2 = 0; i2 < n; ++i2)
                for (int j2 = 0; j2 < n; ++j2)
                    for (int h = 0; h < n; ++h)
                        for (int hp = 0; hp < n; ++hp) {
                            cplx lhs(0, 0);
                            for (int ip = 0; ip < n; ++ip)
                                for (int jp = 0; jp < n; ++jp) {
                                    const cplx cf = Rb[h].at(i, j, ip, jp);
                                    if (cf == cplx(0, 0)) continue;
                                    lhs += cf * two_factor(L1m.get(ip, i2), L2s[i2].get(jp, j2),
                                                           h, hp, c.reversed);
                                }
                            cplx rhs(0, 0);
                            for (int ip = 0; ip < n; ++ip)
                                for (int jp = 0; jp < n; ++jp) {
                                    const cplx cf = Ra.at(ip, jp, i2, j2);
                                    if (cf == cplx(0, 0)) continue;
                                    rhs += cf * two_factor(L2m.get(j, jp), L1s[jp].get(i, ip),
                                                           h, hp, c.reversed);
                                }
                            const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-30});
                            worst = std::max(worst, std::abs(lhs - rhs) / scale);
                        }
    return worst;
}

CalibrationResult calibrate_convention(const ModularParams& p, std::uint64_t seed, int draws) {
    std::array<Convention, 8> cands;
    int t = 0;
    for (bool dyn : {false, true})
        for (bool slot : {false, true})
            for (bool rev : {false, true}) cands[t++] = Convention{dyn, slot, rev};

    Rng rng(seed, "calibration.unique_convention");
    CalibrationResult out;
    int winner_idx = -1;
    out.winner_residual = 0.0;
    out.runner_up_residual = 1e300;
    out.unique = true;
    for (int d = 0; d < draws; ++d) {
        Weight m = rng.weight(p);
        cplx z1 = rng.complex_point(), z2 = rng.complex_point();
        std::array<double, 8> res;
        for (int k = 0; k < 8; ++k) res[k] = exchange_residual(m, z1, z2, p, cands[k]);
        int best = int(std::min_element(res.begin(), res.end()) - res.begin());
        if (winner_idx < 0) winner_idx = best;
        if (best != winner_idx) out.unique = false;
        out.winner_residual = std::max(out.winner_residual, res[winner_idx]);
        for (int k = 0; k < 8; ++k)
            if (k != winner_idx) out.runner_up_residual = std::min(out.runner_up_residual, res[k]);
        out.residuals = res;
    }
    out.winner = cands[winner_idx < 0 ? 0 : winner_idx];
    return out;
}

std::array<double, 4> family_residuals(const Weight& m, cplx z1, cplx z2,
                                       const ModularParams& p) {
    const int n = p.n;
    const Convention c{};
    std::array<double, 4> worst{0.0, 0.0, 0.0, 0.0};
    FaceR Ra = build_r(m, z1 - z2, p);
    std::vector<FaceR> Rb(n);
    for (int h = 0; h < n; ++h) Rb[h] = build_r(shifted(m, h), z1 - z2, p);

    const LopCache L1m = make_lops(m, z1, p, c);
    const LopCache L2m = make_lops(m, z2, p, c);
    std::vector<LopCache> L1s, L2s;
    for (int k = 0; k < n; ++k) {
        L1s.push_back(make_lops(shifted(m, k), z1, p, c));
        L2s.push_back(make_lops(shifted(m, k), z2, p, c));
    }

    auto upd = [](double& w, cplx lhs, cplx rhs) {
        const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-30});
        w = std::max(w, std::abs(lhs - rhs) / scale);
    };

    for (int h = 0; h < n; ++h)
        for (int hp = 0; hp < n; ++hp) {
            // family 1: same lower label i, same upper label i2
            for (int i = 0; i < n; ++i)
                for (int i2 = 0; i2 < n; ++i2) {
                    cplx lhs = Rb[h].at(i, i, i, i) *
                               two_factor(L1m.get(i, i2), L2s[i2].get(i, i2), h, hp, false);
                    cplx rhs = Ra.at(i2, i2, i2, i2) *
                               two_factor(L2m.get(i, i2), L1s[i2].get(i, i2), h, hp, false);
                    upd(worst[0], lhs, rhs);
                }
            // family 2: same lower i, split uppers i2 != j2
            for (int i = 0; i < n; ++i)
                for (int i2 = 0; i2 < n; ++i2)
                    for (int j2 = 0; j2 < n; ++j2) {
                        if (i2 == j2) continue;
                        cplx lhs = Rb[h].at(i, i, i, i) *
                                   two_factor(L1m.get(i, i2), L2s[i2].get(i, j2), h, hp, false);
                        cplx rhs =
                            Ra.at(i2, j2, i2, j2) *
                                two_factor(L2m.get(i, j2), L1s[j2].get(i, i2), h, hp, false) +
                            Ra.at(j2, i2, i2, j2) *
                                two_factor(L2m.get(i, i2), L1s[i2].get(i, j2), h, hp, false);
                        upd(worst[1], lhs, rhs);
                    }
            // family 3: split lowers i != j, same upper i2
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (i == j) continue;
                    for (int i2 = 0; i2 < n; ++i2) {
                        cplx lhs = Ra.at(i2, i2, i2, i2) *
                                   two_factor(L2m.get(j, i2), L1s[i2].get(i, i2), h, hp, false);
                        cplx rhs =
                            Rb[h].at(i, j, i, j) *
                                two_factor(L1m.get(i, i2), L2s[i2].get(j, i2), h, hp, false) +
                            Rb[h].at(i, j, j, i) *
                                two_factor(L1m.get(j, i2), L2s[i2].get(i, i2), h, hp, false);
                        upd(worst[2], lhs, rhs);
                    }
                }
            // family 4: split lowers i != j and split uppers i2 != j2
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (i == j) continue;
                    for (int i2 = 0; i2 < n; ++i2)
                        for (int j2 = 0; j2 < n; ++j2) {
                            if (i2 == j2) continue;
                            cplx lhs =
                                Rb[h].at(i, j, i, j) *
                                    two_factor(L1m.get(i, i2), L2s[i2].get(j, j2), h, hp, false) +
                                Rb[h].at(i, j, j, i) *
                                    two_factor(L1m.get(j, i2), L2s[i2].get(i, j2), h, hp, false);
                            cplx rhs =
                                Ra.at(i2, j2, i2, j2) *
                                    two_factor(L2m.get(j, j2), L1s[j2].get(i, i2), h, hp, false) +
                                Ra.at(j2, i2, i2, j2) *
                                    two_factor(L2m.get(j, i2), L1s[i2].get(i, j2), h, hp, false);
                            upd(worst[3], lhs, rhs);
                        }
                }
        }
    return worst;
}

CMat qdet_operator(const Weight& m, cplx z, const ModularParams& p) {
    const int n = p.n;
    CMat out(n);
    std::vector<int> mu(n);
    std::iota(mu.begin(), mu.end(), 0);
    double nfact = 1.0;
    for (int i = 2; i <= n; ++i) nfact *= double(i);
    do {
        const double sgn = double(perm_sign(mu));
        std::vector<CMat> fact;
        Weight mm = m;
        for (int k = 0; k < n; ++k) {
            fact.push_back(lop(mm, z + double(k) * p.w, mu[k], k, p));
            mm[k] += 1;  // upper label of factor k
        }
        CMat term = assemble(fact);
        for (std::size_t t = 0; t < term.v.size(); ++t) out.v[t] += sgn / nfact * term.v[t];
    } while (std::next_permutation(mu.begin(), mu.end()));
    return out;
}

int realizable_shift(const Weight& wt_a, const Weight& wt_b) {
    if (wt_a.size() != wt_b.size()) return -1;
    int h = -1;
    for (std::size_t i = 0; i < wt_a.size(); ++i) {
        const int d = wt_b[i] - wt_a[i];
        if (d == 0) continue;
        if (d != 1 || h >= 0) return -1;
        h = int(i);
    }
    return h;
}

std::vector<cplx> qdet_column(const Weight& wt_a, const Weight& wt_b, cplx z,
                              const ModularParams& p) {
    const int h = realizable_shift(wt_a, wt_b);
    if (h < 0)
        throw std::invalid_argument("qdet_column: label difference is not a unit step");
    CMat op = qdet_operator(wt_a, z, p);
    std::vector<cplx> out(p.n);
    for (int hp = 0; hp < p.n; ++hp) out[hp] = op.at(h, hp);
    return out;
}

double centrality_residual(const Weight& m, cplx z, cplx u, const ModularParams& p,
                           bool dressed) {
    const int n = p.n;
    double worst = 0.0;
    const cplx dm = delta_product(m, p);
    const CMat MI = qdet_operator(m, z, p);
    for (int lo = 0; lo < n; ++lo)
        for (int up = 0; up < n; ++up) {
            const CMat L = lop(m, u, lo, up, p);
            const CMat MI2 = qdet_operator(shifted(m, up), z, p);
            CMat lhs = assemble({MI, L});
            CMat rhs = assemble({L, MI2});
            if (dressed) {
                CMat D1(n), D2(n);
                const cplx dup = delta_product(shifted(m, up), p);
                for (int h = 0; h < n; ++h) {
                    D1.at(h, h) = dm / delta_product(shifted(m, h), p);
                    D2.at(h, h) = dup / delta_product(shifted(shifted(m, h), lo), p);
                }
                lhs = assemble({D1, MI, L});
                rhs = assemble({D2, L, MI2});
            }
            const double scale = std::max(max_abs(lhs), max_abs(rhs));
            worst = std::max(worst, max_abs_diff(lhs, rhs) / std::max(scale, 1e-30));
        }
    return worst;
}

int sel_out(int h, int upper, int lower) {
    if (upper == lower) return h;
    if (h == upper) return lower;
    return -1;
}

double conformance_spread(const Weight& m, int h, const ModularParams& p, cplx delta0_shift) {
    const int n = p.n;
    const cplx d0 = p.delta0 + delta0_shift;
    const auto a = avals(m, p);
    const auto b = avals(shifted(m, h), p);
    const cplx zs[] = {cplx(0.11, 0.07), cplx(-0.23, 0.19), cplx(0.31, -0.13)};
    double worst = 0.0;
    for (int lo = 0; lo < n; ++lo)
        for (int up = 0; up < n; ++up) {
            const int hp = sel_out(h, up, lo);
            if (hp < 0) continue;
            cplx vals[3];
            double vmax = 0.0;
            for (int t = 0; t < 3; ++t) {
                const cplx e = lop(m, zs[t], lo, up, p).at(h, hp);
                vals[t] = e / sigma(zs[t] + d0 + b[lo] - a[up], p);
                vmax = std::max(vmax, std::abs(vals[t]));
            }
            if (vmax < 1e-12) continue;
            for (int t = 1; t < 3; ++t)
                worst = std::max(worst, std::abs(vals[t] - vals[0]) / std::abs(vals[0]));
        }
    return worst;
}

}  // namespace eqg
