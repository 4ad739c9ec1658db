#include "eqg/dyn_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "eqg/theta.hpp"

namespace eqg {

namespace {
// Fixed spectral probe for bracket values; the extracted ratio is certified
// z-independent separately, so any generic point serves.
const cplx ZPROBE(0.37, 0.21);
}  // namespace

// ---------------------------------------------------------------- coefficients

nlohmann::ordered_json coeff_to_json(const CoeffData& d) {
    nlohmann::ordered_json j;
    j["n"] = d.n;
    j["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : d.entries) {
        nlohmann::ordered_json je;
        je["upper"] = e.upper;
        je["lower"] = e.lower;
        je["lattice_point"] = {{"ma", e.ma}, {"mb", e.mb}};
        je["value"] = {e.value.real(), e.value.imag()};
        j["entries"].push_back(std::move(je));
    }
    return j;
}

CoeffData coeff_from_json(const nlohmann::ordered_json& j) {
    CoeffData d;
    d.n = j.at("n").get<int>();
    for (const auto& je : j.at("entries")) {
        CoeffEntry e;
        e.upper = je.at("upper").get<int>();
        e.lower = je.at("lower").get<int>();
        e.ma = je.at("lattice_point").at("ma").get<Weight>();
        e.mb = je.at("lattice_point").at("mb").get<Weight>();
        auto v = je.at("value");
        e.value = cplx(v.at(0).get<double>(), v.at(1).get<double>());
        d.entries.push_back(std::move(e));
    }
    return d;
}

LSource fundamental_source(const ModularParams& p) {
    return [p](const Weight& m, cplx z, int lower, int upper) {
        return lop(m, z, lower, upper, p);
    };
}

ExtractionResult extract_coefficients(const LSource& src,
                                      const std::vector<std::pair<Weight, int>>& points,
                                      const ModularParams& p, cplx delta0_shift) {
    const int n = p.n;
    const cplx d0 = p.delta0 + delta0_shift;
    const cplx zs[] = {cplx(0.11, 0.07), cplx(-0.23, 0.19), cplx(0.31, -0.13)};
    ExtractionResult out;
    out.data.n = n;
    for (const auto& [m, h] : points) {
        const auto a = avals(m, p);
        const Weight mbw = shifted(m, h);
        const auto b = avals(mbw, p);
        for (int up = 0; up < n; ++up)
            for (int lo = 0; lo < n; ++lo) {
                const int hp = sel_out(h, up, lo);
                if (hp < 0) continue;
                cplx vals[3];
                double vmax = 0.0;
                for (int t = 0; t < 3; ++t) {
                    const cplx entry = src(m, zs[t], lo, up).at(h, hp);
                    vals[t] = entry / sigma(zs[t] + d0 + b[lo] - a[up], p);
                    vmax = std::max(vmax, std::abs(vals[t]));
                }
                if (vmax > 1e-14)
                    for (int t = 1; t < 3; ++t)
                        out.max_spread =
                            std::max(out.max_spread, std::abs(vals[t] - vals[0]) / vmax);
                CoeffEntry e;
                e.upper = up;
                e.lower = lo;
                e.ma = m;
                e.mb = mbw;
                e.value = vals[0];
                out.data.entries.push_back(std::move(e));
            }
    }
    return out;
}

cplx dress_factor(const Weight& ma, int upper, const ModularParams& p) {
    const auto a = avals(ma, p);
    cplx v(1, 0);
    for (int t = 0; t < p.n; ++t)
        if (t != upper) v *= sigma(a[t] - a[upper], p);
    return v;
}

BracketEval bracket_from_rep(const ModularParams& p) {
    return [p](const Weight& ma, const Weight& mb, int upper, int lower) -> cplx {
        const int h = realizable_shift(ma, mb);
        if (h < 0) return cplx(0, 0);
        const int hp = sel_out(h, upper, lower);
        if (hp < 0) return cplx(0, 0);
        const auto a = avals(ma, p);
        const auto b = avals(mb, p);
        const cplx entry = lop(ma, ZPROBE, lower, upper, p).at(h, hp);
        const cplx und = entry / sigma(ZPROBE + p.delta0 + b[lower] - a[upper], p);
        return und * dress_factor(ma, upper, p);
    };
}

BracketEval bracket_from_data(const CoeffData& data, const ModularParams& p) {
    auto table = std::make_shared<std::map<std::tuple<int, int, Weight, Weight>, cplx>>();
    for (const auto& e : data.entries)
        (*table)[{e.upper, e.lower, e.ma, e.mb}] = e.value;
    return [table, p](const Weight& ma, const Weight& mb, int upper, int lower) -> cplx {
        auto it = table->find({upper, lower, ma, mb});
        if (it == table->end()) return cplx(0, 0);
        return it->second * dress_factor(ma, upper, p);
    };
}

// ------------------------------------------------------------ relation checks

YRelReport check_y_relations(const BracketEval& br, const ModularParams& p, Rng& rng,
                             int samples) {
    const int n = p.n;
    YRelReport rep;
    auto resid3 = [](cplx t1, cplx t2, cplx t3) {
        const double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3), 1.0});
        return std::abs(t1 - t2 - t3) / scale;
    };
    for (int s = 0; s < samples; ++s) {
        const Weight ma = rng.weight(p);
        const int h = rng.uniform_int(0, n - 1);
        const Weight mb = shifted(ma, h);
        const auto a = avals(ma, p);
        const auto b = avals(mb, p);

        // uppers commute at equal lower index
        for (int ip = 0; ip < n; ++ip)
            for (int jp = 0; jp < n; ++jp) {
                if (ip == jp) continue;
                for (int i = 0; i < n; ++i) {
                    const cplx lhs =
                        br(ma, mb, ip, i) * br(shifted(ma, ip), shifted(mb, i), jp, i);
                    const cplx rhs =
                        br(ma, mb, jp, i) * br(shifted(ma, jp), shifted(mb, i), ip, i);
                    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
                    rep.same_lower = std::max(rep.same_lower, std::abs(lhs - rhs) / scale);
                }
            }
        // lowers commute at equal upper index
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                for (int ip = 0; ip < n; ++ip) {
                    const cplx lhs =
                        br(ma, mb, ip, i) * br(shifted(ma, ip), shifted(mb, i), ip, j);
                    const cplx rhs =
                        br(ma, mb, ip, j) * br(shifted(ma, ip), shifted(mb, j), ip, i);
                    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
                    rep.same_upper = std::max(rep.same_upper, std::abs(lhs - rhs) / scale);
                }
            }
        // sigma-weighted three-term relation
        for (int ip = 0; ip < n; ++ip)
            for (int jp = 0; jp < n; ++jp) {
                if (ip == jp) continue;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        if (i == j) continue;
                        const cplx aa = a[ip] - a[jp];
                        const cplx bb = b[i] - b[j];
                        const cplx Yji =
                            br(ma, mb, ip, j) * br(shifted(ma, ip), shifted(mb, j), jp, i);
                        const cplx Yij =
                            br(ma, mb, ip, i) * br(shifted(ma, ip), shifted(mb, i), jp, j);
                        const cplx Yji2 =
                            br(ma, mb, jp, j) * br(shifted(ma, jp), shifted(mb, j), ip, i);
                        const cplx t1 = sigma(aa + p.w, p) * sigma(bb, p) * Yji2;
                        const cplx t2 = sigma(aa, p) * sigma(bb - p.w, p) * Yij;
                        const cplx t3 = sigma(p.w, p) * sigma(aa + bb, p) * Yji;
                        rep.three_term = std::max(rep.three_term, resid3(t1, t2, t3));
                    }
            }
    }
    return rep;
}

// ---------------------------------------------------------- operator realization

RepState apply_elem(const AlgElem& e, const RepState& psi, const ModularParams& p, cplx z) {
    RepState out;
    for (const auto& [w, f] : e.terms) {
        for (const auto& [key, amp] : psi) {
            const auto& [h0, m0] = key;
            const Weight mb0 = shifted(m0, h0);
            RepState cur;
            cur[{h0, m0}] = amp * fn_eval(f, m0, mb0, z, p);
            for (const auto& [u, l] : w) {
                RepState nxt;
                for (const auto& [k2, v2] : cur) {
                    const auto& [h, m] = k2;
                    const int hp = sel_out(h, u, l);
                    if (hp < 0) continue;
                    const auto a = avals(m, p);
                    const auto b = avals(shifted(m, h), p);
                    const cplx entry = lop(m, ZPROBE, l, u, p).at(h, hp);
                    const cplx und = entry / sigma(ZPROBE + p.delta0 + b[l] - a[u], p);
                    const cplx val = und * dress_factor(m, u, p);
                    nxt[{hp, shifted(m, u)}] += v2 * val;
                }
                cur = std::move(nxt);
                if (cur.empty()) break;
            }
            for (const auto& [k2, v2] : cur) out[k2] += v2;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = (std::abs(it->second) == 0.0) ? out.erase(it) : std::next(it);
    return out;
}

double rep_state_diff(const RepState& x, const RepState& y, double scale_floor) {
    double scale = scale_floor;
    for (const auto& [k, v] : x) scale = std::max(scale, std::abs(v));
    for (const auto& [k, v] : y) scale = std::max(scale, std::abs(v));
    double worst = 0.0;
    auto lookup = [](const RepState& s, const RepKey& k) {
        auto it = s.find(k);
        return it == s.end() ? cplx(0, 0) : it->second;
    };
    for (const auto& [k, v] : x) worst = std::max(worst, std::abs(v - lookup(y, k)));
    for (const auto& [k, v] : y) worst = std::max(worst, std::abs(v - lookup(x, k)));
    return worst / scale;
}

MoveSoundness check_move_soundness(const ModularParams& p, Rng& rng, int states_per_instance) {
    const int n = p.n;
    MoveSoundness out;

    auto rand_state = [&]() {
        Weight m(n);
        for (int i = 0; i < n; ++i) m[i] = rng.uniform_int(-2, 2);
        RepState psi;
        for (int h = 0; h < n; ++h)
            psi[{h, m}] = cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
        return psi;
    };
    auto run = [&](const AlgElem& L, const AlgElem& R, double& worst) {
        for (int t = 0; t < states_per_instance; ++t) {
            RepState psi = rand_state();
            double in_scale = 0.0;
            for (const auto& [k, v] : psi) in_scale = std::max(in_scale, std::abs(v));
            const RepState lv = apply_elem(L, psi, p);
            const RepState rv = apply_elem(R, psi, p);
            worst = std::max(worst, rep_state_diff(lv, rv, 1e-4 * in_scale));
        }
    };

    // commuting moves
    for (int ip = 0; ip < n; ++ip)
        for (int jp = 0; jp < n; ++jp) {
            if (ip == jp) continue;
            for (int i = 0; i < n; ++i)
                run(mul(elem_gen(n, ip, i), elem_gen(n, jp, i)),
                    mul(elem_gen(n, jp, i), elem_gen(n, ip, i)), out.commute_same_lower);
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (int ip = 0; ip < n; ++ip)
                run(mul(elem_gen(n, ip, i), elem_gen(n, ip, j)),
                    mul(elem_gen(n, ip, j), elem_gen(n, ip, i)), out.commute_same_upper);
        }

    // three-term move: sigma(a+w) sigma(b) A^{jp}_j A^{ip}_i
    //                = sigma(a) sigma(b-w) A^{ip}_i A^{jp}_j
    //                + sigma(w) sigma(a+b) A^{ip}_j A^{jp}_i
    for (int ip = 0; ip < n; ++ip)
        for (int jp = 0; jp < n; ++jp) {
            if (ip == jp) continue;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (i == j) continue;
                    const AffineForm aa = af_a_diff(n, ip, jp);
                    const AffineForm bb = af_b_diff(n, i, j);
                    AffineForm ab = aa;
                    for (int t = 0; t < n; ++t) {
                        ab.ca[t] = ab.ca[t] + bb.ca[t];
                        ab.cb[t] = ab.cb[t] + bb.cb[t];
                    }
                    AffineForm wf(n);
                    wf.rw = Rat(1);
                    AlgElem L = elem_const(n, fn_mul(fn_sigma(af_plus_w(aa, 1)), fn_sigma(bb)));
                    L = mul(L, mul(elem_gen(n, jp, j), elem_gen(n, ip, i)));
                    AlgElem R1 =
                        elem_const(n, fn_mul(fn_sigma(aa), fn_sigma(af_plus_w(bb, -1))));
                    R1 = mul(R1, mul(elem_gen(n, ip, i), elem_gen(n, jp, j)));
                    AlgElem R2 = elem_const(n, fn_mul(fn_sigma(wf), fn_sigma(ab)));
                    R2 = mul(R2, mul(elem_gen(n, ip, j), elem_gen(n, jp, i)));
                    double r = 0.0;
                    run(L, add(R1, R2), r);
                    out.three_term_all = std::max(out.three_term_all, r);
                    if (ip != i && jp != j)
                        out.three_term_literal = std::max(out.three_term_literal, r);
                }
        }
    return out;
}

// ------------------------------------------------------------------ the center

namespace {

Fn phi_fn(int n, const std::vector<int>& mu, const ModularParams& /*p*/) {
    Fn out = fn_const(cplx(1, 0));
    for (int k = 0; k < n; ++k) {
        AffineForm af(n);
        af.rz = Rat(1);
        af.rw = Rat(k);
        af.rd0 = Rat(1);
        af.cb[mu[k]] = af.cb[mu[k]] + Rat(1);
        af.ca[k] = af.ca[k] - Rat(1);
        out = fn_mul(out, fn_sigma(af));
    }
    return out;
}

// Dressing accumulated by the ascending word A^0 A^1 ... A^{n-1}: the k-th
// letter contributes prod_{t != k} sigma(a_t - a_k) at the point already
// shifted by e_0 + ... + e_{k-1}.
Fn accumulated_dressing(int n) {
    Fn out = fn_const(cplx(1, 0));
    std::vector<int> cum(n, 0), zero(n, 0);
    for (int k = 0; k < n; ++k) {
        for (int t = 0; t < n; ++t) {
            if (t == k) continue;
            out = fn_mul(out, fn_sigma(af_a_diff(n, t, k).shifted_symbols(cum, zero)));
        }
        cum[k] += 1;
    }
    return out;
}

AlgElem center_core(const ModularParams& p, bool delta_ratio, bool rescale) {
    const int n = p.n;
    double nfact = 1.0;
    for (int i = 2; i <= n; ++i) nfact *= double(i);
    AlgElem out;
    out.n = n;
    std::vector<int> mu(n);
    std::iota(mu.begin(), mu.end(), 0);
    const Fn da = fn_delta_a(n);
    const Fn db = fn_delta_b(n);
    const Fn dacc = accumulated_dressing(n);
    do {
        Fn coef = fn_mul(fn_const(cplx(double(perm_sign(mu)) / nfact, 0)), phi_fn(n, mu, p));
        if (delta_ratio) coef = fn_div(fn_mul(coef, da), db);
        if (rescale) coef = fn_div(coef, dacc);
        Word w;
        for (int k = 0; k < n; ++k) w.push_back({k, mu[k]});
        add_term(out, w, coef);
    } while (std::next_permutation(mu.begin(), mu.end()));
    return out;
}

}  // namespace

AlgElem center_element(const ModularParams& p, bool rescale_brackets) {
    return center_core(p, true, rescale_brackets);
}

AlgElem center_element_undressed(const ModularParams& p) {
    return center_core(p, false, true);
}

CenterCommuteReport check_center_commutes(const AlgElem& C, cplx z, const ModularParams& p,
                                          const std::vector<std::pair<Weight, Weight>>& points,
                                          Reading reading) {
    const int n = p.n;
    CenterCommuteReport rep;
    const Fn minus_one = fn_const(cplx(-1, 0));
    for (int jp = 0; jp < n; ++jp)
        for (int j = 0; j < n; ++j) {
            rep.generator_count += 1;
            const AlgElem G = elem_gen(n, jp, j);
            AlgElem GCneg = mul(G, C);
            for (auto& [w, f] : GCneg.terms) f = fn_mul(f, minus_one);
            const AlgElem D = add(mul(C, G), GCneg);
            NormalFormResult nf = normal_form(D, p, reading);
            rep.conclusive = rep.conclusive && nf.conclusive;
            for (const auto& [ma, mb] : points) {
                double cscale = 0.0;
                for (const auto& [w, f] : C.terms)
                    cscale = std::max(cscale, std::abs(fn_eval(f, ma, mb, z, p)));
                cscale = std::max(cscale, 1e-30);
                for (const auto& [w, f] : nf.elem.terms) {
                    const double v = std::abs(fn_eval(f, ma, mb, z, p));
                    rep.max_residual = std::max(rep.max_residual, v / cscale);
                }
            }
        }
    return rep;
}

std::vector<double> singular_values(int rows, int cols, std::vector<cplx> A) {
    // one-sided Jacobi on the columns of A (row-major, rows x cols)
    auto col_dot = [&](int i, int j) {  // <col_i, col_j> with conjugation on i
        cplx s(0, 0);
        for (int r = 0; r < rows; ++r) s += std::conj(A[r * cols + i]) * A[r * cols + j];
        return s;
    };
    for (int sweep = 0; sweep < 60; ++sweep) {
        bool rotated = false;
        for (int i = 0; i < cols; ++i)
            for (int j = i + 1; j < cols; ++j) {
                const double gii = col_dot(i, i).real();
                const double gjj = col_dot(j, j).real();
                const cplx gij = col_dot(i, j);
                const double off = std::abs(gij);
                if (off <= 1e-30 || off * off <= 1e-30 * gii * gjj) continue;
                rotated = true;
                const cplx phase = gij / off;
                const double tau = (gjj - gii) / (2.0 * off);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (int r = 0; r < rows; ++r) {
                    const cplx vi = A[r * cols + i];
                    const cplx vj = A[r * cols + j] / phase;
                    A[r * cols + i] = c * vi - s * vj;
                    A[r * cols + j] = (s * vi + c * vj) * phase;
                }
            }
        if (!rotated) break;
    }
    std::vector<double> sv(cols);
    for (int j = 0; j < cols; ++j) {
        double nrm = 0.0;
        for (int r = 0; r < rows; ++r) nrm += std::norm(A[r * cols + j]);
        sv[j] = std::sqrt(nrm);
    }
    std::sort(sv.begin(), sv.end(), std::greater<double>());
    return sv;
}

CenterRankResult center_rank(const std::vector<cplx>& zs, const ModularParams& p,
                             const Weight& ma, const Weight& mb) {
    const int n = p.n;
    for (std::size_t i = 0; i < zs.size(); ++i)
        for (std::size_t j = i + 1; j < zs.size(); ++j)
            if (std::abs(zs[i] - zs[j]) < 1e-12)
                throw std::invalid_argument("center_rank: duplicate spectral samples");
    if (!is_generic(ma, p) || !is_generic(mb, p))
        throw std::invalid_argument("center_rank: non-generic lattice point");

    double nfact = 1.0;
    for (int i = 2; i <= n; ++i) nfact *= double(i);
    const int cols = int(nfact + 0.5);
    const int rows = int(zs.size());

    std::vector<Fn> phis;
    std::vector<int> mu(n);
    std::iota(mu.begin(), mu.end(), 0);
    do {
        phis.push_back(phi_fn(n, mu, p));
    } while (std::next_permutation(mu.begin(), mu.end()));

    std::vector<cplx> A(std::size_t(rows) * cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) A[r * cols + c] = fn_eval(phis[c], ma, mb, zs[r], p);

    CenterRankResult out;
    out.svals = singular_values(rows, cols, std::move(A));
    const double cutoff = 1e-8 * (out.svals.empty() ? 0.0 : out.svals.front());
    for (double s : out.svals)
        if (s > cutoff) out.rank += 1;
    return out;
}

}  // namespace eqg
