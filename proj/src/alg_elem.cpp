#include "eqg/alg_elem.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqg {

AlgElem elem_gen(int n, int upper, int lower) {
    return elem_gen(n, upper, lower, fn_const(cplx(1, 0)));
}

AlgElem elem_gen(int n, int upper, int lower, Fn coef) {
    AlgElem e;
    e.n = n;
    e.terms[{{upper, lower}}] = std::move(coef);
    return e;
}

AlgElem elem_const(int n, Fn coef) {
    AlgElem e;
    e.n = n;
    e.terms[{}] = std::move(coef);
    return e;
}

std::pair<std::vector<int>, std::vector<int>> word_shift(const Word& w, int n) {
    std::vector<int> dup(n, 0), dlo(n, 0);
    for (const auto& [u, l] : w) {
        dup[u] += 1;
        dlo[l] += 1;
    }
    return {dup, dlo};
}

void add_term(AlgElem& e, const Word& w, Fn coef) {
    auto it = e.terms.find(w);
    if (it == e.terms.end())
        e.terms.emplace(w, std::move(coef));
    else
        it->second = fn_add(it->second, std::move(coef));
}

AlgElem mul(const AlgElem& x, const AlgElem& y) {
    if (x.n != y.n) throw std::invalid_argument("mul: rank mismatch");
    AlgElem out;
    out.n = x.n;
    for (const auto& [w1, f1] : x.terms) {
        const auto [dup, dlo] = word_shift(w1, x.n);
        for (const auto& [w2, f2] : y.terms) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            add_term(out, w, fn_mul(f1, fn_shift(f2, dup, dlo)));
        }
    }
    return out;
}

AlgElem add(const AlgElem& x, const AlgElem& y) {
    if (x.n != y.n) throw std::invalid_argument("add: rank mismatch");
    AlgElem out = x;
    for (const auto& [w, f] : y.terms) add_term(out, w, f);
    return out;
}

NormalFormResult normal_form(const AlgElem& e, const ModularParams&, Reading reading) {
    const int n = e.n;
    NormalFormResult res;
    res.elem.n = n;

    // words with a non-rewritable descending pair are parked here untouched
    std::map<Word, Fn> work = e.terms;
    std::map<Word, Fn> parked;

    auto park = [&](const Word& w, Fn f) {
        auto it = parked.find(w);
        if (it == parked.end())
            parked.emplace(w, std::move(f));
        else
            it->second = fn_add(it->second, std::move(f));
    };
    auto insert = [&](std::map<Word, Fn>& d, const Word& w, Fn f) {
        auto it = d.find(w);
        if (it == d.end())
            d.emplace(w, std::move(f));
        else
            it->second = fn_add(it->second, std::move(f));
    };

    int guard = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        if (++guard > 200000) throw std::runtime_error("normal_form: rewrite did not terminate");
        for (auto it = work.begin(); it != work.end(); ++it) {
            const Word w = it->first;
            const Fn f = it->second;
            bool acted = false;
            for (std::size_t k = 0; k + 1 < w.size(); ++k) {
                const auto [u1, l1] = w[k];
                const auto [u2, l2] = w[k + 1];
                if (std::make_pair(u1, l1) <= std::make_pair(u2, l2)) continue;

                if (u1 == u2 || l1 == l2) {
                    // equal-label neighbours commute with unchanged coefficient
                    Word wn = w;
                    std::swap(wn[k], wn[k + 1]);
                    work.erase(it);
                    insert(work, wn, f);
                    res.steps += 1;
                    acted = true;
                    break;
                }

                const bool literal_ok = (u1 != l1) && (u2 != l2);
                if (reading == Reading::Literal && !literal_ok) {
                    // not covered by the move under this reading: park the word
                    work.erase(it);
                    park(w, f);
                    res.conclusive = false;
                    res.stuck.push_back(w);
                    acted = true;
                    break;
                }

                Word pre(w.begin(), w.begin() + k);
                Word post(w.begin() + k + 2, w.end());
                const auto [dup, dlo] = word_shift(pre, n);

                // three-term move on the descending pair, sigma arguments at the
                // pair's own (prefix-shifted) lattice point
                AffineForm aa = af_a_diff(n, u2, u1).shifted_symbols(dup, dlo);
                AffineForm bb = af_b_diff(n, l2, l1).shifted_symbols(dup, dlo);
                Fn den = fn_mul(fn_sigma(af_plus_w(aa, 1)), fn_sigma(bb));
                Fn c1 = fn_div(fn_mul(fn_sigma(aa), fn_sigma(af_plus_w(bb, -1))), den);
                AffineForm ab = aa;
                ab.c0 += bb.c0;
                ab.rz = ab.rz + bb.rz;
                ab.rw = ab.rw + bb.rw;
                ab.rd0 = ab.rd0 + bb.rd0;
                for (int i = 0; i < n; ++i) {
                    ab.ca[i] = ab.ca[i] + bb.ca[i];
                    ab.cb[i] = ab.cb[i] + bb.cb[i];
                }
                AffineForm w_only(n);
                w_only.rw = Rat(1);
                Fn c2 = fn_div(fn_mul(fn_sigma(w_only), fn_sigma(ab)), den);

                Word w1 = pre;
                w1.push_back({u2, l2});
                w1.push_back({u1, l1});
                w1.insert(w1.end(), post.begin(), post.end());
                Word w2 = pre;
                w2.push_back({u2, l1});
                w2.push_back({u1, l2});
                w2.insert(w2.end(), post.begin(), post.end());

                work.erase(it);
                insert(work, w1, fn_mul(f, c1));
                insert(work, w2, fn_mul(f, c2));
                res.steps += 1;
                acted = true;
                break;
            }
            if (acted) {
                changed = true;
                break;
            }
        }
    }

    res.elem.terms = std::move(work);
    for (auto& [w, f] : parked) add_term(res.elem, w, f);
    return res;
}

}  // namespace eqg
