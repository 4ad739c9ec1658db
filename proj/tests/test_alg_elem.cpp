// Formal algebra elements: the shift-aware product, addition, and the
// rewriting pass into upper-ordered normal form with its three-term move.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <vector>

#include "eqg/alg_elem.hpp"
#include "eqg/lattice.hpp"
#include "eqg/lattice_fn.hpp"
#include "eqg/rng.hpp"
#include "eqg/theta.hpp"

using namespace eqg;

namespace {

const cplx kZ(0.31, -0.09);

// Coefficient-wise distance of two elements over the union of their words.
double elem_diff(const AlgElem& x, const AlgElem& y, const ModularParams& p,
                 const std::vector<std::pair<Weight, Weight>>& points) {
    std::map<Word, int> words;
    for (const auto& [w, f] : x.terms) words[w] = 1;
    for (const auto& [w, f] : y.terms) words[w] = 1;
    double worst = 0.0;
    for (const auto& [w, unused] : words) {
        auto ix = x.terms.find(w), iy = y.terms.find(w);
        for (const auto& [ma, mb] : points) {
            const cplx vx = (ix == x.terms.end()) ? cplx(0, 0) : fn_eval(ix->second, ma, mb, kZ, p);
            const cplx vy = (iy == y.terms.end()) ? cplx(0, 0) : fn_eval(iy->second, ma, mb, kZ, p);
            worst = std::max(worst, std::abs(vx - vy));
        }
    }
    return worst;
}

AlgElem random_elem(int n, Rng& rng) {
    AlgElem e;
    e.n = n;
    const int nterms = rng.uniform_int(1, 2);
    for (int t = 0; t < nterms; ++t) {
        Word w;
        const int len = rng.uniform_int(0, 2);
        for (int l = 0; l < len; ++l)
            w.push_back({rng.uniform_int(0, n - 1), rng.uniform_int(0, n - 1)});
        AffineForm af(n);
        af.rw = Rat(1);
        af.ca[std::size_t(rng.uniform_int(0, n - 1))] = Rat(1);
        af.cb[std::size_t(rng.uniform_int(0, n - 1))] = Rat(rng.uniform_int(-1, 1));
        add_term(e, w, fn_add(fn_sigma(af), fn_const(rng.complex_point())));
    }
    return e;
}

std::vector<std::pair<Weight, Weight>> sample_points(const ModularParams& p, Rng& rng, int k) {
    std::vector<std::pair<Weight, Weight>> pts;
    for (int i = 0; i < k; ++i) pts.push_back({rng.weight(p), rng.weight(p)});
    return pts;
}

bool word_sorted(const Word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) return false;
    return true;
}

}  // namespace

TEST_CASE("word shift counts upper and lower indices") {
    const Word w = {{0, 1}, {1, 1}};
    const auto [dup, dlo] = word_shift(w, 2);
    CHECK(dup == std::vector<int>{1, 1});
    CHECK(dlo == std::vector<int>{0, 2});
}

TEST_CASE("product conjugates the second coefficient past the first word") {
    const ModularParams p = default_params(2);
    const AlgElem x = elem_gen(2, 0, 1);
    const AlgElem y = elem_const(2, fn_sigma(af_b_diff(2, 0, 1)));

    const AlgElem xy = mul(x, y);
    REQUIRE(xy.terms.size() == 1);
    const Word want_word = {{0, 1}};
    REQUIRE(xy.terms.count(want_word) == 1);

    const Weight ma{1, -2}, mb{0, 2};
    // Passing the letter A^0_1 shifts the b-symbols by e_1.
    const std::vector<cplx> bs = avals(shifted(mb, 1), p);
    const cplx want = sigma(bs[0] - bs[1], p);
    CHECK(std::abs(fn_eval(xy.terms.at(want_word), ma, mb, kZ, p) - want) <
          1e-13 * std::max(1.0, std::abs(want)));

    // In the opposite order the coefficient is evaluated at the base point.
    const AlgElem yx = mul(y, x);
    const std::vector<cplx> b0 = avals(mb, p);
    const cplx want0 = sigma(b0[0] - b0[1], p);
    CHECK(std::abs(fn_eval(yx.terms.at(want_word), ma, mb, kZ, p) - want0) <
          1e-13 * std::max(1.0, std::abs(want0)));
}

TEST_CASE("constant one is a two-sided unit") {
    const ModularParams p = default_params(2);
    Rng rng(61, "test-elem-unit");
    const auto pts = sample_points(p, rng, 3);
    const AlgElem one = elem_const(2, fn_const(cplx(1.0, 0.0)));
    for (int rep = 0; rep < 4; ++rep) {
        const AlgElem e = random_elem(2, rng);
        CHECK(elem_diff(mul(e, one), e, p, pts) < 1e-12);
        CHECK(elem_diff(mul(one, e), e, p, pts) < 1e-12);
    }
}

TEST_CASE("product is associative") {
    for (int n : {2, 3}) {
        const ModularParams p = default_params(n);
        Rng rng(63, "test-elem-assoc-" + std::to_string(n));
        const auto pts = sample_points(p, rng, 3);
        for (int rep = 0; rep < 6; ++rep) {
            const AlgElem x = random_elem(n, rng);
            const AlgElem y = random_elem(n, rng);
            const AlgElem z = random_elem(n, rng);
            CHECK(elem_diff(mul(mul(x, y), z), mul(x, mul(y, z)), p, pts) < 1e-10);
        }
    }
}

TEST_CASE("addition merges equal words") {
    const ModularParams p = default_params(2);
    const AlgElem g = elem_gen(2, 0, 1);
    const AlgElem s = add(g, g);
    REQUIRE(s.terms.size() == 1);
    const Weight ma{1, -2}, mb{0, 2};
    CHECK(std::abs(fn_eval(s.terms.begin()->second, ma, mb, kZ, p) - cplx(2.0, 0.0)) < 1e-14);
}

TEST_CASE("ordered words are left alone") {
    const ModularParams p = default_params(2);
    AlgElem e;
    e.n = 2;
    add_term(e, {{0, 1}, {1, 0}}, fn_const(cplx(1.0, 0.0)));
    const NormalFormResult nf = normal_form(e, p);
    CHECK(nf.steps == 0);
    CHECK(nf.conclusive);
    CHECK(nf.elem.terms.size() == 1);
    CHECK(nf.elem.terms.count({{0, 1}, {1, 0}}) == 1);
}

TEST_CASE("equal-lower neighbours commute outright") {
    const ModularParams p = default_params(2);
    AlgElem e;
    e.n = 2;
    add_term(e, {{1, 0}, {0, 0}}, fn_const(cplx(1.0, 0.0)));
    const NormalFormResult nf = normal_form(e, p);
    CHECK(nf.conclusive);
    CHECK(nf.steps == 1);
    REQUIRE(nf.elem.terms.size() == 1);
    const Word want = {{0, 0}, {1, 0}};
    REQUIRE(nf.elem.terms.count(want) == 1);
    const Weight ma{1, -2}, mb{0, 2};
    CHECK(std::abs(fn_eval(nf.elem.terms.at(want), ma, mb, kZ, p) - cplx(1.0, 0.0)) < 1e-14);
}

TEST_CASE("descending distinct pair rewrites into the two-term combination") {
    const ModularParams p = default_params(2);
    AlgElem e;
    e.n = 2;
    add_term(e, {{1, 1}, {0, 0}}, fn_const(cplx(1.0, 0.0)));
    const NormalFormResult nf = normal_form(e, p);
    CHECK(nf.conclusive);
    REQUIRE(nf.elem.terms.size() == 2);
    const Word w1 = {{0, 0}, {1, 1}};
    const Word w2 = {{0, 1}, {1, 0}};
    REQUIRE(nf.elem.terms.count(w1) == 1);
    REQUIRE(nf.elem.terms.count(w2) == 1);

    Rng rng(67, "test-three-term");
    for (int rep = 0; rep < 4; ++rep) {
        const Weight ma = rng.weight(p), mb = rng.weight(p);
        const std::vector<cplx> a = avals(ma, p), b = avals(mb, p);
        const cplx aa = a[0] - a[1], bb = b[0] - b[1];
        const cplx den = sigma(aa + p.w, p) * sigma(bb, p);
        const cplx c1 = sigma(aa, p) * sigma(bb - p.w, p) / den;
        const cplx c2 = sigma(p.w, p) * sigma(aa + bb, p) / den;
        CHECK(std::abs(fn_eval(nf.elem.terms.at(w1), ma, mb, kZ, p) - c1) <
              1e-12 * std::max(1.0, std::abs(c1)));
        CHECK(std::abs(fn_eval(nf.elem.terms.at(w2), ma, mb, kZ, p) - c2) <
              1e-12 * std::max(1.0, std::abs(c2)));
    }
}

TEST_CASE("normal form is idempotent") {
    for (int n : {2, 3}) {
        const ModularParams p = default_params(n);
        Rng rng(69, "test-nf-idem-" + std::to_string(n));
        const auto pts = sample_points(p, rng, 2);
        for (int rep = 0; rep < 5; ++rep) {
            const AlgElem e = random_elem(n, rng);
            const NormalFormResult nf1 = normal_form(e, p);
            if (!nf1.conclusive) continue;
            const NormalFormResult nf2 = normal_form(nf1.elem, p);
            CHECK(nf2.steps == 0);
            CHECK(elem_diff(nf1.elem, nf2.elem, p, pts) < 1e-12);
        }
    }
}

TEST_CASE("long descending words terminate fully ordered") {
    const ModularParams p = default_params(3);
    AlgElem e;
    e.n = 3;
    add_term(e, {{2, 1}, {1, 2}, {1, 0}, {0, 2}}, fn_const(cplx(1.0, 0.0)));
    const NormalFormResult nf = normal_form(e, p);
    CHECK(nf.conclusive);
    CHECK(nf.steps > 0);
    for (const auto& [w, f] : nf.elem.terms) CHECK(word_sorted(w));
}

TEST_CASE("literal reading parks pairs with a diagonal letter") {
    const ModularParams p = default_params(2);
    AlgElem e;
    e.n = 2;
    add_term(e, {{1, 1}, {0, 0}}, fn_const(cplx(1.0, 0.0)));
    const NormalFormResult nf = normal_form(e, p, Reading::Literal);
    CHECK(!nf.conclusive);
    REQUIRE(nf.stuck.size() == 1);
    CHECK(nf.stuck[0] == Word{{1, 1}, {0, 0}});
    // The parked word is carried through unchanged.
    CHECK(nf.elem.terms.count({{1, 1}, {0, 0}}) == 1);

    // A descending pair of two non-diagonal letters still rewrites.
    AlgElem g;
    g.n = 2;
    add_term(g, {{1, 0}, {0, 1}}, fn_const(cplx(1.0, 0.0)));
    const NormalFormResult nfg = normal_form(g, p, Reading::Literal);
    CHECK(nfg.conclusive);
    CHECK(nfg.steps > 0);
}
