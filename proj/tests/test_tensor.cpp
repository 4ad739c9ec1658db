// Tensor-power machinery: flat indexing, permutation actions, the
// antisymmetrizer, slot embeddings, and the ordered two-slot products that the
// antisymmetrizer absorbs.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <vector>

#include "eqg/dyn_algebra.hpp"
#include "eqg/face.hpp"
#include "eqg/rng.hpp"
#include "eqg/tensor.hpp"

using namespace eqg;

namespace {

// Composite of "apply p, then q": slot s lands on q[p[s]].
std::vector<int> compose(const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(p.size());
    for (std::size_t s = 0; s < p.size(); ++s) r[s] = q[std::size_t(p[s])];
    return r;
}

std::vector<int> random_perm(int k, Rng& rng) {
    std::vector<int> p(k);
    for (int i = 0; i < k; ++i) p[i] = i;
    for (int i = k - 1; i > 0; --i) std::swap(p[std::size_t(i)], p[std::size_t(rng.uniform_int(0, i))]);
    return p;
}

// Reference embedding oracle evaluated by direct index bookkeeping.
CMat embed_oracle(const FaceR& r, int s1, int s2, int k) {
    const int n = r.n;
    int dim = 1;
    for (int t = 0; t < k; ++t) dim *= n;
    CMat out(dim);
    for (int in = 0; in < dim; ++in) {
        const std::vector<int> vi = unflatten(in, n, k);
        for (int ot = 0; ot < dim; ++ot) {
            const std::vector<int> vo = unflatten(ot, n, k);
            bool spectator_ok = true;
            for (int t = 0; t < k; ++t)
                if (t != s1 && t != s2 && vi[std::size_t(t)] != vo[std::size_t(t)]) spectator_ok = false;
            if (!spectator_ok) continue;
            out.at(in, ot) = r.at(vi[std::size_t(s1)], vi[std::size_t(s2)],
                                  vo[std::size_t(s1)], vo[std::size_t(s2)]);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("flat index round-trip with slot 0 most significant") {
    const int n = 3, k = 3;
    for (int f = 0; f < 27; ++f) {
        const std::vector<int> idx = unflatten(f, n, k);
        CHECK(flatten(idx, n) == f);
    }
    CHECK(flatten({1, 0, 2}, 3) == 1 * 9 + 0 * 3 + 2);
    CHECK(flatten({0, 1}, 2) == 1);
    CHECK(flatten({1, 0}, 2) == 2);
}

TEST_CASE("permutation operators compose first-written-first") {
    Rng rng(11, "test-perm-compose");
    for (int n : {2, 3}) {
        for (int k : {2, 3, 4}) {
            for (int rep = 0; rep < 4; ++rep) {
                const std::vector<int> p = random_perm(k, rng);
                const std::vector<int> q = random_perm(k, rng);
                const CMat lhs = mul(perm_op(p, n, k), perm_op(q, n, k));
                const CMat rhs = perm_op(compose(p, q), n, k);
                CHECK(max_abs_diff(lhs, rhs) == 0.0);
            }
        }
    }
}

TEST_CASE("permutation signs") {
    CHECK(perm_sign({0, 1, 2}) == 1);
    CHECK(perm_sign({1, 0, 2}) == -1);
    CHECK(perm_sign({1, 2, 0}) == 1);
    CHECK(perm_sign({2, 1, 0}) == -1);
    CHECK(perm_sign({1, 0, 3, 2}) == 1);
}

TEST_CASE("two-slot antisymmetrizer entries") {
    const CMat e = antisymmetrizer(2, 2);
    const int i01 = flatten({0, 1}, 2), i10 = flatten({1, 0}, 2);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            cplx want(0.0, 0.0);
            if ((r == i01 || r == i10) && (c == i01 || c == i10))
                want = (r == c) ? cplx(0.5, 0.0) : cplx(-0.5, 0.0);
            CHECK(std::abs(e.at(r, c) - want) == 0.0);
        }
}

TEST_CASE("antisymmetrizer is an idempotent of unit trace") {
    for (int n : {2, 3, 4}) {
        const CMat e = antisymmetrizer(n, n);
        CHECK(max_abs_diff(mul(e, e), e) < 1e-15);
        CHECK(std::abs(trace(e) - cplx(1.0, 0.0)) < 1e-15);
    }
}

TEST_CASE("antisymmetrizer absorbs permutations with their sign") {
    Rng rng(5, "test-perm-absorb");
    for (int n : {2, 3}) {
        const CMat e = antisymmetrizer(n, n);
        for (int rep = 0; rep < 4; ++rep) {
            const std::vector<int> p = random_perm(n, rng);
            const CMat sp = perm_op(p, n, n);
            const CMat se = scale(e, cplx(double(perm_sign(p)), 0.0));
            CHECK(max_abs_diff(mul(sp, e), se) < 1e-15);
            CHECK(max_abs_diff(mul(e, sp), se) < 1e-15);
        }
    }
}

TEST_CASE("two-slot embedding matches the direct index oracle") {
    const ModularParams p = default_params(2);
    const FaceR r = build_r({1, -2}, cplx(0.23, 0.09), p);
    for (auto [s1, s2] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}, {2, 0}}) {
        const CMat got = embed_two_slot(r, s1, s2, 3);
        const CMat want = embed_oracle(r, s1, s2, 3);
        CHECK(max_abs_diff(got, want) == 0.0);
    }
}

TEST_CASE("leading embedding tensors with the identity") {
    const ModularParams p = default_params(2);
    const FaceR r = build_r({1, -2}, cplx(0.11, 0.05), p);
    const CMat two = embed_two_slot(r, 0, 1, 2);
    const CMat lifted = embed_leading(two, 2, 2, 3);
    const CMat direct = embed_two_slot(r, 0, 1, 3);
    CHECK(max_abs_diff(lifted, direct) == 0.0);
}

TEST_CASE("ordered product variants coincide for a single factor") {
    const ModularParams p = default_params(2);
    Rng rng(3, "test-cherednik-rank2");
    for (int rep = 0; rep < 4; ++rep) {
        const Weight m = rng.weight(p);
        const CMat a = cherednik_plain(m, p);
        const CMat s = cherednik_shifted(m, p);
        CHECK(max_abs_diff(a, s) == 0.0);
        const CMat e = antisymmetrizer(2, 2);
        CHECK(max_abs_diff(mul(a, e), a) < 1e-12 * std::max(1.0, max_abs(a)));
    }
}

TEST_CASE("three-slot absorption holds for the walk variant only") {
    const ModularParams p = default_params(3);
    const Weight m{2, 0, 1};
    const CMat e = antisymmetrizer(3, 3);
    const CMat plain = cherednik_plain(m, p);
    const CMat walk = cherednik_shifted(m, p);
    const double scale_p = max_abs(plain), scale_w = max_abs(walk);

    // The walk variant satisfies A P- = A; the fixed-weight product does not.
    CHECK(max_abs_diff(mul(walk, e), walk) < 1e-11 * scale_w);
    CHECK(max_abs_diff(mul(plain, e), plain) > 1e-2 * scale_p);

    // The absorption is one-sided: P- A differs from A.
    CHECK(max_abs_diff(mul(e, walk), walk) > 1e-2 * scale_w);
}

TEST_CASE("walk-variant product has rank one at three slots") {
    const ModularParams p = default_params(3);
    const CMat walk = cherednik_shifted({2, 0, 1}, p);
    const std::vector<double> sv = singular_values(walk.dim, walk.dim, walk.v);
    CHECK(sv[0] == doctest::Approx(21.2236366).epsilon(1e-6));
    CHECK(sv[1] < 1e-9 * sv[0]);

    const CMat plain = cherednik_plain({2, 0, 1}, p);
    const std::vector<double> sp = singular_values(plain.dim, plain.dim, plain.v);
    CHECK(sp[1] > 1e-2 * sp[0]);
}
