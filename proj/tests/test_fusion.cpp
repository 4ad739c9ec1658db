// Fused column operators: direct contraction oracle, the one-sided
// antisymmetrizer absorption, the corner block and its scalar invariants, and
// the determinant identity for the level-n theta family.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "eqg/face.hpp"
#include "eqg/fusion.hpp"
#include "eqg/rng.hpp"
#include "eqg/tensor.hpp"

using namespace eqg;

namespace {

void check_close(cplx got, cplx want, double tol) {
    const double scale = std::max(1.0, std::abs(want));
    CHECK(std::abs(got - want) < tol * scale);
}

// Independent two-factor contraction for n = 2: factor k couples column slot k
// to the auxiliary slot at z + k*w, with the weight advanced by the outgoing
// column indices of the earlier factors.  The auxiliary index threads through.
CMat fused_oracle2(const Weight& m, cplx z, const ModularParams& p) {
    CMat out(8);
    const FaceR r0 = build_r(m, z, p);
    for (int i0 = 0; i0 < 2; ++i0)
        for (int i1 = 0; i1 < 2; ++i1)
            for (int j = 0; j < 2; ++j)
                for (int o0 = 0; o0 < 2; ++o0) {
                    const FaceR r1 = build_r(shifted(m, o0), z + p.w, p);
                    for (int o1 = 0; o1 < 2; ++o1)
                        for (int jp = 0; jp < 2; ++jp) {
                            cplx s(0.0, 0.0);
                            for (int t = 0; t < 2; ++t)
                                s += r0.at(i0, j, o0, t) * r1.at(i1, t, o1, jp);
                            out.at(flatten({i0, i1, j}, 2), flatten({o0, o1, jp}, 2)) = s;
                        }
                }
    return out;
}

cplx rho(const Weight& m, cplx z, const ModularParams& p, int j) {
    return qdet_scalar(m, z, p, j, j) * delta_product(m, p) /
           delta_product(shifted(m, j), p);
}

}  // namespace

TEST_CASE("two-slot fused column matches the direct contraction oracle") {
    const ModularParams p = default_params(2);
    Rng rng(31, "test-fused-oracle");
    for (int rep = 0; rep < 5; ++rep) {
        const Weight m = rng.weight(p);
        const cplx z = rng.complex_point();
        const CMat got = fused_column(m, z, p);
        const CMat want = fused_oracle2(m, z, p);
        CHECK(max_abs_diff(got, want) < 1e-13 * std::max(1.0, max_abs(want)));
    }
}

TEST_CASE("column antisymmetrizer is the leading-slot embedding") {
    for (int n : {2, 3}) {
        const CMat got = column_antisymmetrizer(n);
        const CMat want = embed_leading(antisymmetrizer(n, n), n, n, n + 1);
        CHECK(max_abs_diff(got, want) == 0.0);
    }
}

TEST_CASE("antisymmetrized column absorbs the trailing projector") {
    for (int n : {2, 3}) {
        const ModularParams p = default_params(n);
        Rng rng(17, "test-fused-absorb-" + std::to_string(n));
        const CMat e = column_antisymmetrizer(n);
        const int reps = (n == 2) ? 6 : 3;
        for (int rep = 0; rep < reps; ++rep) {
            const Weight m = rng.weight(p);
            const cplx z = rng.complex_point();
            const CMat ex = mul(e, fused_column(m, z, p));
            const double scale = std::max(1.0, max_abs(ex));
            CHECK(max_abs_diff(mul(ex, e), ex) < 1e-10 * scale);
        }
    }
}

TEST_CASE("dropping the interior weight shift breaks the absorption") {
    for (int n : {2, 3}) {
        const ModularParams p = default_params(n);
        Rng rng(17, "test-fused-absorb-" + std::to_string(n));
        const CMat e = column_antisymmetrizer(n);
        const Weight m = rng.weight(p);
        const cplx z = rng.complex_point();
        const CMat ex = mul(e, fused_column(m, z, p, /*drop_first_shift=*/true));
        const double scale = std::max(1.0, max_abs(ex));
        CHECK(max_abs_diff(mul(ex, e), ex) > 1e-4 * scale);
    }
}

TEST_CASE("corner block is exactly diagonal and matches the scalar accessor") {
    const cplx z(0.13, 0.21);
    for (int n : {2, 3}) {
        const ModularParams p = default_params(n);
        Rng rng(23, "test-corner-" + std::to_string(n));
        for (int rep = 0; rep < 3; ++rep) {
            const Weight m = rng.weight(p);
            const CMat b = corner_block(m, z, p);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) {
                    if (r != c) CHECK(b.at(r, c) == cplx(0.0, 0.0));
                    CHECK(b.at(r, c) == qdet_scalar(m, z, p, r, c));
                }
        }
    }
}

TEST_CASE("delta-dressed corner scalar is label- and weight-independent") {
    const cplx z(0.13, 0.21);
    {
        const ModularParams p = default_params(2);
        const cplx want(1.7685279911658194, -0.13469179575182835);
        for (Weight m : {Weight{1, -2}, Weight{0, 2}})
            for (int j = 0; j < 2; ++j) check_close(rho(m, z, p, j), want, 1e-11);
    }
    {
        const ModularParams p = default_params(3);
        const cplx want(0.95404070358585824, -1.1977951364288102);
        for (Weight m : {Weight{2, 0, 1}, Weight{0, 1, -1}})
            for (int j = 0; j < 3; ++j) check_close(rho(m, z, p, j), want, 1e-11);
    }
}

TEST_CASE("the scalar varies with the spectral point") {
    const ModularParams p = default_params(2);
    CHECK(std::abs(rho({1, -2}, cplx(0.13, 0.21), p, 0) - rho({1, -2}, cplx(0.31, -0.07), p, 0)) >
          1e-3);
}

TEST_CASE("theta-family determinant ratio is constant") {
    {
        const ModularParams p = default_params(2);
        Rng rng(41, "test-tdet-2");
        for (int rep = 0; rep < 8; ++rep) {
            const std::vector<cplx> zs = {rng.complex_point(), rng.complex_point()};
            check_close(tdet_ratio(zs, p), cplx(1.0, 0.0), 1e-12);
        }
    }
    {
        const ModularParams p = default_params(3);
        Rng rng(41, "test-tdet-3");
        const cplx want(0.0, -1.2411841559774661);
        for (int rep = 0; rep < 8; ++rep) {
            const std::vector<cplx> zs = {rng.complex_point(), rng.complex_point(),
                                          rng.complex_point()};
            check_close(tdet_ratio(zs, p), want, 1e-12);
        }
        // The same constant at the corner-tied special points.
        Rng wrng(43, "test-tdet-3-special");
        for (int rep = 0; rep < 4; ++rep) {
            const Weight m = wrng.weight(p);
            const cplx z = wrng.complex_point();
            check_close(tdet_ratio(tdet_special_points(m, z, p), p), want, 1e-12);
        }
    }
}
