// Coefficient extraction from the fundamental operators, the exchange-move
// soundness machinery (evaluation of algebra elements in the operator
// realization), the determinant-like central element, and its rank profile.
#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "eqg/alg_elem.hpp"
#include "eqg/lattice.hpp"
#include "eqg/params.hpp"
#include "eqg/qdet_rep.hpp"
#include "eqg/rng.hpp"
#include "eqg/tensor.hpp"

namespace eqg {

// ---------------------------------------------------------------- coefficients

struct CoeffEntry {
    int upper = 0, lower = 0;
    Weight ma, mb;     // evaluation point: a-symbols at ma, b-symbols at mb
    cplx value{0, 0};  // undressed structured-form coefficient
};

struct CoeffData {
    int n = 0;
    std::vector<CoeffEntry> entries;
};

nlohmann::ordered_json coeff_to_json(const CoeffData& d);
CoeffData coeff_from_json(const nlohmann::ordered_json& j);

// Source of operator state matrices: (weight, spectral point, lower, upper).
using LSource = std::function<CMat(const Weight&, cplx, int, int)>;

LSource fundamental_source(const ModularParams& p);

struct ExtractionResult {
    CoeffData data;
    double max_spread = 0.0;  // worst cross-spectral deviation of the ratios
};

// Divide operator entries by F * sigma(z + delta0 + b_lower - a_upper) at three
// spectral points; the ratio must be z-independent when the source has the
// structured form.  Points are (weight m, incoming state h), so mb = m + e_h.
ExtractionResult extract_coefficients(const LSource& src,
                                      const std::vector<std::pair<Weight, int>>& points,
                                      const ModularParams& p, cplx delta0_shift = cplx(0, 0));

// Dressing attached to a letter with the given upper index:
//   prod_{t != upper} sigma(a_t - a_upper) at the letter's lattice point.
cplx dress_factor(const Weight& ma, int upper, const ModularParams& p);

// Dressed bracket values on realizable points; zero when the labels cannot act.
using BracketEval = std::function<cplx(const Weight& ma, const Weight& mb, int upper, int lower)>;

BracketEval bracket_from_rep(const ModularParams& p);
BracketEval bracket_from_data(const CoeffData& data, const ModularParams& p);

// ------------------------------------------------------------ relation checks

struct YRelReport {
    double same_lower = 0.0;   // uppers commute at equal lower index
    double same_upper = 0.0;   // lowers commute at equal upper index
    double three_term = 0.0;   // sigma-weighted three-term exchange identity
};

// Evaluates the three bracket relations on sampled lattice points.  The bracket
// evaluator may be the live operator realization, extracted data, or a constant
// foil; the report carries the worst residual of each relation family.
YRelReport check_y_relations(const BracketEval& br, const ModularParams& p, Rng& rng,
                             int samples);

// ---------------------------------------------------------- operator realization

// State vector of the realization: (state index, weight) -> amplitude.
using RepKey = std::pair<int, Weight>;
using RepState = std::map<RepKey, cplx>;

// Letters act first-written-first; a word's coefficient is evaluated at the
// branch's starting point (m, m + e_h).  Letter (u,l) maps (h, m) to
// (sel_out(h,u,l), m + e_u) with the dressed bracket amplitude.
RepState apply_elem(const AlgElem& e, const RepState& psi, const ModularParams& p,
                    cplx z = cplx(0, 0));

// max-abs difference over keys, relative to max(amplitude scale, floor).
double rep_state_diff(const RepState& x, const RepState& y, double scale_floor);

// Exchange-move soundness: every index instance of the three relation shapes,
// applied to random states; LHS and RHS words must act identically.
struct MoveSoundness {
    double commute_same_lower = 0.0;
    double commute_same_upper = 0.0;
    double three_term_all = 0.0;      // all pairs with distinct uppers and lowers
    double three_term_literal = 0.0;  // subset with both letters non-diagonal
};
MoveSoundness check_move_soundness(const ModularParams& p, Rng& rng, int states_per_instance);

// ------------------------------------------------------------------ the center

// Antisymmetrized word sum with determinant-form coefficients
//   sign/n! * Delta(a)/Delta(b) * prod_k sigma(z + k w + delta0 + b_{mu_k} - a_k)
// over words A^0_{mu_0} ... A^{n-1}_{mu_{n-1}}.  With rescale_brackets the
// coefficient is divided by the weight-dependent dressing the ascending word
// accumulates (prod_k dress_factor at the prefix-shifted point); that variant
// commutes with every generator, the literal one does not.
AlgElem center_element(const ModularParams& p, bool rescale_brackets = true);

// Plain word sum without the Delta(a)/Delta(b) dressing (negative control).
AlgElem center_element_undressed(const ModularParams& p);

struct CenterCommuteReport {
    double max_residual = 0.0;
    bool conclusive = true;  // normal forms closed under the chosen reading
    int generator_count = 0;
};

// normal_form(C*G) vs normal_form(G*C) for every generator G, coefficients
// compared at the given lattice points and spectral value.
CenterCommuteReport check_center_commutes(const AlgElem& C, cplx z, const ModularParams& p,
                                          const std::vector<std::pair<Weight, Weight>>& points,
                                          Reading reading = Reading::GenericPair);

// Singular values by one-sided Jacobi orthogonalization (row-major input).
std::vector<double> singular_values(int rows, int cols, std::vector<cplx> A);

struct CenterRankResult {
    int rank = 0;
    std::vector<double> svals;
};

// Rank of the matrix of center coefficient vectors over the spectral samples,
// evaluated at one fixed lattice point.
CenterRankResult center_rank(const std::vector<cplx>& zs, const ModularParams& p,
                             const Weight& ma, const Weight& mb);

}  // namespace eqg
