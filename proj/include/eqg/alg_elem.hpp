// Elements of the coefficient algebra: formal sums of words in the generators
// A^{upper}_{lower} with symbolic lattice-function coefficients, a shift-aware
// product, and a confluent rewriting pass into upper-ordered normal form.
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "eqg/lattice_fn.hpp"
#include "eqg/params.hpp"

namespace eqg {

using Letter = std::pair<int, int>;  // (upper, lower)
using Word = std::vector<Letter>;

struct AlgElem {
    int n = 0;
    std::map<Word, Fn> terms;
};

// Single generator with coefficient one (or the given coefficient).
AlgElem elem_gen(int n, int upper, int lower);
AlgElem elem_gen(int n, int upper, int lower, Fn coef);
// Coefficient-only element (empty word).
AlgElem elem_const(int n, Fn coef);

// Accumulated symbol displacement of a word: upper indices shift the a-symbols,
// lower indices the b-symbols.
std::pair<std::vector<int>, std::vector<int>> word_shift(const Word& w, int n);

// Product: words concatenate, the second factor's coefficient is conjugated
// past the first word (its symbols evaluated at the shifted lattice point).
AlgElem mul(const AlgElem& x, const AlgElem& y);

AlgElem add(const AlgElem& x, const AlgElem& y);

// Merge a term into an element (summing coefficients on equal words).
void add_term(AlgElem& e, const Word& w, Fn coef);

// Which descending pairs the three-term exchange move may be applied to.
enum class Reading {
    GenericPair,  // any adjacent pair with distinct uppers and distinct lowers
    Literal       // additionally requires both letters to be non-diagonal
};

struct NormalFormResult {
    AlgElem elem;
    bool conclusive = true;      // false when a descending pair was not rewritable
    int steps = 0;               // rewrite moves applied
    std::vector<Word> stuck;     // words left with a non-rewritable descending pair
};

// Rewrites every word into non-decreasing letter order (lexicographic on
// (upper, lower)): equal-upper or equal-lower neighbours commute outright;
// otherwise the descending pair (u1,l1) > (u2,l2) is replaced by
//   c1 * A^{u2}_{l2} A^{u1}_{l1} + c2 * A^{u2}_{l1} A^{u1}_{l2},
//   c1 = sigma(a_{u2 u1}) sigma(b_{l2 l1} - w) / (sigma(a_{u2 u1} + w) sigma(b_{l2 l1})),
//   c2 = sigma(w) sigma(a_{u2 u1} + b_{l2 l1}) / (sigma(a_{u2 u1} + w) sigma(b_{l2 l1})),
// with the sigma arguments shifted by the prefix to the pair's own lattice
// point.  Terminates because each move strictly lowers the inversion count.
NormalFormResult normal_form(const AlgElem& e, const ModularParams& p,
                             Reading reading = Reading::GenericPair);

}  // namespace eqg
