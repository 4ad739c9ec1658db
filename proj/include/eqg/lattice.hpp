// Discrete weight bookkeeping: height vectors m, the shifted components
// abar_i = m_i - (1/n) sum_l m_l + w_vec_i, their scaled values a_i = w*abar_i,
// pairwise differences, and the product of sigma factors over all pairs.
#pragma once

#include <vector>

#include "eqg/params.hpp"

namespace eqg {

using Weight = std::vector<int>;  // height vector m, one integer per component

// abar_i(m) = m_i - (1/n) sum_l m_l + w_vec_i.  Differences abar_i - abar_j are
// invariant under m -> m + c*(1,...,1).
std::vector<double> abar(const Weight& m, const ModularParams& p);

// a_i(m) = w * abar_i(m), as complex numbers.
std::vector<cplx> avals(const Weight& m, const ModularParams& p);

// a_i - a_j for the given weight.
cplx a_diff(const Weight& m, int i, int j, const ModularParams& p);

// Product over ordered pairs i<j of sigma(a_i - a_j).
cplx delta_product(const Weight& m, const ModularParams& p);

// m + e_k (unit step in component k).
Weight shifted(const Weight& m, int k, int step = 1);

// m + d for an integer displacement vector d.
Weight shifted_by(const Weight& m, const std::vector<int>& d);

// Genericity guard: true when min over pairs i<j and |k| <= k_range of
// |sigma(a_i - a_j + k*w)| exceeds floor.  Non-generic weights make the face
// weights singular and are rejected by the samplers.
bool is_generic(const Weight& m, const ModularParams& p, double floor = 1e-6, int k_range = 3);

}  // namespace eqg
