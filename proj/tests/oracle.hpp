#pragma once

#include "cliffpair/hc.hpp"

// Deliberately naive reference implementations, test-only. No weight
// reduction and no sparsity, so agreement with the optimized paths is
// evidence rather than tautology.

namespace cliffpair::oracle {

// dimension of the joint kernel of all L_X, X in k, over the full
// 2^{dim p} monomial space; throws when dim p > 10
size_t oracle_invariants(const PairContext& ctx);

// rewrites x into ordered products (f's, a's, e's) of the positive
// system w by a dense change of basis and drops every monomial with an
// e or f factor; the result lives over aspace; throws when dim p > 10
Multivector oracle_hc(const PairContext& ctx, size_t w, const Multivector& x,
                      const QuadraticSpace* aspace);

// rechecks L_X(result) = 0 densely for every basis element X of g
bool oracle_transgression_invariant(const LieAlgebra& g, const Multivector& result);

} // namespace cliffpair::oracle
