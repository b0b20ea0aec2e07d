#pragma once

#include "cliffpair/poly.hpp"
#include "cliffpair/symmetric_pair.hpp"

namespace cliffpair {

enum class QuotientMode { AT_RHO, GRADED };

struct PolyQuotientReport {
    std::vector<std::string> generators;       // free generators of C[t*]^{W_k}
    std::vector<std::string> ideal_generators; // rendered ideal generators
    size_t dim = 0;
    std::map<int, size_t> graded; // weighted degree -> dimension
};

// The invariant ring C[t*]^{W_k} as a free weighted polynomial ring:
// power sums in the squared coordinates (variables q_j of weight 2j), and
// for even orthogonal k also the product of the coordinates (weight n).
PolyRing coinvariant_ring(const SymmetricPair& pair);

// restriction to t of the degree-2j power sum of g, written in the ring
// generators; equals twice the j-th power sum in the squared coordinates
WPoly restricted_power_sum(const SymmetricPair& pair, const PolyRing* ring, int j);

// value of the degree-k power sum at rho for sl(N)
Scalar power_sum_at_rho(size_t N, int k);

PolyQuotientReport coinvariant_quotient(const SymmetricPair& pair, QuotientMode mode);

} // namespace cliffpair
