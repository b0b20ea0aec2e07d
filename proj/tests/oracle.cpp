#include "oracle.hpp"

#include <bit>
#include <stdexcept>

namespace cliffpair::oracle {

namespace {

void size_guard(const PairContext& ctx) {
    if (ctx.pair().dim_p() > 10)
        throw std::invalid_argument("oracle: dim p exceeds the size guard");
}

} // namespace

size_t oracle_invariants(const PairContext& ctx) {
    size_guard(ctx);
    const SymmetricPair& pair = ctx.pair();
    size_t dp = pair.dim_p(), N = size_t(1) << dp;

    Matrix stacked(pair.dim_k() * N, N);
    for (size_t x = 0; x < pair.dim_k(); ++x)
        for (size_t col = 0; col < N; ++col) {
            Multivector mono = Multivector::monomial(ctx.p_space(), col, Scalar(1));
            Multivector img = derivation_extend(ctx.ad_p(x), mono);
            for (const auto& [m, c] : img.terms()) stacked.at(x * N + m, col) = c;
        }
    return N - stacked.rank();
}

Multivector oracle_hc(const PairContext& ctx, size_t w, const Multivector& x,
                      const QuadraticSpace* aspace) {
    size_guard(ctx);
    const SymmetricPair& pair = ctx.pair();
    const PosSystem& ps = pair.pos_systems()[w];
    size_t dp = pair.dim_p(), N = size_t(1) << dp;

    // generator order: p- first, then a, then p+
    std::vector<size_t> gens;
    for (uint32_t g : ps.minus) gens.push_back(pair.p_local(g));
    size_t aFirst = gens.size();
    for (uint32_t g : pair.aIdx()) gens.push_back(pair.p_local(g));
    size_t aLast = gens.size();
    for (uint32_t g : ps.plus) gens.push_back(pair.p_local(g));

    // ordered Clifford products of every generator subset, as columns
    Matrix A(N, N);
    for (size_t subset = 0; subset < N; ++subset) {
        Multivector prod = Multivector::scalar(ctx.p_space(), Scalar(1));
        for (size_t i = 0; i < gens.size(); ++i)
            if (subset >> i & 1)
                prod = cliff_mul(prod, Multivector::basis_vector(ctx.p_space(), gens[i]));
        for (const auto& [m, c] : prod.terms()) A.at(m, subset) = c;
    }

    std::vector<Scalar> b(N);
    for (const auto& [m, c] : x.terms()) b[m] = c;
    auto coords = A.solve(b);
    if (!coords) throw std::logic_error("oracle_hc: ordered products failed to span");

    Multivector out(aspace);
    uint64_t ef = ~uint64_t(0) << aLast | ((uint64_t(1) << aFirst) - 1);
    for (size_t subset = 0; subset < N; ++subset) {
        if ((*coords)[subset].is_zero()) continue;
        if (subset & ef) continue; // monomial with an e or f factor
        out.add_term(uint64_t(subset) >> aFirst, (*coords)[subset]);
    }
    return out;
}

bool oracle_transgression_invariant(const LieAlgebra& g, const Multivector& result) {
    for (size_t i = 0; i < g.dim(); ++i)
        if (!derivation_extend(g.ad_basis(i), result).is_zero()) return false;
    return true;
}

} // namespace cliffpair::oracle
