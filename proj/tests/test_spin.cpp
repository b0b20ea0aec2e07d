#include <doctest.h>

#include "cliffpair/spin.hpp"

#include <random>

using namespace cliffpair;

namespace {

std::mt19937_64 rng(777);

Multivector random_mv(const QuadraticSpace* sp, int max_terms) {
    std::uniform_int_distribution<Multivector::Mask> mask(0, (Multivector::Mask(1) << sp->dim()) - 1);
    std::uniform_int_distribution<long> num(-5, 5);
    Multivector out(sp);
    for (int t = 0; t < max_terms; ++t) out.add_term(mask(rng), Scalar(num(rng)));
    return out;
}

void check_full_invariance(const PairContext& ctx, const std::vector<Multivector>& basis) {
    for (const Multivector& b : basis)
        for (size_t k = 0; k < ctx.pair().dim_k(); ++k)
            CHECK(derivation_extend(ctx.ad_p(k), b).is_zero());
}

} // namespace

TEST_CASE("Clifford commutator with alpha equals the derivation action") {
    SymmetricPair pr = SymmetricPair::build(PairFamily::AI, 3);
    PairContext ctx(pr);
    for (size_t k = 0; k < pr.dim_k(); ++k)
        for (int t = 0; t < 8; ++t) {
            Multivector a = random_mv(ctx.p_space(), 3);
            Multivector comm =
                cliff_mul(ctx.alpha_basis(k), a) - cliff_mul(a, ctx.alpha_basis(k));
            CHECK(comm == derivation_extend(ctx.ad_p(k), a));
        }
}

TEST_CASE("invariant dimensions match 2^dim a times the component count") {
    SymmetricPair p3 = SymmetricPair::build(PairFamily::AI, 3);
    PairContext c3(p3);
    InvariantBasis b3 = invariants_cl(c3, InvariantFlavor::CL_K_LIE);
    CHECK(b3.elements.size() == 2);
    check_full_invariance(c3, b3.elements);

    SymmetricPair p4 = SymmetricPair::build(PairFamily::AII, 4);
    PairContext c4(p4);
    CHECK(invariants_cl(c4, InvariantFlavor::CL_K_LIE).elements.size() == 2);

    SymmetricPair p5 = SymmetricPair::build(PairFamily::AI, 5);
    PairContext c5(p5);
    InvariantBasis b5 = invariants_cl(c5, InvariantFlavor::CL_K_LIE);
    CHECK(b5.elements.size() == 4);
    check_full_invariance(c5, b5.elements);
}

TEST_CASE("graded invariants of the rank one orthogonal pair") {
    SymmetricPair pr = SymmetricPair::build(PairFamily::AI, 3);
    PairContext ctx(pr);
    InvariantBasis b = invariants_wedge_graded(ctx);
    REQUIRE(b.gradedDims.size() == 6);
    CHECK(b.gradedDims == std::vector<size_t>{1, 0, 0, 0, 0, 1});
    size_t total = 0;
    for (size_t d : b.gradedDims) total += d;
    CHECK(total == b.elements.size());
}

TEST_CASE("graded invariants of sl5 so5 sit in primitive degrees") {
    SymmetricPair pr = SymmetricPair::build(PairFamily::AI, 5);
    PairContext ctx(pr);
    InvariantBasis b = invariants_wedge_graded(ctx);
    REQUIRE(b.gradedDims.size() == 15);
    std::vector<size_t> expect(15, 0);
    expect[0] = expect[5] = expect[9] = expect[14] = 1;
    CHECK(b.gradedDims == expect);
}

TEST_CASE("Casimir image is invariant and scalar for a primary pair") {
    SymmetricPair pr = SymmetricPair::build(PairFamily::AI, 3);
    PairContext ctx(pr);
    Multivector C = casimir_image(ctx);
    CHECK(!C.is_zero());
    for (size_t k = 0; k < pr.dim_k(); ++k)
        CHECK(derivation_extend(ctx.ad_p(k), C).is_zero());
    ProjectionAlgebra pa = isotypic_idempotents(ctx);
    REQUIRE(pa.idempotents.size() == 1);
    CHECK(pa.idempotents[0] == Multivector::scalar(ctx.p_space(), Scalar(1)));
    // degree-one minimal polynomial: C is the eigenvalue times 1
    CHECK(C == Multivector::scalar(ctx.p_space(), pa.eigenvalues[0]));
}

TEST_CASE("projection algebras of the other primary pairs are trivial") {
    for (auto [fam, n] : {std::pair{PairFamily::AII, 4}, {PairFamily::AI, 5}}) {
        SymmetricPair pr = SymmetricPair::build(fam, n);
        PairContext ctx(pr);
        CHECK(isotypic_idempotents(ctx).idempotents.size() == 1);
    }
}

TEST_CASE("the even orthogonal pair has a two point projection algebra") {
    SymmetricPair pr = SymmetricPair::build(PairFamily::AI, 6);
    PairContext ctx(pr);
    ProjectionAlgebra pa = isotypic_idempotents(ctx);
    REQUIRE(pa.idempotents.size() == 2);
    CHECK(cliff_mul(pa.idempotents[0], pa.idempotents[1]).is_zero());
    CHECK(pa.idempotents[0] + pa.idempotents[1] ==
          Multivector::scalar(ctx.p_space(), Scalar(1)));
    // the component group generator swaps the two idempotents
    for (const Matrix& gen : ctx.group_generators_p()) {
        CHECK(group_act(gen, pa.idempotents[0]) == pa.idempotents[1]);
        CHECK(group_act(gen, pa.idempotents[1]) == pa.idempotents[0]);
    }
}

TEST_CASE("invariants of the even orthogonal pair" * doctest::skip(false)) {
    SymmetricPair pr = SymmetricPair::build(PairFamily::AI, 6);
    PairContext ctx(pr);
    InvariantBasis lie = invariants_cl(ctx, InvariantFlavor::CL_K_LIE);
    CHECK(lie.elements.size() == 8);
    InvariantBasis grp = invariants_cl(ctx, InvariantFlavor::CL_K_GROUP);
    CHECK(grp.elements.size() == 4);
    check_full_invariance(ctx, lie.elements);
    for (const Multivector& b : grp.elements)
        for (const Matrix& gen : ctx.group_generators_p())
            CHECK(group_act(gen, b) == b);
}
