#include <doctest.h>

#include "cliffpair/clifford.hpp"

#include <random>

using namespace cliffpair;

namespace {

std::mt19937_64 rng(4242);

Multivector random_mv(const QuadraticSpace* sp, int max_terms) {
    std::uniform_int_distribution<Multivector::Mask> mask(0, (Multivector::Mask(1) << sp->dim()) - 1);
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 3);
    Multivector out(sp);
    for (int t = 0; t < max_terms; ++t)
        out.add_term(mask(rng), Scalar(num(rng), den(rng)));
    return out;
}

} // namespace

TEST_CASE("Clifford relation and filtration") {
    SymmetricPair pr = SymmetricPair::build(PairFamily::AI, 3);
    PairContext ctx(pr);
    const QuadraticSpace* sp = ctx.p_space();
    for (size_t i = 0; i < sp->dim(); ++i)
        for (size_t j = 0; j < sp->dim(); ++j) {
            Multivector ei = Multivector::basis_vector(sp, i);
            Multivector ej = Multivector::basis_vector(sp, j);
            Multivector anti = cliff_mul(ei, ej) + cliff_mul(ej, ei);
            CHECK(anti == Multivector::scalar(sp, sp->B(i, j) + sp->B(i, j)));
            // degree-2 symbol of the product is the wedge
            CHECK(cliff_mul(ei, ej).graded_part(2) == wedge(ei, ej));
        }
}

TEST_CASE("Clifford product is associative and unital") {
    SymmetricPair pr = SymmetricPair::build(PairFamily::AI, 3);
    PairContext ctx(pr);
    const QuadraticSpace* sp = ctx.p_space();
    Multivector one = Multivector::scalar(sp, Scalar(1));
    for (int t = 0; t < 12; ++t) {
        Multivector a = random_mv(sp, 3), b = random_mv(sp, 3), c = random_mv(sp, 3);
        CHECK(cliff_mul(cliff_mul(a, b), c) == cliff_mul(a, cliff_mul(b, c)));
        CHECK(cliff_mul(one, a) == a);
        CHECK(cliff_mul(a, one) == a);
    }
}

TEST_CASE("transpose reverses Clifford products") {
    SymmetricPair pr = SymmetricPair::build(PairFamily::AI, 3);
    PairContext ctx(pr);
    const QuadraticSpace* sp = ctx.p_space();
    for (int t = 0; t < 12; ++t) {
        Multivector a = random_mv(sp, 3), b = random_mv(sp, 3);
        CHECK(transpose(cliff_mul(a, b)) == cliff_mul(transpose(b), transpose(a)));
    }
}

TEST_CASE("moment map intertwines the k action") {
    for (auto [fam, n] : {std::pair{PairFamily::AI, 3}, {PairFamily::AII, 4}}) {
        SymmetricPair pr = SymmetricPair::build(fam, n);
        PairContext ctx(pr);
        const QuadraticSpace* sp = ctx.p_space();
        size_t dk = pr.dim_k(), dp = pr.dim_p();
        // [alpha(X), v] = [X, v] in Cl(p) for v in p
        for (size_t k = 0; k < dk; ++k) {
            const Multivector& ax = ctx.alpha_basis(k);
            CHECK(ax.degree() <= 2);
            for (size_t i = 0; i < dp; ++i) {
                Multivector v = Multivector::basis_vector(sp, i);
                Multivector comm = cliff_mul(ax, v) - cliff_mul(v, ax);
                std::vector<Scalar> img(dp);
                for (size_t l = 0; l < dp; ++l) img[l] = ctx.ad_p(k).at(l, i);
                CHECK(comm == Multivector::from_vector(sp, img));
            }
        }
        // alpha is a Lie algebra map: alpha([X,Y]) = alpha(X)alpha(Y) - alpha(Y)alpha(X)
        for (size_t x = 0; x < dk; ++x)
            for (size_t y = x + 1; y < dk; ++y) {
                std::vector<Scalar> br(dk);
                uint32_t gx = pr.kIdx()[x], gy = pr.kIdx()[y];
                for (const auto& [l, c] : pr.g().bracket(gx, gy)) {
                    REQUIRE(l < dk);
                    br[l] = c;
                }
                Multivector lhs = ctx.alpha(br);
                Multivector rhs = cliff_mul(ctx.alpha_basis(x), ctx.alpha_basis(y)) -
                                  cliff_mul(ctx.alpha_basis(y), ctx.alpha_basis(x));
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("Cartan three tensor of sl(2) is half h^e^f") {
    LieAlgebra g = build_sl(2);
    QuadraticSpace sp = make_g_space(g);
    Multivector phi = cartan_three_tensor(g, &sp);
    Multivector expected = Multivector::monomial(&sp, 0b111, Scalar(1, 2));
    CHECK(phi == expected);
}

TEST_CASE("Cartan three tensor is invariant") {
    for (const LieAlgebra& g : {build_sl(2), build_sl(3), build_so(5)}) {
        QuadraticSpace sp = make_g_space(g);
        Multivector phi = cartan_three_tensor(g, &sp);
        CHECK(phi.is_homogeneous());
        CHECK(phi.degree() == 3);
        for (size_t x = 0; x < g.dim(); ++x)
            CHECK(derivation_extend(g.ad_basis(x), phi).is_zero());
    }
}

TEST_CASE("phi recovers the bracket by triple contraction") {
    // full contraction of phi against x, y, z equals -1/2 B([x,y], z)
    for (const LieAlgebra& g : {build_sl(2), build_sl(3)}) {
        QuadraticSpace sp = make_g_space(g);
        Multivector phi = cartan_three_tensor(g, &sp);
        std::uniform_int_distribution<long> num(-4, 4);
        for (int t = 0; t < 10; ++t) {
            std::vector<Scalar> x(g.dim()), y(g.dim()), z(g.dim());
            for (size_t l = 0; l < g.dim(); ++l) {
                x[l] = Scalar(num(rng));
                y[l] = Scalar(num(rng));
                z[l] = Scalar(num(rng));
            }
            Scalar T = contract_vec(z, contract_vec(y, contract_vec(x, phi))).scalar_part();
            std::vector<Scalar> br = g.bracket_vec(x, y);
            Scalar Bxy_z;
            std::vector<Scalar> gz = g.gram().apply(z);
            for (size_t l = 0; l < g.dim(); ++l) Bxy_z += br[l] * gz[l];
            CHECK(T + T == -Bxy_z);
        }
    }
}
