// Acceptance gate: one line per criterion, exit 0 only when all pass.

#include "oracle.hpp"

#include "cliffpair/catalog.hpp"
#include "cliffpair/coinvariants.hpp"
#include "cliffpair/json_io.hpp"
#include "cliffpair/transgress.hpp"

#include <chrono>
#include <iostream>
#include <random>
#include <vector>

using namespace cliffpair;

namespace {

std::mt19937_64 rng(20240817);

std::vector<std::string> small_pair_ids() {
    std::vector<std::string> ids;
    for (const CatalogEntry& e : catalog())
        if (!e.stretch) ids.push_back(e.id);
    return ids;
}

Multivector random_vector(const QuadraticSpace* sp) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::vector<Scalar> v(sp->dim());
    for (Scalar& c : v) c = Scalar(num(rng));
    return Multivector::from_vector(sp, v);
}

Multivector random_element(const QuadraticSpace* sp, int blades) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<uint64_t> mask(0, (uint64_t(1) << sp->dim()) - 1);
    Multivector out(sp);
    for (int b = 0; b < blades; ++b) out.add_term(mask(rng), Scalar(num(rng)));
    return out;
}

Scalar form_on_vectors(const QuadraticSpace* sp, const Multivector& u, const Multivector& v) {
    Scalar acc;
    for (const auto& [mu, cu] : u.terms())
        for (const auto& [mv, cv] : v.terms())
            acc += cu * cv * sp->B(std::countr_zero(mu), std::countr_zero(mv));
    return acc;
}

struct Criterion {
    bool pass = true;
    std::vector<std::string> notes;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back(what);
        }
    }
};

bool report(int n, const char* title, const Criterion& c, double secs) {
    std::cout << "criterion " << n << ": " << (c.pass ? "pass" : "FAIL") << " - " << title << " ("
              << secs << " s)\n";
    for (const std::string& s : c.notes) std::cout << "    " << s << "\n";
    std::cout.flush();
    return c.pass;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main() {
    int failures = 0;
    std::vector<std::string> ids = small_pair_ids();

    { // 1: Clifford relation and associativity
        auto t0 = std::chrono::steady_clock::now();
        Criterion c;
        for (const std::string& id : ids) {
            SymmetricPair pr = build_catalog_pair(id);
            PairContext ctx(pr);
            const QuadraticSpace* sp = ctx.p_space();
            for (int t = 0; t < 1000; ++t) {
                Multivector u = random_vector(sp), v = random_vector(sp);
                Multivector lhs = cliff_mul(u, v) + cliff_mul(v, u);
                c.require(lhs == Multivector::scalar(sp, form_on_vectors(sp, u, v) * Scalar(2)),
                          id + ": uv + vu != 2B(u,v)");
            }
            for (int t = 0; t < 500; ++t) {
                Multivector a = random_element(sp, 2), b = random_element(sp, 2),
                            d = random_element(sp, 2);
                c.require(cliff_mul(cliff_mul(a, b), d) == cliff_mul(a, cliff_mul(b, d)),
                          id + ": associativity");
            }
        }
        double secs = seconds_since(t0);
        c.require(secs < 10.0, "runtime bound 10 s exceeded");
        failures += !report(1, "Clifford relation, 1000 pairs and 500 triples per pair", c, secs);
    }

    { // 2: invariant dimensions, including the gated even orthogonal pair
        auto t0 = std::chrono::steady_clock::now();
        Criterion c;
        for (auto [id, dim] : {std::pair<const char*, size_t>{"sl3-so3", 2},
                               {"sl4-sp4", 2},
                               {"sl5-so5", 4}}) {
            SymmetricPair pr_ctx = build_catalog_pair(id);
            PairContext ctx(pr_ctx);
            c.require(invariants_cl(ctx, InvariantFlavor::CL_K_GROUP).elements.size() == dim,
                      std::string(id) + ": wrong invariant dimension");
        }
        SymmetricPair pr_ctx6 = build_catalog_pair("sl6-o6");
            PairContext ctx6(pr_ctx6);
        InvariantBasis lie = invariants_cl(ctx6, InvariantFlavor::CL_K_LIE);
        c.require(lie.elements.size() == 8, "sl6-o6: dim over the Lie algebra is not 8");
        c.require(group_fixed_subspace(ctx6, lie.elements).size() == 4,
                  "sl6-o6: dim over the full orthogonal group is not 4");
        failures += !report(2, "invariant dimensions 2, 2, 4 and 8/4", c, seconds_since(t0));
    }

    { // 3: transgression degrees, counts, and the kernel of squares
        auto t0 = std::chrono::steady_clock::now();
        Criterion c;
        for (const char* id : {"sl3-so3", "sl4-sp4"}) {
            SymmetricPair pr_ctx = build_catalog_pair(id);
            PairContext ctx(pr_ctx);
            std::vector<Multivector> prims = primitives_p(ctx);
            c.require(prims.size() == 1 && !prims[0].is_zero() && prims[0].degree() == 5,
                      std::string(id) + ": primitive is not a nonzero degree 5 element");
            for (const Multivector& p : prims)
                for (size_t x = 0; x < ctx.pair().dim_k(); ++x)
                    c.require(derivation_extend(ctx.ad_p(x), p).is_zero(),
                              std::string(id) + ": primitive is not invariant");
        }
        SymmetricPair pr_c5 = build_catalog_pair("sl5-so5");
            PairContext c5(pr_c5);
        std::vector<Multivector> p5 = primitives_p(c5);
        c.require(p5.size() == 2 && p5[0].degree() == 5 && p5[1].degree() == 9,
                  "sl5-so5: degrees are not {5, 9}");
        LieAlgebra sl3 = build_sl(3);
        QuadraticSpace s3 = make_g_space(sl3);
        SymmetricTensor sq = power_sum(sl3, 2).product(power_sum(sl3, 2));
        c.require(transgress(sq, TransgressTarget::WEDGE, &s3).is_zero(),
                  "square of an invariant does not transgress to zero");
        SymmetricTensor mix = power_sum(sl3, 2).product(power_sum(sl3, 3));
        c.require(transgress(mix, TransgressTarget::WEDGE, &s3).is_zero(),
                  "product of invariants does not transgress to zero");
        failures += !report(3, "transgression degrees, counts, products to zero", c,
                            seconds_since(t0));
    }

    { // 4: contractions of primitives lie in the moment-map image
        auto t0 = std::chrono::steady_clock::now();
        Criterion c;
        for (const std::string& id : ids) {
            SymmetricPair pr_ctx = build_catalog_pair(id);
            PairContext ctx(pr_ctx);
            for (const Multivector& phi : primitives_p(ctx))
                for (size_t x = 0; x < ctx.pair().dim_p(); ++x) {
                    std::vector<Scalar> v(ctx.pair().dim_p());
                    v[x] = Scalar(1);
                    c.require(in_alpha_image(ctx, contract_vec(v, phi)),
                              id + ": contraction left the moment-map image");
                }
        }
        failures += !report(4, "contraction membership for every catalog primitive", c,
                            seconds_since(t0));
    }

    { // 5: Harish-Chandra projection
        auto t0 = std::chrono::steady_clock::now();
        Criterion c;
        for (const std::string& id : ids) {
            SymmetricPair pr = build_catalog_pair(id);
            PairContext ctx(pr);
            InvariantBasis inv = invariants_cl(ctx, InvariantFlavor::CL_K_GROUP);
            for (size_t w = 0; w < pr.pos_systems().size(); ++w) {
                HCMap hc = build_hc(ctx, w);
                c.require(cliff_mul(hc.Pw(), hc.Pw()) == hc.Pw(), id + ": projector idempotency");
                std::vector<Scalar> shift = pr.half_weight_sum(w);
                for (size_t r = 0; r < pr.dim_t(); ++r) {
                    std::vector<Scalar> xk(pr.dim_k());
                    xk[pr.tIdx()[r]] = Scalar(1);
                    bool exact = false;
                    c.require(hc.apply(ctx.alpha(xk), &exact) ==
                                      Multivector::scalar(hc.a_space(), shift[r]) &&
                                  exact,
                              id + ": weight shift value");
                }
                MonomialSpan image;
                std::vector<Multivector> images;
                for (const Multivector& b : inv.elements) {
                    bool exact = false;
                    images.push_back(hc.apply(b, &exact));
                    c.require(exact, id + ": projection left the small algebra");
                    image.insert(images.back());
                }
                c.require(image.dim() == inv.elements.size(), id + ": projection not injective");
                c.require(image.dim() == size_t(1) << pr.dim_a(),
                          id + ": projection not surjective onto Cl(a)");
                if (pr.dim_p() <= 10) {
                    for (size_t i = 0; i < inv.elements.size(); ++i)
                        for (size_t j = 0; j < inv.elements.size(); ++j) {
                            bool exact = false;
                            Multivector lhs =
                                hc.apply(cliff_mul(inv.elements[i], inv.elements[j]), &exact);
                            c.require(exact && lhs == cliff_mul(images[i], images[j]),
                                      id + ": multiplicativity on invariants");
                        }
                    for (const Multivector& b : inv.elements)
                        c.require(oracle::oracle_hc(ctx, w, b, hc.a_space()) ==
                                      hc.apply(b, nullptr),
                                  id + ": disagreement with the reference projection");
                }
            }
        }
        failures += !report(5, "projection idempotency, weight shifts, bijectivity, oracle", c,
                            seconds_since(t0));
    }

    { // 6: main theorem report
        auto t0 = std::chrono::steady_clock::now();
        Criterion c;
        for (const char* id : {"sl3-so3", "sl4-sp4", "sl5-so5"}) {
            SymmetricPair pr_ctx = build_catalog_pair(id);
            PairContext ctx(pr_ctx);
            MainTheoremReport rep = verify_main_theorem(ctx);
            c.require(rep.all_pass(), std::string(id) + ": a main theorem part failed");
            for (const std::string& n : rep.notes) c.notes.push_back(id + (": " + n));
        }
        // the even orthogonal stretch pair contributes its coinvariant count
        SymmetricPair pr6 = build_catalog_pair("sl6-o6");
        c.require(coinvariant_quotient(pr6, QuotientMode::AT_RHO).dim == 2,
                  "sl6-o6: coinvariant dimension at rho is not 2");
        failures += !report(6, "main theorem parts a-d and the stretch coinvariant count", c,
                            seconds_since(t0));
    }

    { // 7: the two filtrations coincide
        auto t0 = std::chrono::steady_clock::now();
        Criterion c;
        for (int n : {3, 4, 5}) {
            FiltrationReport rep = verify_kostant_absolute(build_sl(n));
            bool jumps = rep.jumpsScriptF.size() == size_t(n - 1);
            for (int m = 1; m < n && jumps; ++m)
                jumps = rep.jumpsScriptF[m - 1] == std::pair{m, size_t(m)};
            c.require(rep.equal && jumps,
                      "sl(" + std::to_string(n) + "): filtrations differ or wrong jumps");
        }
        using Jumps = std::vector<std::pair<int, size_t>>;
        for (auto [id, jumps] : {std::pair<const char*, Jumps>{"sl3-so3", {{2, 1}}},
                                 {"sl4-sp4", {{2, 1}}},
                                 {"sl5-so5", {{2, 1}, {4, 2}}}}) {
            SymmetricPair pr_ctx = build_catalog_pair(id);
            PairContext ctx(pr_ctx);
            FiltrationReport rep = verify_kostant(ctx);
            c.require(rep.equal && rep.jumpsScriptF == jumps && rep.jumpsF == jumps,
                      std::string(id) + ": filtrations differ or wrong jumps");
        }
        failures += !report(7, "equal filtrations, absolute and relative", c, seconds_since(t0));
    }

    { // 8: property suite
        auto t0 = std::chrono::steady_clock::now();
        Criterion c;
        SymmetricPair pr = build_catalog_pair("sl3-so3");
        PairContext ctx(pr);
        const QuadraticSpace* sp = ctx.p_space();
        for (int t = 0; t < 30; ++t) {
            size_t x = rng() % pr.dim_k();
            Multivector a = random_element(sp, 3), b = random_element(sp, 3);
            Multivector lhs = derivation_extend(ctx.ad_p(x), wedge(a, b));
            Multivector rhs = wedge(derivation_extend(ctx.ad_p(x), a), b) +
                              wedge(a, derivation_extend(ctx.ad_p(x), b));
            c.require(lhs == rhs, "derivation law on the wedge product");
            c.require(cliff_mul(ctx.alpha_basis(x), a) - cliff_mul(a, ctx.alpha_basis(x)) ==
                          derivation_extend(ctx.ad_p(x), a),
                      "moment-map commutator property");
        }
        for (int k = 2; k <= 3; ++k) {
            SymmetricTensor p = power_sum(pr.g(), k);
            SymmetricTensor tp = theta_pullback(pr, p);
            SymmetricTensor sign = p;
            if (k % 2) {
                SymmetricTensor neg(&pr.g(), k);
                for (const auto& [s, coeff] : p.terms()) neg.add_term(s, -coeff);
                sign = neg;
            }
            c.require(tp == sign, "theta parity of the power sums");
        }
        { // splitting: restriction of the even power sums hits the generators
            SymmetricPair p5 = build_catalog_pair("sl5-so5");
            PolyRing ring = coinvariant_ring(p5);
            for (int j = 1; 2 * (size_t)j <= p5.rep_n(); ++j)
                c.require(!restricted_power_sum(p5, &ring, j).is_zero(),
                          "restricted power sum vanished");
            c.require(restrict_to_k(p5, power_sum(p5.g(), 3)).is_zero(),
                      "odd power sum does not vanish on k");
        }
        { // scalar commutator lemma on the rank two pair
            SymmetricPair pr_c5 = build_catalog_pair("sl5-so5");
            PairContext c5(pr_c5);
            std::vector<Multivector> prims = primitives_p(c5);
            Matrix gram = primitive_gram(c5, prims);
            for (size_t i = 0; i < prims.size(); ++i)
                for (size_t j = 0; j < prims.size(); ++j) {
                    Multivector anti = cliff_mul(prims[i], prims[j]) +
                                       cliff_mul(prims[j], prims[i]);
                    c.require(anti == Multivector::scalar(c5.p_space(),
                                                          gram.at(i, j) * Scalar(2)),
                              "anticommutator of primitives is not the scalar 2B~");
                }
        }
        for (const char* id : {"sl3-so3", "sl4-sp4"}) { // gr-dimension match
            SymmetricPair pr_cx = build_catalog_pair(id);
            PairContext cx(pr_cx);
            InvariantBasis cl = invariants_cl(cx, InvariantFlavor::CL_K_LIE);
            InvariantBasis wg = invariants_wedge_graded(cx);
            size_t total = 0;
            for (size_t d : wg.gradedDims) total += d;
            // top-degree symbols of the Cl basis per filtration degree
            std::vector<size_t> byDeg(wg.gradedDims.size());
            for (const Multivector& b : cl.elements) byDeg[b.degree()]++;
            c.require(cl.elements.size() == total && byDeg == wg.gradedDims,
                      std::string(id) + ": graded dimensions of Cl and wedge differ");
        }
        double secs = seconds_since(t0);
        c.require(secs < 120.0, "runtime bound 120 s exceeded");
        failures += !report(8, "derivation, moment map, parity, splitting, gr match", c, secs);
    }

    std::cout << (failures ? "acceptance: FAILED\n" : "acceptance: all criteria pass\n");
    return failures ? 1 : 0;
}
