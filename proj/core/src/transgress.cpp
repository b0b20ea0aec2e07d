#include "cliffpair/transgress.hpp"

#include <algorithm>
#include <stdexcept>

namespace cliffpair {

namespace {

Scalar transgress_constant(int m) {
    // (m!)^2 / (2m+1)!
    mpq_class num = 1, den = 1;
    for (int k = 2; k <= m; ++k) num *= (long)k;
    num *= num;
    for (int k = 2; k <= 2 * m + 1; ++k) den *= (long)k;
    return Scalar(num / den);
}

// delta(f_i) for every i, as degree-2 multivectors over the given space;
// indices and brackets are taken from the algebra, the dual vectors from
// the space's inverse gram
std::vector<Multivector> delta_images(const LieAlgebra& g, const QuadraticSpace* sp) {
    size_t d = g.dim();
    std::vector<Multivector> D(d, Multivector(sp));
    Scalar half(1, 2);
    for (size_t a = 0; a < d; ++a)
        for (size_t b = 0; b < d; ++b) {
            if (a == b) continue;
            for (const auto& [i, c] : g.bracket(a, b)) {
                Multivector fa = Multivector::from_vector(sp, g.dual_basis_vector(a));
                Multivector fb = Multivector::from_vector(sp, g.dual_basis_vector(b));
                Multivector w = wedge(fa, fb);
                w *= c * half;
                D[i] -= w;
            }
        }
    return D;
}

} // namespace

Multivector transgress(const SymmetricTensor& P, TransgressTarget target,
                       const QuadraticSpace* gspace) {
    const LieAlgebra& g = *P.algebra();
    if (!P.is_invariant()) throw std::invalid_argument("transgress: tensor is not invariant");
    int m = P.degree() - 1;
    Scalar cm = transgress_constant(m);
    std::vector<Multivector> D = delta_images(g, gspace);
    std::vector<Multivector> F;
    for (size_t i = 0; i < g.dim(); ++i)
        F.push_back(Multivector::from_vector(gspace, g.dual_basis_vector(i)));

    Multivector out(gspace);
    if (target == TransgressTarget::WEDGE) {
        for (const auto& [s, t] : P.terms()) {
            Scalar a = t * arrangement_count(s);
            for (size_t pos = 0; pos < s.size(); ++pos) {
                if (pos > 0 && s[pos] == s[pos - 1]) continue;
                uint32_t x = s[pos];
                Scalar mult(0);
                for (uint32_t q : s)
                    if (q == x) mult += Scalar(1);
                Multivector prod = Multivector::scalar(gspace, a * mult);
                bool skipped = false;
                for (uint32_t q : s) {
                    if (q == x && !skipped) {
                        skipped = true;
                        continue;
                    }
                    prod = wedge(prod, D[q]);
                    if (prod.is_zero()) break;
                }
                if (!prod.is_zero()) out += wedge(prod, F[x]);
            }
        }
    } else {
        for (const auto& [s, t] : P.terms()) {
            MultiIndex tuple = s;
            do {
                for (size_t j = 0; j < tuple.size(); ++j) {
                    Multivector prod = Multivector::scalar(gspace, t);
                    for (size_t l = 0; l < tuple.size(); ++l)
                        prod = cliff_mul(prod, l == j ? F[tuple[l]] : D[tuple[l]]);
                    out += prod;
                }
            } while (std::next_permutation(tuple.begin(), tuple.end()));
        }
    }
    out *= cm;
    return out;
}

Multivector transgress_power_sum(const LieAlgebra& g, int k, const QuadraticSpace* gspace) {
    if (k < 2) throw std::invalid_argument("transgress_power_sum: degree must be at least 2");
    int m = k - 1;
    size_t N = g.rep_dim();
    std::vector<Multivector> D = delta_images(g, gspace);

    // entries of M = sum_i delta(f_i) rep(e_i); even degrees commute in the
    // wedge, so tr(M^m rep(e_x)) collects the slot sums of the formula
    std::vector<Multivector> M(N * N, Multivector(gspace));
    for (size_t i = 0; i < g.dim(); ++i) {
        if (D[i].is_zero()) continue;
        const Matrix& r = g.rep(i);
        for (size_t a = 0; a < N; ++a)
            for (size_t b = 0; b < N; ++b)
                if (!r.at(a, b).is_zero()) {
                    Multivector t = D[i];
                    t *= r.at(a, b);
                    M[a * N + b] += t;
                }
    }
    std::vector<Multivector> P = M;
    for (int step = 1; step < m; ++step) {
        std::vector<Multivector> Q(N * N, Multivector(gspace));
        for (size_t a = 0; a < N; ++a)
            for (size_t c = 0; c < N; ++c) {
                if (P[a * N + c].is_zero()) continue;
                for (size_t b = 0; b < N; ++b) {
                    if (M[c * N + b].is_zero()) continue;
                    Q[a * N + b] += wedge(P[a * N + c], M[c * N + b]);
                }
            }
        P = std::move(Q);
    }

    Multivector out(gspace);
    for (size_t x = 0; x < g.dim(); ++x) {
        const Matrix& r = g.rep(x);
        Multivector tr(gspace);
        for (size_t a = 0; a < N; ++a)
            for (size_t b = 0; b < N; ++b) {
                if (r.at(b, a).is_zero() || P[a * N + b].is_zero()) continue;
                Multivector t = P[a * N + b];
                t *= r.at(b, a);
                tr += t;
            }
        if (tr.is_zero()) continue;
        out += wedge(tr, Multivector::from_vector(gspace, g.dual_basis_vector(x)));
    }
    out *= transgress_constant(m) * Scalar(m + 1);
    return out;
}

Multivector relative_transgress_power_sum(const PairContext& ctx, int k) {
    if (k < 2) throw std::invalid_argument("relative_transgress_power_sum: degree must be at least 2");
    const SymmetricPair& pair = ctx.pair();
    const LieAlgebra& g = pair.g();
    const QuadraticSpace* sp = ctx.p_space();
    int m = k - 1;
    size_t N = g.rep_dim(), dk = pair.dim_k(), dp = pair.dim_p();

    // delta restricted to p: only k-indices survive, built from p-pair brackets
    std::vector<Multivector> Dk(dk, Multivector(sp));
    Scalar half(1, 2);
    for (size_t a = 0; a < dp; ++a)
        for (size_t b = 0; b < dp; ++b) {
            if (a == b) continue;
            uint32_t ga = pair.pIdx()[a], gb = pair.pIdx()[b];
            for (const auto& [i, c] : g.bracket(ga, gb)) {
                if (i >= dk) throw std::logic_error("relative transgression: [p,p] escapes k");
                Multivector fa(sp), fb(sp);
                for (size_t l = 0; l < dp; ++l) {
                    fa.add_term(Multivector::Mask(1) << l, sp->gram_inverse().at(l, a));
                    fb.add_term(Multivector::Mask(1) << l, sp->gram_inverse().at(l, b));
                }
                Multivector w = wedge(fa, fb);
                w *= c * half;
                Dk[i] -= w;
            }
        }

    std::vector<Multivector> M(N * N, Multivector(sp));
    for (size_t i = 0; i < dk; ++i) {
        if (Dk[i].is_zero()) continue;
        const Matrix& r = g.rep(pair.kIdx()[i]);
        for (size_t a = 0; a < N; ++a)
            for (size_t b = 0; b < N; ++b)
                if (!r.at(a, b).is_zero()) {
                    Multivector t = Dk[i];
                    t *= r.at(a, b);
                    M[a * N + b] += t;
                }
    }
    std::vector<Multivector> P = M;
    for (int step = 1; step < m; ++step) {
        std::vector<Multivector> Q(N * N, Multivector(sp));
        for (size_t a = 0; a < N; ++a)
            for (size_t c = 0; c < N; ++c) {
                if (P[a * N + c].is_zero()) continue;
                for (size_t b = 0; b < N; ++b) {
                    if (M[c * N + b].is_zero()) continue;
                    Q[a * N + b] += wedge(P[a * N + c], M[c * N + b]);
                }
            }
        P = std::move(Q);
    }

    Multivector out(sp);
    for (size_t x = 0; x < dp; ++x) {
        const Matrix& r = g.rep(pair.pIdx()[x]);
        Multivector tr(sp);
        for (size_t a = 0; a < N; ++a)
            for (size_t b = 0; b < N; ++b) {
                if (r.at(b, a).is_zero() || P[a * N + b].is_zero()) continue;
                Multivector t = P[a * N + b];
                t *= r.at(b, a);
                tr += t;
            }
        if (tr.is_zero()) continue;
        Multivector fx(sp);
        for (size_t l = 0; l < dp; ++l)
            fx.add_term(Multivector::Mask(1) << l, sp->gram_inverse().at(l, x));
        out += wedge(tr, fx);
    }
    Scalar scale = transgress_constant(m) * Scalar(m + 1);
    Scalar four_m(1);
    for (int t = 0; t < m; ++t) four_m *= Scalar(4);
    out *= scale * (-four_m);
    return out;
}

std::vector<Multivector> primitives_p(const PairContext& ctx) {
    const SymmetricPair& pair = ctx.pair();
    std::vector<Multivector> out;
    for (size_t j = 1; j <= pair.dim_a(); ++j) {
        Multivector prim = relative_transgress_power_sum(ctx, 2 * (int)j + 1);
        for (size_t k = 0; k < pair.dim_k(); ++k)
            if (!derivation_extend(ctx.ad_p(k), prim).is_zero())
                throw std::logic_error("primitives_p: result is not k-invariant");
        for (const Matrix& gen : ctx.group_generators_p())
            if (!(group_act(gen, prim) == prim))
                throw std::logic_error("primitives_p: result is not K-invariant");
        out.push_back(std::move(prim));
    }
    return out;
}

} // namespace cliffpair
