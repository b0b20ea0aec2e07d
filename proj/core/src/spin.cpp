#include "cliffpair/spin.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <stdexcept>

namespace cliffpair {

namespace {

// t-weights of the p coordinates scaled to integers by the common
// denominator, one flat array of dim_t entries per coordinate
std::vector<long> integer_p_weights(const PairContext& ctx, size_t& nt) {
    const SymmetricPair& pair = ctx.pair();
    nt = pair.dim_t();
    size_t dp = pair.dim_p();
    mpz_class den = 1;
    for (size_t i = 0; i < dp; ++i)
        for (size_t r = 0; r < nt; ++r) {
            mpq_class q = ctx.p_weight(i)[r].re();
            den = den * q.get_den() / gcd(den, mpz_class(q.get_den()));
        }
    std::vector<long> w(dp * nt);
    for (size_t i = 0; i < dp; ++i)
        for (size_t r = 0; r < nt; ++r) {
            mpq_class q = ctx.p_weight(i)[r].re() * mpq_class(den);
            w[i * nt + r] = (long)q.get_num().get_si();
        }
    return w;
}

// zero-t-weight monomial masks bucketed by exterior degree
std::vector<std::vector<Multivector::Mask>> zero_weight_masks(const PairContext& ctx) {
    size_t dp = ctx.pair().dim_p();
    if (dp > 20) throw std::invalid_argument("invariants: dim p exceeds the desk bound");
    size_t nt = 0;
    std::vector<long> w = integer_p_weights(ctx, nt);
    std::vector<std::vector<Multivector::Mask>> buckets(dp + 1);
    for (Multivector::Mask m = 0; m < (Multivector::Mask(1) << dp); ++m) {
        long acc[4] = {0, 0, 0, 0};
        Multivector::Mask mm = m;
        while (mm) {
            int i = std::countr_zero(mm);
            mm &= mm - 1;
            for (size_t r = 0; r < nt; ++r) acc[r] += w[i * nt + r];
        }
        bool zero = true;
        for (size_t r = 0; r < nt; ++r)
            if (acc[r] != 0) zero = false;
        if (zero) buckets[std::popcount(m)].push_back(m);
    }
    return buckets;
}

// k indices (local) whose t-weight is lex positive: the raising operators
std::vector<size_t> raising_k(const PairContext& ctx) {
    const SymmetricPair& pair = ctx.pair();
    std::vector<size_t> out;
    for (size_t k = 0; k < pair.dim_k(); ++k) {
        const std::vector<Scalar>& w = pair.t_weight(pair.kIdx()[k]);
        int sign = 0;
        for (const Scalar& c : w) {
            if (!c.is_zero()) {
                sign = mpq_sgn(c.re().get_mpq_t());
                break;
            }
        }
        if (sign > 0) out.push_back(k);
    }
    return out;
}

// invariant vectors of the span of the given zero-weight monomials:
// common kernel of the raising operator actions
std::vector<Multivector> invariant_kernel(const PairContext& ctx,
                                          const std::vector<Multivector::Mask>& masks) {
    if (masks.empty()) return {};
    const QuadraticSpace* sp = ctx.p_space();
    std::vector<size_t> raisers = raising_k(ctx);

    std::vector<SparseRow> rows;
    for (size_t kl : raisers) {
        // equations indexed by (this raiser, target monomial)
        std::map<Multivector::Mask, SparseRow> eq;
        for (uint32_t col = 0; col < masks.size(); ++col) {
            Multivector img =
                derivation_extend(ctx.ad_p(kl), Multivector::monomial(sp, masks[col], Scalar(1)));
            for (const auto& [tm, c] : img.terms()) eq[tm].emplace_back(col, c);
        }
        for (auto& [tm, row] : eq) rows.push_back(std::move(row));
    }

    std::vector<Multivector> out;
    for (const SparseRow& ker : sparse_nullspace(rows, (uint32_t)masks.size())) {
        Multivector v(sp);
        for (const auto& [col, c] : ker) v.add_term(masks[col], c);
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace

// express each multivector of the list in the coordinates of the union of
// their monomials, then return the fixed subspace of the generator actions
std::vector<Multivector> group_fixed_subspace(const PairContext& ctx,
                                              const std::vector<Multivector>& basis) {
    std::vector<Matrix> gens = ctx.group_generators_p();
    if (gens.empty() || basis.empty()) return basis;

    std::map<Multivector::Mask, size_t> coord;
    for (const Multivector& b : basis)
        for (const auto& [m, c] : b.terms()) coord.emplace(m, coord.size());
    size_t nm = coord.size(), nb = basis.size();

    Matrix B(nm, nb);
    for (size_t j = 0; j < nb; ++j)
        for (const auto& [m, c] : basis[j].terms()) B.at(coord[m], j) = c;

    std::vector<SparseRow> rows;
    for (const Matrix& g : gens) {
        Matrix img(nm, nb);
        for (size_t j = 0; j < nb; ++j) {
            Multivector gb = group_act(g, basis[j]);
            for (const auto& [m, c] : gb.terms()) {
                auto it = coord.find(m);
                if (it == coord.end())
                    throw std::logic_error("invariants: group action leaves the invariant span");
                img.at(it->second, j) = c;
            }
        }
        for (size_t r = 0; r < nm; ++r) {
            SparseRow row;
            for (size_t j = 0; j < nb; ++j) {
                Scalar d = img.at(r, j) - B.at(r, j);
                if (!d.is_zero()) row.emplace_back((uint32_t)j, d);
            }
            if (!row.empty()) rows.push_back(std::move(row));
        }
    }

    std::vector<Multivector> out;
    for (const SparseRow& ker : sparse_nullspace(rows, (uint32_t)nb)) {
        Multivector v(ctx.p_space());
        for (const auto& [j, c] : ker) {
            Multivector t = basis[j];
            t *= c;
            v += t;
        }
        out.push_back(std::move(v));
    }
    return out;
}

namespace {

// coordinates of an N x N matrix in the k part of the g basis
std::vector<Scalar> k_coordinates(const SymmetricPair& pair, const Matrix& m) {
    const LieAlgebra& g = pair.g();
    size_t N = g.rep_dim(), dk = pair.dim_k();
    Matrix A(N * N, dk);
    for (size_t j = 0; j < dk; ++j) {
        const Matrix& r = g.rep(pair.kIdx()[j]);
        for (size_t x = 0; x < N; ++x)
            for (size_t y = 0; y < N; ++y) A.at(x * N + y, j) = r.at(x, y);
    }
    std::vector<Scalar> b(N * N);
    for (size_t x = 0; x < N; ++x)
        for (size_t y = 0; y < N; ++y) b[x * N + y] = m.at(x, y);
    auto sol = A.solve(b);
    if (!sol) throw std::logic_error("k_coordinates: matrix is not in k");
    return *sol;
}

// image under alpha of the odd central element of U(so(2m)): the
// noncommutative Pfaffian sum over permutations of products of the
// elements F_ab = e_a wedge e_b of so of the antidiagonal form
Multivector pfaffian_image(const PairContext& ctx) {
    const SymmetricPair& pair = ctx.pair();
    size_t N = pair.g().rep_dim();
    if (N % 2 != 0) throw std::invalid_argument("pfaffian_image: odd orthogonal algebra");

    // F_ab = E_{a,s(b)} - E_{b,s(a)} with s the index reversal
    std::vector<std::vector<Multivector>> u(N);
    for (size_t a = 0; a < N; ++a) u[a].resize(N, Multivector(ctx.p_space()));
    for (size_t a = 0; a < N; ++a)
        for (size_t b = a + 1; b < N; ++b) {
            Matrix F(N, N);
            F.at(a, N - 1 - b) = Scalar(1);
            F.at(b, N - 1 - a) = Scalar(-1);
            u[a][b] = ctx.alpha(k_coordinates(pair, F));
            u[b][a] = u[a][b];
            u[b][a] *= Scalar(-1);
        }

    size_t m = N / 2;
    std::vector<size_t> perm(N);
    for (size_t i = 0; i < N; ++i) perm[i] = i;
    Multivector out(ctx.p_space());
    do {
        int inv = 0;
        for (size_t i = 0; i < N; ++i)
            for (size_t j = i + 1; j < N; ++j)
                if (perm[i] > perm[j]) ++inv;
        Multivector term = u[perm[0]][perm[1]];
        for (size_t i = 1; i < m; ++i) term = cliff_mul(term, u[perm[2 * i]][perm[2 * i + 1]]);
        if (inv % 2) term *= Scalar(-1);
        out += term;
    } while (std::next_permutation(perm.begin(), perm.end()));

    Scalar norm(1);
    for (size_t i = 1; i <= m; ++i) norm = norm * Scalar((long)(2 * i));
    out *= norm.inverse();
    return out;
}

// distinct rational eigenvalues of Z and its Lagrange idempotents
std::pair<std::vector<Scalar>, std::vector<Multivector>>
spectral_idempotents(const QuadraticSpace* sp, const Multivector& Z) {
    // minimal polynomial by the first linear dependence among powers of Z
    std::vector<Multivector> powers{Multivector::scalar(sp, Scalar(1))};
    std::vector<Scalar> mp; // Z^d = sum_j mp[j] Z^j at the first dependence
    for (int d = 1;; ++d) {
        powers.push_back(cliff_mul(powers.back(), Z));
        std::map<Multivector::Mask, size_t> coord;
        for (const Multivector& p : powers)
            for (const auto& [m, c] : p.terms()) coord.emplace(m, coord.size());
        Matrix A(coord.size(), d);
        std::vector<Scalar> b(coord.size());
        for (int j = 0; j < d; ++j)
            for (const auto& [m, c] : powers[j].terms()) A.at(coord[m], j) = c;
        for (const auto& [m, c] : powers[d].terms()) b[coord[m]] = c;
        auto sol = A.solve(b);
        if (sol) {
            mp = *sol; // Z^d = sum_j sol[j] Z^j
            break;
        }
        if (d > 8) throw std::logic_error("isotypic_idempotents: minimal polynomial too large");
    }

    // rational roots of x^d - sum_j mp[j] x^j, all distinct
    size_t d = mp.size();
    std::vector<Scalar> roots;
    if (d == 1) {
        roots.push_back(mp[0]);
    } else if (d == 2) {
        // x^2 - mp[1] x - mp[0]
        mpq_class tr = mp[1].re(), det = -mp[0].re();
        mpq_class disc = tr * tr - 4 * det;
        if (disc == 0) throw std::logic_error("isotypic_idempotents: repeated eigenvalue");
        if (disc < 0) throw std::logic_error("isotypic_idempotents: irrational eigenvalues");
        mpz_class sn = sqrt(disc.get_num()), sd = sqrt(disc.get_den());
        if (sn * sn != disc.get_num() || sd * sd != disc.get_den())
            throw std::logic_error("isotypic_idempotents: irrational eigenvalues");
        mpq_class s(sn, sd);
        s.canonicalize();
        roots.push_back(Scalar((tr + s) / 2));
        roots.push_back(Scalar((tr - s) / 2));
    } else {
        throw std::logic_error("isotypic_idempotents: unexpected minimal polynomial degree");
    }

    std::vector<Multivector> prs;
    for (size_t i = 0; i < roots.size(); ++i) {
        Multivector pr = Multivector::scalar(sp, Scalar(1));
        for (size_t j = 0; j < roots.size(); ++j) {
            if (j == i) continue;
            Multivector f = Z - Multivector::scalar(sp, roots[j]);
            f *= (roots[i] - roots[j]).inverse();
            pr = cliff_mul(pr, f);
        }
        prs.push_back(std::move(pr));
    }
    return {std::move(roots), std::move(prs)};
}

} // namespace

InvariantBasis invariants_wedge_graded(const PairContext& ctx) {
    InvariantBasis out;
    out.flavor = InvariantFlavor::WEDGE_GRADED;
    for (const auto& bucket : zero_weight_masks(ctx)) {
        std::vector<Multivector> inv = invariant_kernel(ctx, bucket);
        out.gradedDims.push_back(inv.size());
        for (Multivector& v : inv) out.elements.push_back(std::move(v));
    }
    return out;
}

InvariantBasis invariants_cl(const PairContext& ctx, InvariantFlavor flavor) {
    if (flavor == InvariantFlavor::WEDGE_GRADED) return invariants_wedge_graded(ctx);
    InvariantBasis graded = invariants_wedge_graded(ctx);
    InvariantBasis out;
    out.flavor = flavor;
    out.elements = std::move(graded.elements);
    if (flavor == InvariantFlavor::CL_K_GROUP)
        out.elements = group_fixed_subspace(ctx, out.elements);
    return out;
}

Multivector casimir_image(const PairContext& ctx) {
    const SymmetricPair& pair = ctx.pair();
    const LieAlgebra& g = pair.g();
    size_t dk = pair.dim_k();
    Matrix gk(dk, dk);
    for (size_t i = 0; i < dk; ++i)
        for (size_t j = 0; j < dk; ++j) gk.at(i, j) = g.gram().at(pair.kIdx()[i], pair.kIdx()[j]);
    auto inv = gk.inverse();
    if (!inv) throw std::logic_error("casimir_image: degenerate form on k");
    Multivector out(ctx.p_space());
    for (size_t i = 0; i < dk; ++i) {
        std::vector<Scalar> dual(dk);
        for (size_t j = 0; j < dk; ++j) dual[j] = inv->at(j, i);
        out += cliff_mul(ctx.alpha_basis(i), ctx.alpha(dual));
    }
    return out;
}

ProjectionAlgebra isotypic_idempotents(const PairContext& ctx) {
    const SymmetricPair& pair = ctx.pair();
    const QuadraticSpace* sp = ctx.p_space();
    Multivector C = casimir_image(ctx);
    auto [roots, prs] = spectral_idempotents(sp, C);

    // the quadratic Casimir takes equal values on k-types conjugate under
    // an outer automorphism; for the even orthogonal subalgebra the odd
    // central element of U(k) separates them, so refine by its spectrum
    if (pair.family() == PairFamily::AI && pair.rep_n() % 2 == 0) {
        Multivector P = pfaffian_image(ctx);
        Multivector P2 = cliff_mul(P, P);
        if (!(P2 == Multivector::scalar(sp, P2.scalar_part())))
            throw std::logic_error("isotypic_idempotents: pfaffian square is not scalar");
        if (P2.scalar_part().re() < 0) P *= Scalar(0, 1);
        auto [proots, pprs] = spectral_idempotents(sp, P);
        std::vector<Scalar> roots2;
        std::vector<Multivector> prs2;
        for (size_t i = 0; i < prs.size(); ++i)
            for (size_t j = 0; j < pprs.size(); ++j) {
                Multivector prod = cliff_mul(prs[i], pprs[j]);
                if (prod.is_zero()) continue;
                roots2.push_back(roots[i]);
                prs2.push_back(std::move(prod));
            }
        roots = std::move(roots2);
        prs = std::move(prs2);
    }

    ProjectionAlgebra out;
    out.eigenvalues = std::move(roots);
    out.idempotents = std::move(prs);
    for (size_t i = 0; i < out.idempotents.size(); ++i)
        out.labels.push_back("pr" + std::to_string(i + 1));

    // forced by construction, asserted exactly
    Multivector sum(sp);
    for (size_t i = 0; i < out.idempotents.size(); ++i) {
        sum += out.idempotents[i];
        if (!(cliff_mul(out.idempotents[i], out.idempotents[i]) == out.idempotents[i]))
            throw std::logic_error("isotypic_idempotents: idempotency failed");
        for (size_t j = i + 1; j < out.idempotents.size(); ++j)
            if (!cliff_mul(out.idempotents[i], out.idempotents[j]).is_zero())
                throw std::logic_error("isotypic_idempotents: products do not vanish");
    }
    if (!(sum == Multivector::scalar(sp, Scalar(1))))
        throw std::logic_error("isotypic_idempotents: idempotents do not sum to one");
    return out;
}

bool in_alpha_image(const PairContext& ctx, const Multivector& target) {
    if (target.is_zero()) return true;
    const SymmetricPair& pair = ctx.pair();
    size_t nt = 0;
    std::vector<long> w = integer_p_weights(ctx, nt);

    auto mask_weight = [&](Multivector::Mask m) {
        std::array<long, 4> acc{0, 0, 0, 0};
        while (m) {
            int i = std::countr_zero(m);
            m &= m - 1;
            for (size_t r = 0; r < nt; ++r) acc[r] += w[i * nt + r];
        }
        return acc;
    };

    std::array<long, 4> lambda = mask_weight(target.terms().begin()->first);
    for (const auto& [m, c] : target.terms())
        if (mask_weight(m) != lambda)
            throw std::invalid_argument("in_alpha_image: target weight is not pure");

    auto weight_component = [&](const Multivector& v) {
        Multivector out(ctx.p_space());
        for (const auto& [m, c] : v.terms())
            if (mask_weight(m) == lambda) out.add_term(m, c);
        return out;
    };

    MonomialSpan full, proj;
    std::vector<Multivector> frontier{Multivector::scalar(ctx.p_space(), Scalar(1))};
    full.insert(frontier[0]);
    proj.insert(weight_component(frontier[0]));
    if (proj.contains(target)) return true;

    while (!frontier.empty()) {
        std::vector<Multivector> next;
        for (const Multivector& v : frontier)
            for (size_t k = 0; k < pair.dim_k(); ++k) {
                Multivector prod = cliff_mul(ctx.alpha_basis(k), v);
                if (!full.insert(prod)) continue;
                proj.insert(weight_component(prod));
                if (proj.contains(target)) return true;
                next.push_back(std::move(prod));
            }
        frontier = std::move(next);
    }
    return proj.contains(target);
}

} // namespace cliffpair
