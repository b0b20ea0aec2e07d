#include "cliffpair/hc.hpp"

#include "cliffpair/catalog.hpp"
#include "cliffpair/coinvariants.hpp"
#include "cliffpair/transgress.hpp"

#include <map>
#include <stdexcept>

namespace cliffpair {

namespace {

bool all_independent(const std::vector<Multivector>& vs) {
    MonomialSpan span;
    for (const Multivector& v : vs)
        if (!span.insert(v)) return false;
    return true;
}

} // namespace

HCMap::HCMap(IsotropicData data) : data_(std::move(data)) {
    const QuadraticSpace* sp = data_.space;
    size_t p = data_.plus.size();

    Pw_ = Multivector::scalar(sp, Scalar(1));
    for (size_t i = 0; i < p; ++i) {
        Multivector e = Multivector::basis_vector(sp, data_.plus[i]);
        Multivector f = Multivector::basis_vector(sp, data_.minus[i]);
        f *= data_.dualScale[i];
        Multivector factor = cliff_mul(e, f);
        factor *= Scalar(1, 2);
        pairFactors_.push_back(factor);
        Pw_ = cliff_mul(Pw_, factor);
    }

    if (!(cliff_mul(Pw_, Pw_) == Pw_)) throw std::logic_error("HCMap: projection is not idempotent");
    for (size_t i = 0; i < p; ++i) {
        if (!cliff_mul(Multivector::basis_vector(sp, data_.plus[i]), Pw_).is_zero())
            throw std::logic_error("HCMap: plus part does not annihilate the projection");
        if (!cliff_mul(Pw_, Multivector::basis_vector(sp, data_.minus[i])).is_zero())
            throw std::logic_error("HCMap: projection does not annihilate the minus part");
    }

    size_t da = data_.abasis.size();
    Matrix agram(da, da);
    std::vector<std::string> alabels;
    for (size_t i = 0; i < da; ++i) {
        alabels.push_back(sp->labels()[data_.abasis[i]]);
        for (size_t j = 0; j < da; ++j)
            agram.at(i, j) = sp->B(data_.abasis[i], data_.abasis[j]);
    }
    aspace_ = std::make_shared<QuadraticSpace>(std::move(agram), std::move(alabels));

    for (Multivector::Mask s = 0; s < (Multivector::Mask(1) << da); ++s) {
        Multivector mono = Multivector::scalar(sp, Scalar(1));
        for (size_t i = 0; i < da; ++i)
            if (s >> i & 1) mono = cliff_mul(mono, Multivector::basis_vector(sp, data_.abasis[i]));
        claBasis_.push_back(mono);
        conjugated_.push_back(sandwich(mono));
    }
    if (!all_independent(conjugated_))
        throw std::logic_error("HCMap: conjugated basis is linearly dependent");
}

Multivector HCMap::sandwich(const Multivector& x) const {
    Multivector y = x;
    for (const Multivector& f : pairFactors_) y = cliff_mul(f, cliff_mul(y, f));
    return y;
}

Multivector HCMap::apply(const Multivector& x, bool* exact) const {
    Multivector y = sandwich(x);
    size_t n = conjugated_.size();

    std::map<Multivector::Mask, size_t> coord;
    for (const Multivector& c : conjugated_)
        for (const auto& [m, v] : c.terms()) coord.emplace(m, coord.size());
    bool inside = true;
    for (const auto& [m, v] : y.terms())
        if (!coord.count(m)) inside = false;

    Matrix A(coord.size(), n);
    for (size_t j = 0; j < n; ++j)
        for (const auto& [m, v] : conjugated_[j].terms()) A.at(coord.at(m), j) = v;
    std::vector<Scalar> b(coord.size());
    if (inside)
        for (const auto& [m, v] : y.terms()) b[coord.at(m)] = v;

    Multivector out(aspace_.get());
    auto sol = inside ? A.solve(b) : std::nullopt;
    if (sol) {
        for (size_t j = 0; j < n; ++j) out.add_term((Multivector::Mask)j, (*sol)[j]);
        if (exact) *exact = true;
    } else {
        if (exact) *exact = false;
    }
    return out;
}

HCMap build_hc(const PairContext& ctx, size_t w) {
    const SymmetricPair& pair = ctx.pair();
    if (w >= pair.pos_systems().size()) throw std::out_of_range("build_hc: no such positive system");
    const PosSystem& ps = pair.pos_systems()[w];
    IsotropicData d;
    d.space = ctx.p_space();
    for (uint32_t g : ps.plus) d.plus.push_back((uint32_t)pair.p_local(g));
    for (uint32_t g : ps.minus) d.minus.push_back((uint32_t)pair.p_local(g));
    d.dualScale = ps.dualScale;
    for (uint32_t g : pair.aIdx()) d.abasis.push_back((uint32_t)pair.p_local(g));
    return HCMap(std::move(d));
}

Matrix primitive_gram(const PairContext& ctx, const std::vector<Multivector>& primitives) {
    size_t n = primitives.size();
    Matrix G(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            G.at(i, j) = form_Btilde(primitives[i], primitives[j]);
            Multivector anti = cliff_mul(primitives[i], primitives[j]) +
                               cliff_mul(primitives[j], primitives[i]);
            Multivector expect = Multivector::scalar(ctx.p_space(), G.at(i, j) + G.at(i, j));
            if (!(anti == expect))
                throw std::logic_error("primitive_gram: anticommutator is not the expected scalar");
        }
    return G;
}

MainTheoremReport verify_main_theorem(const PairContext& ctx) {
    const SymmetricPair& pair = ctx.pair();
    const QuadraticSpace* sp = ctx.p_space();
    MainTheoremReport rep;
    rep.pair_id = pair_id(pair);
    size_t da = pair.dim_a();

    std::vector<Multivector> prims = primitives_p(ctx);
    std::vector<Multivector> prods; // ordered Clifford products over subsets
    for (Multivector::Mask s = 0; s < (Multivector::Mask(1) << da); ++s) {
        Multivector q = Multivector::scalar(sp, Scalar(1));
        for (size_t i = 0; i < da; ++i)
            if (s >> i & 1) q = cliff_mul(q, prims[i]);
        prods.push_back(q);
    }

    // one graded run serves both flavors and part (d)
    InvariantBasis graded = invariants_wedge_graded(ctx);
    InvariantBasis invk;
    invk.flavor = InvariantFlavor::CL_K_LIE;
    invk.elements = graded.elements;
    InvariantBasis invK;
    invK.flavor = InvariantFlavor::CL_K_GROUP;
    invK.elements = group_fixed_subspace(ctx, graded.elements);
    ProjectionAlgebra pralg = isotypic_idempotents(ctx);

    // (a) primitive products are a basis of Cl(p)^K with Clifford relations
    // given by the Gram form, and HC takes primitives to independent
    // linear elements of Cl(a)
    bool a_ok = prods.size() == invK.elements.size() && all_independent(prods);
    {
        MonomialSpan spanK;
        for (const Multivector& b : invK.elements) spanK.insert(b);
        for (const Multivector& q : prods)
            if (!spanK.contains(q)) a_ok = false;
    }
    try {
        Matrix G = primitive_gram(ctx, prims);
        if (G.rank() != prims.size()) {
            a_ok = false;
            rep.notes.push_back("primitive Gram matrix is degenerate");
        }
    } catch (const std::exception& e) {
        a_ok = false;
        rep.notes.push_back(e.what());
    }
    HCMap hc = build_hc(ctx, 0);
    {
        std::vector<Multivector> imgs;
        for (const Multivector& phi : prims) {
            bool exact = false;
            Multivector y = hc.apply(phi, &exact);
            if (!exact || y.is_zero() || !(y == y.graded_part(1))) a_ok = false;
            imgs.push_back(std::move(y));
        }
        if (!all_independent(imgs)) a_ok = false;
        // bijectivity of HC on Cl(p)^K
        std::vector<Multivector> invImgs;
        for (const Multivector& b : invK.elements) {
            bool exact = false;
            invImgs.push_back(hc.apply(b, &exact));
            if (!exact) a_ok = false;
        }
        MonomialSpan span;
        for (const Multivector& y : invImgs) span.insert(y);
        if (span.dim() != invK.elements.size()) a_ok = false;
    }
    rep.a_pass = a_ok;

    // (b) primitive products times idempotents form a basis of Cl(p)^k
    {
        std::vector<Multivector> basis;
        for (const Multivector& q : prods)
            for (const Multivector& pr : pralg.idempotents) basis.push_back(cliff_mul(q, pr));
        bool b_ok = basis.size() == invk.elements.size() && all_independent(basis);
        MonomialSpan spank;
        for (const Multivector& b : invk.elements) spank.insert(b);
        for (const Multivector& b : basis)
            if (!spank.contains(b)) b_ok = false;
        rep.b_pass = b_ok;
    }

    // (c) the coinvariant quotient at rho counts the idempotents
    {
        PolyQuotientReport q = coinvariant_quotient(pair, QuotientMode::AT_RHO);
        rep.c_pass = q.dim == pralg.idempotents.size();
    }

    // (d) Hilbert series of the graded invariants equals the primitive
    // exterior factor times the degree-doubled coinvariant series
    {
        std::vector<long> rhs{1};
        for (const Multivector& phi : prims) {
            size_t d = (size_t)phi.degree();
            std::vector<long> next(rhs.size() + d, 0);
            for (size_t i = 0; i < rhs.size(); ++i) {
                next[i] += rhs[i];
                next[i + d] += rhs[i];
            }
            rhs = std::move(next);
        }
        PolyQuotientReport q = coinvariant_quotient(pair, QuotientMode::GRADED);
        std::vector<long> series(rhs.size() + 4 * (q.graded.empty() ? 0 : q.graded.rbegin()->first), 0);
        for (const auto& [d, c] : q.graded)
            for (size_t i = 0; i < rhs.size(); ++i) series[i + 2 * (size_t)d] += rhs[i] * (long)c;
        bool d_ok = true;
        for (size_t j = 0; j < std::max(series.size(), graded.gradedDims.size()); ++j) {
            long lhs = j < graded.gradedDims.size() ? (long)graded.gradedDims[j] : 0;
            long r = j < series.size() ? series[j] : 0;
            if (lhs != r) d_ok = false;
        }
        rep.d_pass = d_ok;
    }
    return rep;
}

} // namespace cliffpair
