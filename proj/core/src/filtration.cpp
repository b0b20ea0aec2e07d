#include "cliffpair/filtration.hpp"

#include "cliffpair/transgress.hpp"

#include <bit>
#include <stdexcept>

namespace cliffpair {

namespace {

std::vector<Scalar> principal_vector(const LieAlgebra& g, const Scalar& scale) {
    if (g.name().rfind("sl(", 0) != 0)
        throw std::invalid_argument(
            "principal_coadjoint: only type A is implemented; the dual root "
            "system of " + g.name() + " is out of scope");
    // solve for the basis coordinates of the superdiagonal matrix; the
    // adapted bases of the pairs label the root vectors differently
    size_t n = g.rep_dim(), d = g.dim();
    Matrix A(n * n, d);
    for (size_t j = 0; j < d; ++j)
        for (size_t x = 0; x < n; ++x)
            for (size_t y = 0; y < n; ++y) A.at(x * n + y, j) = g.rep(j).at(x, y);
    std::vector<Scalar> b(n * n);
    for (size_t i = 0; i + 1 < n; ++i) b[i * n + (i + 1)] = scale;
    auto sol = A.solve(b);
    if (!sol)
        throw std::logic_error("principal_coadjoint: principal nilpotent is not in the span");
    return *sol;
}

// classify each basis element by the triangular shape of its rep matrix
struct TriangularSplit {
    std::vector<uint32_t> upper, lower, diagonal;
};

TriangularSplit classify_basis(const LieAlgebra& g) {
    TriangularSplit out;
    size_t n = g.rep_dim();
    for (uint32_t j = 0; j < g.dim(); ++j) {
        bool hasUp = false, hasLow = false, hasDiag = false;
        for (size_t x = 0; x < n; ++x)
            for (size_t y = 0; y < n; ++y) {
                if (g.rep(j).at(x, y).is_zero()) continue;
                if (x < y) hasUp = true;
                else if (x > y) hasLow = true;
                else hasDiag = true;
            }
        if (hasUp + hasLow + hasDiag != 1)
            throw std::logic_error("filtration: basis element of mixed triangular shape");
        if (hasUp) out.upper.push_back(j);
        else if (hasLow) out.lower.push_back(j);
        else out.diagonal.push_back(j);
    }
    return out;
}

// dual pairs of root vectors across the triangular splitting
IsotropicData triangular_split(const LieAlgebra& g, const QuadraticSpace* gspace) {
    TriangularSplit cls = classify_basis(g);
    IsotropicData d;
    d.space = gspace;
    for (uint32_t u : cls.upper) {
        uint32_t partner = 0;
        Scalar val;
        size_t hits = 0;
        for (uint32_t l : cls.lower) {
            const Scalar& b = g.gram().at(u, l);
            if (!b.is_zero()) {
                partner = l;
                val = b;
                ++hits;
            }
        }
        if (hits != 1) throw std::logic_error("filtration: root vector without a unique dual");
        d.plus.push_back(u);
        d.minus.push_back(partner);
        d.dualScale.push_back(val.inverse());
    }
    d.abasis = cls.diagonal;
    return d;
}

std::vector<std::pair<int, size_t>> jump_table(const std::vector<size_t>& dims) {
    std::vector<std::pair<int, size_t>> jumps;
    size_t prev = 0;
    for (size_t m = 0; m < dims.size(); ++m) {
        if (dims[m] > prev) jumps.emplace_back((int)m, dims[m]);
        prev = dims[m];
    }
    return jumps;
}

// degree-1 coordinates of the projection image of one primitive
std::vector<Scalar> linear_coordinates(const Multivector& img, size_t dim) {
    std::vector<Scalar> row(dim);
    for (const auto& [m, c] : img.terms()) {
        if (std::popcount(m) != 1)
            throw std::logic_error("filtration: projection image is not linear");
        row[std::countr_zero(m)] = c;
    }
    return row;
}

// dims[m] of the span of rows whose primitive degree is <= 2m+1
std::vector<size_t> span_dims(const std::vector<int>& degs,
                              const std::vector<std::vector<Scalar>>& rows) {
    int maxm = 0;
    for (int d : degs) maxm = std::max(maxm, (d - 1) / 2);
    std::vector<size_t> dims;
    for (int m = 0; m <= maxm; ++m) {
        SparseRowSpace span;
        for (size_t i = 0; i < rows.size(); ++i) {
            if ((degs[i] - 1) / 2 > m) continue;
            SparseRow r;
            for (uint32_t c = 0; c < rows[i].size(); ++c)
                if (!rows[i][c].is_zero()) r.emplace_back(c, rows[i][c]);
            span.insert(std::move(r));
        }
        dims.push_back(span.dim());
    }
    return dims;
}

FiltrationReport make_report(FiltrationSpace space, std::string id,
                             std::vector<size_t> scriptDims, std::vector<size_t> fDims) {
    FiltrationReport rep;
    rep.space = space;
    rep.id = std::move(id);
    rep.jumpsScriptF = jump_table(scriptDims);
    rep.jumpsF = jump_table(fDims);
    size_t M = std::max(scriptDims.size(), fDims.size());
    rep.equal = true;
    for (size_t m = 0; m < M; ++m) {
        size_t a = m < scriptDims.size() ? scriptDims[m] : scriptDims.back();
        size_t b = m < fDims.size() ? fDims[m] : fDims.back();
        if (a != b) rep.equal = false;
    }
    return rep;
}

} // namespace

Matrix principal_coadjoint(const LieAlgebra& g, const Scalar& scale) {
    Matrix ad = g.ad(principal_vector(g, scale));
    size_t d = g.dim();
    Matrix out(d, d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) out.at(i, j) = ad.at(j, i) * Scalar(-1);
    return out;
}

std::vector<size_t> script_filtration_dims(const LieAlgebra& g,
                                           const std::vector<uint32_t>& subspace,
                                           const Scalar& scale) {
    Matrix adstar = principal_coadjoint(g, scale);
    size_t d = g.dim(), ns = subspace.size();

    // B-dual coordinates of the subspace functionals, as columns
    Matrix S(d, ns);
    for (size_t r = 0; r < d; ++r)
        for (size_t c = 0; c < ns; ++c) S.at(r, c) = g.gram().at(r, subspace[c]);

    std::vector<size_t> dims;
    Matrix K = adstar; // (ad*)^{m+1}
    for (;;) {
        dims.push_back(ns - (K * S).rank());
        if (dims.back() == ns) break;
        if (dims.size() > 2 * d)
            throw std::logic_error("script_filtration_dims: coadjoint operator is not nilpotent");
        K = K * adstar;
    }
    return dims;
}

AbsoluteImages hc_primitive_images_absolute(const LieAlgebra& g) {
    QuadraticSpace gspace = make_g_space(g);
    IsotropicData d = triangular_split(g, &gspace);
    AbsoluteImages out;
    out.hBasis = d.abasis;
    HCMap hc(std::move(d));

    for (int k = 2; k <= (int)g.rep_dim(); ++k) {
        Multivector prim = transgress_power_sum(g, k, &gspace);
        bool exact = false;
        Multivector img = hc.apply(prim, &exact);
        if (!exact) throw std::logic_error("filtration: projection left the invariant span");
        out.images.push_back(linear_coordinates(img, out.hBasis.size()));
    }
    return out;
}

std::vector<std::vector<Scalar>> hc_primitive_images_relative(const PairContext& ctx) {
    HCMap hc = build_hc(ctx, 0);
    std::vector<std::vector<Scalar>> out;
    for (const Multivector& phi : primitives_p(ctx)) {
        bool exact = false;
        Multivector img = hc.apply(phi, &exact);
        if (!exact) throw std::logic_error("filtration: projection left the invariant span");
        out.push_back(linear_coordinates(img, ctx.pair().dim_a()));
    }
    return out;
}

std::vector<size_t> hc_filtration_dims_absolute(const LieAlgebra& g) {
    AbsoluteImages abs = hc_primitive_images_absolute(g);
    std::vector<int> degs;
    for (int k = 2; k <= (int)g.rep_dim(); ++k) degs.push_back(2 * k - 1);
    return span_dims(degs, abs.images);
}

std::vector<size_t> hc_filtration_dims_relative(const PairContext& ctx) {
    std::vector<std::vector<Scalar>> rows = hc_primitive_images_relative(ctx);
    std::vector<int> degs;
    for (size_t j = 1; j <= rows.size(); ++j) degs.push_back(2 * (int)(2 * j) + 1);
    return span_dims(degs, rows);
}

FiltrationReport verify_kostant_absolute(const LieAlgebra& g) {
    std::vector<uint32_t> h = classify_basis(g).diagonal;
    return make_report(FiltrationSpace::H, g.name(), script_filtration_dims(g, h),
                       hc_filtration_dims_absolute(g));
}

FiltrationReport verify_kostant(const PairContext& ctx) {
    const SymmetricPair& pair = ctx.pair();
    std::vector<uint32_t> a(pair.aIdx().begin(), pair.aIdx().end());
    return make_report(FiltrationSpace::A, pair.g().name(),
                       script_filtration_dims(pair.g(), a), hc_filtration_dims_relative(ctx));
}

} // namespace cliffpair
