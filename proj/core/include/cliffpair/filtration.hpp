#pragma once

#include "cliffpair/hc.hpp"

namespace cliffpair {

enum class FiltrationSpace { H, A };

struct FiltrationReport {
    FiltrationSpace space = FiltrationSpace::H;
    std::string id;
    std::vector<std::pair<int, size_t>> jumpsScriptF; // (m, dim) where dim grows
    std::vector<std::pair<int, size_t>> jumpsF;
    bool equal = false;
};

// Coadjoint operator of the principal nilpotent (the sum of the simple
// root vectors, scaled) on g*, in B-dual coordinates. Only type A input
// is accepted; the catalog never needs a dual root system of another type.
Matrix principal_coadjoint(const LieAlgebra& g, const Scalar& scale = Scalar(1));

// dims[m] of { x in the span of the listed basis vectors | (ad*_e)^{m+1}
// kills the B-dual functional of x }, until the span is exhausted
std::vector<size_t> script_filtration_dims(const LieAlgebra& g,
                                           const std::vector<uint32_t>& subspace,
                                           const Scalar& scale = Scalar(1));

// Projection images of the transgressed primitives of g of degrees
// 3, 5, ..., 2n-1 inside Cl(g), as coordinate rows over the Cartan basis
// (the basis elements diagonal in the defining representation).
struct AbsoluteImages {
    std::vector<uint32_t> hBasis;            // g-basis indices of the Cartan
    std::vector<std::vector<Scalar>> images; // one row per primitive
};
AbsoluteImages hc_primitive_images_absolute(const LieAlgebra& g);

// a-coordinates (aIdx order) of the projection images of the pair primitives
std::vector<std::vector<Scalar>> hc_primitive_images_relative(const PairContext& ctx);

// dims[m] of the span of projection images of primitives of degree <= 2m+1
std::vector<size_t> hc_filtration_dims_absolute(const LieAlgebra& g);
std::vector<size_t> hc_filtration_dims_relative(const PairContext& ctx);

// jump tables of both filtrations on the Cartan of sl(n) and their equality
FiltrationReport verify_kostant_absolute(const LieAlgebra& g);
// the same on the split part a of the pair
FiltrationReport verify_kostant(const PairContext& ctx);

} // namespace cliffpair
