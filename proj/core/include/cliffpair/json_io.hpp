#pragma once

#include "cliffpair/coinvariants.hpp"
#include "cliffpair/filtration.hpp"
#include "cliffpair/spin.hpp"

#include <string>

namespace cliffpair {

inline constexpr const char* kJsonSchema = "cliffpair/1";

// All documents carry {"schema": "cliffpair/1"} and render every Scalar
// as its exact canonical text. Output is deterministic: fixed key order,
// two-space indentation, sorted term monomials.

std::string lie_algebra_to_json(const LieAlgebra& g);
// rebuilds from the stored defining matrices and checks that the stored
// brackets and Gram matrix match; throws std::runtime_error otherwise
LieAlgebra lie_algebra_from_json(const std::string& text);

std::string pair_to_json(const SymmetricPair& pair);
SymmetricPair pair_from_json(const std::string& text);

std::string multivector_to_json(const Multivector& v);

std::string info_json(const SymmetricPair& pair);
std::string primitives_json(const PairContext& ctx, const std::vector<Multivector>& prims);
std::string invariants_json(const PairContext& ctx, const InvariantBasis& basis);
std::string projection_algebra_json(const PairContext& ctx, const ProjectionAlgebra& pa);
std::string quotient_json(const SymmetricPair& pair, QuotientMode mode,
                          const PolyQuotientReport& rep);
// weight shifts and primitive images of every stored positive system
std::string hc_json(const PairContext& ctx);
std::string main_theorem_json(const MainTheoremReport& rep);
std::string filtration_json(const FiltrationReport& rep);

} // namespace cliffpair
