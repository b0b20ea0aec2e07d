#pragma once

#include "cliffpair/clifford.hpp"
#include "cliffpair/spin.hpp"

#include <memory>

namespace cliffpair {

// Data of an isotropic decomposition V = V+ (+) a (+) V- with dual bases:
// the scaled vector dualScale[i] * basis(minus[i]) is the B-dual of
// basis(plus[i]); indices are local to the space.
struct IsotropicData {
    const QuadraticSpace* space = nullptr;
    std::vector<uint32_t> plus, minus;
    std::vector<Scalar> dualScale;
    std::vector<uint32_t> abasis;
};

// Projection P = prod_i e_i f_i / 2 over the dual pairs, and the induced
// map x -> P x P solved against the conjugated Cl(a) monomial basis.
class HCMap {
public:
    explicit HCMap(IsotropicData data);

    const Multivector& Pw() const { return Pw_; }
    const QuadraticSpace* a_space() const { return aspace_.get(); }
    const std::vector<Multivector>& cla_basis() const { return claBasis_; }
    const std::vector<Multivector>& conjugated_basis() const { return conjugated_; }

    // P x P; linear in x, cheap via the commuting pair factors
    Multivector sandwich(const Multivector& x) const;
    // coordinates of P x P in the conjugated basis, returned over Cl(a);
    // *exact reports whether the sandwich lay in the span
    Multivector apply(const Multivector& x, bool* exact = nullptr) const;

private:
    IsotropicData data_;
    std::shared_ptr<QuadraticSpace> aspace_;
    Multivector Pw_;
    std::vector<Multivector> pairFactors_; // the commuting idempotents e_i f_i / 2
    std::vector<Multivector> claBasis_;    // Clifford monomials over a
    std::vector<Multivector> conjugated_;  // their images under x -> P x P
};

// Harish-Chandra data of the positive system w of the pair
HCMap build_hc(const PairContext& ctx, size_t w);

// Gram matrix B~(phi_i, phi_j) of the primitives; the Clifford
// anticommutators are asserted to be the matching scalars
Matrix primitive_gram(const PairContext& ctx, const std::vector<Multivector>& primitives);

struct MainTheoremReport {
    std::string pair_id;
    bool a_pass = false, b_pass = false, c_pass = false, d_pass = false;
    std::vector<std::string> notes;
    bool all_pass() const { return a_pass && b_pass && c_pass && d_pass; }
};

MainTheoremReport verify_main_theorem(const PairContext& ctx);

} // namespace cliffpair
