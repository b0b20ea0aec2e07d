#pragma once

#include "cliffpair/lie_algebra.hpp"

#include <cstdint>
#include <vector>

namespace cliffpair {

enum class PairFamily {
    AI,  // (sl(n), so(n)); K disconnected (O(2n)) when n is even
    AII, // (sl(2n), sp(2n))
};

// One choice w of positive system: p = p+ (+) a (+) p-. The minus list is
// ordered so that minus[i] scaled by dualScale[i] is the B-dual of plus[i].
struct PosSystem {
    std::vector<uint32_t> plus;
    std::vector<uint32_t> minus;
    std::vector<Scalar> dualScale;
};

class SymmetricPair {
public:
    static SymmetricPair build(PairFamily family, size_t n);

    const LieAlgebra& g() const { return g_; }
    PairFamily family() const { return family_; }
    size_t rep_n() const { return g_.rep_dim(); }

    const std::vector<uint32_t>& kIdx() const { return kIdx_; }
    const std::vector<uint32_t>& pIdx() const { return pIdx_; }
    const std::vector<uint32_t>& tIdx() const { return tIdx_; }
    const std::vector<uint32_t>& aIdx() const { return aIdx_; }
    size_t dim_k() const { return kIdx_.size(); }
    size_t dim_p() const { return pIdx_.size(); }
    size_t dim_t() const { return tIdx_.size(); }
    size_t dim_a() const { return aIdx_.size(); }
    size_t rank_g() const { return dim_t() + dim_a(); }
    size_t rank_k() const { return dim_t(); }

    const Matrix& theta() const { return theta_; }
    const std::vector<Matrix>& group_generators() const { return groupGenerators_; }

    // t-weight of basis vector i, as coordinates against the t-basis.
    const std::vector<Scalar>& t_weight(size_t i) const { return tWeights_[i]; }
    const std::vector<PosSystem>& pos_systems() const { return posSystems_; }

    // Half the sum of the t-weights of the p+_w basis (= w rho_g - rho_k).
    std::vector<Scalar> half_weight_sum(size_t w) const;

    // Position of global basis index within pIdx (local p coordinate).
    size_t p_local(uint32_t globalIdx) const;
    bool in_k(uint32_t idx) const { return idx < kIdx_.size(); }

private:
    LieAlgebra g_;
    PairFamily family_ = PairFamily::AI;
    std::vector<uint32_t> kIdx_, pIdx_, tIdx_, aIdx_;
    Matrix theta_;
    std::vector<Matrix> groupGenerators_;
    std::vector<std::vector<Scalar>> tWeights_;
    std::vector<PosSystem> posSystems_;
};

} // namespace cliffpair
