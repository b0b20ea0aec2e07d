#pragma once

#include "cliffpair/linalg.hpp"
#include "cliffpair/scalar.hpp"

#include <string>
#include <vector>

namespace cliffpair {

// Lie algebra given by structure constants over a fixed basis, together with
// the trace form of the defining representation and the defining matrices
// themselves (kept around for power sums and for building adapted bases).
class LieAlgebra {
public:
    size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const Matrix& gram() const { return gram_; }
    const Matrix& gram_inverse() const { return gram_inv_; }
    size_t rep_dim() const { return repN_; }
    const Matrix& rep(size_t i) const { return rep_[i]; }
    const std::string& name() const { return name_; }

    // [e_i, e_j] as a sparse coefficient list over the basis.
    const SparseRow& bracket(size_t i, size_t j) const { return bracket_[i * dim() + j]; }
    // [x, y] for coefficient vectors.
    std::vector<Scalar> bracket_vec(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;
    // ad(x) as a dim x dim matrix on coordinates.
    Matrix ad(const std::vector<Scalar>& x) const;
    Matrix ad_basis(size_t i) const;

    // Coordinates of e_i's dual basis vector F_i (B(F_i, e_j) = delta_ij).
    std::vector<Scalar> dual_basis_vector(size_t i) const;

    // Exact structural checks, used by tests.
    bool check_antisymmetry() const;
    bool check_jacobi() const;
    bool check_invariant_form() const;

    // Constructs the algebra from defining-representation matrices; brackets
    // and the trace form are computed exactly from the matrices.
    static LieAlgebra from_rep(std::string name, std::vector<std::string> labels,
                               std::vector<Matrix> rep);

private:
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<SparseRow> bracket_;
    Matrix gram_, gram_inv_;
    size_t repN_ = 0;
    std::vector<Matrix> rep_;
};

LieAlgebra build_sl(size_t n);
LieAlgebra build_so(size_t n);
LieAlgebra build_sp(size_t n2); // argument is 2n

} // namespace cliffpair
