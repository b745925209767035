#ifndef DELPROD_SMITH_HPP
#define DELPROD_SMITH_HPP

#include "delprod/abelian_group.hpp"
#include "delprod/integer.hpp"
#include "delprod/sparse_matrix.hpp"

#include <cstddef>
#include <vector>

namespace delprod {

/**
 * U * A * V = D with U, V unimodular and D = diag(d_1, ..., d_r, 0, ...),
 * d_i > 0 and d_i | d_{i+1}. left_inverse is U^{-1}, kept because lattice
 * bases are read off its columns.
 */
struct SmithNormalForm
{
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Integer> diagonal;
    SparseIntMatrix left;
    SparseIntMatrix left_inverse;
    SparseIntMatrix right;

    std::size_t rank() const noexcept { return diagonal.size(); }
    SparseIntMatrix diagonal_matrix() const;
};

/// Rank and the non-unit invariant factors, without transforms.
struct ElementaryDivisors
{
    std::size_t rank = 0;
    std::vector<Integer> torsion;
};

SmithNormalForm smith_normal_form(const SparseIntMatrix& a, const ComputeOptions& options = {});

/// Same diagonal as smith_normal_form, but skips every transform update. This
/// is the path used for large boundary matrices.
ElementaryDivisors elementary_divisors(const SparseIntMatrix& a, const ComputeOptions& options = {});

/// Z^rows / column span of A.
AbelianGroup cokernel(const SparseIntMatrix& a);

} // namespace delprod

#endif
