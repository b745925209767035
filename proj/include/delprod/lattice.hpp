#ifndef DELPROD_LATTICE_HPP
#define DELPROD_LATTICE_HPP

#include "delprod/integer.hpp"
#include "delprod/smith.hpp"
#include "delprod/sparse_matrix.hpp"

#include <cstddef>
#include <optional>

namespace delprod {

/**
 * Membership and coordinates in the lattice spanned by the columns of a
 * generator matrix, decided through its Smith form.
 */
class LatticeSolver
{
  public:
    explicit LatticeSolver(const SparseIntMatrix& generators);

    /**
     * The lattice {x : A x = 0}, from a single Smith form of A^T: rows r.. of U
     * are a basis and columns r.. of U^{-1} give coordinates. Coordinates
     * returned by solve() refer to basis().
     */
    static LatticeSolver kernel_of(const SparseIntMatrix& a, const ComputeOptions& options = {});

    std::size_t ambient_dimension() const noexcept { return snf_.rows; }
    std::size_t rank() const noexcept { return kernel_ ? snf_.rows - snf_.rank() : snf_.rank(); }

    /// Some x with generators * x == v, or nullopt when v is outside the lattice.
    std::optional<IntVector> solve(const IntVector& v) const;
    bool contains(const IntVector& v) const { return solve(v).has_value(); }

    /// Columns form a Z-basis of the lattice.
    SparseIntMatrix basis() const;

  private:
    LatticeSolver() = default;

    SmithNormalForm snf_;
    bool kernel_ = false;
};

/// Columns form a Z-basis of {x : A x = 0}.
SparseIntMatrix integer_kernel(const SparseIntMatrix& a);

enum class SubgroupRelation
{
    Equal,
    FirstInSecond,
    SecondInFirst,
    Incomparable
};

const char* to_string(SubgroupRelation r);

/// First generator of one subgroup that fails to lie in the other.
struct SubgroupWitness
{
    bool first_side = true;
    std::size_t generator = 0;
    IntVector vector;
};

struct SubgroupComparison
{
    SubgroupRelation relation = SubgroupRelation::Equal;
    std::optional<SubgroupWitness> witness;
};

/**
 * Compares the images of two generator sets (columns) in Z^n / relations.
 * Membership is tested modulo the relation columns in both directions.
 */
SubgroupComparison compare_subgroups(const SparseIntMatrix& first, const SparseIntMatrix& second,
                                     const SparseIntMatrix& relations);

inline SubgroupRelation subgroup_compare(const SparseIntMatrix& first, const SparseIntMatrix& second,
                                         const SparseIntMatrix& relations)
{
    return compare_subgroups(first, second, relations).relation;
}

/// Overload for explicit vector lists in Z^n with no relations.
SubgroupRelation subgroup_compare(const std::vector<IntVector>& first, const std::vector<IntVector>& second,
                                  std::size_t ambient_dimension);

} // namespace delprod

#endif
