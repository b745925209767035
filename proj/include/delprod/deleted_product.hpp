#ifndef DELPROD_DELETED_PRODUCT_HPP
#define DELPROD_DELETED_PRODUCT_HPP

#include "delprod/cw_complex.hpp"
#include "delprod/simplicial_complex.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace delprod {

/// The factors of a product cell sigma x tau.
struct ProductCell
{
    Simplex first;
    Simplex second;

    int dimension() const noexcept { return first.dimension() + second.dimension(); }
    friend auto operator<=>(const ProductCell&, const ProductCell&) = default;
};

/**
 * Cells sigma x tau of K x K with sigma and tau vertex-disjoint, ordered by
 * dimension and then lexicographically by (sigma, tau). The orientation is
 * that of sigma followed by tau, so
 *   d(sigma x tau) = d(sigma) x tau + (-1)^{dim sigma} sigma x d(tau).
 */
class DeletedProductComplex
{
  public:
    const SimplicialComplex& source() const noexcept { return source_; }
    const CWComplexPtr& cw() const noexcept { return cw_; }
    /// (sigma, tau) -> (-1)^{pq} (tau, sigma).
    const CellularMap& involution() const noexcept { return *involution_; }
    const ProductCell& factors(int d, std::size_t cell) const;
    std::optional<std::size_t> index_of(const ProductCell& cell) const;

    friend DeletedProductComplex deleted_product(const SimplicialComplex& k);

  private:
    SimplicialComplex source_;
    CWComplexPtr cw_;
    std::shared_ptr<const CellularMap> involution_;
    std::vector<std::vector<ProductCell>> cells_;
};

DeletedProductComplex deleted_product(const SimplicialComplex& k);

inline const CellularMap& swap_involution(const DeletedProductComplex& d) { return d.involution(); }

/// The deleted product of n with the cells of m's deleted product marked as a subcomplex.
struct DeletedPair
{
    DeletedProductComplex product;
    CellularPair pair;
};

/// Throws Error if m is not a subcomplex of n (vertices matched by label).
DeletedPair deleted_pair(const SimplicialComplex& n, const SimplicialComplex& m);

/// One line per cell: "<d>.<i> dim <d> [<name>] faces <sign><d-1>.<j> ...".
std::string incidence_document(const CWComplex& cw);

} // namespace delprod

#endif
