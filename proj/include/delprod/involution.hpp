#ifndef DELPROD_INVOLUTION_HPP
#define DELPROD_INVOLUTION_HPP

#include "delprod/cw_complex.hpp"
#include "delprod/simplicial_complex.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace delprod {

/// A CW complex with a cellular involution that is free on cells and a chain map.
class FreeInvolutionComplex
{
  public:
    /// Throws Error if t is not an involution of cw, fixes a cell, or is not a chain map.
    FreeInvolutionComplex(CWComplexPtr cw, CellularMap t);

    const CWComplex& cw() const noexcept { return *cw_; }
    const CWComplexPtr& cw_ptr() const noexcept { return cw_; }
    const CellularMap& involution() const noexcept { return t_; }

  private:
    CWComplexPtr cw_;
    CellularMap t_;
};

/**
 * The involution of a simplicial complex induced by a vertex involution
 * (given by labels; unlisted vertices are fixed). Each simplex goes to the
 * sorted image simplex, with the sign of the sorting permutation.
 */
FreeInvolutionComplex simplicial_involution(const SimplicialComplex& k,
                                            const std::map<std::string, std::string>& vertex_map);

/// The two lifts of a quotient cell: t(representative) = sign * partner.
struct CoverCell
{
    std::uint32_t representative;
    std::uint32_t partner;
    std::int32_t sign;
};

/**
 * Orbit complex of a free involution. Each orbit is represented by its
 * lift with the smaller index, and a quotient cell is oriented like its
 * representative. A face of a representative that is the partner lift of
 * an orbit enters the quotient boundary with the extra stored sign.
 */
class QuotientCover
{
  public:
    explicit QuotientCover(FreeInvolutionComplex cover);

    const FreeInvolutionComplex& cover() const noexcept { return cover_; }
    const CWComplex& quotient() const noexcept { return *quotient_; }
    const CWComplexPtr& quotient_ptr() const noexcept { return quotient_; }

    const CoverCell& lifts(int d, std::size_t orbit) const;
    std::uint32_t orbit_of(int d, std::size_t cell) const;
    bool is_representative(int d, std::size_t cell) const;

    /// Orbits whose lifts lie in a t-invariant subcomplex of the cover; throws if it is not invariant.
    std::vector<std::vector<char>> orbit_mask(const std::vector<std::vector<char>>& cover_mask) const;

  private:
    FreeInvolutionComplex cover_;
    CWComplexPtr quotient_;
    std::vector<std::vector<CoverCell>> lifts_;
    std::vector<std::vector<std::uint32_t>> orbit_;
};

/// Throws Error when the induced cell structure on the quotient is not regular.
QuotientCover quotient_cover(const FreeInvolutionComplex& f);

} // namespace delprod

#endif
