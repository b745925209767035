#ifndef DELPROD_TWISTED_HPP
#define DELPROD_TWISTED_HPP

#include "delprod/abelian_group.hpp"
#include "delprod/chain_complex.hpp"
#include "delprod/involution.hpp"
#include "delprod/local_system.hpp"

#include <vector>

namespace delprod {

/**
 * Equivariant cochains of the cover with values in (G, phi), written on the
 * representative cells: u(t x) = phi u(x). Its cohomology is H^*(X'; G_phi).
 * An incidence of a representative with the partner lift of a face
 * contributes c * sign * phi instead of c * id.
 */
CochainComplex twisted_cochain_complex(const QuotientCover& q, const LocalSystem& g);

/// The cochains vanishing on the orbits of a t-invariant subcomplex of the cover.
CochainComplex twisted_relative_cochain_complex(const QuotientCover& q, const std::vector<std::vector<char>>& cover_mask,
                                                const LocalSystem& g);

AbelianGroup twisted_cohomology(const QuotientCover& q, const LocalSystem& g, int p, const ComputeOptions& options = {});
std::vector<AbelianGroup> twisted_cohomology_groups(const QuotientCover& q, const LocalSystem& g, int p_max,
                                                    const ComputeOptions& options = {});
AbelianGroup twisted_relative_cohomology(const QuotientCover& q, const std::vector<std::vector<char>>& cover_mask,
                                         const LocalSystem& g, int p, const ComputeOptions& options = {});

/// H^p(X; G) of the cover itself, with the involution ignored.
AbelianGroup cover_cohomology(const QuotientCover& q, const LocalSystem& g, int p, const ComputeOptions& options = {});

} // namespace delprod

#endif
