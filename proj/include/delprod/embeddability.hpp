#ifndef DELPROD_EMBEDDABILITY_HPP
#define DELPROD_EMBEDDABILITY_HPP

#include "delprod/abelian_group.hpp"
#include "delprod/deleted_product.hpp"
#include "delprod/integer.hpp"
#include "delprod/involution.hpp"
#include "delprod/simplicial_complex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace delprod {

enum class Verdict
{
    MapExists,
    NoEquivariantMap,
    Unknown
};

const char* to_string(Verdict v);

struct DegreeGroup
{
    int degree = 0;
    AbelianGroup group;
};

/**
 * Answer about equivariant maps from the deleted product to S^{m-1}.
 * MapExists carries H^i = 0 for every listed degree i >= m; NoEquivariantMap
 * carries an index h >= m.
 */
struct EmbedVerdict
{
    int m = 0;
    Verdict verdict = Verdict::Unknown;
    std::optional<int> index;
    std::vector<DegreeGroup> groups;
    std::string note;
};

/// MapExists when H^i(deleted product; Z) = 0 for all i >= m, Unknown otherwise.
EmbedVerdict equivariant_map_sufficiency(const SimplicialComplex& k, int m, const ComputeOptions& options = {});
EmbedVerdict equivariant_map_sufficiency(const DeletedProductComplex& d, int m, const ComputeOptions& options = {});

/**
 * Largest h such that the h-fold iterated connecting map of the mod-2
 * sequence of the quotient is nonzero on the unit class of H^0. The
 * iteration runs on cochains over GF(2), where the twisting disappears.
 * Throws Error for an empty deleted product.
 */
int z2_index_lower_bound(const SimplicialComplex& k, const ComputeOptions& options = {});
int z2_index_lower_bound(const QuotientCover& q, const ComputeOptions& options = {});

EmbedVerdict embed_verdict(const SimplicialComplex& k, int m, const ComputeOptions& options = {});

struct Lemma1Report
{
    int n = 0;
    int l = 0;
    std::vector<DegreeGroup> groups; // H^i(N~, M~; Z) for every degree of N~
    bool passed = false;
};

/// Requires m a subcomplex of n and n pure.
Lemma1Report lemma1_vanishing_check(const SimplicialComplex& n, const SimplicialComplex& m, int l,
                                    const ComputeOptions& options = {});

struct ConnectivityReport
{
    bool closed = false;
    std::vector<DegreeGroup> groups; // H_i(N, dN)
    int d_max = -1;                  // largest d with H_0..H_d all zero, -1 if H_0 != 0
};

/// Throws PseudomanifoldError if the boundary cannot be formed.
ConnectivityReport connectivity_report(const SimplicialComplex& n, const ComputeOptions& options = {});

} // namespace delprod

#endif
