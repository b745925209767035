#ifndef DELPROD_CATALOG_HPP
#define DELPROD_CATALOG_HPP

#include "delprod/involution.hpp"
#include "delprod/simplicial_complex.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace delprod {

struct CatalogEntry
{
    std::string id;
    SimplicialComplex complex;
    std::string description;
    std::string provenance;
    /// Vertex involution shipped with the entry (empty when there is none).
    std::map<std::string, std::string> antipodal;
};

/// Catalog data failed its self-check.
class CatalogValidationError : public Error
{
  public:
    using Error::Error;
};

/// simplex:0..4, sphere:0..3, rp2, octahedron, hexagon, poincare16, poincare_punctured.
std::vector<std::string> catalog_ids();

/// Builds and self-validates the entry on first use; throws Error for unknown ids.
const CatalogEntry& catalog_entry(std::string_view id);
inline const SimplicialComplex& catalog(std::string_view id) { return catalog_entry(id).complex; }

/// "catalog:<id>" or a path to a facet-list file.
SimplicialComplex load_complex(std::string_view source);

/// Label of the vertex whose open star is removed from poincare16.
inline constexpr const char* puncture_vertex = "v01";

/**
 * Named double covers: "s0" (two points over a point), "hexagon" (circle
 * over circle), "octahedron" (S^2 over RP^2) and "dp:<catalog id>" (deleted
 * product with the swap).
 */
QuotientCover catalog_cover(std::string_view id);
std::vector<std::string> standard_cover_ids();

} // namespace delprod

#endif
