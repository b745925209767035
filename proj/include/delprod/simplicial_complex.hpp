#ifndef DELPROD_SIMPLICIAL_COMPLEX_HPP
#define DELPROD_SIMPLICIAL_COMPLEX_HPP

#include "delprod/chain_complex.hpp"
#include "delprod/cw_complex.hpp"
#include "delprod/errors.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace delprod {

/// Dense vertex index; ids follow the lexicographic order of the labels.
using VertexId = std::uint32_t;

/// Nonempty, strictly increasing list of vertices.
class Simplex
{
  public:
    Simplex() = default;
    /// Sorts the vertices; throws on duplicates or an empty list.
    explicit Simplex(std::vector<VertexId> vertices);

    int dimension() const noexcept { return static_cast<int>(v_.size()) - 1; }
    std::span<const VertexId> vertices() const noexcept { return v_; }
    VertexId operator[](std::size_t i) const { return v_[i]; }
    std::size_t size() const noexcept { return v_.size(); }

    /// The face obtained by deleting the vertex at position i.
    Simplex face(std::size_t i) const;
    bool contains(VertexId v) const;
    bool disjoint_from(const Simplex& other) const;
    bool is_face_of(const Simplex& other) const;

    friend auto operator<=>(const Simplex&, const Simplex&) = default;

  private:
    std::vector<VertexId> v_;
};

/// Raised when a codimension-one simplex lies in three or more top simplices.
class PseudomanifoldError : public Error
{
  public:
    using Error::Error;
};

/**
 * Finite abstract simplicial complex generated by its facets.
 *
 * Vertex labels are arbitrary strings, ordered lexicographically and mapped
 * to dense ids in that order. Every simplex is oriented by its sorted vertex
 * list, so the face obtained by deleting position i carries sign (-1)^i.
 */
class SimplicialComplex
{
  public:
    SimplicialComplex() = default;

    /// Reduces the list to maximal faces and deduplicates.
    static SimplicialComplex from_facets(const std::vector<std::vector<std::string>>& facets);

    bool empty() const noexcept { return labels_.empty(); }
    int dimension() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }
    const std::vector<std::string>& vertex_labels() const noexcept { return labels_; }
    std::optional<VertexId> vertex_id(std::string_view label) const;
    std::vector<std::string> labels_of(const Simplex& s) const;

    /// Maximal simplices in lexicographic order.
    const std::vector<Simplex>& facets() const noexcept { return facets_; }
    /// All d-simplices in lexicographic order.
    const std::vector<Simplex>& simplices(int d) const;
    std::size_t simplex_count() const noexcept;
    std::optional<std::size_t> index_of(const Simplex& s) const;
    bool contains_labels(const std::vector<std::string>& labels) const;

    std::vector<std::size_t> f_vector() const;
    long euler_characteristic() const;
    bool is_pure() const;

    /// Cells are the simplices, in the order of simplices(d).
    CWComplexPtr to_cw() const;
    ChainComplex chain_complex() const { return to_cw()->chain_complex(); }

  private:
    std::vector<std::string> labels_;
    std::vector<Simplex> facets_;
    std::vector<std::vector<Simplex>> by_dim_;
};

/// Parses the facet-list format ("facet a b c" per line, '#' comments).
SimplicialComplex parse_complex(std::string_view text);
/// One "facet ..." line per facet, lexicographically sorted.
std::string serialize(const SimplicialComplex& k);

/// Subcomplex generated by the (n-1)-simplices lying in exactly one n-simplex.
SimplicialComplex boundary_subcomplex(const SimplicialComplex& k);
/// True iff every simplex of m is a simplex of n (vertices matched by label).
bool is_full_subcomplex(const SimplicialComplex& m, const SimplicialComplex& n);

/// Union of the facets containing the vertex, with all their faces.
SimplicialComplex closed_star(const SimplicialComplex& k, std::string_view vertex);
/// All simplices not containing the vertex (the complement of its open star).
SimplicialComplex remove_open_star(const SimplicialComplex& k, std::string_view vertex);
/// Lexicographically first vertex not on boundary_subcomplex(k), if any.
std::optional<std::string> first_interior_vertex(const SimplicialComplex& k);
/// Vertices are the simplices of k, labelled by their vertex labels joined with '_'.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& k);

} // namespace delprod

#endif
