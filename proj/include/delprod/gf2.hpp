#ifndef DELPROD_GF2_HPP
#define DELPROD_GF2_HPP

#include "delprod/sparse_matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace delprod {

/// Sorted support of a vector over GF(2).
using Gf2Vector = std::vector<std::uint32_t>;

/// Entries with odd value.
Gf2Vector gf2_reduce(const SparseVector& v);

/// Incrementally built column span over GF(2), reduced by lowest-pivot elimination.
class Gf2Span
{
  public:
    explicit Gf2Span(std::size_t dimension) : owner_(dimension, -1) {}

    /// Adds a column; returns false if it was already in the span.
    bool add(Gf2Vector column);
    bool contains(Gf2Vector v) const { return reduce(std::move(v)).empty(); }
    std::size_t rank() const noexcept { return columns_.size(); }

    /// Columns of a matrix, read modulo 2.
    static Gf2Span of_columns(const SparseIntMatrix& m);

  private:
    Gf2Vector reduce(Gf2Vector v) const;

    std::vector<std::int64_t> owner_;
    std::vector<Gf2Vector> columns_;
};

} // namespace delprod

#endif
