#ifndef DELPROD_CW_COMPLEX_HPP
#define DELPROD_CW_COMPLEX_HPP

#include "delprod/chain_complex.hpp"
#include "delprod/sparse_matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace delprod {

/// A codimension-one face of a cell with its incidence number.
struct Incidence
{
    std::uint32_t face;
    std::int32_t coefficient;

    friend bool operator==(const Incidence&, const Incidence&) = default;
};

/**
 * Regular CW complex: every incidence number is +1 or -1 and each face of a
 * cell is listed once. Cells are indexed per dimension. The cellular chain
 * complex is built and checked for d*d = 0 on construction.
 */
class CWComplex
{
  public:
    CWComplex();
    /// faces[d][c] lists the faces of cell c in dimension d; faces[0][*] must be empty.
    explicit CWComplex(std::vector<std::vector<std::vector<Incidence>>> faces,
                       std::vector<std::vector<std::string>> names = {});

    int dimension() const noexcept { return static_cast<int>(faces_.size()) - 1; }
    std::size_t cell_count(int d) const noexcept;
    std::size_t total_cells() const noexcept;
    const std::vector<Incidence>& faces(int d, std::size_t cell) const;
    /// Human-readable cell name; "d.i" when none was given.
    std::string name(int d, std::size_t cell) const;
    bool has_names() const noexcept { return !names_.empty(); }

    const ChainComplex& chain_complex() const { return *chains_; }
    long euler_characteristic() const { return chains_->euler_characteristic(); }

  private:
    std::vector<std::vector<std::vector<Incidence>>> faces_;
    std::vector<std::vector<std::string>> names_;
    std::shared_ptr<const ChainComplex> chains_;
};

using CWComplexPtr = std::shared_ptr<const CWComplex>;

struct SignedCell
{
    std::uint32_t cell;
    std::int32_t sign;

    friend bool operator==(const SignedCell&, const SignedCell&) = default;
};

/// Dimension-preserving cellular map sending each cell to a single signed cell.
class CellularMap
{
  public:
    CellularMap(CWComplexPtr domain, CWComplexPtr codomain, std::vector<std::vector<SignedCell>> assignment);

    static CellularMap identity(CWComplexPtr space);

    const CWComplex& domain() const { return *domain_; }
    const CWComplex& codomain() const { return *codomain_; }
    const CWComplexPtr& domain_ptr() const { return domain_; }
    const CWComplexPtr& codomain_ptr() const { return codomain_; }
    const SignedCell& image(int d, std::size_t cell) const;

    /// Matrix of C_d(domain) -> C_d(codomain).
    SparseIntMatrix chain_matrix(int d) const;
    bool is_chain_map() const;
    /// Throws ChainConditionError at the first dimension where the map fails to commute with d.
    void check_chain_map() const;

    /// after o this.
    CellularMap then(const CellularMap& after) const;

    friend bool operator==(const CellularMap& a, const CellularMap& b)
    {
        return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.assignment_ == b.assignment_;
    }

  private:
    CWComplexPtr domain_;
    CWComplexPtr codomain_;
    std::vector<std::vector<SignedCell>> assignment_;
};

/// A CW complex together with a subcomplex, given as a per-cell membership mask.
class CellularPair
{
  public:
    CellularPair(CWComplexPtr ambient, std::vector<std::vector<char>> in_sub);

    const CWComplex& ambient() const { return *ambient_; }
    const CWComplexPtr& ambient_ptr() const { return ambient_; }
    bool in_sub(int d, std::size_t cell) const;
    std::size_t sub_cell_count() const;

    /// Chains of ambient modulo chains of sub (cells outside sub), built once.
    const ChainComplex& relative_chain_complex() const;
    /// The subcomplex as its own CW complex, cells renumbered in ambient order.
    CWComplexPtr sub_complex() const;
    /// sub_complex() -> ambient.
    CellularMap inclusion() const;

  private:
    struct Derived;

    CWComplexPtr ambient_;
    std::vector<std::vector<char>> in_sub_;
    std::shared_ptr<Derived> derived_;
};

} // namespace delprod

#endif
