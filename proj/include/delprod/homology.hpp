#ifndef DELPROD_HOMOLOGY_HPP
#define DELPROD_HOMOLOGY_HPP

#include "delprod/abelian_group.hpp"
#include "delprod/chain_complex.hpp"
#include "delprod/cw_complex.hpp"
#include "delprod/integer.hpp"
#include "delprod/lattice.hpp"
#include "delprod/smith.hpp"
#include "delprod/sparse_matrix.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace delprod {

/// Z (modulus 0) or Z/m with m >= 2.
struct Coefficients
{
    Integer modulus = 0;

    static Coefficients integers() { return {}; }
    /// Throws Error for m < 2.
    static Coefficients modulo(const Integer& m);

    bool is_integral() const noexcept { return modulus == 0; }
    std::string to_string() const;

    friend bool operator==(const Coefficients&, const Coefficients&) = default;
};

/**
 * A subquotient Z / B of Z^n, with Z and B given by generator columns and
 * B contained in Z. The group is put in invariant factor form and every
 * element of Z gets canonical coordinates: torsion coordinates first (reduced
 * modulo their orders), then free ones. These coordinates are deterministic,
 * so two presentations built from the same data agree.
 */
class GroupPresentation
{
  public:
    static GroupPresentation subquotient(std::size_t ambient_dimension, const SparseIntMatrix& cycles,
                                         const SparseIntMatrix& boundaries);
    /// H^p of a cochain complex: cocycles modulo coboundaries and coefficient relations.
    static GroupPresentation of_cochains(const CochainComplex& c, int p);
    /**
     * A group already known to vanish, with cycles {z : test * z = 0}. No
     * lattice is built, which matters when the ambient dimension is large.
     */
    static GroupPresentation vanishing(std::size_t ambient_dimension, SparseIntMatrix cycle_test);

    std::size_t ambient_dimension() const noexcept { return ambient_; }
    const AbelianGroup& group() const noexcept { return group_; }
    /// False for vanishing(); cycles() and boundaries() then throw.
    bool materialized() const noexcept { return cycle_solver_ != nullptr; }
    /// Z-basis of the cycle lattice (columns).
    const SparseIntMatrix& cycles() const;
    const SparseIntMatrix& boundaries() const;

    bool is_cycle(const IntVector& z) const;
    bool is_boundary(const IntVector& z) const;
    /// nullopt when z is not a cycle.
    std::optional<IntVector> canonical_coordinates(const IntVector& z) const;
    /// A cycle representing canonical generator i.
    IntVector canonical_generator(std::size_t i) const;

    /// generator_count x torsion_count matrix of the canonical relations.
    SparseIntMatrix canonical_relations() const;

  private:
    GroupPresentation() = default;
    /// solve() of cycle_solver must return coordinates with respect to cycle_basis.
    static GroupPresentation over(std::shared_ptr<const LatticeSolver> cycle_solver, SparseIntMatrix cycle_basis,
                                  const SparseIntMatrix& boundaries);

    std::size_t ambient_ = 0;
    SparseIntMatrix cycle_basis_;
    SparseIntMatrix boundaries_;
    std::shared_ptr<const LatticeSolver> cycle_solver_;
    SparseIntMatrix cycle_test_;
    SparseIntMatrix left_;
    SparseIntMatrix left_inverse_;
    std::vector<std::size_t> positions_; // SNF row of each canonical generator
    std::vector<Integer> orders_;        // order of each canonical generator, 0 = free
    AbelianGroup group_;
};

using PresentationPtr = std::shared_ptr<const GroupPresentation>;

/**
 * Homomorphism between two presented groups, stored as its matrix in
 * canonical coordinates with rows reduced modulo the codomain orders.
 */
class GroupHom
{
  public:
    /// Throws Error if the matrix does not send domain relations to codomain relations.
    GroupHom(PresentationPtr domain, PresentationPtr codomain, const SparseIntMatrix& canonical);

    /// Induced by a cochain-level matrix (codomain ambient x domain ambient). Checks that
    /// cycles go to cycles and boundaries to boundaries.
    static GroupHom from_cochain_map(PresentationPtr domain, PresentationPtr codomain, const SparseIntMatrix& map);

    const AbelianGroup& domain() const noexcept { return domain_->group(); }
    const AbelianGroup& codomain() const noexcept { return codomain_->group(); }
    const GroupPresentation& domain_presentation() const noexcept { return *domain_; }
    const GroupPresentation& codomain_presentation() const noexcept { return *codomain_; }
    const SparseIntMatrix& matrix() const noexcept { return matrix_; }

    bool is_zero() const noexcept { return matrix_.is_zero(); }
    bool is_injective() const { return kernel().is_trivial(); }
    bool is_surjective() const;
    bool is_isomorphism() const { return is_injective() && is_surjective(); }

    /// Generators in domain canonical coordinates.
    SparseIntMatrix kernel_generators() const;
    /// Generators in codomain canonical coordinates.
    SparseIntMatrix image_generators() const { return matrix_; }
    AbelianGroup kernel() const;
    AbelianGroup image() const;

    /// after o this; the groups in the middle must coincide.
    GroupHom then(const GroupHom& after) const;

    friend bool operator==(const GroupHom& a, const GroupHom& b);

  private:
    PresentationPtr domain_;
    PresentationPtr codomain_;
    SparseIntMatrix matrix_;
};

/// Compares im(incoming) with ker(outgoing) inside their common group.
SubgroupComparison exactness_at(const GroupHom& incoming, const GroupHom& outgoing);

AbelianGroup homology(const ChainComplex& c, int i, const ComputeOptions& options = {});
std::vector<AbelianGroup> homology_groups(const ChainComplex& c, const ComputeOptions& options = {});

/// Homology of the dual cochain complex. Integral coefficients take the invariant-factor
/// path; Z/m goes through an explicit presentation of the mod-m cochains.
AbelianGroup cohomology(const ChainComplex& c, int i, const Coefficients& coefficients = {},
                        const ComputeOptions& options = {});
std::vector<AbelianGroup> cohomology_groups(const ChainComplex& c, const Coefficients& coefficients = {},
                                            const ComputeOptions& options = {});
/// Runs the integral eliminations behind H^from..H^to concurrently and caches them on c.
void prefetch_cohomology(const ChainComplex& c, int from, int to, const ComputeOptions& options = {});
AbelianGroup cohomology(const CochainComplex& c, int p, const ComputeOptions& options = {});

AbelianGroup relative_homology(const CellularPair& pair, int i, const ComputeOptions& options = {});
AbelianGroup relative_cohomology(const CellularPair& pair, int i, const Coefficients& coefficients = {},
                                 const ComputeOptions& options = {});

/// f^* : H^i(codomain) -> H^i(domain). Throws ChainConditionError if f is not a chain map.
GroupHom induced_cohomology_map(const CellularMap& f, int i, const Coefficients& coefficients = {});

/// Maps of the cohomology sequence of a pair in degree i.
struct PairSequenceDegree
{
    int degree = 0;
    GroupHom to_ambient;  // H^i(X, A) -> H^i(X)
    GroupHom restriction; // H^i(X) -> H^i(A)
    GroupHom connecting;  // H^i(A) -> H^{i+1}(X, A)
};

std::vector<PairSequenceDegree> pair_cohomology_sequence(const CellularPair& pair,
                                                         const Coefficients& coefficients = {});

} // namespace delprod

#endif
