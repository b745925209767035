#ifndef DELPROD_GYSIN_HPP
#define DELPROD_GYSIN_HPP

#include "delprod/homology.hpp"
#include "delprod/involution.hpp"
#include "delprod/lattice.hpp"
#include "delprod/local_system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace delprod {

/**
 * Degree p of the sequence
 *   H^{p-1}(X'; G_phi) -> H^p(X'; G_{-phi}) -> H^p(X; G) -> H^p(X'; G_phi)
 * built from the coefficient sequence
 *   (G, -phi) --m -> (m, -m)--> (G + G, tau) --(a, b) -> a + b--> (G, phi).
 * H^p(X; G) is presented as H^p(X'; (G + G)_tau). The connecting map lifts a
 * cocycle by m -> (m, 0), applies the coboundary and reads off the first summand.
 */
struct GysinSegment
{
    int degree = 0;
    GroupHom connecting; // H^{p-1}(X'; G_phi) -> H^p(X'; G_{-phi})
    GroupHom inclusion;  // H^p(X'; G_{-phi}) -> H^p(X; G)
    GroupHom projection; // H^p(X; G) -> H^p(X'; G_phi)

    const AbelianGroup& previous() const { return connecting.domain(); }
    const AbelianGroup& twisted() const { return inclusion.domain(); }
    const AbelianGroup& cover() const { return inclusion.codomain(); }
    const AbelianGroup& untwisted() const { return projection.codomain(); }
};

/// p_max < 0 means dim(X) + 1.
std::vector<GysinSegment> gysin_sequence(const QuotientCover& q, const LocalSystem& g, int p_max = -1);

enum class GysinNode
{
    Twisted,  // at H^p(X'; G_{-phi}): im connecting vs ker inclusion
    Cover,    // at H^p(X; G): im inclusion vs ker projection
    Untwisted // at H^p(X'; G_phi): im projection vs ker next connecting
};

const char* to_string(GysinNode n);

struct ExactnessCheck
{
    int degree = 0;
    GysinNode node = GysinNode::Twisted;
    SubgroupRelation relation = SubgroupRelation::Equal;
    std::optional<SubgroupWitness> witness;

    bool passed() const noexcept { return relation == SubgroupRelation::Equal; }
};

struct ExactnessReport
{
    std::vector<ExactnessCheck> checks;

    bool passed() const;
    std::vector<ExactnessCheck> failures() const;
};

/// Checks every node between consecutive maps; an empty list passes vacuously.
ExactnessReport verify_exactness(const std::vector<GysinSegment>& segments);

struct SplittingDegree
{
    int degree = 0;
    AbelianGroup cover;
    AbelianGroup twisted;   // H^p(X'; G_{-phi})
    AbelianGroup untwisted; // H^p(X'; G_phi)

    bool holds() const { return cover == twisted.direct_sum(untwisted); }
};

struct SplittingReport
{
    std::vector<SplittingDegree> degrees;

    bool holds() const;
};

/// Throws Error unless every order of G is odd (2 invertible).
SplittingReport splitting_check(const QuotientCover& q, const LocalSystem& g, int p_max = -1);

enum class CoefficientAction
{
    PlusIdentity,
    MinusIdentity,
    Unknown
};

const char* to_string(CoefficientAction a);

/// Raised when k < i, where pi_k(S^i) = 0 and the question is empty.
class TrivialHomotopyGroup : public Error
{
  public:
    using Error::Error;
};

/// Action of the antipodal map of S^i on pi_k(S^i).
CoefficientAction antipodal_coefficient_involution(int i, int k);

} // namespace delprod

#endif
