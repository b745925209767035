#include "delprod/gysin.hpp"

#include "delprod/errors.hpp"
#include "delprod/twisted.hpp"

namespace delprod {

namespace {

// Per-cell block maps between the coefficient groups, repeated over n cells.
SparseIntMatrix repeat_block(std::size_t n, std::size_t rows, std::size_t cols, const std::vector<Triplet>& block)
{
    std::vector<Triplet> t;
    for (std::size_t c = 0; c < n; ++c)
        for (const auto& e : block)
            t.push_back({c * rows + e.row, c * cols + e.col, e.value});
    return SparseIntMatrix::from_triplets(n * rows, n * cols, t);
}

} // namespace

std::vector<GysinSegment> gysin_sequence(const QuotientCover& q, const LocalSystem& g, int p_max)
{
    const CWComplex& base = q.quotient();
    if (p_max < 0)
        p_max = base.dimension() + 1;
    const std::size_t k = g.rank();

    const CochainComplex a = twisted_cochain_complex(q, g.negated());
    const CochainComplex b = twisted_cochain_complex(q, g.doubled());
    const CochainComplex c = twisted_cochain_complex(q, g);

    std::vector<Triplet> inc, proj, lift, first;
    for (std::size_t j = 0; j < k; ++j)
    {
        inc.push_back({j, j, 1});
        inc.push_back({k + j, j, -1});
        proj.push_back({j, j, 1});
        proj.push_back({j, k + j, 1});
        lift.push_back({j, j, 1});
        first.push_back({j, j, 1});
    }

    std::vector<GysinSegment> out;
    for (int p = 0; p <= p_max; ++p)
    {
        const std::size_t n = base.cell_count(p);
        const std::size_t n_prev = base.cell_count(p - 1);
        const SparseIntMatrix inc_m = repeat_block(n, 2 * k, k, inc);
        const SparseIntMatrix proj_m = repeat_block(n, k, 2 * k, proj);
        const SparseIntMatrix lift_m = repeat_block(n_prev, 2 * k, k, lift);
        const SparseIntMatrix first_m = repeat_block(n, k, 2 * k, first);
        const SparseIntMatrix connecting_m = first_m * (b.coboundary(p - 1) * lift_m);

        out.push_back(GysinSegment{
            p,
            GroupHom::from_cochain_map(c.presentation(p - 1), a.presentation(p), connecting_m),
            GroupHom::from_cochain_map(a.presentation(p), b.presentation(p), inc_m),
            GroupHom::from_cochain_map(b.presentation(p), c.presentation(p), proj_m),
        });
    }
    return out;
}

const char* to_string(GysinNode n)
{
    switch (n)
    {
    case GysinNode::Twisted:
        return "twisted";
    case GysinNode::Cover:
        return "cover";
    case GysinNode::Untwisted:
        return "untwisted";
    }
    return "?";
}

bool ExactnessReport::passed() const
{
    for (const auto& c : checks)
        if (!c.passed())
            return false;
    return true;
}

std::vector<ExactnessCheck> ExactnessReport::failures() const
{
    std::vector<ExactnessCheck> out;
    for (const auto& c : checks)
        if (!c.passed())
            out.push_back(c);
    return out;
}

ExactnessReport verify_exactness(const std::vector<GysinSegment>& segments)
{
    ExactnessReport report;
    auto record = [&](int degree, GysinNode node, const GroupHom& in, const GroupHom& out) {
        SubgroupComparison cmp = exactness_at(in, out);
        report.checks.push_back({degree, node, cmp.relation, std::move(cmp.witness)});
    };
    for (std::size_t s = 0; s < segments.size(); ++s)
    {
        const auto& seg = segments[s];
        record(seg.degree, GysinNode::Twisted, seg.connecting, seg.inclusion);
        record(seg.degree, GysinNode::Cover, seg.inclusion, seg.projection);
        if (s + 1 < segments.size())
        {
            if (segments[s + 1].degree != seg.degree + 1)
                throw Error("exactness check: segments are not consecutive");
            record(seg.degree, GysinNode::Untwisted, seg.projection, segments[s + 1].connecting);
        }
    }
    return report;
}

bool SplittingReport::holds() const
{
    for (const auto& d : degrees)
        if (!d.holds())
            return false;
    return true;
}

SplittingReport splitting_check(const QuotientCover& q, const LocalSystem& g, int p_max)
{
    for (const auto& m : g.orders())
        if (m == 0 || m % 2 == 0)
            throw Error("splitting check requires 2 to be invertible in G (odd finite orders only)");
    if (p_max < 0)
        p_max = q.quotient().dimension() + 1;
    const CochainComplex a = twisted_cochain_complex(q, g.negated());
    const CochainComplex c = twisted_cochain_complex(q, g);
    const CochainComplex x = CochainComplex::dual(q.cover().cw().chain_complex(), g.orders());
    SplittingReport report;
    for (int p = 0; p <= p_max; ++p)
        report.degrees.push_back({p, cohomology(x, p), cohomology(a, p), cohomology(c, p)});
    return report;
}

const char* to_string(CoefficientAction a)
{
    switch (a)
    {
    case CoefficientAction::PlusIdentity:
        return "+id";
    case CoefficientAction::MinusIdentity:
        return "-id";
    case CoefficientAction::Unknown:
        return "UNKNOWN";
    }
    return "?";
}

CoefficientAction antipodal_coefficient_involution(int i, int k)
{
    if (i < 1)
        throw Error("sphere dimension must be at least 1");
    if (k < i)
        throw TrivialHomotopyGroup("pi_" + std::to_string(k) + "(S^" + std::to_string(i) + ") is trivial");
    if (i % 2 == 1)
        return CoefficientAction::PlusIdentity;
    if (k <= 2 * i - 2)
        return CoefficientAction::MinusIdentity;
    return CoefficientAction::Unknown;
}

} // namespace delprod
