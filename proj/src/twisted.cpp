#include "delprod/twisted.hpp"

#include "delprod/errors.hpp"
#include "delprod/homology.hpp"

namespace delprod {

CochainComplex twisted_cochain_complex(const QuotientCover& q, const LocalSystem& g)
{
    const CWComplex& x = q.cover().cw();
    const CWComplex& base = q.quotient();
    const std::size_t k = g.rank();
    const int top = base.dimension();

    std::vector<std::vector<Integer>> orders;
    std::vector<SparseIntMatrix> cobs;
    for (int d = 0; d <= top; ++d)
    {
        std::vector<Integer> o;
        for (std::size_t c = 0; c < base.cell_count(d); ++c)
            o.insert(o.end(), g.orders().begin(), g.orders().end());
        orders.push_back(std::move(o));

        std::vector<Triplet> t;
        for (std::size_t orbit = 0; orbit < base.cell_count(d + 1); ++orbit)
        {
            const auto rep = q.lifts(d + 1, orbit).representative;
            for (const auto& f : x.faces(d + 1, rep))
            {
                const std::uint32_t face_orbit = q.orbit_of(d, f.face);
                const CoverCell& fl = q.lifts(d, face_orbit);
                for (std::size_t j = 0; j < k; ++j)
                {
                    if (f.face == fl.representative)
                        t.push_back({orbit * k + j, face_orbit * k + j, f.coefficient});
                    else
                        t.push_back({orbit * k + g.permutation()[j], face_orbit * k + j,
                                     f.coefficient * fl.sign * g.signs()[j]});
                }
            }
        }
        cobs.push_back(SparseIntMatrix::from_triplets(base.cell_count(d + 1) * k, base.cell_count(d) * k, t));
    }
    CochainComplex c(std::move(orders), std::move(cobs));
    c.check_cochain_condition();
    return c;
}

CochainComplex twisted_relative_cochain_complex(const QuotientCover& q, const std::vector<std::vector<char>>& cover_mask,
                                                const LocalSystem& g)
{
    const auto mask = q.orbit_mask(cover_mask);
    const CochainComplex full = twisted_cochain_complex(q, g);
    const std::size_t k = g.rank();
    std::vector<std::vector<std::size_t>> kept(mask.size());
    for (std::size_t d = 0; d < mask.size(); ++d)
        for (std::size_t orbit = 0; orbit < mask[d].size(); ++orbit)
            if (!mask[d][orbit])
                for (std::size_t j = 0; j < k; ++j)
                    kept[d].push_back(orbit * k + j);

    std::vector<std::vector<Integer>> orders;
    std::vector<SparseIntMatrix> cobs;
    static const std::vector<std::size_t> none;
    for (std::size_t d = 0; d < kept.size(); ++d)
    {
        std::vector<Integer> o;
        for (auto i : kept[d])
            o.push_back(full.orders(static_cast<int>(d))[i]);
        orders.push_back(std::move(o));
        const auto& rows = d + 1 < kept.size() ? kept[d + 1] : none;
        cobs.push_back(full.coboundary(static_cast<int>(d)).submatrix(rows, kept[d]));
    }
    return CochainComplex(std::move(orders), std::move(cobs));
}

AbelianGroup twisted_cohomology(const QuotientCover& q, const LocalSystem& g, int p, const ComputeOptions& options)
{
    return cohomology(twisted_cochain_complex(q, g), p, options);
}

std::vector<AbelianGroup> twisted_cohomology_groups(const QuotientCover& q, const LocalSystem& g, int p_max,
                                                    const ComputeOptions& options)
{
    const CochainComplex c = twisted_cochain_complex(q, g);
    std::vector<AbelianGroup> out;
    for (int p = 0; p <= p_max; ++p)
        out.push_back(cohomology(c, p, options));
    return out;
}

AbelianGroup twisted_relative_cohomology(const QuotientCover& q, const std::vector<std::vector<char>>& cover_mask,
                                         const LocalSystem& g, int p, const ComputeOptions& options)
{
    return cohomology(twisted_relative_cochain_complex(q, cover_mask, g), p, options);
}

AbelianGroup cover_cohomology(const QuotientCover& q, const LocalSystem& g, int p, const ComputeOptions& options)
{
    return cohomology(CochainComplex::dual(q.cover().cw().chain_complex(), g.orders()), p, options);
}

} // namespace delprod
