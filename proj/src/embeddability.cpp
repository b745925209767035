#include "delprod/embeddability.hpp"

#include "delprod/errors.hpp"
#include "delprod/gf2.hpp"
#include "delprod/homology.hpp"

#include <algorithm>
#include <set>

namespace delprod {

const char* to_string(Verdict v)
{
    switch (v)
    {
    case Verdict::MapExists:
        return "MAP_EXISTS";
    case Verdict::NoEquivariantMap:
        return "NO_EQUIVARIANT_MAP";
    case Verdict::Unknown:
        return "UNKNOWN";
    }
    return "?";
}

EmbedVerdict equivariant_map_sufficiency(const DeletedProductComplex& d, int m, const ComputeOptions& options)
{
    if (m < 1)
        throw Error("target dimension m must be at least 1");
    EmbedVerdict v;
    v.m = m;
    const ChainComplex& c = d.cw()->chain_complex();
    bool vanishing = true;
    prefetch_cohomology(c, m, c.top_dimension(), options);
    for (int i = m; i <= c.top_dimension(); ++i)
    {
        AbelianGroup g = cohomology(c, i, Coefficients::integers(), options);
        vanishing = vanishing && g.is_trivial();
        v.groups.push_back({i, std::move(g)});
    }
    v.verdict = vanishing ? Verdict::MapExists : Verdict::Unknown;
    if (vanishing)
        v.note = "integral cohomology vanishes in degrees >= m; an equivariant map exists, "
                 "which does not by itself imply embeddability";
    else
        v.note = "nonvanishing cohomology in degree >= m; existence undecided";
    return v;
}

EmbedVerdict equivariant_map_sufficiency(const SimplicialComplex& k, int m, const ComputeOptions& options)
{
    return equivariant_map_sufficiency(deleted_product(k), m, options);
}

int z2_index_lower_bound(const QuotientCover& q, const ComputeOptions& options)
{
    const CWComplex& base = q.quotient();
    const CWComplex& x = q.cover().cw();
    if (base.cell_count(0) == 0)
        throw Error("Z2-index: the deleted product is empty");

    // unit class: the all-ones 0-cochain
    Gf2Vector w;
    for (std::uint32_t i = 0; i < base.cell_count(0); ++i)
        w.push_back(i);
    int h = 0;
    for (int j = 1; j <= base.dimension(); ++j)
    {
        options.check();
        // connecting map mod 2: sum over faces of the representative that are themselves representatives
        const std::set<std::uint32_t> support(w.begin(), w.end());
        Gf2Vector next;
        for (std::uint32_t orbit = 0; orbit < base.cell_count(j); ++orbit)
        {
            int parity = 0;
            for (const auto& f : x.faces(j, q.lifts(j, orbit).representative))
                if (q.is_representative(j - 1, f.face) && support.count(q.orbit_of(j - 1, f.face)))
                    parity ^= 1;
            if (parity)
                next.push_back(orbit);
        }
        // nonzero class iff next is not a coboundary mod 2
        const SparseIntMatrix delta = base.chain_complex().boundary(j).transpose();
        Gf2Span coboundaries = Gf2Span::of_columns(delta);
        if (next.empty() || coboundaries.contains(next))
            break;
        h = j;
        w = std::move(next);
    }
    return h;
}

int z2_index_lower_bound(const SimplicialComplex& k, const ComputeOptions& options)
{
    DeletedProductComplex d = deleted_product(k);
    return z2_index_lower_bound(quotient_cover(FreeInvolutionComplex(d.cw(), d.involution())), options);
}

EmbedVerdict embed_verdict(const SimplicialComplex& k, int m, const ComputeOptions& options)
{
    if (m < 1)
        throw Error("target dimension m must be at least 1");
    DeletedProductComplex d = deleted_product(k);
    std::optional<int> index;
    if (d.cw()->cell_count(0) > 0)
        index = z2_index_lower_bound(quotient_cover(FreeInvolutionComplex(d.cw(), d.involution())), options);
    if (index && *index >= m)
    {
        EmbedVerdict v;
        v.m = m;
        v.verdict = Verdict::NoEquivariantMap;
        v.index = index;
        v.note = "Z2-index " + std::to_string(*index) + " >= m: no equivariant map to S^" + std::to_string(m - 1)
                 + ", so the complex does not embed in R^" + std::to_string(m);
        return v;
    }
    EmbedVerdict v = equivariant_map_sufficiency(d, m, options);
    v.index = index;
    return v;
}

Lemma1Report lemma1_vanishing_check(const SimplicialComplex& n, const SimplicialComplex& m, int l,
                                    const ComputeOptions& options)
{
    if (l < 0)
        throw Error("l must be nonnegative");
    if (!n.is_pure())
        throw Error("lemma1 check: the ambient complex must be pure");
    DeletedPair dp = deleted_pair(n, m);
    Lemma1Report r;
    r.n = n.dimension();
    r.l = l;
    r.passed = true;
    const ChainComplex& rel = dp.pair.relative_chain_complex();
    prefetch_cohomology(rel, 0, rel.top_dimension(), options);
    for (int i = 0; i <= rel.top_dimension(); ++i)
    {
        AbelianGroup g = cohomology(rel, i, Coefficients::integers(), options);
        if (i >= r.n + l && !g.is_trivial())
            r.passed = false;
        r.groups.push_back({i, std::move(g)});
    }
    return r;
}

ConnectivityReport connectivity_report(const SimplicialComplex& n, const ComputeOptions& options)
{
    ConnectivityReport r;
    const SimplicialComplex boundary = boundary_subcomplex(n);
    r.closed = boundary.empty();
    const CWComplexPtr cw = n.to_cw();
    std::vector<std::vector<char>> mask(static_cast<std::size_t>(cw->dimension() + 1));
    for (int d = 0; d <= n.dimension(); ++d)
        for (const auto& s : n.simplices(d))
            mask[static_cast<std::size_t>(d)].push_back(!r.closed && boundary.contains_labels(n.labels_of(s)) ? 1 : 0);
    const CellularPair pair(cw, std::move(mask));
    bool zero_so_far = true;
    for (int i = 0; i <= n.dimension(); ++i)
    {
        AbelianGroup g = relative_homology(pair, i, options);
        if (zero_so_far && g.is_trivial())
            r.d_max = i;
        else
            zero_so_far = false;
        r.groups.push_back({i, std::move(g)});
    }
    return r;
}

} // namespace delprod
