#include "delprod/involution.hpp"

#include "delprod/errors.hpp"

#include <algorithm>

namespace delprod {

FreeInvolutionComplex::FreeInvolutionComplex(CWComplexPtr cw, CellularMap t) : cw_(std::move(cw)), t_(std::move(t))
{
    if (t_.domain_ptr() != cw_ || t_.codomain_ptr() != cw_)
        throw Error("involution must map the complex to itself");
    for (int d = 0; d <= cw_->dimension(); ++d)
        for (std::size_t c = 0; c < cw_->cell_count(d); ++c)
        {
            const SignedCell& img = t_.image(d, c);
            if (img.cell == c)
                throw Error("involution is not free: it fixes cell " + cw_->name(d, c));
            const SignedCell& back = t_.image(d, img.cell);
            if (back.cell != c || back.sign * img.sign != 1)
                throw Error("map is not an involution at cell " + cw_->name(d, c));
        }
    t_.check_chain_map();
}

FreeInvolutionComplex simplicial_involution(const SimplicialComplex& k,
                                            const std::map<std::string, std::string>& vertex_map)
{
    const auto& labels = k.vertex_labels();
    std::vector<VertexId> perm(labels.size());
    for (VertexId v = 0; v < perm.size(); ++v)
        perm[v] = v;
    for (const auto& [from, to] : vertex_map)
    {
        auto a = k.vertex_id(from);
        auto b = k.vertex_id(to);
        if (!a || !b)
            throw Error("vertex involution refers to an unknown vertex");
        perm[*a] = *b;
    }
    for (VertexId v = 0; v < perm.size(); ++v)
        if (perm[perm[v]] != v)
            throw Error("vertex map is not an involution at '" + labels[v] + "'");

    std::vector<std::vector<SignedCell>> assignment(static_cast<std::size_t>(k.dimension() + 1));
    for (int d = 0; d <= k.dimension(); ++d)
        for (const auto& s : k.simplices(d))
        {
            std::vector<VertexId> img;
            for (VertexId v : s.vertices())
                img.push_back(perm[v]);
            // sign of the permutation sorting img
            int sign = 1;
            for (std::size_t i = 0; i < img.size(); ++i)
                for (std::size_t j = i + 1; j < img.size(); ++j)
                    if (img[i] > img[j])
                        sign = -sign;
            auto idx = k.index_of(Simplex(img));
            if (!idx)
                throw Error("vertex map does not send simplices to simplices");
            assignment[static_cast<std::size_t>(d)].push_back({static_cast<std::uint32_t>(*idx), sign});
        }
    CWComplexPtr cw = k.to_cw();
    return FreeInvolutionComplex(cw, CellularMap(cw, cw, std::move(assignment)));
}

QuotientCover::QuotientCover(FreeInvolutionComplex cover) : cover_(std::move(cover))
{
    const CWComplex& x = cover_.cw();
    const CellularMap& t = cover_.involution();
    const int top = x.dimension();
    lifts_.resize(static_cast<std::size_t>(top + 1));
    orbit_.resize(static_cast<std::size_t>(top + 1));
    for (int d = 0; d <= top; ++d)
    {
        auto& orbit = orbit_[static_cast<std::size_t>(d)];
        orbit.assign(x.cell_count(d), 0);
        for (std::size_t c = 0; c < x.cell_count(d); ++c)
        {
            const SignedCell& img = t.image(d, c);
            if (c < img.cell)
            {
                orbit[c] = orbit[img.cell] = static_cast<std::uint32_t>(lifts_[static_cast<std::size_t>(d)].size());
                lifts_[static_cast<std::size_t>(d)].push_back({static_cast<std::uint32_t>(c), img.cell, img.sign});
            }
        }
    }

    std::vector<std::vector<std::vector<Incidence>>> faces(static_cast<std::size_t>(top + 1));
    std::vector<std::vector<std::string>> names(static_cast<std::size_t>(top + 1));
    for (int d = 0; d <= top; ++d)
        for (const auto& l : lifts_[static_cast<std::size_t>(d)])
        {
            std::vector<Incidence> inc;
            for (const auto& f : x.faces(d, l.representative))
            {
                const std::uint32_t q = orbit_of(d - 1, f.face);
                const CoverCell& fl = lifts(d - 1, q);
                const int coefficient = f.face == fl.representative ? f.coefficient : f.coefficient * fl.sign;
                if (std::any_of(inc.begin(), inc.end(), [&](const Incidence& e) { return e.face == q; }))
                    throw Error("quotient is not a regular CW complex: cell " + x.name(d, l.representative)
                                + " meets both lifts of a face");
                inc.push_back({q, coefficient});
            }
            faces[static_cast<std::size_t>(d)].push_back(std::move(inc));
            names[static_cast<std::size_t>(d)].push_back("[" + x.name(d, l.representative) + "]");
        }
    quotient_ = std::make_shared<const CWComplex>(std::move(faces), std::move(names));
}

const CoverCell& QuotientCover::lifts(int d, std::size_t orbit) const
{
    return lifts_.at(static_cast<std::size_t>(d)).at(orbit);
}

std::uint32_t QuotientCover::orbit_of(int d, std::size_t cell) const
{
    return orbit_.at(static_cast<std::size_t>(d)).at(cell);
}

bool QuotientCover::is_representative(int d, std::size_t cell) const
{
    return lifts(d, orbit_of(d, cell)).representative == cell;
}

std::vector<std::vector<char>> QuotientCover::orbit_mask(const std::vector<std::vector<char>>& cover_mask) const
{
    const CWComplex& x = cover_.cw();
    if (static_cast<int>(cover_mask.size()) != x.dimension() + 1)
        throw Error("orbit mask: one membership mask per dimension required");
    std::vector<std::vector<char>> out(cover_mask.size());
    for (int d = 0; d <= x.dimension(); ++d)
    {
        const auto& m = cover_mask[static_cast<std::size_t>(d)];
        if (m.size() != x.cell_count(d))
            throw Error("orbit mask: membership mask has the wrong size");
        for (const auto& l : lifts_[static_cast<std::size_t>(d)])
        {
            if (m[l.representative] != m[l.partner])
                throw Error("subcomplex is not invariant under the involution (cell " + x.name(d, l.representative)
                            + ")");
            out[static_cast<std::size_t>(d)].push_back(m[l.representative]);
        }
    }
    return out;
}

QuotientCover quotient_cover(const FreeInvolutionComplex& f) { return QuotientCover(f); }

} // namespace delprod
