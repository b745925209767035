#include "delprod/deleted_product.hpp"

#include "delprod/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace delprod {

const ProductCell& DeletedProductComplex::factors(int d, std::size_t cell) const
{
    return cells_.at(static_cast<std::size_t>(d)).at(cell);
}

std::optional<std::size_t> DeletedProductComplex::index_of(const ProductCell& cell) const
{
    const int d = cell.dimension();
    if (d < 0 || d >= static_cast<int>(cells_.size()))
        return std::nullopt;
    const auto& level = cells_[static_cast<std::size_t>(d)];
    auto it = std::lower_bound(level.begin(), level.end(), cell);
    if (it == level.end() || *it != cell)
        return std::nullopt;
    return static_cast<std::size_t>(it - level.begin());
}

DeletedProductComplex deleted_product(const SimplicialComplex& k)
{
    DeletedProductComplex out;
    out.source_ = k;

    std::vector<const Simplex*> all;
    for (int d = 0; d <= k.dimension(); ++d)
        for (const auto& s : k.simplices(d))
            all.push_back(&s);
    for (const Simplex* a : all)
        for (const Simplex* b : all)
            if (a->disjoint_from(*b))
            {
                ProductCell c{*a, *b};
                const auto d = static_cast<std::size_t>(c.dimension());
                if (out.cells_.size() <= d)
                    out.cells_.resize(d + 1);
                out.cells_[d].push_back(std::move(c));
            }
    for (auto& level : out.cells_)
        std::sort(level.begin(), level.end());

    const std::size_t top = out.cells_.size();
    std::vector<std::vector<std::vector<Incidence>>> faces(top);
    std::vector<std::vector<std::string>> names(top);
    std::vector<std::vector<SignedCell>> swap(top);
    auto label = [&](const Simplex& s) {
        std::string r;
        for (const auto& l : k.labels_of(s))
            r += (r.empty() ? "" : ",") + l;
        return r;
    };
    for (std::size_t d = 0; d < top; ++d)
        for (const auto& c : out.cells_[d])
        {
            const int p = c.first.dimension();
            const int q = c.second.dimension();
            std::vector<Incidence> inc;
            if (p > 0)
                for (std::size_t i = 0; i < c.first.size(); ++i)
                {
                    auto f = out.index_of({c.first.face(i), c.second});
                    inc.push_back({static_cast<std::uint32_t>(*f), i % 2 == 0 ? 1 : -1});
                }
            if (q > 0)
                for (std::size_t j = 0; j < c.second.size(); ++j)
                {
                    auto f = out.index_of({c.first, c.second.face(j)});
                    const int sign = ((p % 2 == 0) ? 1 : -1) * (j % 2 == 0 ? 1 : -1);
                    inc.push_back({static_cast<std::uint32_t>(*f), sign});
                }
            faces[d].push_back(std::move(inc));
            names[d].push_back(label(c.first) + "|" + label(c.second));
            auto partner = out.index_of({c.second, c.first});
            swap[d].push_back({static_cast<std::uint32_t>(*partner), (p * q) % 2 == 0 ? 1 : -1});
        }
    out.cw_ = std::make_shared<const CWComplex>(std::move(faces), std::move(names));
    out.involution_ = std::make_shared<const CellularMap>(out.cw_, out.cw_, std::move(swap));
    return out;
}

DeletedPair deleted_pair(const SimplicialComplex& n, const SimplicialComplex& m)
{
    if (!is_full_subcomplex(m, n))
        throw Error("deleted pair: the second complex is not a subcomplex of the first");
    std::set<Simplex> in_m;
    for (int d = 0; d <= m.dimension(); ++d)
        for (const auto& s : m.simplices(d))
        {
            std::vector<VertexId> ids;
            for (const auto& l : m.labels_of(s))
                ids.push_back(*n.vertex_id(l));
            in_m.insert(Simplex(std::move(ids)));
        }
    DeletedProductComplex product = deleted_product(n);
    const CWComplex& cw = *product.cw();
    std::vector<std::vector<char>> mask(static_cast<std::size_t>(cw.dimension() + 1));
    for (int d = 0; d <= cw.dimension(); ++d)
        for (std::size_t c = 0; c < cw.cell_count(d); ++c)
        {
            const auto& f = product.factors(d, c);
            mask[static_cast<std::size_t>(d)].push_back(in_m.count(f.first) && in_m.count(f.second) ? 1 : 0);
        }
    CellularPair pair(product.cw(), std::move(mask));
    return DeletedPair{std::move(product), std::move(pair)};
}

std::string incidence_document(const CWComplex& cw)
{
    std::ostringstream out;
    for (int d = 0; d <= cw.dimension(); ++d)
        for (std::size_t c = 0; c < cw.cell_count(d); ++c)
        {
            out << d << '.' << c << " dim " << d;
            if (cw.has_names())
                out << " [" << cw.name(d, c) << ']';
            out << " faces";
            for (const auto& f : cw.faces(d, c))
                out << ' ' << (f.coefficient > 0 ? '+' : '-') << (d - 1) << '.' << f.face;
            out << '\n';
        }
    return out.str();
}

} // namespace delprod
