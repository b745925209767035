#include "delprod/cw_complex.hpp"

#include "delprod/errors.hpp"

#include <algorithm>
#include <mutex>

namespace delprod {

CWComplex::CWComplex() : chains_(std::make_shared<const ChainComplex>()) {}

CWComplex::CWComplex(std::vector<std::vector<std::vector<Incidence>>> faces, std::vector<std::vector<std::string>> names)
    : faces_(std::move(faces)), names_(std::move(names))
{
    if (!names_.empty())
    {
        if (names_.size() != faces_.size())
            throw Error("CW complex: names must cover every dimension");
        for (std::size_t d = 0; d < faces_.size(); ++d)
            if (names_[d].size() != faces_[d].size())
                throw Error("CW complex: one name per cell required");
    }
    std::vector<std::size_t> ranks;
    std::vector<SparseIntMatrix> bounds;
    for (std::size_t d = 0; d < faces_.size(); ++d)
    {
        ranks.push_back(faces_[d].size());
        if (d == 0)
        {
            for (const auto& f : faces_[0])
                if (!f.empty())
                    throw Error("CW complex: 0-cells have no faces");
            continue;
        }
        std::vector<Triplet> t;
        for (std::size_t c = 0; c < faces_[d].size(); ++c)
        {
            auto sorted = faces_[d][c];
            std::sort(sorted.begin(), sorted.end(), [](const Incidence& a, const Incidence& b) { return a.face < b.face; });
            for (std::size_t k = 0; k < sorted.size(); ++k)
            {
                const auto& inc = sorted[k];
                if (inc.face >= faces_[d - 1].size())
                    throw Error("CW complex: face reference out of range in dimension " + std::to_string(d));
                if (inc.coefficient != 1 && inc.coefficient != -1)
                    throw Error("CW complex: incidence numbers must be +1 or -1 (regular complex)");
                if (k > 0 && sorted[k - 1].face == inc.face)
                    throw Error("CW complex: repeated face in dimension " + std::to_string(d));
                t.push_back({inc.face, c, inc.coefficient});
            }
        }
        bounds.push_back(SparseIntMatrix::from_triplets(faces_[d - 1].size(), faces_[d].size(), t));
    }
    auto chains = std::make_shared<ChainComplex>(std::move(ranks), std::move(bounds));
    chains->check_chain_condition();
    chains_ = std::move(chains);
}

std::size_t CWComplex::cell_count(int d) const noexcept
{
    return d < 0 || d > dimension() ? 0 : faces_[static_cast<std::size_t>(d)].size();
}

std::size_t CWComplex::total_cells() const noexcept
{
    std::size_t n = 0;
    for (const auto& f : faces_)
        n += f.size();
    return n;
}

const std::vector<Incidence>& CWComplex::faces(int d, std::size_t cell) const
{
    return faces_.at(static_cast<std::size_t>(d)).at(cell);
}

std::string CWComplex::name(int d, std::size_t cell) const
{
    if (names_.empty())
        return std::to_string(d) + "." + std::to_string(cell);
    return names_.at(static_cast<std::size_t>(d)).at(cell);
}

CellularMap::CellularMap(CWComplexPtr domain, CWComplexPtr codomain, std::vector<std::vector<SignedCell>> assignment)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), assignment_(std::move(assignment))
{
    if (static_cast<int>(assignment_.size()) != domain_->dimension() + 1)
        throw Error("cellular map: one assignment list per domain dimension required");
    for (int d = 0; d <= domain_->dimension(); ++d)
    {
        const auto& a = assignment_[static_cast<std::size_t>(d)];
        if (a.size() != domain_->cell_count(d))
            throw Error("cellular map: every cell needs an image");
        for (const auto& s : a)
            if (s.cell >= codomain_->cell_count(d) || (s.sign != 1 && s.sign != -1))
                throw Error("cellular map: invalid image cell in dimension " + std::to_string(d));
    }
}

CellularMap CellularMap::identity(CWComplexPtr space)
{
    std::vector<std::vector<SignedCell>> a(static_cast<std::size_t>(space->dimension() + 1));
    for (int d = 0; d <= space->dimension(); ++d)
        for (std::size_t c = 0; c < space->cell_count(d); ++c)
            a[static_cast<std::size_t>(d)].push_back({static_cast<std::uint32_t>(c), 1});
    return CellularMap(space, space, std::move(a));
}

const SignedCell& CellularMap::image(int d, std::size_t cell) const
{
    return assignment_.at(static_cast<std::size_t>(d)).at(cell);
}

SparseIntMatrix CellularMap::chain_matrix(int d) const
{
    std::vector<Triplet> t;
    if (d >= 0 && d <= domain_->dimension())
        for (std::size_t c = 0; c < assignment_[static_cast<std::size_t>(d)].size(); ++c)
        {
            const auto& s = assignment_[static_cast<std::size_t>(d)][c];
            t.push_back({s.cell, c, s.sign});
        }
    return SparseIntMatrix::from_triplets(codomain_->cell_count(d), domain_->cell_count(d), t);
}

void CellularMap::check_chain_map() const
{
    const auto& dc = domain_->chain_complex();
    const auto& cc = codomain_->chain_complex();
    for (int d = 1; d <= domain_->dimension(); ++d)
        if (!(cc.boundary(d) * chain_matrix(d) == chain_matrix(d - 1) * dc.boundary(d)))
            throw ChainConditionError(d, "cellular map does not commute with the boundary");
}

bool CellularMap::is_chain_map() const
{
    try
    {
        check_chain_map();
        return true;
    }
    catch (const ChainConditionError&)
    {
        return false;
    }
}

CellularMap CellularMap::then(const CellularMap& after) const
{
    if (codomain_ != after.domain_)
        throw Error("cellular map composition: codomain and domain differ");
    std::vector<std::vector<SignedCell>> a = assignment_;
    for (std::size_t d = 0; d < a.size(); ++d)
        for (auto& s : a[d])
        {
            const auto& next = after.image(static_cast<int>(d), s.cell);
            s = {next.cell, s.sign * next.sign};
        }
    return CellularMap(domain_, after.codomain_, std::move(a));
}

struct CellularPair::Derived
{
    std::once_flag relative_once;
    std::shared_ptr<const ChainComplex> relative;
    std::once_flag sub_once;
    CWComplexPtr sub;
    std::vector<std::vector<std::uint32_t>> sub_to_ambient;
};

CellularPair::CellularPair(CWComplexPtr ambient, std::vector<std::vector<char>> in_sub)
    : ambient_(std::move(ambient)), in_sub_(std::move(in_sub)), derived_(std::make_shared<Derived>())
{
    if (static_cast<int>(in_sub_.size()) != ambient_->dimension() + 1)
        throw Error("cellular pair: one membership mask per dimension required");
    for (int d = 0; d <= ambient_->dimension(); ++d)
    {
        if (in_sub_[static_cast<std::size_t>(d)].size() != ambient_->cell_count(d))
            throw Error("cellular pair: membership mask has the wrong size");
        for (std::size_t c = 0; c < ambient_->cell_count(d); ++c)
        {
            if (!in_sub_[static_cast<std::size_t>(d)][c])
                continue;
            for (const auto& f : ambient_->faces(d, c))
                if (!in_sub_[static_cast<std::size_t>(d - 1)][f.face])
                    throw Error("cellular pair: subcomplex is not closed under faces (cell " + ambient_->name(d, c)
                                + ")");
        }
    }
}

bool CellularPair::in_sub(int d, std::size_t cell) const
{
    return in_sub_.at(static_cast<std::size_t>(d)).at(cell) != 0;
}

std::size_t CellularPair::sub_cell_count() const
{
    std::size_t n = 0;
    for (const auto& m : in_sub_)
        n += static_cast<std::size_t>(std::count(m.begin(), m.end(), 1));
    return n;
}

const ChainComplex& CellularPair::relative_chain_complex() const
{
    std::call_once(derived_->relative_once, [this] {
        std::vector<std::vector<std::size_t>> kept(in_sub_.size());
        for (std::size_t d = 0; d < in_sub_.size(); ++d)
            for (std::size_t c = 0; c < in_sub_[d].size(); ++c)
                if (!in_sub_[d][c])
                    kept[d].push_back(c);
        derived_->relative = std::make_shared<const ChainComplex>(ambient_->chain_complex().restricted(kept));
    });
    return *derived_->relative;
}

CWComplexPtr CellularPair::sub_complex() const
{
    std::call_once(derived_->sub_once, [this] {
        std::vector<std::vector<std::uint32_t>> to_ambient(in_sub_.size());
        std::vector<std::vector<std::uint32_t>> to_sub(in_sub_.size());
        for (std::size_t d = 0; d < in_sub_.size(); ++d)
        {
            to_sub[d].assign(in_sub_[d].size(), 0);
            for (std::size_t c = 0; c < in_sub_[d].size(); ++c)
                if (in_sub_[d][c])
                {
                    to_sub[d][c] = static_cast<std::uint32_t>(to_ambient[d].size());
                    to_ambient[d].push_back(static_cast<std::uint32_t>(c));
                }
        }
        // trailing empty dimensions are dropped
        std::size_t dims = to_ambient.size();
        while (dims > 0 && to_ambient[dims - 1].empty())
            --dims;
        std::vector<std::vector<std::vector<Incidence>>> faces(dims);
        std::vector<std::vector<std::string>> names;
        if (ambient_->has_names())
            names.resize(dims);
        for (std::size_t d = 0; d < dims; ++d)
            for (std::uint32_t c : to_ambient[d])
            {
                std::vector<Incidence> f;
                for (const auto& inc : ambient_->faces(static_cast<int>(d), c))
                    f.push_back({to_sub[d - 1][inc.face], inc.coefficient});
                faces[d].push_back(std::move(f));
                if (!names.empty())
                    names[d].push_back(ambient_->name(static_cast<int>(d), c));
            }
        to_ambient.resize(dims);
        derived_->sub = std::make_shared<const CWComplex>(std::move(faces), std::move(names));
        derived_->sub_to_ambient = std::move(to_ambient);
    });
    return derived_->sub;
}

CellularMap CellularPair::inclusion() const
{
    CWComplexPtr sub = sub_complex();
    std::vector<std::vector<SignedCell>> a(derived_->sub_to_ambient.size());
    for (std::size_t d = 0; d < a.size(); ++d)
        for (std::uint32_t c : derived_->sub_to_ambient[d])
            a[d].push_back({c, 1});
    return CellularMap(sub, ambient_, std::move(a));
}

} // namespace delprod
