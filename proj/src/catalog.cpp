#include "delprod/catalog.hpp"

#include "delprod/deleted_product.hpp"
#include "delprod/errors.hpp"
#include "delprod/homology.hpp"

#include <fstream>
#include <memory>
#include <mutex>
#include <sstream>

namespace delprod {

namespace detail {
extern const char* const poincare16_facets;
}

namespace {

using Facets = std::vector<std::vector<std::string>>;

Facets simplex_facets(int n)
{
    std::vector<std::string> f;
    for (int i = 0; i <= n; ++i)
        f.push_back(std::to_string(i));
    return {f};
}

Facets sphere_facets(int n)
{
    Facets out;
    for (int skip = 0; skip <= n + 1; ++skip)
    {
        std::vector<std::string> f;
        for (int i = 0; i <= n + 1; ++i)
            if (i != skip)
                f.push_back(std::to_string(i));
        out.push_back(f);
    }
    return out;
}

std::vector<AbelianGroup> sphere_homology(int n)
{
    std::vector<AbelianGroup> h(static_cast<std::size_t>(std::max(n, 0) + 1), AbelianGroup::trivial());
    if (n == 0)
        return {AbelianGroup::free(2)};
    h[0] = AbelianGroup::free(1);
    h[static_cast<std::size_t>(n)] = AbelianGroup::free(1);
    return h;
}

std::vector<AbelianGroup> point_homology(int dim)
{
    std::vector<AbelianGroup> h(static_cast<std::size_t>(dim + 1), AbelianGroup::trivial());
    h[0] = AbelianGroup::free(1);
    return h;
}

std::string describe(const std::vector<AbelianGroup>& groups)
{
    std::string s = "(";
    for (std::size_t i = 0; i < groups.size(); ++i)
        s += (i ? ", " : "") + groups[i].to_string();
    return s + ")";
}

void expect_homology(const std::string& id, const SimplicialComplex& k, const std::vector<AbelianGroup>& expected)
{
    auto h = homology_groups(k.chain_complex());
    if (h != expected)
        throw CatalogValidationError("catalog entry '" + id + "' failed self-check: homology " + describe(h)
                                     + ", expected " + describe(expected));
}

void expect_f_vector(const std::string& id, const SimplicialComplex& k, const std::vector<std::size_t>& expected)
{
    if (k.f_vector() != expected)
        throw CatalogValidationError("catalog entry '" + id + "' failed self-check: unexpected f-vector");
}

std::size_t binomial(std::size_t n, std::size_t k)
{
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

CatalogEntry build(std::string_view id)
{
    CatalogEntry e;
    e.id = std::string(id);
    auto number = [&](std::string_view prefix) -> int {
        const std::string_view rest = id.substr(prefix.size());
        if (rest.size() != 1 || rest[0] < '0' || rest[0] > '9')
            throw Error("unknown catalog id '" + e.id + "'");
        return rest[0] - '0';
    };

    if (id.starts_with("simplex:"))
    {
        const int n = number("simplex:");
        if (n > 4)
            throw Error("catalog: simplex dimension must be at most 4");
        e.complex = SimplicialComplex::from_facets(simplex_facets(n));
        e.description = "the full " + std::to_string(n) + "-simplex";
        e.provenance = "generated";
        std::vector<std::size_t> f;
        for (int d = 0; d <= n; ++d)
            f.push_back(binomial(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(d + 1)));
        expect_f_vector(e.id, e.complex, f);
        expect_homology(e.id, e.complex, point_homology(n));
    }
    else if (id.starts_with("sphere:"))
    {
        const int n = number("sphere:");
        if (n > 3)
            throw Error("catalog: sphere dimension must be at most 3");
        e.complex = SimplicialComplex::from_facets(sphere_facets(n));
        e.description = "boundary of the " + std::to_string(n + 1) + "-simplex";
        e.provenance = "generated";
        expect_homology(e.id, e.complex, sphere_homology(n));
        if (n == 0)
            e.antipodal = {{"0", "1"}, {"1", "0"}};
    }
    else if (id == "rp2")
    {
        e.complex = SimplicialComplex::from_facets({{"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"}, {"1", "5", "6"},
                                                    {"1", "6", "2"}, {"2", "3", "5"}, {"3", "4", "6"}, {"4", "5", "2"},
                                                    {"5", "6", "3"}, {"6", "2", "4"}});
        e.description = "6-vertex real projective plane";
        e.provenance = "standard minimal triangulation (half of the icosahedron)";
        expect_f_vector(e.id, e.complex, {6, 15, 10});
        expect_homology(e.id, e.complex,
                        {AbelianGroup::free(1), AbelianGroup::cyclic(2), AbelianGroup::trivial()});
    }
    else if (id == "octahedron")
    {
        Facets f;
        for (const char* x : {"x0", "x1"})
            for (const char* y : {"y0", "y1"})
                for (const char* z : {"z0", "z1"})
                    f.push_back({x, y, z});
        e.complex = SimplicialComplex::from_facets(f);
        e.description = "boundary of the octahedron, with the antipodal vertex involution";
        e.provenance = "generated";
        e.antipodal = {{"x0", "x1"}, {"x1", "x0"}, {"y0", "y1"}, {"y1", "y0"}, {"z0", "z1"}, {"z1", "z0"}};
        expect_f_vector(e.id, e.complex, {6, 12, 8});
        expect_homology(e.id, e.complex, sphere_homology(2));
    }
    else if (id == "hexagon")
    {
        Facets f;
        for (int i = 0; i < 6; ++i)
            f.push_back({"h" + std::to_string(i), "h" + std::to_string((i + 1) % 6)});
        e.complex = SimplicialComplex::from_facets(f);
        e.description = "hexagonal circle, with the antipodal vertex involution";
        e.provenance = "generated";
        for (int i = 0; i < 6; ++i)
            e.antipodal["h" + std::to_string(i)] = "h" + std::to_string((i + 3) % 6);
        expect_homology(e.id, e.complex, sphere_homology(1));
    }
    else if (id == "poincare16")
    {
        e.complex = parse_complex(detail::poincare16_facets);
        e.description = "16-vertex triangulation of the Poincare homology 3-sphere";
        e.provenance = "data/poincare16.txt; obtained from a triangulation of the Poincare dodecahedral space "
                       "by subdivision and bistellar flips; every property is re-derived on load";
        expect_f_vector(e.id, e.complex, {16, 106, 180, 90});
        if (!e.complex.is_pure() || !boundary_subcomplex(e.complex).empty())
            throw CatalogValidationError("catalog entry 'poincare16' failed self-check: not a closed 3-pseudomanifold");
        expect_homology(e.id, e.complex, sphere_homology(3));
    }
    else if (id == "poincare_punctured")
    {
        const SimplicialComplex& whole = catalog_entry("poincare16").complex;
        e.complex = remove_open_star(whole, puncture_vertex);
        e.description = "Poincare homology sphere minus the open star of v01: a nontrivial homology 3-ball";
        e.provenance = "derived from poincare16";
        if (!e.complex.is_pure() || e.complex.dimension() != 3)
            throw CatalogValidationError("catalog entry 'poincare_punctured' failed self-check: not a pure 3-complex");
        expect_homology(e.id, e.complex, point_homology(3));
        const SimplicialComplex boundary = boundary_subcomplex(e.complex);
        expect_homology(e.id + " boundary", boundary, sphere_homology(2));
    }
    else
        throw Error("unknown catalog id '" + e.id + "'");
    return e;
}

} // namespace

std::vector<std::string> catalog_ids()
{
    std::vector<std::string> ids;
    for (int n = 0; n <= 4; ++n)
        ids.push_back("simplex:" + std::to_string(n));
    for (int n = 0; n <= 3; ++n)
        ids.push_back("sphere:" + std::to_string(n));
    for (const char* id : {"rp2", "octahedron", "hexagon", "poincare16", "poincare_punctured"})
        ids.emplace_back(id);
    return ids;
}

const CatalogEntry& catalog_entry(std::string_view id)
{
    static std::mutex mutex;
    static std::map<std::string, std::unique_ptr<CatalogEntry>, std::less<>> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(id);
        if (it != cache.end())
            return *it->second;
    }
    auto entry = std::make_unique<CatalogEntry>(build(id));
    std::lock_guard<std::mutex> lock(mutex);
    auto [it, inserted] = cache.emplace(std::string(id), std::move(entry));
    return *it->second;
}

SimplicialComplex load_complex(std::string_view source)
{
    if (source.starts_with("catalog:"))
        return catalog(source.substr(8));
    std::ifstream in{std::string(source)};
    if (!in)
        throw Error("cannot read '" + std::string(source) + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_complex(buffer.str());
}

QuotientCover catalog_cover(std::string_view id)
{
    if (id == "s0")
        return quotient_cover(simplicial_involution(catalog("sphere:0"), catalog_entry("sphere:0").antipodal));
    if (id == "hexagon" || id == "octahedron")
        return quotient_cover(simplicial_involution(catalog(id), catalog_entry(id).antipodal));
    if (id.starts_with("dp:"))
    {
        DeletedProductComplex d = deleted_product(catalog(id.substr(3)));
        return quotient_cover(FreeInvolutionComplex(d.cw(), d.involution()));
    }
    throw Error("unknown cover '" + std::string(id) + "'");
}

std::vector<std::string> standard_cover_ids()
{
    return {"s0", "hexagon", "octahedron", "dp:simplex:1", "dp:sphere:1", "dp:simplex:2", "dp:simplex:3"};
}

} // namespace delprod
