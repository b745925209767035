#include "delprod/catalog.hpp"
#include "delprod/deleted_product.hpp"
#include "delprod/errors.hpp"
#include "delprod/homology.hpp"
#include "delprod/involution.hpp"
#include "delprod/simplicial_complex.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace delprod;

namespace {

const AbelianGroup Z = AbelianGroup::free(1);
const AbelianGroup zero = AbelianGroup::trivial();
AbelianGroup Zn(int n) { return AbelianGroup::cyclic(n); }

std::vector<AbelianGroup> cohomology_of(const SimplicialComplex& k, Coefficients c = {})
{
    return cohomology_groups(k.chain_complex(), c);
}

/// Cells of k whose labels all lie in the given set.
CellularPair vertex_set_pair(const SimplicialComplex& k, const std::vector<std::string>& keep)
{
    CWComplexPtr cw = k.to_cw();
    std::vector<std::vector<char>> mask(static_cast<std::size_t>(k.dimension() + 1));
    for (int d = 0; d <= k.dimension(); ++d)
        for (const auto& s : k.simplices(d))
        {
            bool in = true;
            for (const auto& l : k.labels_of(s))
                in = in && std::find(keep.begin(), keep.end(), l) != keep.end();
            mask[static_cast<std::size_t>(d)].push_back(in ? 1 : 0);
        }
    return CellularPair(cw, std::move(mask));
}

CellularPair subcomplex_pair(const SimplicialComplex& k, const SimplicialComplex& sub)
{
    CWComplexPtr cw = k.to_cw();
    std::vector<std::vector<char>> mask(static_cast<std::size_t>(k.dimension() + 1));
    for (int d = 0; d <= k.dimension(); ++d)
        for (const auto& s : k.simplices(d))
            mask[static_cast<std::size_t>(d)].push_back(sub.contains_labels(k.labels_of(s)) ? 1 : 0);
    return CellularPair(cw, std::move(mask));
}

/// Number of elements of H^i(K; Z_m) predicted from integral homology.
Integer uct_prediction(const std::vector<AbelianGroup>& h, int i, const Integer& m)
{
    Integer size = 1;
    if (i < static_cast<int>(h.size()))
    {
        for (std::size_t r = 0; r < h[static_cast<std::size_t>(i)].free_rank(); ++r)
            size *= m;
        for (const auto& t : h[static_cast<std::size_t>(i)].torsion())
            size *= gcd_of(t, m);
    }
    if (i >= 1 && i - 1 < static_cast<int>(h.size()))
        for (const auto& t : h[static_cast<std::size_t>(i - 1)].torsion())
            size *= gcd_of(t, m);
    return size;
}

} // namespace

TEST_CASE("homology of a point")
{
    SimplicialComplex pt = parse_complex("facet a");
    CHECK(homology(pt.chain_complex(), 0) == Z);
    CHECK(homology(pt.chain_complex(), 1) == zero);
    CHECK(homology(pt.chain_complex(), -1) == zero);
}

TEST_CASE("homology and cohomology of the tetrahedron boundary")
{
    const SimplicialComplex& s2 = catalog("sphere:2");
    CHECK(homology_groups(s2.chain_complex()) == std::vector<AbelianGroup>{Z, zero, Z});
    CHECK(cohomology_of(s2) == std::vector<AbelianGroup>{Z, zero, Z});
}

TEST_CASE("projective plane")
{
    const SimplicialComplex& rp2 = catalog("rp2");
    CHECK(homology(rp2.chain_complex(), 1) == Zn(2));
    CHECK(cohomology_of(rp2) == std::vector<AbelianGroup>{Z, zero, Zn(2)});
    CHECK(cohomology_of(rp2, Coefficients::modulo(2)) == std::vector<AbelianGroup>{Zn(2), Zn(2), Zn(2)});
    CHECK(cohomology_of(rp2, Coefficients::modulo(3)) == std::vector<AbelianGroup>{Zn(3), zero, zero});
    CHECK(cohomology_of(rp2, Coefficients::modulo(4)) == std::vector<AbelianGroup>{Zn(4), Zn(2), Zn(2)});
}

TEST_CASE("cochain presentation agrees with the integral fast path")
{
    for (const char* id : {"rp2", "sphere:2", "octahedron", "simplex:3", "hexagon"})
    {
        const ChainComplex c = catalog(id).chain_complex();
        const CochainComplex dual = CochainComplex::dual(c);
        for (int p = 0; p <= c.top_dimension(); ++p)
            CHECK(dual.presentation(p)->group() == cohomology(c, p));
    }
}

TEST_CASE("kernel-based and generic cocycle presentations agree")
{
    for (const char* id : {"rp2", "octahedron", "hexagon"})
    {
        const CochainComplex dual = CochainComplex::dual(catalog(id).chain_complex());
        for (int p = 0; p <= dual.top_degree(); ++p)
        {
            const auto fast = dual.presentation(p);
            const GroupPresentation generic = GroupPresentation::subquotient(
                dual.rank(p), integer_kernel(dual.coboundary(p)), dual.coboundary(p - 1));
            CHECK(fast->group() == generic.group());
            for (const auto* g : {fast.get(), &generic})
                for (std::size_t i = 0; i < g->group().generator_count(); ++i)
                {
                    IntVector e(g->group().generator_count());
                    e[i] = 1;
                    CHECK(g->canonical_coordinates(g->canonical_generator(i)) == e);
                    CHECK(generic.is_cycle(g->canonical_generator(i)));
                }
        }
    }
}

TEST_CASE("vanishing presentations")
{
    // cycles of Z^3 are the vectors with x0 = x1
    const GroupPresentation v = GroupPresentation::vanishing(3, SparseIntMatrix::from_dense({{1, -1, 0}}));
    CHECK_FALSE(v.materialized());
    CHECK(v.group().is_trivial());
    CHECK(v.is_cycle({2, 2, 5}));
    CHECK(v.is_boundary({2, 2, 5}));
    CHECK_FALSE(v.is_cycle({1, 0, 0}));
    CHECK(v.canonical_coordinates({1, 1, 0}) == IntVector{});
    CHECK_FALSE(v.canonical_coordinates({1, 0, 0}).has_value());
    CHECK_THROWS_AS(v.cycles(), Error);
    CHECK_THROWS_AS(GroupPresentation::vanishing(2, SparseIntMatrix::from_dense({{1, -1, 0}})), Error);
}

TEST_CASE("restriction to the deleted product of a vertex star")
{
    const SimplicialComplex sd = barycentric_subdivision(catalog("simplex:3"));
    const DeletedPair dp = deleted_pair(sd, closed_star(sd, *first_interior_vertex(sd)));
    const CellularMap inclusion = dp.pair.inclusion();
    // both deleted products are homotopy 2-spheres and the relative groups vanish
    const GroupHom r2 = induced_cohomology_map(inclusion, 2);
    CHECK(r2.domain() == Z);
    CHECK(r2.is_isomorphism());
    const GroupHom r3 = induced_cohomology_map(inclusion, 3);
    CHECK(r3.domain().is_trivial());
    CHECK(r3.codomain().is_trivial());
    CHECK(r3.is_isomorphism());
}

TEST_CASE("coefficient modulus must be at least 2")
{
    CHECK_THROWS_AS(Coefficients::modulo(1), Error);
    CHECK_THROWS_AS(Coefficients::modulo(0), Error);
    CHECK_THROWS_AS(Coefficients::modulo(-3), Error);
}

TEST_CASE("chain condition violations report the dimension")
{
    SparseIntMatrix d1 = SparseIntMatrix::from_dense({{1}, {1}});
    SparseIntMatrix d2 = SparseIntMatrix::from_dense({{1}});
    ChainComplex c({2, 1, 1}, {d1, d2});
    try
    {
        c.check_chain_condition();
        FAIL("expected a chain condition error");
    }
    catch (const ChainConditionError& e)
    {
        CHECK(e.dimension() == 1);
    }
}

TEST_CASE("relative cohomology")
{
    const SimplicialComplex& tri = catalog("simplex:2");
    CellularPair same = subcomplex_pair(tri, tri);
    for (int i = 0; i <= 3; ++i)
        CHECK(relative_cohomology(same, i).is_trivial());

    const SimplicialComplex edge = parse_complex("facet a b");
    CellularPair rel(edge.to_cw(), {{1, 1}, {0}});
    // only the vertices are in the subcomplex here
    CHECK(rel.sub_cell_count() == 2);
    CHECK(relative_cohomology(rel, 0) == zero);
    CHECK(relative_cohomology(rel, 1) == Z);
    CHECK(relative_homology(rel, 1) == Z);

    CellularPair ball = subcomplex_pair(catalog("simplex:3"), catalog("sphere:2"));
    CHECK(relative_cohomology(ball, 3) == Z);
    CHECK(relative_cohomology(ball, 2) == zero);
}

TEST_CASE("induced maps")
{
    const SimplicialComplex& rp2 = catalog("rp2");
    CWComplexPtr cw = rp2.to_cw();
    for (int i = 0; i <= 2; ++i)
    {
        GroupHom id = induced_cohomology_map(CellularMap::identity(cw), i);
        CHECK(id.is_isomorphism());
        CHECK(id.matrix() == SparseIntMatrix::identity(id.domain().generator_count()));
    }

    CellularPair tri = subcomplex_pair(catalog("simplex:2"), catalog("sphere:1"));
    GroupHom restriction = induced_cohomology_map(tri.inclusion(), 1);
    CHECK(restriction.is_zero());
    CHECK(restriction.domain() == zero);
    CHECK(restriction.codomain() == Z);

    // the antipodal map of the octahedron reverses orientation
    FreeInvolutionComplex oct = simplicial_involution(catalog("octahedron"), catalog_entry("octahedron").antipodal);
    GroupHom a2 = induced_cohomology_map(oct.involution(), 2);
    CHECK(a2.matrix() == SparseIntMatrix::from_dense({{-1}}));
    CHECK(induced_cohomology_map(oct.involution(), 2, Coefficients::modulo(3)).matrix()
          == SparseIntMatrix::from_dense({{2}}));
    GroupHom a0 = induced_cohomology_map(oct.involution(), 0);
    CHECK(a0.matrix() == SparseIntMatrix::from_dense({{1}}));
}

TEST_CASE("induced maps are functorial")
{
    // point inside an edge inside a triangle inside the tetrahedron boundary
    const SimplicialComplex& s2 = catalog("sphere:2");
    CellularPair outer = subcomplex_pair(s2, parse_complex("facet 0 1 2"));
    CWComplexPtr middle = outer.sub_complex();
    std::vector<std::vector<char>> mask(3);
    for (int d = 0; d <= 2; ++d)
        for (std::size_t c = 0; c < middle->cell_count(d); ++c)
            mask[static_cast<std::size_t>(d)].push_back(d < 2 ? 1 : 0);
    CellularPair inner(middle, mask);
    CellularMap f = inner.inclusion();
    CellularMap g = outer.inclusion();
    for (const Coefficients& c : {Coefficients::integers(), Coefficients::modulo(2)})
        for (int i = 0; i <= 2; ++i)
        {
            GroupHom composite = induced_cohomology_map(f.then(g), i, c);
            GroupHom chained = induced_cohomology_map(g, i, c).then(induced_cohomology_map(f, i, c));
            CHECK(composite == chained);
        }
    // the composite in degree 1 is 0 -> Z
    CHECK(induced_cohomology_map(f, 1).codomain() == Z);
    CHECK(induced_cohomology_map(f, 1).domain() == zero);

    FreeInvolutionComplex oct = simplicial_involution(catalog("octahedron"), catalog_entry("octahedron").antipodal);
    const CellularMap& t = oct.involution();
    for (int i = 0; i <= 2; ++i)
        CHECK(induced_cohomology_map(t.then(t), i) == induced_cohomology_map(t, i).then(induced_cohomology_map(t, i)));
}

TEST_CASE("non chain maps are rejected")
{
    const SimplicialComplex edge = parse_complex("facet a b");
    CWComplexPtr cw = edge.to_cw();
    // swap the endpoints but keep the edge orientation
    CellularMap bad(cw, cw, {{{1, 1}, {0, 1}}, {{0, 1}}});
    CHECK_FALSE(bad.is_chain_map());
    CHECK_THROWS_AS(induced_cohomology_map(bad, 0), ChainConditionError);
}

TEST_CASE("group homomorphism kernel and image")
{
    // Z -> Z_4 + Z by 1 -> (1, 2)
    SparseIntMatrix none(1, 0);
    auto z = std::make_shared<const GroupPresentation>(
        GroupPresentation::subquotient(1, SparseIntMatrix::identity(1), none));
    auto target = std::make_shared<const GroupPresentation>(GroupPresentation::subquotient(
        2, SparseIntMatrix::identity(2), SparseIntMatrix::from_dense({{4}, {0}})));
    CHECK(target->group() == AbelianGroup(1, {4}));
    GroupHom f(z, target, SparseIntMatrix::from_dense({{1}, {2}}));
    CHECK(f.is_injective());
    CHECK_FALSE(f.is_surjective());
    CHECK(f.image() == Z);
    CHECK(f.kernel() == zero);

    GroupHom g(z, target, SparseIntMatrix::from_dense({{1}, {0}}));
    CHECK(g.kernel() == Z);
    CHECK(g.image() == Zn(4));
    CHECK(g.matrix() == SparseIntMatrix::from_dense({{1}, {0}}));
    // 5 == 1 in Z_4
    CHECK(GroupHom(z, target, SparseIntMatrix::from_dense({{5}, {0}})) == g);
    // Z_4 -> Z cannot send the generator anywhere nonzero
    CHECK_THROWS_AS(GroupHom(target, z, SparseIntMatrix::from_dense({{1, 0}})), Error);
}

TEST_CASE("long exact sequence of pairs")
{
    std::vector<CellularPair> pairs;
    pairs.push_back(subcomplex_pair(catalog("simplex:2"), catalog("sphere:1")));
    pairs.push_back(subcomplex_pair(catalog("simplex:3"), catalog("sphere:2")));
    pairs.push_back(subcomplex_pair(catalog("rp2"), closed_star(catalog("rp2"), "1")));
    pairs.push_back(subcomplex_pair(catalog("rp2"), parse_complex("facet 1 2\nfacet 2 3\nfacet 3 1")));
    pairs.push_back(subcomplex_pair(catalog("octahedron"), parse_complex("facet x0 y0\nfacet y0 x1\nfacet x1 y1\nfacet y1 x0")));
    pairs.push_back(vertex_set_pair(parse_complex("facet a b"), {"a", "b"}));
    pairs.push_back(subcomplex_pair(catalog("hexagon"), catalog("hexagon")));
    for (const auto& pair : pairs)
        for (const Coefficients& c : {Coefficients::integers(), Coefficients::modulo(2), Coefficients::modulo(4)})
        {
            const auto seq = pair_cohomology_sequence(pair, c);
            for (std::size_t i = 0; i < seq.size(); ++i)
            {
                CHECK(exactness_at(seq[i].to_ambient, seq[i].restriction).relation == SubgroupRelation::Equal);
                CHECK(exactness_at(seq[i].restriction, seq[i].connecting).relation == SubgroupRelation::Equal);
                if (i + 1 < seq.size())
                    CHECK(exactness_at(seq[i].connecting, seq[i + 1].to_ambient).relation == SubgroupRelation::Equal);
            }
            // H^0(X, A) -> H^0(X) is injective
            CHECK(seq[0].to_ambient.is_injective());
        }
}

TEST_CASE("universal coefficients consistency on small catalog complexes")
{
    for (const char* id : {"simplex:2", "sphere:0", "sphere:1", "sphere:2", "sphere:3", "rp2", "octahedron", "hexagon"})
    {
        const ChainComplex c = catalog(id).chain_complex();
        const auto h = homology_groups(c);
        for (int m : {2, 3, 4, 5})
            for (int i = 0; i <= c.top_dimension() + 1; ++i)
            {
                const auto g = cohomology(c, i, Coefficients::modulo(m));
                REQUIRE(g.order().has_value());
                CHECK(*g.order() == uct_prediction(h, i, m));
            }
    }
}

TEST_CASE("random complexes: Betti numbers agree with rational elimination")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial)
    {
        std::string text;
        std::uniform_int_distribution<int> vertex(0, 6);
        for (int f = 0; f < 6; ++f)
        {
            std::set<int> vs;
            while (vs.size() < 3)
                vs.insert(vertex(rng));
            text += "facet";
            for (int v : vs)
                text += " v" + std::to_string(v);
            text += "\n";
        }
        const ChainComplex c = parse_complex(text).chain_complex();
        for (int i = 0; i <= c.top_dimension(); ++i)
        {
            const std::size_t out = oracle::rational_rank(c.boundary(i).to_dense());
            const std::size_t in = oracle::rational_rank(c.boundary(i + 1).to_dense());
            CHECK(homology(c, i).free_rank() == c.rank(i) - out - in);
            CHECK(cohomology(c, i).free_rank() == c.rank(i) - out - in);
        }
    }
}
