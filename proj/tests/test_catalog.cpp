#include "delprod/catalog.hpp"
#include "delprod/errors.hpp"
#include "delprod/homology.hpp"
#include "delprod/report.hpp"

#include <doctest.h>

using namespace delprod;

namespace {

const AbelianGroup Z = AbelianGroup::free(1);
const AbelianGroup zero = AbelianGroup::trivial();

} // namespace

TEST_CASE("every catalog entry passes its self-check")
{
    for (const auto& id : catalog_ids())
    {
        INFO(id);
        CHECK_NOTHROW(catalog_entry(id));
    }
}

TEST_CASE("catalog shapes")
{
    CHECK(catalog("sphere:2").f_vector() == std::vector<std::size_t>{4, 6, 4});
    CHECK(catalog("simplex:4").f_vector() == std::vector<std::size_t>{5, 10, 10, 5, 1});
    CHECK(catalog("poincare16").f_vector() == std::vector<std::size_t>{16, 106, 180, 90});
    CHECK(catalog("poincare16").vertex_labels().size() == 16);
}

TEST_CASE("the Poincare sphere is a homology sphere")
{
    const ChainComplex c = catalog("poincare16").chain_complex();
    CHECK(homology_groups(c) == std::vector<AbelianGroup>{Z, zero, zero, Z});
    CHECK(cohomology_groups(c) == std::vector<AbelianGroup>{Z, zero, zero, Z});
}

TEST_CASE("the punctured Poincare sphere is an acyclic 3-complex with 2-sphere boundary")
{
    const SimplicialComplex& n = catalog("poincare_punctured");
    CHECK(n.dimension() == 3);
    CHECK_FALSE(n.vertex_id(puncture_vertex).has_value());
    CHECK(homology_groups(n.chain_complex()) == std::vector<AbelianGroup>{Z, zero, zero, zero});
    const SimplicialComplex b = boundary_subcomplex(n);
    CHECK(homology_groups(b.chain_complex()) == std::vector<AbelianGroup>{Z, zero, Z});
    // the boundary vertices are the neighbours of the removed vertex
    const SimplicialComplex star = closed_star(catalog("poincare16"), puncture_vertex);
    std::vector<std::string> link;
    for (const auto& l : star.vertex_labels())
        if (l != puncture_vertex)
            link.push_back(l);
    CHECK(b.vertex_labels() == link);
}

TEST_CASE("unknown ids and bad sources")
{
    CHECK_THROWS_AS(catalog("simplex:5"), Error);
    CHECK_THROWS_AS(catalog("sphere:4"), Error);
    CHECK_THROWS_AS(catalog("klein"), Error);
    CHECK_THROWS_AS(catalog("simplex:"), Error);
    CHECK_THROWS_AS(load_complex("/nonexistent/file.txt"), Error);
    CHECK_THROWS_AS(catalog_cover("torus"), Error);
}

TEST_CASE("load_complex accepts catalog references")
{
    CHECK(load_complex("catalog:rp2").f_vector() == catalog("rp2").f_vector());
}

TEST_CASE("group records round trip")
{
    for (const AbelianGroup& g : {zero, Z, AbelianGroup(3, {2, 4, 12}),
                                  AbelianGroup(0, {Integer("123456789012345678901234567890")})})
    {
        const Json j = to_json(g);
        CHECK(group_from_json(Json::parse(j.dump())) == g);
    }
    CHECK(to_json(AbelianGroup(1, {2})).dump() == R"({"free_rank":1,"torsion":[2],"text":"Z + Z_2"})");
}

TEST_CASE("text rendering carries the same groups")
{
    const Json report = make_report("homology", Json{{"source", "catalog:rp2"}},
                                    Json{{"groups", to_json(std::vector<DegreeGroup>{{0, Z}, {1, AbelianGroup::cyclic(2)}})}},
                                    0.5);
    const std::string text = render_text(report);
    CHECK(text.find("schema_version: 1") != std::string::npos);
    CHECK(text.find("- degree 0: Z\n") != std::string::npos);
    CHECK(text.find("- degree 1: Z_2\n") != std::string::npos);
}
