#include "delprod/abelian_group.hpp"
#include "delprod/errors.hpp"
#include "delprod/lattice.hpp"
#include "delprod/smith.hpp"
#include "delprod/sparse_matrix.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace delprod;

namespace {

SparseIntMatrix dense(std::vector<std::vector<Integer>> rows) { return SparseIntMatrix::from_dense(rows); }

void check_decomposition(const SparseIntMatrix& a)
{
    SmithNormalForm snf = smith_normal_form(a);
    REQUIRE(snf.left * a * snf.right == snf.diagonal_matrix());
    CHECK(snf.left * snf.left_inverse == SparseIntMatrix::identity(a.rows()));
    for (std::size_t i = 0; i < snf.diagonal.size(); ++i)
    {
        CHECK(snf.diagonal[i] > 0);
        if (i + 1 < snf.diagonal.size())
            CHECK(snf.diagonal[i + 1] % snf.diagonal[i] == 0);
    }
    CHECK(abs_value(oracle::determinant(snf.left.to_dense())) == 1);
    CHECK(abs_value(oracle::determinant(snf.right.to_dense())) == 1);
    CHECK(snf.rank() == oracle::rational_rank(a.to_dense()));
}

} // namespace

TEST_CASE("smith normal form of the 2x2 example")
{
    SparseIntMatrix a = dense({{2, 4}, {6, 8}});
    SmithNormalForm snf = smith_normal_form(a);
    CHECK(snf.diagonal == std::vector<Integer>{2, 4});
    check_decomposition(a);
    CHECK(cokernel(a) == AbelianGroup(0, {2, 4}));
    CHECK(cokernel(a).to_string() == "Z_2 + Z_4");
}

TEST_CASE("smith normal form of zero and identity matrices")
{
    SparseIntMatrix z(3, 5);
    SmithNormalForm snf = smith_normal_form(z);
    CHECK(snf.rank() == 0);
    CHECK(snf.left == SparseIntMatrix::identity(3));
    CHECK(snf.right == SparseIntMatrix::identity(5));

    SparseIntMatrix id = SparseIntMatrix::identity(4);
    snf = smith_normal_form(id);
    CHECK(snf.diagonal == std::vector<Integer>(4, 1));
    CHECK(snf.diagonal_matrix() == id);
    CHECK(cokernel(id).is_trivial());
}

TEST_CASE("cokernel of an empty relation matrix is free")
{
    CHECK(cokernel(SparseIntMatrix(3, 0)) == AbelianGroup::free(3));
    CHECK(cokernel(SparseIntMatrix(0, 4)).is_trivial());
}

TEST_CASE("divisibility repair across pivots")
{
    // diag(2, 3) must become diag(1, 6); diag(4, 6) must become diag(2, 12)
    check_decomposition(dense({{2, 0}, {0, 3}}));
    CHECK(smith_normal_form(dense({{2, 0}, {0, 3}})).diagonal == std::vector<Integer>{1, 6});
    CHECK(smith_normal_form(dense({{4, 0, 0}, {0, 6, 0}})).diagonal == std::vector<Integer>{2, 12});
    check_decomposition(dense({{4, 0, 0}, {0, 6, 0}}));
}

TEST_CASE("randomized smith normal form against the rational elimination oracle")
{
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> size(0, 12), value(-9, 9), density(0, 3);
    for (int trial = 0; trial < 60; ++trial)
    {
        std::size_t m = size(rng), n = size(rng);
        std::vector<std::vector<Integer>> d(m, std::vector<Integer>(n));
        for (auto& row : d)
            for (auto& x : row)
                x = density(rng) == 0 ? Integer(value(rng)) : Integer(0);
        SparseIntMatrix a = SparseIntMatrix::from_dense(d);
        if (m == 0)
            a = SparseIntMatrix(0, n);
        check_decomposition(a);
        ElementaryDivisors ed = elementary_divisors(a);
        SmithNormalForm snf = smith_normal_form(a);
        CHECK(ed.rank == snf.rank());
        std::vector<Integer> nonunit;
        for (const auto& x : snf.diagonal)
            if (x != 1)
                nonunit.push_back(x);
        CHECK(ed.torsion == nonunit);
    }
}

TEST_CASE("cokernel is invariant under permutations and zero padding")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> value(-4, 4);
    for (int trial = 0; trial < 25; ++trial)
    {
        std::vector<std::vector<Integer>> d(6, std::vector<Integer>(5));
        for (auto& row : d)
            for (auto& x : row)
                x = value(rng);
        AbelianGroup g = cokernel(SparseIntMatrix::from_dense(d));

        auto permuted = d;
        std::shuffle(permuted.begin(), permuted.end(), rng);
        std::vector<std::size_t> cols = {4, 2, 0, 3, 1};
        for (auto& row : permuted)
        {
            std::vector<Integer> r;
            for (auto c : cols)
                r.push_back(row[c]);
            row = r;
        }
        CHECK(cokernel(SparseIntMatrix::from_dense(permuted)) == g);

        auto padded = d;
        for (auto& row : padded)
            row.push_back(0);
        CHECK(cokernel(SparseIntMatrix::from_dense(padded)) == g);
        padded.push_back(std::vector<Integer>(6, 0));
        CHECK(cokernel(SparseIntMatrix::from_dense(padded)) == g.direct_sum(AbelianGroup::free(1)));
    }
}

TEST_CASE("abelian group canonical form")
{
    CHECK(AbelianGroup(0, {6, 4}) == AbelianGroup(0, {2, 12}));
    CHECK(AbelianGroup(1, {1, 0, 3}) == AbelianGroup(2, {3}));
    CHECK(AbelianGroup(0, {2, 3}).to_string() == "Z_6");
    CHECK(AbelianGroup::trivial().to_string() == "0");
    CHECK(AbelianGroup(2, {2}).to_string() == "Z^2 + Z_2");
    CHECK(AbelianGroup(0, {2, 2}).order() == Integer(4));
    CHECK(!AbelianGroup::free(1).order().has_value());
}

TEST_CASE("subgroup comparison examples")
{
    std::vector<IntVector> a = {{2, 0}}, b = {{1, 0}}, c = {{0, 1}};
    CHECK(subgroup_compare(a, a, 2) == SubgroupRelation::Equal);
    CHECK(subgroup_compare(a, b, 2) == SubgroupRelation::FirstInSecond);
    CHECK(subgroup_compare(b, a, 2) == SubgroupRelation::SecondInFirst);
    CHECK(subgroup_compare(b, c, 2) == SubgroupRelation::Incomparable);
    CHECK_THROWS_AS(subgroup_compare(a, {{1, 0, 0}}, 2), Error);

    // modulo relations: 2Z + 4Z == 2Z inside Z / 4Z
    SparseIntMatrix rel = dense({{4}});
    CHECK(subgroup_compare(dense({{2}}), dense({{6}}), rel) == SubgroupRelation::Equal);
    CHECK(subgroup_compare(dense({{2}}), dense({{1}}), rel) == SubgroupRelation::FirstInSecond);
}

TEST_CASE("subgroup comparison behaves as a partial order")
{
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> value(-3, 3), count(1, 3);
    for (int trial = 0; trial < 40; ++trial)
    {
        auto random_gens = [&] {
            std::vector<IntVector> g(count(rng), IntVector(3));
            for (auto& v : g)
                for (auto& x : v)
                    x = value(rng);
            return g;
        };
        auto a = random_gens(), b = random_gens();
        auto ab = subgroup_compare(a, b, 3);
        auto ba = subgroup_compare(b, a, 3);
        if (ab == SubgroupRelation::Equal)
            CHECK(ba == SubgroupRelation::Equal);
        if (ab == SubgroupRelation::FirstInSecond)
            CHECK(ba == SubgroupRelation::SecondInFirst);
        if (ab == SubgroupRelation::Incomparable)
            CHECK(ba == SubgroupRelation::Incomparable);
        auto merged = a;
        merged.insert(merged.end(), b.begin(), b.end());
        auto rel = subgroup_compare(a, merged, 3);
        CHECK((rel == SubgroupRelation::FirstInSecond || rel == SubgroupRelation::Equal));
    }
}

TEST_CASE("lattice solver and integer kernel")
{
    SparseIntMatrix gens = dense({{2, 0}, {0, 3}, {0, 0}});
    LatticeSolver l(gens);
    CHECK(l.contains({4, 3, 0}));
    CHECK(!l.contains({1, 0, 0}));
    CHECK(!l.contains({0, 0, 1}));
    auto x = l.solve({4, -3, 0});
    REQUIRE(x);
    CHECK(gens * *x == IntVector{4, -3, 0});

    SparseIntMatrix a = dense({{1, 2, 3}, {2, 4, 6}});
    SparseIntMatrix k = integer_kernel(a);
    CHECK(k.cols() == 2);
    CHECK((a * k).is_zero());
    // the kernel basis must span every integer solution, e.g. (1, 1, -1)
    CHECK(LatticeSolver(k).contains({1, 1, -1}));
}

TEST_CASE("kernel lattices from one Smith form")
{
    SparseIntMatrix a = dense({{1, 2, 3}, {2, 4, 6}});
    LatticeSolver k = LatticeSolver::kernel_of(a);
    CHECK(k.rank() == 2);
    const SparseIntMatrix basis = k.basis();
    CHECK((a * basis).is_zero());
    auto y = k.solve({1, 1, -1});
    REQUIRE(y);
    CHECK(basis * *y == IntVector{1, 1, -1});
    CHECK(!k.contains({1, 0, 0}));

    // random matrices: the basis is saturated and coordinates reproduce kernel vectors
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int t = 0; t < 30; ++t)
    {
        const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 8;
        oracle::Dense m(rows, std::vector<Integer>(cols));
        for (auto& r : m)
            for (auto& x : r)
                x = rng() % 2 ? entry(rng) : 0;
        const SparseIntMatrix s = SparseIntMatrix::from_dense(m);
        const LatticeSolver ks = LatticeSolver::kernel_of(s);
        const SparseIntMatrix kb = ks.basis();
        CHECK(kb.cols() == cols - oracle::rational_rank(m));
        CHECK((s * kb).is_zero());
        // same lattice as the general kernel
        const LatticeSolver general(integer_kernel(s));
        for (std::size_t j = 0; j < kb.cols(); ++j)
            CHECK(general.contains(kb.dense_column(j)));
        const SparseIntMatrix other = integer_kernel(s);
        for (std::size_t j = 0; j < other.cols(); ++j)
        {
            auto c = ks.solve(other.dense_column(j));
            REQUIRE(c);
            CHECK(kb * *c == other.dense_column(j));
        }
    }
}
