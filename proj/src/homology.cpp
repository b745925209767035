#include "delprod/homology.hpp"

#include "delprod/errors.hpp"
#include "delprod/parallel.hpp"

#include <algorithm>

namespace delprod {

Coefficients Coefficients::modulo(const Integer& m)
{
    if (m < 2)
        throw Error("coefficient modulus must be at least 2, got " + delprod::to_string(m));
    return Coefficients{m};
}

std::string Coefficients::to_string() const
{
    return is_integral() ? "Z" : "Z_" + delprod::to_string(modulus);
}

namespace {

SparseIntMatrix columns_mod_relations_kernel(const SparseIntMatrix& a, const SparseIntMatrix& relations)
{
    // x with a x in span(relations): kernel of [a | -relations], first block of coordinates
    const std::size_t n = a.cols();
    if (relations.cols() == 0)
        return integer_kernel(a);
    SparseIntMatrix k = integer_kernel(a.hconcat(-relations));
    std::vector<std::size_t> top(n);
    for (std::size_t i = 0; i < n; ++i)
        top[i] = i;
    std::vector<std::size_t> all(k.cols());
    for (std::size_t j = 0; j < k.cols(); ++j)
        all[j] = j;
    return k.submatrix(top, all);
}

SparseIntMatrix diagonal_relations(const std::vector<Integer>& orders)
{
    std::vector<SparseVector> cols;
    for (std::size_t i = 0; i < orders.size(); ++i)
        if (orders[i] != 0)
            cols.push_back({{i, orders[i]}});
    return SparseIntMatrix::from_columns(orders.size(), cols);
}

std::vector<Integer> generator_orders(const AbelianGroup& g)
{
    std::vector<Integer> out;
    for (std::size_t i = 0; i < g.generator_count(); ++i)
        out.push_back(g.generator_order(i));
    return out;
}

} // namespace

GroupPresentation GroupPresentation::subquotient(std::size_t ambient_dimension, const SparseIntMatrix& cycles,
                                                 const SparseIntMatrix& boundaries)
{
    if (cycles.rows() != ambient_dimension || boundaries.rows() != ambient_dimension)
        throw Error("subquotient: generator dimension mismatch");
    // solve() coordinates refer to the solver's generators, so those must be a basis
    SparseIntMatrix basis = LatticeSolver(cycles).basis();
    auto solver = std::make_shared<const LatticeSolver>(basis);
    return over(std::move(solver), std::move(basis), boundaries);
}

GroupPresentation GroupPresentation::over(std::shared_ptr<const LatticeSolver> cycle_solver,
                                          SparseIntMatrix cycle_basis, const SparseIntMatrix& boundaries)
{
    GroupPresentation g;
    g.ambient_ = cycle_solver->ambient_dimension();
    g.boundaries_ = boundaries;
    g.cycle_basis_ = std::move(cycle_basis);
    g.cycle_solver_ = std::move(cycle_solver);

    const std::size_t k = g.cycle_basis_.cols();
    std::vector<IntVector> coords;
    for (std::size_t j = 0; j < boundaries.cols(); ++j)
    {
        auto y = g.cycle_solver_->solve(boundaries.dense_column(j));
        if (!y)
            throw Error("subquotient: boundary generator is not a cycle");
        coords.push_back(std::move(*y));
    }
    SmithNormalForm snf = smith_normal_form(SparseIntMatrix::from_column_vectors(k, coords));
    g.left_ = std::move(snf.left);
    g.left_inverse_ = std::move(snf.left_inverse);

    std::vector<Integer> torsion;
    for (std::size_t i = 0; i < snf.rank(); ++i)
        if (snf.diagonal[i] != 1)
        {
            g.positions_.push_back(i);
            g.orders_.push_back(snf.diagonal[i]);
            torsion.push_back(snf.diagonal[i]);
        }
    for (std::size_t i = snf.rank(); i < k; ++i)
    {
        g.positions_.push_back(i);
        g.orders_.push_back(0);
    }
    g.group_ = AbelianGroup(k - snf.rank(), torsion);
    // The SNF diagonal is already a divisibility chain, so canonical order is unchanged.
    if (generator_orders(g.group_) != g.orders_)
        throw Error("subquotient: invariant factors out of order");
    return g;
}

GroupPresentation GroupPresentation::of_cochains(const CochainComplex& c, int p)
{
    const std::size_t n = c.rank(p);
    SparseIntMatrix bounds = c.coboundary(p - 1).hconcat(c.relations(p));
    if (c.is_free())
    {
        auto solver = std::make_shared<const LatticeSolver>(LatticeSolver::kernel_of(c.coboundary(p)));
        SparseIntMatrix basis = solver->basis();
        return over(std::move(solver), std::move(basis), bounds);
    }
    SparseIntMatrix cycles = columns_mod_relations_kernel(c.coboundary(p), c.relations(p + 1));
    return subquotient(n, cycles, bounds);
}

GroupPresentation GroupPresentation::vanishing(std::size_t ambient_dimension, SparseIntMatrix cycle_test)
{
    if (cycle_test.cols() != ambient_dimension)
        throw Error("vanishing presentation: test matrix has the wrong width");
    GroupPresentation g;
    g.ambient_ = ambient_dimension;
    g.cycle_test_ = std::move(cycle_test);
    return g;
}

const SparseIntMatrix& GroupPresentation::cycles() const
{
    if (!materialized())
        throw Error("cycle basis of a vanishing presentation is not materialized");
    return cycle_basis_;
}

const SparseIntMatrix& GroupPresentation::boundaries() const
{
    if (!materialized())
        throw Error("boundary generators of a vanishing presentation are not materialized");
    return boundaries_;
}

bool GroupPresentation::is_cycle(const IntVector& z) const
{
    if (!materialized())
    {
        const IntVector t = cycle_test_ * z;
        return std::all_of(t.begin(), t.end(), [](const Integer& x) { return x == 0; });
    }
    return cycle_solver_->contains(z);
}

bool GroupPresentation::is_boundary(const IntVector& z) const
{
    auto c = canonical_coordinates(z);
    return c && std::all_of(c->begin(), c->end(), [](const Integer& x) { return x == 0; });
}

std::optional<IntVector> GroupPresentation::canonical_coordinates(const IntVector& z) const
{
    if (!materialized())
        return is_cycle(z) ? std::optional<IntVector>(IntVector{}) : std::nullopt;
    auto y = cycle_solver_->solve(z);
    if (!y)
        return std::nullopt;
    IntVector u = left_ * *y;
    IntVector out(positions_.size());
    for (std::size_t i = 0; i < positions_.size(); ++i)
        out[i] = reduce_mod(u[positions_[i]], orders_[i]);
    return out;
}

IntVector GroupPresentation::canonical_generator(std::size_t i) const
{
    IntVector e = left_inverse_.dense_column(positions_.at(i));
    return cycle_basis_ * e;
}

SparseIntMatrix GroupPresentation::canonical_relations() const { return diagonal_relations(orders_); }

GroupHom::GroupHom(PresentationPtr domain, PresentationPtr codomain, const SparseIntMatrix& canonical)
    : domain_(std::move(domain)), codomain_(std::move(codomain))
{
    const std::size_t m = codomain_->group().generator_count();
    const std::size_t n = domain_->group().generator_count();
    if (canonical.rows() != m || canonical.cols() != n)
        throw Error("group homomorphism: matrix has the wrong shape");
    const auto cod_orders = generator_orders(codomain_->group());
    std::vector<Triplet> t;
    for (std::size_t i = 0; i < m; ++i)
        for (const auto& e : canonical.row(i))
        {
            Integer v = reduce_mod(e.value, cod_orders[i]);
            if (v != 0)
                t.push_back({i, e.index, v});
        }
    matrix_ = SparseIntMatrix::from_triplets(m, n, t);

    // order_j * column_j must vanish in the codomain
    const auto dom_orders = generator_orders(domain_->group());
    for (std::size_t j = 0; j < n; ++j)
        if (dom_orders[j] != 0)
        {
            IntVector col = matrix_.dense_column(j);
            for (std::size_t i = 0; i < m; ++i)
            {
                const Integer v = col[i] * dom_orders[j];
                if (cod_orders[i] == 0 ? v != 0 : v % cod_orders[i] != 0)
                    throw Error("group homomorphism: relations are not preserved");
            }
        }
}

GroupHom GroupHom::from_cochain_map(PresentationPtr domain, PresentationPtr codomain, const SparseIntMatrix& map)
{
    if (map.rows() != codomain->ambient_dimension() || map.cols() != domain->ambient_dimension())
        throw Error("cochain map has the wrong shape");
    // a vanishing domain has nothing to map, and its cocycles are never enumerated
    if (domain->materialized())
    {
        const SparseIntMatrix& zb = domain->cycles();
        for (std::size_t j = 0; j < zb.cols(); ++j)
            if (!codomain->is_cycle(map * zb.dense_column(j)))
                throw ChainConditionError(0, "cochain map sends a cocycle to a non-cocycle");
        const SparseIntMatrix& bd = domain->boundaries();
        for (std::size_t j = 0; j < bd.cols(); ++j)
            if (!codomain->is_boundary(map * bd.dense_column(j)))
                throw ChainConditionError(0, "cochain map sends a coboundary to a nontrivial class");
    }

    const std::size_t n = domain->group().generator_count();
    std::vector<IntVector> cols;
    for (std::size_t j = 0; j < n; ++j)
        cols.push_back(*codomain->canonical_coordinates(map * domain->canonical_generator(j)));
    SparseIntMatrix canonical = SparseIntMatrix::from_column_vectors(codomain->group().generator_count(), cols);
    return GroupHom(std::move(domain), std::move(codomain), canonical);
}

bool GroupHom::is_surjective() const
{
    const std::size_t m = codomain().generator_count();
    auto r = compare_subgroups(SparseIntMatrix::identity(m), matrix_, codomain_->canonical_relations()).relation;
    return r == SubgroupRelation::Equal || r == SubgroupRelation::FirstInSecond;
}

SparseIntMatrix GroupHom::kernel_generators() const
{
    return columns_mod_relations_kernel(matrix_, codomain_->canonical_relations());
}

AbelianGroup GroupHom::kernel() const
{
    const SparseIntMatrix rel = domain_->canonical_relations();
    const std::size_t n = domain().generator_count();
    return GroupPresentation::subquotient(n, kernel_generators().hconcat(rel), rel).group();
}

AbelianGroup GroupHom::image() const
{
    const SparseIntMatrix rel = codomain_->canonical_relations();
    const std::size_t m = codomain().generator_count();
    return GroupPresentation::subquotient(m, matrix_.hconcat(rel), rel).group();
}

GroupHom GroupHom::then(const GroupHom& after) const
{
    if (codomain() != after.domain())
        throw Error("cannot compose homomorphisms: groups do not match");
    return GroupHom(domain_, after.codomain_, after.matrix_ * matrix_);
}

bool operator==(const GroupHom& a, const GroupHom& b)
{
    return a.domain() == b.domain() && a.codomain() == b.codomain() && a.matrix_ == b.matrix_;
}

SubgroupComparison exactness_at(const GroupHom& incoming, const GroupHom& outgoing)
{
    if (incoming.codomain() != outgoing.domain())
        throw Error("exactness check: the middle groups differ");
    return compare_subgroups(incoming.image_generators(), outgoing.kernel_generators(),
                             outgoing.domain_presentation().canonical_relations());
}

AbelianGroup homology(const ChainComplex& c, int i, const ComputeOptions& options)
{
    if (i < 0 || i > c.top_dimension())
        return AbelianGroup::trivial();
    const auto out = c.divisors(i, false, options);
    const auto in = c.divisors(i + 1, false, options);
    return AbelianGroup(c.rank(i) - out->rank - in->rank, in->torsion);
}

std::vector<AbelianGroup> homology_groups(const ChainComplex& c, const ComputeOptions& options)
{
    std::vector<AbelianGroup> out;
    for (int i = 0; i <= c.top_dimension(); ++i)
        out.push_back(homology(c, i, options));
    return out;
}

AbelianGroup cohomology(const ChainComplex& c, int i, const Coefficients& coefficients, const ComputeOptions& options)
{
    if (i < 0 || i > c.top_dimension())
        return AbelianGroup::trivial();
    if (!coefficients.is_integral())
        return cohomology(CochainComplex::dual(c, coefficients.modulus), i, options);
    // delta^i = d_{i+1}^T and delta^{i-1} = d_i^T
    const auto out = c.divisors(i + 1, true, options);
    const auto in = c.divisors(i, true, options);
    return AbelianGroup(c.rank(i) - out->rank - in->rank, in->torsion);
}

void prefetch_cohomology(const ChainComplex& c, int from, int to, const ComputeOptions& options)
{
    from = std::max(from, 0);
    to = std::min(to, c.top_dimension());
    if (from > to)
        return;
    // degrees from..to need the transposed boundaries from..to+1
    parallel_for(static_cast<std::size_t>(to - from + 2),
                 [&](std::size_t k) { c.divisors(from + static_cast<int>(k), true, options); });
}

std::vector<AbelianGroup> cohomology_groups(const ChainComplex& c, const Coefficients& coefficients,
                                            const ComputeOptions& options)
{
    if (coefficients.is_integral())
        prefetch_cohomology(c, 0, c.top_dimension(), options);
    std::vector<AbelianGroup> out;
    for (int i = 0; i <= c.top_dimension(); ++i)
        out.push_back(cohomology(c, i, coefficients, options));
    return out;
}

AbelianGroup cohomology(const CochainComplex& c, int p, const ComputeOptions& options)
{
    if (p < 0 || p > c.top_degree())
        return AbelianGroup::trivial();
    if (!c.is_free())
        return c.presentation(p)->group();
    const auto out = c.divisors(p, options);
    const auto in = c.divisors(p - 1, options);
    return AbelianGroup(c.rank(p) - out->rank - in->rank, in->torsion);
}

AbelianGroup relative_homology(const CellularPair& pair, int i, const ComputeOptions& options)
{
    return homology(pair.relative_chain_complex(), i, options);
}

AbelianGroup relative_cohomology(const CellularPair& pair, int i, const Coefficients& coefficients,
                                 const ComputeOptions& options)
{
    return cohomology(pair.relative_chain_complex(), i, coefficients, options);
}

namespace {

SparseIntMatrix maybe_reduce(SparseIntMatrix m, const Coefficients& coefficients)
{
    return coefficients.is_integral() ? m : m.reduced_mod(coefficients.modulus);
}

PresentationPtr cochain_presentation(const ChainComplex& c, int i, const Coefficients& coefficients)
{
    // the divisor fast path decides vanishing without building a cocycle lattice
    if (coefficients.is_integral() && cohomology(c, i).is_trivial())
        return std::make_shared<const GroupPresentation>(
            GroupPresentation::vanishing(c.rank(i), i <= c.top_dimension() ? c.boundary(i + 1).transpose()
                                                                           : SparseIntMatrix(0, 0)));
    return std::make_shared<const GroupPresentation>(
        GroupPresentation::of_cochains(CochainComplex::dual(c, coefficients.modulus), i));
}

} // namespace

GroupHom induced_cohomology_map(const CellularMap& f, int i, const Coefficients& coefficients)
{
    f.check_chain_map();
    auto source = cochain_presentation(f.codomain().chain_complex(), i, coefficients);
    auto target = cochain_presentation(f.domain().chain_complex(), i, coefficients);
    return GroupHom::from_cochain_map(source, target, maybe_reduce(f.chain_matrix(i).transpose(), coefficients));
}

std::vector<PairSequenceDegree> pair_cohomology_sequence(const CellularPair& pair, const Coefficients& coefficients)
{
    const CWComplex& x = pair.ambient();
    const ChainComplex& rel = pair.relative_chain_complex();
    const CWComplexPtr sub = pair.sub_complex();
    const int top = x.dimension();

    // cell index maps per degree
    std::vector<std::vector<std::size_t>> outside(static_cast<std::size_t>(top + 2));
    std::vector<std::vector<std::size_t>> inside(static_cast<std::size_t>(top + 2));
    for (int d = 0; d <= top; ++d)
        for (std::size_t c = 0; c < x.cell_count(d); ++c)
            (pair.in_sub(d, c) ? inside : outside)[static_cast<std::size_t>(d)].push_back(c);

    std::vector<PresentationPtr> h_rel, h_x, h_sub;
    for (int d = 0; d <= top + 1; ++d)
    {
        h_rel.push_back(cochain_presentation(rel, d, coefficients));
        h_x.push_back(cochain_presentation(x.chain_complex(), d, coefficients));
        h_sub.push_back(cochain_presentation(sub->chain_complex(), d, coefficients));
    }

    std::vector<PairSequenceDegree> out;
    for (int d = 0; d <= top; ++d)
    {
        const auto& out_d = outside[static_cast<std::size_t>(d)];
        const auto& in_d = inside[static_cast<std::size_t>(d)];
        const std::size_t n = x.cell_count(d);

        std::vector<Triplet> extend, restrict;
        for (std::size_t j = 0; j < out_d.size(); ++j)
            extend.push_back({out_d[j], j, 1});
        for (std::size_t j = 0; j < in_d.size(); ++j)
            restrict.push_back({j, in_d[j], 1});
        SparseIntMatrix extend_m = SparseIntMatrix::from_triplets(n, out_d.size(), extend);
        SparseIntMatrix restrict_m = SparseIntMatrix::from_triplets(in_d.size(), n, restrict);

        // connecting: extend a cocycle of the sub by zero, take delta, keep the cells outside
        const auto& next_out = outside[static_cast<std::size_t>(d + 1)];
        SparseIntMatrix delta = x.chain_complex().boundary(d + 1).transpose();
        SparseIntMatrix connecting = delta.submatrix(next_out, in_d);

        out.push_back(PairSequenceDegree{
            d,
            GroupHom::from_cochain_map(h_rel[static_cast<std::size_t>(d)], h_x[static_cast<std::size_t>(d)],
                                       maybe_reduce(extend_m, coefficients)),
            GroupHom::from_cochain_map(h_x[static_cast<std::size_t>(d)], h_sub[static_cast<std::size_t>(d)],
                                       maybe_reduce(restrict_m, coefficients)),
            GroupHom::from_cochain_map(h_sub[static_cast<std::size_t>(d)], h_rel[static_cast<std::size_t>(d + 1)],
                                       maybe_reduce(connecting, coefficients)),
        });
    }
    return out;
}

} // namespace delprod
