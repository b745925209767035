#include "delprod/lattice.hpp"

#include "delprod/errors.hpp"

namespace delprod {

LatticeSolver::LatticeSolver(const SparseIntMatrix& generators) : snf_(smith_normal_form(generators)) {}

LatticeSolver LatticeSolver::kernel_of(const SparseIntMatrix& a, const ComputeOptions& options)
{
    LatticeSolver s;
    s.snf_ = smith_normal_form(a.transpose(), options);
    s.kernel_ = true;
    return s;
}

std::optional<IntVector> LatticeSolver::solve(const IntVector& v) const
{
    if (v.size() != snf_.rows)
        throw Error("lattice membership: dimension mismatch");
    const std::size_t r = snf_.rank();
    if (kernel_)
    {
        // c = (U^{-1})^T v; v lies in the kernel iff its first r coordinates vanish
        IntVector c(snf_.rows);
        const SparseIntMatrix& w = snf_.left_inverse;
        for (std::size_t i = 0; i < w.rows(); ++i)
            if (v[i] != 0)
                for (const auto& e : w.row(i))
                    c[e.index] += e.value * v[i];
        for (std::size_t j = 0; j < r; ++j)
            if (c[j] != 0)
                return std::nullopt;
        return IntVector(c.begin() + static_cast<std::ptrdiff_t>(r), c.end());
    }
    IntVector w = snf_.left * v;
    IntVector y(snf_.cols);
    for (std::size_t i = 0; i < w.size(); ++i)
    {
        if (i < r)
        {
            if (w[i] % snf_.diagonal[i] != 0)
                return std::nullopt;
            y[i] = w[i] / snf_.diagonal[i];
        }
        else if (w[i] != 0)
            return std::nullopt;
    }
    return snf_.right * y;
}

SparseIntMatrix LatticeSolver::basis() const
{
    if (kernel_)
    {
        std::vector<SparseVector> cols;
        for (std::size_t j = snf_.rank(); j < snf_.rows; ++j)
            cols.push_back(snf_.left.row(j));
        return SparseIntMatrix::from_columns(snf_.rows, cols);
    }
    std::vector<SparseVector> cols(snf_.rank());
    const SparseIntMatrix& w = snf_.left_inverse;
    for (std::size_t i = 0; i < w.rows(); ++i)
        for (const auto& e : w.row(i))
            if (e.index < cols.size())
                cols[e.index].push_back({i, e.value * snf_.diagonal[e.index]});
    return SparseIntMatrix::from_columns(snf_.rows, cols);
}

SparseIntMatrix integer_kernel(const SparseIntMatrix& a)
{
    SmithNormalForm snf = smith_normal_form(a);
    std::vector<std::size_t> keep;
    for (std::size_t j = snf.rank(); j < a.cols(); ++j)
        keep.push_back(j);
    return snf.right.select_columns(keep);
}

const char* to_string(SubgroupRelation r)
{
    switch (r)
    {
    case SubgroupRelation::Equal:
        return "EQUAL";
    case SubgroupRelation::FirstInSecond:
        return "A_IN_B";
    case SubgroupRelation::SecondInFirst:
        return "B_IN_A";
    case SubgroupRelation::Incomparable:
        return "INCOMPARABLE";
    }
    return "?";
}

namespace {

std::optional<std::size_t> first_outside(const SparseIntMatrix& gens, const LatticeSolver& lattice)
{
    for (std::size_t j = 0; j < gens.cols(); ++j)
        if (!lattice.contains(gens.dense_column(j)))
            return j;
    return std::nullopt;
}

} // namespace

SubgroupComparison compare_subgroups(const SparseIntMatrix& first, const SparseIntMatrix& second,
                                     const SparseIntMatrix& relations)
{
    if (first.rows() != second.rows() || first.rows() != relations.rows())
        throw Error("subgroup comparison: dimension mismatch");
    LatticeSolver first_span(first.hconcat(relations));
    LatticeSolver second_span(second.hconcat(relations));
    auto a_out = first_outside(first, second_span);
    auto b_out = first_outside(second, first_span);

    SubgroupComparison out;
    if (!a_out && !b_out)
        out.relation = SubgroupRelation::Equal;
    else if (!a_out)
        out.relation = SubgroupRelation::FirstInSecond;
    else if (!b_out)
        out.relation = SubgroupRelation::SecondInFirst;
    else
        out.relation = SubgroupRelation::Incomparable;
    if (a_out)
        out.witness = SubgroupWitness{true, *a_out, first.dense_column(*a_out)};
    else if (b_out)
        out.witness = SubgroupWitness{false, *b_out, second.dense_column(*b_out)};
    return out;
}

SubgroupRelation subgroup_compare(const std::vector<IntVector>& first, const std::vector<IntVector>& second,
                                  std::size_t ambient_dimension)
{
    for (const auto* list : {&first, &second})
        for (const auto& v : *list)
            if (v.size() != ambient_dimension)
                throw Error("subgroup comparison: vector has wrong dimension");
    return subgroup_compare(SparseIntMatrix::from_column_vectors(ambient_dimension, first),
                            SparseIntMatrix::from_column_vectors(ambient_dimension, second),
                            SparseIntMatrix(ambient_dimension, 0));
}

} // namespace delprod
