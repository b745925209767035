#include "delprod/chain_complex.hpp"

#include "delprod/errors.hpp"
#include "delprod/homology.hpp"

namespace delprod {

namespace {

const SparseIntMatrix& empty_matrix()
{
    static const SparseIntMatrix m;
    return m;
}

} // namespace

ChainComplex::ChainComplex() : cache_(std::make_shared<detail::OnceCache<std::pair<int, bool>, ElementaryDivisors>>()) {}

ChainComplex::ChainComplex(std::vector<std::size_t> ranks, std::vector<SparseIntMatrix> boundaries)
    : ranks_(std::move(ranks)), cache_(std::make_shared<detail::OnceCache<std::pair<int, bool>, ElementaryDivisors>>())
{
    if (ranks_.empty())
    {
        if (!boundaries.empty())
            throw Error("chain complex: boundaries without groups");
        return;
    }
    if (boundaries.size() + 1 != ranks_.size())
        throw Error("chain complex: expected one boundary per positive degree");
    boundaries_.reserve(ranks_.size() + 1);
    boundaries_.emplace_back(0, ranks_[0]);
    for (std::size_t k = 0; k < boundaries.size(); ++k)
    {
        if (boundaries[k].rows() != ranks_[k] || boundaries[k].cols() != ranks_[k + 1])
            throw Error("chain complex: boundary " + std::to_string(k + 1) + " has the wrong shape");
        boundaries_.push_back(std::move(boundaries[k]));
    }
    boundaries_.emplace_back(ranks_.back(), 0);
}

std::size_t ChainComplex::rank(int i) const noexcept
{
    return i < 0 || i > top_dimension() ? 0 : ranks_[static_cast<std::size_t>(i)];
}

const SparseIntMatrix& ChainComplex::boundary(int i) const
{
    if (i < 0 || i >= static_cast<int>(boundaries_.size()))
        return empty_matrix();
    return boundaries_[static_cast<std::size_t>(i)];
}

void ChainComplex::check_chain_condition() const
{
    for (int i = 1; i < top_dimension(); ++i)
        if (!(boundary(i) * boundary(i + 1)).is_zero())
            throw ChainConditionError(i, "boundary of boundary is nonzero");
}

long ChainComplex::euler_characteristic() const
{
    long chi = 0;
    for (int i = 0; i <= top_dimension(); ++i)
        chi += (i % 2 == 0 ? 1 : -1) * static_cast<long>(rank(i));
    return chi;
}

ChainComplex ChainComplex::restricted(const std::vector<std::vector<std::size_t>>& kept) const
{
    if (static_cast<int>(kept.size()) != top_dimension() + 1)
        throw Error("restricted chain complex: one cell list per degree expected");
    std::vector<std::size_t> ranks;
    for (const auto& k : kept)
        ranks.push_back(k.size());
    std::vector<SparseIntMatrix> bounds;
    for (int i = 1; i <= top_dimension(); ++i)
        bounds.push_back(boundary(i).submatrix(kept[static_cast<std::size_t>(i - 1)], kept[static_cast<std::size_t>(i)]));
    return ChainComplex(std::move(ranks), std::move(bounds));
}

std::shared_ptr<const ElementaryDivisors> ChainComplex::divisors(int i, bool transposed, const ComputeOptions& options) const
{
    return cache_->get({i, transposed}, [&] {
        return transposed ? elementary_divisors(boundary(i).transpose(), options)
                          : elementary_divisors(boundary(i), options);
    });
}

CochainComplex::CochainComplex()
    : divisor_cache_(std::make_shared<detail::OnceCache<int, ElementaryDivisors>>()),
      presentation_cache_(std::make_shared<detail::OnceCache<int, GroupPresentation>>())
{
}

CochainComplex::CochainComplex(std::vector<std::vector<Integer>> orders, std::vector<SparseIntMatrix> coboundaries)
    : orders_(std::move(orders)),
      divisor_cache_(std::make_shared<detail::OnceCache<int, ElementaryDivisors>>()),
      presentation_cache_(std::make_shared<detail::OnceCache<int, GroupPresentation>>())
{
    if (coboundaries.size() != orders_.size())
        throw Error("cochain complex: expected one coboundary per degree");
    if (orders_.empty())
        return;
    coboundaries_.reserve(orders_.size() + 1);
    coboundaries_.emplace_back(orders_[0].size(), 0);
    for (std::size_t p = 0; p < coboundaries.size(); ++p)
    {
        const std::size_t next = p + 1 < orders_.size() ? orders_[p + 1].size() : 0;
        if (coboundaries[p].rows() != next || coboundaries[p].cols() != orders_[p].size())
            throw Error("cochain complex: coboundary " + std::to_string(p) + " has the wrong shape");
        coboundaries_.push_back(std::move(coboundaries[p]));
    }
    for (const auto& o : orders_)
        for (const auto& m : o)
        {
            if (m < 0 || m == 1)
                throw Error("cochain complex: cyclic orders must be 0 or >= 2");
            if (m != 0)
                free_ = false;
        }
}

CochainComplex CochainComplex::dual(const ChainComplex& chains, const Integer& modulus)
{
    if (modulus == 1 || modulus < 0)
        throw Error("coefficient modulus must be 0 or >= 2");
    std::vector<std::vector<Integer>> orders;
    std::vector<SparseIntMatrix> cobs;
    for (int p = 0; p <= chains.top_dimension(); ++p)
    {
        orders.emplace_back(chains.rank(p), modulus);
        SparseIntMatrix d = chains.boundary(p + 1).transpose();
        cobs.push_back(modulus == 0 ? std::move(d) : d.reduced_mod(modulus));
    }
    return CochainComplex(std::move(orders), std::move(cobs));
}

CochainComplex CochainComplex::dual(const ChainComplex& chains, const std::vector<Integer>& coefficient_orders)
{
    const std::size_t k = coefficient_orders.size();
    std::vector<std::vector<Integer>> orders;
    std::vector<SparseIntMatrix> cobs;
    for (int p = 0; p <= chains.top_dimension(); ++p)
    {
        std::vector<Integer> o;
        for (std::size_t c = 0; c < chains.rank(p); ++c)
            o.insert(o.end(), coefficient_orders.begin(), coefficient_orders.end());
        orders.push_back(std::move(o));
        const SparseIntMatrix d = chains.boundary(p + 1).transpose();
        std::vector<Triplet> t;
        for (std::size_t i = 0; i < d.rows(); ++i)
            for (const auto& e : d.row(i))
                for (std::size_t s = 0; s < k; ++s)
                    t.push_back({i * k + s, e.index * k + s, e.value});
        cobs.push_back(SparseIntMatrix::from_triplets(d.rows() * k, d.cols() * k, t));
    }
    return CochainComplex(std::move(orders), std::move(cobs));
}

std::size_t CochainComplex::rank(int p) const noexcept
{
    return p < 0 || p > top_degree() ? 0 : orders_[static_cast<std::size_t>(p)].size();
}

const std::vector<Integer>& CochainComplex::orders(int p) const
{
    static const std::vector<Integer> none;
    return p < 0 || p > top_degree() ? none : orders_[static_cast<std::size_t>(p)];
}

const SparseIntMatrix& CochainComplex::coboundary(int p) const
{
    const int idx = p + 1;
    if (idx < 0 || idx >= static_cast<int>(coboundaries_.size()))
        return empty_matrix();
    return coboundaries_[static_cast<std::size_t>(idx)];
}

SparseIntMatrix CochainComplex::relations(int p) const
{
    const auto& o = orders(p);
    std::vector<SparseVector> cols;
    for (std::size_t j = 0; j < o.size(); ++j)
        if (o[j] != 0)
            cols.push_back({{j, o[j]}});
    return SparseIntMatrix::from_columns(o.size(), cols);
}

void CochainComplex::check_cochain_condition() const
{
    for (int p = 0; p + 1 <= top_degree(); ++p)
    {
        SparseIntMatrix composite = coboundary(p + 1) * coboundary(p);
        const auto& target = orders(p + 2);
        for (std::size_t i = 0; i < composite.rows(); ++i)
            for (const auto& e : composite.row(i))
                if (target[i] == 0 || e.value % target[i] != 0)
                    throw ChainConditionError(p, "coboundary squared is nonzero");
    }
}

std::shared_ptr<const ElementaryDivisors> CochainComplex::divisors(int p, const ComputeOptions& options) const
{
    return divisor_cache_->get(p, [&] { return elementary_divisors(coboundary(p), options); });
}

std::shared_ptr<const GroupPresentation> CochainComplex::presentation(int p) const
{
    return presentation_cache_->get(p, [&] { return GroupPresentation::of_cochains(*this, p); });
}

} // namespace delprod
