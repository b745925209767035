#ifndef DELPROD_CHAIN_COMPLEX_HPP
#define DELPROD_CHAIN_COMPLEX_HPP

#include "delprod/integer.hpp"
#include "delprod/smith.hpp"
#include "delprod/sparse_matrix.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace delprod {

class GroupPresentation;

namespace detail {

/// Memo table filled at most once per key; concurrent readers see one value.
template <class Key, class Value>
class OnceCache
{
  public:
    template <class Fn>
    std::shared_ptr<const Value> get(const Key& key, Fn&& compute)
    {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = table_.find(key);
            if (it != table_.end())
                return it->second;
        }
        auto value = std::make_shared<const Value>(compute());
        std::lock_guard<std::mutex> lock(mutex_);
        return table_.emplace(key, std::move(value)).first->second;
    }

  private:
    std::mutex mutex_;
    std::map<Key, std::shared_ptr<const Value>> table_;
};

} // namespace detail

/**
 * Free chain complex C_0 <- C_1 <- ... <- C_top with integer boundaries.
 * boundary(i) is the rank(i-1) x rank(i) matrix of d_i; d_0 and d_{top+1}
 * are stored as empty-shaped zero matrices so every degree is addressable.
 */
class ChainComplex
{
  public:
    ChainComplex();
    /// boundaries[k] is d_{k+1}; ranks.size() == boundaries.size() + 1 unless both are empty.
    ChainComplex(std::vector<std::size_t> ranks, std::vector<SparseIntMatrix> boundaries);

    int top_dimension() const noexcept { return static_cast<int>(ranks_.size()) - 1; }
    std::size_t rank(int i) const noexcept;
    const SparseIntMatrix& boundary(int i) const;

    /// Throws ChainConditionError naming the first failing dimension.
    void check_chain_condition() const;
    long euler_characteristic() const;

    /// Keeps only the listed cells in each degree (a quotient by the complementary subcomplex).
    ChainComplex restricted(const std::vector<std::vector<std::size_t>>& kept) const;

    /// Cached invariants of d_i (transposed = false) or of its transpose.
    std::shared_ptr<const ElementaryDivisors> divisors(int i, bool transposed, const ComputeOptions& options) const;

  private:
    std::vector<std::size_t> ranks_;
    std::vector<SparseIntMatrix> boundaries_; // index i holds d_i, i = 0..top+1
    std::shared_ptr<detail::OnceCache<std::pair<int, bool>, ElementaryDivisors>> cache_;
};

/**
 * Cochain complex whose p-th group is a product of cyclic groups Z/m_j
 * (m_j == 0 meaning Z), written as Z^{n_p} modulo the diagonal relations.
 * coboundary(p) is the n_{p+1} x n_p integer matrix of delta^p; it must map
 * relations into relations.
 */
class CochainComplex
{
  public:
    CochainComplex();
    /// coboundaries[p] is delta^p for p = 0..top (the last one maps into the zero group).
    CochainComplex(std::vector<std::vector<Integer>> orders, std::vector<SparseIntMatrix> coboundaries);

    /// Hom(C, Z/m) for a free chain complex; modulus 0 gives integral cochains.
    static CochainComplex dual(const ChainComplex& chains, const Integer& modulus = 0);
    /// Hom(C, G) for G = sum of cyclic groups, without any twisting.
    static CochainComplex dual(const ChainComplex& chains, const std::vector<Integer>& coefficient_orders);

    int top_degree() const noexcept { return static_cast<int>(orders_.size()) - 1; }
    std::size_t rank(int p) const noexcept;
    const std::vector<Integer>& orders(int p) const;
    /// delta^p; p = -1 and p = top are included with empty shapes.
    const SparseIntMatrix& coboundary(int p) const;
    bool is_free() const noexcept { return free_; }
    /// n_p x k matrix whose columns are m_j e_j for the finite orders.
    SparseIntMatrix relations(int p) const;

    void check_cochain_condition() const;

    std::shared_ptr<const ElementaryDivisors> divisors(int p, const ComputeOptions& options) const;
    std::shared_ptr<const GroupPresentation> presentation(int p) const;

  private:
    std::vector<std::vector<Integer>> orders_;
    std::vector<SparseIntMatrix> coboundaries_; // index p + 1 holds delta^p
    bool free_ = true;
    std::shared_ptr<detail::OnceCache<int, ElementaryDivisors>> divisor_cache_;
    std::shared_ptr<detail::OnceCache<int, GroupPresentation>> presentation_cache_;
};

} // namespace delprod

#endif
