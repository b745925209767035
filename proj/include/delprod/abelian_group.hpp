#ifndef DELPROD_ABELIAN_GROUP_HPP
#define DELPROD_ABELIAN_GROUP_HPP

#include "delprod/integer.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace delprod {

/**
 * Finitely generated abelian group Z^r + Z/t_1 + ... + Z/t_k in invariant
 * factor form: every t_i >= 2 and t_i | t_{i+1}. Two groups are isomorphic
 * exactly when their canonical forms compare equal.
 */
class AbelianGroup
{
  public:
    AbelianGroup() = default;
    /// Any list of nonnegative orders; 0 entries become free summands, 1 entries vanish.
    AbelianGroup(std::size_t free_rank, std::vector<Integer> cyclic_orders);

    static AbelianGroup trivial() { return {}; }
    static AbelianGroup free(std::size_t rank) { return AbelianGroup(rank, {}); }
    static AbelianGroup cyclic(const Integer& order);

    std::size_t free_rank() const noexcept { return free_rank_; }
    const std::vector<Integer>& torsion() const noexcept { return torsion_; }
    bool is_trivial() const noexcept { return free_rank_ == 0 && torsion_.empty(); }
    /// Number of canonical generators (torsion first, then free).
    std::size_t generator_count() const noexcept { return torsion_.size() + free_rank_; }
    /// Order of canonical generator i; 0 for the free ones.
    Integer generator_order(std::size_t i) const;

    std::optional<Integer> order() const;
    AbelianGroup direct_sum(const AbelianGroup& other) const;

    /// "0", "Z", "Z^2 + Z_2 + Z_4".
    std::string to_string() const;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

  private:
    std::size_t free_rank_ = 0;
    std::vector<Integer> torsion_;
};

/// Rewrites arbitrary positive orders into a divisibility chain, dropping units.
std::vector<Integer> invariant_factors(std::vector<Integer> orders);

} // namespace delprod

#endif
