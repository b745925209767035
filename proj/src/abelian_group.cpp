#include "delprod/abelian_group.hpp"

#include "delprod/errors.hpp"

#include <algorithm>

namespace delprod {

std::vector<Integer> invariant_factors(std::vector<Integer> orders)
{
    for (auto& o : orders)
        o = abs_value(o);
    std::erase_if(orders, [](const Integer& o) { return o == 1; });
    // Pairwise (gcd, lcm) replacement leaves entry i dividing every later entry.
    for (std::size_t i = 0; i < orders.size(); ++i)
        for (std::size_t j = i + 1; j < orders.size(); ++j)
        {
            if (orders[j] % orders[i] == 0)
                continue;
            Integer g = gcd_of(orders[i], orders[j]);
            Integer l = orders[i] / g * orders[j];
            orders[i] = g;
            orders[j] = l;
        }
    std::erase_if(orders, [](const Integer& o) { return o == 1; });
    return orders;
}

AbelianGroup::AbelianGroup(std::size_t free_rank, std::vector<Integer> cyclic_orders) : free_rank_(free_rank)
{
    std::vector<Integer> finite;
    for (auto& o : cyclic_orders)
    {
        if (o < 0)
            throw Error("negative cyclic order");
        if (o == 0)
            ++free_rank_;
        else
            finite.push_back(std::move(o));
    }
    torsion_ = invariant_factors(std::move(finite));
}

AbelianGroup AbelianGroup::cyclic(const Integer& order) { return AbelianGroup(0, {order}); }

Integer AbelianGroup::generator_order(std::size_t i) const
{
    if (i < torsion_.size())
        return torsion_[i];
    if (i < generator_count())
        return 0;
    throw Error("generator index out of range");
}

std::optional<Integer> AbelianGroup::order() const
{
    if (free_rank_ > 0)
        return std::nullopt;
    Integer n = 1;
    for (const auto& t : torsion_)
        n *= t;
    return n;
}

AbelianGroup AbelianGroup::direct_sum(const AbelianGroup& other) const
{
    std::vector<Integer> orders = torsion_;
    orders.insert(orders.end(), other.torsion_.begin(), other.torsion_.end());
    return AbelianGroup(free_rank_ + other.free_rank_, std::move(orders));
}

std::string AbelianGroup::to_string() const
{
    if (is_trivial())
        return "0";
    std::string out;
    if (free_rank_ == 1)
        out = "Z";
    else if (free_rank_ > 1)
        out = "Z^" + std::to_string(free_rank_);
    for (const auto& t : torsion_)
    {
        if (!out.empty())
            out += " + ";
        out += "Z_" + t.str();
    }
    return out;
}

} // namespace delprod
