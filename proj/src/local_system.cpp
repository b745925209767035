#include "delprod/local_system.hpp"

#include "delprod/errors.hpp"

#include <charconv>

namespace delprod {

LocalSystem::LocalSystem(std::vector<Integer> orders, std::vector<std::uint32_t> permutation,
                         std::vector<std::int32_t> signs)
    : orders_(std::move(orders)), perm_(std::move(permutation)), signs_(std::move(signs))
{
    const std::size_t k = orders_.size();
    if (k == 0)
        throw Error("coefficient group must have at least one summand");
    if (perm_.size() != k || signs_.size() != k)
        throw Error("coefficient involution has the wrong size");
    for (std::size_t j = 0; j < k; ++j)
    {
        if (orders_[j] < 0 || orders_[j] == 1)
            throw Error("coefficient orders must be 0 (for Z) or at least 2");
        if (perm_[j] >= k)
            throw Error("coefficient involution: permutation index out of range");
        if (signs_[j] != 1 && signs_[j] != -1)
            throw Error("coefficient involution: signs must be +1 or -1");
    }
    for (std::size_t j = 0; j < k; ++j)
    {
        const std::uint32_t i = perm_[j];
        if (orders_[i] != orders_[j])
            throw Error("coefficient involution must permute summands of equal order");
        if (perm_[i] != j || signs_[i] * signs_[j] != 1)
            throw Error("coefficient map is not an involution");
    }
}

bool LocalSystem::is_identity() const
{
    for (std::size_t j = 0; j < rank(); ++j)
        if (perm_[j] != j || (signs_[j] != 1 && orders_[j] != 2))
            return false;
    return true;
}

SparseIntMatrix LocalSystem::matrix() const
{
    std::vector<Triplet> t;
    for (std::size_t j = 0; j < rank(); ++j)
        t.push_back({perm_[j], j, signs_[j]});
    return SparseIntMatrix::from_triplets(rank(), rank(), t);
}

LocalSystem LocalSystem::negated() const
{
    std::vector<std::int32_t> s;
    for (auto v : signs_)
        s.push_back(-v);
    return LocalSystem(orders_, perm_, std::move(s));
}

LocalSystem LocalSystem::doubled() const
{
    const std::size_t k = rank();
    std::vector<Integer> o = orders_;
    o.insert(o.end(), orders_.begin(), orders_.end());
    std::vector<std::uint32_t> p(2 * k);
    std::vector<std::int32_t> s(2 * k);
    for (std::size_t j = 0; j < k; ++j)
    {
        // tau(e_j, 0) = (0, phi e_j) and tau(0, e_j) = (phi e_j, 0)
        p[j] = static_cast<std::uint32_t>(k + perm_[j]);
        s[j] = signs_[j];
        p[k + j] = perm_[j];
        s[k + j] = signs_[j];
    }
    return LocalSystem(std::move(o), std::move(p), std::move(s));
}

std::string LocalSystem::to_string() const
{
    if (rank() == 1)
    {
        const std::string base = orders_[0] == 0 ? "Z" : "Zm:" + delprod::to_string(orders_[0]);
        if (signs_[0] > 0)
            return base;
        return orders_[0] == 0 ? "Z-" : base + "(-)";
    }
    if (rank() == 2 && orders_[0] == 0 && orders_[1] == 0 && perm_[0] == 1 && signs_[0] == signs_[1])
        return std::string("ZxZ:swap(") + (signs_[0] > 0 ? "+" : "-") + ")";
    std::string out = "G[";
    for (std::size_t j = 0; j < rank(); ++j)
        out += (j ? "," : "") + delprod::to_string(orders_[j]) + "->" + (signs_[j] > 0 ? "+" : "-")
               + std::to_string(perm_[j]);
    return out + "]";
}

LocalSystem parse_local_system(std::string_view coefficient, std::string_view phi)
{
    if (!phi.empty() && phi != "+" && phi != "-")
        throw Error("phi must be '+' or '-'");
    const int sign = phi == "-" ? -1 : 1;
    if (coefficient == "Z")
        return LocalSystem({0}, {0}, {sign});
    if (coefficient == "Z-")
    {
        if (phi == "+")
            throw Error("coefficient 'Z-' conflicts with --phi +");
        return LocalSystem::sign(0);
    }
    if (coefficient.starts_with("Zm:"))
    {
        const std::string_view digits = coefficient.substr(3);
        long long m = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
        if (ec != std::errc() || ptr != digits.data() + digits.size() || m < 2)
            throw Error("invalid modulus in '" + std::string(coefficient) + "'");
        return LocalSystem({Integer(m)}, {0}, {sign});
    }
    if (coefficient == "ZxZ:swap(+)" || coefficient == "ZxZ:swap(-)")
    {
        const int s = coefficient[9] == '+' ? 1 : -1;
        return LocalSystem({0, 0}, {1, 0}, {s, s});
    }
    throw Error("unknown coefficient system '" + std::string(coefficient) + "'");
}

} // namespace delprod
