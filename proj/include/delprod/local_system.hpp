#ifndef DELPROD_LOCAL_SYSTEM_HPP
#define DELPROD_LOCAL_SYSTEM_HPP

#include "delprod/integer.hpp"
#include "delprod/sparse_matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace delprod {

/**
 * Coefficient group G = Z/m_1 + ... + Z/m_k (m = 0 meaning Z) with an
 * involution phi acting as a signed permutation: phi(e_j) = sign_j e_{perm_j}.
 */
class LocalSystem
{
  public:
    /// Throws Error unless phi^2 = id and phi only permutes summands of equal order.
    LocalSystem(std::vector<Integer> orders, std::vector<std::uint32_t> permutation, std::vector<std::int32_t> signs);

    static LocalSystem trivial(const Integer& order) { return LocalSystem({order}, {0}, {1}); }
    static LocalSystem sign(const Integer& order) { return LocalSystem({order}, {0}, {-1}); }

    std::size_t rank() const noexcept { return orders_.size(); }
    const std::vector<Integer>& orders() const noexcept { return orders_; }
    const std::vector<std::uint32_t>& permutation() const noexcept { return perm_; }
    const std::vector<std::int32_t>& signs() const noexcept { return signs_; }
    bool is_identity() const;

    /// k x k matrix of phi.
    SparseIntMatrix matrix() const;

    /// (G, -phi).
    LocalSystem negated() const;
    /// (G + G, tau) with tau(a, b) = (phi b, phi a).
    LocalSystem doubled() const;

    /// "Z", "Z-", "Zm:<m>", "ZxZ:swap(+)", ...
    std::string to_string() const;

    friend bool operator==(const LocalSystem&, const LocalSystem&) = default;

  private:
    std::vector<Integer> orders_;
    std::vector<std::uint32_t> perm_;
    std::vector<std::int32_t> signs_;
};

/**
 * Parses a coefficient spec: "Z", "Z-", "Zm:<m>", "ZxZ:swap(+)" or
 * "ZxZ:swap(-)". phi ("+", "-" or empty) sets the sign for the cyclic
 * forms; "Z-" already carries a sign and conflicts with phi "+".
 */
LocalSystem parse_local_system(std::string_view coefficient, std::string_view phi = "");

} // namespace delprod

#endif
