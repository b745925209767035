#ifndef DELPROD_INTEGER_HPP
#define DELPROD_INTEGER_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace delprod {

/// Arbitrary-precision integer used for every matrix entry and group order.
using Integer = boost::multiprecision::cpp_int;

using IntVector = std::vector<Integer>;

inline Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

/// Floor-free division toward zero; callers only rely on |a - q*b| < |b|.
inline Integer truncated_quotient(const Integer& a, const Integer& b) { return a / b; }

inline Integer gcd_of(const Integer& a, const Integer& b)
{
    return boost::multiprecision::gcd(abs_value(a), abs_value(b));
}

/// Extended gcd: returns g = gcd(a, b) >= 0 together with s, t, s*a + t*b = g.
struct Bezout
{
    Integer g;
    Integer s;
    Integer t;
};
Bezout extended_gcd(const Integer& a, const Integer& b);

/// Canonical representative of x modulo m in [0, m); m == 0 leaves x untouched.
Integer reduce_mod(const Integer& x, const Integer& m);

inline std::string to_string(const Integer& x) { return x.str(); }

/// Optional wall-clock limit threaded through long eliminations.
struct ComputeOptions
{
    std::optional<std::chrono::steady_clock::time_point> deadline;

    static ComputeOptions with_budget(std::chrono::duration<double> budget)
    {
        ComputeOptions o;
        o.deadline = std::chrono::steady_clock::now()
                     + std::chrono::duration_cast<std::chrono::steady_clock::duration>(budget);
        return o;
    }

    /// Throws BudgetExceeded once the deadline has passed.
    void check() const;
};

} // namespace delprod

#endif
