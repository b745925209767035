#include "delprod/integer.hpp"

#include "delprod/errors.hpp"

namespace delprod {

Bezout extended_gcd(const Integer& a, const Integer& b)
{
    Integer old_r = a, r = b;
    Integer old_s = 1, s = 0;
    Integer old_t = 0, t = 1;
    while (r != 0)
    {
        Integer q = old_r / r;
        Integer tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0)
        return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

Integer reduce_mod(const Integer& x, const Integer& m)
{
    if (m == 0)
        return x;
    Integer r = x % m;
    if (r < 0)
        r += m;
    return r;
}

void ComputeOptions::check() const
{
    if (deadline && std::chrono::steady_clock::now() > *deadline)
        throw BudgetExceeded("computation exceeded its time budget");
}

} // namespace delprod
