#include "delprod/gf2.hpp"

#include "delprod/errors.hpp"

#include <algorithm>
#include <iterator>

namespace delprod {

Gf2Vector gf2_reduce(const SparseVector& v)
{
    Gf2Vector out;
    for (const auto& e : v)
        if (boost::multiprecision::bit_test(abs_value(e.value), 0))
            out.push_back(static_cast<std::uint32_t>(e.index));
    return out;
}

Gf2Vector Gf2Span::reduce(Gf2Vector v) const
{
    Gf2Vector tmp;
    while (!v.empty())
    {
        const std::uint32_t low = v.back();
        if (low >= owner_.size())
            throw Error("GF(2) vector out of range");
        const std::int64_t k = owner_[low];
        if (k < 0)
            break;
        tmp.clear();
        const auto& c = columns_[static_cast<std::size_t>(k)];
        std::set_symmetric_difference(v.begin(), v.end(), c.begin(), c.end(), std::back_inserter(tmp));
        v.swap(tmp);
    }
    return v;
}

bool Gf2Span::add(Gf2Vector column)
{
    Gf2Vector r = reduce(std::move(column));
    if (r.empty())
        return false;
    owner_[r.back()] = static_cast<std::int64_t>(columns_.size());
    columns_.push_back(std::move(r));
    return true;
}

Gf2Span Gf2Span::of_columns(const SparseIntMatrix& m)
{
    SparseIntMatrix t = m.transpose();
    Gf2Span span(m.rows());
    for (std::size_t j = 0; j < t.rows(); ++j)
        span.add(gf2_reduce(t.row(j)));
    return span;
}

} // namespace delprod
