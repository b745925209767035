#include "delprod/smith.hpp"

#include "delprod/errors.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <tuple>

namespace delprod {

namespace {

// Columns and rows of smallest count examined per pivot search.
constexpr std::size_t kCandidateLines = 4;
constexpr std::size_t kDeadlineStride = 256;

struct Pivot
{
    std::size_t row;
    std::size_t col;
    Integer value;
};

/**
 * Sparse integer elimination toward Smith form.
 *
 * Pivots are chosen by Markowitz cost (r - 1) * (c - 1) over the entries of
 * the few lowest-count rows and columns, then by |value|, then by (row, col).
 * A finished pivot has its column cleared by row operations and its row
 * cleared by column operations; the latter touch only the pivot row of A, so
 * they are applied to A only when a remainder survives.
 */
class Eliminator
{
  public:
    Eliminator(const SparseIntMatrix& a, bool track) : rows_(a.rows()), track_(track)
    {
        const std::size_t m = a.rows(), n = a.cols();
        col_rows_.resize(n);
        row_active_.assign(m, 1);
        col_active_.assign(n, 1);
        row_key_.assign(m, 0);
        col_key_.assign(n, 0);
        for (std::size_t i = 0; i < m; ++i)
        {
            rows_[i] = a.row(i);
            for (const auto& e : rows_[i])
                col_rows_[e.index].push_back(i);
        }
        for (std::size_t i = 0; i < m; ++i)
        {
            row_key_[i] = rows_[i].size();
            row_queue_.insert({row_key_[i], i});
        }
        for (std::size_t j = 0; j < n; ++j)
        {
            col_key_[j] = col_rows_[j].size();
            col_queue_.insert({col_key_[j], j});
        }
        if (track_)
        {
            u_rows_.resize(m);
            uinv_cols_.resize(m);
            v_cols_.resize(n);
            for (std::size_t i = 0; i < m; ++i)
            {
                u_rows_[i].push_back({i, 1});
                uinv_cols_[i].push_back({i, 1});
            }
            for (std::size_t j = 0; j < n; ++j)
                v_cols_[j].push_back({j, 1});
        }
    }

    void run(const ComputeOptions& options)
    {
        std::size_t steps = 0;
        while (auto pivot = select_pivot())
        {
            if (++steps % kDeadlineStride == 0)
                options.check();
            eliminate(pivot->first, pivot->second);
        }
    }

    const std::vector<Pivot>& pivots() const { return pivots_; }

    SmithNormalForm finish(std::size_t rows, std::size_t cols);

  private:
    const Integer* entry(std::size_t i, std::size_t c) const
    {
        const auto& row = rows_[i];
        auto it = std::lower_bound(row.begin(), row.end(), c, [](const SparseEntry& e, std::size_t k) { return e.index < k; });
        return it != row.end() && it->index == c ? &it->value : nullptr;
    }

    void refresh_col(std::size_t c)
    {
        if (!col_active_[c] || col_key_[c] == col_rows_[c].size())
            return;
        col_queue_.erase({col_key_[c], c});
        col_key_[c] = col_rows_[c].size();
        col_queue_.insert({col_key_[c], c});
    }

    void refresh_row(std::size_t i)
    {
        if (!row_active_[i] || row_key_[i] == rows_[i].size())
            return;
        row_queue_.erase({row_key_[i], i});
        row_key_[i] = rows_[i].size();
        row_queue_.insert({row_key_[i], i});
    }

    void drop_from_col(std::size_t c, std::size_t i)
    {
        auto& list = col_rows_[c];
        auto it = std::find(list.begin(), list.end(), i);
        if (it == list.end())
            throw Error("elimination bookkeeping out of sync");
        *it = list.back();
        list.pop_back();
    }

    // rows_[i] -= q * rows_[r]
    void row_subtract(std::size_t i, const Integer& q, std::size_t r)
    {
        SparseVector out;
        const SparseVector& target = rows_[i];
        const SparseVector& source = rows_[r];
        out.reserve(target.size() + source.size());
        auto t = target.begin();
        auto s = source.begin();
        touched_.clear();
        while (t != target.end() || s != source.end())
        {
            if (s == source.end() || (t != target.end() && t->index < s->index))
            {
                out.push_back(*t);
                ++t;
            }
            else if (t == target.end() || s->index < t->index)
            {
                out.push_back({s->index, -(q * s->value)});
                col_rows_[s->index].push_back(i);
                touched_.push_back(s->index);
                ++s;
            }
            else
            {
                Integer v = t->value - q * s->value;
                if (v != 0)
                    out.push_back({t->index, std::move(v)});
                else
                {
                    drop_from_col(t->index, i);
                    touched_.push_back(t->index);
                }
                ++t;
                ++s;
            }
        }
        rows_[i] = std::move(out);
        for (std::size_t c : touched_)
            refresh_col(c);
        refresh_row(i);
        if (track_)
        {
            add_scaled(u_rows_[i], -q, u_rows_[r]);
            add_scaled(uinv_cols_[r], q, uinv_cols_[i]);
        }
    }

    void deactivate_row(std::size_t r)
    {
        for (const auto& e : rows_[r])
        {
            drop_from_col(e.index, r);
            refresh_col(e.index);
        }
        rows_[r].clear();
        row_queue_.erase({row_key_[r], r});
        row_active_[r] = 0;
    }

    void deactivate_col(std::size_t c)
    {
        col_queue_.erase({col_key_[c], c});
        col_active_[c] = 0;
    }

    void eliminate(std::size_t r, std::size_t c)
    {
        for (;;)
        {
            const Integer p = *entry(r, c);

            std::vector<std::size_t> others;
            for (std::size_t i : col_rows_[c])
                if (i != r)
                    others.push_back(i);
            std::sort(others.begin(), others.end());
            std::optional<std::size_t> smaller_row;
            Integer smallest;
            for (std::size_t i : others)
            {
                Integer q = truncated_quotient(*entry(i, c), p);
                if (q != 0)
                    row_subtract(i, q, r);
                if (const Integer* rem = entry(i, c))
                {
                    Integer a = abs_value(*rem);
                    if (!smaller_row || a < smallest)
                    {
                        smaller_row = i;
                        smallest = a;
                    }
                }
            }
            if (smaller_row)
            {
                r = *smaller_row;
                continue;
            }

            // Column c now holds only the pivot. Clear row r by column operations.
            std::optional<std::size_t> smaller_col;
            bool any_remainder = false;
            for (auto& e : rows_[r])
            {
                if (e.index == c)
                    continue;
                Integer q = truncated_quotient(e.value, p);
                if (q == 0)
                {
                    any_remainder = true;
                    continue;
                }
                if (track_)
                    add_scaled(v_cols_[e.index], -q, v_cols_[c]);
                e.value -= q * p;
                if (e.value != 0)
                    any_remainder = true;
            }
            if (any_remainder)
            {
                Integer best;
                SparseVector kept;
                for (auto& e : rows_[r])
                {
                    if (e.value == 0)
                    {
                        drop_from_col(e.index, r);
                        refresh_col(e.index);
                        continue;
                    }
                    if (e.index != c)
                    {
                        Integer a = abs_value(e.value);
                        if (!smaller_col || a < best)
                        {
                            smaller_col = e.index;
                            best = a;
                        }
                    }
                    kept.push_back(std::move(e));
                }
                rows_[r] = std::move(kept);
                refresh_row(r);
                c = *smaller_col;
                continue;
            }

            pivots_.push_back({r, c, p});
            deactivate_row(r);
            deactivate_col(c);
            return;
        }
    }

    std::optional<std::pair<std::size_t, std::size_t>> select_pivot()
    {
        while (!col_queue_.empty() && col_queue_.begin()->first == 0)
            deactivate_col(col_queue_.begin()->second);
        while (!row_queue_.empty() && row_queue_.begin()->first == 0)
        {
            std::size_t i = row_queue_.begin()->second;
            row_queue_.erase(row_queue_.begin());
            row_active_[i] = 0;
        }
        if (col_queue_.empty())
            return std::nullopt;

        using Key = std::tuple<std::size_t, Integer, std::size_t, std::size_t>;
        std::optional<Key> best;
        auto consider = [&](std::size_t i, std::size_t c, const Integer& value) {
            std::size_t cost = (rows_[i].size() - 1) * (col_rows_[c].size() - 1);
            if (best && cost > std::get<0>(*best))
                return;
            Key key{cost, abs_value(value), i, c};
            if (!best || key < *best)
                best = std::move(key);
        };

        std::size_t seen = 0;
        for (auto it = col_queue_.begin(); it != col_queue_.end() && seen < kCandidateLines; ++it, ++seen)
            for (std::size_t i : col_rows_[it->second])
                consider(i, it->second, *entry(i, it->second));
        seen = 0;
        for (auto it = row_queue_.begin(); it != row_queue_.end() && seen < kCandidateLines; ++it, ++seen)
            for (const auto& e : rows_[it->second])
                consider(it->second, e.index, e.value);
        return std::make_pair(std::get<2>(*best), std::get<3>(*best));
    }

    std::vector<SparseVector> rows_;
    std::vector<std::vector<std::size_t>> col_rows_;
    std::vector<char> row_active_;
    std::vector<char> col_active_;
    std::vector<std::size_t> row_key_;
    std::vector<std::size_t> col_key_;
    std::set<std::pair<std::size_t, std::size_t>> row_queue_;
    std::set<std::pair<std::size_t, std::size_t>> col_queue_;
    std::vector<std::size_t> touched_;

    bool track_;
    std::vector<SparseVector> u_rows_;
    std::vector<SparseVector> uinv_cols_;
    std::vector<SparseVector> v_cols_;
    std::vector<Pivot> pivots_;
};

SparseVector combine(const Integer& a, const SparseVector& x, const Integer& b, const SparseVector& y)
{
    SparseVector out;
    add_scaled(out, a, x);
    add_scaled(out, b, y);
    return out;
}

SmithNormalForm Eliminator::finish(std::size_t rows, std::size_t cols)
{
    const std::size_t rank = pivots_.size();
    std::vector<std::size_t> row_order, col_order;
    std::vector<char> row_used(rows, 0), col_used(cols, 0);
    for (const auto& p : pivots_)
    {
        row_order.push_back(p.row);
        col_order.push_back(p.col);
        row_used[p.row] = 1;
        col_used[p.col] = 1;
    }
    for (std::size_t i = 0; i < rows; ++i)
        if (!row_used[i])
            row_order.push_back(i);
    for (std::size_t j = 0; j < cols; ++j)
        if (!col_used[j])
            col_order.push_back(j);

    std::vector<SparseVector> u(rows), uinv(rows), v(cols);
    for (std::size_t k = 0; k < rows; ++k)
    {
        u[k] = std::move(u_rows_[row_order[k]]);
        uinv[k] = std::move(uinv_cols_[row_order[k]]);
    }
    for (std::size_t k = 0; k < cols; ++k)
        v[k] = std::move(v_cols_[col_order[k]]);

    std::vector<Integer> d(rank);
    for (std::size_t k = 0; k < rank; ++k)
    {
        d[k] = pivots_[k].value;
        if (d[k] < 0)
        {
            d[k] = -d[k];
            for (auto& e : u[k])
                e.value = -e.value;
            for (auto& e : uinv[k])
                e.value = -e.value;
        }
    }

    // Units first, keeping the pivot order otherwise.
    std::vector<std::size_t> perm(rank);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_partition(perm.begin(), perm.end(), [&](std::size_t k) { return d[k] == 1; });
    {
        std::vector<Integer> d2(rank);
        std::vector<SparseVector> u2(rank), uinv2(rank), v2(rank);
        for (std::size_t k = 0; k < rank; ++k)
        {
            d2[k] = d[perm[k]];
            u2[k] = std::move(u[perm[k]]);
            uinv2[k] = std::move(uinv[perm[k]]);
            v2[k] = std::move(v[perm[k]]);
        }
        for (std::size_t k = 0; k < rank; ++k)
        {
            d[k] = std::move(d2[k]);
            u[k] = std::move(u2[k]);
            uinv[k] = std::move(uinv2[k]);
            v[k] = std::move(v2[k]);
        }
    }

    // Enforce d_i | d_j with unimodular 2x2 moves on rows i, j of U and columns of V.
    const std::size_t first = static_cast<std::size_t>(std::count(d.begin(), d.end(), Integer(1)));
    for (std::size_t i = first; i < rank; ++i)
        for (std::size_t j = i + 1; j < rank; ++j)
        {
            if (d[j] % d[i] == 0)
                continue;
            const Integer a = d[i], b = d[j];
            Bezout bz = extended_gcd(a, b);
            const Integer ag = a / bz.g, bg = b / bz.g;
            SparseVector ui = combine(bz.s, u[i], bz.t, u[j]);
            SparseVector uj = combine(-bg, u[i], ag, u[j]);
            u[i] = std::move(ui);
            u[j] = std::move(uj);
            SparseVector wi = combine(ag, uinv[i], bg, uinv[j]);
            SparseVector wj = combine(-bz.t, uinv[i], bz.s, uinv[j]);
            uinv[i] = std::move(wi);
            uinv[j] = std::move(wj);
            SparseVector vi = combine(1, v[i], 1, v[j]);
            SparseVector vj = combine(-bz.t * bg, v[i], bz.s * ag, v[j]);
            v[i] = std::move(vi);
            v[j] = std::move(vj);
            d[i] = bz.g;
            d[j] = a * bg;
        }

    SmithNormalForm snf;
    snf.rows = rows;
    snf.cols = cols;
    snf.diagonal = std::move(d);
    snf.left = SparseIntMatrix::from_rows(rows, std::move(u));
    snf.left_inverse = SparseIntMatrix::from_columns(rows, uinv);
    snf.right = SparseIntMatrix::from_columns(cols, v);
    return snf;
}

} // namespace

SparseIntMatrix SmithNormalForm::diagonal_matrix() const
{
    SparseIntMatrix d(rows, cols);
    for (std::size_t k = 0; k < diagonal.size(); ++k)
        d.set(k, k, diagonal[k]);
    return d;
}

SmithNormalForm smith_normal_form(const SparseIntMatrix& a, const ComputeOptions& options)
{
    Eliminator e(a, true);
    e.run(options);
    return e.finish(a.rows(), a.cols());
}

ElementaryDivisors elementary_divisors(const SparseIntMatrix& a, const ComputeOptions& options)
{
    Eliminator e(a, false);
    e.run(options);
    ElementaryDivisors out;
    out.rank = e.pivots().size();
    std::vector<Integer> values;
    for (const auto& p : e.pivots())
    {
        Integer v = abs_value(p.value);
        if (v != 1)
            values.push_back(std::move(v));
    }
    out.torsion = invariant_factors(std::move(values));
    return out;
}

AbelianGroup cokernel(const SparseIntMatrix& a)
{
    ElementaryDivisors d = elementary_divisors(a);
    return AbelianGroup(a.rows() - d.rank, d.torsion);
}

} // namespace delprod
