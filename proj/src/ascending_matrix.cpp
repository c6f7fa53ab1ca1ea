#include "sfasd/ascending_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sfasd/errors.hpp"
#include "sfasd/reduction.hpp"

namespace sfasd {

IntMatrix::IntMatrix(int rows, int cols, int fill)
    : rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill)
{
    if (rows < 0 || cols < 0) throw Error("IntMatrix: negative dimension");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<int>> rows)
{
    std::vector<std::vector<int>> v;
    for (const auto& r : rows) v.emplace_back(r);
    *this = from_rows(v);
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<int>>& rows)
{
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c) {
            throw Error("IntMatrix: ragged rows");
        }
        for (int j = 0; j < c; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

std::vector<int> IntMatrix::row_sums() const
{
    std::vector<int> s(static_cast<std::size_t>(rows_), 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) s[static_cast<std::size_t>(i)] += (*this)(i, j);
    return s;
}

std::vector<int> IntMatrix::col_sums() const
{
    std::vector<int> s(static_cast<std::size_t>(cols_), 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) s[static_cast<std::size_t>(j)] += (*this)(i, j);
    return s;
}

std::vector<int> IntMatrix::column(int c) const
{
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) v.push_back((*this)(i, c));
    return v;
}

std::vector<int> IntMatrix::row(int r) const
{
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(cols_));
    for (int j = 0; j < cols_; ++j) v.push_back((*this)(r, j));
    return v;
}

std::string IntMatrix::to_string() const
{
    std::ostringstream out;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) out << (j ? " " : "") << (*this)(i, j);
        out << '\n';
    }
    return out.str();
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw LengthMismatch("IntMatrix: shape mismatch in +");
    IntMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
}

std::vector<int> ascending_sequence(int x)
{
    std::vector<int> v(static_cast<std::size_t>(std::max(x, 0)));
    std::iota(v.begin(), v.end(), 1);
    return v;
}

std::vector<int> constant_sequence(int r, int x)
{
    return std::vector<int>(static_cast<std::size_t>(std::max(r, 0)), x);
}

AscendingMatrix AscendingMatrix::make(IntMatrix entries, DegreeVector d, std::vector<int> b)
{
    if (!is_valid(entries, d, b)) {
        throw Error("not an ascending member of N(d,b):\n" + entries.to_string());
    }
    return AscendingMatrix(std::move(entries), std::move(d), std::move(b));
}

bool is_valid(const IntMatrix& a, const DegreeVector& d, const std::vector<int>& b)
{
    if (static_cast<int>(d.size()) != a.rows() || static_cast<int>(b.size()) != a.cols()) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a(i, j) < 0) return false;
    if (a.row_sums() != d || a.col_sums() != b) return false;
    for (int j = 0; j + 1 < a.cols(); ++j) {
        if (!dominance_leq(a.column(j), a.column(j + 1))) return false;
    }
    return true;
}

IntMatrix build_T(int k, int n)
{
    if (k < 1 || k > n) throw Error("build_T requires 1 <= k <= n");
    IntMatrix t(k, n);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= n; ++j)
            if (i + j >= k + 1) t(i - 1, j - 1) = 1;
    return t;
}

namespace {

// Fills columns right to left.  Within a column, rows are visited by
// decreasing remaining degree (ties: larger row index first) and each row
// takes as much as it can before smaller values are tried.
class AscendingSearch {
public:
    AscendingSearch(const DegreeVector& d, int m)
        : k_(static_cast<int>(d.size())), m_(m), remaining_(d), out_(k_, m) {}

    bool run() { return fill_column(m_ - 1); }
    const IntMatrix& result() const { return out_; }

private:
    bool fill_column(int c)
    {
        if (c < 0) {
            return std::all_of(remaining_.begin(), remaining_.end(), [](int r) { return r == 0; });
        }
        std::vector<int> order(static_cast<std::size_t>(k_));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (remaining_[a] != remaining_[b]) return remaining_[a] > remaining_[b];
            return a > b;
        });
        std::vector<int> capacity_after(static_cast<std::size_t>(k_) + 1, 0);
        for (int p = k_ - 1; p >= 0; --p) {
            capacity_after[p] = capacity_after[p + 1] + std::min(remaining_[order[p]], c + 1);
        }
        return distribute(c, order, capacity_after, 0, c + 1);
    }

    bool distribute(int c, const std::vector<int>& order, const std::vector<int>& capacity_after,
                    int pos, int left)
    {
        if (pos == k_) {
            if (left != 0) return false;
            if (!column_ok(c)) return false;
            if (fill_column(c - 1)) return true;
            return false;
        }
        const int row = order[pos];
        const int hi = std::min(remaining_[row], left);
        const int lo = std::max(0, left - capacity_after[pos + 1]);
        for (int v = hi; v >= lo; --v) {
            out_(row, c) = v;
            remaining_[row] -= v;
            const bool found = distribute(c, order, capacity_after, pos + 1, left - v);
            remaining_[row] += v;
            if (found) return true;
            out_(row, c) = 0;
        }
        return false;
    }

    // Dominance against the column to the right, and a bound on what the
    // columns to the left can still absorb: their entries never exceed the
    // largest entry of this column, nor their own column sum.
    bool column_ok(int c)
    {
        std::vector<int> col = out_.column(c);
        if (c + 1 < m_ && !dominance_leq(col, out_.column(c + 1))) return false;
        const int top = *std::max_element(col.begin(), col.end());
        long long absorb = 0;
        for (int cc = 1; cc <= c; ++cc) absorb += std::min(cc, top);
        for (int r = 0; r < k_; ++r) {
            if (remaining_[r] > absorb) return false;
        }
        return true;
    }

    int k_;
    int m_;
    DegreeVector remaining_;
    IntMatrix out_;
};

}  // namespace

AscendingMatrix construct_ascending(const DegreeVector& d, int m)
{
    const long long sum = std::accumulate(d.begin(), d.end(), 0LL);
    if (m < 0 || sum != triangular(m)) {
        throw SumMismatch("construct_ascending: sum(d) = " + std::to_string(sum) + " but m = " +
                          std::to_string(m));
    }
    if (std::any_of(d.begin(), d.end(), [](int x) { return x < 0; })) {
        throw Error("construct_ascending: negative row sum");
    }
    AscendingSearch search(d, m);
    if (!search.run()) {
        std::ostringstream msg;
        msg << "no ascending matrix found for d = (";
        for (std::size_t i = 0; i < d.size(); ++i) msg << (i ? "," : "") << d[i];
        msg << "), m = " << m;
        throw SearchExhausted(msg.str());
    }
    return AscendingMatrix::make(search.result(), d, ascending_sequence(m));
}

AscendingMatrix construct_with_support(const DegreeVector& d, int n)
{
    if (!std::is_sorted(d.begin(), d.end())) throw ConditionFailed("degree sequence must be nondecreasing");
    if (d.empty() || !check_sufficient(d, n)) {
        throw ConditionFailed("degree sequence fails d_{k-i} >= n-i");
    }
    const int k = static_cast<int>(d.size());
    IntMatrix a = build_T(k, n);

    DegreeVector reduced(d.size());
    for (int i = 1; i <= k; ++i) reduced[static_cast<std::size_t>(i - 1)] = d[static_cast<std::size_t>(i - 1)] - (n - k + i);

    if (n > k) {
        const AscendingMatrix tail = construct_ascending(reduced, n - k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < n - k; ++j) a(i, k + j) += tail(i, j);
    }
    return AscendingMatrix::make(std::move(a), d, ascending_sequence(n));
}

}  // namespace sfasd
