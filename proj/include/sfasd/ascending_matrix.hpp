#ifndef SFASD_ASCENDING_MATRIX_HPP
#define SFASD_ASCENDING_MATRIX_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "sfasd/graph_core.hpp"

namespace sfasd {

/// Dense row-major integer matrix.  Element access is 0-based; row r is x_{r+1}
/// and column c is z_{c+1}.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols, int fill = 0);
    IntMatrix(std::initializer_list<std::initializer_list<int>> rows);

    static IntMatrix from_rows(const std::vector<std::vector<int>>& rows);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    int& operator()(int r, int c) { return data_[index(r, c)]; }
    int operator()(int r, int c) const { return data_[index(r, c)]; }

    std::vector<int> row_sums() const;
    std::vector<int> col_sums() const;
    std::vector<int> column(int c) const;
    std::vector<int> row(int r) const;

    std::string to_string() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);

private:
    std::size_t index(int r, int c) const
    {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<int> data_;
};

/// x^- = (1, 2, ..., x).
std::vector<int> ascending_sequence(int x);

/// x^r = (x, ..., x) with r entries.
std::vector<int> constant_sequence(int r, int x);

/// Member of N(d, b) whose columns form a dominance chain.  Only obtainable
/// through make(), which validates.
class AscendingMatrix {
public:
    /// Throws Error if !is_valid(entries, d, b).
    static AscendingMatrix make(IntMatrix entries, DegreeVector d, std::vector<int> b);

    const IntMatrix& entries() const noexcept { return entries_; }
    const DegreeVector& row_sums() const noexcept { return row_sums_; }
    const std::vector<int>& col_sums() const noexcept { return col_sums_; }
    int rows() const noexcept { return entries_.rows(); }
    int cols() const noexcept { return entries_.cols(); }
    int operator()(int r, int c) const { return entries_(r, c); }

private:
    AscendingMatrix(IntMatrix e, DegreeVector d, std::vector<int> b)
        : entries_(std::move(e)), row_sums_(std::move(d)), col_sums_(std::move(b)) {}

    IntMatrix entries_;
    DegreeVector row_sums_;
    std::vector<int> col_sums_;
};

/// Nonnegative, row sums d, column sums b, and A_1 <= A_2 <= ... <= A_n.
bool is_valid(const IntMatrix& a, const DegreeVector& d, const std::vector<int>& b);

/// 0/1 staircase with t_ij = 1 iff i + j >= k + 1 (1-based).  Requires 1 <= k <= n.
IntMatrix build_T(int k, int n);

/// Some ascending member of N(d, m^-), rows in the order of d.  Deterministic.
/// Throws SumMismatch if sum(d) != m(m+1)/2, SearchExhausted if none is found.
AscendingMatrix construct_ascending(const DegreeVector& d, int m);

/// Ascending member of N(d, n^-) with a_ij >= 1 whenever i + j >= k + 1,
/// built as T plus an ascending matrix for the reduced row sums placed in
/// the last n - k columns.  Throws ConditionFailed unless check_sufficient(d, n).
AscendingMatrix construct_with_support(const DegreeVector& d, int n);

}  // namespace sfasd

#endif  // SFASD_ASCENDING_MATRIX_HPP
