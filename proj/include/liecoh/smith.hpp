#ifndef LIECOH_SMITH_HPP
#define LIECOH_SMITH_HPP

#include "liecoh/bigint.hpp"

#include <optional>
#include <vector>

namespace liecoh {

struct IntegerMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> a; // row-major

    IntegerMatrix() = default;
    IntegerMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static IntegerMatrix identity(std::size_t n)
    {
        IntegerMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    IntegerMatrix transpose() const
    {
        IntegerMatrix t(cols, rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    IntegerMatrix operator*(const IntegerMatrix& o) const;
    bool operator==(const IntegerMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

struct SNFResult {
    std::vector<Int> diagonal;   // nonzero entries, divisibility-sorted
    std::size_t rank = 0;
    // transforms satisfy left * original * right == diag (as rows x cols matrix)
    std::optional<IntegerMatrix> left;
    std::optional<IntegerMatrix> right;
    std::optional<IntegerMatrix> left_inv;
};

enum class SnfTransforms { None, Left, Both };

// Smith normal form. with_transforms selects whether U,V are accumulated.
SNFResult smith_normal_form(IntegerMatrix m, bool with_transforms = true);
SNFResult smith_normal_form(IntegerMatrix m, SnfTransforms track);

// Exact check left*original*right == diag. Throws on failure.
void verify_snf(const IntegerMatrix& original, const SNFResult& s);

// Solve A*x = b over the integers. Returns one solution or nullopt.
std::optional<std::vector<Int>> solve_integer(const IntegerMatrix& A, const std::vector<Int>& b);

} // namespace liecoh

#endif
