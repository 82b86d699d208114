#pragma once

#include "poslab/rational.hpp"

#include <optional>
#include <vector>

namespace poslab {

/// Row-major arbitrary-precision integer matrix.
struct IntegerMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> entries;

    IntegerMatrix() = default;
    IntegerMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<size_t>(r) * c) {}

    static IntegerMatrix identity(int n) {
        IntegerMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = 1;
        return m;
    }

    Int& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }

    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) = default;
};

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b);
std::vector<Int> multiply(const IntegerMatrix& a, const std::vector<Int>& x);

struct SnfResult {
    IntegerMatrix u; // rows x rows, |det| = 1
    IntegerMatrix d; // diagonal, d1 | d2 | ..., nonnegative
    IntegerMatrix v; // cols x cols, |det| = 1
};

/// U * A * V = D with U, V unimodular and D in Smith normal form.
SnfResult smith_normal_form(const IntegerMatrix& a);

/// Some integer solution of A x = b, if one exists.
std::optional<std::vector<Int>> solve_integer(const IntegerMatrix& a, const std::vector<Int>& b);

/// A basis (as columns) of the integer kernel {x : A x = 0}.
IntegerMatrix integer_kernel(const IntegerMatrix& a);

/// Rank over Q by fraction-free (Bareiss) elimination.
int integer_rank(IntegerMatrix a);

/// Determinant by cofactor expansion; intended as a small-matrix test oracle.
Int determinant_cofactor(const IntegerMatrix& a);

} // namespace poslab
