#include "poslab/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace poslab {

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols != b.rows)
        throw std::invalid_argument("multiply: shape mismatch");
    IntegerMatrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            if (a.at(i, k) == 0)
                continue;
            for (int j = 0; j < b.cols; ++j)
                c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

std::vector<Int> multiply(const IntegerMatrix& a, const std::vector<Int>& x) {
    if (a.cols != static_cast<int>(x.size()))
        throw std::invalid_argument("multiply: shape mismatch");
    std::vector<Int> y(a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            y[i] += a.at(i, j) * x[j];
    return y;
}

namespace {

struct SnfWork {
    IntegerMatrix a, u, v;

    void swap_rows(int i, int j) {
        if (i == j)
            return;
        for (int c = 0; c < a.cols; ++c)
            std::swap(a.at(i, c), a.at(j, c));
        for (int c = 0; c < u.cols; ++c)
            std::swap(u.at(i, c), u.at(j, c));
    }
    void swap_cols(int i, int j) {
        if (i == j)
            return;
        for (int r = 0; r < a.rows; ++r)
            std::swap(a.at(r, i), a.at(r, j));
        for (int r = 0; r < v.rows; ++r)
            std::swap(v.at(r, i), v.at(r, j));
    }
    void add_row(int dst, int src, const Int& f) { // row dst += f * row src
        for (int c = 0; c < a.cols; ++c)
            a.at(dst, c) += f * a.at(src, c);
        for (int c = 0; c < u.cols; ++c)
            u.at(dst, c) += f * u.at(src, c);
    }
    void add_col(int dst, int src, const Int& f) {
        for (int r = 0; r < a.rows; ++r)
            a.at(r, dst) += f * a.at(r, src);
        for (int r = 0; r < v.rows; ++r)
            v.at(r, dst) += f * v.at(r, src);
    }
    void negate_row(int i) {
        for (int c = 0; c < a.cols; ++c)
            a.at(i, c) = -a.at(i, c);
        for (int c = 0; c < u.cols; ++c)
            u.at(i, c) = -u.at(i, c);
    }
};

} // namespace

SnfResult smith_normal_form(const IntegerMatrix& input) {
    SnfWork w{input, IntegerMatrix::identity(input.rows), IntegerMatrix::identity(input.cols)};
    const int n = std::min(input.rows, input.cols);

    for (int t = 0; t < n; ++t) {
        // pivot: minimal nonzero |entry| in the trailing submatrix
        int pr = -1, pc = -1;
        for (int r = t; r < w.a.rows; ++r)
            for (int c = t; c < w.a.cols; ++c) {
                if (w.a.at(r, c) == 0)
                    continue;
                if (pr < 0 || cmpabs(w.a.at(r, c).get_mpz_t(), w.a.at(pr, pc).get_mpz_t()) < 0)
                    pr = r, pc = c;
            }
        if (pr < 0)
            break; // trailing submatrix is zero
        w.swap_rows(t, pr);
        w.swap_cols(t, pc);

        for (;;) {
            bool clean = true;
            for (int r = t + 1; r < w.a.rows; ++r) {
                if (w.a.at(r, t) == 0)
                    continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), w.a.at(r, t).get_mpz_t(), w.a.at(t, t).get_mpz_t());
                w.add_row(r, t, -q);
                if (w.a.at(r, t) != 0) { // remainder becomes the smaller pivot
                    w.swap_rows(t, r);
                    clean = false;
                }
            }
            for (int c = t + 1; c < w.a.cols; ++c) {
                if (w.a.at(t, c) == 0)
                    continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), w.a.at(t, c).get_mpz_t(), w.a.at(t, t).get_mpz_t());
                w.add_col(c, t, -q);
                if (w.a.at(t, c) != 0) {
                    w.swap_cols(t, c);
                    clean = false;
                }
            }
            if (!clean)
                continue;
            // pivot must divide every remaining entry; if not, fold the
            // offending row in and reduce again
            bool divides = true;
            for (int r = t + 1; r < w.a.rows && divides; ++r)
                for (int c = t + 1; c < w.a.cols && divides; ++c)
                    if (!mpz_divisible_p(w.a.at(r, c).get_mpz_t(), w.a.at(t, t).get_mpz_t())) {
                        w.add_row(t, r, Int(1));
                        divides = false;
                    }
            if (divides)
                break;
        }
        if (w.a.at(t, t) < 0)
            w.negate_row(t);
    }

    return {std::move(w.u), std::move(w.a), std::move(w.v)};
}

std::optional<std::vector<Int>> solve_integer(const IntegerMatrix& a, const std::vector<Int>& b) {
    if (static_cast<int>(b.size()) != a.rows)
        throw std::invalid_argument("solve_integer: rhs length differs from rows");
    if (a.rows == 0)
        return std::vector<Int>(a.cols); // no constraints
    SnfResult snf = smith_normal_form(a);
    std::vector<Int> ub = multiply(snf.u, b);
    std::vector<Int> y(a.cols);
    const int n = std::min(a.rows, a.cols);
    for (int i = 0; i < a.rows; ++i) {
        const Int d = i < n ? snf.d.at(i, i) : Int(0);
        if (d == 0) {
            if (ub[i] != 0)
                return std::nullopt;
        } else {
            if (!mpz_divisible_p(ub[i].get_mpz_t(), d.get_mpz_t()))
                return std::nullopt;
            y[i] = ub[i] / d;
        }
    }
    return multiply(snf.v, y);
}

IntegerMatrix integer_kernel(const IntegerMatrix& a) {
    if (a.rows == 0)
        return IntegerMatrix::identity(a.cols);
    SnfResult snf = smith_normal_form(a);
    const int n = std::min(a.rows, a.cols);
    std::vector<int> free_cols;
    for (int i = 0; i < a.cols; ++i)
        if (i >= n || snf.d.at(i, i) == 0)
            free_cols.push_back(i);
    IntegerMatrix k(a.cols, static_cast<int>(free_cols.size()));
    for (int j = 0; j < k.cols; ++j)
        for (int r = 0; r < a.cols; ++r)
            k.at(r, j) = snf.v.at(r, free_cols[j]);
    return k;
}

int integer_rank(IntegerMatrix a) {
    int rank = 0;
    Int prev = 1;
    for (int col = 0; col < a.cols && rank < a.rows; ++col) {
        int piv = -1;
        for (int r = rank; r < a.rows; ++r)
            if (a.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != rank)
            for (int c = 0; c < a.cols; ++c)
                std::swap(a.at(piv, c), a.at(rank, c));
        for (int r = rank + 1; r < a.rows; ++r) {
            for (int c = col + 1; c < a.cols; ++c) {
                a.at(r, c) = a.at(rank, col) * a.at(r, c) - a.at(r, col) * a.at(rank, c);
                mpz_divexact(a.at(r, c).get_mpz_t(), a.at(r, c).get_mpz_t(), prev.get_mpz_t());
            }
            a.at(r, col) = 0;
        }
        prev = a.at(rank, col);
        ++rank;
    }
    return rank;
}

Int determinant_cofactor(const IntegerMatrix& a) {
    if (a.rows != a.cols)
        throw std::invalid_argument("determinant_cofactor: matrix not square");
    const int n = a.rows;
    if (n == 0)
        return 1;
    if (n == 1)
        return a.at(0, 0);
    Int det = 0;
    for (int j = 0; j < n; ++j) {
        if (a.at(0, j) == 0)
            continue;
        IntegerMatrix minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j)
                    continue;
                minor.at(r - 1, cc++) = a.at(r, c);
            }
        }
        Int term = a.at(0, j) * determinant_cofactor(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

} // namespace poslab
