#include "poslab/tableaux.hpp"

#include <algorithm>

namespace poslab {

std::vector<Partition> partitions_of(int n, int max_len) {
    std::vector<Partition> out;
    if (n < 0)
        return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        if (max_len >= 0 && static_cast<int>(cur.size()) == max_len)
            return;
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

bool is_semistandard(const Numbering& t) {
    const SkewShape& sh = t.shape();
    for (int r = 1; r <= sh.rows(); ++r) {
        for (int c = sh.row_begin(r) + 2; c <= sh.row_end(r); ++c)
            if (t.at(r, c - 1) > t.at(r, c))
                return false;
        if (r >= 2) {
            int lo = std::max(sh.row_begin(r), sh.row_begin(r - 1)) + 1;
            int hi = std::min(sh.row_end(r), sh.row_end(r - 1));
            for (int c = lo; c <= hi; ++c)
                if (t.at(r - 1, c) >= t.at(r, c))
                    return false;
        }
    }
    return true;
}

std::vector<int> reading_word(const Numbering& t) {
    std::vector<int> w;
    for (const auto& row : t.rows())
        w.insert(w.end(), row.rbegin(), row.rend());
    return w;
}

bool is_ballot(const std::vector<int>& word) {
    std::vector<int> cnt;
    for (int v : word) {
        if (v > static_cast<int>(cnt.size()))
            cnt.resize(v, 0);
        ++cnt[v - 1];
        if (v >= 2 && cnt[v - 1] > cnt[v - 2])
            return false;
    }
    return true;
}

bool is_lr_tableau(const Numbering& t, const Partition& content) {
    if (!is_semistandard(t))
        return false;
    std::vector<int> cnt = t.content();
    while (!cnt.empty() && cnt.back() == 0)
        cnt.pop_back();
    if (static_cast<int>(cnt.size()) != content.length())
        return false;
    for (int i = 1; i <= content.length(); ++i)
        if (cnt[i - 1] != content.part(i))
            return false;
    return is_ballot(reading_word(t));
}

namespace {

// Cells in row-major order; columns are 1-based diagram coordinates.
struct CellGrid {
    const SkewShape& shape;
    std::vector<std::vector<int>> fill; // fill[r-1][c-1], 0 = empty

    explicit CellGrid(const SkewShape& sh) : shape(sh) {
        fill.resize(sh.rows());
        for (int r = 1; r <= sh.rows(); ++r)
            fill[r - 1].assign(sh.row_end(r), 0);
    }
    bool in_shape(int r, int c) const {
        return r >= 1 && r <= shape.rows() && c > shape.row_begin(r) && c <= shape.row_end(r);
    }
    Numbering to_numbering() const {
        std::vector<std::vector<int>> rows(shape.rows());
        for (int r = 1; r <= shape.rows(); ++r)
            rows[r - 1].assign(fill[r - 1].begin() + shape.row_begin(r), fill[r - 1].end());
        return Numbering(shape, std::move(rows));
    }
};

} // namespace

bool for_each_ssyt(const SkewShape& shape, int max_entry,
                   const std::function<bool(const Numbering&)>& visit) {
    if (max_entry < 0)
        max_entry = 0;
    CellGrid g(shape);
    // Row-major cell list.
    std::vector<std::pair<int, int>> cells;
    for (int r = 1; r <= shape.rows(); ++r)
        for (int c = shape.row_begin(r) + 1; c <= shape.row_end(r); ++c)
            cells.emplace_back(r, c);

    auto rec = [&](auto&& self, size_t idx) -> bool {
        if (idx == cells.size())
            return visit(g.to_numbering());
        auto [r, c] = cells[idx];
        int lo = 1, hi = max_entry;
        if (g.in_shape(r, c - 1))
            lo = std::max(lo, g.fill[r - 1][c - 2]);
        if (g.in_shape(r - 1, c))
            lo = std::max(lo, g.fill[r - 2][c - 1] + 1);
        for (int v = lo; v <= hi; ++v) {
            g.fill[r - 1][c - 1] = v;
            if (!self(self, idx + 1))
                return false;
        }
        g.fill[r - 1][c - 1] = 0;
        return true;
    };
    return rec(rec, 0);
}

std::vector<Numbering> enumerate_ssyt(const SkewShape& shape, int max_entry) {
    std::vector<Numbering> out;
    for_each_ssyt(shape, max_entry, [&](const Numbering& t) {
        out.push_back(t);
        return true;
    });
    std::sort(out.begin(), out.end(), [](const Numbering& a, const Numbering& b) {
        return reading_word(a) < reading_word(b);
    });
    return out;
}

long long count_ssyt(const SkewShape& shape, int max_entry) {
    long long n = 0;
    for_each_ssyt(shape, max_entry, [&](const Numbering&) {
        ++n;
        return true;
    });
    return n;
}

long long count_ssyt(const Partition& shape, int max_entry) {
    return count_ssyt(SkewShape(shape), max_entry);
}

namespace {

// Places values 1..n one at a time into corner cells whose left and upper
// neighbors are already filled; each standard tableau is reached once.
long long standard_rec(CellGrid& g, int next, int total,
                       std::vector<Numbering>* out) {
    if (next > total) {
        if (out)
            out->push_back(g.to_numbering());
        return 1;
    }
    long long n = 0;
    const SkewShape& sh = g.shape;
    for (int r = 1; r <= sh.rows(); ++r) {
        int c = sh.row_begin(r) + 1;
        while (c <= sh.row_end(r) && g.fill[r - 1][c - 1] != 0)
            ++c;
        if (c > sh.row_end(r))
            continue;
        bool left_ok = !g.in_shape(r, c - 1) || g.fill[r - 1][c - 2] != 0;
        bool up_ok = !g.in_shape(r - 1, c) || g.fill[r - 2][c - 1] != 0;
        if (left_ok && up_ok) {
            g.fill[r - 1][c - 1] = next;
            n += standard_rec(g, next + 1, total, out);
            g.fill[r - 1][c - 1] = 0;
        }
    }
    return n;
}

} // namespace

std::vector<Numbering> enumerate_standard(const Partition& shape) {
    SkewShape sh{shape};
    CellGrid g(sh);
    std::vector<Numbering> out;
    standard_rec(g, 1, sh.cell_count(), &out);
    std::sort(out.begin(), out.end(), [](const Numbering& a, const Numbering& b) {
        return reading_word(a) < reading_word(b);
    });
    return out;
}

long long count_standard(const Partition& shape) {
    SkewShape sh{shape};
    CellGrid g(sh);
    return standard_rec(g, 1, sh.cell_count(), nullptr);
}

long long lr_coefficient(const Partition& alpha, const Partition& beta,
                         const Partition& gamma) {
    if (gamma.size() != alpha.size() + beta.size())
        return 0;
    if (!contains(gamma, alpha))
        return 0;
    SkewShape shape(gamma, alpha);
    const int maxval = beta.length();

    // Cells in reading-word order (rows top to bottom, right to left), so the
    // ballot condition can prune every prefix as it is built.
    std::vector<std::pair<int, int>> cells;
    for (int r = 1; r <= shape.rows(); ++r)
        for (int c = shape.row_end(r); c > shape.row_begin(r); --c)
            cells.emplace_back(r, c);

    CellGrid g(shape);
    std::vector<int> cnt(maxval, 0);
    long long total = 0;

    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == cells.size()) {
            ++total;
            return;
        }
        auto [r, c] = cells[idx];
        int lo = 1, hi = maxval;
        if (g.in_shape(r, c + 1))
            hi = std::min(hi, g.fill[r - 1][c]);
        if (g.in_shape(r - 1, c))
            lo = std::max(lo, g.fill[r - 2][c - 1] + 1);
        for (int v = lo; v <= hi; ++v) {
            if (cnt[v - 1] >= beta.part(v))
                continue; // content exhausted for v
            if (v >= 2 && cnt[v - 1] + 1 > cnt[v - 2])
                continue; // ballot violation
            ++cnt[v - 1];
            g.fill[r - 1][c - 1] = v;
            self(self, idx + 1);
            g.fill[r - 1][c - 1] = 0;
            --cnt[v - 1];
        }
    };
    rec(rec, 0);
    return total;
}

} // namespace poslab
